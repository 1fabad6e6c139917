import itertools
import random

from diclique.canon import (
    are_isomorphic,
    automorphism_count,
    canonical_code,
    code_to_tournament,
)
from diclique.core import Tournament, bit
from diclique.construct import TT, C3, Rot, build

from helpers import all_labelled_tournaments, random_tournament_py


def permute(t: Tournament, perm) -> Tournament:
    rows = [0] * t.n
    for u in range(t.n):
        for v in range(t.n):
            if u != v and t.has_arc(u, v):
                rows[perm[u]] |= bit(perm[v])
    return Tournament(t.n, rows, validate=False)


def brute_isomorphic(a: Tournament, b: Tournament) -> bool:
    return any(permute(a, p) == b for p in itertools.permutations(range(a.n)))


def test_three_vertex_codes_collapse_to_two():
    codes = {canonical_code(t) for t in all_labelled_tournaments(3)}
    assert len(codes) == 2
    assert canonical_code(build(TT(3))) != canonical_code(build(C3()))


def test_labelled_copies_share_code():
    c3 = build(C3())
    for p in itertools.permutations(range(3)):
        assert canonical_code(permute(c3, p)) == canonical_code(c3)


def test_code_matches_brute_force_isomorphism_exhaustive():
    for n in range(1, 6):
        ts = list(all_labelled_tournaments(n))
        codes = [canonical_code(t) for t in ts]
        rng = random.Random(n)
        for _ in range(200):
            i, j = rng.randrange(len(ts)), rng.randrange(len(ts))
            assert (codes[i] == codes[j]) == brute_isomorphic(ts[i], ts[j])


def test_code_reconstructs_a_representative():
    rng = random.Random(7)
    for _ in range(50):
        t = random_tournament_py(rng.randint(1, 8), rng)
        rep = code_to_tournament(canonical_code(t))
        assert canonical_code(rep) == canonical_code(t)


def test_large_n_refinement_code_is_isomorphism_invariant():
    rng = random.Random(11)
    for _ in range(30):
        t = random_tournament_py(10, rng)
        perm = list(range(10))
        rng.shuffle(perm)
        assert canonical_code(permute(t, perm)) == canonical_code(t)
        assert are_isomorphic(t, permute(t, perm))


def test_are_isomorphic_negative():
    rng = random.Random(13)
    a = random_tournament_py(9, rng)
    b = random_tournament_py(9, rng)
    if canonical_code(a) != canonical_code(b):
        assert not are_isomorphic(a, b)
    assert not are_isomorphic(build(TT(3)), build(C3()))


def test_automorphism_counts_match_brute_force():
    def brute_aut(t):
        return sum(1 for p in itertools.permutations(range(t.n)) if permute(t, p) == t)

    assert automorphism_count(build(C3())) == 3
    assert automorphism_count(build(TT(6))) == 1
    paley = build(Rot(7, (1, 2, 4)))
    assert automorphism_count(paley) == brute_aut(paley) == 21
    rng = random.Random(17)
    for _ in range(30):
        t = random_tournament_py(rng.randint(1, 6), rng)
        assert automorphism_count(t) == brute_aut(t)
