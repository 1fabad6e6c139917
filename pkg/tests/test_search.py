import math

import pytest

from diclique.canon import automorphism_count, canonical_code
from diclique.core import Tournament
from diclique.construct import TT, C3, STilde, build
from diclique.invariants import clique_number
from diclique.search import (
    PredicateError,
    all_tournaments,
    count_tournaments,
    enumerate_tournaments,
    find_omega_critical,
    min_subtournament_with_omega,
    parse_predicate,
    predicate_scan,
    random_tournament,
)
from diclique.structure import hero_family

from helpers import all_labelled_tournaments

KNOWN_COUNTS = {1: 1, 2: 1, 3: 2, 4: 4, 5: 12, 6: 56, 7: 456}


def test_counts_up_to_six():
    for n in range(1, 7):
        assert count_tournaments(n) == KNOWN_COUNTS[n]


@pytest.mark.slow
def test_count_seven():
    assert count_tournaments(7) == KNOWN_COUNTS[7]


def test_enumeration_matches_brute_force():
    for n in range(1, 6):
        enum_codes = {canonical_code(t) for t in enumerate_tournaments(n)}
        brute_codes = {canonical_code(t) for t in all_labelled_tournaments(n)}
        assert enum_codes == brute_codes
        assert len(enum_codes) == count_tournaments(n)


def test_enumeration_is_deterministic():
    first = [canonical_code(t) for t in enumerate_tournaments(5)]
    second = [canonical_code(t) for t in enumerate_tournaments(5)]
    assert first == second


def test_labelled_count_identity():
    # sum over classes of n!/|Aut| equals the number of labelled tournaments
    for n in range(1, 7):
        total = sum(
            math.factorial(n) // automorphism_count(t) for t in all_tournaments(n)
        )
        assert total == 2 ** (n * (n - 1) // 2)


@pytest.mark.slow
def test_labelled_count_identity_seven():
    total = sum(math.factorial(7) // automorphism_count(t) for t in all_tournaments(7))
    assert total == 2**21


def test_random_tournament_reproducible():
    assert random_tournament(5, 123) == random_tournament(5, 123)
    assert random_tournament(5, 123) != random_tournament(5, 124)
    assert random_tournament(1, 9) == Tournament(1, [0])


def test_random_tournament_balance():
    # arc direction over 10^4 seeded draws is a fair coin within 3 sigma
    hits = sum(random_tournament(2, seed).has_arc(0, 1) for seed in range(10_000))
    assert abs(hits - 5000) <= 3 * 50


def test_criticality_small():
    scan = find_omega_critical(1, range(1, 7))
    assert scan.complete
    assert [r.tournament.n for r in scan.reports] == [1]
    scan = find_omega_critical(2, range(1, 7))
    assert scan.complete
    assert len(scan.reports) == 1
    report = scan.reports[0]
    assert canonical_code(report.tournament) == canonical_code(build(C3()))
    assert report.vertex_deletions == (1, 1, 1)
    with pytest.raises(ValueError):
        find_omega_critical(0, range(1, 3))


def test_criticality_reports_self_verify():
    scan = find_omega_critical(2, range(1, 7))
    for report in scan.reports:
        t = report.tournament
        assert clique_number(t).value == report.k == report.omega
        for v in range(t.n):
            assert clique_number(t.delete(v)).value == report.vertex_deletions[v]
        assert report.is_critical


def test_min_subtournament():
    st3 = build(STilde(3))
    r = min_subtournament_with_omega(st3, 2, 3)
    assert r.status == "found" and len(r.vertices) == 3
    sub = st3.induced(r.vertices)
    assert clique_number(sub).value >= 2
    assert min_subtournament_with_omega(build(TT(10)), 2, 10).status == "none"
    r = min_subtournament_with_omega(st3, 3, 9)
    assert r.status == "found"


def test_predicate_parsing():
    tree, names = parse_predicate("dom<=omega && omega<=chi")
    assert names == {"dom", "omega", "chi"}
    parse_predicate("chi <= omega**2")
    with pytest.raises(PredicateError):
        parse_predicate("__import__('os')")
    with pytest.raises(PredicateError):
        parse_predicate("unknown_name > 2")
    with pytest.raises(PredicateError):
        parse_predicate("omega +")


def test_scan_chain_small():
    report = predicate_scan(range(1, 6), "dom<=omega && omega<=chi")
    counts = report.counts()
    assert counts == {"scanned": 20, "holds": 20, "violations": 0}
    assert report.complete


def test_scan_hero_count_matches_grammar():
    family = hero_family(6)
    expected = sum(len(v) for v in family.values())
    report = predicate_scan(range(1, 7), "is_hero")
    assert report.counts()["holds"] == expected


def test_scan_csv_reproducible(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    predicate_scan(range(1, 6), "dom<=omega", csv_path=str(a))
    predicate_scan(range(1, 6), "dom<=omega", csv_path=str(b))
    assert a.read_bytes() == b.read_bytes()
    header = a.read_text().splitlines()[0]
    assert header == "canonical_code,n,dom,omega,result,witness"


def test_scan_multiworker_matches_single(tmp_path):
    a, b = tmp_path / "one.csv", tmp_path / "two.csv"
    predicate_scan(range(1, 6), "trans >= 1", csv_path=str(a), threads=1)
    predicate_scan(range(1, 6), "trans >= 1", csv_path=str(b), threads=2)
    assert a.read_bytes() == b.read_bytes()


def test_scan_checkpoint_resume(tmp_path):
    csv = tmp_path / "scan.csv"
    ck = tmp_path / "scan.ck"
    full = predicate_scan(range(1, 6), "alpha == 1", csv_path=str(csv), checkpoint_path=str(ck))
    assert full.complete
    # resuming a finished scan adds nothing and keeps the CSV intact
    before = csv.read_bytes()
    again = predicate_scan(
        range(1, 6), "alpha == 1", csv_path=str(csv), checkpoint_path=str(ck), resume=True
    )
    assert again.complete and csv.read_bytes() == before
    assert len(again.rows) == 0  # everything was already done
