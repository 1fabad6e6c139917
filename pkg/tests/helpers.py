"""Shared test utilities: seeded generators and brute-force oracles.

The oracles here deliberately re-derive values by direct definition
(enumeration over subsets, orderings, colourings) so the solvers are
checked against something that shares none of their machinery.
"""

from __future__ import annotations

import itertools
import random

from diclique.core import Graph, Tournament, bit, subset_acyclic


def random_tournament_py(n: int, rng: random.Random) -> Tournament:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.5:
                rows[u] |= bit(v)
            else:
                rows[v] |= bit(u)
    return Tournament(n, rows, validate=False)


def all_labelled_tournaments(n: int):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in range(1 << len(pairs)):
        rows = [0] * n
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                rows[i] |= bit(j)
            else:
                rows[j] |= bit(i)
        yield Tournament(n, rows, validate=False)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# brute-force oracles


def clique_brute(g: Graph) -> int:
    best = 0
    for r in range(g.n, 0, -1):
        for combo in itertools.combinations(range(g.n), r):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                return r
    return best


def chromatic_brute(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for assign in itertools.product(range(k), repeat=g.n):
            if all(assign[u] != assign[v] for u, v in g.edges()):
                return k
    raise AssertionError


def trans_brute(t: Tournament) -> int:
    for r in range(t.n, 0, -1):
        for combo in itertools.combinations(range(t.n), r):
            m = 0
            for v in combo:
                m |= bit(v)
            if subset_acyclic(t.out, m):
                return r
    return 0


def dom_brute(t: Tournament) -> int:
    full = (1 << t.n) - 1
    for r in range(1, t.n + 1):
        for combo in itertools.combinations(range(t.n), r):
            covered = 0
            for v in combo:
                covered |= t.out[v] | bit(v)
            if covered == full:
                return r
    raise AssertionError


def dichromatic_brute(d) -> int:
    if d.n == 0:
        return 0
    for k in range(1, d.n + 1):
        for assign in itertools.product(range(k), repeat=d.n):
            masks = [0] * k
            for v, c in enumerate(assign):
                masks[c] |= bit(v)
            if all(subset_acyclic(d.out, m) for m in masks if m):
                return k
    raise AssertionError
