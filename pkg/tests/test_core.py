import itertools
import random

import pytest

from diclique.core import (
    Digraph,
    Graph,
    Ordering,
    Tournament,
    backedge_graph,
    is_acyclic,
    reverse,
    reverse_ordering,
    strong_components,
    subset_acyclic,
    topological_order,
    tournament_from_backedge,
    transitive_subset,
)
from diclique.construct import TT, Arrow, C3, TP, build

from helpers import all_labelled_tournaments, random_tournament_py

C3_T = Tournament.from_arcs(3, [(0, 1), (1, 2), (2, 0)])


def test_tournament_validation():
    with pytest.raises(ValueError):
        Tournament(2, [0, 0])  # missing arc
    with pytest.raises(ValueError):
        Tournament(2, [2, 1])  # both directions
    with pytest.raises(ValueError):
        Tournament(1, [1])  # loop
    with pytest.raises(ValueError):
        Tournament(0, [])


def test_digraph_validation():
    Digraph(3, [0b010, 0b100, 0])  # fine: 0->1, 1->2
    with pytest.raises(ValueError):
        Digraph(2, [0b10, 0b01])  # anti-parallel
    with pytest.raises(ValueError):
        Digraph(1, [1])


def test_ordering_validation():
    with pytest.raises(ValueError):
        Ordering([0, 0, 1])
    with pytest.raises(ValueError):
        Ordering([0, 2])
    o = Ordering([2, 0, 1])
    assert o.position(2) == 0 and o.position(1) == 2
    assert list(reverse_ordering(o)) == [1, 0, 2]


def test_backedge_examples():
    bg = backedge_graph(C3_T, Ordering([0, 1, 2]))
    assert bg.graph.edges() == [(0, 2)]
    tt = build(TT(6))
    assert backedge_graph(tt, Ordering.identity(6)).graph.edge_count() == 0
    # reversed-path tournament on 4 vertices under the pair-swapped order
    tp4 = build(TP(4))
    bg = backedge_graph(tp4, Ordering([1, 0, 3, 2]))
    assert bg.graph.edges() == [(1, 2)]
    assert max(bg.graph.degree(v) for v in range(4)) == 1


def test_backedge_round_trip_exhaustive_small():
    for n in range(1, 5):
        for t in all_labelled_tournaments(n):
            for perm in itertools.permutations(range(n)):
                o = Ordering(perm)
                g = backedge_graph(t, o).graph
                assert tournament_from_backedge(g, o) == t


def test_backedge_round_trip_randomized():
    rng = random.Random(12)
    for _ in range(200):
        n = rng.randint(1, 12)
        t = random_tournament_py(n, rng)
        perm = list(range(n))
        rng.shuffle(perm)
        o = Ordering(perm)
        g = backedge_graph(t, o).graph
        assert tournament_from_backedge(g, o) == t


def test_from_backedge_examples():
    o = Ordering([0, 1, 2])
    g = Graph.from_edges(3, [(0, 2)])
    assert tournament_from_backedge(g, o) == C3_T
    empty = Graph.empty(4)
    t = tournament_from_backedge(empty, Ordering([2, 0, 3, 1]))
    assert is_acyclic(t)
    # a 5-cycle as a backedge graph, round-tripped
    c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    o5 = Ordering.identity(5)
    t5 = tournament_from_backedge(c5, o5)
    assert backedge_graph(t5, o5).graph == c5


def test_reverse():
    assert reverse(build(TT(3))).arcs() == [(1, 0), (2, 0), (2, 1)]
    r = reverse(C3_T)
    assert sorted(r.arcs()) == [(0, 2), (1, 0), (2, 1)]
    d = Digraph.from_arcs(3, [(0, 1)])
    assert reverse(d).arcs() == [(1, 0)]


def test_reversal_and_complement_identities_exhaustive():
    # reversing tournament and ordering keeps the backedge graph;
    # reversing the ordering alone complements it
    for n in range(1, 6):
        for t in all_labelled_tournaments(n):
            for perm in itertools.permutations(range(n)):
                o = Ordering(perm)
                g = backedge_graph(t, o).graph
                assert backedge_graph(reverse(t), reverse_ordering(o)).graph == g
                assert backedge_graph(t, reverse_ordering(o)).graph == g.complement()


def test_strong_components_order():
    assert strong_components(build(TT(4))) == [(0,), (1,), (2,), (3,)]
    assert strong_components(C3_T) == [(0, 1, 2)]
    arr = build(Arrow(C3(), C3()))
    assert strong_components(arr) == [(0, 1, 2), (3, 4, 5)]


def test_strong_components_cross_arcs_forward():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(1, 10)
        t = random_tournament_py(n, rng)
        comps = strong_components(t)
        for i, a in enumerate(comps):
            for b in comps[i + 1 :]:
                assert all(t.has_arc(u, v) for u in a for v in b)


def test_subset_helpers():
    assert subset_acyclic(C3_T.out, 0b011)
    assert not subset_acyclic(C3_T.out, 0b111)
    assert transitive_subset(C3_T, 0b101)
    assert not transitive_subset(C3_T, 0b111)
    assert topological_order(build(TT(4))) == [0, 1, 2, 3]
    with pytest.raises(ValueError):
        topological_order(C3_T)


def test_induced_and_delete():
    t = build(TT(5))
    sub = t.induced([1, 3, 4])
    assert sub.arcs() == [(0, 1), (0, 2), (1, 2)]
    assert C3_T.delete(1).arcs() == [(1, 0)]


def test_graph_basics():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert g.edge_count() == 2
    assert g.degree(0) == 1
    assert g.complement().edge_count() == 4
    assert g.induced([0, 1]).edges() == [(0, 1)]
    with pytest.raises(ValueError):
        Graph(2, [1, 0])  # asymmetric
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
