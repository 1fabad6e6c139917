import itertools
import random

from diclique.core import Graph, Ordering
from diclique.invariants import _backedge_rows_of, chromatic_number, max_clique
from diclique.search import all_tournaments
from diclique.undirected import (
    Budget,
    chromatic_rows,
    clique_search,
    connected_components,
    girth,
    greedy_colouring,
    has_clique,
    is_forest,
    is_star_forest,
    is_tree,
    max_clique_rows,
    max_degree,
    omega_value,
    chi_value,
)

from helpers import chromatic_brute, clique_brute, random_graph

C5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


def complete_graph(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def test_max_clique_examples():
    assert max_clique(Graph.empty(5)).value == 1
    r = max_clique(complete_graph(4))
    assert r.value == 4 and sorted(r.certificate["vertices"]) == [0, 1, 2, 3]
    assert max_clique(C5).value == 2


def test_chromatic_examples():
    assert chromatic_number(C5).value == 3
    bip = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert chromatic_number(bip).value == 2
    assert chromatic_number(Graph.empty(3)).value == 1


def test_against_brute_force():
    rng = random.Random(23)
    for _ in range(120):
        g = random_graph(rng.randint(1, 8), rng.random(), rng)
        assert max_clique(g).value == clique_brute(g)
        assert chromatic_number(g).value == chromatic_brute(g)


def test_chi_can_exceed_omega_on_backedge_corpus():
    # some 7-vertex tournament has an ordering whose backedge graph needs
    # more colours than its clique number (odd holes appear quickly)
    found = None
    for t in all_tournaments(7):
        for perm in itertools.permutations(range(7)):
            rows = tuple(_backedge_rows_of(t.out, perm))
            if chi_value(rows) >= omega_value(rows) + 1:
                found = (t, perm)
                break
        if found:
            break
    assert found is not None


def test_has_clique_threshold():
    assert has_clique(C5.rows, 0b11111, 2)
    assert not has_clique(C5.rows, 0b11111, 3)
    k4 = complete_graph(4)
    assert has_clique(k4.rows, 0b1111, 4)
    assert not has_clique(k4.rows, 0b0111, 4)


def test_budget_gives_bounds():
    # large enough that the search passes the periodic deadline check
    g = random_graph(48, 0.5, random.Random(1))
    r = max_clique(g, time_limit=0.0)
    assert r.status == "bounds" and r.lo <= r.hi
    r = chromatic_number(g, time_limit=0.0)
    assert r.status == "bounds" and r.lo <= r.value


def test_greedy_colouring_proper():
    rng = random.Random(3)
    for _ in range(50):
        g = random_graph(rng.randint(1, 10), 0.5, rng)
        colours = greedy_colouring(g.rows, (1 << g.n) - 1)
        assert all(colours[u] != colours[v] for u, v in g.edges())


def test_structure_predicates():
    path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert is_forest(path.rows, 0b1111) and is_tree(path.rows, 0b1111)
    assert not is_star_forest(path.rows, 0b1111)  # a path on 4 has two centres
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert is_star_forest(star.rows, 0b1111)
    assert not is_forest(C5.rows, 0b11111)
    assert girth(C5.rows, 0b11111) == 5
    assert girth(path.rows, 0b1111) is None
    tri = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0)])
    assert girth(tri.rows, 0b1111) == 3
    assert max_degree(star.rows, 0b1111) == 3
    assert len(connected_components(star.rows, 0b1111)) == 1
    two = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert len(connected_components(two.rows, 0b1111)) == 2
    assert is_star_forest(two.rows, 0b1111)


def test_clique_search_cap_stops_early():
    k6 = complete_graph(6)
    size, mask, completed = clique_search(k6.rows, 0b111111, cap=3)
    assert size == 3 and completed
