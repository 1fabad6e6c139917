"""Independent certificate checkers.

Every certificate a solver emits re-verifies here by direct definition,
with none of the solver machinery involved; the CLI refuses to print a
certificate that fails its checker.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .core import Graph, Ordering, Tournament, backedge_rows, bit, mask_of, transitive_subset
from .invariants import Dicolouring, check_dicolouring
from .undirected import max_clique_rows


def check_clique(g: Graph, vertices: Sequence[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])


def check_colouring(g: Graph, colours: Mapping[int, int]) -> bool:
    if set(colours) != set(range(g.n)):
        return False
    return all(colours[u] != colours[v] for u, v in g.edges())


def check_dominating(t: Tournament, vertices: Sequence[int]) -> bool:
    covered = 0
    for v in vertices:
        covered |= t.out[v] | bit(v)
    return covered == (1 << t.n) - 1


def check_transitive(t: Tournament, vertices: Sequence[int]) -> bool:
    return transitive_subset(t, mask_of(vertices))


def check_omega_certificate(t: Tournament, ordering: Sequence[int], clique: Sequence[int], value: int) -> bool:
    """The ordering's backedge graph must contain the claimed clique and no
    larger one."""
    try:
        Ordering(ordering)
    except ValueError:
        return False
    if len(ordering) != t.n:
        return False
    rows = backedge_rows(t.out, ordering)
    g = Graph(t.n, rows, validate=False)
    if len(clique) != value or not check_clique(g, clique):
        return False
    return max_clique_rows(rows, (1 << t.n) - 1)[0] == value


def check_result(obj, result) -> bool:
    """Dispatch a solver result to the matching certificate checker."""
    cert = result.certificate
    if isinstance(cert, Dicolouring):
        if not check_dicolouring(obj, cert):
            return False
        return result.status != "exact" or cert.k == result.value
    if not isinstance(cert, dict):
        return False
    kind = cert.get("type")
    if kind == "clique":
        return check_clique(obj, cert["vertices"]) and len(cert["vertices"]) == result.value
    if kind == "colouring":
        colours = cert["colours"]
        return (
            check_colouring(obj, colours)
            and len(set(colours.values())) <= result.value
        )
    if kind == "omega_ordering":
        return check_omega_certificate(obj, cert["ordering"], cert["clique"], result.value)
    if kind == "dominating_set":
        return check_dominating(obj, cert["vertices"]) and len(cert["vertices"]) == result.value
    if kind == "transitive_set":
        return check_transitive(obj, cert["vertices"]) and len(cert["vertices"]) == result.value
    if kind == "independent_set":
        vs = cert["vertices"]
        underlying = obj.underlying_graph()
        pairwise = all(
            not underlying.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :]
        )
        return pairwise and len(vs) == result.value
    if kind == "ordering":
        return len(cert["ordering"]) == obj.n
    return False
