"""Core types: tournaments, digraphs, orderings, backedge graphs.

All adjacency is stored as Python-int bit rows (bit j of row u set means an
arc u->j, or an edge for undirected graphs), so neighbourhood intersections
are single integer operations regardless of vertex count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def bit(i: int) -> int:
    return 1 << i


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


class Graph:
    """Undirected loop-free graph on vertices 0..n-1 with bitmask rows."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int], validate: bool = True):
        self.n = n
        self.rows = tuple(rows)
        if validate:
            full = (1 << n) - 1
            for u in range(n):
                r = self.rows[u]
                if r & ~full or r & bit(u):
                    raise ValueError(f"row {u} has loop or out-of-range bits")
                for v in iter_bits(r):
                    if not self.rows[v] & bit(u):
                        raise ValueError(f"edge {u}-{v} not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("loops not allowed")
            rows[u] |= bit(v)
            rows[v] |= bit(u)
        return cls(n, rows, validate=False)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n, validate=False)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in iter_bits(self.rows[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] & bit(v))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(
            self.n,
            [(~self.rows[u]) & full & ~bit(u) for u in range(self.n)],
            validate=False,
        )

    def induced(self, vertices: Sequence[int]) -> "Graph":
        verts = list(vertices)
        idx = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for i, u in enumerate(verts):
            for v in iter_bits(self.rows[u]):
                if v in idx:
                    rows[i] |= bit(idx[v])
        return Graph(len(verts), rows, validate=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


class Tournament:
    """Orientation of a complete graph: exactly one arc per vertex pair."""

    __slots__ = ("n", "out")

    def __init__(self, n: int, out: Sequence[int], validate: bool = True):
        if n < 1:
            raise ValueError("tournament needs at least one vertex")
        self.n = n
        self.out = tuple(out)
        if validate:
            if len(self.out) != n:
                raise ValueError("row count mismatch")
            full = (1 << n) - 1
            for u in range(n):
                if self.out[u] & ~full or self.out[u] & bit(u):
                    raise ValueError(f"row {u} has loop or out-of-range bits")
            for u in range(n):
                for v in range(u + 1, n):
                    if ((self.out[u] >> v) & 1) == ((self.out[v] >> u) & 1):
                        raise ValueError(f"pair {{{u},{v}}} needs exactly one arc")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Tournament":
        rows = [0] * n
        for u, v in arcs:
            rows[u] |= bit(v)
        return cls(n, rows)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] & bit(v))

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.out[u])]

    def arc_count(self) -> int:
        return self.n * (self.n - 1) // 2

    def out_degree(self, v: int) -> int:
        return self.out[v].bit_count()

    def in_mask(self, v: int) -> int:
        full = (1 << self.n) - 1
        return full & ~self.out[v] & ~bit(v)

    def induced(self, vertices: Sequence[int]) -> "Tournament":
        verts = list(vertices)
        idx = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for i, u in enumerate(verts):
            for v in iter_bits(self.out[u]):
                if v in idx:
                    rows[i] |= bit(idx[v])
        return Tournament(len(verts), rows, validate=False)

    def delete(self, v: int) -> "Tournament":
        return self.induced([u for u in range(self.n) if u != v])

    def underlying_graph(self) -> Graph:
        return Graph(
            self.n,
            [self.out[u] | self.in_mask(u) for u in range(self.n)],
            validate=False,
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tournament) and self.n == other.n and self.out == other.out
        )

    def __hash__(self) -> int:
        return hash((self.n, self.out))

    def __repr__(self) -> str:
        return f"Tournament(n={self.n}, arcs={self.arcs()})"


class Digraph:
    """Loop-free digraph without anti-parallel arc pairs (no 2-cycles)."""

    __slots__ = ("n", "out")

    def __init__(self, n: int, out: Sequence[int], validate: bool = True):
        if n < 0:
            raise ValueError("negative vertex count")
        self.n = n
        self.out = tuple(out)
        if validate:
            if len(self.out) != n:
                raise ValueError("row count mismatch")
            full = (1 << n) - 1
            for u in range(n):
                if self.out[u] & ~full or self.out[u] & bit(u):
                    raise ValueError(f"row {u} has loop or out-of-range bits")
                for v in iter_bits(self.out[u]):
                    if self.out[v] & bit(u):
                        raise ValueError(f"anti-parallel pair {u}<->{v}")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        rows = [0] * n
        for u, v in arcs:
            rows[u] |= bit(v)
        return cls(n, rows)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] & bit(v))

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.out[u])]

    def induced(self, vertices: Sequence[int]) -> "Digraph":
        verts = list(vertices)
        idx = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for i, u in enumerate(verts):
            for v in iter_bits(self.out[u]):
                if v in idx:
                    rows[i] |= bit(idx[v])
        return Digraph(len(verts), rows, validate=False)

    def underlying_graph(self) -> Graph:
        rows = [0] * self.n
        for u in range(self.n):
            for v in iter_bits(self.out[u]):
                rows[u] |= bit(v)
                rows[v] |= bit(u)
        return Graph(self.n, rows, validate=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, Digraph) and self.n == other.n and self.out == other.out

    def __hash__(self) -> int:
        return hash((self.n, self.out))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arcs()})"


class Ordering:
    """A total order on vertices: perm maps position -> vertex."""

    __slots__ = ("perm", "pos")

    def __init__(self, perm: Sequence[int]):
        self.perm = tuple(perm)
        n = len(self.perm)
        pos = [-1] * n
        for i, v in enumerate(self.perm):
            if not 0 <= v < n or pos[v] != -1:
                raise ValueError("not a permutation of 0..n-1")
            pos[v] = i
        self.pos = tuple(pos)

    @classmethod
    def identity(cls, n: int) -> "Ordering":
        return cls(range(n))

    @property
    def n(self) -> int:
        return len(self.perm)

    def position(self, v: int) -> int:
        return self.pos[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self.perm)

    def __len__(self) -> int:
        return len(self.perm)

    def __eq__(self, other) -> bool:
        return isinstance(other, Ordering) and self.perm == other.perm

    def __hash__(self) -> int:
        return hash(self.perm)

    def __repr__(self) -> str:
        return f"Ordering({list(self.perm)})"


@dataclass(frozen=True)
class BackedgeGraph:
    """The undirected graph of backward arcs, with the ordering that made it."""

    graph: Graph
    ordering: Ordering


def backedge_rows(out: Sequence[int], perm: Sequence[int]) -> list[int]:
    """Bit rows of the backedge graph of arc rows `out` under `perm`."""
    rows = [0] * len(out)
    placed = 0
    for v in perm:
        nb = out[v] & placed  # arcs from v back to already-placed vertices
        rows[v] |= nb
        b = bit(v)
        for u in iter_bits(nb):
            rows[u] |= b
        placed |= b
    return rows


def backedge_graph(d, ordering: Ordering) -> BackedgeGraph:
    """Backedge graph of a tournament or digraph with respect to an ordering."""
    if d.n != ordering.n:
        raise ValueError("ordering size does not match vertex count")
    rows = backedge_rows(d.out, ordering.perm)
    return BackedgeGraph(Graph(d.n, rows, validate=False), ordering)


def tournament_from_backedge(g: Graph, ordering: Ordering) -> Tournament:
    """The unique tournament whose backedge graph under `ordering` equals `g`.

    Edges of g are oriented from the later vertex back to the earlier one;
    non-edges become forward arcs.
    """
    if g.n != ordering.n:
        raise ValueError("ordering size does not match vertex count")
    n = g.n
    rows = [0] * n
    for i in range(n):
        u = ordering.perm[i]
        for j in range(i + 1, n):
            v = ordering.perm[j]
            if g.has_edge(u, v):
                rows[v] |= bit(u)
            else:
                rows[u] |= bit(v)
    return Tournament(n, rows, validate=False)


def reverse(d):
    """Reverse every arc.  Works for tournaments and digraphs."""
    n = d.n
    rows = [0] * n
    for u in range(n):
        for v in iter_bits(d.out[u]):
            rows[v] |= bit(u)
    return type(d)(n, rows, validate=False)


def reverse_ordering(ordering: Ordering) -> Ordering:
    return Ordering(reversed(ordering.perm))


def strong_components(d) -> list[tuple[int, ...]]:
    """Strongly connected components in topological order of the condensation.

    Every arc between two distinct components goes from an earlier component
    to a later one; for tournaments this order is the unique linear order.
    """
    n = d.n
    out = d.out
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[tuple[int, ...]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        # Iterative Tarjan; work items are (vertex, iterator over successors).
        work = [(root, iter(bits_list(out[root])))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(bits_list(out[w]))))
                    advanced = True
                    break
                elif on_stack[w]:
                    if index[w] < low[v]:
                        low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(tuple(sorted(comp)))
    # Tarjan emits components in reverse topological order of the condensation.
    comps.reverse()
    return comps


def is_acyclic(d) -> bool:
    """True when the digraph or tournament induces no directed cycle."""
    return all(len(c) == 1 for c in strong_components(d))


def subset_acyclic(out: Sequence[int], mask: int) -> bool:
    """Acyclicity of the sub-digraph induced on the vertices of `mask`.

    Kahn-style elimination of sources; works for tournament rows too.
    """
    remaining = mask
    while remaining:
        progressed = False
        for v in iter_bits(remaining):
            # v is a source in the remaining part if nothing there beats it
            has_in = False
            for u in iter_bits(remaining & ~bit(v)):
                if out[u] & bit(v):
                    has_in = True
                    break
            if not has_in:
                remaining &= ~bit(v)
                progressed = True
                break
        if not progressed:
            return False
    return True


def transitive_subset(t: Tournament, mask: int) -> bool:
    """True when the tournament's vertices in `mask` induce a transitive
    (acyclic) subtournament.  Tournament fast path: no directed triangle."""
    out = t.out
    for v in iter_bits(mask):
        beats = out[v] & mask
        losers = mask & ~out[v] & ~bit(v)
        for x in iter_bits(beats):
            if out[x] & losers:
                return False
    return True


def topological_order(d, mask: int | None = None) -> list[int]:
    """A topological order of the vertices in `mask` (all vertices if None).

    Raises ValueError if the induced sub-digraph has a directed cycle.
    Deterministic: among available sources the smallest index is taken.
    """
    out = d.out
    remaining = (1 << d.n) - 1 if mask is None else mask
    order = []
    while remaining:
        src = -1
        for v in iter_bits(remaining):
            has_in = False
            for u in iter_bits(remaining & ~bit(v)):
                if out[u] & bit(v):
                    has_in = True
                    break
            if not has_in:
                src = v
                break
        if src == -1:
            raise ValueError("directed cycle: no topological order")
        order.append(src)
        remaining &= ~bit(src)
    return order
