"""Structure recognition and constructive orderings.

Hero recognition follows the generating grammar directly: a single vertex,
an Arrow of two heroes, or a cyclic triple of a vertex, a transitive part
and a smaller hero.  The constructive orderings implement the proofs that
go with the grammar: star-forest backedge orderings for heroes, forest to
tree repair by adjacent swaps, the matching ordering of the reversed-path
tournament, and binary-search-tree orderings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .construct import TT, Arrow, C3, Delta, Expr, Raw, S, STilde, Subst, build
from .core import (
    Ordering,
    Tournament,
    bit,
    bits_list,
    iter_bits,
    mask_of,
    strong_components,
    transitive_subset,
)
from .invariants import (
    Budget,
    Dicolouring,
    _backedge_rows_of,
    _topological_of_subset,
    clique_number,
)
from .rng import SplitMix64
from .undirected import (
    connected_components,
    girth,
    has_clique,
    is_forest,
    is_star_forest,
    max_clique_rows,
    max_degree,
)

# ---------------------------------------------------------------------------
# hero certificates


@dataclass(frozen=True)
class HeroLeaf:
    vertex: int

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.vertex,)


@dataclass(frozen=True)
class HeroArrow:
    left: "HeroNode"
    right: "HeroNode"

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.left.vertices + self.right.vertices


@dataclass(frozen=True)
class HeroDelta:
    """Cyclic triple apex -> transitive part -> child -> apex.

    tt_position is "middle" when the transitive part is beaten by the apex
    (apex => tt => child => apex) and "last" for the mirrored pattern
    (apex => child => tt => apex).  tt lists its vertices in topological
    order.
    """

    apex: int
    tt: tuple[int, ...]
    child: "HeroNode"
    tt_position: str

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.apex,) + self.tt + self.child.vertices


HeroNode = HeroLeaf | HeroArrow | HeroDelta


def _remap(node: HeroNode, table: Sequence[int]) -> HeroNode:
    if isinstance(node, HeroLeaf):
        return HeroLeaf(table[node.vertex])
    if isinstance(node, HeroArrow):
        return HeroArrow(_remap(node.left, table), _remap(node.right, table))
    return HeroDelta(
        table[node.apex],
        tuple(table[v] for v in node.tt),
        _remap(node.child, table),
        node.tt_position,
    )


def _all_arcs_between(t: Tournament, src: Sequence[int], dst: Sequence[int]) -> bool:
    dst_mask = mask_of(dst)
    return all(t.out[u] & dst_mask == dst_mask for u in src)


def verify_hero_certificate(t: Tournament, node: HeroNode) -> bool:
    """Check that the decomposition tree matches the arc pattern it claims."""
    verts = node.vertices
    if sorted(verts) != list(range(t.n)):
        return False

    def ok(node: HeroNode) -> bool:
        if isinstance(node, HeroLeaf):
            return True
        if isinstance(node, HeroArrow):
            return (
                _all_arcs_between(t, node.left.vertices, node.right.vertices)
                and ok(node.left)
                and ok(node.right)
            )
        tt = node.tt
        for i in range(len(tt)):
            for j in range(i + 1, len(tt)):
                if not t.has_arc(tt[i], tt[j]):
                    return False
        child = node.child.vertices
        apex = [node.apex]
        if node.tt_position == "middle":
            pattern = (
                _all_arcs_between(t, apex, tt)
                and _all_arcs_between(t, tt, child)
                and _all_arcs_between(t, child, apex)
            )
        elif node.tt_position == "last":
            pattern = (
                _all_arcs_between(t, apex, child)
                and _all_arcs_between(t, child, tt)
                and _all_arcs_between(t, tt, apex)
            )
        else:
            return False
        return pattern and ok(node.child)

    return ok(node)


# ---------------------------------------------------------------------------
# cyclic tripartitions


def cyclic_tripartitions(t: Tournament) -> list[tuple[tuple[int, ...], ...]]:
    """All partitions (A,B,C) with A => B => C => A, A holding vertex 0.

    Fixing vertex 0's part kills the rotational symmetry, so each cyclic
    class is reported once.  Backtracking assigns parts with constraint
    propagation: an arc u->v forbids exactly part(u) == part(v) + 1 mod 3.
    """
    n = t.n
    if n < 3 or len(strong_components(t)) != 1:
        return []
    parts = [-1] * n
    parts[0] = 0
    found: list[tuple[tuple[int, ...], ...]] = []

    def narrowed(v: int, u: int) -> int:
        """Candidate parts of v consistent with assigned vertex u."""
        mask = 0
        pu = parts[u]
        for p in range(3):
            if p == pu:
                mask |= 1 << p
            elif p == (pu + 1) % 3:
                if t.has_arc(u, v):
                    mask |= 1 << p
            elif t.has_arc(v, u):
                mask |= 1 << p
        return mask

    def assign(unassigned: int) -> None:
        if unassigned == 0:
            groups: list[list[int]] = [[], [], []]
            for v in range(n):
                groups[parts[v]].append(v)
            if all(groups):
                found.append(tuple(tuple(g) for g in groups))
            return
        # most-constrained unassigned vertex, ties by index
        pick = -1
        pick_opts = 4
        pick_mask = 0
        for v in range(n):
            if parts[v] != -1:
                continue
            m = 7
            for u in range(n):
                if parts[u] != -1:
                    m &= narrowed(v, u)
                    if not m:
                        break
            opts = m.bit_count()
            if opts == 0:
                return
            if opts < pick_opts:
                pick, pick_opts, pick_mask = v, opts, m
                if opts == 1:
                    break
        for p in range(3):
            if pick_mask >> p & 1:
                parts[pick] = p
                assign(unassigned - 1)
                parts[pick] = -1

    assign(n - 1)
    return found


# ---------------------------------------------------------------------------
# hero recognition


def is_hero(t: Tournament) -> tuple[bool, HeroNode | None]:
    """Decide membership in the hero grammar and return the parse tree.

    A tournament qualifies iff it is a single vertex, an Arrow of two
    heroes (handled through the condensation), or a cyclic triple of a
    single vertex, a transitive part, and a smaller hero.
    """
    if t.n == 1:
        return True, HeroLeaf(0)
    comps = strong_components(t)
    if len(comps) > 1:
        left = list(comps[0])
        right = [v for comp in comps[1:] for v in comp]
        ok_l, cert_l = is_hero(t.induced(left))
        if not ok_l:
            return False, None
        ok_r, cert_r = is_hero(t.induced(right))
        if not ok_r:
            return False, None
        assert cert_l is not None and cert_r is not None
        return True, HeroArrow(_remap(cert_l, left), _remap(cert_r, right))
    if t.n < 3:
        return False, None
    for tri in cyclic_tripartitions(t):
        for r in range(3):
            apex_part = tri[r]
            if len(apex_part) != 1:
                continue
            apex = apex_part[0]
            mid = list(tri[(r + 1) % 3])  # apex => mid
            last = list(tri[(r + 2) % 3])  # mid => last => apex
            if transitive_subset(t, mask_of(mid)):
                ok, cert = is_hero(t.induced(last))
                if ok:
                    assert cert is not None
                    tt = _topological_of_subset(t.out, mask_of(mid))
                    return True, HeroDelta(apex, tuple(tt), _remap(cert, last), "middle")
            if transitive_subset(t, mask_of(last)):
                ok, cert = is_hero(t.induced(mid))
                if ok:
                    assert cert is not None
                    tt = _topological_of_subset(t.out, mask_of(last))
                    return True, HeroDelta(apex, tuple(tt), _remap(cert, mid), "last")
    return False, None


def is_gentleman(t: Tournament) -> bool:
    """Alias for hero membership: forbidding a tournament bounds the
    ordering clique number exactly when it bounds the dichromatic number."""
    return is_hero(t)[0]


def hero_family(max_n: int) -> dict[int, list[tuple[Tournament, HeroNode]]]:
    """All heroes up to max_n vertices, one per isomorphism class, each with
    the construction tree that generated it.  Built as the grammar closure
    with canonical deduplication."""
    from .canon import canonical_code

    by_size: dict[int, list[tuple[Tournament, HeroNode]]] = {
        1: [(build(TT(1)), HeroLeaf(0))]
    }
    seen: set[bytes] = {canonical_code(build(TT(1)))}
    for n in range(2, max_n + 1):
        level: list[tuple[Tournament, HeroNode]] = []

        def consider(t: Tournament, cert: HeroNode) -> None:
            code = canonical_code(t)
            if code not in seen:
                seen.add(code)
                level.append((t, cert))

        for a in range(1, n):
            for t1, c1 in by_size.get(a, []):
                for t2, c2 in by_size.get(n - a, []):
                    t = build(Arrow(Raw(t1), Raw(t2)))
                    shift = [v + a for v in range(n - a)]
                    consider(t, HeroArrow(c1, _remap(c2, shift)))
        for k in range(1, n - 1):
            child_size = n - 1 - k
            for th, ch in by_size.get(child_size, []):
                # apex first, then the transitive part, then the child
                t_mid = build(Delta(TT(1), TT(k), Raw(th)))
                cert_mid = HeroDelta(
                    0,
                    tuple(range(1, k + 1)),
                    _remap(ch, [v + 1 + k for v in range(child_size)]),
                    "middle",
                )
                consider(t_mid, cert_mid)
                t_last = build(Delta(TT(1), Raw(th), TT(k)))
                cert_last = HeroDelta(
                    0,
                    tuple(range(1 + child_size, n)),
                    _remap(ch, [v + 1 for v in range(child_size)]),
                    "last",
                )
                consider(t_last, cert_last)
        by_size[n] = level
    return by_size


# ---------------------------------------------------------------------------
# constructive orderings


def star_forest_ordering(t: Tournament, cert: HeroNode) -> Ordering:
    """Ordering whose backedge graph is a disjoint union of stars.

    Arrow parts concatenate; a cyclic triple places the transitive part so
    its arcs point forward and parks the apex on the far side, so the only
    backedges run from the apex to the transitive part (one star).
    """
    if not verify_hero_certificate(t, cert):
        raise ValueError("certificate does not match the tournament")

    def emit(node: HeroNode) -> list[int]:
        if isinstance(node, HeroLeaf):
            return [node.vertex]
        if isinstance(node, HeroArrow):
            return emit(node.left) + emit(node.right)
        if node.tt_position == "middle":
            return list(node.tt) + emit(node.child) + [node.apex]
        return [node.apex] + emit(node.child) + list(node.tt)

    return Ordering(emit(cert))


def tp_matching_ordering(n: int) -> Ordering:
    """Pairwise-swapped ordering of the reversed-path tournament: every
    consecutive pair (2i, 2i+1) is listed as 2i+1 first, odd tail last;
    its backedge graph is a matching."""
    if n < 1:
        raise ValueError("need at least one vertex")
    perm: list[int] = []
    for i in range(0, n - 1, 2):
        perm.extend([i + 1, i])
    if n % 2:
        perm.append(n - 1)
    return Ordering(perm)


def forest_to_tree(t: Tournament, ordering: Ordering) -> Ordering:
    """Turn a forest backedge ordering into a tree backedge ordering.

    While the backedge graph is disconnected, swapping the first vertex of
    a foreign component with its predecessor adds exactly the edge between
    them, merging two components; each swap lowers the component count by
    one.
    """
    rows = _backedge_rows_of(t.out, ordering.perm)
    full = (1 << t.n) - 1
    if not is_forest(rows, full):
        raise ValueError("backedge graph of the given ordering is not a forest")
    perm = list(ordering.perm)
    while True:
        rows = _backedge_rows_of(t.out, perm)
        comps = connected_components(rows, full)
        if len(comps) == 1:
            return Ordering(perm)
        first_comp = next(c for c in comps if c & bit(perm[0]))
        pos = next(i for i, v in enumerate(perm) if not first_comp & bit(v))
        perm[pos - 1], perm[pos] = perm[pos], perm[pos - 1]


# ---------------------------------------------------------------------------
# predicate-driven ordering search


@dataclass(frozen=True)
class OrderingPredicate:
    """Hereditary requirement on backedge graphs, safe for prefix pruning."""

    kind: str  # forest | max_degree_le | clique_le | girth_ge | star_forest
    bound: int | None = None

    def holds(self, rows: Sequence[int], mask: int) -> bool:
        if self.kind == "forest":
            return is_forest(rows, mask)
        if self.kind == "max_degree_le":
            return max_degree(rows, mask) <= (self.bound or 0)
        if self.kind == "clique_le":
            return not has_clique(rows, mask, (self.bound or 0) + 1)
        if self.kind == "girth_ge":
            g = girth(rows, mask)
            return g is None or g >= (self.bound or 3)
        if self.kind == "star_forest":
            return is_star_forest(rows, mask)
        raise ValueError(f"unknown predicate kind {self.kind!r}")

    def describe(self) -> str:
        return self.kind if self.bound is None else f"{self.kind}({self.bound})"


FOREST = OrderingPredicate("forest")
MATCHING = OrderingPredicate("max_degree_le", 1)
STAR_FOREST = OrderingPredicate("star_forest")


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # found | none | timeout
    ordering: Ordering | None
    nodes: int = 0


def ordering_search(
    t,
    predicate: OrderingPredicate,
    time_limit: float | None = None,
    node_limit: int | None = None,
) -> SearchOutcome:
    """Find an ordering whose backedge graph satisfies the predicate.

    The predicate kinds are hereditary on induced subgraphs and the backedge
    graph on a placed prefix is final, so a violated prefix prunes all its
    completions; exhausting the tree proves that no ordering works.
    """
    n = t.n
    out = t.out
    full = (1 << n) - 1
    budget = Budget(time_limit, node_limit)
    rows = [0] * n
    prefix: list[int] = []
    state = {"timeout": False}

    def dfs(placed: int) -> Ordering | None:
        if budget.spent():
            state["timeout"] = True
            return None
        if placed == full:
            return Ordering(prefix)
        for v in iter_bits(full & ~placed):
            nb = out[v] & placed
            b = bit(v)
            rows[v] |= nb
            for u in iter_bits(nb):
                rows[u] |= b
            prefix.append(v)
            got = None
            if predicate.holds(rows, placed | b):
                got = dfs(placed | b)
            prefix.pop()
            rows[v] &= ~nb
            for u in iter_bits(nb):
                rows[u] &= ~b
            if got is not None or state["timeout"]:
                return got
        return None

    found = dfs(0)
    if found is not None:
        return SearchOutcome("found", found, budget.nodes)
    if state["timeout"]:
        return SearchOutcome("timeout", None, budget.nodes)
    return SearchOutcome("none", None, budget.nodes)


# ---------------------------------------------------------------------------
# binary-search-tree orderings


def bst_tree(t: Tournament, insertion: Sequence[int]) -> tuple[int, list[int], list[int]]:
    """Insert vertices in sequence: descend left at nodes the new vertex
    beats, right at nodes that beat it.  Returns (root, left[], right[])."""
    if sorted(insertion) != list(range(t.n)):
        raise ValueError("insertion sequence must be a permutation of the vertices")
    left = [-1] * t.n
    right = [-1] * t.n
    root = insertion[0]
    for w in insertion[1:]:
        cur = root
        while True:
            if t.has_arc(w, cur):
                if left[cur] == -1:
                    left[cur] = w
                    break
                cur = left[cur]
            else:
                if right[cur] == -1:
                    right[cur] = w
                    break
                cur = right[cur]
    return root, left, right


def bst_in_order(root: int, left: list[int], right: list[int]) -> list[int]:
    order: list[int] = []
    stack: list[tuple[int, bool]] = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if node == -1:
            continue
        if expanded:
            order.append(node)
        else:
            stack.append((right[node], False))
            stack.append((node, True))
            stack.append((left[node], False))
    return order


def check_bst_property(
    t: Tournament, root: int, left: list[int], right: list[int]
) -> bool:
    """Every left descendant beats its ancestor, every right one loses."""

    def subtree(v: int) -> int:
        if v == -1:
            return 0
        return bit(v) | subtree(left[v]) | subtree(right[v])

    for x in range(t.n):
        for y in iter_bits(subtree(left[x]) if left[x] != -1 else 0):
            if not t.has_arc(y, x):
                return False
        for y in iter_bits(subtree(right[x]) if right[x] != -1 else 0):
            if not t.has_arc(x, y):
                return False
    return True


def bst_ordering(t: Tournament, insertion: Sequence[int]) -> Ordering:
    """Left-to-right order of the search tree built by the insertions."""
    root, left, right = bst_tree(t, insertion)
    return Ordering(bst_in_order(root, left, right))


@dataclass(frozen=True)
class BstProbeResult:
    n: int
    best_bst_clique: int
    exact_clique: int
    orderings_tried: int
    best_ordering: Ordering
    exhaustive: bool


def bst_omega_probe(t: Tournament, samples: int = 200, seed: int = 0) -> BstProbeResult:
    """Best backedge clique number over BST orderings versus the true optimum.

    Exhausts all insertion sequences for n <= 7, otherwise samples them
    with the named deterministic generator.
    """
    n = t.n
    full = (1 << n) - 1
    exhaustive = n <= 7
    seen: set[tuple[int, ...]] = set()
    best = None
    best_ord: Ordering | None = None
    tried = 0
    if exhaustive:
        sequences = itertools.permutations(range(n))
    else:
        gen = SplitMix64(seed)

        def sample():
            for _ in range(samples):
                items = list(range(n))
                gen.shuffle(items)
                yield tuple(items)

        sequences = sample()
    for seq in sequences:
        ordering = bst_ordering(t, seq)
        if ordering.perm in seen:
            continue
        seen.add(ordering.perm)
        tried += 1
        rows = _backedge_rows_of(t.out, ordering.perm)
        cap = best  # no need to measure beyond the incumbent
        value = max_clique_rows(rows, full, cap=cap)[0]
        if best is None or value < best:
            best = value
            best_ord = ordering
            if best == 1:
                break
    exact = clique_number(t).value
    assert best is not None and best_ord is not None
    return BstProbeResult(n, best, exact, tried, best_ord, exhaustive)


# ---------------------------------------------------------------------------
# palette-reuse dicolouring of substitution-built tournaments


class SubstitutionBaseError(ValueError):
    pass


def _palette(expr: Expr) -> tuple[list[int], int]:
    """Colour list (in layout order) and palette size for a base-class
    expression.

    Arrow shares one palette across both sides (no directed cycle crosses a
    one-way cut); Delta shares a palette between the first two parts and
    pays fresh colours for the third (a cross cycle would have to visit all
    three parts); Subst multiplies a palette per base colour class.
    """
    if isinstance(expr, TT):
        return [0] * expr.k, 1
    if isinstance(expr, C3):
        return [0, 0, 1], 2
    if isinstance(expr, S):
        if expr.n == 1:
            return [0], 1
        return _palette(Delta(TT(1), S(expr.n - 1), S(expr.n - 1)))
    if isinstance(expr, STilde):
        if expr.n == 1:
            return [0], 1
        inner = STilde(expr.n - 1)
        return _palette(Delta(inner, inner, inner))
    if isinstance(expr, Arrow):
        ca, ka = _palette(expr.a)
        cb, kb = _palette(expr.b)
        return ca + cb, max(ka, kb)
    if isinstance(expr, Delta):
        ca, ka = _palette(expr.a)
        cb, kb = _palette(expr.b)
        cc, kc = _palette(expr.c)
        shared = max(ka, kb)
        return ca + cb + [c + shared for c in cc], shared + kc
    if isinstance(expr, Subst):
        cbase, kbase = _palette(expr.base)
        blocks = dict(expr.mapping)
        missing = [v for v in range(len(cbase)) if v not in blocks]
        if missing:
            raise SubstitutionBaseError(f"Subst map misses base vertices {missing}")
        parts = [_palette(blocks[v]) for v in range(len(cbase))]
        width = [0] * kbase
        for v, (_, kv) in enumerate(parts):
            width[cbase[v]] = max(width[cbase[v]], kv)
        offsets = [0] * kbase
        acc = 0
        for g in range(kbase):
            offsets[g] = acc
            acc += width[g]
        colours: list[int] = []
        for v, (cv, _) in enumerate(parts):
            base_colour = cbase[v]
            colours.extend(offsets[base_colour] + c for c in cv)
        return colours, acc
    raise SubstitutionBaseError(
        f"{type(expr).__name__} is outside the substitution base (TT, C3, "
        "Arrow, Delta, Subst)"
    )


def substitution_dicolouring(expr: Expr) -> Dicolouring:
    """Valid dicolouring of build(expr) by palette reuse along the tree."""
    colours, k = _palette(expr)
    return Dicolouring(tuple(colours), k)


def random_base_expr(size: int, gen: SplitMix64) -> Expr:
    """Random expression over the base leaves and Arrow/Delta/Subst nodes
    with exactly `size` vertices."""
    if size <= 1:
        return TT(1)
    if size == 2:
        return TT(2) if gen.bit() else Arrow(TT(1), TT(1))
    kinds = ["arrow", "delta", "subst2", "subst3", "tt"]
    kind = kinds[gen.below(len(kinds))]
    if kind == "tt" and size <= 6:
        return TT(size)
    if kind == "arrow" or kind == "subst2":
        a = 1 + gen.below(size - 1)
        left = random_base_expr(a, gen)
        right = random_base_expr(size - a, gen)
        if kind == "arrow":
            return Arrow(left, right)
        return Subst(TT(2), ((0, left), (1, right)))
    # three parts for delta / subst over the directed triangle
    a = 1 + gen.below(size - 2)
    b = 1 + gen.below(size - a - 1)
    c = size - a - b
    parts = [random_base_expr(a, gen), random_base_expr(b, gen), random_base_expr(c, gen)]
    if kind == "delta":
        return Delta(*parts)
    return Subst(C3(), ((0, parts[0]), (1, parts[1]), (2, parts[2])))
