"""Exact clique and colouring engines for undirected bitmask graphs.

These run on raw bit rows so the ordering solvers can call them in tight
loops; `Graph`-level wrappers with certificates live in `invariants`.
"""

from __future__ import annotations

import time
from functools import lru_cache
from typing import Sequence

from .core import bit, bits_list, iter_bits


class Budget:
    """Node and wall-clock budget shared across one solver invocation."""

    __slots__ = ("deadline", "node_limit", "nodes")

    def __init__(self, time_limit: float | None = None, node_limit: int | None = None):
        self.deadline = None if time_limit is None else time.monotonic() + time_limit
        self.node_limit = node_limit
        self.nodes = 0

    def spent(self) -> bool:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            return True
        if self.deadline is not None and self.nodes & 255 == 1:
            return time.monotonic() > self.deadline
        return False


def clique_search(
    rows: Sequence[int],
    mask: int,
    cap: int | None = None,
    budget: Budget | None = None,
) -> tuple[int, int, bool]:
    """Maximum clique inside `mask`: (size, clique bitmask, completed).

    Branch and bound with a greedy-colouring upper bound; with `cap` the
    search stops as soon as a clique of that size is known.  `completed`
    is False only when the budget ran out.
    """
    best_size = 0
    best_mask = 0
    expired = False

    def expand(p: int, size: int, cur: int) -> bool:
        nonlocal best_size, best_mask, expired
        if budget is not None and budget.spent():
            expired = True
            return True
        if size > best_size:
            best_size = size
            best_mask = cur
            if cap is not None and best_size >= cap:
                return True
        # greedy colouring of p; colour index bounds any clique extension
        order: list[int] = []
        bounds: list[int] = []
        rest = p
        colour = 0
        while rest:
            colour += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(rows[v] | bit(v))
                rest &= ~bit(v)
                order.append(v)
                bounds.append(colour)
        for i in range(len(order) - 1, -1, -1):
            v = order[i]
            if size + bounds[i] <= best_size:
                return False
            if expand(p & rows[v], size + 1, cur | bit(v)):
                return True
            p &= ~bit(v)
        return False

    expand(mask, 0, 0)
    return best_size, best_mask, not expired


def max_clique_rows(
    rows: Sequence[int], mask: int, cap: int | None = None
) -> tuple[int, int]:
    """Maximum clique inside `mask`: (size, clique bitmask)."""
    size, clique, _ = clique_search(rows, mask, cap=cap)
    return size, clique


def has_clique(rows: Sequence[int], mask: int, k: int) -> bool:
    """Threshold test: does `mask` contain a clique on k vertices?"""
    if k <= 0:
        return True
    if k == 1:
        return mask != 0
    if k == 2:
        for v in iter_bits(mask):
            if rows[v] & mask:
                return True
        return False
    if mask.bit_count() < k:
        return False
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        mask ^= low
        if has_clique(rows, rows[v] & mask, k - 1):
            return True
    return False


def greedy_colouring(rows: Sequence[int], mask: int) -> dict[int, int]:
    """DSATUR-style greedy colouring; the solvers use it as an upper bound."""
    colours: dict[int, int] = {}
    uncoloured = mask
    while uncoloured:
        # most saturated vertex, ties by degree then index
        pick = -1
        pick_key = None
        for v in iter_bits(uncoloured):
            sat = len({colours[u] for u in iter_bits(rows[v] & mask) if u in colours})
            key = (-sat, -(rows[v] & mask).bit_count(), v)
            if pick_key is None or key < pick_key:
                pick, pick_key = v, key
        used = {colours[u] for u in iter_bits(rows[pick] & mask) if u in colours}
        c = 0
        while c in used:
            c += 1
        colours[pick] = c
        uncoloured &= ~bit(pick)
    return colours


class ColouringBudgetSpent(Exception):
    pass


def _k_colouring(
    rows: Sequence[int], mask: int, k: int, clique_mask: int, budget: Budget | None = None
) -> dict[int, int] | None:
    """Proper k-colouring of `mask` or None; a max clique is precoloured."""
    colours: dict[int, int] = {}
    coloured = 0
    for i, v in enumerate(bits_list(clique_mask)):
        colours[v] = i
        coloured |= bit(v)
    max_used = len(colours) - 1

    def dfs(uncoloured: int, coloured: int, max_used: int) -> bool:
        if budget is not None and budget.spent():
            raise ColouringBudgetSpent
        if not uncoloured:
            return True
        pick = -1
        pick_feas: list[int] = []
        limit = min(k, max_used + 2)  # one fresh colour beyond those in use
        for v in iter_bits(uncoloured):
            used_nb = {colours[u] for u in iter_bits(rows[v] & coloured)}
            feas = [c for c in range(limit) if c not in used_nb]
            if not feas:
                return False
            if pick == -1 or len(feas) < len(pick_feas):
                pick, pick_feas = v, feas
                if len(feas) == 1:
                    break
        for c in pick_feas:
            colours[pick] = c
            if dfs(uncoloured & ~bit(pick), coloured | bit(pick), max(max_used, c)):
                return True
            del colours[pick]
        return False

    if len(colours) > k:
        return None
    if dfs(mask & ~coloured, coloured, max_used):
        return colours
    return None


def chromatic_search(
    rows: Sequence[int], mask: int, budget: Budget | None = None
) -> tuple[int, dict[int, int], int, bool]:
    """Chromatic number of the graph induced on `mask`.

    Returns (colour count of certificate, colouring, proven lower bound,
    completed); when the budget runs out the certificate is the greedy
    colouring and the lower bound stands at the last refuted k plus one.
    """
    if not mask:
        return 0, {}, 0, True
    lb, clique, finished = clique_search(rows, mask, budget=budget)
    greedy = greedy_colouring(rows, mask)
    ub = max(greedy.values()) + 1
    if not finished:
        return ub, greedy, 1, False
    if lb == ub:
        return ub, greedy, ub, True
    k = lb
    try:
        while k < ub:
            col = _k_colouring(rows, mask, k, clique, budget)
            if col is not None:
                return k, col, k, True
            k += 1
    except ColouringBudgetSpent:
        return ub, greedy, k, False
    return ub, greedy, ub, True


def chromatic_rows(rows: Sequence[int], mask: int) -> tuple[int, dict[int, int]]:
    """Exact chromatic number of the graph induced on `mask`, with colouring."""
    k, col, _, _ = chromatic_search(rows, mask)
    return k, col


@lru_cache(maxsize=None)
def omega_value(rows: tuple[int, ...]) -> int:
    """Cached clique number for a full-vertex-set row tuple."""
    return max_clique_rows(rows, (1 << len(rows)) - 1)[0]


@lru_cache(maxsize=None)
def chi_value(rows: tuple[int, ...]) -> int:
    """Cached chromatic number for a full-vertex-set row tuple."""
    return chromatic_rows(rows, (1 << len(rows)) - 1)[0]


# ---------------------------------------------------------------------------
# structural predicates on undirected rows (used by the ordering searches)


def max_degree(rows: Sequence[int], mask: int) -> int:
    return max((rows[v] & mask).bit_count() for v in iter_bits(mask)) if mask else 0


def is_forest(rows: Sequence[int], mask: int) -> bool:
    """Acyclicity via leaf stripping."""
    remaining = mask
    while remaining:
        stripped = False
        for v in iter_bits(remaining):
            if (rows[v] & remaining).bit_count() <= 1:
                remaining &= ~bit(v)
                stripped = True
        if not stripped:
            return False
    return True


def connected_components(rows: Sequence[int], mask: int) -> list[int]:
    comps = []
    seen = 0
    for v in iter_bits(mask):
        if seen & bit(v):
            continue
        comp = bit(v)
        frontier = bit(v)
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= rows[u] & mask & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        seen |= comp
    return comps


def is_tree(rows: Sequence[int], mask: int) -> bool:
    return is_forest(rows, mask) and len(connected_components(rows, mask)) == 1


def is_star_forest(rows: Sequence[int], mask: int) -> bool:
    """Every component is a star: acyclic with at most one vertex of degree > 1."""
    if not is_forest(rows, mask):
        return False
    for comp in connected_components(rows, mask):
        heavy = sum(1 for v in iter_bits(comp) if (rows[v] & comp).bit_count() > 1)
        if heavy > 1:
            return False
    return True


def girth(rows: Sequence[int], mask: int) -> int | None:
    """Length of a shortest cycle inside `mask`, or None for forests.

    Small-graph method: for every edge, the shortest alternative path
    between its ends plus one.
    """
    best: int | None = None
    verts = bits_list(mask)
    for u in verts:
        for v in bits_list(rows[u] & mask):
            if v <= u:
                continue
            # BFS from u to v avoiding the edge u-v
            dist = {u: 0}
            frontier = [u]
            found = None
            while frontier and found is None:
                nxt = []
                for x in frontier:
                    for y in iter_bits(rows[x] & mask):
                        if x == u and y == v:
                            continue
                        if y not in dist:
                            dist[y] = dist[x] + 1
                            if y == v:
                                found = dist[y]
                                break
                            nxt.append(y)
                    if found is not None:
                        break
                frontier = nxt
            if found is not None:
                cycle = found + 1
                if best is None or cycle < best:
                    best = cycle
    return best
