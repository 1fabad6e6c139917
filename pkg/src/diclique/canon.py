"""Canonical forms and isomorphism tests for tournaments.

canonical_code is exact (equal codes <=> isomorphic) for n <= 8, where it is
the lexicographically minimal serialized arc matrix over all vertex
permutations.  For larger n the minimization is restricted to permutations
respecting an iterated degree-refinement partition; that code is sound
(equal codes imply isomorphic, since a code reconstructs its tournament) and
callers needing certainty about distinct codes back it with are_isomorphic.
"""

from __future__ import annotations

from .core import Tournament, bit

EXACT_LIMIT = 8


def _pair_significance(n: int) -> list[list[int]]:
    """sig[i][j] = value of a '1' bit for pair (i,j), i<j, in the row-major code."""
    total = n * (n - 1) // 2
    sig = [[0] * n for _ in range(n)]
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            sig[i][j] = 1 << (total - 1 - idx)
            idx += 1
    return sig


def refinement_cells(t: Tournament) -> list[list[int]]:
    """Vertex partition by iterated degree signatures, cells in invariant order.

    Signatures start from out-degrees and are refined by the multisets of
    neighbour signatures until stable, so the ordered partition is the same
    for isomorphic tournaments.
    """
    n = t.n
    out = t.out
    sigs: list[tuple] = [(t.out_degree(v),) for v in range(n)]
    while True:
        fresh = []
        for v in range(n):
            outs = sorted(sigs[w] for w in range(n) if out[v] & bit(w))
            ins = sorted(sigs[w] for w in range(n) if out[w] & bit(v))
            fresh.append((sigs[v], tuple(outs), tuple(ins)))
        if len(set(fresh)) == len(set(sigs)):
            break
        sigs = fresh
    cells: dict[tuple, list[int]] = {}
    for v in range(n):
        cells.setdefault(sigs[v], []).append(v)
    return [cells[s] for s in sorted(cells)]


def _min_code(t: Tournament, cells: list[list[int]], seed_best: int | None = None) -> int:
    """Smallest row-major code over permutations filling positions cell by cell."""
    n = t.n
    out = t.out
    sig = _pair_significance(n)
    pos_cell: list[int] = []
    for ci, cell in enumerate(cells):
        pos_cell.extend([ci] * len(cell))
    degrees = [t.out_degree(v) for v in range(n)]
    best = seed_best
    placed: list[int] = []

    def dfs(k: int, lb: int, used: int) -> None:
        nonlocal best
        if k == n:
            if best is None or lb < best:
                best = lb
            return
        scored = []
        for w in cells[pos_cell[k]]:
            if used & bit(w):
                continue
            contrib = 0
            for i, u in enumerate(placed):
                if out[u] & bit(w):
                    contrib |= sig[i][k]
            scored.append((lb | contrib, degrees[w], w))
        scored.sort()
        for newlb, _, w in scored:
            if best is not None and newlb >= best:
                break  # candidates are sorted, the rest are no better
            placed.append(w)
            dfs(k + 1, newlb, used | bit(w))
            placed.pop()

    dfs(0, 0, 0)
    assert best is not None
    return best


def canonical_code(t: Tournament) -> bytes:
    """Isomorphism code: equal codes mean isomorphic tournaments.

    Exact both ways for n <= 8 (see module docstring for larger n).
    """
    n = t.n
    if n <= EXACT_LIMIT:
        cells = refinement_cells(t)
        seed = _min_code(t, cells)  # cheap incumbent, achievable globally
        code = _min_code(t, [list(range(n))], seed_best=seed)
    else:
        code = _min_code(t, refinement_cells(t))
    total = n * (n - 1) // 2
    return bytes([n]) + code.to_bytes((total + 7) // 8 or 1, "big")


def code_to_tournament(code: bytes) -> Tournament:
    """Rebuild the canonical representative a code describes."""
    n = code[0]
    total = n * (n - 1) // 2
    value = int.from_bytes(code[1:], "big")
    rows = [0] * n
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (value >> (total - 1 - idx)) & 1:
                rows[i] |= bit(j)
            else:
                rows[j] |= bit(i)
            idx += 1
    return Tournament(n, rows, validate=False)


def are_isomorphic(a: Tournament, b: Tournament) -> bool:
    """Permutation-backtracking isomorphism test (exact for any n)."""
    if a.n != b.n:
        return False
    n = a.n
    if n <= EXACT_LIMIT:
        return canonical_code(a) == canonical_code(b)
    cells_a = refinement_cells(a)
    cells_b = refinement_cells(b)
    if [len(c) for c in cells_a] != [len(c) for c in cells_b]:
        return False
    order = [v for cell in cells_a for v in cell]
    cell_of_a: dict[int, int] = {}
    for ci, cell in enumerate(cells_a):
        for v in cell:
            cell_of_a[v] = ci
    image = [-1] * n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = order[k]
        for w in cells_b[cell_of_a[v]]:
            if used & bit(w):
                continue
            ok = True
            for u in order[:k]:
                if bool(a.out[v] & bit(u)) != bool(b.out[w] & bit(image[u])):
                    ok = False
                    break
            if ok:
                image[v] = w
                used |= bit(w)
                if extend(k + 1):
                    return True
                used &= ~bit(w)
                image[v] = -1
        return False

    return extend(0)


def automorphism_count(t: Tournament) -> int:
    """Order of the automorphism group, by cell-restricted backtracking."""
    n = t.n
    cells = refinement_cells(t)
    order = [v for cell in cells for v in cell]
    cell_of: dict[int, int] = {}
    for ci, cell in enumerate(cells):
        for v in cell:
            cell_of[v] = ci
    image = [-1] * n
    count = 0

    def extend(k: int, used: int) -> None:
        nonlocal count
        if k == n:
            count += 1
            return
        v = order[k]
        for w in cells[cell_of[v]]:
            if used & bit(w):
                continue
            ok = True
            for u in order[:k]:
                if bool(t.out[v] & bit(u)) != bool(t.out[w] & bit(image[u])):
                    ok = False
                    break
            if ok:
                image[v] = w
                extend(k + 1, used | bit(w))
                image[v] = -1

    extend(0, 0)
    return count
