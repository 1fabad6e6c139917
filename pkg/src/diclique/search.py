"""Isomorph-free enumeration of small tournaments and conjecture probes.

Enumeration extends each canonical (n-1)-vertex tournament by one new
vertex in every possible orientation pattern and keeps one representative
per canonical code; the stream order is deterministic (parents in stream
order, patterns ascending, first occurrence kept).
"""

from __future__ import annotations

import ast
import concurrent.futures
import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from .canon import canonical_code
from .codec import parse_tournament, serialize_tournament
from .core import Tournament, bit
from .invariants import (
    clique_number,
    clique_number_decide_leq,
    dichromatic_number,
    domination_number,
    independence_number,
    max_transitive,
)
from .rng import ALGORITHM, SplitMix64
from .structure import is_hero


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Tournament, ...]:
    if n < 1:
        raise ValueError("need at least one vertex")
    if n == 1:
        return (Tournament(1, [0], validate=False),)
    parents = _level(n - 1)
    seen: set[bytes] = set()
    out: list[Tournament] = []
    new = n - 1
    for parent in parents:
        for pattern in range(1 << new):
            rows = [
                parent.out[v] | (0 if pattern >> v & 1 else bit(new)) for v in range(new)
            ]
            rows.append(pattern)
            child = Tournament(n, rows, validate=False)
            code = canonical_code(child)
            if code not in seen:
                seen.add(code)
                out.append(child)
    return tuple(out)


def enumerate_tournaments(n: int) -> Iterator[Tournament]:
    """One representative per isomorphism class on n vertices."""
    return iter(_level(n))


def all_tournaments(n: int) -> list[Tournament]:
    return list(_level(n))


def count_tournaments(n: int) -> int:
    return len(_level(n))


def random_tournament(n: int, seed: int) -> Tournament:
    """Seeded random tournament: one independent fair bit per vertex pair,
    drawn from the named deterministic generator (see rng.ALGORITHM)."""
    if n < 1:
        raise ValueError("need at least one vertex")
    gen = SplitMix64(seed)
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if gen.bit():
                rows[i] |= bit(j)
            else:
                rows[j] |= bit(i)
    return Tournament(n, rows, validate=False)


# ---------------------------------------------------------------------------
# criticality


@dataclass(frozen=True)
class CriticalityReport:
    """Per-vertex deletion evidence for a criticality claim."""

    tournament: Tournament
    k: int
    omega: int
    vertex_deletions: tuple[int, ...]

    @property
    def is_critical(self) -> bool:
        return self.omega == self.k and all(
            d == self.k - 1 for d in self.vertex_deletions
        )


@dataclass(frozen=True)
class CriticalScan:
    k: int
    sizes: tuple[int, ...]
    reports: tuple[CriticalityReport, ...]
    complete: bool


def _deletion_value(t: Tournament, v: int) -> int:
    if t.n == 1:
        return 0  # nothing left
    return clique_number(t.delete(v)).value


def find_omega_critical(
    k: int, sizes: Iterable[int], time_limit: float | None = None
) -> CriticalScan:
    """All canonical tournaments of the given sizes whose ordering clique
    number is exactly k and drops to k-1 under every vertex deletion.

    Membership is first screened with threshold decisions (is the value
    <= k-1 / <= k) before the full per-vertex evidence is computed.
    """
    if k < 1:
        raise ValueError("k must be positive")
    deadline = None if time_limit is None else time.monotonic() + time_limit
    sizes = tuple(sizes)
    reports: list[CriticalityReport] = []
    complete = True
    for n in sizes:
        for t in enumerate_tournaments(n):
            if deadline is not None and time.monotonic() > deadline:
                complete = False
                break
            if not clique_number_decide_leq(t, k):
                continue  # value above k
            if clique_number_decide_leq(t, k - 1):
                continue  # value below k
            deletions = tuple(_deletion_value(t, v) for v in range(n))
            report = CriticalityReport(t, k, k, deletions)
            if report.is_critical:
                reports.append(report)
        if not complete:
            break
    return CriticalScan(k, sizes, tuple(reports), complete)


# ---------------------------------------------------------------------------
# smallest subtournament with large clique number


@dataclass(frozen=True)
class SubsetSearchResult:
    status: str  # found | none | timeout
    vertices: tuple[int, ...] | None


def min_subtournament_with_omega(
    t: Tournament, k: int, size_cap: int, time_limit: float | None = None
) -> SubsetSearchResult:
    """Smallest vertex subset (up to size_cap) inducing clique number >= k.

    Sizes below 2k-1 are skipped: classes of size two are acyclic, so the
    dichromatic number of m vertices is at most ceil(m/2) and the chain
    dom <= clique <= dichromatic caps the clique number the same way.
    A subset whose domination number already reaches k is accepted without
    running the ordering search.
    """
    import itertools as _it

    deadline = None if time_limit is None else time.monotonic() + time_limit
    floor = max(1, 2 * k - 1)
    for s in range(floor, size_cap + 1):
        for combo in _it.combinations(range(t.n), s):
            if deadline is not None and time.monotonic() > deadline:
                return SubsetSearchResult("timeout", None)
            sub = t.induced(combo)
            if domination_number(sub).value >= k:
                return SubsetSearchResult("found", combo)
            if not clique_number_decide_leq(sub, k - 1):
                return SubsetSearchResult("found", combo)
    return SubsetSearchResult("none", None)


# ---------------------------------------------------------------------------
# predicate scans


_ALLOWED_NODES = (
    ast.Expression,
    ast.BoolOp,
    ast.And,
    ast.Or,
    ast.UnaryOp,
    ast.Not,
    ast.USub,
    ast.Compare,
    ast.Eq,
    ast.NotEq,
    ast.Lt,
    ast.LtE,
    ast.Gt,
    ast.GtE,
    ast.Name,
    ast.Load,
    ast.Constant,
    ast.BinOp,
    ast.Add,
    ast.Sub,
    ast.Mult,
    ast.FloorDiv,
    ast.Pow,
)

_INVARIANT_NAMES = ("n", "omega", "chi", "dom", "trans", "alpha", "omega_scc_max", "is_hero")


class PredicateError(ValueError):
    pass


def parse_predicate(expression: str) -> tuple[ast.Expression, frozenset[str]]:
    """Compile a boolean expression over the exposed invariant names.

    The C-style && and || spellings are accepted; only comparisons,
    boolean connectives and integer arithmetic are allowed.
    """
    text = expression.replace("&&", " and ").replace("||", " or ")
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise PredicateError(f"cannot parse predicate: {exc}") from None
    names: set[str] = set()
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED_NODES):
            raise PredicateError(f"construct {type(node).__name__} not allowed")
        if isinstance(node, ast.Name):
            if node.id not in _INVARIANT_NAMES:
                raise PredicateError(
                    f"unknown name {node.id!r}; available: {', '.join(_INVARIANT_NAMES)}"
                )
            names.add(node.id)
    return tree, frozenset(names)


def _invariant_values(t: Tournament, names: frozenset[str]) -> dict[str, int | bool]:
    from .core import strong_components

    values: dict[str, int | bool] = {}
    if "n" in names:
        values["n"] = t.n
    if "omega" in names:
        values["omega"] = clique_number(t).value
    if "chi" in names:
        values["chi"] = dichromatic_number(t).value
    if "dom" in names:
        values["dom"] = domination_number(t).value
    if "trans" in names:
        values["trans"] = max_transitive(t).value
    if "alpha" in names:
        values["alpha"] = independence_number(t)
    if "omega_scc_max" in names:
        values["omega_scc_max"] = max(
            clique_number(t.induced(c)).value for c in strong_components(t)
        )
    if "is_hero" in names:
        values["is_hero"] = is_hero(t)[0]
    return values


def _eval_predicate(tree: ast.Expression, values: dict) -> bool:
    return bool(eval(compile(tree, "<predicate>", "eval"), {"__builtins__": {}}, dict(values)))


@dataclass(frozen=True)
class ScanRow:
    code: str  # canonical code, hex
    n: int
    values: dict
    result: bool


@dataclass
class ScanReport:
    expression: str
    sizes: tuple[int, ...]
    rows: list[ScanRow] = field(default_factory=list)
    complete: bool = True
    rng_algorithm: str = ALGORITHM

    @property
    def violations(self) -> list[ScanRow]:
        return [r for r in self.rows if not r.result]

    def counts(self) -> dict[str, int]:
        return {
            "scanned": len(self.rows),
            "holds": sum(1 for r in self.rows if r.result),
            "violations": len(self.violations),
        }


def _scan_one(args: tuple[str, str, tuple[str, ...]]) -> tuple[str, int, dict, bool]:
    text, expression, _names = args
    t = parse_tournament(text)
    tree, names = parse_predicate(expression)
    values = _invariant_values(t, names)
    return (
        canonical_code(t).hex(),
        t.n,
        values,
        _eval_predicate(tree, values),
    )


def predicate_scan(
    sizes: Iterable[int],
    expression: str,
    time_limit: float | None = None,
    threads: int = 1,
    csv_path: str | None = None,
    checkpoint_path: str | None = None,
    resume: bool = False,
    progress: Callable[[ScanRow], None] | None = None,
) -> ScanReport:
    """Evaluate a predicate over every canonical tournament of the given
    sizes; emit one row per tournament, optionally into a CSV with resumable
    checkpoints.  Multi-worker runs merge results in stream order, so the
    CSV is identical to a single-worker run."""
    tree, names = parse_predicate(expression)
    sizes = tuple(sizes)
    report = ScanReport(expression, sizes)
    deadline = None if time_limit is None else time.monotonic() + time_limit

    stream = [(n, t) for n in sizes for t in enumerate_tournaments(n)]
    start_index = 0
    if resume and checkpoint_path:
        try:
            with open(checkpoint_path, "r", encoding="ascii") as fh:
                ck = json.load(fh)
            if ck.get("expression") == expression and tuple(ck.get("sizes", ())) == sizes:
                start_index = int(ck.get("done", 0))
        except FileNotFoundError:
            start_index = 0

    csv_fh = None
    value_cols = sorted(names)
    if csv_path:
        mode = "a" if (resume and start_index) else "w"
        csv_fh = open(csv_path, mode, encoding="utf-8")
        if mode == "w":
            csv_fh.write(",".join(["canonical_code", "n", *value_cols, "result", "witness"]) + "\n")

    def emit(row: ScanRow) -> None:
        report.rows.append(row)
        if csv_fh:
            witness = "" if row.result else json.dumps(row.values, sort_keys=True)
            cols = [row.code, str(row.n)]
            cols += [str(row.values.get(c, "")) for c in value_cols]
            cols += [str(int(row.result)), json.dumps(witness)]
            csv_fh.write(",".join(cols) + "\n")
        if progress:
            progress(row)

    done = start_index
    try:
        if threads <= 1:
            for n, t in stream[start_index:]:
                if deadline is not None and time.monotonic() > deadline:
                    report.complete = False
                    break
                values = _invariant_values(t, names)
                emit(ScanRow(canonical_code(t).hex(), n, values, _eval_predicate(tree, values)))
                done += 1
        else:
            with concurrent.futures.ProcessPoolExecutor(max_workers=threads) as pool:
                chunk = max(4 * threads, 16)
                idx = start_index
                while idx < len(stream):
                    if deadline is not None and time.monotonic() > deadline:
                        report.complete = False
                        break
                    batch = stream[idx : idx + chunk]
                    args = [
                        (serialize_tournament(t), expression, tuple(sorted(names)))
                        for _, t in batch
                    ]
                    for code, n, values, result in pool.map(_scan_one, args):
                        emit(ScanRow(code, n, values, result))
                        done += 1
                    idx += len(batch)
    finally:
        if csv_fh:
            csv_fh.close()
        if checkpoint_path:
            with open(checkpoint_path, "w", encoding="ascii") as fh:
                json.dump(
                    {"expression": expression, "sizes": list(sizes), "done": done}, fh
                )
    return report
