"""Command-line interface.

Exit codes: 0 exact result / all claims pass, 1 usage or input error,
2 inexact result (time or node budget produced bounds, or a partial scan),
3 verification failure.  DICLIQUE_TIME_LIMIT (seconds) overrides the
default solver time limit when no --time-limit flag is given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import codec
from .canon import canonical_code
from .check import check_result
from .codec import FormatError, backedge_to_dot, load, serialize_tournament
from .construct import ConstructionError, DslParseError, build, parse_expr
from .core import Ordering, Tournament, backedge_graph
from .invariants import (
    InvariantResult,
    clique_number,
    dichromatic_number,
    domination_number,
    independence_result,
    max_transitive,
    ordering_optimize,
)
from .search import PredicateError, find_omega_critical, enumerate_tournaments, predicate_scan
from .structure import (
    FOREST,
    MATCHING,
    STAR_FOREST,
    bst_omega_probe,
    is_hero,
    ordering_search,
    star_forest_ordering,
)
from .undirected import max_clique_rows, max_degree
from .verify import run_suite, suite_json, suite_text

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INEXACT = 2
EXIT_VERIFY_FAIL = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors are exit code 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _default_time_limit(args) -> float | None:
    if getattr(args, "time_limit", None) is not None:
        return args.time_limit
    env = os.environ.get("DICLIQUE_TIME_LIMIT")
    return float(env) if env else None


def _serialize_certificate(cert) -> object:
    from .invariants import Dicolouring

    if isinstance(cert, Dicolouring):
        return {"type": "dicolouring", "colours": list(cert.colours), "k": cert.k}
    return cert


def _result_doc(result: InvariantResult) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "invariant": result.invariant,
        "value": result.value,
        "status": result.status,
        "lo": result.lo,
        "hi": result.hi,
        "certificate": _serialize_certificate(result.certificate),
        "nodes": result.nodes,
        "elapsed_ms": round(result.elapsed * 1000.0, 3),
    }


def _print_result(obj, result: InvariantResult, as_json: bool) -> int:
    if not check_result(obj, result):
        print("internal error: certificate failed independent verification", file=sys.stderr)
        return EXIT_USAGE
    if as_json:
        print(json.dumps(_result_doc(result), sort_keys=True))
    else:
        if result.exact:
            print(f"{result.invariant} = {result.value}")
        else:
            print(f"{result.invariant} in [{result.lo}, {result.hi}] (budget exhausted)")
        print(f"certificate: {json.dumps(_serialize_certificate(result.certificate), sort_keys=True)}")
        print(f"nodes: {result.nodes}  elapsed: {result.elapsed:.3f}s")
    return EXIT_OK if result.exact else EXIT_INEXACT


# ---------------------------------------------------------------------------
# subcommands


def cmd_build(args) -> int:
    try:
        expr = parse_expr(args.expr)
        t = build(expr)
    except (DslParseError, ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"n={t.n} arcs={t.arc_count()}")
    if args.output:
        codec.dump(t, args.output)
        print(f"wrote {args.output}")
    return EXIT_OK


def _load(path: str):
    try:
        return load(path)
    except (OSError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None


def cmd_invariant(args) -> int:
    obj = _load(args.file)
    if obj is None:
        return EXIT_USAGE
    limit = _default_time_limit(args)
    needs_tournament = args.name in ("omega", "dom", "trans")
    if needs_tournament and not isinstance(obj, Tournament):
        print(f"error: invariant {args.name} needs a tournament (.trn)", file=sys.stderr)
        return EXIT_USAGE
    if args.name == "omega":
        result = clique_number(obj, time_limit=limit)
    elif args.name == "dichromatic":
        result = dichromatic_number(obj, time_limit=limit)
    elif args.name == "dom":
        result = domination_number(obj, time_limit=limit)
    elif args.name == "trans":
        result = max_transitive(obj, time_limit=limit)
    else:
        result = independence_result(obj)
    return _print_result(obj, result, args.json)


def _backedge_stats(t, ordering: Ordering) -> str:
    bg = backedge_graph(t, ordering)
    rows = bg.graph.rows
    full = (1 << t.n) - 1
    om = max_clique_rows(rows, full)[0]
    return (
        f"backedges={bg.graph.edge_count()} max_degree={max_degree(rows, full)} "
        f"clique={om}"
    )


def cmd_order(args) -> int:
    obj = _load(args.file)
    if obj is None:
        return EXIT_USAGE
    if not isinstance(obj, Tournament):
        print("error: order needs a tournament (.trn)", file=sys.stderr)
        return EXIT_USAGE
    limit = _default_time_limit(args)
    ordering: Ordering | None = None
    status = "found"
    if args.goal in ("omega", "chromatic"):
        objective = "clique" if args.goal == "omega" else "chromatic"
        result = ordering_optimize(obj, objective, time_limit=limit)
        ordering = Ordering(result.certificate["ordering"])
        print(f"objective {args.goal}: value {result.value} ({result.status})")
        status = "found" if result.exact else "timeout"
    elif args.goal in ("forest", "matching"):
        predicate = FOREST if args.goal == "forest" else MATCHING
        outcome = ordering_search(obj, predicate, time_limit=limit)
        status = outcome.status
        ordering = outcome.ordering
    elif args.goal == "star-forest":
        hero, cert = is_hero(obj)
        if hero:
            assert cert is not None
            ordering = star_forest_ordering(obj, cert)
        else:
            outcome = ordering_search(obj, STAR_FOREST, time_limit=limit)
            status = outcome.status
            ordering = outcome.ordering
    else:  # bst
        probe = bst_omega_probe(obj, samples=args.samples, seed=args.seed)
        ordering = probe.best_ordering
        print(
            f"best BST backedge clique {probe.best_bst_clique} vs exact {probe.exact_clique} "
            f"({probe.orderings_tried} orderings{', exhaustive' if probe.exhaustive else ''})"
        )
    if ordering is None:
        print("NONE" if status == "none" else "TIMEOUT")
        return EXIT_OK if status == "none" else EXIT_INEXACT
    print("ordering:", " ".join(map(str, ordering.perm)))
    print(_backedge_stats(obj, ordering))
    if args.emit_dot:
        bg = backedge_graph(obj, ordering)
        with open(args.emit_dot, "w", encoding="ascii") as fh:
            fh.write(backedge_to_dot(bg))
        print(f"wrote {args.emit_dot}")
    return EXIT_OK if status == "found" else EXIT_INEXACT


def cmd_search(args) -> int:
    limit = _default_time_limit(args)
    if args.what == "enumerate":
        rows = []
        for t in enumerate_tournaments(args.n):
            line = serialize_tournament(t).replace("\n", " ").strip()
            rows.append((canonical_code(t).hex(), line))
            print(line)
        if args.csv:
            with open(args.csv, "w", encoding="utf-8") as fh:
                fh.write("canonical_code,n,bits\n")
                for code, line in rows:
                    n, bits = line.split(" ", 1) if " " in line else (line, "")
                    fh.write(f"{code},{n},{bits}\n")
        return EXIT_OK
    if args.what == "critical":
        scan = find_omega_critical(args.k, range(1, args.nmax + 1), time_limit=limit)
        for report in scan.reports:
            line = serialize_tournament(report.tournament).replace("\n", " ").strip()
            print(f"{line}  deletions={list(report.vertex_deletions)}")
        print(f"found {len(scan.reports)} ({'complete' if scan.complete else 'INCOMPLETE'})")
        if args.csv:
            with open(args.csv, "w", encoding="utf-8") as fh:
                fh.write("canonical_code,n,bits,deletion_values\n")
                for report in scan.reports:
                    t = report.tournament
                    bits = serialize_tournament(t).splitlines()[1]
                    fh.write(
                        f"{canonical_code(t).hex()},{t.n},{bits},"
                        f"\"{list(report.vertex_deletions)}\"\n"
                    )
        return EXIT_OK if scan.complete else EXIT_INEXACT
    # scan
    try:
        report = predicate_scan(
            range(1, args.nmax + 1),
            args.predicate,
            time_limit=limit,
            threads=args.threads,
            csv_path=args.csv,
            checkpoint_path=args.checkpoint,
            resume=args.resume,
        )
    except PredicateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    counts = report.counts()
    print(
        f"scanned={counts['scanned']} holds={counts['holds']} "
        f"violations={counts['violations']} ({'complete' if report.complete else 'INCOMPLETE'})"
    )
    for row in report.violations[:10]:
        print(f"  violation: code={row.code} n={row.n} values={row.values}")
    return EXIT_OK if report.complete else EXIT_INEXACT


def cmd_verify(args) -> int:
    suite = run_suite(args.filter or None)
    if not suite.results:
        print("error: no claims match the filter", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        sys.stdout.write(suite_json(suite))
    else:
        sys.stdout.write(suite_text(suite))
    return EXIT_OK if suite.passed else EXIT_VERIFY_FAIL


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="diclique", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="evaluate a construction expression to a .trn file")
    p.add_argument("expr", help='e.g. "Delta(TT(1),C3,C3)", "S(4)", "Rot(7;1,2,4)"')
    p.add_argument("-o", "--output", help="write the tournament to this .trn path")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("invariant", help="compute an invariant of a .trn/.dgr file")
    p.add_argument("name", choices=["omega", "dichromatic", "dom", "trans", "alpha"])
    p.add_argument("file")
    p.add_argument("--time-limit", type=float, default=None, metavar="S")
    p.add_argument(
        "--threads", type=int, default=1,
        help="reserved; solvers currently run single-threaded for determinism",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("order", help="search for an ordering with a given backedge goal")
    p.add_argument("file")
    p.add_argument(
        "--goal",
        required=True,
        choices=["omega", "chromatic", "forest", "matching", "star-forest", "bst"],
    )
    p.add_argument("--time-limit", type=float, default=None, metavar="S")
    p.add_argument("--samples", type=int, default=200, help="BST insertions to sample")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--emit-dot", metavar="PATH", help="write the backedge graph as DOT")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("search", help="enumeration, criticality and predicate scans")
    psub = p.add_subparsers(dest="what", required=True)
    pe = psub.add_parser("enumerate", help="canonical tournaments on n vertices")
    pe.add_argument("n", type=int)
    pe.add_argument("--csv")
    pe.set_defaults(func=cmd_search, threads=1)
    pc = psub.add_parser("critical", help="k-critical tournaments up to nmax vertices")
    pc.add_argument("k", type=int)
    pc.add_argument("nmax", type=int)
    pc.add_argument("--csv")
    pc.add_argument("--time-limit", type=float, default=None, metavar="S")
    pc.set_defaults(func=cmd_search, threads=1)
    ps = psub.add_parser("scan", help="evaluate a predicate over all tournaments up to nmax")
    ps.add_argument("predicate", help='e.g. "dom<=omega && omega<=chi"')
    ps.add_argument("nmax", type=int)
    ps.add_argument("--csv")
    ps.add_argument("--checkpoint")
    ps.add_argument("--resume", action="store_true")
    ps.add_argument("--seed", type=int, default=0, help="recorded in scan metadata")
    ps.add_argument("--threads", type=int, default=1)
    ps.add_argument("--time-limit", type=float, default=None, metavar="S")
    ps.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-paper", help="run the verification suite of published claims")
    p.add_argument("--filter", action="append", metavar="ID", help="run only these claim ids")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
