"""posetao command line: analyze files, generate constructions, print tables, verify."""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import constructions, enumeration, extremal, formats
from .poset import CycleError, Poset, comparability_graph, height, is_connected, width
from .solver import (
    NodeLimitExceeded,
    SolverConfig,
    TooLarge,
    ao_bounds,
    ao_brute,
    ao_exact,
    clique_number,
    independence_number,
    witness_chains,
)
from .structure import central_element, find_cover_cycle, find_n_shape, find_v_shape

EXIT_PARSE = 1
EXIT_CYCLE = 2
EXIT_NODE_LIMIT = 3
EXIT_SELF_CHECK = 4


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _tuple(elements) -> str:
    return "(" + ",".join(str(e) for e in elements) + ")"


def _analyze_poset(P: Poset, args, cfg: SolverConfig) -> list[str]:
    result = ao_exact(comparability_graph(P), cfg)
    cycle = find_cover_cycle(P)
    v = find_v_shape(P)
    nshape = find_n_shape(P)
    lo, hi = ao_bounds(P)
    centre = central_element(P)
    out = [
        f"n={P.n} ao={result.value} height={height(P)} width={width(P)} acyclic={_flag(cycle is None)}",
        f"bound_lo={lo} bound_hi={hi}",
        f"v_free={_flag(v is None)}" + (f" witness={_tuple(v.elements)}" if v else ""),
        f"n_free={_flag(nshape is None)}" + (f" witness={_tuple(nshape.elements)}" if nshape else ""),
        f"connected={_flag(is_connected(P))} central={'none' if centre is None else centre}",
    ]
    if cycle is not None:
        out.append(f"cover_cycle={_tuple(cycle.elements)}")
    if args.brute:
        out.append(f"ao_brute={ao_brute(comparability_graph(P), cfg)}")
    if args.witness:
        family = witness_chains(P, result.witness)
        for chain in family.chains:
            out.append("chain " + " < ".join(str(p) for p in chain))
    return out


def cmd_analyze(args) -> int:
    cfg = SolverConfig(node_limit=args.node_limit)
    try:
        obj = formats.load(args.path)
    except formats.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CycleError as exc:
        print(f"error: not a partial order: {exc}", file=sys.stderr)
        return EXIT_CYCLE
    try:
        if isinstance(obj, Poset):
            lines = _analyze_poset(obj, args, cfg)
        else:
            if args.dot:
                print("error: --dot needs a poset file", file=sys.stderr)
                return EXIT_PARSE
            result = ao_exact(obj, cfg)
            alpha, omega = independence_number(obj), clique_number(obj)
            lines = [
                f"n={obj.n} ao={result.value} alpha={alpha} omega={omega}",
                f"bound_lo={max(alpha, omega)} bound_hi={alpha * omega}",
            ]
            if args.brute:
                lines.append(f"ao_brute={ao_brute(obj, cfg)}")
            if args.witness:
                lines.append("witness=" + _tuple(sorted(result.witness)))
    except NodeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NODE_LIMIT
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print("\n".join(lines))
    if args.dot:
        Path(args.dot).write_text(formats.to_dot(obj))
    return 0


def _claims_line(report: constructions.ConstructionReport) -> str:
    parts = []
    for key, value in report.claims().items():
        parts.append(f"{key}={_flag(value) if isinstance(value, bool) else value}")
    if report.central is not None:
        parts.append(f"central={report.central}")
    if report.conjectural:
        parts.append("conjectural=true")
    return " ".join(parts)


def cmd_gen(args) -> int:
    try:
        report = constructions.report_for(args.kind, args.params)
    except (ValueError, constructions.OutOfSpecifiedRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    comment = f"{args.kind} {' '.join(map(str, args.params))}"
    text = formats.dump(report.obj, comment)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    print(_claims_line(report), file=sys.stderr)
    if args.no_check:
        return 0
    bad = report.verify(SolverConfig(node_limit=args.node_limit))
    failed = False
    for name, (claimed, actual) in sorted(bad.items()):
        if actual is None:
            print(f"note: {name} not re-checked (instance too large for the solver)", file=sys.stderr)
            continue
        failed = True
        print(f"self-check failed: {name} claimed {claimed}, got {actual}", file=sys.stderr)
    return EXIT_SELF_CHECK if failed else 0


def _table_rows(kind: str, top: int) -> tuple[list[str], list[list[int]]]:
    if kind == "lambda":
        return ["a", "lambda"], [[a, extremal.lambda_closed(a)] for a in range(1, top + 1)]
    if kind == "x":
        return ["a", "x"], [[a, extremal.x_closed(a)] for a in range(1, top + 1)]
    rows = []
    for n in range(1, top + 1):
        b = extremal.ao_tn_bounds(n)
        rows.append([n, b.k, b.lo, b.hi, b.predicted, int(b.exact)])
    return ["n", "k", "lo", "hi", "predicted", "exact"], rows


def cmd_table(args) -> int:
    if args.max < 1:
        print("error: --max must be at least 1", file=sys.stderr)
        return EXIT_PARSE
    header, rows = _table_rows(args.kind, args.max)
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
        return 0
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(header))]
    for row in rows:
        print(" ".join(f"{name}={value:>{w}}" for name, value, w in zip(header, row, widths)))
    return 0


def cmd_verify(args) -> int:
    from .verify import run_all

    results = run_all(max_n=args.max_n, max_a=args.max_a)
    for r in results:
        print(r.line())
        for note in r.notes:
            print(f"      {note}")
        for failure in r.failures[1:]:
            print(f"      also: {failure}")
    return 0 if all(r.ok for r in results) else 1


def cmd_enumerate(args) -> int:
    try:
        recs = enumeration.records(args.n)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    buf = io.StringIO()
    buf.write(f"# generated by: posetao enumerate {args.n}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(enumeration.CSV_COLUMNS)
    for r in recs:
        writer.writerow(r.csv_row())
    if args.csv:
        Path(args.csv).write_text(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posetao", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report ao, height, width and shape predicates of a file")
    p.add_argument("path")
    p.add_argument("--brute", action="store_true", help="also run the exhaustive solver")
    p.add_argument("--witness", action="store_true", help="print the optimal chain family")
    p.add_argument("--dot", metavar="OUT", help="write the Hasse diagram as Graphviz DOT")
    p.add_argument("--node-limit", type=int, default=SolverConfig().node_limit)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gen", help="write an extremal construction or example graph")
    p.add_argument("kind", choices=["lambda", "lambda-h", "x", "boolean", "multipartite", "grid", "planar-c5"])
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--no-check", action="store_true", help="skip re-verifying the claims")
    p.add_argument("--node-limit", type=int, default=SolverConfig().node_limit)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("table", help="tabulate lam(a), X(a) or the acyclic bracket")
    p.add_argument("kind", choices=["lambda", "x", "aotn"])
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the verification battery")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--max-a", type=int, default=8)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="per-class invariants of all n-element posets as CSV")
    p.add_argument("n", type=int)
    p.add_argument("--csv", metavar="OUT")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
