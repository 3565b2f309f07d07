"""Command-line front end: ``python -m regdigraph <command>``.

Data goes to stdout (or ``--output``); counts and progress go to stderr.
Exit status: 0 success, 1 a verification check failed, 2 bad arguments,
3 time budget exhausted.
"""
from __future__ import annotations

import argparse
import os
import sys
import time

from .enumerate import BudgetExceeded, EnumerationFilter, default_workers, enumerate_unlabeled
from .formats import export_dot, export_table, format_term, write_reg
from .lovelock import render_term, term_multiplicity
from .polya import rooted_table
from .transforms import CountTable, assemble_unlabeled_table, bell_table
from .verify import load_or_enumerate, run_checks

BUDGET_ENV = "REGDIGRAPH_TIME_BUDGET"
MAX_NODES = 9


def _default_budget() -> float:
    return float(os.environ.get(BUDGET_ENV, 600))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-k", type=int, default=2, help="in- and outdegree (default 2)")
    common.add_argument("--time-budget", type=float, default=None,
                        help=f"seconds before giving up (default ${BUDGET_ENV} or 600)")
    common.add_argument("--workers", type=int, default=None, help="worker processes (default: CPU count)")
    common.add_argument("--output", "-o", default=None, help="write data here instead of stdout")
    common.add_argument("--cache-dir", default=None, help="directory of Reg<n>.txt files to reuse")

    parser = argparse.ArgumentParser(prog="regdigraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list the unlabeled classes on n nodes")
    p.add_argument("--nodes", "-n", type=int, required=True)
    p.add_argument("--no-multiarcs", action="store_true")
    p.add_argument("--no-loops", action="store_true")
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--format", choices=["reg", "dot", "tsv", "terms"], default="reg")

    p = sub.add_parser("tables", parents=[common], help="unlabeled (U) or labeled (L) counts by components")
    p.add_argument("--table", choices=["U", "L"], default="U")
    p.add_argument("--max-n", type=int, required=True)

    p = sub.add_parser("rooted", parents=[common], help="rooted counts by number of marked nodes")
    p.add_argument("--max-n", type=int, required=True)

    p = sub.add_parser("render", parents=[common], help="tensor terms with multiplicities")
    p.add_argument("--nodes", "-n", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="cross-check everything against the published tables")
    p.add_argument("--max-n", type=int, default=7)
    return parser


def _validate(args, parser):
    n = getattr(args, "nodes", None)
    if n is None:
        n = args.max_n
    if n < 0:
        parser.error("node count must be non-negative")
    if args.k not in (1, 2) and args.command != "enumerate":
        parser.error(f"-k {args.k}: only k=1 and k=2 are supported here")
    if args.k < 0:
        parser.error("k must be non-negative")
    if args.command in ("render", "rooted", "verify") and args.k != 2:
        parser.error(f"{args.command} is defined for k=2 only")
    if n > MAX_NODES and args.time_budget is None:
        parser.error(f"n={n} exceeds {MAX_NODES}; pass --time-budget explicitly to try anyway")
    if args.workers is not None and args.workers < 1:
        parser.error("--workers must be at least 1")
    if args.cache_dir and args.command != "verify" and args.k != 2:
        parser.error("--cache-dir holds k=2 data only")


def _records(n, args, filt=EnumerationFilter()):
    if args.cache_dir and filt == EnumerationFilter() and args.k == 2:
        return load_or_enumerate(n, args.cache_dir, args.time_budget, args.workers)
    return enumerate_unlabeled(n, args.k, filt, time_budget=args.time_budget, workers=args.workers)


def _enumerate_text(args) -> str:
    filt = EnumerationFilter(args.no_multiarcs, args.no_loops, args.connected_only)
    if filt == EnumerationFilter():
        records = _records(args.nodes, args)
    else:
        records = enumerate_unlabeled(args.nodes, args.k, filt, time_budget=args.time_budget, workers=args.workers)
    print(f"{len(records)} classes on {args.nodes} nodes", file=sys.stderr)
    if args.format == "reg":
        return write_reg(records)
    if args.format == "dot":
        return "".join(export_dot(r.graph, f"G{i}") for i, r in enumerate(records))
    if args.format == "terms":
        return _terms_text(records)
    head = "index\tarcs\tcomponents\tloops\tmultiarcs\taut_order\tcycle_index\n"
    from .formats import format_arc_line, format_cycle_index

    return head + "".join(
        f"{i}\t{format_arc_line(r.graph)}\t{r.components}\t{r.loops}\t{r.multiarcs}\t{r.aut_order}\t"
        f"{format_cycle_index(r.cycle_index)}\n"
        for i, r in enumerate(records)
    )


def _terms_text(records) -> str:
    return "".join(f"{format_term(render_term(r.graph))}\t{term_multiplicity(r.aut_order, r.n)}\n" for r in records)


def _tables_text(args) -> str:
    by_n = {n: _records(n, args) for n in range(1, args.max_n + 1)}
    if args.table == "U":
        if args.k == 2:
            return export_table(assemble_unlabeled_table(by_n))
        from .enumerate import classify_by_components

        table = CountTable("unlabeled")
        for n, recs in by_n.items():
            for c, v in classify_by_components(recs).items():
                table[n, c] = v
        return export_table(table)
    from math import factorial

    connected = [sum(factorial(n) // r.aut_order for r in recs if r.components == 1) for n, recs in by_n.items()]
    return export_table(bell_table(connected, args.max_n))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(args, parser)
    if args.time_budget is None:
        args.time_budget = _default_budget()
    if args.workers is None:
        args.workers = default_workers()
    started = time.monotonic()
    status = 0
    try:
        if args.command == "enumerate":
            text = _enumerate_text(args)
        elif args.command == "tables":
            text = _tables_text(args)
        elif args.command == "rooted":
            by_n = {n: _records(n, args) for n in range(1, args.max_n + 1)}
            text = export_table(rooted_table(by_n))
        elif args.command == "render":
            records = _records(args.nodes, args)
            print(f"{len(records)} terms on {args.nodes} factors", file=sys.stderr)
            text = _terms_text(records)
        else:
            checks = run_checks(args.max_n, args.cache_dir, args.time_budget, args.workers)
            text = "".join(c.line() + "\n" for c in checks)
            failed = [c for c in checks if not c.ok]
            status = 1 if failed else 0
            print(f"{len(checks) - len(failed)}/{len(checks)} checks passed", file=sys.stderr)
            if failed:
                print(f"first failure: {failed[0].line()}", file=sys.stderr)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"done in {time.monotonic() - started:.1f}s", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
