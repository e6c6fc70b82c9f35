"""Command-line front end.

Subcommands: classify | invariants | verify | corpus.  Graph files list the
vertex count on the first data line and one edge per following line; blank
lines and # comments are ignored.  Reports go to stdout as text, or as
canonical JSON with --json; diagnostics go to stderr.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 requested
work skipped under --strict.
"""

from __future__ import annotations

import argparse
import sys

from .graphs import GraphParseError, parse_graph
from .report import (
    classify_report,
    corpus_report,
    has_failure,
    has_skip,
    invariants_report,
    render_text,
    to_json,
    verify_report,
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_STRICT_SKIP = 3


def _add_graph_flags(sub: argparse.ArgumentParser, rows_required: bool):
    sub.add_argument("--graph", required=True, metavar="PATH", help="graph file")
    if rows_required:
        sub.add_argument("--rows", required=True, type=int, metavar="M", help="row count m >= 2")
    sub.add_argument("--json", action="store_true", help="canonical JSON instead of text")
    sub.add_argument("--strict", action="store_true", help="exit 3 when any stage is skipped")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gbei",
        description="Generalized binomial edge ideals: classification, closed-form "
        "invariants, Groebner bases, and homological cross-checks.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("classify", help="classification and cut-set census")
    _add_graph_flags(p, rows_required=False)

    p = subs.add_parser("invariants", help="closed-form depth/regularity, dimension, unmixedness")
    _add_graph_flags(p, rows_required=True)

    p = subs.add_parser("verify", help="invariants plus oracle cross-checks")
    _add_graph_flags(p, rows_required=True)
    p.add_argument("--max-vars", type=int, default=12, metavar="V",
                   help="largest grid (rows x vertices) the homology oracle will attempt")
    p.add_argument("--with-primes", action="store_true",
                   help="force the prime-intersection check past 8 variables")

    p = subs.add_parser("corpus", help="sweep all connected graphs of a given size")
    p.add_argument("--enumerate", required=True, type=int, metavar="N", dest="enumerate_n",
                   help="vertex count, at most 7")
    p.add_argument("--rows", required=True, type=int, metavar="M")
    p.add_argument("--filter", choices=["gblock", "block", "all"], default="gblock")
    p.add_argument("--verify", action="store_true", help="run the verification checks per graph")
    p.add_argument("--max-vars", type=int, default=12, metavar="V")
    p.add_argument("--with-primes", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--strict", action="store_true")

    return parser


def _load_graph(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _emit(report: dict, as_json: bool):
    sys.stdout.write(to_json(report) if as_json else render_text(report))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "corpus":
            if args.rows < 2:
                raise ValueError(f"need at least 2 rows, got {args.rows}")
            report = corpus_report(
                args.enumerate_n,
                args.rows,
                args.filter,
                args.verify,
                max_vars=args.max_vars,
                with_primes=args.with_primes,
            )
        else:
            g = _load_graph(args.graph)
            if args.command == "classify":
                report = classify_report(g)
            elif args.command == "invariants":
                report = invariants_report(g, args.rows)
            else:
                report = verify_report(
                    g, args.rows, max_vars=args.max_vars, with_primes=args.with_primes
                )
    except (OSError, GraphParseError, ValueError) as err:
        print(f"gbei: error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    _emit(report, args.json)
    if has_failure(report):
        return EXIT_VERIFICATION_FAILED
    if args.strict and has_skip(report):
        return EXIT_STRICT_SKIP
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
