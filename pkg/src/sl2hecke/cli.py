"""Command-line front end: verify, quotient, eval.

Exit codes: 0 pass, 1 verification failure, 2 parse error, 3 parameter error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ExprSyntaxError, ParameterError
from .expr import eval_expr, format_helem
from .field import make_field
from .quotient import build_quotient_graph
from .render import RENDERERS, render
from .suites import SUITES, Options, run_suite

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_PARAM = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad arguments; those are parameter errors here."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARAM)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="sl2hecke", description="Exact computations in the pro-p Iwahori Hecke algebra of SL2(Q_p) mod p.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    v.add_argument("--len-bound", type=int, default=Options.len_bound)
    v.add_argument("--deg-bound", type=int, default=Options.deg_bound)
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--no-timing", action="store_true", help="omit timing fields from JSON")

    q = sub.add_parser("quotient", help="render the gluing graph of the quotient space")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--format", choices=sorted(RENDERERS), default="ascii")
    q.add_argument("--out", type=Path, help="write to a file instead of stdout")

    e = sub.add_parser("eval", help="evaluate an expression in H")
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--e", type=int, default=1, help="extension degree, q = p^e")
    e.add_argument("expr")
    return ap


def cmd_verify(args) -> int:
    if args.len_bound < 1 or args.deg_bound < 4 or args.workers < 1:
        raise ParameterError("need --len-bound >= 1, --deg-bound >= 4, --workers >= 1")
    make_field(args.p)
    opts = Options(len_bound=args.len_bound, deg_bound=args.deg_bound)
    report = run_suite(args.p, args.suite, opts, workers=args.workers)
    if args.format == "json":
        print(report.to_json(with_timing=not args.no_timing))
    else:
        print(report.to_text())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_quotient(args) -> int:
    text = render(build_quotient_graph(args.p), args.format)
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_eval(args) -> int:
    spec = make_field(args.p, args.e)
    print(format_helem(eval_expr(args.expr, spec)))
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "quotient": cmd_quotient, "eval": cmd_eval}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.cmd](args)
    except ExprSyntaxError as exc:
        print(f"parse error at offset {exc.offset}: {exc.msg}", file=sys.stderr)
        return EXIT_PARSE
    except ParameterError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAM


if __name__ == "__main__":
    sys.exit(main())
