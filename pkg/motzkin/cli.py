# motzkin/cli.py
"""
Command-line surface: ``python -m motzkin <subcommand> ...``.

Results go to stdout, logs to stderr. Exit codes: 0 success, 1 usage or
precondition error, 2 verification failure, 3 quadrature non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import logging
import re
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from motzkin.config_motzkin import (
    DEFAULT_MOMENT_TERMS,
    DEFAULT_WEIGHT_SAMPLES,
    LOG_FILENAME,
    PATH_ENUMERATION_BOUND,
    QUAD_MAX_MOMENT,
)
from motzkin.exact_series import SeriesError, as_scalar, format_scalar, format_scalars
from motzkin.logging_config import setup_logging
from motzkin.moments import (
    MomentError,
    MomentMethod,
    MomentRequest,
    all_routes,
    enumerate_paths,
    mu_paths,
    mu_prefix,
    mu_recur,
)
from motzkin.recurrence import PolynomialError, RecParams, RecurrenceError, w_generate
from motzkin.transform_group import SequenceError, UnitSequence, apply_pipeline, parse_pipeline
from motzkin.verify_suites import Grid, Suite, run_suite
from motzkin.weight_numeric import (
    QuadratureError,
    WeightError,
    WeightSpec,
    quad_moment,
    weight_csv,
    write_weight_csv,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2
EXIT_NO_CONVERGENCE = 3


class UsageError(Exception):
    """Bad flags; reported with exit status 1 instead of argparse's 2."""


class CommandParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: error: {message}")


_NEGATIVE_FRACTION = re.compile(r"^-\d+/\d+$")


def rational(text: str) -> Fraction:
    """argparse type for "p/q" or integer literals."""
    try:
        return as_scalar(text)
    except SeriesError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _attach_negative_fractions(argv: Sequence[str]) -> List[str]:
    """Rewrites ``--k -1/2`` as ``--k=-1/2``; argparse reads a bare -1/2 as an option."""
    out: List[str] = []
    for token in argv:
        if out and _NEGATIVE_FRACTION.match(token) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={token}"
        else:
            out.append(token)
    return out


# ----------------------- Subcommands -----------------------

def cmd_seq(args: argparse.Namespace) -> int:
    print(w_generate(RecParams(args.b, args.h, args.k), args.terms))
    return EXIT_OK


def cmd_transform(args: argparse.Namespace) -> int:
    try:
        seq = UnitSequence.of(as_scalar(v) for v in args.input.split(","))
    except SeriesError as exc:
        raise SequenceError(f"--input: {exc}") from exc
    print(apply_pipeline(seq, parse_pipeline(args.pipe)))
    return EXIT_OK


def cmd_moments(args: argparse.Namespace) -> int:
    req = MomentRequest(args.h, args.k, args.n)
    if args.method != "all":
        print(format_scalars(mu_prefix(req, MomentMethod(args.method))))
        return EXIT_OK
    if req.n_max > PATH_ENUMERATION_BOUND:
        logger.warning("n=%d exceeds the path bound %d; the paths row is omitted",
                       req.n_max, PATH_ENUMERATION_BOUND)
    routes = all_routes(req)
    width = max(len(m.value) for m in routes)
    for method, values in routes.items():
        print(f"{method.value:<{width}}  {format_scalars(values)}")
    agree = len({tuple(v) for v in routes.values()}) == 1
    print("AGREE" if agree else "DISAGREE")
    return EXIT_OK if agree else EXIT_VERIFY_FAILED


def cmd_paths(args: argparse.Namespace) -> int:
    if args.list:
        for path in enumerate_paths(args.n):
            print(f"{path.as_udh()} {path.monomial()}")
        print(f"total: {format_scalar(mu_paths(args.n, args.h, args.k))}")
    else:
        print(format_scalar(mu_paths(args.n, args.h, args.k)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    suites = list(Suite) if args.suite == "all" else [Suite(args.suite)]
    grid = Grid(args.grid)
    ok = True
    for suite in suites:
        report = run_suite(suite, grid)
        for line in report.lines():
            print(line)
        ok = ok and report.ok
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_weight(args: argparse.Namespace) -> int:
    spec = WeightSpec(args.h, args.k)
    write_weight_csv(weight_csv(spec, args.samples), sys.stdout)
    if args.quad is None:
        return EXIT_OK
    if not 0 <= args.quad <= QUAD_MAX_MOMENT:
        raise WeightError(f"--quad must lie in 0..{QUAD_MAX_MOMENT}, got {args.quad}")
    exact = mu_recur(MomentRequest(Fraction(str(args.h)), Fraction(str(args.k)), args.quad))
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(("n", "quad", "exact", "rel_error"))
    for n in range(args.quad + 1):
        value = quad_moment(n, spec)
        target = float(exact[n])
        rel = abs(value - target) / max(1.0, abs(target))
        writer.writerow((n, f"{value:.12g}", format_scalar(exact[n]), f"{rel:.3g}"))
    return EXIT_OK


# ----------------------- Parser -----------------------

def build_parser() -> CommandParser:
    parser = CommandParser(prog="motzkin", description="Sequence transforms, recurrences and generalized Motzkin moments.")
    parser.add_argument("-v", "--verbose", action="store_true", help="DEBUG logging on stderr")
    parser.add_argument("--log", action="store_true", help=f"also write a DEBUG log to {LOG_FILENAME}")
    parser.add_argument("--log-file", default=None, help="also write a DEBUG log to this file")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CommandParser)

    p = sub.add_parser("seq", help="prefix of W(1, b, h, k)")
    p.add_argument("--b", type=rational, required=True)
    p.add_argument("--h", type=rational, required=True)
    p.add_argument("--k", type=rational, required=True)
    p.add_argument("--terms", type=int, default=10)
    p.set_defaults(handler=cmd_seq)

    p = sub.add_parser("transform", help="apply a transform pipeline to a sequence")
    p.add_argument("--input", required=True, help="comma list starting with 1, e.g. 1,1,2,4")
    p.add_argument("--pipe", required=True, help='e.g. "invert:1|binomial:-1/2|eta|epsilon|gamma"')
    p.set_defaults(handler=cmd_transform)

    p = sub.add_parser("moments", help="mu_0..mu_n(h, k)")
    p.add_argument("--h", type=rational, required=True)
    p.add_argument("--k", type=rational, required=True)
    p.add_argument("--n", type=int, default=DEFAULT_MOMENT_TERMS)
    p.add_argument("--method", choices=[m.value for m in MomentMethod] + ["all"], default="recur")
    p.set_defaults(handler=cmd_moments)

    p = sub.add_parser("paths", help="mu_n(h, k) by weighted Motzkin path enumeration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=rational, default=Fraction(1))
    p.add_argument("--k", type=rational, default=Fraction(1))
    p.add_argument("--list", action="store_true", help="print every path as H/U/D with its weight monomial")
    p.set_defaults(handler=cmd_paths)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", choices=[s.value for s in Suite] + ["all"], required=True)
    p.add_argument("--grid", choices=[g.value for g in Grid], default=Grid.SMALL.value)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("weight", help="CSV samples of the weight function (k > 0)")
    p.add_argument("--h", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--samples", type=int, default=DEFAULT_WEIGHT_SAMPLES)
    p.add_argument("--quad", type=int, default=None, metavar="N",
                   help="append quadrature vs exact rows for mu_0..mu_N")
    p.set_defaults(handler=cmd_weight)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_attach_negative_fractions(sys.argv[1:] if argv is None else argv))
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK

    log_file = args.log_file or (LOG_FILENAME if args.log else None)
    setup_logging(logging.DEBUG if args.verbose else logging.WARNING, log_file)
    try:
        return args.handler(args)
    except QuadratureError as exc:
        logger.error("Quadrature failed: %s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except (SeriesError, SequenceError, RecurrenceError, PolynomialError, MomentError, WeightError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> int:
    return run(argv)
