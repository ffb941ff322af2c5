"""Command-line front end: exact counts, table rows, identity verification
with JSON reports, and bijection tracing with SVG output."""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import comb

from .bijection import RestrictedPair, inverse, trace
from .counting import (catalan, count_ballot_dp, count_pairs_height_diff,
                       super_catalan)
from .identities import (ALL_IDENTITIES, VerificationReport, report_to_dict,
                         run_identity)
from .lattice_paths import Path, PathClass
from .svg import render_trace

ORDER_MIN = 1
ORDER_MAX = 200
ORDER_ENV = "SUPERCAT_ORDER"


def _order_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"order must be an integer, got {text!r}")
    if not ORDER_MIN <= value <= ORDER_MAX:
        raise argparse.ArgumentTypeError(
            f"order must be in [{ORDER_MIN}, {ORDER_MAX}], got {value}")
    return value


def _nonneg_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supercat",
        description="Exact lattice-path counting and super Catalan identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="print one exact count")
    kinds = count.add_subparsers(dest="kind", required=True)
    c_catalan = kinds.add_parser("catalan", help="Catalan number C_n")
    c_catalan.add_argument("--n", type=_nonneg_arg, required=True)
    c_super = kinds.add_parser("super", help="super Catalan number T(m,n)")
    c_super.add_argument("--m", type=_nonneg_arg, required=True)
    c_super.add_argument("--n", type=_nonneg_arg, required=True)
    c_pairs = kinds.add_parser(
        "pairs", help="Dyck path pairs of total semilength n, heights within --diff")
    c_pairs.add_argument("--n", type=_nonneg_arg, required=True)
    c_pairs.add_argument("--diff", type=_nonneg_arg, default=1)
    c_ballot = kinds.add_parser(
        "ballot", help="nonnegative paths by step count, end level, height bound")
    c_ballot.add_argument("--steps", type=_nonneg_arg, required=True)
    c_ballot.add_argument("--end-level", type=_nonneg_arg, default=0)
    bound = c_ballot.add_mutually_exclusive_group()
    bound.add_argument("--max-height", type=int, default=None)
    bound.add_argument("--exact-height", type=int, default=None)

    table = sub.add_parser("table", help="print the row T(m, 0..nmax)")
    table.add_argument("--m", type=_nonneg_arg, required=True)
    table.add_argument("--nmax", type=_nonneg_arg, required=True)

    verify = sub.add_parser("verify", help="verify one identity (or all)")
    verify.add_argument("identity", choices=ALL_IDENTITIES + ("all",))
    verify.add_argument("--order", type=_order_arg, default=None,
                        help=f"check order, {ORDER_MIN}..{ORDER_MAX} "
                             f"(default: per-identity, or ${ORDER_ENV})")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--out", default=None, help="write the report to a file")

    bijection = sub.add_parser("bijection", help="apply the pair-to-path bijection")
    direction = bijection.add_mutually_exclusive_group(required=True)
    direction.add_argument("--forward", nargs=2, metavar=("P", "Q"))
    direction.add_argument("--inverse", metavar="D")
    bijection.add_argument("--svg", default=None, help="write a trace diagram")

    return parser


def _resolve_order(args) -> int | None:
    if args.order is not None:
        return args.order
    env = os.environ.get(ORDER_ENV)
    if env is None:
        return None
    try:
        value = int(env)
    except ValueError:
        raise ValueError(f"{ORDER_ENV} must be an integer, got {env!r}")
    if not ORDER_MIN <= value <= ORDER_MAX:
        raise ValueError(f"{ORDER_ENV} must be in [{ORDER_MIN}, {ORDER_MAX}], got {value}")
    return value


def dumps_report(data) -> str:
    """Canonical JSON encoding: fixed key order, two-space indent."""
    return json.dumps(data, indent=2) + "\n"


def format_report_text(report: VerificationReport) -> str:
    if report.passed:
        status = "PASS"
    else:
        fm = report.first_mismatch
        power = ",".join(map(str, fm.power)) if isinstance(fm.power, tuple) else fm.power
        status = f"FAIL at power {power}: lhs {fm.lhs} rhs {fm.rhs}"
    head = f"{report.identity}: {status} (order {report.order}, {report.elapsed_ms} ms)"
    return "\n".join([head] + [f"  note: {note}" for note in report.notes])


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_count(args) -> int:
    if args.kind == "catalan":
        print(catalan(args.n))
    elif args.kind == "super":
        print(super_catalan(args.m, args.n))
    elif args.kind == "pairs":
        print(count_pairs_height_diff(args.n, args.diff))
    else:
        path_class = PathClass(end_level=args.end_level,
                               max_height=args.max_height,
                               exact_height=args.exact_height)
        print(count_ballot_dp(path_class, args.steps))
    return 0


def _cmd_table(args) -> int:
    if args.m == 0:
        row = [comb(2 * n, n) for n in range(args.nmax + 1)]
        print("note: T(0,0) = 1/2 is not an integer; printing the doubled row "
              "2*T(0,n), the middle binomial coefficients", file=sys.stderr)
    else:
        row = [super_catalan(args.m, n) for n in range(args.nmax + 1)]
    print(" ".join(str(value) for value in row))
    return 0


def _cmd_verify(args) -> int:
    order = _resolve_order(args)
    identities = ALL_IDENTITIES if args.identity == "all" else (args.identity,)
    reports = [run_identity(identity, order) for identity in identities]
    passed = all(report.passed for report in reports)
    if args.format == "json":
        if args.identity == "all":
            data = {"passed": passed,
                    "reports": [report_to_dict(report) for report in reports]}
        else:
            data = report_to_dict(reports[0])
        text = dumps_report(data)
    else:
        lines = [format_report_text(report) for report in reports]
        if args.identity == "all":
            failed = [report.identity for report in reports if not report.passed]
            lines.append("all identities passed" if passed
                         else "failed: " + ", ".join(failed))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if passed else 1


def _cmd_bijection(args) -> int:
    if args.forward is not None:
        p, q = Path(args.forward[0]), Path(args.forward[1])
        record = trace(RestrictedPair(p, q))
        print(record.output)
    else:
        pair = inverse(Path(args.inverse))
        record = trace(pair)
        print(f"({pair.p}, {pair.q})")
    if args.svg:
        with open(args.svg, "w") as handle:
            handle.write(render_trace(record))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "count":
            return _cmd_count(args)
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_bijection(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())
