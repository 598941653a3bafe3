"""
Command-line entry point.

Example:
    python -m src.cli.main formula --n 4 --j 2 --k 2
    python -m src.cli.main betti --n 4 --method both --format json
    python -m src.cli.main shelling --n 5 --check both
    python -m src.cli.main basis --n 4 --j 2
    python -m src.cli.main export --n 3 --what complex --path out/d3.json
    python -m src.cli.main selftest --n-max 5

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 on usage, resource-limit or I/O errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Sequence

from src.cli import commands
from src.cli.report import FORMATS, Report
from src.shelling.order import TIEBREAKS
from src.utils.config import ENV_MAX_N, ENV_SEED
from src.utils.errors import ResourceLimitError
from src.utils.log import configure, warn

EXIT_OK = 0
EXIT_USAGE = 2


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text", help="Report format. Default: text.")
    common.add_argument("--output", type=Path, default=None, help="Write the report to this file instead of stdout.")
    common.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"Random seed for sampled checks. Default: {ENV_SEED} or 0.",
    )
    common.add_argument("--verbose", action="store_true", help="Log each step to stderr.")
    common.add_argument("--quiet", action="store_true", help="Suppress progress bars and step logging.")
    common.add_argument("--timing", action="store_true", help="Include wall time in the report.")
    return common


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="parthom",
        description=(
            "Build the partial-partition complex D_n, compute its integer homology and verify "
            f"its counting, shelling and cycle-basis results. {ENV_MAX_N} raises size ceilings."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()

    p = sub.add_parser("formula", parents=[common], help="Closed-form D(n,j,k) with enumeration cross-check.")
    p.add_argument("--n", type=int, required=True, help="Ground set size.")
    p.add_argument("--j", type=int, required=True, help="Number of blocks.")
    p.add_argument("--k", type=int, required=True, help="Number of non-singleton blocks.")
    p.set_defaults(handler=lambda a: commands.cmd_formula(a.n, a.j, a.k))

    p = sub.add_parser("betti", parents=[common], help="Reduced Betti numbers of D_n.")
    p.add_argument("--n", type=int, required=True, help="Ground set size.")
    p.add_argument("--method", choices=commands.BETTI_METHODS, default="both", help="Default: both.")
    p.set_defaults(handler=lambda a: commands.cmd_betti(a.n, a.method))

    p = sub.add_parser("shelling", parents=[common], help="Verify the decreasing-size shelling of D_n.")
    p.add_argument("--n", type=int, required=True, help="Ground set size.")
    p.add_argument("--check", choices=commands.SHELLING_CHECKS, default="both", help="Default: both.")
    p.add_argument("--tiebreak", choices=TIEBREAKS, default="lex", help="Order among equal-size facets. Default: lex.")
    p.set_defaults(handler=lambda a: commands.cmd_shelling(a.n, a.check, a.tiebreak))

    p = sub.add_parser("basis", parents=[common], help="Cross-polytope cycle basis of D_n.")
    p.add_argument("--n", type=int, required=True, help="Ground set size.")
    p.add_argument("--j", type=int, default=None, help="Number of blocks (homology degree j-1). Default: all.")
    p.add_argument("--no-iso", dest="verify_iso", action="store_false", help="Skip the cross-polytope isomorphism check.")
    p.add_argument("--samples", type=int, default=None, help="Sampled pairs when n is too large for exhaustive checks. Default: 50.")
    p.set_defaults(handler=lambda a: commands.cmd_basis(a.n, a.j, a.verify_iso, a.samples, a.seed))

    p = sub.add_parser("export", parents=[common], help="Write D_n (or its full report) as JSON.")
    p.add_argument("--n", type=int, required=True, help="Ground set size.")
    p.add_argument("--what", choices=commands.EXPORTS, default="complex", help="Default: complex.")
    p.add_argument("--path", type=Path, required=True, help="Destination JSON file.")
    p.set_defaults(handler=lambda a: commands.cmd_export(a.n, a.what, a.path))

    p = sub.add_parser("selftest", parents=[common], help="Run every verification up to --n-max.")
    p.add_argument("--n-max", type=int, default=5, help="Largest ground set size. Default: 5.")
    p.add_argument("--inject-fault", choices=commands.FAULTS, default=None, help="Corrupt one boundary sign; the run must fail.")
    p.add_argument("--samples", type=int, default=None, help="Sampled pairs for n = 6. Default: 50.")
    p.set_defaults(handler=lambda a: commands.cmd_selftest(a.n_max, a.inject_fault, a.samples, a.seed))

    return parser.parse_args(argv)


def emit(report: Report, fmt: str, output: Path | None) -> None:
    text = report.render(fmt)
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    configure(verbose=args.verbose, quiet=args.quiet)
    start = time.perf_counter()
    try:
        report = args.handler(args)
        if args.timing:
            report.wall_time = round(time.perf_counter() - start, 3)
        emit(report, args.format, args.output)
    except ResourceLimitError as e:
        warn(str(e))
        return EXIT_USAGE
    except (ValueError, OSError) as e:
        warn(f"Error: {e}")
        return EXIT_USAGE
    if not report.verified:
        failed = sorted(name for name, ok in report.checks.items() if not ok)
        warn(f"{args.command}: failed checks: {', '.join(failed)}")
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
