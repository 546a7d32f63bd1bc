#!/usr/bin/env python3

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from cli.report_format import render, validation_errors
from cli.suite_runner import ALL_SUITES, FORMATS, SUITE_IDS, SuiteSpec, format_suite_listing, run_suite
from models.errors import ConfigError
from utils.logger import logger

EXIT_PASS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="susy-verifier", description="Exact verification of supersymmetry algebra identities")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    verify = commands.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", choices=SUITE_IDS + (ALL_SUITES,), help="suite to run")
    verify.add_argument("--list", action="store_true", help="list suites and their checks, then exit")
    verify.add_argument("--N", type=int, default=1, dest="N", help="number of symplectic pairs for the rigid 6d model")
    verify.add_argument("--jet-order", type=int, default=4, help="maximum derivative order K")
    verify.add_argument("--tower-depth", type=int, default=4, help="deepest nested gauge charge")
    verify.add_argument("--jobs", type=int, default=1, help="worker processes")
    verify.add_argument("--format", choices=FORMATS, default="json")
    verify.add_argument("--out", default="-", help="report path, '-' for stdout")
    return parser


def write_report(text: str, out: str) -> bool:
    if out == "-":
        sys.stdout.write(text)
        return True
    path = Path(out)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        print(f"Failed to write report to {path}: {e}", file=sys.stderr)
        return False
    logger.info(f"Wrote report | Path: {path}")
    return True


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.list:
        print(format_suite_listing())
        return EXIT_PASS
    if args.suite is None:
        print("verify: --suite is required unless --list is given", file=sys.stderr)
        return EXIT_USAGE

    spec = SuiteSpec(suite=args.suite, N=args.N, jet_order=args.jet_order, tower_depth=args.tower_depth,
                     jobs=args.jobs, format=args.format, out=args.out)
    try:
        spec.validate()
    except ConfigError as e:
        print(f"verify: {e}", file=sys.stderr)
        return EXIT_USAGE

    report = run_suite(spec)
    errors = validation_errors(report)
    if errors:
        for error in errors:
            logger.error(f"Report schema violation | {error}")
        return EXIT_FAILURE
    if not write_report(render(report, spec.format), spec.out):
        return EXIT_FAILURE
    return EXIT_PASS if report['pass'] else EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
