"""
Command line front-end.

    python -m ritt_groebner gb fixtures/a.sys
    python -m ritt_groebner ritt fixtures/a.sys --json
    python -m ritt_groebner decompose fixtures/c.sys --strong --certificates

Exit codes: 0 success, 1 verification failure, 2 usage, input or engine error.
Results go to stdout; diagnostics and logs go to stderr.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from pydantic import ValidationError

from .constants import (
    DEFAULT_MAX_NODES,
    DEFAULT_SAMPLE_COUNT,
    DEFAULT_SEED,
    DEFAULT_WORKERS,
    EXIT_SUCCESS,
    EXIT_USAGE_ERROR,
    EXIT_VERIFICATION_FAILED,
)
from .render_utils import render_json, render_text
from .tools import ANALYSIS_COMMANDS, RunOptions, analyze_system, decompose_system, verify_system

COMMAND_HELP = {
    "gb": "reduced plex Gröbner basis",
    "wchar": "W-characteristic set",
    "classify": "ascending/regular/normal classification with the irregularity report",
    "ritt": "Ritt characteristic set or the reason there is none",
    "decompose": "decomposition into normal triangular sets",
    "verify": "characteristic-property, charset, report and decomposition checks",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="system file (vars:, optional field:, polys:)")
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    common.add_argument("--certificates", action="store_true",
                        help="include pseudo-remainder, resultant and cover certificates")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled ideal elements")
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLE_COUNT,
                        help="sampled ideal elements per check")
    common.add_argument("--field", default=None, help="coefficient field, q or fp:P (overrides the file)")
    common.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES, help="decomposition node budget")
    common.add_argument("--workers", type=int, default=DEFAULT_WORKERS,
                        help="threads for decomposition and verification")
    common.add_argument("--verbose", action="store_true", help="debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="ritt_groebner",
        description="Exact Gröbner bases, W-characteristic sets and normal decompositions.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    for command, text in COMMAND_HELP.items():
        sub = subparsers.add_parser(command, parents=[common], help=text, description=text)
        if command in ("decompose", "verify"):
            sub.add_argument("--strong", action="store_true", help="refine leaves to strong regular bases")
    return parser


def _configure_logging(verbose: bool) -> None:
    package_logger = logging.getLogger("ritt_groebner")
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s %(message)s"))
    package_logger.addHandler(handler)
    package_logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


def dispatch_command(command: str, text: str, options: RunOptions) -> Dict[str, Any]:
    """Run one subcommand on system text and return its status dictionary."""
    if command in ANALYSIS_COMMANDS:
        return analyze_system(text, command, options)
    if command == "decompose":
        return decompose_system(text, options)
    return verify_system(text, options)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, run one subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return EXIT_SUCCESS if not exit_request.code else EXIT_USAGE_ERROR
    _configure_logging(args.verbose)

    try:
        options = RunOptions(
            json_output=args.json,
            certificates=args.certificates,
            seed=args.seed,
            sample_count=args.samples,
            field=args.field,
            max_nodes=args.max_nodes,
            workers=args.workers,
            strong=getattr(args, "strong", False),
        )
    except ValidationError as error:
        print(f"error: invalid options: {error}", file=sys.stderr)
        return EXIT_USAGE_ERROR

    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as error:
        print(f"error: cannot read {args.file}: {error.strerror or error}", file=sys.stderr)
        return EXIT_USAGE_ERROR

    result = dispatch_command(args.command, text, options)
    if result["status"] == "error":
        print(f"error: {result['message']}", file=sys.stderr)
        return EXIT_USAGE_ERROR

    payload = result["payload"]
    print(render_json(payload) if options.json_output else render_text(payload))
    if result["status"] == "failed":
        for failure in result["failures"]:
            print(f"failed: {failure}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    return EXIT_SUCCESS


def main() -> None:
    sys.exit(run())
