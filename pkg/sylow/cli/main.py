#!/usr/bin/env python3
"""
Command-line entry point: sylow-orbit.

Usage:
    sylow-orbit gen --type C --n 2 --q 3
    sylow-orbit orbits --type B --n 2 --q 3 --json
    sylow-orbit superchar --type B --n 2 --q 3 --basic 1,4 --alpha 1 --json
    sylow-orbit verify --type B --n 1 --q 3

Exit codes:
    0 success, 1 verification failure, 2 usage error, 3 budget exceeded
"""

import argparse
import logging
import sys
from dataclasses import replace

from sylow.cli.commands import COMMANDS, Workspace, require_form
from sylow.cli.report import emit
from sylow.cli.verify import run_verify
from sylow.core.config import FAMILIES, JobConfig, budget_from_env, env_default
from sylow.core.errors import BudgetExceeded, SylowError, VerificationError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def parse_position(value: str) -> tuple[int, int]:
    """
    Parse a matrix position "i,j".

    Examples:
        1,4 -> (1, 4)
    """
    try:
        i, j = (int(part) for part in value.split(","))
    except ValueError as e:
        raise argparse.ArgumentTypeError(
            f"Invalid position: '{value}'. Expected: i,j (e.g., 1,4)"
        ) from e
    return i, j


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--type",
        dest="family",
        type=str.upper,
        choices=FAMILIES,
        required=True,
        help="Classical family",
    )
    common.add_argument("--n", type=int, required=True, help="Rank n")
    common.add_argument("--q", default="3", help="Field size as q or p^e (default: 3)")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="Emit JSON")
    fmt.add_argument("--csv", action="store_true", help="Emit CSV")
    common.add_argument("--seed", type=int, default=None, help="Seed for sampled checks")
    common.add_argument(
        "--max-group-size", type=int, default=None, help="Largest group enumerated (default: 10^7)"
    )
    common.add_argument(
        "--max-orbit-size", type=int, default=None, help="Largest orbit grown (default: 10^6)"
    )
    common.add_argument(
        "--log-level",
        default=None,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level for stderr (default: WARNING)",
    )

    parser = argparse.ArgumentParser(
        prog="sylow-orbit",
        description="Monomial orbits and André–Neto supercharacters of Sylow p-subgroups",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
    # Group data for C_2 over F_3
    %(prog)s gen --type C --n 2 --q 3

    # Orbit decomposition of V̂ as JSON
    %(prog)s orbits --type B --n 2 --q 3 --json

    # One supercharacter, D ∩ pUP = {(1,4)} with Φ = 1
    %(prog)s superchar --type B --n 2 --q 3 --basic 1,4 --alpha 1

    # All acceptance suites
    %(prog)s verify --type B --n 1 --q 3
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    gen = sub.add_parser("gen", parents=[common], help="Group order, field and generators")
    gen.add_argument(
        "--coordinates",
        action="store_true",
        help="List every element of U by its pUP coordinates",
    )
    sub.add_parser("regions", parents=[common], help="Named position regions")
    orbits = sub.add_parser("orbits", parents=[common], help="Orbit decomposition of V̂")
    sub.add_parser("classify", parents=[common], help="Classification of staircase orbits by cores")
    superchar = sub.add_parser("superchar", parents=[common], help="Supercharacter decompositions")
    for cmd in (orbits, superchar):
        cmd.add_argument(
            "--character-table",
            action="store_true",
            help="Emit the characters on conjugacy classes instead of the decomposition",
        )
    superchar.add_argument(
        "--basic",
        type=parse_position,
        action="append",
        default=[],
        help="Position of D ∩ pUP, repeatable (default: every basic set)",
    )
    superchar.add_argument(
        "--alpha",
        type=int,
        action="append",
        default=[],
        help="Φ value for the matching --basic, as a field encoding (default: 1)",
    )
    sub.add_parser("verify", parents=[common], help="Run the acceptance suites")
    return parser


def config_from_args(args: argparse.Namespace) -> JobConfig:
    """Flags win over SYLOW_* environment values, which win over defaults."""
    budget = budget_from_env()
    overrides = {}
    if args.max_group_size is not None:
        overrides["max_group_size"] = args.max_group_size
    if args.max_orbit_size is not None:
        overrides["max_orbit_size"] = args.max_orbit_size
    if overrides:
        budget = replace(budget, **overrides)

    seed = args.seed if args.seed is not None else int(env_default("seed", "0"))
    output = "json" if args.json else "csv" if args.csv else "text"
    return JobConfig(
        family=args.family,
        n=args.n,
        q=args.q,
        command=args.command,
        output=output,
        seed=seed,
        budget=budget,
        basic=list(getattr(args, "basic", [])),
        alpha=list(getattr(args, "alpha", [])),
        coordinates=getattr(args, "coordinates", False),
        character_table=getattr(args, "character_table", False),
    )


def setup_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def run(cfg: JobConfig) -> int:
    """Execute one command; returns the exit code."""
    require_form(cfg)
    ws = Workspace(cfg)
    if cfg.command == "verify":
        report = run_verify(ws)
    else:
        report = COMMANDS[cfg.command](ws)
    emit(report, cfg, sys.stdout)
    return EXIT_OK if report.ok else EXIT_VERIFICATION


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        cfg = config_from_args(args)
        setup_logging(args.log_level or env_default("log_level", "WARNING"))
        return run(cfg)
    except VerificationError as e:
        print(f"❌ Verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFICATION
    except BudgetExceeded as e:
        print(f"❌ Budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except SylowError as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
