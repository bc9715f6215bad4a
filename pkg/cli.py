#!/usr/bin/env python3
"""
genjacobi Command-Line Interface

Main entry point for configuration-driven experiments.

Exit codes: 0 all enabled suites pass, 1 tolerance failure or stage
error, 2 usage / configuration / IO error.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

# Add src to path
sys.path.insert(0, str(Path(__file__).parent / "src"))

from dotenv import load_dotenv

from genjacobi.config import configure_logging, load_config
from genjacobi.errors import ConfigError, IoError
from genjacobi.orchestrator import ExperimentRunner, render_summary

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genjacobi",
        description="Recurrence coefficients and asymptotics for generalized Jacobi weights",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="Run the enabled suites of a configuration")
    run.add_argument("config", type=Path, help="Experiment configuration (YAML)")
    run.add_argument("--out", type=Path, default=None,
                     help="Output directory (default: config 'outputs' or $GENJACOBI_OUT)")
    run.add_argument("--paranoid", action="store_true",
                     help="Re-run the Stieltjes procedure at doubled quadrature density")
    run.add_argument("--json", action="store_true",
                     help="Print the run summary as JSON instead of text")

    verify = sub.add_parser("verify-parametrix", help="Run only the parametrix verification suite")
    verify.add_argument("config", type=Path, help="Experiment configuration (YAML)")
    verify.add_argument("--out", type=Path, default=None, help="Output directory")

    return parser


def _banner(title: str) -> None:
    print("=" * 60)
    print(title)
    print("=" * 60)
    print()


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point."""
    load_dotenv()
    args = build_parser().parse_args(argv)
    as_json = getattr(args, "json", False)

    try:
        configure_logging()
        config = load_config(args.config)
        configure_logging(config.log_level)
    except (ConfigError, IoError) as e:
        _banner("CONFIGURATION ERROR")
        print(f"{args.config}: {e}")
        return EXIT_USAGE

    config = config.with_overrides(
        outputs=args.out,
        paranoid=True if getattr(args, "paranoid", False) else None,
    )

    if not as_json:
        _banner("genjacobi - Generalized Jacobi Recurrence Experiments")
        print(f"Configuration: {args.config}")
        print(f"Output directory: {config.outputs}")
        print()

    try:
        result = ExperimentRunner(config).run(only_parametrix=args.command == "verify-parametrix")
    except IoError as e:
        _banner("OUTPUT ERROR")
        print(str(e))
        return EXIT_USAGE

    if as_json:
        print(result.summary.to_json(indent=2))
    else:
        print(render_summary(result.summary))

    return EXIT_OK if result.passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
