"""
Biharmonic Disk Solver CLI

Entry point: python -m src.cli <subcommand> ...

Subcommands: solve, check-majorant, verify-lemmas, verify-theorem,
kernel-probe. Logs go to stderr; stdout carries only CSV/JSON.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

from dotenv import load_dotenv

from .commands.majorant import register_majorant_command
from .commands.probe import register_probe_command
from .commands.solve import register_solve_command
from .commands.verify import register_verify_commands

logger = logging.getLogger(__name__)


def configure_logging() -> None:
    """Configure root logging on stderr from BIHARM_LOG_LEVEL (default INFO)."""
    level_name = os.getenv("BIHARM_LOG_LEVEL", "INFO").upper()
    level = getattr(logging, level_name, logging.INFO)
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biharm",
        description="Biharmonic Dirichlet problem on the unit disk: solver and verification harness",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    register_solve_command(subparsers)
    register_majorant_command(subparsers)
    register_verify_commands(subparsers)
    register_probe_command(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, dispatch the subcommand and return its exit code.

    argparse usage errors exit with code 2.
    """
    load_dotenv()
    configure_logging()
    args = build_parser().parse_args(argv)
    logger.debug(f"Dispatching {args.command}")
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
