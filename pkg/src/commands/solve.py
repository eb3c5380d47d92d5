"""
Solve Command

Evaluates the solution field on the configured polar grid and writes one CSV
row per grid point.
"""

import csv
import logging
import sys
from contextlib import contextmanager

from ..config import load_run_config
from ..solver import solve
from ..utils.report_builder import SOLUTION_HEADER, build_solution_row
from . import EXIT_OK, numeric_stage, run_guarded

logger = logging.getLogger(__name__)


@contextmanager
def open_output(path):
    """Yield a text stream for path, or stdout when path is None."""
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", newline="", encoding="utf-8") as handle:
        yield handle


def register_solve_command(subparsers):
    """
    Register the solve subcommand.

    Args:
        subparsers: argparse sub-parser collection
    """
    parser = subparsers.add_parser("solve", help="Evaluate the solution on a polar grid (CSV)")
    parser.add_argument("config", help="Path to the JSON run config")
    parser.add_argument("--output", "-o", default=None, help="CSV path (overrides output.csv)")

    def cmd_solve(args) -> int:
        """Solve the configured problem and write the grid CSV.

        Args:
            args: Parsed arguments with config and output

        Returns:
            int: Exit code
        """
        def body() -> int:
            config = load_run_config(args.config)
            phi, psi, g = config.phi(), config.psi(), config.g()
            points = config.grid.points()
            logger.info(f"Evaluating {len(points)} grid points")
            with numeric_stage():
                field = solve(phi, psi, g, config.quadrature)
                rows = field.evaluate_many(points)
            with open_output(args.output or config.output.csv) as handle:
                writer = csv.writer(handle, lineterminator="\n")
                writer.writerow(SOLUTION_HEADER)
                for z, (f, dfdz, dfdzbar) in zip(points, rows):
                    writer.writerow(build_solution_row(z, f, dfdz, dfdzbar))
            logger.info("Solve finished")
            return EXIT_OK

        return run_guarded(body, "Failed to solve biharmonic problem")

    parser.set_defaults(handler=cmd_solve)
