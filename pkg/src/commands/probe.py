"""
Kernel Probe Command

Prints kernel values as CSV for debugging.
"""

import csv
import logging
import sys

from ..kernels import T_KERNELS, W_KERNELS
from ..utils.report_builder import PROBE_HEADER, build_probe_row
from ..utils.validators import DomainError
from . import EXIT_OK, run_guarded

logger = logging.getLogger(__name__)


def parse_point(text: str) -> complex:
    """
    Parse "re,im" (or a bare real number) into a complex point.

    Raises:
        DomainError: If the text is not one or two numbers
    """
    parts = [p.strip() for p in text.split(",")]
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise DomainError(f"Expected a point as 're,im', got {text!r}")


def register_probe_command(subparsers):
    """
    Register the kernel-probe subcommand.

    Args:
        subparsers: argparse sub-parser collection
    """
    parser = subparsers.add_parser("kernel-probe", help="Print kernel values as CSV")
    parser.add_argument("--kernel", required=True, choices=sorted(list(T_KERNELS) + list(W_KERNELS)))
    parser.add_argument("--z", required=True, help="Evaluation point 're,im'")
    parser.add_argument("--t", type=float, action="append", default=[], help="Angle (repeatable)")
    parser.add_argument("--w", action="append", default=[], help="Second disk point 're,im' (repeatable)")

    def cmd_kernel_probe(args) -> int:
        """Evaluate one kernel at z against every --t (or --w).

        Args:
            args: Parsed arguments

        Returns:
            int: Exit code
        """
        def body() -> int:
            z = parse_point(args.z)
            writer = csv.writer(sys.stdout, lineterminator="\n")
            writer.writerow(PROBE_HEADER)
            if args.kernel in W_KERNELS:
                if not args.w:
                    raise DomainError(f"Kernel {args.kernel} needs at least one --w")
                for w in map(parse_point, args.w):
                    value = complex(W_KERNELS[args.kernel](z, w))
                    writer.writerow(build_probe_row(z, w, value))
            else:
                if not args.t:
                    raise DomainError(f"Kernel {args.kernel} needs at least one --t")
                for t in args.t:
                    value = complex(T_KERNELS[args.kernel](z, t))
                    writer.writerow(build_probe_row(z, complex(t, 0.0), value))
            logger.debug(f"Probed {args.kernel} at {z}")
            return EXIT_OK

        return run_guarded(body, "Failed to probe kernel")

    parser.set_defaults(handler=cmd_kernel_probe)
