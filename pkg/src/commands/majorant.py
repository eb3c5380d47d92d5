"""
Majorant Command

Runs the fast, slow and Hardy-Littlewood condition checks for one majorant.
"""

import logging

from ..config import parse_majorant
from ..majorants import PowerLaw, check_fast, check_hardy_littlewood, check_slow, validate
from ..utils.report_builder import dump_document
from ..utils.validators import DomainError
from . import EXIT_OK, EXIT_VERIFICATION_FAILED, run_guarded

logger = logging.getLogger(__name__)


def register_majorant_command(subparsers):
    """
    Register the check-majorant subcommand.

    Args:
        subparsers: argparse sub-parser collection
    """
    parser = subparsers.add_parser("check-majorant", help="Decide the fast/slow/Hardy-Littlewood conditions")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--majorant", help="Majorant spec as JSON text or a path to a JSON file")
    source.add_argument("--beta", type=float, help="Shorthand for the power law t^beta")
    parser.add_argument("--fast", action="store_true", help="Check the fast (head) condition")
    parser.add_argument("--slow", action="store_true", help="Check the slow (tail) condition")
    parser.add_argument("--hl", action="store_true", help="Check the Hardy-Littlewood condition")
    parser.add_argument("--nu0", type=float, default=1.0, help="Upper end of the fast/slow scan (default: 1)")
    parser.add_argument("--threshold", type=float, default=1e3, help="Divergence threshold (default: 1e3)")

    def cmd_check_majorant(args) -> int:
        """Check the requested integral conditions.

        All three conditions are checked when no flag is given.

        Args:
            args: Parsed arguments

        Returns:
            int: 0 if every requested condition holds, 1 otherwise
        """
        def body() -> int:
            m = PowerLaw(args.beta) if args.beta is not None else parse_majorant(args.majorant)
            validation = validate(m)
            if not validation.valid:
                raise DomainError(f"Not a majorant: {validation.message}")
            wanted = {name for name in ("fast", "slow", "hl") if getattr(args, name)} or {"fast", "slow", "hl"}
            reports = []
            if "fast" in wanted:
                reports.append(check_fast(m, args.nu0, threshold=args.threshold))
            if "slow" in wanted:
                reports.append(check_slow(m, args.nu0, threshold=args.threshold))
            if "hl" in wanted:
                reports.append(check_hardy_littlewood(m, threshold=args.threshold))
            passed = all(r.passed for r in reports)
            regular = None
            if {"fast", "slow"} <= wanted:
                regular = all(r.passed for r in reports if r.condition in ("fast", "slow"))
            document = {
                "success": passed,
                "majorant": m.id,
                "regular": regular,
                "nu0": args.nu0,
                "reports": [r.to_json_dict() for r in reports],
            }
            print(dump_document(document))
            logger.info(f"{m.id}: {'all conditions hold' if passed else 'condition failed'}")
            return EXIT_OK if passed else EXIT_VERIFICATION_FAILED

        return run_guarded(body, "Failed to check majorant")

    parser.set_defaults(handler=cmd_check_majorant)
