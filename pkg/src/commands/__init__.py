"""
CLI Commands

Each module exposes register_*_command(subparsers). Handlers return the
process exit code:

    0 pass, 1 verification failure, 2 config error, 3 numeric failure
"""

import logging
import sys
from contextlib import contextmanager
from typing import Callable

from ..utils.report_builder import build_error_document
from ..utils.validators import DomainError, EvaluationDomainError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_CONFIG_ERROR = 2
EXIT_NUMERIC_FAILURE = 3


@contextmanager
def numeric_stage():
    """
    Treat DomainError raised inside the block as a numeric failure.

    Wraps the computation that follows config loading.
    """
    try:
        yield
    except DomainError as e:
        raise EvaluationDomainError(str(e)) from e


def run_guarded(action: Callable[[], int], message: str) -> int:
    """
    Run a command body and map failures to exit codes.

    Numeric failures (QuadratureError, EvaluationDomainError and other
    ArithmeticError) exit 3; config failures (pydantic ValidationError,
    DomainError outside numeric_stage, OSError) exit 2.
    The JSON error document goes to stderr.
    """
    try:
        return action()
    except ArithmeticError as e:
        logger.error(f"{message}: {e}")
        print(build_error_document(e, message), file=sys.stderr)
        return EXIT_NUMERIC_FAILURE
    except (ValueError, OSError) as e:
        logger.error(f"{message}: {e}")
        print(build_error_document(e, message), file=sys.stderr)
        return EXIT_CONFIG_ERROR
