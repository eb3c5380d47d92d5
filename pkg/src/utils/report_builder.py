"""
Report Builder Utilities

Helper functions for formatting CSV rows and JSON documents emitted by the CLI.
These utilities keep every numeric output in shortest round-trip form so that
identical runs produce byte-identical files.
"""

import json
import math
from typing import Any, Iterable, List, Sequence

SOLUTION_HEADER = [
    "re", "im",
    "f_re", "f_im",
    "dfdz_re", "dfdz_im",
    "dfdzbar_re", "dfdzbar_im",
    "lambda",
]

PROBE_HEADER = ["z_re", "z_im", "t_or_w_re", "w_im", "value_re", "value_im"]


def format_float(value: float) -> str:
    """
    Format a float with the shortest representation that round-trips.

    Args:
        value: Number to format

    Returns:
        String like "0.1", "1e-12", "inf" or "nan"
    """
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return repr(value)


def format_row(values: Iterable[float]) -> List[str]:
    """Format a sequence of numbers as CSV cells."""
    return [format_float(v) for v in values]


def build_solution_row(z: complex, f: complex, dfdz: complex, dfdzbar: complex) -> List[str]:
    """
    Build one row of the solve CSV.

    Returns:
        Cells in SOLUTION_HEADER order, lambda = |dfdz| + |dfdzbar|
    """
    lam = abs(dfdz) + abs(dfdzbar)
    return format_row([
        z.real, z.imag,
        f.real, f.imag,
        dfdz.real, dfdz.imag,
        dfdzbar.real, dfdzbar.imag,
        lam,
    ])


def build_probe_row(z: complex, second: complex, value: complex) -> List[str]:
    """
    Build one row of the kernel-probe CSV.

    Args:
        z: Evaluation point
        second: Angle t (stored in the real part) or second point w
        value: Kernel value
    """
    return format_row([z.real, z.imag, second.real, second.imag, value.real, value.imag])


def finite_json(value: Any) -> Any:
    """
    Replace non-finite floats in a JSON-ready structure by their format_float text.

    Args:
        value: Nested dicts, lists, tuples and scalars

    Returns:
        The same structure with inf, -inf and nan as "inf", "-inf" and "nan"
    """
    if isinstance(value, float) and not math.isfinite(value):
        return format_float(value)
    if isinstance(value, dict):
        return {key: finite_json(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [finite_json(item) for item in value]
    return value


def dump_document(document: Any) -> str:
    """Serialise a document as strict JSON (no Infinity or NaN tokens)."""
    return json.dumps(finite_json(document), indent=2, allow_nan=False)


def build_success_document(reports: Sequence[Any]) -> str:
    """
    Build the JSON document of a verification run.

    Args:
        reports: Report models exposing to_json_dict()

    Returns:
        Indented JSON string with a success flag and the reports
    """
    payload = [r.to_json_dict() for r in reports]
    success = all(entry.get("pass", True) for entry in payload)
    return dump_document({"success": success, "reports": payload})


def build_error_document(error: Exception, message: str) -> str:
    """Build the JSON error document printed when a command fails."""
    return dump_document({
        "success": False,
        "error": str(error),
        "message": message,
    })
