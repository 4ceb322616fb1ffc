"""
Value conversion helpers shared by the exporters.

- numpy scalars and arrays to Python natives (for JSON)
- fixed significant-digit rendering of numbers (for CSV)
"""

import math
from typing import Any, Optional

import numpy as np

from seconet.constants import MISSING_VALUE, SIGNIFICANT_DIGITS


def to_native(value: Any) -> Any:
    """
    Recursively convert numpy types to Python natives.

    Objects with a ``to_dict()`` method are converted through it.

    Example:
        >>> to_native({"k": np.array([1, 2]), "g": np.float64(2.5)})
        {'k': [1, 2], 'g': 2.5}
    """
    if hasattr(value, "to_dict") and callable(getattr(value, "to_dict")):
        return to_native(value.to_dict())
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (list, tuple)):
        return [to_native(v) for v in value]
    if isinstance(value, dict):
        return {k: to_native(v) for k, v in value.items()}
    return value


def format_number(value: Optional[Any], digits: int = SIGNIFICANT_DIGITS) -> str:
    """Render ``value`` for CSV: integers as-is, floats with ``digits`` significant digits, missing as NA."""
    if value is None:
        return MISSING_VALUE
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        if math.isnan(value):
            return MISSING_VALUE
        return f"{float(value):.{digits}g}"
    return str(value)


def parse_number(text: str) -> Optional[float]:
    """Inverse of :func:`format_number` for numeric cells; NA and blank become ``None``."""
    text = text.strip()
    if text in ("", MISSING_VALUE):
        return None
    return float(text)
