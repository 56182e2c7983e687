"""Validation helpers shared by the core modules and the CLI."""

import math
import re
from typing import List, Sequence

from ..core.errors import DomainError

_DIMS_PATTERN = re.compile(r'^\s*\d+(\s*,\s*\d+)*\s*$')


def parse_dims(text: str) -> List[int]:
    """
    Parse a partition given as comma-separated integers.

    Examples: "2,2" -> [2, 2], "2, 2, 2" -> [2, 2, 2]

    Raises:
        DomainError: malformed text or a non-positive factor
    """
    if not text or not _DIMS_PATTERN.match(text):
        raise DomainError(f"dims must look like '2,2', got {text!r}")
    dims = [int(part) for part in text.split(',')]
    validate_partition(dims)
    return dims


def validate_partition(dims: Sequence[int], dim: int = None) -> List[int]:
    """
    Check that every factor is a positive integer and, when ``dim`` is given,
    that the factors multiply to it.
    """
    dims = list(dims)
    if not dims:
        raise DomainError("partition must have at least one factor")
    for m in dims:
        if isinstance(m, bool) or int(m) != m or m < 1:
            raise DomainError(f"partition factors must be positive integers, got {dims}")
    dims = [int(m) for m in dims]
    if dim is not None and math.prod(dims) != dim:
        raise DomainError(f"partition {dims} does not multiply to dimension {dim}")
    return dims


def check_range(name: str, value: float, low: float, high: float,
                low_open: bool = False, high_open: bool = False, slack: float = 0.0) -> float:
    """
    Check ``low <= value <= high`` (or open ends) allowing ``slack`` of
    rounding on closed ends; returns the value clipped into the range.
    """
    value = float(value)
    if math.isnan(value):
        raise DomainError(f"{name} is NaN")
    below = value <= low if low_open else value < low - slack
    above = value >= high if high_open else value > high + slack
    if below or above:
        left = '(' if low_open else '['
        right = ')' if high_open else ']'
        raise DomainError(f"{name} must lie in {left}{low}, {high}{right}, got {value}")
    return min(max(value, low), high)


def is_fixture_name(ref: str) -> bool:
    """Fixture names are bare identifiers; anything else is treated as a path."""
    return bool(re.match(r'^[a-z][a-z0-9_]*$', ref))
