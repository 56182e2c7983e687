"""Utility modules."""

from .colors import Colors
from .config import PsoConfig, ConfigValidationError, threads_from_env
from .rng import substream
from .validators import parse_dims, validate_partition, check_range

__all__ = [
    'Colors',
    'PsoConfig',
    'ConfigValidationError',
    'threads_from_env',
    'substream',
    'parse_dims',
    'validate_partition',
    'check_range',
]
