"""Exception hierarchy for gatesplit."""

import math
from typing import Any, Dict, Optional


class GatesplitError(Exception):
    """Base class for all gatesplit errors."""


class DomainError(GatesplitError, ValueError):
    """An argument lies outside the range an operation accepts."""


class DimensionMismatchError(GatesplitError, ValueError):
    """Two operands (or a gate and a partition) disagree on dimension."""


class NotUnitaryError(GatesplitError, ValueError):
    """Raised when a matrix fails the unitarity check at its tolerance."""

    def __init__(self, defect: float, tolerance: float):
        self.defect = defect
        self.tolerance = tolerance
        super().__init__(
            f"Matrix is not unitary: defect {defect:.3e} exceeds tolerance {tolerance:.1e}"
        )


class SingularMatrixError(GatesplitError, ValueError):
    """The nearest unitary of a singular matrix is not unique."""


class GateFormatError(GatesplitError, ValueError):
    """Malformed gate JSON, unreadable gate file or unknown fixture name."""


class NumericalError(GatesplitError, ArithmeticError):
    """
    Numerical failure: eigen-iteration did not converge or a computed result
    broke one of its invariants.
    """

    def __init__(self, message: str, residual: Optional[float] = None):
        self.message = message
        self.residual = residual
        super().__init__(message if residual is None else f"{message} (residual {residual:.3e})")

    def to_dict(self) -> Dict[str, Any]:
        """Diagnostic document printed on stderr by the CLI."""
        residual = self.residual
        if residual is not None and not math.isfinite(residual):
            residual = None
        return {
            'error': 'numerical',
            'message': self.message,
            'residual': residual,
        }
