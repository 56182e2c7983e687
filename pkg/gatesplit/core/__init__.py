"""Core modules: linear algebra, fidelity geometry, optimizer and separation search."""

from .errors import (
    GatesplitError,
    DomainError,
    DimensionMismatchError,
    NotUnitaryError,
    SingularMatrixError,
    NumericalError,
    GateFormatError,
)
from .linalg import UnitaryGate, StateVector
from .spectral import FidelityReport, SpectrumSummary, gate_fidelity_min
from .pso import PsoRun, pso_minimize
from .separation import ProductAnsatz, SeparationResult, approx_separate

__all__ = [
    'GatesplitError',
    'DomainError',
    'DimensionMismatchError',
    'NotUnitaryError',
    'SingularMatrixError',
    'NumericalError',
    'GateFormatError',
    'UnitaryGate',
    'StateVector',
    'FidelityReport',
    'SpectrumSummary',
    'gate_fidelity_min',
    'PsoRun',
    'pso_minimize',
    'ProductAnsatz',
    'SeparationResult',
    'approx_separate',
]
