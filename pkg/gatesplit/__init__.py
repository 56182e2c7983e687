"""
gatesplit
=========

Gate fidelity and approximate separation of multi-partite quantum gates.

Usage:
    from gatesplit import load_fixture, ProductAnsatz, approx_separate

    cnot = load_fixture('cnot')
    result = approx_separate(cnot, ProductAnsatz((2, 2)))
    print(f"F_min = {result.f_min:.4f}, d_max = {result.d_max:.4f}")

CLI:
    gatesplit fidelity --a cnot --b cz
    gatesplit separate --target cnot --dims 2,2 --epsilon 0.3
    gatesplit experiment figure2 --out results/
    gatesplit theorem --trials 200 --dim 4 --seed 7
"""

from .__version__ import __version__, __author__, __description__

# Core exports
from .core.linalg import UnitaryGate, StateVector, nearest_unitary, tensor_gates
from .core.spectral import (
    FidelityReport,
    SpectrumSummary,
    gate_fidelity_min,
    epsilon_to_dmax,
    dmax_to_epsilon,
)
from .core.pso import PsoRun, pso_minimize
from .core.separation import ProductAnsatz, SeparationResult, approx_separate, is_epsilon_separable
from .core.gate_io import load_fixture, resolve_gate

# Configuration
from .utils.config import PsoConfig

__all__ = [
    '__version__',
    '__author__',
    '__description__',
    'UnitaryGate',
    'StateVector',
    'nearest_unitary',
    'tensor_gates',
    'FidelityReport',
    'SpectrumSummary',
    'gate_fidelity_min',
    'epsilon_to_dmax',
    'dmax_to_epsilon',
    'PsoRun',
    'pso_minimize',
    'ProductAnsatz',
    'SeparationResult',
    'approx_separate',
    'is_epsilon_separable',
    'load_fixture',
    'resolve_gate',
    'PsoConfig',
]
