"""
Approximate separation of a gate into local factors.

Given a target U on H_1 (x) ... (x) H_n, search local gates U_i so that the
product (x) U_i has gate fidelity at least 1 - eps with U. The search
minimizes d_max((x) U_i^dagger U) over the product of per-factor charts with
``pso_minimize``.
"""

import math
from dataclasses import dataclass, replace
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..utils.config import PsoConfig
from ..utils.logging import get_logger
from ..utils.validators import check_range, validate_partition
from .errors import DimensionMismatchError, DomainError, NumericalError
from .gate_io import gate_to_dict
from .linalg import (
    UnitaryGate,
    adjoint,
    eig_unitary,
    param_unitary,
    tensor_all,
    zyz_angles,
    zyz_unitary,
)
from .pso import PsoRun, pso_minimize
from .spectral import (
    epsilon_to_dmax,
    gate_fidelity_min,
    summarize_eigenvalues,
)

ZYZ = 'zyz'
HERMITIAN = 'hermitian'

# result invariants are checked at these tolerances before a result is returned
EPSILON_IDENTITY_TOLERANCE = 1e-12
CHORD_IDENTITY_TOLERANCE = 1e-9


def _chart_for(m: int) -> str:
    return ZYZ if m == 2 else HERMITIAN


def _chart_size(m: int) -> int:
    return 4 if m == 2 else m * m


class ProductAnsatz:
    """
    Parameterization of U(m_1) x ... x U(m_n).

    Qubit factors use the four-angle ZYZ chart; every other factor uses the
    Hermitian exponential chart with m^2 parameters.
    """

    def __init__(self, partition: Sequence[int]):
        self.partition: Tuple[int, ...] = tuple(validate_partition(partition))
        self.charts: Tuple[str, ...] = tuple(_chart_for(m) for m in self.partition)
        self.sizes: Tuple[int, ...] = tuple(_chart_size(m) for m in self.partition)
        self.total_params: int = sum(self.sizes)

    @property
    def dim(self) -> int:
        return math.prod(self.partition)

    def __repr__(self) -> str:
        return f"ProductAnsatz(partition={list(self.partition)}, total_params={self.total_params})"

    def split(self, params: Sequence[float]) -> List[np.ndarray]:
        """Cut a flat parameter vector into per-factor chunks."""
        params = np.asarray(params, dtype=float).reshape(-1)
        if params.size != self.total_params:
            raise DimensionMismatchError(
                f"ansatz {list(self.partition)} takes {self.total_params} parameters, got {params.size}"
            )
        bounds = np.cumsum((0,) + self.sizes)
        return [params[bounds[i]:bounds[i + 1]] for i in range(len(self.sizes))]

    def build_locals(self, params: Sequence[float]) -> List[UnitaryGate]:
        """Local gates for a parameter vector, one per factor."""
        gates = []
        for m, chart, chunk in zip(self.partition, self.charts, self.split(params)):
            if chart == ZYZ:
                gates.append(zyz_unitary(*(float(p) for p in chunk)))
            else:
                gates.append(param_unitary(chunk, m))
        return gates

    def product_matrix(self, params: Sequence[float]) -> np.ndarray:
        return tensor_all(g.matrix for g in self.build_locals(params))

    def product(self, params: Sequence[float], name: str = 'product') -> UnitaryGate:
        locals_ = self.build_locals(params)
        tol = max(g.tolerance for g in locals_)
        return UnitaryGate.from_matrix(tensor_all(g.matrix for g in locals_), self.partition, tol=tol, name=name)

    def periodic_mask(self) -> List[bool]:
        """ZYZ angles wrap; Hermitian chart entries do not."""
        mask: List[bool] = []
        for chart, size in zip(self.charts, self.sizes):
            mask.extend([chart == ZYZ] * size)
        return mask

    def zero_params(self) -> List[float]:
        """The identity point: every chart maps zeros to the identity."""
        return [0.0] * self.total_params

    def params_for(self, locals_: Sequence[UnitaryGate]) -> List[float]:
        """
        Chart parameters reproducing the given qubit locals.

        Raises:
            DomainError: a factor uses the Hermitian chart (no inverse provided)
            DimensionMismatchError: locals do not match the partition
        """
        if tuple(g.dim for g in locals_) != self.partition:
            raise DimensionMismatchError(
                f"locals of dims {[g.dim for g in locals_]} do not match {list(self.partition)}"
            )
        params: List[float] = []
        for chart, gate in zip(self.charts, locals_):
            if chart != ZYZ:
                raise DomainError("params_for only inverts the ZYZ chart")
            params.extend(zyz_angles(gate.matrix))
        return params


@dataclass
class SeparationResult:
    """Outcome of ``approx_separate``."""
    target_name: str
    params: List[float]
    locals: List[UnitaryGate]
    product: UnitaryGate
    d_max: float
    f_min: float
    formula_valid: bool
    epsilon_achieved: float
    pso: PsoRun

    def to_dict(self) -> Dict[str, Any]:
        return {
            'target_name': self.target_name,
            'params': list(self.params),
            'locals': [gate_to_dict(g) for g in self.locals],
            'product': gate_to_dict(self.product),
            'd_max': self.d_max,
            'f_min': self.f_min,
            'formula_valid': self.formula_valid,
            'epsilon_achieved': self.epsilon_achieved,
            'pso': self.pso.to_dict(),
        }


def _check_partition(target: UnitaryGate, ansatz: ProductAnsatz) -> None:
    if tuple(target.partition) != ansatz.partition:
        if ansatz.dim == target.dim and len(target.partition) == 1:
            return
        raise DimensionMismatchError(
            f"ansatz partition {list(ansatz.partition)} does not match target "
            f"partition {list(target.partition)} (dim {target.dim})"
        )


def build_objective(target: UnitaryGate, ansatz: ProductAnsatz) -> Callable[[np.ndarray], float]:
    """
    Map chart parameters to d_max((x) U_i^dagger U).

    A target carrying a single-factor partition of the right total dimension
    is accepted (plain matrices loaded without dims); any other mismatch is an
    error.

    Raises:
        DimensionMismatchError: partition mismatch
    """
    _check_partition(target, ansatz)
    target_matrix = target.matrix
    tol = target.tolerance + 1e-12

    def objective(params: np.ndarray) -> float:
        relative = adjoint(ansatz.product_matrix(params)) @ target_matrix
        gate = UnitaryGate.from_matrix(relative, tol=tol)
        return summarize_eigenvalues(eig_unitary(gate)).d_max

    return objective


def _verify(result: SeparationResult) -> None:
    gap = abs(1.0 - result.f_min - result.epsilon_achieved)
    if gap > EPSILON_IDENTITY_TOLERANCE:
        raise NumericalError("epsilon_achieved disagrees with 1 - f_min", residual=gap)
    if result.formula_valid:
        residual = abs(result.f_min ** 2 + (result.d_max / 2.0) ** 2 - 1.0)
        if residual > CHORD_IDENTITY_TOLERANCE:
            raise NumericalError("f_min and d_max violate the chord relation", residual=residual)


def approx_separate(
    target: UnitaryGate,
    ansatz: ProductAnsatz,
    cfg: Optional[PsoConfig] = None,
    threads: Optional[int] = None,
) -> SeparationResult:
    """
    Search local gates whose product best approximates ``target``.

    The all-zeros parameter point (identity locals) is injected into every
    restart, so the result is never worse than the identity product. Periodic
    flags come from the ansatz unless ``cfg.periodic`` is set.

    Raises:
        DimensionMismatchError: partition mismatch
        NumericalError: eigen-solver failure or a result breaking its invariants
    """
    cfg = cfg or PsoConfig()
    objective = build_objective(target, ansatz)
    if not cfg.periodic:
        cfg = replace(cfg, periodic=ansatz.periodic_mask())

    logger = get_logger()
    logger.debug(f"Separating {target.name or 'target'} over {ansatz!r}")
    run = pso_minimize(
        objective,
        ansatz.total_params,
        cfg,
        seed_positions=[ansatz.zero_params()],
        threads=threads,
    )

    params = run.best_position
    locals_ = ansatz.build_locals(params)
    product = ansatz.product(params)
    report = gate_fidelity_min(target, product)

    result = SeparationResult(
        target_name=target.name,
        params=list(params),
        locals=locals_,
        product=product,
        d_max=report.d_max,
        f_min=report.f_min,
        formula_valid=report.formula_valid,
        epsilon_achieved=report.epsilon_achieved,
        pso=run,
    )
    _verify(result)
    logger.debug(f"  best d_max {result.d_max:.10g}, f_min {result.f_min:.10g}")
    return result


def is_epsilon_separable(result: SeparationResult, eps: float) -> bool:
    """
    True iff the found product certifies eps-approximate separation:
    d_max <= 2*sqrt(2*eps - eps^2) and the chord formula applies.
    """
    eps = check_range('epsilon', eps, 0.0, 1.0, low_open=True, high_open=True)
    return bool(result.formula_valid and result.d_max <= epsilon_to_dmax(eps))
