"""
Numerical-range geometry of unitaries and gate fidelity.

For a unitary A the numerical range W(A) is the convex polygon spanned by its
eigenvalues on the unit circle. The gate fidelity of (U, V) is the distance
from the origin to W(V^dagger U). When all eigenvalues fit in a closed
half-circle that distance is set by the longest chord, and

    F_min = sqrt(1 - (d_max / 2)^2);

when they do not, the origin lies inside the polygon and F_min = 0 even though
the chord formula stays positive.
"""

import math
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np
import scipy.optimize

from ..utils.validators import check_range
from .errors import DimensionMismatchError, DomainError
from .linalg import (
    TWO_PI,
    RngLike,
    StateVector,
    UnitaryGate,
    adjoint,
    as_generator,
    eig_unitary_vectors,
    haar_states,
)

# angle ties and the semicircle test use this tolerance
ANGLE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SpectrumSummary:
    """Eigenvalue angles of a unitary and the geometry of its numerical range."""
    angles: Tuple[float, ...]
    d_max: float
    max_gap: float
    fits_semicircle: bool
    w_min_exact: float
    numerical_radius: float
    # indices into ``angles`` of the eigenvalues bounding the largest gap
    chord_endpoints: Tuple[int, int]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'angles': list(self.angles),
            'd_max': self.d_max,
            'max_gap': self.max_gap,
            'fits_semicircle': self.fits_semicircle,
            'w_min_exact': self.w_min_exact,
            'numerical_radius': self.numerical_radius,
            'chord_endpoints': list(self.chord_endpoints),
        }


@dataclass(frozen=True)
class FidelityReport:
    """Gate fidelity of a pair of unitaries."""
    f_min: float
    d_max: float
    formula_valid: bool
    epsilon_achieved: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            'f_min': self.f_min,
            'd_max': self.d_max,
            'formula_valid': self.formula_valid,
            'epsilon_achieved': self.epsilon_achieved,
        }


def _sorted_angles(eigenvalues: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Arguments in [0, 2*pi), sorted, with the permutation that sorts them."""
    angles = np.mod(np.angle(eigenvalues), TWO_PI)
    angles[angles >= TWO_PI - ANGLE_TOLERANCE] = 0.0
    order = np.argsort(angles, kind='stable')
    return angles[order], order


def summarize_eigenvalues(eigenvalues) -> SpectrumSummary:
    """
    Build the SpectrumSummary of a set of unit-circle eigenvalues.

    The largest circular gap G between consecutive angles (wrap-around
    included) decides everything: the eigenvalues fit a closed half-circle iff
    G >= pi, and then the nearest point of the polygon to the origin is the
    midpoint of the chord across that gap, at distance -cos(G/2).
    """
    eigenvalues = np.asarray(eigenvalues, dtype=np.complex128).reshape(-1)
    if eigenvalues.size == 0:
        raise DomainError("spectrum is empty")

    angles, _ = _sorted_angles(eigenvalues)
    m = angles.size

    gaps = np.empty(m)
    gaps[:-1] = np.diff(angles)
    gaps[-1] = angles[0] + TWO_PI - angles[-1]
    k = int(np.argmax(gaps))
    max_gap = float(gaps[k])

    separation = np.abs(angles[:, None] - angles[None, :])
    separation = np.minimum(separation, TWO_PI - separation)
    d_max = float(np.max(2.0 * np.sin(separation / 2.0)))

    fits = max_gap >= math.pi - ANGLE_TOLERANCE
    w_min = max(0.0, -math.cos(max_gap / 2.0)) if fits else 0.0

    return SpectrumSummary(
        angles=tuple(float(a) for a in angles),
        d_max=d_max,
        max_gap=max_gap,
        fits_semicircle=fits,
        w_min_exact=w_min,
        numerical_radius=float(np.max(np.abs(eigenvalues))),
        chord_endpoints=((k + 1) % m, k),
    )


def spectrum_summary(g: UnitaryGate) -> SpectrumSummary:
    """Eigenvalue geometry of a unitary gate."""
    eigenvalues, _ = eig_unitary_vectors(g)
    return summarize_eigenvalues(eigenvalues)


def f_min_formula(d_max: float) -> float:
    """Chord formula sqrt(1 - (d_max/2)^2); only a fidelity under the semicircle condition."""
    d_max = check_range('d_max', d_max, 0.0, 2.0, slack=1e-12)
    return math.sqrt(max(0.0, 1.0 - (d_max / 2.0) ** 2))


def relative_gate(u: UnitaryGate, v: UnitaryGate) -> UnitaryGate:
    """V^dagger U as a gate, keeping U's partition."""
    if u.dim != v.dim:
        raise DimensionMismatchError(f"gate dims differ: {u.dim} vs {v.dim}")
    tol = u.tolerance + v.tolerance + 1e-12
    return UnitaryGate.from_matrix(adjoint(v.matrix) @ u.matrix, u.partition, tol=tol)


def gate_fidelity_min(u: UnitaryGate, v: UnitaryGate) -> FidelityReport:
    """
    Minimum over unit states of |<x|V^dagger U|x>|, computed exactly from the
    spectrum of V^dagger U.

    Raises:
        DimensionMismatchError: gates of different dimension
    """
    summary = spectrum_summary(relative_gate(u, v))
    f_min = summary.w_min_exact
    return FidelityReport(
        f_min=f_min,
        d_max=summary.d_max,
        formula_valid=summary.fits_semicircle,
        epsilon_achieved=1.0 - f_min,
    )


def epsilon_to_dmax(eps: float) -> float:
    """Largest d_max compatible with fidelity 1 - eps: 2*sqrt(2*eps - eps^2)."""
    eps = check_range('epsilon', eps, 0.0, 1.0)
    return 2.0 * math.sqrt(eps * (2.0 - eps))


def dmax_to_epsilon(d: float) -> float:
    """Inverse of ``epsilon_to_dmax``: 1 - sqrt(1 - (d/2)^2)."""
    d = check_range('d_max', d, 0.0, 2.0, slack=1e-12)
    h2 = (d / 2.0) ** 2
    # h2 / (1 + sqrt(1 - h2)) avoids cancellation for small d
    return h2 / (1.0 + math.sqrt(max(0.0, 1.0 - h2)))


def pure_state_fidelity(x: StateVector, y: StateVector) -> float:
    """Uhlmann fidelity of two pure states, |<x|y>|."""
    if x.dim != y.dim:
        raise DimensionMismatchError(f"state dims differ: {x.dim} vs {y.dim}")
    return min(1.0, float(abs(np.vdot(x.amplitudes, y.amplitudes))))


def _expectation_moduli(a: np.ndarray, states: np.ndarray) -> np.ndarray:
    """|<x|A|x>| for every row x of ``states``."""
    return np.abs(np.einsum('ij,ij->i', states.conj(), states @ a.T))


def _compass_refine(
    a: np.ndarray,
    x0: np.ndarray,
    step: float = 0.1,
    min_step: float = 1e-10,
    max_sweeps: int = 20000,
) -> Tuple[np.ndarray, float]:
    """
    Coordinate (compass) descent of |<x|A|x>| on the unit sphere.

    Each sweep tries +/- step along the real and imaginary axis of every
    coordinate, renormalizes, and moves to the best improving candidate; the
    step grows on success and halves otherwise.
    """
    dim = x0.size
    basis = np.vstack([np.eye(dim), 1j * np.eye(dim)])
    directions = np.vstack([basis, -basis])

    x = x0 / np.linalg.norm(x0)
    fx = float(_expectation_moduli(a, x[None, :])[0])
    h = step
    for _ in range(max_sweeps):
        if h < min_step or fx == 0.0:
            break
        candidates = x[None, :] + h * directions
        candidates /= np.linalg.norm(candidates, axis=1, keepdims=True)
        values = _expectation_moduli(a, candidates)
        k = int(np.argmin(values))
        if values[k] < fx:
            x, fx = candidates[k], float(values[k])
            h = min(2.0 * h, 0.5)
        else:
            h *= 0.5
    return x, fx


def f_min_bruteforce(
    u: UnitaryGate,
    v: UnitaryGate,
    samples: int,
    rng: RngLike,
    refine: bool = True,
) -> float:
    """
    Sampling oracle for the gate fidelity: minimum of |<x|V^dagger U|x>| over
    ``samples`` Haar states, polished by compass descent from the best one.

    Never below the exact value; converges toward it.
    """
    if u.dim != v.dim:
        raise DimensionMismatchError(f"gate dims differ: {u.dim} vs {v.dim}")
    if samples < 1:
        raise DomainError(f"samples must be >= 1, got {samples}")

    a = adjoint(v.matrix) @ u.matrix
    states = haar_states(u.dim, samples, as_generator(rng))
    values = _expectation_moduli(a, states)
    best = int(np.argmin(values))
    if not refine:
        return float(values[best])
    _, value = _compass_refine(a, states[best])
    return min(value, float(values[best]))


def worst_case_state(u: UnitaryGate, v: UnitaryGate) -> StateVector:
    """
    A unit state attaining F_min(U, V).

    In the semicircle case it is the equal superposition of the eigenvectors
    at the two ends of the longest chord; otherwise convex weights p with
    sum p_k lambda_k = 0 come from non-negative least squares and the state is
    sum sqrt(p_k) |v_k>.
    """
    relative = relative_gate(u, v)
    eigenvalues, vectors = eig_unitary_vectors(relative)
    summary = summarize_eigenvalues(eigenvalues)
    _, order = _sorted_angles(eigenvalues)

    if summary.fits_semicircle:
        i, j = (int(order[idx]) for idx in summary.chord_endpoints)
        if i == j:
            amplitudes = vectors[:, i]
        else:
            amplitudes = (vectors[:, i] + vectors[:, j]) / math.sqrt(2.0)
    else:
        system = np.vstack([eigenvalues.real, eigenvalues.imag, np.ones(eigenvalues.size)])
        weights, _ = scipy.optimize.nnls(system, np.array([0.0, 0.0, 1.0]))
        amplitudes = vectors @ np.sqrt(np.clip(weights, 0.0, None))

    return StateVector.from_amplitudes(amplitudes, normalize=True)


def expectation_modulus(gate: UnitaryGate, state: StateVector) -> float:
    """|<x|A|x>| for one state."""
    if gate.dim != state.dim:
        raise DimensionMismatchError(f"gate dim {gate.dim} != state dim {state.dim}")
    return float(_expectation_moduli(gate.matrix, state.amplitudes[None, :])[0])


def summary_for_pair(u: UnitaryGate, v: UnitaryGate) -> SpectrumSummary:
    """SpectrumSummary of V^dagger U."""
    return spectrum_summary(relative_gate(u, v))


def formula_error(summary: SpectrumSummary) -> Optional[float]:
    """|w_min_exact - chord formula| when the chord formula applies, else None."""
    if not summary.fits_semicircle:
        return None
    return abs(summary.w_min_exact - f_min_formula(summary.d_max))
