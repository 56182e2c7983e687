"""
Dense complex linear algebra for gates.

Gates are small (desk scale, dim <= 64), so everything is a dense numpy
``complex128`` array. A bare array is a ``ComplexMatrix``; a ``UnitaryGate``
is an array that passed the unitarity check, frozen, and tagged with the
tensor-factor partition it acts on.
"""

import math
from dataclasses import dataclass, replace
from functools import reduce
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.linalg

from ..utils.logging import get_logger
from ..utils.rng import substream
from ..utils.validators import validate_partition
from .errors import (
    DimensionMismatchError,
    DomainError,
    NotUnitaryError,
    NumericalError,
    SingularMatrixError,
)

ComplexMatrix = np.ndarray

DEFAULT_TOLERANCE = 1e-8
STATE_NORM_TOLERANCE = 1e-12
PROJECTION_FLAG_DISTANCE = 1e-2
# off-diagonal mass of the Schur factor tolerated for a normal input
NORMALITY_TOLERANCE = 1e-6

TWO_PI = 2.0 * math.pi

RngLike = Union[np.random.Generator, int]


def as_complex_matrix(m) -> ComplexMatrix:
    """
    Coerce ``m`` to a square, finite complex128 array.

    Raises:
        DomainError: not square, empty, or containing NaN/Inf
    """
    if isinstance(m, UnitaryGate):
        return m.matrix
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise DomainError(f"expected a non-empty square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError("matrix has non-finite entries")
    return arr


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=np.complex128, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class UnitaryGate:
    """A unitary matrix with its tensor-factor partition."""
    matrix: ComplexMatrix
    partition: Tuple[int, ...]
    unitarity_defect: float
    tolerance: float = DEFAULT_TOLERANCE
    name: str = ''
    # Frobenius distance moved by nearest_unitary (0 for gates built directly)
    projection_distance: float = 0.0
    flagged: bool = False

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def from_matrix(
        cls,
        matrix,
        partition: Optional[Sequence[int]] = None,
        tol: float = DEFAULT_TOLERANCE,
        name: str = '',
    ) -> 'UnitaryGate':
        """
        Validate and wrap a matrix.

        Args:
            matrix: square complex array
            partition: local dimensions m_1..m_n (default: a single factor)
            tol: unitarity tolerance recorded on the gate
            name: optional label (fixture name, "product", ...)

        Raises:
            NotUnitaryError: defect above ``tol``
            DomainError: bad matrix or partition
        """
        arr = as_complex_matrix(matrix)
        ok, defect = is_unitary(arr, tol)
        if not ok:
            raise NotUnitaryError(defect, tol)
        dims = validate_partition(partition if partition is not None else (arr.shape[0],), arr.shape[0])
        return cls(_frozen(arr), tuple(dims), defect, tol, name)

    def with_partition(self, partition: Sequence[int]) -> 'UnitaryGate':
        dims = validate_partition(partition, self.dim)
        return replace(self, partition=tuple(dims))

    def with_name(self, name: str) -> 'UnitaryGate':
        return replace(self, name=name)

    def adjoint(self) -> 'UnitaryGate':
        return replace(self, matrix=_frozen(adjoint(self.matrix)), name='')

    def __matmul__(self, other: 'UnitaryGate') -> ComplexMatrix:
        return self.matrix @ as_complex_matrix(other)


@dataclass(frozen=True, eq=False)
class StateVector:
    """Unit-norm state vector."""
    amplitudes: np.ndarray

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    @classmethod
    def from_amplitudes(cls, amplitudes, normalize: bool = False) -> 'StateVector':
        """
        Wrap amplitudes, optionally normalizing them first.

        Raises:
            DomainError: zero vector, non-finite entries, or (without
                ``normalize``) a norm off 1 by more than 1e-12
        """
        vec = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        if vec.size == 0 or not np.all(np.isfinite(vec)):
            raise DomainError("state must be a non-empty finite vector")
        norm = float(np.linalg.norm(vec))
        if normalize:
            if norm == 0.0:
                raise DomainError("cannot normalize the zero vector")
            vec = vec / norm
        elif abs(norm - 1.0) > STATE_NORM_TOLERANCE:
            raise DomainError(f"state norm is {norm!r}, expected 1")
        vec = np.array(vec, copy=True)
        vec.setflags(write=False)
        return cls(vec)


def adjoint(m) -> ComplexMatrix:
    """Conjugate transpose."""
    return as_complex_matrix(m).conj().T


def tensor(a, b) -> ComplexMatrix:
    """
    Kronecker product: entry (i*b.dim + j, k*b.dim + l) is a[i, k] * b[j, l].
    """
    return np.kron(as_complex_matrix(a), as_complex_matrix(b))


def tensor_all(mats: Iterable) -> ComplexMatrix:
    """Left fold of ``tensor`` over one or more matrices."""
    mats = list(mats)
    if not mats:
        raise DomainError("tensor_all needs at least one factor")
    return reduce(tensor, mats[1:], as_complex_matrix(mats[0]))


def tensor_gates(gates: Sequence[UnitaryGate], name: str = 'product') -> UnitaryGate:
    """Tensor product of gates; the partition is the concatenation of theirs."""
    partition = tuple(m for gate in gates for m in gate.partition)
    tol = max(gate.tolerance for gate in gates)
    return UnitaryGate.from_matrix(tensor_all(g.matrix for g in gates), partition, tol=tol, name=name)


def is_unitary(m, tol: float = DEFAULT_TOLERANCE) -> Tuple[bool, float]:
    """
    Check unitarity.

    Returns:
        (ok, defect) where defect = max |(M^dagger M - I)_ij|
    """
    arr = as_complex_matrix(m)
    if tol < 0:
        raise DomainError(f"tolerance must be non-negative, got {tol}")
    gram = arr.conj().T @ arr
    defect = float(np.max(np.abs(gram - np.eye(arr.shape[0]))))
    return defect <= tol, defect


def eig_unitary_vectors(g: UnitaryGate) -> Tuple[np.ndarray, ComplexMatrix]:
    """
    Eigenvalues and orthonormal eigenvectors (columns) of a unitary gate.

    A unitary is normal, so its complex Schur form T is diagonal: the
    diagonal holds the spectrum and the Schur basis Z the eigenvectors.

    Raises:
        NumericalError: Schur iteration failed, or T is not diagonal
            (input not normal)
    """
    try:
        t, z = scipy.linalg.schur(g.matrix, output='complex')
    except (np.linalg.LinAlgError, ValueError) as e:
        raise NumericalError(f"Schur iteration did not converge: {e}", residual=float('nan'))

    residual = float(np.max(np.abs(np.triu(t, 1)))) if g.dim > 1 else 0.0
    if residual > NORMALITY_TOLERANCE:
        raise NumericalError("Schur factor is not diagonal; input is not normal", residual=residual)
    return np.array(np.diag(t), copy=True), z


def eig_unitary(g: UnitaryGate) -> np.ndarray:
    """Eigenvalues of a unitary gate (see ``eig_unitary_vectors``)."""
    eigenvalues, _ = eig_unitary_vectors(g)
    return eigenvalues


def zyz_unitary(alpha: float, beta: float, gamma: float, delta: float) -> UnitaryGate:
    """
    2x2 unitary e^{i alpha} Rz(beta) Ry(gamma) Rz(delta), with
    Rz(t) = diag(e^{-it}, e^{it}) and Ry(g) = [[cos g/2, -sin g/2], [sin g/2, cos g/2]].

    alpha, beta, delta are reduced mod 2*pi and gamma mod 4*pi (the half angle
    makes gamma 4*pi-periodic), so the matrix is an exact function of the input.
    """
    alpha = math.fmod(alpha, TWO_PI)
    beta = math.fmod(beta, TWO_PI)
    delta = math.fmod(delta, TWO_PI)
    gamma = math.fmod(gamma, 2.0 * TWO_PI)

    c = math.cos(gamma / 2.0)
    s = math.sin(gamma / 2.0)
    phase = complex(math.cos(alpha), math.sin(alpha))
    e_sum = complex(math.cos(beta + delta), math.sin(beta + delta))
    e_diff = complex(math.cos(beta - delta), math.sin(beta - delta))

    matrix = phase * np.array([
        [e_sum.conjugate() * c, -e_diff.conjugate() * s],
        [e_diff * s, e_sum * c],
    ], dtype=np.complex128)
    return UnitaryGate.from_matrix(matrix, (2,), name='zyz')


def zyz_angles(u) -> Tuple[float, float, float, float]:
    """
    Inverse of ``zyz_unitary``: chart parameters reproducing a 2x2 unitary.

    Returns:
        (alpha, beta, gamma, delta) with gamma in [0, pi]

    Raises:
        DomainError: input is not 2x2
    """
    arr = as_complex_matrix(u)
    if arr.shape != (2, 2):
        raise DomainError(f"zyz_angles needs a 2x2 matrix, got {arr.shape}")

    alpha = float(np.angle(np.linalg.det(arr))) / 2.0
    w = arr * complex(math.cos(alpha), -math.sin(alpha))  # now in SU(2)

    c = abs(w[1, 1])
    s = abs(w[1, 0])
    gamma = 2.0 * math.atan2(s, c)

    # one of the two phase combinations is undetermined when c or s vanishes
    angle_sum = float(np.angle(w[1, 1])) if c > 1e-12 else 0.0
    angle_diff = float(np.angle(w[1, 0])) if s > 1e-12 else 0.0
    beta = (angle_sum + angle_diff) / 2.0
    delta = (angle_sum - angle_diff) / 2.0
    return alpha, beta, gamma, delta


def hermitian_from_params(params: Sequence[float], m: int) -> ComplexMatrix:
    """
    Hermitian m x m matrix from m^2 reals: the first m are the diagonal, then
    each pair (re, im) fills one upper-triangular entry, row by row.
    """
    params = np.asarray(params, dtype=float).reshape(-1)
    if params.size != m * m:
        raise DomainError(f"param_unitary needs {m * m} parameters for m={m}, got {params.size}")
    h = np.diag(params[:m]).astype(np.complex128)
    rows, cols = np.triu_indices(m, 1)
    off = params[m:]
    h[rows, cols] = off[0::2] + 1j * off[1::2]
    h[cols, rows] = np.conj(h[rows, cols])
    return h


def param_unitary(params: Sequence[float], m: int) -> UnitaryGate:
    """
    Chart U(m) <- R^{m^2}: exp(iH) for the Hermitian H built by
    ``hermitian_from_params``.

    The exponential goes through the eigendecomposition of H, which keeps the
    result unitary to rounding for any parameter scale.
    """
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    h = hermitian_from_params(params, m)
    w, q = scipy.linalg.eigh(h)
    u = (q * np.exp(1j * w)) @ q.conj().T
    return UnitaryGate.from_matrix(u, (m,), name='hermitian')


def nearest_unitary(
    m,
    partition: Optional[Sequence[int]] = None,
    name: str = '',
) -> UnitaryGate:
    """
    Unitary polar factor of ``m`` (the unitary closest in Frobenius norm).

    Corrections larger than 1e-2 are flagged on the returned gate and logged.

    Raises:
        SingularMatrixError: ``m`` is singular
    """
    arr = as_complex_matrix(m)
    singular_values = np.linalg.svd(arr, compute_uv=False)
    if singular_values.min() <= 1e-12 * max(1.0, float(singular_values.max())):
        raise SingularMatrixError(
            f"matrix is singular (smallest singular value {singular_values.min():.3e})"
        )

    u, _ = scipy.linalg.polar(arr, side='right')
    distance = float(np.linalg.norm(u - arr, 'fro'))
    flagged = distance > PROJECTION_FLAG_DISTANCE
    if flagged:
        get_logger().warning(
            f"nearest_unitary moved {name or 'matrix'} by {distance:.3e} (Frobenius); input far from unitary"
        )

    gate = UnitaryGate.from_matrix(u, partition, name=name)
    return replace(gate, projection_distance=distance, flagged=flagged)


def as_generator(rng: RngLike) -> np.random.Generator:
    """Accept a Generator or a 64-bit seed."""
    if isinstance(rng, np.random.Generator):
        return rng
    return substream(rng)


def haar_states(dim: int, count: int, rng: RngLike) -> np.ndarray:
    """``count`` Haar-random unit vectors as the rows of a (count, dim) array."""
    if dim < 1 or count < 0:
        raise DomainError(f"need dim >= 1 and count >= 0, got dim={dim}, count={count}")
    gen = as_generator(rng)
    z = gen.standard_normal((count, dim)) + 1j * gen.standard_normal((count, dim))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def haar_state(dim: int, rng: RngLike) -> StateVector:
    """Normalized vector of independent standard complex Gaussians."""
    return StateVector.from_amplitudes(haar_states(dim, 1, rng)[0], normalize=True)


def haar_unitary(dim: int, rng: RngLike, partition: Optional[Sequence[int]] = None) -> UnitaryGate:
    """
    Haar-random unitary: QR of a complex Gaussian matrix with the phases of
    R's diagonal moved into Q.
    """
    if dim < 1:
        raise DomainError(f"dim must be >= 1, got {dim}")
    gen = as_generator(rng)
    z = (gen.standard_normal((dim, dim)) + 1j * gen.standard_normal((dim, dim))) / math.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    q = q * (d / np.abs(d))
    return UnitaryGate.from_matrix(q, partition, name='haar')


def apply(gate, state: StateVector) -> StateVector:
    """Apply a gate (or any unitary matrix) to a state."""
    arr = as_complex_matrix(gate)
    if arr.shape[0] != state.dim:
        raise DimensionMismatchError(f"gate dim {arr.shape[0]} != state dim {state.dim}")
    return StateVector.from_amplitudes(arr @ state.amplitudes, normalize=True)
