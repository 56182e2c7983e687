"""
Validation sweep for the chord formula.

For random unitary pairs (U, V) the exact distance from the origin to the
numerical range of V^dagger U is compared with sqrt(1 - (d_max/2)^2) and with
a state-sampling oracle. Where the eigenvalues fit a half circle the three
agree; where they do not the formula overestimates (the exact value is 0).
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..core.errors import DimensionMismatchError, DomainError, NumericalError
from ..core.linalg import UnitaryGate, haar_unitary
from ..core.spectral import f_min_bruteforce, f_min_formula, summary_for_pair
from ..utils.config import threads_from_env
from ..utils.logging import get_logger
from ..utils.progress import progress_bar
from ..utils.rng import check_seed, substream

FORMULA_TOLERANCE = 1e-8
ORACLE_TOLERANCE = 1e-3
# the oracle evaluates real states, so it may only undershoot by rounding
ORACLE_UNDERSHOOT = 1e-9


@dataclass(frozen=True)
class TrialOutcome:
    """One (U, V) pair of the sweep."""
    exact: float
    formula: float
    fits_semicircle: bool
    oracle: Optional[float]

    @property
    def formula_error(self) -> float:
        return abs(self.exact - self.formula)

    @property
    def oracle_gap(self) -> Optional[float]:
        return None if self.oracle is None else self.oracle - self.exact


@dataclass
class TheoremReport:
    """Aggregate of a validation sweep."""
    trials: int = 0
    semicircle_cases: int = 0
    max_abs_error: float = 0.0
    invalid_cases: int = 0
    max_invalid_overestimate: float = 0.0
    dim: int = 0
    seed: int = 0
    max_oracle_gap: float = 0.0
    oracle_mismatches: int = 0

    def add(self, outcome: TrialOutcome) -> None:
        self.trials += 1
        if outcome.fits_semicircle:
            self.semicircle_cases += 1
            self.max_abs_error = max(self.max_abs_error, outcome.formula_error)
        else:
            self.invalid_cases += 1
            self.max_invalid_overestimate = max(
                self.max_invalid_overestimate, outcome.formula - outcome.exact
            )
        gap = outcome.oracle_gap
        if gap is not None:
            self.max_oracle_gap = max(self.max_oracle_gap, gap)
            if gap > ORACLE_TOLERANCE:
                self.oracle_mismatches += 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            'trials': self.trials,
            'semicircle_cases': self.semicircle_cases,
            'max_abs_error': self.max_abs_error,
            'invalid_cases': self.invalid_cases,
            'max_invalid_overestimate': self.max_invalid_overestimate,
            'dim': self.dim,
            'seed': self.seed,
            'max_oracle_gap': self.max_oracle_gap,
            'oracle_mismatches': self.oracle_mismatches,
        }


def check_pair(
    u: UnitaryGate,
    v: UnitaryGate,
    oracle_rng: Optional[np.random.Generator] = None,
    oracle_samples: int = 500,
) -> TrialOutcome:
    """
    Exact value, chord formula and (with ``oracle_rng``) the sampling oracle
    for one pair.

    Raises:
        NumericalError: the oracle found a state below the exact minimum
    """
    if u.dim != v.dim:
        raise DimensionMismatchError(f"gate dims differ: {u.dim} vs {v.dim}")
    summary = summary_for_pair(u, v)
    outcome_oracle = None
    if oracle_rng is not None and oracle_samples > 0:
        outcome_oracle = f_min_bruteforce(u, v, oracle_samples, oracle_rng)
        if outcome_oracle < summary.w_min_exact - ORACLE_UNDERSHOOT:
            raise NumericalError(
                "sampling oracle undershoots the exact minimum",
                residual=summary.w_min_exact - outcome_oracle,
            )
    return TrialOutcome(
        exact=summary.w_min_exact,
        formula=f_min_formula(summary.d_max),
        fits_semicircle=summary.fits_semicircle,
        oracle=outcome_oracle,
    )


def cube_roots_pair() -> Tuple[UnitaryGate, UnitaryGate]:
    """diag(1, w, w^2)^dagger against the identity: origin inside the hull."""
    omega = np.exp(2j * np.pi / 3)
    u = UnitaryGate.from_matrix(np.diag([1.0, omega, omega ** 2]).conj(), name='cube_roots')
    v = UnitaryGate.from_matrix(np.eye(3), name='identity3')
    return u, v


def run_theorem_validation(
    trials: int,
    dim: int,
    seed: int,
    oracle_samples: int = 500,
    extra_pairs: Iterable[Tuple[UnitaryGate, UnitaryGate]] = (),
    show_progress: bool = False,
    threads: Optional[int] = None,
) -> TheoremReport:
    """
    Run the sweep over ``trials`` Haar pairs of dimension ``dim``.

    Args:
        trials: number of random pairs (>= 1)
        dim: matrix dimension (>= 2)
        seed: run seed; trial ``i`` draws from its own substream
        oracle_samples: Haar states per oracle call (0 disables the oracle)
        extra_pairs: fixed pairs appended to the sweep (any dimension)
        show_progress: progress bar on stderr
        threads: worker threads (default: GATESPLIT_THREADS)
    """
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")
    if dim < 2:
        raise DomainError(f"dim must be >= 2, got {dim}")
    if oracle_samples < 0:
        raise DomainError(f"oracle_samples must be >= 0, got {oracle_samples}")
    seed = check_seed(seed)
    extra_pairs: Sequence[Tuple[UnitaryGate, UnitaryGate]] = list(extra_pairs)

    def random_trial(i: int) -> TrialOutcome:
        rng = substream(seed, 'trial', i)
        u = haar_unitary(dim, rng)
        v = haar_unitary(dim, rng)
        return check_pair(u, v, substream(seed, 'oracle', i), oracle_samples)

    def extra_trial(k: int) -> TrialOutcome:
        u, v = extra_pairs[k]
        return check_pair(u, v, substream(seed, 'extra', k), oracle_samples)

    threads = threads_from_env() if threads is None else max(1, int(threads))
    logger = get_logger()
    logger.debug(f"Validation sweep: {trials} trial(s), dim {dim}, seed {seed}, threads {threads}")

    outcomes: List[TrialOutcome] = []
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            results = executor.map(random_trial, range(trials))
            outcomes.extend(progress_bar(results, desc="Validation sweep", total=trials,
                                         disable=not show_progress, unit='trials'))
    else:
        for i in progress_bar(range(trials), desc="Validation sweep",
                              disable=not show_progress, unit='trials'):
            outcomes.append(random_trial(i))
    outcomes.extend(extra_trial(k) for k in range(len(extra_pairs)))

    report = TheoremReport(dim=dim, seed=seed)
    for outcome in outcomes:
        report.add(outcome)

    if report.max_abs_error > FORMULA_TOLERANCE:
        logger.warning(f"chord formula error {report.max_abs_error:.3e} exceeds {FORMULA_TOLERANCE}")
    if report.oracle_mismatches:
        logger.warning(
            f"{report.oracle_mismatches} trial(s) where the oracle stayed more than "
            f"{ORACLE_TOLERANCE} above the exact value"
        )
    return report
