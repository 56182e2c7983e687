"""
Global-best particle swarm optimizer.

Synchronous PSO over real vectors: each iteration evaluates the whole swarm
(optionally on a thread pool), then updates velocities and positions. Every
particle draws its random numbers from its own substream, so a run depends
only on the seed, not on how many threads evaluate it.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..utils.config import PsoConfig, threads_from_env
from ..utils.logging import get_logger
from ..utils.rng import substream
from .errors import DimensionMismatchError, DomainError
from .linalg import TWO_PI

Objective = Callable[[np.ndarray], float]


@dataclass
class PsoRun:
    """Outcome of ``pso_minimize`` over all restarts."""
    best_position: List[float]
    best_value: float
    history: List[float]
    restart_index: int
    evaluations: int
    nan_evaluations: int = 0
    restart_best_values: List[float] = field(default_factory=list)
    restart_histories: List[List[float]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'best_position': list(self.best_position),
            'best_value': self.best_value,
            'history': list(self.history),
            'restart_index': self.restart_index,
            'evaluations': self.evaluations,
            'nan_evaluations': self.nan_evaluations,
            'restart_best_values': list(self.restart_best_values),
        }


def wrap_angles(x: np.ndarray) -> np.ndarray:
    """Reduce into [0, 2*pi)."""
    wrapped = np.mod(x, TWO_PI)
    return np.where(wrapped >= TWO_PI, 0.0, wrapped)


def shortest_arc(target: np.ndarray, origin: np.ndarray) -> np.ndarray:
    """Signed difference target - origin taken the short way round, in [-pi, pi)."""
    return np.mod(target - origin + math.pi, TWO_PI) - math.pi


class _SwarmEvaluator:
    """Evaluates a swarm row by row; counts calls and NaN results."""

    def __init__(self, objective: Objective, executor: Optional[ThreadPoolExecutor]):
        self.objective = objective
        self.executor = executor
        self.evaluations = 0
        self.nan_evaluations = 0

    def _call(self, position: np.ndarray) -> float:
        return float(self.objective(position))

    def __call__(self, positions: np.ndarray) -> np.ndarray:
        rows = [np.array(row) for row in positions]
        if self.executor is not None:
            values = np.array(list(self.executor.map(self._call, rows)), dtype=float)
        else:
            values = np.array([self._call(row) for row in rows], dtype=float)

        self.evaluations += len(rows)
        nan_mask = np.isnan(values)
        if nan_mask.any():
            self.nan_evaluations += int(nan_mask.sum())
            values[nan_mask] = np.inf
        return values


def _run_restart(
    evaluate: _SwarmEvaluator,
    dim: int,
    cfg: PsoConfig,
    restart: int,
    periodic: np.ndarray,
    seed_positions: Sequence[Sequence[float]],
    bounds: Optional[Tuple[float, float]],
) -> Tuple[np.ndarray, float, List[float]]:
    size = cfg.swarm_size
    particle_rngs = [substream(cfg.seed, 'restart', restart, 'particle', i) for i in range(size)]

    if bounds is None:
        low = np.where(periodic, 0.0, -math.pi)
        high = np.where(periodic, TWO_PI, math.pi)
    else:
        low = np.where(periodic, 0.0, bounds[0])
        high = np.where(periodic, TWO_PI, bounds[1])

    x = np.empty((size, dim))
    v = np.empty((size, dim))
    for i, rng in enumerate(particle_rngs):
        x[i] = low + rng.random(dim) * (high - low)
        v[i] = rng.uniform(-cfg.velocity_clamp, cfg.velocity_clamp, dim)

    for i, position in enumerate(seed_positions[:size]):
        x[i] = np.asarray(position, dtype=float)
    x[:, periodic] = wrap_angles(x[:, periodic])

    values = evaluate(x)
    pbest = x.copy()
    pbest_values = values.copy()
    g = int(np.argmin(pbest_values))
    gbest = pbest[g].copy()
    gbest_value = float(pbest_values[g])
    history = [gbest_value]

    for _ in range(cfg.iterations):
        r1 = np.array([rng.random(dim) for rng in particle_rngs])
        r2 = np.array([rng.random(dim) for rng in particle_rngs])

        to_pbest = np.where(periodic, shortest_arc(pbest, x), pbest - x)
        to_gbest = np.where(periodic, shortest_arc(gbest[None, :], x), gbest[None, :] - x)

        v = cfg.inertia * v + cfg.cognitive * r1 * to_pbest + cfg.social * r2 * to_gbest
        v = np.clip(v, -cfg.velocity_clamp, cfg.velocity_clamp)
        x = x + v
        x[:, periodic] = wrap_angles(x[:, periodic])
        if bounds is not None:
            free = ~periodic
            x[:, free] = np.clip(x[:, free], bounds[0], bounds[1])

        values = evaluate(x)
        improved = values < pbest_values
        pbest[improved] = x[improved]
        pbest_values[improved] = values[improved]

        g = int(np.argmin(pbest_values))
        if pbest_values[g] < gbest_value:
            gbest = pbest[g].copy()
            gbest_value = float(pbest_values[g])
        history.append(gbest_value)

    return gbest, gbest_value, history


def pso_minimize(
    objective: Objective,
    dim: int,
    cfg: PsoConfig,
    seed_positions: Optional[Sequence[Sequence[float]]] = None,
    bounds: Optional[Tuple[float, float]] = None,
    threads: Optional[int] = None,
) -> PsoRun:
    """
    Minimize ``objective`` over R^dim with restarted global-best PSO.

    Args:
        objective: total, deterministic function of a float vector
        dim: problem dimension
        cfg: hyperparameters; ``cfg.periodic`` marks angle dimensions
        seed_positions: positions injected as the first particles of every restart
        bounds: (low, high) box for non-periodic dimensions
        threads: evaluation threads (default: GATESPLIT_THREADS)

    Returns:
        PsoRun; ``history`` is the winning restart's global-best trace

    Raises:
        ConfigValidationError: invalid config
        DomainError / DimensionMismatchError: bad dim, bounds or seed positions
    """
    cfg.validate(raise_on_error=True)
    if dim < 1:
        raise DomainError(f"dim must be >= 1, got {dim}")
    periodic = np.array(cfg.periodic_mask(dim), dtype=bool)

    seed_positions = list(seed_positions or [])
    for position in seed_positions:
        if len(position) != dim:
            raise DimensionMismatchError(f"seed position has {len(position)} entries, expected {dim}")
    if bounds is not None and not bounds[0] < bounds[1]:
        raise DomainError(f"bounds must satisfy low < high, got {bounds}")

    threads = threads_from_env() if threads is None else max(1, int(threads))
    logger = get_logger()
    logger.debug(
        f"PSO: dim={dim}, swarm={cfg.swarm_size}, iterations={cfg.iterations}, "
        f"restarts={cfg.restarts}, threads={threads}"
    )

    executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    evaluate = _SwarmEvaluator(objective, executor)
    try:
        results = []
        for restart in range(cfg.restarts):
            position, value, history = _run_restart(
                evaluate, dim, cfg, restart, periodic, seed_positions, bounds
            )
            logger.debug(f"  restart {restart}: best {value:.10g}")
            results.append((position, value, history))
    finally:
        if executor is not None:
            executor.shutdown(wait=True)

    restart_best_values = [value for _, value, _ in results]
    best = int(np.argmin(restart_best_values))
    position, value, history = results[best]

    if evaluate.nan_evaluations:
        logger.warning(f"PSO: objective returned NaN {evaluate.nan_evaluations} time(s); treated as +inf")

    return PsoRun(
        best_position=[float(p) for p in position],
        best_value=float(value),
        history=list(history),
        restart_index=best,
        evaluations=evaluate.evaluations,
        nan_evaluations=evaluate.nan_evaluations,
        restart_best_values=restart_best_values,
        restart_histories=[h for _, _, h in results],
    )


def sphere(x: np.ndarray) -> float:
    """Sum of squares; minimum 0 at the origin."""
    x = np.asarray(x, dtype=float)
    return float(np.sum(x * x))


def rastrigin(x: np.ndarray) -> float:
    """Rastrigin function; minimum 0 at the origin, a local basin at every integer point."""
    x = np.asarray(x, dtype=float)
    return float(10.0 * x.size + np.sum(x * x - 10.0 * np.cos(TWO_PI * x)))
