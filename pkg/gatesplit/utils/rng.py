"""Seeded, counter-based random substreams.

Every consumer (a PSO restart, a particle, a sampled state, a validation trial)
draws from its own Philox stream derived from the run seed and a path of
labels, so results do not depend on evaluation order or thread count.
"""

import hashlib
from typing import Union

import numpy as np

from ..core.errors import DomainError

SEED_MAX = 2 ** 64

PathPart = Union[int, str]


def check_seed(seed: int) -> int:
    """Validate a 64-bit unsigned seed."""
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise DomainError(f"seed must be an integer, got {seed!r}")
    seed = int(seed)
    if not 0 <= seed < SEED_MAX:
        raise DomainError(f"seed must lie in [0, 2**64), got {seed}")
    return seed


def _label_key(part: PathPart) -> int:
    if isinstance(part, str):
        # stable across interpreter runs, unlike hash()
        return int.from_bytes(hashlib.sha256(part.encode('utf-8')).digest()[:4], 'little')
    if int(part) < 0:
        raise DomainError(f"substream index must be non-negative, got {part}")
    return int(part)


def substream(seed: int, *path: PathPart) -> np.random.Generator:
    """
    Return an independent generator for ``path`` under ``seed``.

    Args:
        seed: 64-bit run seed
        *path: labels (strings) and indices (non-negative ints)

    Returns:
        numpy Generator backed by Philox

    Example:
        rng = substream(42, 'restart', 3, 'particle', 17)
    """
    sequence = np.random.SeedSequence(
        entropy=check_seed(seed),
        spawn_key=tuple(_label_key(part) for part in path),
    )
    return np.random.Generator(np.random.Philox(sequence))

