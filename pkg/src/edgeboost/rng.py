"""Deterministic random-number streams.

All randomness in the package flows through Philox (a counter-based
generator with a stable cross-platform stream) seeded through
``numpy.random.SeedSequence``.  Independent sub-streams are derived by
hashing a tuple of integers, so parallel execution order can never
change results.
"""

from __future__ import annotations

import numpy as np


def make_rng(*entropy: int) -> np.random.Generator:
    """Build a Philox generator from a tuple of integer seeds."""
    return np.random.Generator(np.random.Philox(seed=np.random.SeedSequence(list(entropy))))


def spawn_seed(*entropy: int) -> int:
    """Derive a single 63-bit integer seed from a tuple of integers.

    Used where an API accepts a plain seed (e.g. per-iteration detector
    seeds derived from a master seed and the iteration index).
    """
    state = np.random.SeedSequence(list(entropy)).generate_state(1, np.uint64)[0]
    return int(state >> np.uint64(1))
