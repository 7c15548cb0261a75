"""Seeding scheme used everywhere randomness is drawn.

All sampling goes through numpy's Philox bit generator (counter-based,
platform-independent streams).  Sub-streams are derived with explicit
SeedSequence spawn keys, so a (seed, key...) pair always maps to the same
stream regardless of evaluation order.
"""

from __future__ import annotations

import numpy as np


def as_seed_sequence(seed) -> np.random.SeedSequence:
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(int(seed))


def make_generator(seed) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(as_seed_sequence(seed)))


def subseed(seed, *key: int) -> np.random.SeedSequence:
    """Child SeedSequence at an explicit spawn key, independent of call order."""
    ss = as_seed_sequence(seed)
    return np.random.SeedSequence(
        entropy=ss.entropy, spawn_key=tuple(ss.spawn_key) + tuple(int(k) for k in key)
    )
