from __future__ import annotations

import numpy as np

from bws_core.exceptions import ConfigError

__all__ = [
    "make_rng",
]


def make_rng(seed: int, *keys: int) -> np.random.Generator:
    """PCG64 generator derived from ``seed`` and any number of integer keys.

    Replicate ``i`` of a run seeded with ``seed`` uses ``make_rng(seed, i)``
    so results do not depend on how replicates are scheduled.
    """
    if seed < 0 or any(k < 0 for k in keys):
        raise ConfigError("seeds and replicate keys must be nonnegative")
    return np.random.default_rng(np.random.SeedSequence([int(seed), *map(int, keys)]))
