"""
Per-trial random streams.

Every trial gets its own counter-based generator keyed on
(master_seed, k, m, trial_index), so a trial's draws do not depend on which
worker runs it or on what ran before it.
"""

import secrets
from typing import Tuple

import numpy as np

from ..exceptions import InputError

SEED_BITS = 64
MAX_SEED = (1 << SEED_BITS) - 1


def check_seed(master_seed: int) -> int:
    if not 0 <= int(master_seed) <= MAX_SEED:
        raise InputError(f"master seed must be a {SEED_BITS}-bit unsigned integer, got {master_seed}")
    return int(master_seed)


def entropy_seed() -> int:
    """Fresh 64-bit seed from system entropy."""
    return secrets.randbits(SEED_BITS)


def stream_key(k: int, m: int, trial_index: int) -> Tuple[int, int, int]:
    return (int(k), int(m), int(trial_index))


def trial_generator(master_seed: int, k: int, m: int, trial_index: int) -> np.random.Generator:
    """
    Independent generator for one trial.

    The variant is not part of the key, so the same trial of two variants
    sees the same draws.
    """
    sequence = np.random.SeedSequence(check_seed(master_seed), spawn_key=stream_key(k, m, trial_index))
    return np.random.Generator(np.random.Philox(sequence))
