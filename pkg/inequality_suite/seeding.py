"""Per-trial random generators derived from the campaign seed."""

import hashlib

import numpy as np


def check_key(check_id: str) -> int:
    """Stable 64-bit integer for a check id, independent of PYTHONHASHSEED."""
    digest = hashlib.sha256(check_id.encode()).hexdigest()
    return int(digest[:16], 16)


def trial_rng(seed: int, check_id: str, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed, check_key(check_id), trial])
