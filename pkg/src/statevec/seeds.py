"""Seeded random streams.

Every stream is numpy's ``PCG64`` bit generator, whose output for a given
seed is the same on every platform. Executions get their own stream through
``derive_seed``: the child seed is the first 64-bit word generated by
``SeedSequence([base_seed, execution_index])``, a stable hash of the pair.
"""

from __future__ import annotations

from typing import List

import numpy as np

from ..errors import SimulationError

SEED_LIMIT = 2**64


def check_seed(seed: int) -> int:
    seed = int(seed)
    if not 0 <= seed < SEED_LIMIT:
        raise SimulationError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return seed


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(check_seed(seed)))


def derive_seed(base_seed: int, execution_index: int) -> int:
    seq = np.random.SeedSequence([check_seed(base_seed), int(execution_index)])
    return int(seq.generate_state(1, dtype=np.uint64)[0])


def derive_seeds(base_seed: int, executions: int) -> List[int]:
    return [derive_seed(base_seed, idx) for idx in range(executions)]
