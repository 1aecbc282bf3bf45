"""Shot bitstrings -> monthly log-return vectors."""

from __future__ import annotations

from typing import Optional

import numpy as np

from ..distload import Grid, QubitAllocation
from ..errors import LengthMismatch


def decode_indices(indices: np.ndarray, grid: Grid) -> np.ndarray:
    """Joint basis-state indices -> (len(indices), assets) log returns."""
    return grid.values(grid.alloc.split_index(indices))


def decode(bits: str, grid: Grid, alloc: Optional[QubitAllocation] = None) -> np.ndarray:
    """Split a shot into per-asset qubit blocks and map each block through the grid.

    The rightmost character is qubit 0, so asset 0 is the rightmost block.
    """
    alloc = alloc or grid.alloc
    if alloc != grid.alloc:
        raise LengthMismatch(
            f"allocation {list(alloc.qubits_per_dim)} does not match grid {list(grid.alloc.qubits_per_dim)}"
        )
    if len(bits) != alloc.total:
        raise LengthMismatch(f"bitstring has {len(bits)} bits, allocation needs {alloc.total}")
    if set(bits) - {"0", "1"}:
        raise LengthMismatch(f"bitstring {bits!r} has non-binary characters")
    return decode_indices(np.array([int(bits, 2)]), grid)[0]
