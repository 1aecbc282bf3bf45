"""Qubit allocation and the per-asset return grid.

Asset 0 occupies the least-significant qubit block: joint index
``sum_d idx_d * 2**offset_d`` with ``offset_0 = 0``. Each axis has
``2**q`` evenly spaced points with both endpoints included.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from ..errors import DegenerateVariance, DimensionMismatch, DistributionError, NonSymmetric, NotPSD

SYMMETRY_TOL = 1e-12
PSD_TOL = 1e-10


@dataclass(frozen=True)
class QubitAllocation:
    qubits_per_dim: Tuple[int, ...]

    def __post_init__(self) -> None:
        dims = tuple(int(q) for q in self.qubits_per_dim)
        if not dims or any(q < 1 for q in dims):
            raise DistributionError(f"every asset needs at least one qubit, got {list(dims)}")
        object.__setattr__(self, "qubits_per_dim", dims)

    @classmethod
    def parse(cls, text: str) -> "QubitAllocation":
        """Parse ``"3,3,3"`` or ``"[3, 3, 3]"``."""
        tokens = [t.strip() for t in text.strip().strip("[]").split(",") if t.strip()]
        try:
            return cls(tuple(int(t) for t in tokens))
        except ValueError as e:
            raise DistributionError(f"bad qubit allocation {text!r}: {e}") from e

    @property
    def num_assets(self) -> int:
        return len(self.qubits_per_dim)

    @property
    def total(self) -> int:
        return sum(self.qubits_per_dim)

    @property
    def offsets(self) -> Tuple[int, ...]:
        out, acc = [], 0
        for q in self.qubits_per_dim:
            out.append(acc)
            acc += q
        return tuple(out)

    def split_index(self, joint: np.ndarray) -> np.ndarray:
        """Joint basis-state indices -> (len(joint), assets) per-asset grid indices."""
        joint = np.asarray(joint, dtype=np.int64)
        cols = [
            (joint >> offset) & (2**q - 1)
            for q, offset in zip(self.qubits_per_dim, self.offsets)
        ]
        return np.stack(cols, axis=-1)


@dataclass(frozen=True, eq=False)
class Grid:
    lows: np.ndarray
    highs: np.ndarray
    alloc: QubitAllocation

    def __post_init__(self) -> None:
        lows = np.array(self.lows, dtype=float)
        highs = np.array(self.highs, dtype=float)
        if lows.shape != (self.alloc.num_assets,) or highs.shape != lows.shape:
            raise DimensionMismatch(
                f"grid bounds for {lows.shape} / {highs.shape} assets, allocation has {self.alloc.num_assets}"
            )
        if np.any(lows >= highs):
            raise DistributionError(f"grid needs low < high per asset, got lows={lows} highs={highs}")
        object.__setattr__(self, "lows", lows)
        object.__setattr__(self, "highs", highs)

    @property
    def num_points(self) -> Tuple[int, ...]:
        return tuple(2**q for q in self.alloc.qubits_per_dim)

    def axis(self, dim: int) -> np.ndarray:
        """Grid values of one asset; ``np.linspace`` pins both endpoints exactly."""
        return np.linspace(self.lows[dim], self.highs[dim], self.num_points[dim])

    def step(self, dim: int) -> float:
        return float((self.highs[dim] - self.lows[dim]) / (self.num_points[dim] - 1))

    def values(self, per_asset_indices: np.ndarray) -> np.ndarray:
        """Map (..., assets) grid indices to return values."""
        idx = np.asarray(per_asset_indices, dtype=np.int64)
        cols = [self.axis(d)[idx[..., d]] for d in range(self.alloc.num_assets)]
        return np.stack(cols, axis=-1)

    def joint_points(self) -> np.ndarray:
        """(2**total, assets) matrix of the return vector at every joint index."""
        joint = np.arange(2**self.alloc.total, dtype=np.int64)
        return self.values(self.alloc.split_index(joint))


def validate_covariance(sigma: np.ndarray, num_assets: int | None = None) -> np.ndarray:
    """Check shape, positive diagonal, symmetry and PSD; return a float copy."""
    sigma = np.array(sigma, dtype=float)
    if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1]:
        raise DimensionMismatch(f"covariance must be square, got shape {sigma.shape}")
    if num_assets is not None and sigma.shape[0] != num_assets:
        raise DimensionMismatch(f"covariance is {sigma.shape[0]}x{sigma.shape[0]}, expected {num_assets} assets")
    diag = np.diag(sigma)
    if np.any(diag <= 0):
        bad = int(np.argmin(diag))
        raise DegenerateVariance(f"variance of asset {bad} is {diag[bad]!r}; must be > 0")
    if np.max(np.abs(sigma - sigma.T)) > SYMMETRY_TOL:
        raise NonSymmetric(f"covariance asymmetric by {np.max(np.abs(sigma - sigma.T)):.3e}")
    min_eig = float(np.linalg.eigvalsh((sigma + sigma.T) / 2.0).min())
    if min_eig < -PSD_TOL:
        raise NotPSD(f"covariance has eigenvalue {min_eig:.3e} < -{PSD_TOL}")
    return sigma


def build_grid(
    alloc: QubitAllocation, mu_m: Sequence[float], sigma_m: np.ndarray, k: float = 3.0
) -> Grid:
    """Per asset: ``mu_m[i] -/+ k * sqrt(sigma_m[i][i])``, ``2**q_i`` points."""
    if k <= 0:
        raise DistributionError(f"bounds multiplier k must be positive, got {k}")
    mu = np.asarray(mu_m, dtype=float).reshape(-1)
    if mu.shape[0] != alloc.num_assets:
        raise DimensionMismatch(f"{mu.shape[0]} means for {alloc.num_assets} assets")
    sigma = validate_covariance(sigma_m, alloc.num_assets)
    half_width = k * np.sqrt(np.diag(sigma))
    return Grid(mu - half_width, mu + half_width, alloc)
