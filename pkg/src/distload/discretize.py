"""Pointwise discretization of a multivariate normal over the joint grid."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
from scipy import stats

from ..errors import DimensionMismatch, DistributionError, SingularCovariance
from .grid import Grid, validate_covariance

logger = logging.getLogger(__name__)

SUM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class DiscretizedDistribution:
    grid: Grid
    # indexed by joint basis-state index (asset 0 in the low bits)
    probabilities: np.ndarray

    def __post_init__(self) -> None:
        probs = np.array(self.probabilities, dtype=float)
        expected = 2**self.grid.alloc.total
        if probs.shape != (expected,):
            raise DimensionMismatch(f"expected {expected} probabilities, got {probs.shape}")
        if np.any(probs < 0):
            raise DistributionError("probabilities must be nonnegative")
        total = float(np.sum(probs))
        if abs(total - 1.0) > SUM_TOL:
            raise DistributionError(f"probabilities sum to {total!r}, not 1")
        probs.setflags(write=False)
        object.__setattr__(self, "probabilities", probs)

    @property
    def num_qubits(self) -> int:
        return self.grid.alloc.total


def discretize(grid: Grid, mu_m: Sequence[float], sigma_m: np.ndarray) -> DiscretizedDistribution:
    """Normalized density N(mu_m, sigma_m) at every joint grid point.

    Normalization uses ``np.sum`` (pairwise summation over a contiguous array),
    so the result does not depend on how the density was evaluated.
    """
    mu = np.asarray(mu_m, dtype=float).reshape(-1)
    sigma = validate_covariance(sigma_m, grid.alloc.num_assets)
    if mu.shape[0] != grid.alloc.num_assets:
        raise DimensionMismatch(f"{mu.shape[0]} means for {grid.alloc.num_assets} assets")
    try:
        dist = stats.multivariate_normal(mean=mu, cov=sigma, allow_singular=False)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise SingularCovariance(f"covariance is not invertible: {e}") from e

    points = grid.joint_points()
    logpdf = np.atleast_1d(dist.logpdf(points))
    weights = np.exp(logpdf - logpdf.max())
    probs = weights / np.sum(weights)
    return DiscretizedDistribution(grid, probs)


def grid_moments(dist: DiscretizedDistribution) -> Tuple[np.ndarray, np.ndarray]:
    """Grid-exact mean and covariance by direct summation over every joint point."""
    points = dist.grid.joint_points()
    p = dist.probabilities
    mean = p @ points
    centered = points - mean
    cov = (centered * p[:, None]).T @ centered
    return mean, (cov + cov.T) / 2.0


def marginal(dist: DiscretizedDistribution, dim: int) -> np.ndarray:
    """Probability per grid point of one asset."""
    alloc = dist.grid.alloc
    idx = alloc.split_index(np.arange(dist.probabilities.shape[0]))[:, dim]
    return np.bincount(idx, weights=dist.probabilities, minlength=2 ** alloc.qubits_per_dim[dim])
