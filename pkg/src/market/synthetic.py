"""Synthetic monthly index levels for fixtures and demos.

Log returns are multivariate normal with the configured monthly vols and
correlations, drawn from a seeded ``PCG64`` stream and correlated through a
Cholesky factor (no SVD, so the draw is stable across BLAS builds).
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from ..config import DEFAULT_EXPERIMENT, SYNTHETIC_MARKET
from ..statevec import make_rng
from .model import annual_to_monthly_log_mean
from .prices import PriceSeries, month_label, month_ordinal


def synthetic_covariance(
    vols: Sequence[float] = SYNTHETIC_MARKET["monthly_vols"],
    correlations: Sequence[Sequence[float]] = SYNTHETIC_MARKET["correlations"],
) -> np.ndarray:
    d = np.diag(np.asarray(vols, dtype=float))
    sigma = d @ np.asarray(correlations, dtype=float) @ d
    return (sigma + sigma.T) / 2.0


def synthetic_prices(
    months: int = SYNTHETIC_MARKET["months"],
    seed: int = 0,
    names: Sequence[str] = SYNTHETIC_MARKET["names"],
    sigma_monthly: Optional[np.ndarray] = None,
    mu_annual: Sequence[float] = DEFAULT_EXPERIMENT["mu_annual"],
    start: str = SYNTHETIC_MARKET["start"],
    start_level: float = SYNTHETIC_MARKET["start_level"],
) -> PriceSeries:
    sigma = synthetic_covariance() if sigma_monthly is None else np.asarray(sigma_monthly, dtype=float)
    mu = annual_to_monthly_log_mean(mu_annual)
    chol = np.linalg.cholesky(sigma)
    shocks = make_rng(seed).standard_normal((months - 1, len(names)))
    returns = mu + shocks @ chol.T

    levels = np.empty((months, len(names)))
    levels[0] = start_level
    levels[1:] = start_level * np.exp(np.cumsum(returns, axis=0))
    first = month_ordinal(start)
    dates = tuple(month_label(first + i) for i in range(months))
    return PriceSeries(tuple(names), dates, levels)
