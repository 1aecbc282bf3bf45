"""Diagnostics helpers (opt-in via QALLOC_DIAG).

Keep diagnostics separate from core logic. Never mutate inputs.
Failures are logged as errors and do not raise.
"""

from __future__ import annotations

import logging
from typing import Dict, Sequence

import numpy as np
from scipy import stats

from ..config import diag_enabled
from ..distload import DiscretizedDistribution, grid_moments, marginal
from ..statevec import ShotResult, StateVector, total_variation

logger = logging.getLogger(__name__)


def bin_integrated_marginals(dist: DiscretizedDistribution, mu: Sequence[float], sigma: np.ndarray) -> list[np.ndarray]:
    """Per asset: normal mass over half-step bins around each grid point, renormalized on the grid."""
    grid = dist.grid
    out = []
    for d in range(grid.alloc.num_assets):
        axis = grid.axis(d)
        half = grid.step(d) / 2.0
        edges = np.concatenate([axis - half, axis[-1:] + half])
        cdf = stats.norm.cdf(edges, loc=float(mu[d]), scale=float(np.sqrt(sigma[d][d])))
        mass = np.diff(cdf)
        out.append(mass / np.sum(mass))
    return out


def discretization_gap(dist: DiscretizedDistribution, mu: Sequence[float], sigma: np.ndarray) -> np.ndarray:
    """Max |pointwise marginal - bin-integrated marginal| per asset."""
    binned = bin_integrated_marginals(dist, mu, sigma)
    return np.array([np.max(np.abs(marginal(dist, d) - b)) for d, b in enumerate(binned)])


def log_discretization_report(dist: DiscretizedDistribution, mu: Sequence[float], sigma: np.ndarray) -> None:
    """Grid-exact moments against the input moments, plus the binning gap."""
    if not diag_enabled():
        return
    try:
        mean, cov = grid_moments(dist)
        sigma = np.asarray(sigma, dtype=float)
        logger.info(
            f"[diag] grid mean - mu: max|.|={np.max(np.abs(mean - np.asarray(mu, dtype=float))):.3e}; "
            f"grid cov - sigma (ΔΣ_disc): max|.|={np.max(np.abs(cov - sigma)):.3e}"
        )
        gap = discretization_gap(dist, mu, sigma)
        logger.info(f"[diag] pointwise vs bin-integrated marginal gap per asset: {gap.round(6).tolist()}")
    except Exception as e:
        logger.error(f"Diagnostics failed (discretization): {e}", exc_info=True)


def log_sampling_tvd(result: ShotResult, state: StateVector) -> None:
    if not diag_enabled():
        return
    try:
        tvd = total_variation(result, state)
        logger.info(f"[diag] seed={result.seed} shots={result.shots} TVD={tvd:.4f}")
    except Exception as e:
        logger.error(f"Diagnostics failed (sampling): {e}", exc_info=True)


def summarize_delta_sigma(max_abs: Sequence[float]) -> Dict[str, float]:
    values = np.asarray(max_abs, dtype=float)
    if values.size == 0:
        return {}
    return {
        "executions": int(values.size),
        "median": float(np.median(values)),
        "mean": float(np.mean(values)),
        "min": float(np.min(values)),
        "max": float(np.max(values)),
    }


def log_delta_sigma_summary(max_abs: Sequence[float]) -> None:
    if not diag_enabled():
        return
    try:
        summary = summarize_delta_sigma(max_abs)
        if summary:
            logger.info(
                f"[diag] max|ΔΣ| over {summary['executions']} executions: "
                f"median={summary['median']:.3e} min={summary['min']:.3e} max={summary['max']:.3e}"
            )
    except Exception as e:
        logger.error(f"Diagnostics failed (ΔΣ summary): {e}", exc_info=True)
