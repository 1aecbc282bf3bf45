"""Cross-execution policy comparison and per-asset shot histograms."""

from __future__ import annotations

import logging
from typing import Iterable, Optional, Sequence

import numpy as np
import polars as pl

from ..distload import Grid
from ..errors import EmptyPath
from .backtest import backtest
from .execution import ReturnPath
from .policies import RebalancePolicy

logger = logging.getLogger(__name__)


def compare_policies(
    paths: Sequence[ReturnPath],
    weights: Sequence[float],
    policies: Optional[Iterable[RebalancePolicy]] = None,
) -> pl.DataFrame:
    """Backtest every path under every policy; one summary row per policy."""
    if not paths:
        raise EmptyPath("no return paths to compare")
    policies = list(policies) if policies is not None else list(RebalancePolicy)

    rows = []
    for policy in policies:
        reports = [backtest(p, weights, policy) for p in paths]
        terminal = np.array([r.terminal_wealth for r in reports])
        ann_ret = [r.annualized_return for r in reports if r.annualized_return is not None]
        ann_vol = [r.annualized_volatility for r in reports if r.annualized_volatility is not None]
        rows.append(
            {
                "policy": policy.label,
                "executions": len(reports),
                "mean_terminal_wealth": float(terminal.mean()),
                "median_terminal_wealth": float(np.median(terminal)),
                "p05_terminal_wealth": float(np.percentile(terminal, 5)),
                "mean_annualized_return": float(np.mean(ann_ret)) if ann_ret else None,
                "mean_annualized_volatility": float(np.mean(ann_vol)) if ann_vol else None,
            }
        )
        logger.debug(f"[compare] {policy.label}: mean terminal wealth {terminal.mean():.6f}")
    return pl.DataFrame(
        rows,
        schema={
            "policy": pl.Utf8,
            "executions": pl.Int64,
            "mean_terminal_wealth": pl.Float64,
            "median_terminal_wealth": pl.Float64,
            "p05_terminal_wealth": pl.Float64,
            "mean_annualized_return": pl.Float64,
            "mean_annualized_volatility": pl.Float64,
        },
    )


def return_histogram(path: ReturnPath, grid: Grid) -> pl.DataFrame:
    """Long table ``asset, grid_index, log_return, count`` covering every grid point."""
    frames = []
    for d, name in enumerate(path.names):
        axis = grid.axis(d)
        idx = np.rint((path.returns[:, d] - grid.lows[d]) / grid.step(d)).astype(np.int64)
        idx = np.clip(idx, 0, axis.shape[0] - 1)
        counts = np.bincount(idx, minlength=axis.shape[0])
        frames.append(
            pl.DataFrame(
                {
                    "asset": [name] * axis.shape[0],
                    "grid_index": np.arange(axis.shape[0], dtype=np.int64),
                    "log_return": axis,
                    "count": counts.astype(np.int64),
                }
            )
        )
    return pl.concat(frames, how="vertical")
