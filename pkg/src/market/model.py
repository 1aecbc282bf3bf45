"""Market model calibration and persistence."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple, Union

import numpy as np

from ..distload import (
    DiscretizedDistribution,
    Grid,
    QubitAllocation,
    build_grid,
    discretize,
    validate_covariance,
)
from ..errors import DimensionMismatch, DistributionError, ParseError, TooFewRows
from .prices import PriceSeries, monthly_log_returns

logger = logging.getLogger(__name__)

FORMAT_NAME = "qalloc-market-model"


def annual_to_monthly_log_mean(mu_annual: Sequence[float]) -> np.ndarray:
    """``ln(1 + mu_annual) / 12``: annual arithmetic expectation -> monthly log mean."""
    mu = np.asarray(mu_annual, dtype=float)
    if np.any(mu <= -1.0):
        raise DistributionError(f"annual expected returns must be > -100%, got {mu.tolist()}")
    return np.log1p(mu) / 12.0


def estimate_covariance(returns: np.ndarray) -> np.ndarray:
    """Unbiased (N-1) sample covariance of the rows; exactly symmetric."""
    returns = np.asarray(returns, dtype=float)
    if returns.ndim == 1:
        returns = returns[:, None]
    if returns.shape[0] < 2:
        raise TooFewRows(f"covariance needs at least 2 rows, got {returns.shape[0]}")
    cov = np.atleast_2d(np.cov(returns, rowvar=False, ddof=1))
    return (cov + cov.T) / 2.0


@dataclass(frozen=True, eq=False)
class MarketModel:
    names: Tuple[str, ...]
    mu_annual: np.ndarray
    mu_monthly: np.ndarray
    sigma_monthly: np.ndarray
    alloc: QubitAllocation
    k: float = 3.0

    @property
    def num_assets(self) -> int:
        return len(self.names)

    def grid(self) -> Grid:
        return build_grid(self.alloc, self.mu_monthly, self.sigma_monthly, self.k)

    def distribution(self) -> DiscretizedDistribution:
        return discretize(self.grid(), self.mu_monthly, self.sigma_monthly)

    def to_dict(self, metadata: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        doc: Dict[str, Any] = {
            "format": FORMAT_NAME,
            "names": list(self.names),
            "mu_annual": [float(x) for x in self.mu_annual],
            "mu_monthly": [float(x) for x in self.mu_monthly],
            "sigma_monthly": [[float(x) for x in row] for row in self.sigma_monthly],
            "alloc": list(self.alloc.qubits_per_dim),
            "k": float(self.k),
        }
        if metadata:
            doc["metadata"] = metadata
        return doc

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "MarketModel":
        if doc.get("format") != FORMAT_NAME:
            raise ParseError(f"not a {FORMAT_NAME} document")
        try:
            return cls(
                names=tuple(doc["names"]),
                mu_annual=np.array(doc["mu_annual"], dtype=float),
                mu_monthly=np.array(doc["mu_monthly"], dtype=float),
                sigma_monthly=validate_covariance(doc["sigma_monthly"], len(doc["names"])),
                alloc=QubitAllocation(tuple(doc["alloc"])),
                k=float(doc["k"]),
            )
        except KeyError as e:
            raise ParseError(f"model document misses field {e}") from e


def build_model(
    mu_annual: Sequence[float],
    alloc: QubitAllocation,
    k: float = 3.0,
    series: Optional[PriceSeries] = None,
    sigma_monthly: Optional[np.ndarray] = None,
    names: Optional[Sequence[str]] = None,
) -> MarketModel:
    """Calibrate from a price series, or take ``sigma_monthly`` as given (exactly one of the two)."""
    if (series is None) == (sigma_monthly is None):
        raise DimensionMismatch("pass exactly one of series / sigma_monthly")
    if series is not None:
        sigma = estimate_covariance(monthly_log_returns(series))
        names = series.names
    else:
        sigma = np.array(sigma_monthly, dtype=float)
    if names is None:
        names = tuple(f"asset{i}" for i in range(sigma.shape[0]))

    mu_annual = np.asarray(mu_annual, dtype=float).reshape(-1)
    n_assets = len(names)
    if not (mu_annual.shape[0] == n_assets == alloc.num_assets == sigma.shape[0]):
        raise DimensionMismatch(
            f"assets={n_assets}, mu_annual={mu_annual.shape[0]}, "
            f"alloc={alloc.num_assets}, sigma={sigma.shape[0]}x{sigma.shape[-1]}"
        )
    if k <= 0:
        raise DistributionError(f"bounds multiplier k must be positive, got {k}")
    sigma = validate_covariance(sigma, n_assets)
    sigma = (sigma + sigma.T) / 2.0

    model = MarketModel(
        names=tuple(names),
        mu_annual=mu_annual,
        mu_monthly=annual_to_monthly_log_mean(mu_annual),
        sigma_monthly=sigma,
        alloc=alloc,
        k=float(k),
    )
    logger.info(
        f"[market] model assets={list(model.names)} alloc={list(alloc.qubits_per_dim)} k={k} "
        f"monthly vols={np.sqrt(np.diag(sigma)).round(5).tolist()}"
    )
    return model


def save_model(model: MarketModel, path: Union[str, Path], metadata: Optional[Dict[str, Any]] = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(model.to_dict(metadata), f, indent=2, sort_keys=True)
        f.write("\n")
    return path


def load_model(path: Union[str, Path]) -> MarketModel:
    try:
        with open(path, "r", encoding="utf-8") as f:
            doc = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ParseError(f"cannot read model file {path}: {e}") from e
    return MarketModel.from_dict(doc)
