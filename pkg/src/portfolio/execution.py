"""One execution: synthesize -> simulate -> sample -> decode, plus the ΔΣ diagnostic."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..circuit import Circuit
from ..distload import DiscretizedDistribution, Grid, combine_with_measurement, grid_moments, synthesize
from ..errors import DimensionMismatch, PortfolioError, SingularCovariance, TooFewRows, ZeroShots
from ..market import MarketModel, estimate_covariance
from ..statevec import StateVector, make_rng, sample, simulate
from .decode import decode_indices

logger = logging.getLogger(__name__)

BOUNDS_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class ReturnPath:
    """Months x assets monthly log returns; shot ``t`` is month ``t``."""

    names: Tuple[str, ...]
    returns: np.ndarray
    seed: int
    execution_index: int = 0

    def __post_init__(self) -> None:
        returns = np.array(self.returns, dtype=float)
        if returns.ndim != 2 or returns.shape[1] != len(self.names):
            raise PortfolioError(f"return path shape {returns.shape} does not match {len(self.names)} assets")
        returns.setflags(write=False)
        object.__setattr__(self, "returns", returns)
        object.__setattr__(self, "names", tuple(self.names))

    @property
    def months(self) -> int:
        return int(self.returns.shape[0])

    def check_bounds(self, grid: Grid) -> None:
        low_ok = self.returns >= grid.lows - BOUNDS_TOL
        high_ok = self.returns <= grid.highs + BOUNDS_TOL
        if not (np.all(low_ok) and np.all(high_ok)):
            raise PortfolioError("return path leaves the grid bounds")


@dataclass(frozen=True, eq=False)
class PreparedState:
    """Everything an execution needs that does not depend on the seed."""

    model: MarketModel
    dist: DiscretizedDistribution
    circuit: Circuit
    state: StateVector


def prepare(model: MarketModel) -> PreparedState:
    dist = model.distribution()
    circuit = combine_with_measurement(synthesize(dist))
    state = simulate(circuit)
    return PreparedState(model, dist, circuit, state)


def run_execution(
    model: MarketModel,
    shots: int = 120,
    seed: int = 0,
    execution_index: int = 0,
    prepared: Optional[PreparedState] = None,
) -> ReturnPath:
    """Sample ``shots`` months; shots are decoded in the sampler's draw order."""
    prepared = prepared or prepare(model)
    result = sample(prepared.state, shots, seed)
    returns = decode_indices(result.draws, prepared.dist.grid)
    path = ReturnPath(model.names, returns, seed, execution_index)
    path.check_bounds(prepared.dist.grid)
    logger.debug(f"[execution] #{execution_index} seed={seed} shots={shots} distinct outcomes={len(result.counts)}")
    return path


def classical_path(model: MarketModel, months: int = 120, seed: int = 0, execution_index: int = 0) -> ReturnPath:
    """Months drawn straight from N(mu_monthly, sigma_monthly), no grid and no circuit.

    Baseline for the shot-sampled paths: same seed stream, Cholesky-correlated
    standard normals as in ``market.synthetic``.
    """
    if months < 1:
        raise ZeroShots(f"months must be positive, got {months}")
    try:
        chol = np.linalg.cholesky(model.sigma_monthly)
    except np.linalg.LinAlgError as e:
        raise SingularCovariance(f"covariance has no Cholesky factor: {e}") from e
    shocks = make_rng(seed).standard_normal((months, model.num_assets))
    returns = model.mu_monthly + shocks @ chol.T
    logger.debug(f"[execution] classical #{execution_index} seed={seed} months={months}")
    return ReturnPath(model.names, returns, seed, execution_index)


def check_path_assets(model: MarketModel, path: ReturnPath) -> None:
    if path.names != model.names:
        raise DimensionMismatch(
            f"return path assets {list(path.names)} do not match model assets {list(model.names)}"
        )


def delta_sigma(model: MarketModel, path: ReturnPath) -> np.ndarray:
    """Sample covariance of the path (divisor N-1) minus the model covariance."""
    check_path_assets(model, path)
    if path.months < 2:
        raise TooFewRows(f"ΔΣ needs at least 2 months, path has {path.months}")
    return estimate_covariance(path.returns) - model.sigma_monthly


def delta_sigma_disc(model: MarketModel, dist: Optional[DiscretizedDistribution] = None) -> np.ndarray:
    """Deterministic discretization bias: grid-exact covariance minus the model covariance."""
    dist = dist or model.distribution()
    _, cov = grid_moments(dist)
    return cov - model.sigma_monthly
