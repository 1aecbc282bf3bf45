"""Multi-period rebalanced backtest over one return path.

Holdings start at the target weights (month 0 always rebalances), grow by
``exp(r[t][a])`` each month and are reset to the target weights of current
wealth at the start of every rebalance month. No transaction costs.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import BadWeights, EmptyPath, ParseError, TooShort, UnsupportedCost
from ..market import MarketModel
from .execution import ReturnPath, check_path_assets, delta_sigma, delta_sigma_disc
from .policies import RebalancePolicy

logger = logging.getLogger(__name__)

WEIGHT_SUM_TOL = 1e-12


def check_weights(weights: Sequence[float], num_assets: Optional[int] = None) -> np.ndarray:
    w = np.asarray(weights, dtype=float).reshape(-1)
    if num_assets is not None and w.shape[0] != num_assets:
        raise BadWeights(f"{w.shape[0]} weights for {num_assets} assets")
    if w.size == 0 or np.any(~np.isfinite(w)) or np.any(w < 0):
        raise BadWeights(f"weights must be finite and nonnegative, got {w.tolist()}")
    if abs(float(w.sum()) - 1.0) > WEIGHT_SUM_TOL:
        raise BadWeights(f"weights sum to {float(w.sum())!r}, not 1")
    return w


@dataclass(frozen=True, eq=False)
class PortfolioReport:
    policy: RebalancePolicy
    target_weights: np.ndarray
    wealth: np.ndarray  # months + 1 values, wealth[0] == 1
    weights: np.ndarray  # start-of-month weights after any rebalance, months x assets
    terminal_wealth: float
    annualized_return: Optional[float] = None
    annualized_volatility: Optional[float] = None
    delta_sigma: Optional[np.ndarray] = None
    delta_sigma_disc: Optional[np.ndarray] = None
    names: Tuple[str, ...] = field(default=())

    @property
    def months(self) -> int:
        return int(self.wealth.shape[0] - 1)

    def monthly_log_returns(self) -> np.ndarray:
        return np.log(self.wealth[1:] / self.wealth[:-1])

    def to_dict(self) -> Dict[str, Any]:
        def _mat(m: Optional[np.ndarray]):
            return None if m is None else [[float(x) for x in row] for row in m]

        return {
            "names": list(self.names),
            "policy": self.policy.label,
            "target_weights": [float(x) for x in self.target_weights],
            "months": self.months,
            "terminal_wealth": float(self.terminal_wealth),
            "annualized_return": self.annualized_return,
            "annualized_volatility": self.annualized_volatility,
            "wealth": [float(x) for x in self.wealth],
            "weights": _mat(self.weights),
            "delta_sigma": _mat(self.delta_sigma),
            "delta_sigma_disc": _mat(self.delta_sigma_disc),
        }

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "PortfolioReport":
        def _arr(value: Any) -> Optional[np.ndarray]:
            return None if value is None else np.array(value, dtype=float)

        try:
            return cls(
                policy=RebalancePolicy.from_name(doc["policy"]),
                target_weights=np.array(doc["target_weights"], dtype=float),
                wealth=np.array(doc["wealth"], dtype=float),
                weights=np.array(doc["weights"], dtype=float).reshape(-1, len(doc["target_weights"])),
                terminal_wealth=float(doc["terminal_wealth"]),
                annualized_return=doc.get("annualized_return"),
                annualized_volatility=doc.get("annualized_volatility"),
                delta_sigma=_arr(doc.get("delta_sigma")),
                delta_sigma_disc=_arr(doc.get("delta_sigma_disc")),
                names=tuple(doc.get("names", ())),
            )
        except KeyError as e:
            raise ParseError(f"report document misses field {e}") from e


def annualize(wealth: np.ndarray) -> Tuple[float, float]:
    """Geometric annualized return and annualized vol (sample stdev of monthly log returns x sqrt(12))."""
    wealth = np.asarray(wealth, dtype=float)
    months = wealth.shape[0] - 1
    if months < 12:
        raise TooShort(f"annualizing needs at least 12 months, got {months}")
    terminal = wealth[-1] / wealth[0]
    ann_return = float(terminal ** (12.0 / months) - 1.0)
    log_returns = np.log(wealth[1:] / wealth[:-1])
    ann_vol = float(np.std(log_returns, ddof=1) * np.sqrt(12.0))
    return ann_return, ann_vol


def backtest(
    path: ReturnPath,
    weights: Sequence[float],
    policy: RebalancePolicy,
    transaction_cost: float = 0.0,
    model: Optional[MarketModel] = None,
) -> PortfolioReport:
    """Run one rebalanced wealth path; with ``model`` the report also carries ΔΣ and ΔΣ_disc."""
    if transaction_cost != 0.0:
        raise UnsupportedCost("transaction costs are not modelled; pass 0")
    if path.months == 0:
        raise EmptyPath("return path has no months")
    target = check_weights(weights, len(path.names))

    growth = np.exp(path.returns)
    wealth = np.empty(path.months + 1)
    wealth[0] = 1.0
    realized = np.empty((path.months, len(target)))
    holdings = target * wealth[0]
    for t in range(path.months):
        if policy.rebalances_at(t):
            holdings = target * wealth[t]
        realized[t] = holdings / holdings.sum()
        holdings = holdings * growth[t]
        wealth[t + 1] = holdings.sum()

    ann_return = ann_vol = None
    if path.months >= 12:
        ann_return, ann_vol = annualize(wealth)
    else:
        logger.debug(f"[backtest] {path.months} months < 12, skipping annualized stats")

    report = PortfolioReport(
        policy=policy,
        target_weights=target,
        wealth=wealth,
        weights=realized,
        terminal_wealth=float(wealth[-1]),
        annualized_return=ann_return,
        annualized_volatility=ann_vol,
        names=path.names,
    )
    if model is not None:
        report = attach_covariance_diagnostics(report, model, path)
    return report


def attach_covariance_diagnostics(report: PortfolioReport, model: MarketModel, path: ReturnPath) -> PortfolioReport:
    check_path_assets(model, path)
    ds = delta_sigma(model, path) if path.months >= 2 else None
    return replace(report, delta_sigma=ds, delta_sigma_disc=delta_sigma_disc(model))


def save_report(report: PortfolioReport, path: Union[str, Path], metadata: Optional[Dict[str, Any]] = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = report.to_dict()
    if metadata:
        doc["metadata"] = metadata
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(doc, f, indent=2, sort_keys=True)
        f.write("\n")
    return path


def load_report(path: Union[str, Path]) -> PortfolioReport:
    try:
        with open(path, "r", encoding="utf-8") as f:
            doc = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ParseError(f"cannot read report file {path}: {e}") from e
    return PortfolioReport.from_dict(doc)
