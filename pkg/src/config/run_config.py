"""Run configuration shared by every CLI command."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from ..errors import ParseError
from .defaults import DEFAULT_EXPERIMENT, SAMPLER_NAMES


def _split_list(value: Any) -> Any:
    if isinstance(value, str):
        return [tok.strip() for tok in value.replace("，", ",").split(",") if tok.strip()]
    return value


class RunConfig(BaseModel):
    """Experiment parameters; JSON config file values, overridden by flags."""

    prices: Optional[str] = None
    model: Optional[str] = None
    returns: Optional[str] = None
    mu_annual: Optional[List[float]] = None
    alloc: List[int] = Field(default_factory=lambda: list(DEFAULT_EXPERIMENT["alloc"]))
    bounds_k: float = Field(default=DEFAULT_EXPERIMENT["bounds_k"], gt=0)
    shots: int = Field(default=DEFAULT_EXPERIMENT["shots"], ge=1)
    executions: int = Field(default=DEFAULT_EXPERIMENT["executions"], ge=1)
    seed: int = Field(default=DEFAULT_EXPERIMENT["seed"], ge=0, lt=2**64)
    weights: Optional[List[float]] = None
    policy: Optional[str] = None
    # circuit: shot-sampled; classical: direct multivariate-normal draws
    sampler: str = "circuit"
    out: str = "out"
    workers: int = Field(default=1, ge=1)
    fill_gaps: bool = False
    months: int = Field(default=240, ge=25)
    # 交易成本接口：仅接受 0
    transaction_cost: float = 0.0

    @field_validator("mu_annual", "alloc", "weights", mode="before")
    @classmethod
    def _parse_comma_list(cls, value: Any) -> Any:
        return _split_list(value)

    @field_validator("alloc")
    @classmethod
    def _check_alloc(cls, value: List[int]) -> List[int]:
        if not value or any(q < 1 for q in value):
            raise ValueError(f"alloc entries must be >= 1, got {value}")
        return value

    @field_validator("weights")
    @classmethod
    def _check_weights(cls, value: Optional[List[float]]) -> Optional[List[float]]:
        if value is None:
            return value
        from ..portfolio.backtest import check_weights

        check_weights(value)
        return value

    @field_validator("policy")
    @classmethod
    def _check_policy(cls, value: Optional[str]) -> Optional[str]:
        if value is None:
            return value
        from ..portfolio.policies import RebalancePolicy

        return RebalancePolicy.from_name(value).label

    @field_validator("sampler")
    @classmethod
    def _check_sampler(cls, value: str) -> str:
        value = value.strip().lower()
        if value not in SAMPLER_NAMES:
            raise ValueError(f"unknown sampler {value!r}; expected one of {'|'.join(SAMPLER_NAMES)}")
        return value

    @field_validator("transaction_cost")
    @classmethod
    def _check_cost(cls, value: float) -> float:
        if value != 0.0:
            raise ValueError("transaction costs are not modelled; transaction_cost must be 0")
        return value

    def echo(self) -> Dict[str, Any]:
        """Parameter echo for output metadata headers, without the output directory and worker count."""
        return self.model_dump(mode="json", exclude={"out", "workers"})


def load_run_config(path: Optional[str], overrides: Dict[str, Any]) -> RunConfig:
    """Merge an optional JSON config file with CLI flags (flags win, ``None`` means unset)."""
    values: Dict[str, Any] = {}
    if path:
        try:
            with open(Path(path), "r", encoding="utf-8") as f:
                values.update(json.load(f))
        except (OSError, json.JSONDecodeError) as e:
            raise ParseError(f"cannot read config file {path}: {e}") from e
    values.update({k: v for k, v in overrides.items() if v is not None})
    return RunConfig(**values)
