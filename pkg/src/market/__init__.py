"""Market calibration: price tables, log returns, covariance and the market model."""

from .prices import (
    PriceSeries,
    load_prices,
    save_prices,
    monthly_log_returns,
    levels_from_returns,
    month_ordinal,
    month_label,
)
from .model import (
    MarketModel,
    annual_to_monthly_log_mean,
    estimate_covariance,
    build_model,
    save_model,
    load_model,
)
from .synthetic import synthetic_prices, synthetic_covariance

__all__ = [
    "PriceSeries",
    "load_prices",
    "save_prices",
    "monthly_log_returns",
    "levels_from_returns",
    "month_ordinal",
    "month_label",
    "MarketModel",
    "annual_to_monthly_log_mean",
    "estimate_covariance",
    "build_model",
    "save_model",
    "load_model",
    "synthetic_prices",
    "synthetic_covariance",
]
