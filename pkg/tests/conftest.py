from pathlib import Path

import numpy as np
import pytest

from src.config import DEFAULT_EXPERIMENT
from src.distload import QubitAllocation
from src.market import PriceSeries, build_model, save_prices, synthetic_covariance, synthetic_prices

MU_ANNUAL = DEFAULT_EXPERIMENT["mu_annual"]


@pytest.fixture(scope="session")
def fixture_series() -> PriceSeries:
    """240 months of synthetic index levels for the three asset classes."""
    return synthetic_prices(months=240, seed=0)


@pytest.fixture
def prices_csv(tmp_path: Path, fixture_series: PriceSeries) -> Path:
    return save_prices(fixture_series, tmp_path / "prices.csv", ["synthetic fixture"])


@pytest.fixture(scope="session")
def fixture_model(fixture_series):
    """The [3,3,3] experiment calibrated on the synthetic fixture."""
    return build_model(MU_ANNUAL, QubitAllocation((3, 3, 3)), 3.0, series=fixture_series)


@pytest.fixture(scope="session")
def two_asset_model(fixture_model):
    def _make(alloc):
        return build_model(
            MU_ANNUAL[:2],
            QubitAllocation(tuple(alloc)),
            3.0,
            sigma_monthly=fixture_model.sigma_monthly[:2, :2],
            names=fixture_model.names[:2],
        )

    return _make


@pytest.fixture(scope="session")
def synthetic_sigma() -> np.ndarray:
    return synthetic_covariance()
