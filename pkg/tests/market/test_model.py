import math

import numpy as np
import pytest

from src.distload import QubitAllocation
from src.errors import DimensionMismatch, NotPSD, ParseError, TooFewRows
from src.market import (
    annual_to_monthly_log_mean,
    build_model,
    estimate_covariance,
    load_model,
    monthly_log_returns,
    save_model,
)


def _independent_covariance(x):
    centered = x - x.sum(axis=0) / x.shape[0]
    return centered.T @ centered / (x.shape[0] - 1)


def test_identical_rows_give_zero_covariance():
    np.testing.assert_array_equal(estimate_covariance(np.array([[0.1, 0.2], [0.1, 0.2]])), np.zeros((2, 2)))


def test_hand_covariance():
    np.testing.assert_array_equal(estimate_covariance(np.array([[1.0, 0.0], [-1.0, 0.0]])), [[2.0, 0.0], [0.0, 0.0]])


def test_single_row_is_too_few():
    with pytest.raises(TooFewRows):
        estimate_covariance(np.array([[1.0, 2.0]]))


def test_fixture_covariance_matches_independent_script(fixture_series):
    returns = monthly_log_returns(fixture_series)
    cov = estimate_covariance(returns)
    np.testing.assert_allclose(cov, _independent_covariance(returns), atol=1e-14, rtol=0)
    np.testing.assert_array_equal(cov, cov.T)
    assert np.linalg.eigvalsh(cov).min() > -1e-10


def test_random_covariance_is_symmetric_psd():
    rng = np.random.default_rng(8)
    for _ in range(20):
        x = rng.normal(size=(rng.integers(2, 6), 4))
        cov = estimate_covariance(x)
        np.testing.assert_array_equal(cov, cov.T)
        assert np.linalg.eigvalsh(cov).min() > -1e-10


def test_monthly_mean_conversion():
    mu = annual_to_monthly_log_mean([0.0, 0.10, 0.06])
    assert mu[0] == 0.0
    assert abs(mu[1] - math.log(1.10) / 12) < 1e-15
    assert abs(mu[2] - math.log(1.06) / 12) < 1e-15
    assert mu[1] == pytest.approx(0.0079425, abs=5e-8)
    assert mu[2] == pytest.approx(0.0048557, abs=5e-8)


def test_fixture_model(fixture_model):
    assert fixture_model.names == ("us_equity", "intl_equity", "global_bonds")
    vols = np.sqrt(np.diag(fixture_model.sigma_monthly))
    np.testing.assert_allclose(vols, [0.045, 0.045, 0.015], rtol=0.15)
    corr = fixture_model.sigma_monthly[0, 1] / (vols[0] * vols[1])
    assert 0.75 < corr < 0.92


def test_dimension_mismatch(fixture_series):
    with pytest.raises(DimensionMismatch):
        build_model([0.1, 0.1], QubitAllocation((3, 3, 3)), series=fixture_series)
    with pytest.raises(DimensionMismatch):
        build_model([0.1, 0.1, 0.06], QubitAllocation((3, 3)), series=fixture_series)


def test_not_psd_sigma():
    with pytest.raises(NotPSD):
        build_model([0.1, 0.1], QubitAllocation((2, 2)), sigma_monthly=[[1.0, 2.0], [2.0, 1.0]])


def test_model_file_round_trip(tmp_path, fixture_model):
    back = load_model(save_model(fixture_model, tmp_path / "model.json", {"command": "test"}))
    assert back.names == fixture_model.names
    assert back.alloc == fixture_model.alloc and back.k == fixture_model.k
    np.testing.assert_array_equal(back.mu_monthly, fixture_model.mu_monthly)
    np.testing.assert_array_equal(back.sigma_monthly, fixture_model.sigma_monthly)


def test_model_file_must_exist(tmp_path):
    with pytest.raises(ParseError):
        load_model(tmp_path / "missing.json")
