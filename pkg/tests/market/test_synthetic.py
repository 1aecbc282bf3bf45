import numpy as np

from src.market import monthly_log_returns, synthetic_covariance, synthetic_prices


def test_synthetic_prices_are_seeded():
    a = synthetic_prices(months=60, seed=5)
    b = synthetic_prices(months=60, seed=5)
    np.testing.assert_array_equal(a.levels, b.levels)
    assert not np.array_equal(a.levels, synthetic_prices(months=60, seed=6).levels)


def test_synthetic_layout():
    series = synthetic_prices(months=36, seed=0)
    assert series.dates[0] == "2000-01" and series.dates[-1] == "2002-12"
    assert np.all(series.levels[0] == 100.0)


def test_synthetic_covariance_shape():
    sigma = synthetic_covariance()
    np.testing.assert_allclose(np.sqrt(np.diag(sigma)), [0.045, 0.045, 0.015])
    np.testing.assert_array_equal(sigma, sigma.T)


def test_long_synthetic_history_recovers_parameters():
    returns = monthly_log_returns(synthetic_prices(months=20_000, seed=1))
    np.testing.assert_allclose(np.cov(returns, rowvar=False), synthetic_covariance(), atol=1e-4)
