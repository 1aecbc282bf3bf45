import math

import numpy as np
import pytest

from src.errors import BadWeights, EmptyPath, TooShort, UnsupportedCost
from src.portfolio import (
    PortfolioReport,
    RebalancePolicy,
    ReturnPath,
    annualize,
    backtest,
    check_weights,
    load_report,
    save_report,
)

LN2 = math.log(2.0)


def _path(returns, names=None):
    returns = np.asarray(returns, dtype=float)
    names = names or tuple(f"a{i}" for i in range(returns.shape[1]))
    return ReturnPath(names, returns, seed=0)


def test_three_month_hand_fixture():
    path = _path([[LN2, 0.0], [0.0, 0.0], [0.0, LN2]])
    report = backtest(path, [0.5, 0.5], RebalancePolicy.MONTHLY)
    np.testing.assert_allclose(report.wealth, [1.0, 1.5, 1.5, 2.25], atol=1e-12)
    assert abs(report.terminal_wealth - 2.25) < 1e-12


def test_zero_returns_keep_wealth_flat():
    for policy in RebalancePolicy:
        report = backtest(_path(np.zeros((24, 3))), [0.2, 0.3, 0.5], policy)
        assert np.all(report.wealth == 1.0)
        np.testing.assert_allclose(report.weights, np.tile([0.2, 0.3, 0.5], (24, 1)), atol=1e-15)


def test_single_asset_buy_and_hold():
    r = np.random.default_rng(0).normal(0.005, 0.04, size=(60, 1))
    report = backtest(_path(r), [1.0], RebalancePolicy.BUY_AND_HOLD)
    assert report.terminal_wealth == pytest.approx(math.exp(r.sum()), rel=1e-12)


def test_randomized_policy_invariants():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        months = int(rng.integers(1, 40))
        assets = int(rng.integers(1, 5))
        r = rng.normal(0.0, 0.05, size=(months, assets))
        w = rng.dirichlet(np.ones(assets))
        w[-1] = 1.0 - w[:-1].sum()
        if abs(w.sum() - 1.0) > 1e-12 or np.any(w < 0):
            continue
        path = _path(r)

        monthly = backtest(path, w, RebalancePolicy.MONTHLY)
        np.testing.assert_allclose(monthly.weights, np.tile(w, (months, 1)), atol=1e-12)

        held = backtest(path, w, RebalancePolicy.BUY_AND_HOLD)
        closed_form = float(np.sum(w * np.exp(r.sum(axis=0))))
        assert abs(held.terminal_wealth - closed_form) < 1e-12 * max(1.0, closed_form)

        for report in (monthly, held):
            assert np.all(report.wealth > 0)
            np.testing.assert_allclose(report.weights.sum(axis=1), 1.0, atol=1e-12)


def test_permuting_assets_and_weights_jointly():
    rng = np.random.default_rng(4)
    r = rng.normal(0.0, 0.05, size=(36, 3))
    w = np.array([0.5, 0.3, 0.2])
    perm = [2, 0, 1]
    for policy in RebalancePolicy:
        a = backtest(_path(r), w, policy)
        b = backtest(_path(r[:, perm]), w[perm], policy)
        assert b.terminal_wealth == pytest.approx(a.terminal_wealth, rel=1e-13)


def test_quarterly_rebalance_months():
    r = np.tile([0.02, -0.01], (7, 1))
    report = backtest(_path(r), [0.5, 0.5], RebalancePolicy.QUARTERLY)
    for t in (0, 3, 6):
        np.testing.assert_allclose(report.weights[t], [0.5, 0.5], atol=1e-15)
    assert report.weights[1][0] > 0.5


def test_policy_schedules():
    assert [RebalancePolicy.SEMIANNUAL.rebalances_at(t) for t in range(13)] == [
        t % 6 == 0 for t in range(13)
    ]
    assert [t for t in range(30) if RebalancePolicy.BUY_AND_HOLD.rebalances_at(t)] == [0]
    assert [t for t in range(30) if RebalancePolicy.ANNUAL.rebalances_at(t)] == [0, 12, 24]


@pytest.mark.parametrize(
    "weights",
    [[0.5, 0.6], [-0.1, 1.1], [1.0], [0.5, 0.5 + 1e-9], [float("nan"), 1.0]],
)
def test_bad_weights(weights):
    with pytest.raises(BadWeights):
        check_weights(weights, 2)


def test_empty_path():
    with pytest.raises(EmptyPath):
        backtest(_path(np.zeros((0, 2))), [0.5, 0.5], RebalancePolicy.MONTHLY)


def test_transaction_costs_are_rejected():
    with pytest.raises(UnsupportedCost):
        backtest(_path(np.zeros((3, 2))), [0.5, 0.5], RebalancePolicy.MONTHLY, transaction_cost=0.001)


def test_annualize_flat():
    assert annualize(np.ones(25)) == (0.0, 0.0)


def test_annualize_doubling_over_ten_years():
    wealth = np.exp(np.linspace(0.0, LN2, 121))
    ann_return, _ = annualize(wealth)
    assert ann_return == pytest.approx(2**0.1 - 1, abs=1e-12)
    assert ann_return == pytest.approx(0.07177, abs=1e-5)


def test_annualize_constant_growth_has_no_vol():
    wealth = 1.01 ** np.arange(13)
    _, vol = annualize(wealth)
    assert vol == pytest.approx(0.0, abs=1e-12)


def test_annualize_needs_a_year():
    with pytest.raises(TooShort):
        annualize(np.ones(12))


def test_short_paths_skip_annualized_stats():
    report = backtest(_path(np.zeros((5, 2))), [0.5, 0.5], RebalancePolicy.MONTHLY)
    assert report.annualized_return is None and report.annualized_volatility is None


def test_report_with_model_diagnostics_round_trips(tmp_path, fixture_model):
    from src.portfolio import run_execution

    path = run_execution(fixture_model, 120, 0)
    report = backtest(path, [0.4, 0.4, 0.2], RebalancePolicy.ANNUAL, model=fixture_model)
    assert report.delta_sigma.shape == (3, 3)
    assert report.delta_sigma_disc.shape == (3, 3)

    back = load_report(save_report(report, tmp_path / "report.json", {"command": "test"}))
    assert isinstance(back, PortfolioReport)
    assert back.policy is RebalancePolicy.ANNUAL
    np.testing.assert_array_equal(back.wealth, report.wealth)
    np.testing.assert_array_equal(back.weights, report.weights)
    np.testing.assert_array_equal(back.delta_sigma, report.delta_sigma)
    assert back.annualized_return == report.annualized_return
