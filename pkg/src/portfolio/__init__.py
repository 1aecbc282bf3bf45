"""Shots -> monthly return paths -> rebalanced wealth paths, plus the ΔΣ diagnostic."""

from .decode import decode, decode_indices
from .policies import RebalancePolicy
from .execution import (
    ReturnPath,
    PreparedState,
    prepare,
    run_execution,
    classical_path,
    check_path_assets,
    delta_sigma,
    delta_sigma_disc,
)
from .backtest import (
    PortfolioReport,
    check_weights,
    backtest,
    annualize,
    attach_covariance_diagnostics,
    save_report,
    load_report,
)
from .paths import path_filename, return_path_frame, save_return_path, load_return_path, load_return_paths
from .compare import compare_policies, return_histogram

__all__ = [
    "decode",
    "decode_indices",
    "RebalancePolicy",
    "ReturnPath",
    "PreparedState",
    "prepare",
    "run_execution",
    "classical_path",
    "check_path_assets",
    "delta_sigma",
    "delta_sigma_disc",
    "PortfolioReport",
    "check_weights",
    "backtest",
    "annualize",
    "attach_covariance_diagnostics",
    "save_report",
    "load_report",
    "path_filename",
    "return_path_frame",
    "save_return_path",
    "load_return_path",
    "load_return_paths",
    "compare_policies",
    "return_histogram",
]
