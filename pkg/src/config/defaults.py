"""Experiment parameters as data.

The three-asset experiment: US equities, international equities and global
fixed income, 3 qubits each, bounds at three standard deviations, 120 shots
(ten years of monthly returns) per execution.
"""

# 资产类别（顺序即量子比特块顺序：第一个资产占最低位）
ASSET_NAMES = ("us_equity", "intl_equity", "global_bonds")

DEFAULT_EXPERIMENT = {
    "alloc": (3, 3, 3),
    "bounds_k": 3.0,
    "shots": 120,
    "executions": 1,
    "seed": 0,
    "mu_annual": (0.10, 0.10, 0.06),
}

# Synthetic market used for fixtures: licensed index data are not shipped.
SYNTHETIC_MARKET = {
    "names": ASSET_NAMES,
    "monthly_vols": (0.045, 0.045, 0.015),
    "correlations": (
        (1.0, 0.85, 0.2),
        (0.85, 1.0, 0.2),
        (0.2, 0.2, 1.0),
    ),
    "start": "2000-01",
    "months": 240,
    "start_level": 100.0,
}

SAMPLER_NAMES = ("circuit", "classical")

POLICY_NAMES = ("monthly", "quarterly", "semiannual", "annual", "buyhold")

TOOL_NAME = "qalloc"
TOOL_VERSION = "0.1.0"
