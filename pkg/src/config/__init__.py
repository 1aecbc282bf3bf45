"""Configuration management for the allocation experiment."""

from .defaults import (
    ASSET_NAMES,
    DEFAULT_EXPERIMENT,
    SYNTHETIC_MARKET,
    POLICY_NAMES,
    SAMPLER_NAMES,
    TOOL_NAME,
    TOOL_VERSION,
)
from .settings import max_qubits, debug_enabled, diag_enabled, default_workers
from .run_config import RunConfig, load_run_config

__all__ = [
    "ASSET_NAMES",
    "DEFAULT_EXPERIMENT",
    "SYNTHETIC_MARKET",
    "POLICY_NAMES",
    "SAMPLER_NAMES",
    "TOOL_NAME",
    "TOOL_VERSION",
    "max_qubits",
    "debug_enabled",
    "diag_enabled",
    "default_workers",
    "RunConfig",
    "load_run_config",
]
