from .metrics import (
    bin_integrated_marginals,
    discretization_gap,
    log_discretization_report,
    log_sampling_tvd,
    summarize_delta_sigma,
    log_delta_sigma_summary,
)

__all__ = [
    "bin_integrated_marginals",
    "discretization_gap",
    "log_discretization_report",
    "log_sampling_tvd",
    "summarize_delta_sigma",
    "log_delta_sigma_summary",
]
