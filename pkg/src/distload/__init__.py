"""Discretized multivariate normal loading: grid, pdf and state-preparation circuit."""

from .grid import QubitAllocation, Grid, build_grid, validate_covariance
from .discretize import DiscretizedDistribution, discretize, grid_moments, marginal
from .synthesis import (
    SynthesisCost,
    synthesize,
    combine_with_measurement,
    synthesis_cost,
    level_angles,
)
from .dump import save_distribution, load_distribution, distribution_to_dict, distribution_from_dict

__all__ = [
    "QubitAllocation",
    "Grid",
    "build_grid",
    "validate_covariance",
    "DiscretizedDistribution",
    "discretize",
    "grid_moments",
    "marginal",
    "SynthesisCost",
    "synthesize",
    "combine_with_measurement",
    "synthesis_cost",
    "level_angles",
    "save_distribution",
    "load_distribution",
    "distribution_to_dict",
    "distribution_from_dict",
]
