"""Statevector simulation and seeded shot sampling."""

from .simulator import StateVector, simulate, apply_gate, ry_matrix, rz_matrix
from .sampling import ShotResult, sample, execute, total_variation, bitstring
from .seeds import derive_seed, derive_seeds, make_rng

__all__ = [
    "StateVector",
    "simulate",
    "apply_gate",
    "ry_matrix",
    "rz_matrix",
    "ShotResult",
    "sample",
    "execute",
    "total_variation",
    "bitstring",
    "derive_seed",
    "derive_seeds",
    "make_rng",
]
