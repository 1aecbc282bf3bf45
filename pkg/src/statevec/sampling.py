"""Shot sampling from a final state.

Inverse-CDF sampling: one uniform draw per shot, located in the cumulative
``|amplitude|^2`` array by binary search. Bitstrings print the highest qubit
first, so the rightmost character is qubit 0.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from ..circuit import Circuit
from ..errors import NotMeasured, SimulationError, ZeroShots
from .seeds import check_seed, make_rng
from .simulator import StateVector, simulate

logger = logging.getLogger(__name__)


def bitstring(index: int, num_qubits: int) -> str:
    return format(int(index), f"0{num_qubits}b")


@dataclass(frozen=True, eq=False)
class ShotResult:
    counts: Dict[str, int]
    shots: int
    seed: int
    num_qubits: int
    # basis-state indices in draw order (shot i = month i downstream)
    draws: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if sum(self.counts.values()) != self.shots:
            raise SimulationError(f"counts sum to {sum(self.counts.values())}, expected {self.shots}")
        for key, value in self.counts.items():
            if len(key) != self.num_qubits or set(key) - {"0", "1"}:
                raise SimulationError(f"malformed bitstring key {key!r} for {self.num_qubits} qubits")
            if value < 0:
                raise SimulationError(f"negative count for {key}")

    def bitstrings(self) -> list[str]:
        """Shots as bitstrings, in draw order."""
        return [bitstring(i, self.num_qubits) for i in self.draws]

    def frequencies(self) -> np.ndarray:
        """Empirical probability per basis-state index."""
        return np.bincount(self.draws, minlength=2**self.num_qubits) / self.shots


def sample(state: StateVector, shots: int, seed: int) -> ShotResult:
    """Draw ``shots`` outcomes; a pure function of (state, shots, seed)."""
    if shots < 1:
        raise ZeroShots(f"shots must be positive, got {shots}")
    seed = check_seed(seed)
    probs = state.probabilities()
    cdf = np.cumsum(probs)
    uniforms = make_rng(seed).random(shots)
    draws = np.searchsorted(cdf, uniforms * cdf[-1], side="right")
    draws = np.minimum(draws, probs.shape[0] - 1).astype(np.int64)

    tally = np.bincount(draws, minlength=probs.shape[0])
    counts = {bitstring(i, state.num_qubits): int(c) for i, c in enumerate(tally) if c}
    return ShotResult(counts=counts, shots=int(shots), seed=seed, num_qubits=state.num_qubits, draws=draws)


def execute(circuit: Circuit, shots: int, seed: int) -> ShotResult:
    """Simulate and sample a circuit that carries its terminal measurement."""
    if not circuit.measured:
        raise NotMeasured("circuit has no terminal measurement; combine it with measurement first")
    return sample(simulate(circuit), shots, seed)


def total_variation(result: ShotResult, state: StateVector) -> float:
    """Total-variation distance between empirical frequencies and ``|amplitude|^2``."""
    return float(0.5 * np.abs(result.frequencies() - state.probabilities()).sum())
