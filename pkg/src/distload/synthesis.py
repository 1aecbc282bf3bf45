"""State-preparation synthesis by recursive bisection.

Level ``k`` (k = 0 .. n-1) rotates qubit ``n-1-k``, controlled by the
``k`` qubits above it. For each value ``j`` of those controls the angle
``2*atan2(sqrt(P(j,1)), sqrt(P(j,0)))`` splits the conditional mass between
the two halves, so the final amplitudes are ``sqrt(p)``: real and
nonnegative. Level 0 is a plain RY; the others are MCRY gates with ``2**k``
angles. Lowered, the circuit holds ``2**n - 1`` RY gates.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np

from ..circuit import Circuit, GateOp, gate_counts, lower
from ..errors import AlreadyMeasured
from .discretize import DiscretizedDistribution, discretize
from .grid import QubitAllocation, build_grid

logger = logging.getLogger(__name__)


def level_angles(probabilities: np.ndarray, level: int) -> np.ndarray:
    """Angles of bisection level ``level`` indexed by the value of the controlling qubits."""
    masses = probabilities.reshape(2**level, 2, -1).sum(axis=2)
    return 2.0 * np.arctan2(np.sqrt(masses[:, 1]), np.sqrt(masses[:, 0]))


def synthesize(dist: DiscretizedDistribution) -> Circuit:
    n = dist.num_qubits
    probs = np.asarray(dist.probabilities, dtype=float)
    ops: List[GateOp] = []
    for level in range(n):
        target = n - 1 - level
        angles = level_angles(probs, level)
        if level == 0:
            ops.append(GateOp.ry(target, float(angles[0])))
        else:
            controls = tuple(range(target + 1, n))
            ops.append(GateOp.mcry(target, controls, angles))
    logger.debug(f"[synthesis] {n} levels, {2 ** n - 1} rotation angles")
    return Circuit(n, tuple(ops))


def combine_with_measurement(circuit: Circuit) -> Circuit:
    """Attach the terminal full measurement; sampling is legal afterwards."""
    if circuit.measured:
        raise AlreadyMeasured("circuit already carries its terminal measurement")
    return circuit.with_measurement()


@dataclass
class SynthesisCost:
    alloc: QubitAllocation
    total_qubits: int
    predicted_ry: int
    native_counts: Dict[str, int]
    lowered_counts: Dict[str, int]
    synthesis_seconds: float
    lowering_seconds: float

    def counts_report(self) -> Dict[str, object]:
        """Deterministic part of the report (no timings)."""
        return {
            "alloc": list(self.alloc.qubits_per_dim),
            "total_qubits": self.total_qubits,
            "predicted_ry": self.predicted_ry,
            "native_counts": self.native_counts,
            "lowered_counts": self.lowered_counts,
        }

    def timing_report(self) -> Dict[str, object]:
        return {
            "alloc": list(self.alloc.qubits_per_dim),
            "synthesis_ms": self.synthesis_seconds * 1000.0,
            "lowering_ms": self.lowering_seconds * 1000.0,
        }


def _reference_distribution(alloc: QubitAllocation, k: float) -> DiscretizedDistribution:
    mu = np.zeros(alloc.num_assets)
    sigma = np.eye(alloc.num_assets)
    return discretize(build_grid(alloc, mu, sigma, k), mu, sigma)


def synthesis_cost(
    alloc: QubitAllocation,
    dist: Optional[DiscretizedDistribution] = None,
    repeats: int = 1,
    k: float = 3.0,
) -> SynthesisCost:
    """Predicted and tallied gate counts plus measured synthesis / lowering wall time.

    Without ``dist`` an independent standard normal over ``alloc`` is used;
    build cost depends only on the qubit count. Timings are the minimum over
    ``repeats`` runs.
    """
    if dist is None:
        dist = _reference_distribution(alloc, k)
    synth_times, lower_times = [], []
    circuit = lowered = None
    for _ in range(max(1, repeats)):
        start = time.perf_counter()
        circuit = synthesize(dist)
        synth_times.append(time.perf_counter() - start)
        start = time.perf_counter()
        lowered = lower(circuit)
        lower_times.append(time.perf_counter() - start)

    cost = SynthesisCost(
        alloc=alloc,
        total_qubits=alloc.total,
        predicted_ry=2**alloc.total - 1,
        native_counts=gate_counts(circuit),
        lowered_counts=gate_counts(lowered),
        synthesis_seconds=min(synth_times),
        lowering_seconds=min(lower_times),
    )
    if cost.lowered_counts["RY"] != cost.predicted_ry:
        logger.warning(
            f"[synthesis] lowered RY count {cost.lowered_counts['RY']} != predicted {cost.predicted_ry}"
        )
    logger.info(
        f"[synthesis] alloc={list(alloc.qubits_per_dim)} qubits={alloc.total} "
        f"RY={cost.lowered_counts['RY']} CX={cost.lowered_counts['CX']} "
        f"synth={cost.synthesis_seconds * 1000:.2f}ms lower={cost.lowering_seconds * 1000:.2f}ms"
    )
    return cost
