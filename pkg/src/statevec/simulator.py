"""Dense statevector simulation.

Qubit ``q`` is bit ``q`` of the amplitude index. Reshaped C-order to
``[2] * n``, qubit ``q`` therefore lives on axis ``n - 1 - q``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..circuit import Circuit, GateKind, GateOp, validate
from ..config import debug_enabled, max_qubits
from ..errors import CapacityExceeded, NormDrift, SimulationError

logger = logging.getLogger(__name__)

NORM_TOL = 1e-12

_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_I = np.eye(2, dtype=complex)


@dataclass(frozen=True, eq=False)
class StateVector:
    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.shape != (2**self.num_qubits,):
            raise SimulationError(
                f"expected {2 ** self.num_qubits} amplitudes for {self.num_qubits} qubits, got {amps.shape}"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) >= NORM_TOL:
            raise NormDrift(f"state norm {norm!r} differs from 1 by more than {NORM_TOL}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis(cls, num_qubits: int, index: int = 0) -> "StateVector":
        amps = np.zeros(2**num_qubits, dtype=complex)
        amps[index] = 1.0
        return cls(num_qubits, amps)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


def ry_matrix(theta: float) -> np.ndarray:
    c, s = np.cos(theta / 2.0), np.sin(theta / 2.0)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rz_matrix(theta: float) -> np.ndarray:
    return np.array([[np.exp(-0.5j * theta), 0.0], [0.0, np.exp(0.5j * theta)]], dtype=complex)


def _ry_stack(angles: Sequence[float]) -> np.ndarray:
    half = np.asarray(angles, dtype=float) / 2.0
    c, s = np.cos(half), np.sin(half)
    mats = np.empty((half.shape[0], 2, 2), dtype=complex)
    mats[:, 0, 0] = c
    mats[:, 0, 1] = -s
    mats[:, 1, 0] = s
    mats[:, 1, 1] = c
    return mats


def apply_multiplexed(
    state: np.ndarray, n: int, target: int, controls: Sequence[int], matrices: np.ndarray
) -> np.ndarray:
    """Apply ``matrices[j]`` to ``target`` on the subspace where the controls read ``j``.

    ``j`` uses the lowest-numbered control as least-significant bit.
    """
    ordered = sorted(controls)
    source = [n - 1 - c for c in reversed(ordered)] + [n - 1 - target]
    dest = list(range(len(source)))
    tensor = np.moveaxis(state.reshape([2] * n), source, dest)
    moved_shape = tensor.shape
    block = tensor.reshape(2 ** len(ordered), 2, -1)
    out = np.einsum("jab,jbr->jar", matrices, block)
    return np.moveaxis(out.reshape(moved_shape), dest, source).reshape(-1)


def apply_gate(state: np.ndarray, n: int, op: GateOp) -> np.ndarray:
    if op.kind is GateKind.RY:
        return apply_multiplexed(state, n, op.target, (), ry_matrix(op.angles[0])[None])
    if op.kind is GateKind.RZ:
        return apply_multiplexed(state, n, op.target, (), rz_matrix(op.angles[0])[None])
    if op.kind is GateKind.CX:
        return apply_multiplexed(state, n, op.target, op.controls, np.stack([_I, _X]))
    return apply_multiplexed(state, n, op.target, op.controls, _ry_stack(op.angles))


def simulate(circuit: Circuit, check_norm: bool | None = None) -> StateVector:
    """Apply every gate in order to |0...0> and return the pre-measurement state."""
    validate(circuit)
    n = circuit.num_qubits
    ceiling = max_qubits()
    if n > ceiling:
        raise CapacityExceeded(f"{n} qubits exceeds the simulation ceiling of {ceiling}")
    if check_norm is None:
        check_norm = debug_enabled()

    state = np.zeros(2**n, dtype=complex)
    state[0] = 1.0
    for idx, op in enumerate(circuit.ops):
        state = apply_gate(state, n, op)
        if check_norm:
            drift = abs(float(np.linalg.norm(state)) - 1.0)
            if drift >= NORM_TOL:
                raise NormDrift(f"[simulate] norm drift {drift:.3e} after gate {idx} ({op.kind.value})")
    logger.debug(f"[simulate] {len(circuit.ops)} gates on {n} qubits")
    return StateVector(n, state)
