"""Lowering of uniformly controlled RY gates to RY + CX.

An MCRY with k controls and angles ``alpha`` becomes 2^k steps of
``RY(theta_i)`` on the target followed by ``CX(control_{p_i}, target)``.
``p_i`` is the control position whose bit flips between Gray codes
``g(i)`` and ``g(i+1)`` (cyclically, so the last CX uses the highest
position). For control value ``j`` the target then sees
``RY(sum_i (-1)^popcount(j & g(i)) * theta_i)``, which inverts to
``theta_i = WHT(alpha)[g(i)] / 2^k``.
"""

from __future__ import annotations

import logging
from typing import List

import numpy as np

from .ir import Circuit, GateKind, GateOp, validate

logger = logging.getLogger(__name__)


def walsh_hadamard(values: np.ndarray) -> np.ndarray:
    """Unnormalized fast Walsh-Hadamard transform: ``out[m] = sum_j (-1)^popcount(j & m) values[j]``."""
    out = np.array(values, dtype=float, copy=True)
    size = out.shape[0]
    half = 1
    while half < size:
        blocks = out.reshape(-1, 2, half)
        a = blocks[:, 0, :].copy()
        b = blocks[:, 1, :]
        blocks[:, 0, :] = a + b
        blocks[:, 1, :] = a - b
        half *= 2
    return out


def gray_code(i: int) -> int:
    return i ^ (i >> 1)


def multiplexor_angles(angles: np.ndarray) -> np.ndarray:
    """RY angles of the lowered sequence for the given multiplexor angles."""
    size = angles.shape[0]
    transformed = walsh_hadamard(angles)
    order = np.array([gray_code(i) for i in range(size)], dtype=np.int64)
    return transformed[order] / size


def _control_position(step: int, k: int) -> int:
    if step == 2**k - 1:
        return k - 1
    nxt = step + 1
    return (nxt & -nxt).bit_length() - 1


def lower_mcry(op: GateOp) -> List[GateOp]:
    """Replace one MCRY with 2^k RY and 2^k CX."""
    controls = sorted(op.controls)
    k = len(controls)
    thetas = multiplexor_angles(np.asarray(op.angles, dtype=float))
    out: List[GateOp] = []
    for step, theta in enumerate(thetas):
        out.append(GateOp.ry(op.target, float(theta)))
        out.append(GateOp.cx(controls[_control_position(step, k)], op.target))
    return out


def lower(circuit: Circuit) -> Circuit:
    """Return an equivalent circuit containing only RY, RZ and CX."""
    validate(circuit)
    if not any(op.kind is GateKind.MCRY for op in circuit.ops):
        return circuit
    ops: List[GateOp] = []
    for op in circuit.ops:
        if op.kind is GateKind.MCRY:
            ops.extend(lower_mcry(op))
        else:
            ops.append(op)
    lowered = Circuit(circuit.num_qubits, tuple(ops), circuit.measured)
    logger.debug(f"[lower] {len(circuit.ops)} ops -> {len(ops)} ops on {circuit.num_qubits} qubits")
    return lowered
