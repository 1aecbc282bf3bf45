import numpy as np
import pytest

from src.circuit import Circuit, GateKind, GateOp, gate_counts, lower, lower_mcry, walsh_hadamard
from src.distload import QubitAllocation, build_grid, discretize, synthesize
from src.statevec import apply_gate, ry_matrix, simulate


def multiplexor_matrix(n, target, controls, angles):
    """Dense matrix of an MCRY built bit by bit, independent of the simulator's tensor code."""
    size = 2**n
    u = np.zeros((size, size), dtype=complex)
    ordered = sorted(controls)
    for col in range(size):
        j = sum(((col >> c) & 1) << pos for pos, c in enumerate(ordered))
        t = (col >> target) & 1
        m = ry_matrix(angles[j])
        for out_bit in (0, 1):
            row = (col & ~(1 << target)) | (out_bit << target)
            u[row, col] += m[out_bit, t]
    return u


def _apply_ops(state, n, ops):
    for op in ops:
        state = apply_gate(state, n, op)
    return state


def test_walsh_hadamard_matches_definition():
    rng = np.random.default_rng(3)
    values = rng.normal(size=8)
    expected = [sum((-1) ** bin(j & m).count("1") * values[j] for j in range(8)) for m in range(8)]
    np.testing.assert_allclose(walsh_hadamard(values), expected, atol=1e-14)


def test_circuit_without_mcry_is_returned_unchanged():
    c = Circuit(2, (GateOp.ry(0, 0.3), GateOp.cx(0, 1), GateOp.rz(1, 0.2)))
    assert lower(c) == c


@pytest.mark.parametrize(
    "n,target,controls",
    [
        (2, 0, (1,)),
        (2, 1, (0,)),
        (3, 0, (1, 2)),
        (3, 1, (2, 0)),
        (4, 3, (0, 1, 2)),
    ],
)
def test_lowered_mcry_matches_multiplexor_on_every_basis_state(n, target, controls):
    rng = np.random.default_rng(len(controls) * 10 + target)
    angles = rng.uniform(-np.pi, np.pi, size=2 ** len(controls))
    op = GateOp.mcry(target, controls, angles)
    lowered = lower_mcry(op)
    assert sum(o.kind is GateKind.RY for o in lowered) == 2 ** len(controls)
    assert sum(o.kind is GateKind.CX for o in lowered) == 2 ** len(controls)

    u = multiplexor_matrix(n, target, controls, angles)
    for col in range(2**n):
        basis = np.zeros(2**n, dtype=complex)
        basis[col] = 1.0
        np.testing.assert_allclose(apply_gate(basis, n, op), u[:, col], atol=1e-12)
        np.testing.assert_allclose(_apply_ops(basis, n, lowered), u[:, col], atol=1e-12)


def test_one_control_lowering_shape():
    lowered = lower_mcry(GateOp.mcry(0, (1,), (0.4, -1.1)))
    assert [o.kind for o in lowered] == [GateKind.RY, GateKind.CX, GateKind.RY, GateKind.CX]
    assert all(o.controls == (1,) for o in lowered if o.kind is GateKind.CX)


def test_lower_is_idempotent_and_keeps_measurement():
    c = Circuit(3, (GateOp.ry(2, 0.7), GateOp.mcry(1, (2,), (0.1, 0.9)), GateOp.mcry(0, (1, 2), (0.2, 0.4, 0.6, 0.8))))
    once = lower(c.with_measurement())
    assert once.measured
    assert lower(once) == once
    assert gate_counts(once)["MCRY"] == 0


def test_lowered_and_native_state_prep_simulate_identically():
    rng = np.random.default_rng(11)
    mu = np.array([0.01, -0.02])
    a = rng.normal(size=(2, 2))
    sigma = a @ a.T + 0.5 * np.eye(2)
    alloc = QubitAllocation((2, 2))
    dist = discretize(build_grid(alloc, mu, sigma), mu, sigma)
    native = synthesize(dist)
    np.testing.assert_allclose(simulate(lower(native)).amplitudes, simulate(native).amplitudes, atol=1e-12)


@pytest.mark.parametrize("alloc,expected", [((3,), 7), ((3, 3, 3), 511)])
def test_lowered_state_prep_ry_count(alloc, expected):
    alloc = QubitAllocation(alloc)
    mu = np.zeros(alloc.num_assets)
    sigma = np.eye(alloc.num_assets)
    circuit = lower(synthesize(discretize(build_grid(alloc, mu, sigma), mu, sigma)))
    counts = gate_counts(circuit)
    assert counts["RY"] == expected
    assert counts["RZ"] == 0
