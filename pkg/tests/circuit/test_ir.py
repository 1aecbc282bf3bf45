import math

import pytest

from src.circuit import Circuit, GateKind, GateOp, gate_counts, validate
from src.errors import ArityMismatch, DuplicateControl, IndexOutOfRange


def test_empty_circuit_is_valid():
    validate(Circuit(3))


def test_cx_with_control_equal_to_target_is_duplicate():
    with pytest.raises(DuplicateControl):
        validate(Circuit(2, (GateOp.cx(1, 1),)))


def test_mcry_with_wrong_angle_count():
    op = GateOp.mcry(0, (1, 2), (0.1, 0.2, 0.3))
    with pytest.raises(ArityMismatch):
        validate(Circuit(3, (op,)))


def test_repeated_controls_rejected():
    op = GateOp.mcry(0, (1, 1), (0.1, 0.2, 0.3, 0.4))
    with pytest.raises(DuplicateControl):
        validate(Circuit(3, (op,)))


@pytest.mark.parametrize(
    "op",
    [
        GateOp.ry(3, 0.5),
        GateOp.cx(0, 5),
        GateOp.mcry(0, (4,), (0.1, 0.2)),
    ],
)
def test_index_out_of_range(op):
    with pytest.raises(IndexOutOfRange):
        validate(Circuit(3, (op,)))


def test_rotation_needs_exactly_one_angle():
    op = GateOp(GateKind.RY, 0, (), (0.1, 0.2))
    with pytest.raises(ArityMismatch):
        validate(Circuit(1, (op,)))


def test_cx_takes_no_angles():
    op = GateOp(GateKind.CX, 0, (1,), (0.1,))
    with pytest.raises(ArityMismatch):
        validate(Circuit(2, (op,)))


def test_empty_circuit_counts_are_zero():
    assert gate_counts(Circuit(4)) == {"RY": 0, "RZ": 0, "CX": 0, "MCRY": 0}


def test_append_returns_new_circuit():
    base = Circuit(2)
    grown = base.append(GateOp.ry(0, math.pi)).extend([GateOp.cx(0, 1), GateOp.rz(1, 0.3)])
    assert base.ops == ()
    assert len(grown.ops) == 3
    assert gate_counts(grown) == {"RY": 1, "RZ": 1, "CX": 1, "MCRY": 0}


def test_with_measurement_keeps_ops():
    c = Circuit(2, (GateOp.ry(0, 0.1),))
    m = c.with_measurement()
    assert m.measured and not c.measured
    assert m.ops == c.ops
