import json

import numpy as np
import pytest

from src.circuit import Circuit, GateOp, dumps_circuit, load_circuit, loads_circuit, save_circuit
from src.errors import ParseError


def _awkward_circuit():
    rng = np.random.default_rng(5)
    angles = rng.uniform(-np.pi, np.pi, size=4) / 3.0
    return Circuit(
        3,
        (
            GateOp.ry(2, 0.1 + 0.2),
            GateOp.mcry(0, (1, 2), angles),
            GateOp.cx(0, 1),
            GateOp.rz(1, -1e-300),
        ),
        measured=True,
    )


def test_round_trip_is_bit_exact(tmp_path):
    c = _awkward_circuit()
    path = save_circuit(c, tmp_path / "c.jsonl", {"command": "test"})
    back = load_circuit(path)
    assert back == c
    for a, b in zip(back.ops, c.ops):
        assert a.angles == b.angles


def test_header_then_one_record_per_gate():
    text = dumps_circuit(_awkward_circuit())
    lines = text.strip().split("\n")
    header = json.loads(lines[0])
    assert header["num_qubits"] == 3 and header["measured"] is True
    assert len(lines) == 1 + 4
    assert json.loads(lines[2])["kind"] == "MCRY"


def test_bad_record_reports_line_number():
    text = dumps_circuit(Circuit(2, (GateOp.ry(0, 0.5),))) + '{"kind": "RY"}\n'
    with pytest.raises(ParseError, match="line 3"):
        loads_circuit(text)


def test_invalid_gate_in_file_is_rejected():
    text = dumps_circuit(Circuit(2)) + json.dumps({"kind": "CX", "target": 1, "controls": [1], "angles": []}) + "\n"
    with pytest.raises(ValueError):
        loads_circuit(text)


def test_not_a_circuit_document():
    with pytest.raises(ParseError):
        loads_circuit('{"format": "other"}\n')
