"""Circuit text format: JSON lines.

Line 1 is the header ``{"format": "qalloc-circuit", "version": 1,
"num_qubits": n, "measured": bool, ...metadata}``; every following line is
one gate ``{"kind": "MCRY", "target": 2, "controls": [0, 1], "angles": [...]}``.
Angles are written with ``repr`` (shortest string that round-trips, never
more than 17 significant digits), so a reload is bit-exact.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..errors import ParseError
from .ir import Circuit, GateOp, validate

FORMAT_NAME = "qalloc-circuit"
FORMAT_VERSION = 1


def dumps_circuit(circuit: Circuit, metadata: Optional[Dict[str, Any]] = None) -> str:
    header: Dict[str, Any] = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "num_qubits": circuit.num_qubits,
        "measured": circuit.measured,
    }
    if metadata:
        header["metadata"] = metadata
    lines = [json.dumps(header, sort_keys=True)]
    for op in circuit.ops:
        record = {
            "kind": op.kind.value,
            "target": op.target,
            "controls": list(op.controls),
            "angles": list(op.angles),
        }
        lines.append(json.dumps(record, sort_keys=True))
    return "\n".join(lines) + "\n"


def loads_circuit(text: str) -> Circuit:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParseError("empty circuit document")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as e:
        raise ParseError(f"line 1: bad header: {e}") from e
    if header.get("format") != FORMAT_NAME:
        raise ParseError(f"line 1: not a {FORMAT_NAME} document")

    ops = []
    for lineno, line in enumerate(lines[1:], start=2):
        try:
            rec = json.loads(line)
            ops.append(GateOp(rec["kind"], rec["target"], tuple(rec["controls"]), tuple(rec["angles"])))
        except (json.JSONDecodeError, KeyError, ValueError, TypeError) as e:
            raise ParseError(f"line {lineno}: bad gate record: {e}") from e

    circuit = Circuit(int(header["num_qubits"]), tuple(ops), bool(header["measured"]))
    validate(circuit)
    return circuit


def save_circuit(circuit: Circuit, path: Union[str, Path], metadata: Optional[Dict[str, Any]] = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(dumps_circuit(circuit, metadata))
    return path


def load_circuit(path: Union[str, Path]) -> Circuit:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read circuit file {path}: {e}") from e
    return loads_circuit(text)
