"""Circuit intermediate representation, lowering and serialization."""

from .ir import Circuit, GateKind, GateOp, gate_counts, validate
from .lowering import lower, lower_mcry, multiplexor_angles, walsh_hadamard
from .serialization import dumps_circuit, loads_circuit, save_circuit, load_circuit

__all__ = [
    "Circuit",
    "GateKind",
    "GateOp",
    "gate_counts",
    "validate",
    "lower",
    "lower_mcry",
    "multiplexor_angles",
    "walsh_hadamard",
    "dumps_circuit",
    "loads_circuit",
    "save_circuit",
    "load_circuit",
]
