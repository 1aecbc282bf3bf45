"""Gate-level circuit representation.

Conventions:
  - qubit 0 is the least-significant bit of a basis-state index;
  - an MCRY (uniformly controlled RY) with controls ``c`` picks its angle by
    the integer formed from the control bits, lowest-numbered control as the
    least-significant bit, whatever order ``controls`` is listed in.

Circuits are immutable; ``append``/``extend`` return new circuits.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, Iterable, Tuple

from ..errors import ArityMismatch, DuplicateControl, IndexOutOfRange


class GateKind(str, Enum):
    RY = "RY"
    RZ = "RZ"
    CX = "CX"
    MCRY = "MCRY"


@dataclass(frozen=True)
class GateOp:
    kind: GateKind
    target: int
    controls: Tuple[int, ...] = ()
    angles: Tuple[float, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", GateKind(self.kind))
        object.__setattr__(self, "target", int(self.target))
        object.__setattr__(self, "controls", tuple(int(c) for c in self.controls))
        object.__setattr__(self, "angles", tuple(float(a) for a in self.angles))

    @classmethod
    def ry(cls, target: int, angle: float) -> "GateOp":
        return cls(GateKind.RY, target, (), (float(angle),))

    @classmethod
    def rz(cls, target: int, angle: float) -> "GateOp":
        return cls(GateKind.RZ, target, (), (float(angle),))

    @classmethod
    def cx(cls, control: int, target: int) -> "GateOp":
        return cls(GateKind.CX, target, (control,), ())

    @classmethod
    def mcry(cls, target: int, controls: Iterable[int], angles: Iterable[float]) -> "GateOp":
        return cls(GateKind.MCRY, target, tuple(int(c) for c in controls), tuple(float(a) for a in angles))

    def expected_arity(self) -> Tuple[int, int]:
        """(number of controls, number of angles) this kind requires."""
        if self.kind in (GateKind.RY, GateKind.RZ):
            return 0, 1
        if self.kind is GateKind.CX:
            return 1, 0
        return len(self.controls), 2 ** len(self.controls)

    def validate(self, num_qubits: int) -> None:
        for q in (self.target, *self.controls):
            if not 0 <= q < num_qubits:
                raise IndexOutOfRange(
                    f"{self.kind.value} touches qubit {q}, circuit has {num_qubits} qubits"
                )
        if self.target in self.controls:
            raise DuplicateControl(f"{self.kind.value} target {self.target} is also a control")
        if len(set(self.controls)) != len(self.controls):
            raise DuplicateControl(f"{self.kind.value} repeats a control qubit: {self.controls}")

        n_controls, n_angles = self.expected_arity()
        if self.kind is GateKind.MCRY and not self.controls:
            raise ArityMismatch("MCRY needs at least one control")
        if len(self.controls) != n_controls:
            raise ArityMismatch(
                f"{self.kind.value} expects {n_controls} controls, got {len(self.controls)}"
            )
        if len(self.angles) != n_angles:
            raise ArityMismatch(
                f"{self.kind.value} with {len(self.controls)} controls expects "
                f"{n_angles} angles, got {len(self.angles)}"
            )


@dataclass(frozen=True)
class Circuit:
    num_qubits: int
    ops: Tuple[GateOp, ...] = ()
    measured: bool = False
    _counts: Dict[GateKind, int] = field(default=None, compare=False, repr=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ops", tuple(self.ops))

    def append(self, op: GateOp) -> "Circuit":
        return replace(self, ops=self.ops + (op,), _counts=None)

    def extend(self, ops: Iterable[GateOp]) -> "Circuit":
        return replace(self, ops=self.ops + tuple(ops), _counts=None)

    def with_measurement(self) -> "Circuit":
        return replace(self, measured=True)

    @property
    def counts(self) -> Dict[GateKind, int]:
        if self._counts is None:
            object.__setattr__(self, "_counts", _tally(self.ops))
        return dict(self._counts)


def _tally(ops: Iterable[GateOp]) -> Dict[GateKind, int]:
    counts = {kind: 0 for kind in GateKind}
    for op in ops:
        counts[op.kind] += 1
    return counts


def validate(circuit: Circuit) -> None:
    """Raise the first invariant violation found; return ``None`` when the circuit is valid."""
    if circuit.num_qubits < 1:
        raise IndexOutOfRange(f"num_qubits must be positive, got {circuit.num_qubits}")
    for op in circuit.ops:
        op.validate(circuit.num_qubits)
    if circuit._counts is not None and circuit._counts != _tally(circuit.ops):
        raise ArityMismatch("cached gate counts disagree with the op list")


def gate_counts(circuit: Circuit) -> Dict[str, int]:
    """Exact tally per gate kind, keyed by kind name."""
    return {kind.value: n for kind, n in circuit.counts.items()}
