"""Gate and circuit intermediate representation.

Circuits are immutable once built. `CircuitBuilder` is the single-owner
mutable front end every synthesis routine writes into.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import DimensionError, UncontrollableGateError, WireError


class GateKind(Enum):
    """Primitive gate kinds; the value is the text-format mnemonic"""

    HADAMARD = "h"
    PAULI_X = "x"
    PHASE = "p"
    CONTROLLED_PHASE = "cp"
    MULTI_CONTROLLED_PHASE = "mcp"
    CONTROLLED_X = "cx"
    MULTI_CONTROLLED_X = "mcx"
    SWAP = "swap"

    @property
    def mnemonic(self) -> str:
        return self.value

    @property
    def is_phase(self) -> bool:
        return self in _PHASE_KINDS

    @property
    def is_x(self) -> bool:
        return self in _X_KINDS

    @classmethod
    def from_mnemonic(cls, mnemonic: str) -> "GateKind":
        for kind in cls:
            if kind.value == mnemonic:
                return kind
        raise ValueError(f"Unknown gate mnemonic: {mnemonic}")


_PHASE_KINDS = (
    GateKind.PHASE,
    GateKind.CONTROLLED_PHASE,
    GateKind.MULTI_CONTROLLED_PHASE,
)
_X_KINDS = (GateKind.PAULI_X, GateKind.CONTROLLED_X, GateKind.MULTI_CONTROLLED_X)


def _phase_kind(num_controls: int) -> GateKind:
    if num_controls == 0:
        return GateKind.PHASE
    if num_controls == 1:
        return GateKind.CONTROLLED_PHASE
    return GateKind.MULTI_CONTROLLED_PHASE


def _x_kind(num_controls: int) -> GateKind:
    if num_controls == 0:
        return GateKind.PAULI_X
    if num_controls == 1:
        return GateKind.CONTROLLED_X
    return GateKind.MULTI_CONTROLLED_X


@dataclass(frozen=True)
class Gate:
    """A primitive unitary bound to wires (controls first, target(s) last)"""

    kind: GateKind
    wires: Tuple[int, ...]
    angle: Optional[float] = None

    def __post_init__(self):
        wires = tuple(int(w) for w in self.wires)
        object.__setattr__(self, "wires", wires)

        if any(w < 0 for w in wires):
            raise WireError(f"Negative wire index in {self.kind.mnemonic} gate: {wires}")
        if len(set(wires)) != len(wires):
            raise WireError(f"Repeated wire in {self.kind.mnemonic} gate: {wires}")

        expected = {
            GateKind.HADAMARD: 1,
            GateKind.PAULI_X: 1,
            GateKind.PHASE: 1,
            GateKind.CONTROLLED_PHASE: 2,
            GateKind.CONTROLLED_X: 2,
            GateKind.SWAP: 2,
        }.get(self.kind)
        if expected is not None and len(wires) != expected:
            raise WireError(
                f"{self.kind.mnemonic} gate takes {expected} wire(s), got {len(wires)}"
            )
        if expected is None and len(wires) < 3:
            # mcp/mcx carry at least two controls; fewer belong to cp/cx
            raise WireError(
                f"{self.kind.mnemonic} gate needs at least 3 wires, got {len(wires)}"
            )

        if self.kind.is_phase:
            if self.angle is None or not math.isfinite(self.angle):
                raise ValueError(f"{self.kind.mnemonic} gate needs a finite angle")
            object.__setattr__(self, "angle", float(self.angle))
        elif self.angle is not None:
            raise ValueError(f"{self.kind.mnemonic} gate takes no angle")

    @staticmethod
    def phase(angle: float, target: int, controls: Sequence[int] = ()) -> "Gate":
        """Phase gate with any number of controls, picking p/cp/mcp by count"""
        controls = tuple(controls)
        return Gate(_phase_kind(len(controls)), controls + (target,), angle)

    @staticmethod
    def x(target: int, controls: Sequence[int] = ()) -> "Gate":
        """Bit flip with any number of controls, picking x/cx/mcx by count"""
        controls = tuple(controls)
        return Gate(_x_kind(len(controls)), controls + (target,))

    @property
    def controls(self) -> Tuple[int, ...]:
        if self.kind in (GateKind.HADAMARD, GateKind.SWAP):
            return ()
        return self.wires[:-1]

    @property
    def targets(self) -> Tuple[int, ...]:
        if self.kind is GateKind.SWAP:
            return self.wires
        return self.wires[-1:]

    def adjoint(self) -> "Gate":
        if self.kind.is_phase:
            return Gate(self.kind, self.wires, -self.angle)
        return self

    def remapped(self, mapping: Sequence[int]) -> "Gate":
        """Relabel wire w as mapping[w]"""
        return Gate(self.kind, tuple(mapping[w] for w in self.wires), self.angle)

    def with_control(self, control: int) -> List["Gate"]:
        """The gate(s) acting as this gate when `control` is 1 and as identity otherwise"""
        if control in self.wires:
            raise WireError(
                f"Control wire {control} collides with {self.kind.mnemonic} gate on {self.wires}"
            )
        if self.kind.is_phase:
            return [Gate.phase(self.angle, self.wires[-1], (control,) + self.controls)]
        if self.kind.is_x:
            return [Gate.x(self.wires[-1], (control,) + self.controls)]
        if self.kind is GateKind.SWAP:
            a, b = self.wires
            # Fredkin as CX(b,a) . CCX(ctrl,a -> b) . CX(b,a)
            return [Gate.x(a, (b,)), Gate.x(b, (control, a)), Gate.x(a, (b,))]
        raise UncontrollableGateError(
            f"{self.kind.mnemonic} gate has no controlled form in this gate set"
        )


@dataclass(frozen=True)
class Circuit:
    """Ordered gate sequence over a declared number of wires"""

    num_wires: int
    gates: Tuple[Gate, ...] = ()
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.num_wires < 0:
            raise WireError(f"Circuit width must be non-negative, got {self.num_wires}")
        gates = tuple(self.gates)
        object.__setattr__(self, "gates", gates)
        for gate in gates:
            for w in gate.wires:
                if w >= self.num_wires:
                    raise WireError(
                        f"{gate.kind.mnemonic} gate uses wire {w} on a {self.num_wires}-wire circuit"
                    )

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def count_by_kind(self) -> Dict[GateKind, int]:
        counts = {kind: 0 for kind in GateKind}
        for gate in self.gates:
            counts[gate.kind] += 1
        return counts

    def remapped(self, mapping: Sequence[int], num_wires: int) -> "Circuit":
        """Place this circuit on a wider register, wire w going to mapping[w]"""
        if len(mapping) != self.num_wires:
            raise WireError(
                f"Wire mapping has {len(mapping)} entries for a {self.num_wires}-wire circuit"
            )
        if len(set(mapping)) != len(mapping):
            raise WireError(f"Wire mapping is not injective: {tuple(mapping)}")
        return Circuit(
            num_wires, tuple(g.remapped(mapping) for g in self.gates), self.label
        )


class CircuitBuilder:
    """Single-owner accumulator producing an immutable Circuit"""

    def __init__(self, num_wires: int, label: str = ""):
        self.num_wires = num_wires
        self.label = label
        self._gates: List[Gate] = []

    def _check(self, gate: Gate) -> Gate:
        for w in gate.wires:
            if w >= self.num_wires:
                raise WireError(
                    f"{gate.kind.mnemonic} gate uses wire {w} on a {self.num_wires}-wire circuit"
                )
        return gate

    def append(self, gate: Gate) -> "CircuitBuilder":
        self._gates.append(self._check(gate))
        return self

    def h(self, wire: int) -> "CircuitBuilder":
        return self.append(Gate(GateKind.HADAMARD, (wire,)))

    def x(self, wire: int, controls: Sequence[int] = ()) -> "CircuitBuilder":
        return self.append(Gate.x(wire, controls))

    def phase(
        self, angle: float, wire: int, controls: Sequence[int] = ()
    ) -> "CircuitBuilder":
        return self.append(Gate.phase(angle, wire, controls))

    def swap(self, a: int, b: int, controls: Sequence[int] = ()) -> "CircuitBuilder":
        gates = [Gate(GateKind.SWAP, (a, b))]
        for control in controls:
            gates = [c for g in gates for c in g.with_control(control)]
        for gate in gates:
            self.append(gate)
        return self

    def extend(
        self, circuit: Circuit, wires: Optional[Sequence[int]] = None
    ) -> "CircuitBuilder":
        """Append a sub-circuit, its wire i landing on wires[i] (identity by default)"""
        if wires is None:
            if circuit.num_wires > self.num_wires:
                raise DimensionError(
                    f"Cannot append a {circuit.num_wires}-wire circuit to {self.num_wires} wires"
                )
            gates: Iterable[Gate] = circuit.gates
        else:
            gates = circuit.remapped(wires, self.num_wires).gates
        for gate in gates:
            self.append(gate)
        return self

    def build(self) -> Circuit:
        return Circuit(self.num_wires, tuple(self._gates), self.label)


def inverse(circuit: Circuit) -> Circuit:
    """Adjoint: gates reversed, phase angles negated"""
    label = f"{circuit.label}^dagger" if circuit.label else ""
    return Circuit(
        circuit.num_wires,
        tuple(g.adjoint() for g in reversed(circuit.gates)),
        label,
    )


def controlled(circuit: Circuit, control: int, offset: int = 0) -> Circuit:
    """Add `control` to every gate after shifting the circuit's wires by `offset`.

    The result is wide enough for both the shifted circuit and the control.
    Hadamard has no controlled form here and raises UncontrollableGateError.
    """
    if offset < 0 or control < 0:
        raise WireError("Control wire and offset must be non-negative")
    shifted_wires = range(offset, offset + circuit.num_wires)
    if control in shifted_wires:
        used = {w + offset for g in circuit.gates for w in g.wires}
        if control in used:
            raise WireError(
                f"Control wire {control} collides with wires used by '{circuit.label or 'circuit'}'"
            )
    num_wires = max(offset + circuit.num_wires, control + 1)
    gates: List[Gate] = []
    for gate in circuit.gates:
        shifted = Gate(gate.kind, tuple(w + offset for w in gate.wires), gate.angle)
        gates.extend(shifted.with_control(control))
    label = f"c-{circuit.label}" if circuit.label else ""
    return Circuit(num_wires, tuple(gates), label)


def compose(first: Circuit, second: Circuit) -> Circuit:
    """`second` applied after `first`"""
    if first.num_wires != second.num_wires:
        raise DimensionError(
            f"Cannot compose circuits of width {first.num_wires} and {second.num_wires}"
        )
    label = " ; ".join(lbl for lbl in (first.label, second.label) if lbl)
    return Circuit(first.num_wires, first.gates + second.gates, label)
