"""Qubit, ancilla, gate-count and depth accounting"""

from dataclasses import dataclass, field
from typing import Dict, Sequence

import numpy as np

from .circuit import Circuit
from .errors import DimensionError
from .layout import RegisterLayout


@dataclass(frozen=True)
class ResourceReport:
    total_qubits: int
    ancilla_qubits: int
    gate_counts: Dict[str, int] = field(default_factory=dict)
    depth: int = 0

    @property
    def total_gates(self) -> int:
        return sum(self.gate_counts.values())

    def as_dict(self) -> Dict[str, object]:
        return {
            "qubits": self.total_qubits,
            "ancilla": self.ancilla_qubits,
            "depth": self.depth,
            "gates": dict(sorted(self.gate_counts.items())),
        }


def asap_depth(circuit: Circuit) -> int:
    """Layer count when each gate starts right after the last gate on any of its wires"""
    finish = [0] * circuit.num_wires
    depth = 0
    for gate in circuit.gates:
        layer = 1 + max(finish[w] for w in gate.wires)
        for w in gate.wires:
            finish[w] = layer
        depth = max(depth, layer)
    return depth


def resource_report(circuit: Circuit, layout: RegisterLayout) -> ResourceReport:
    if layout.num_wires != circuit.num_wires:
        raise DimensionError(
            f"Layout covers {layout.num_wires} wires but the circuit has {circuit.num_wires}"
        )
    counts = {kind.mnemonic: n for kind, n in circuit.count_by_kind().items()}
    return ResourceReport(
        total_qubits=circuit.num_wires,
        ancilla_qubits=len(layout.ancilla_wires),
        gate_counts=counts,
        depth=asap_depth(circuit),
    )


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log(y) against log(x)"""
    if len(xs) != len(ys) or len(xs) < 2:
        raise ValueError("Need at least two (x, y) points to fit a slope")
    slope, _ = np.polyfit(np.log(np.asarray(xs, float)), np.log(np.asarray(ys, float)), 1)
    return float(slope)
