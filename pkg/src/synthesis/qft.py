"""Quantum Fourier transform and the Fourier-basis constant adder Sum(k)"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..core.circuit import Circuit, CircuitBuilder, inverse
from ..core.errors import WireError


@dataclass(frozen=True)
class FourierRegisterSpec:
    """Wires of a register transformed as one big-endian integer"""

    wires: Tuple[int, ...]

    def __post_init__(self):
        wires = tuple(int(w) for w in self.wires)
        object.__setattr__(self, "wires", wires)
        if not wires:
            raise WireError("A Fourier register needs at least one wire")
        if len(set(wires)) != len(wires):
            raise WireError(f"Repeated wire in Fourier register: {wires}")

    @staticmethod
    def contiguous(width: int, start: int = 0) -> "FourierRegisterSpec":
        return FourierRegisterSpec(tuple(range(start, start + width)))

    @property
    def width(self) -> int:
        return len(self.wires)


def sum_angles(k: int, width: int) -> Tuple[float, ...]:
    """Per-wire phases adding k to a width-wire register in the Fourier basis.

    After the swap-terminated QFT, big-endian wire i carries phase
    2*pi*a / 2**(i+1), so adding k rotates wire i by 2*pi*k / 2**(i+1).
    """
    k = k % (1 << width)
    return tuple(math.ldexp(math.pi * k, -i) for i in range(width))


class FourierBuilder:
    """Appends Fourier-space building blocks to a CircuitBuilder"""

    @staticmethod
    def append_qft(builder: CircuitBuilder, wires: Sequence[int]) -> None:
        """Hadamard + controlled-phase ladder, then the wire-reversal swaps"""
        m = len(wires)
        for i in range(m):
            builder.h(wires[i])
            for j in range(i + 1, m):
                builder.phase(math.pi / (1 << (j - i)), wires[i], controls=(wires[j],))
        for i in range(m // 2):
            builder.swap(wires[i], wires[m - i - 1])

    @staticmethod
    def append_iqft(builder: CircuitBuilder, wires: Sequence[int]) -> None:
        m = len(wires)
        for i in reversed(range(m // 2)):
            builder.swap(wires[i], wires[m - i - 1])
        for i in reversed(range(m)):
            for j in reversed(range(i + 1, m)):
                builder.phase(-math.pi / (1 << (j - i)), wires[i], controls=(wires[j],))
            builder.h(wires[i])

    @staticmethod
    def append_sum(
        builder: CircuitBuilder,
        k: int,
        wires: Sequence[int],
        controls: Sequence[int] = (),
    ) -> None:
        """Sum(k): one phase per wire, each gaining `controls` when given"""
        for wire, angle in zip(wires, sum_angles(k, len(wires))):
            builder.phase(angle, wire, controls=controls)


def _builder_for(spec: FourierRegisterSpec, num_wires: Optional[int], label: str) -> CircuitBuilder:
    width = max(spec.wires) + 1
    if num_wires is not None:
        if num_wires < width:
            raise WireError(f"Fourier register {spec.wires} does not fit {num_wires} wires")
        width = num_wires
    return CircuitBuilder(width, label)


def qft_circuit(spec: FourierRegisterSpec, num_wires: Optional[int] = None) -> Circuit:
    """|j> -> 2**(-m/2) sum_k exp(2 pi i j k / 2**m) |k> on spec.wires"""
    builder = _builder_for(spec, num_wires, f"QFT({spec.width})")
    FourierBuilder.append_qft(builder, spec.wires)
    return builder.build()


def iqft_circuit(spec: FourierRegisterSpec, num_wires: Optional[int] = None) -> Circuit:
    circuit = inverse(qft_circuit(spec, num_wires))
    return Circuit(circuit.num_wires, circuit.gates, f"QFT^-1({spec.width})")


def fourier_sum_circuit(
    k: int, spec: FourierRegisterSpec, num_wires: Optional[int] = None
) -> Circuit:
    """Sum(k); between qft_circuit and iqft_circuit it maps |a> to |a + k mod 2**m>"""
    builder = _builder_for(spec, num_wires, f"Sum({k})")
    FourierBuilder.append_sum(builder, k, spec.wires)
    return builder.build()


def dft_matrix(width: int) -> np.ndarray:
    """Dense 2**m x 2**m DFT with entries exp(2 pi i j k / 2**m) / 2**(m/2)"""
    dim = 1 << width
    j = np.arange(dim)
    return np.exp(2j * np.pi * np.outer(j, j) / dim) / np.sqrt(dim)
