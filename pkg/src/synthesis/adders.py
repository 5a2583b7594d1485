"""Modular adders: Add_in(k,N), Add_out(k,N), Add_in(N), Add_out(N).

Every adder works on an (n+1)-wire register whose first wire is an overflow
MSB, so a + k < 2N never wraps before the sign test. The modular block keeps
the register in the Fourier basis on entry and exit; composed blocks share one
QFT / QFT^-1 pair.
"""

from typing import Sequence, Tuple

from ..core.circuit import Circuit, CircuitBuilder
from ..core.layout import RegisterLayout
from ..core.operator_spec import OperatorKind, OperatorSpec
from .qft import FourierBuilder


class AdderBuilder:
    @staticmethod
    def append_modular_add(
        builder: CircuitBuilder,
        k: int,
        modulus: int,
        register: Sequence[int],
        ancilla: int,
        controls: Sequence[int] = (),
    ) -> None:
        """|a> -> |a + k mod N> for a < N, register already in the Fourier basis.

        Only the Sum(k) steps carry `controls`; with the controls off the block
        is the identity and the ancilla is still returned to |0>.
        """
        msb = register[0]
        # Phase 1: a + k - N, sign into the ancilla, add N back when negative
        FourierBuilder.append_sum(builder, k, register, controls)
        FourierBuilder.append_sum(builder, -modulus, register)
        FourierBuilder.append_iqft(builder, register)
        builder.x(ancilla, controls=(msb,))
        FourierBuilder.append_qft(builder, register)
        FourierBuilder.append_sum(builder, modulus, register, controls=(ancilla,))

        # Phase 2: subtracting k again is negative exactly when no N was taken
        FourierBuilder.append_sum(builder, -k, register, controls)
        FourierBuilder.append_iqft(builder, register)
        builder.x(msb)
        builder.x(ancilla, controls=(msb,))
        builder.x(msb)
        FourierBuilder.append_qft(builder, register)

        # Phase 3
        FourierBuilder.append_sum(builder, k, register, controls)

    @staticmethod
    def append_copy(
        builder: CircuitBuilder, source: Sequence[int], target: Sequence[int]
    ) -> None:
        """CNOT fan-out; duplicates basis values into a zeroed register"""
        for s, t in zip(source, target):
            builder.x(t, controls=(s,))

    @staticmethod
    def append_add_quantum(
        builder: CircuitBuilder,
        modulus: int,
        addend: Sequence[int],
        register: Sequence[int],
        ancilla: int,
        controls: Sequence[int] = (),
    ) -> None:
        """|a>|b> -> |a>|a + b mod N>, register in the Fourier basis.

        Bit a_i contributes a controlled Add_in(2**(n-i-1) mod N, N).
        """
        n = len(addend)
        for i, wire in enumerate(addend):
            constant = pow(2, n - i - 1, modulus)
            AdderBuilder.append_modular_add(
                builder, constant, modulus, register, ancilla, tuple(controls) + (wire,)
            )

    @staticmethod
    def add_in_const(k: int, modulus: int) -> Tuple[Circuit, RegisterLayout]:
        spec = OperatorSpec(OperatorKind.ADD_IN_CONST, modulus, k=k).validate()
        n = spec.n
        layout = RegisterLayout.sequential(
            n, [("overflow", 1), ("data_a", n), ("sign_ancilla", 1)]
        )
        register = [layout.wires("overflow")[0]] + list(layout.wires("data_a"))
        ancilla = layout.wires("sign_ancilla")[0]

        builder = CircuitBuilder(layout.num_wires, f"Add_in({k},{modulus})")
        FourierBuilder.append_qft(builder, register)
        AdderBuilder.append_modular_add(builder, k, modulus, register, ancilla)
        FourierBuilder.append_iqft(builder, register)
        return builder.build(), layout

    @staticmethod
    def add_out_const(k: int, modulus: int) -> Tuple[Circuit, RegisterLayout]:
        spec = OperatorSpec(OperatorKind.ADD_OUT_CONST, modulus, k=k).validate()
        n = spec.n
        layout = RegisterLayout.sequential(
            n,
            [("data_a", n), ("overflow", 1), ("data_b", n), ("sign_ancilla", 1)],
        )
        data_b = list(layout.wires("data_b"))
        register = [layout.wires("overflow")[0]] + data_b
        ancilla = layout.wires("sign_ancilla")[0]

        builder = CircuitBuilder(layout.num_wires, f"Add_out({k},{modulus})")
        AdderBuilder.append_copy(builder, layout.wires("data_a"), data_b)
        FourierBuilder.append_qft(builder, register)
        AdderBuilder.append_modular_add(builder, k, modulus, register, ancilla)
        FourierBuilder.append_iqft(builder, register)
        return builder.build(), layout

    @staticmethod
    def add_in_qq(modulus: int) -> Tuple[Circuit, RegisterLayout]:
        spec = OperatorSpec(OperatorKind.ADD_IN_QQ, modulus).validate()
        n = spec.n
        layout = RegisterLayout.sequential(
            n,
            [("data_a", n), ("overflow", 1), ("data_b", n), ("sign_ancilla", 1)],
        )
        register = [layout.wires("overflow")[0]] + list(layout.wires("data_b"))
        ancilla = layout.wires("sign_ancilla")[0]

        builder = CircuitBuilder(layout.num_wires, f"Add_in({modulus})")
        FourierBuilder.append_qft(builder, register)
        AdderBuilder.append_add_quantum(
            builder, modulus, layout.wires("data_a"), register, ancilla
        )
        FourierBuilder.append_iqft(builder, register)
        return builder.build(), layout

    @staticmethod
    def add_out_qq(modulus: int) -> Tuple[Circuit, RegisterLayout]:
        spec = OperatorSpec(OperatorKind.ADD_OUT_QQ, modulus).validate()
        n = spec.n
        layout = RegisterLayout.sequential(
            n,
            [
                ("data_a", n),
                ("data_b", n),
                ("overflow", 1),
                ("data_c", n),
                ("sign_ancilla", 1),
            ],
        )
        data_c = list(layout.wires("data_c"))
        register = [layout.wires("overflow")[0]] + data_c
        ancilla = layout.wires("sign_ancilla")[0]

        builder = CircuitBuilder(layout.num_wires, f"Add_out({modulus})")
        # |a>|b>|0> -> |a>|b>|a> -> |a>|b>|a + b mod N>
        AdderBuilder.append_copy(builder, layout.wires("data_a"), data_c)
        FourierBuilder.append_qft(builder, register)
        AdderBuilder.append_add_quantum(
            builder, modulus, layout.wires("data_b"), register, ancilla
        )
        FourierBuilder.append_iqft(builder, register)
        return builder.build(), layout
