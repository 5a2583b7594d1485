"""Modular multipliers: Mult_out(k,N), Mult_in(k,N), Mult_out(N)"""

from typing import Sequence, Tuple

from ..core.circuit import Circuit, CircuitBuilder, inverse
from ..core.layout import RegisterLayout
from ..core.operator_spec import OperatorKind, OperatorSpec
from ..util.oracle import mod_inv
from .adders import AdderBuilder
from .qft import FourierBuilder


class MultiplierBuilder:
    @staticmethod
    def append_mult_fourier(
        builder: CircuitBuilder,
        k: int,
        modulus: int,
        multiplicand: Sequence[int],
        register: Sequence[int],
        ancilla: int,
        controls: Sequence[int] = (),
    ) -> None:
        """|a>|b> -> |a>|b + k*a mod N>, register in the Fourier basis"""
        n = len(multiplicand)
        for i, wire in enumerate(multiplicand):
            constant = (k * pow(2, n - i - 1, modulus)) % modulus
            AdderBuilder.append_modular_add(
                builder, constant, modulus, register, ancilla, tuple(controls) + (wire,)
            )

    @staticmethod
    def append_mult_out(
        builder: CircuitBuilder,
        k: int,
        modulus: int,
        multiplicand: Sequence[int],
        register: Sequence[int],
        ancilla: int,
        controls: Sequence[int] = (),
    ) -> None:
        FourierBuilder.append_qft(builder, register)
        MultiplierBuilder.append_mult_fourier(
            builder, k, modulus, multiplicand, register, ancilla, controls
        )
        FourierBuilder.append_iqft(builder, register)

    @staticmethod
    def append_mult_in(
        builder: CircuitBuilder,
        k: int,
        modulus: int,
        data: Sequence[int],
        aux: Sequence[int],
        ancilla: int,
        controls: Sequence[int] = (),
    ) -> None:
        """|a>|0> -> |k*a mod N>|0>; aux[0] is the adder's overflow wire.

        Mult_out(k), swap data with aux, then Mult_out(k^-1)^dagger clears aux.
        `controls` reach the adders' Sum(k) steps and the swap network.
        """
        k_inv = mod_inv(k, modulus)
        low = list(aux[1:])

        MultiplierBuilder.append_mult_out(builder, k, modulus, data, aux, ancilla, controls)
        for d, a in zip(data, low):
            builder.swap(d, a, controls=controls)

        undo = CircuitBuilder(builder.num_wires)
        MultiplierBuilder.append_mult_out(undo, k_inv, modulus, data, aux, ancilla, controls)
        builder.extend(inverse(undo.build()))

    @staticmethod
    def mult_out_const(k: int, modulus: int) -> Tuple[Circuit, RegisterLayout]:
        spec = OperatorSpec(OperatorKind.MULT_OUT_CONST, modulus, k=k).validate()
        n = spec.n
        layout = RegisterLayout.sequential(
            n,
            [("data_a", n), ("overflow", 1), ("data_b", n), ("sign_ancilla", 1)],
        )
        register = [layout.wires("overflow")[0]] + list(layout.wires("data_b"))
        ancilla = layout.wires("sign_ancilla")[0]

        builder = CircuitBuilder(layout.num_wires, f"Mult_out({k},{modulus})")
        MultiplierBuilder.append_mult_out(
            builder, k, modulus, layout.wires("data_a"), register, ancilla
        )
        return builder.build(), layout

    @staticmethod
    def mult_in_const(k: int, modulus: int) -> Tuple[Circuit, RegisterLayout]:
        spec = OperatorSpec(OperatorKind.MULT_IN_CONST, modulus, k=k).validate()
        n = spec.n
        layout = RegisterLayout.sequential(
            n, [("data_a", n), ("aux", n + 1), ("sign_ancilla", 1)]
        )
        builder = CircuitBuilder(layout.num_wires, f"Mult_in({k},{modulus})")
        MultiplierBuilder.append_mult_in(
            builder,
            k,
            modulus,
            layout.wires("data_a"),
            layout.wires("aux"),
            layout.wires("sign_ancilla")[0],
        )
        return builder.build(), layout

    @staticmethod
    def mult_out_qq(modulus: int) -> Tuple[Circuit, RegisterLayout]:
        spec = OperatorSpec(OperatorKind.MULT_OUT_QQ, modulus).validate()
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
        register = [layout.wires("overflow")[0]] + list(layout.wires("data_c"))
        ancilla = layout.wires("sign_ancilla")[0]

        builder = CircuitBuilder(layout.num_wires, f"Mult_out({modulus})")
        # a_i-controlled Mult_out(2**(n-i-1) mod N) from data_b into data_c,
        # all inside one Fourier-basis window on data_c
        FourierBuilder.append_qft(builder, register)
        for i, wire in enumerate(layout.wires("data_a")):
            MultiplierBuilder.append_mult_fourier(
                builder,
                pow(2, n - i - 1, modulus),
                modulus,
                layout.wires("data_b"),
                register,
                ancilla,
                controls=(wire,),
            )
        FourierBuilder.append_iqft(builder, register)
        return builder.build(), layout
