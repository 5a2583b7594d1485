"""Modular exponentiation Exp(a,N)|x>|1>|0> -> |x>|a^x mod N>|0>"""

from typing import Optional, Sequence, Tuple

from ..core.circuit import Circuit, CircuitBuilder
from ..core.layout import RegisterLayout
from ..core.operator_spec import OperatorKind, OperatorSpec
from ..util.oracle import mod_pow
from .multipliers import MultiplierBuilder


class ExponentBuilder:
    @staticmethod
    def append_exp(
        builder: CircuitBuilder,
        base: int,
        modulus: int,
        exponent: Sequence[int],
        work: Sequence[int],
        aux: Sequence[int],
        ancilla: int,
    ) -> None:
        """Multiply `work` by base**(2**(t-i-1)) mod N under control of exponent bit i.

        `work` must already hold a residue coprime to N (normally 1).
        """
        t = len(exponent)
        for i, wire in enumerate(exponent):
            constant = mod_pow(base, 1 << (t - i - 1), modulus)
            MultiplierBuilder.append_mult_in(
                builder, constant, modulus, work, aux, ancilla, controls=(wire,)
            )

    @staticmethod
    def exp_out(
        base: int, modulus: int, exponent_bits: Optional[int] = None
    ) -> Tuple[Circuit, RegisterLayout]:
        """Exp(a,N) with a t-wire exponent register (t defaults to n).

        Layout: exponent data_a(t), work data_b(n), aux(n+1), sign_ancilla.
        The circuit opens with an X on work's least significant wire, so the
        work register enters as 0 and is treated as |1>.
        """
        spec = OperatorSpec(
            OperatorKind.EXP_OUT, modulus, base=base, exponent_bits=exponent_bits
        ).validate()
        n = spec.n
        t = spec.exponent_width
        layout = RegisterLayout.sequential(
            n,
            [("data_a", t), ("data_b", n), ("aux", n + 1), ("sign_ancilla", 1)],
        )
        work = layout.wires("data_b")

        builder = CircuitBuilder(layout.num_wires, f"Exp({base},{modulus})")
        builder.x(work[-1])
        ExponentBuilder.append_exp(
            builder,
            base,
            modulus,
            layout.wires("data_a"),
            work,
            layout.wires("aux"),
            layout.wires("sign_ancilla")[0],
        )
        return builder.build(), layout
