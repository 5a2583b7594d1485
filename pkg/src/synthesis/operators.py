"""Operator dispatch and catalog"""

from typing import Tuple

from ..core.circuit import Circuit
from ..core.errors import OperatorSpecError
from ..core.layout import RegisterLayout
from ..core.operator_spec import OperatorKind, OperatorSpec
from .adders import AdderBuilder
from .exponent import ExponentBuilder
from .multipliers import MultiplierBuilder

# Two-variable in-place multiplication needs a quantum modular inverse, which
# has no construction here; it is catalogued but never synthesised.
MULT_IN_QQ_NAME = "mult-in-qq"

_CATALOG = {
    OperatorKind.ADD_IN_CONST: "Add_in(k,N): |a> -> |a+k mod N>",
    OperatorKind.ADD_OUT_CONST: (
        "Add_out(k,N): |a>|0> -> |a>|a> -> |a>|a+k mod N> (CNOT copy, then Add_in(k,N))"
    ),
    OperatorKind.ADD_IN_QQ: (
        "Add_in(N): |a>|b> -> |a>|a+b mod N>; bit a_i drives a controlled "
        "Add_in(2^(n-i-1) mod N, N)"
    ),
    OperatorKind.ADD_OUT_QQ: (
        "Add_out(N): |a>|b>|0> -> |a>|b>|a> -> |a>|b>|a+b mod N> (copy, then Add_in(N))"
    ),
    OperatorKind.MULT_OUT_CONST: (
        "Mult_out(k,N): |a>|b> -> |a>|b+ka mod N>; bit a_i drives a controlled "
        "Add_in(k*2^(n-i-1) mod N, N)"
    ),
    OperatorKind.MULT_IN_CONST: (
        "Mult_in(k,N): |a>|0> -> |a>|ka> -> |ka>|a> -> |ka>|0> "
        "(Mult_out(k,N), SWAP, Mult_out(k^-1,N)^dagger); needs gcd(k,N) = 1"
    ),
    OperatorKind.MULT_OUT_QQ: (
        "Mult_out(N): |a>|b>|0> -> |a>|b>|ab mod N>; bit a_i drives a controlled "
        "Mult_out(2^(n-i-1) mod N, N) from b into the product register"
    ),
    OperatorKind.EXP_OUT: (
        "Exp(a,N): |x>|1>|0> -> |x>|a^x mod N>|0>; bit x_i drives a controlled "
        "Mult_in(a^(2^(t-i-1)) mod N, N)"
    ),
}

MULT_IN_QQ_PROGRESSION = (
    "Mult_in(N): |a>|b>|0>|0> -> |a>|b>|ab>|a^-1> -> |a>|ab>|b>|a^-1> -> "
    "|a>|ab>|b - a^-1 ab>|a^-1> -> |a>|ab>|0>|0>; not synthesised, it needs a "
    "quantum modular inverse a^-1"
)


def describe(name: str) -> str:
    """Catalog text for an operator name, including the unsynthesised mult-in-qq"""
    if name == MULT_IN_QQ_NAME:
        return MULT_IN_QQ_PROGRESSION
    return _CATALOG[OperatorKind.from_name(name)]


def build_operator(spec: OperatorSpec) -> Tuple[Circuit, RegisterLayout]:
    """Synthesise the circuit and layout for `spec`"""
    spec.validate()
    kind = spec.kind
    if kind is OperatorKind.ADD_IN_CONST:
        return AdderBuilder.add_in_const(spec.k, spec.modulus)
    elif kind is OperatorKind.ADD_OUT_CONST:
        return AdderBuilder.add_out_const(spec.k, spec.modulus)
    elif kind is OperatorKind.ADD_IN_QQ:
        return AdderBuilder.add_in_qq(spec.modulus)
    elif kind is OperatorKind.ADD_OUT_QQ:
        return AdderBuilder.add_out_qq(spec.modulus)
    elif kind is OperatorKind.MULT_OUT_CONST:
        return MultiplierBuilder.mult_out_const(spec.k, spec.modulus)
    elif kind is OperatorKind.MULT_IN_CONST:
        return MultiplierBuilder.mult_in_const(spec.k, spec.modulus)
    elif kind is OperatorKind.MULT_OUT_QQ:
        return MultiplierBuilder.mult_out_qq(spec.modulus)
    elif kind is OperatorKind.EXP_OUT:
        return ExponentBuilder.exp_out(spec.base, spec.modulus, spec.exponent_bits)
    raise OperatorSpecError(f"Unsupported operator: {kind.value}")


# Module-level aliases matching the operator names
add_in_const = AdderBuilder.add_in_const
add_out_const = AdderBuilder.add_out_const
add_in_qq = AdderBuilder.add_in_qq
add_out_qq = AdderBuilder.add_out_qq
mult_out_const = MultiplierBuilder.mult_out_const
mult_in_const = MultiplierBuilder.mult_in_const
mult_out_qq = MultiplierBuilder.mult_out_qq
exp_out = ExponentBuilder.exp_out
