"""Classical modular arithmetic.

Exact integer routines used for synthesis-time constants (reductions, powers,
inverses) and as the ground truth every simulated operator is compared to.
"""

import itertools
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from ..core.errors import NonInvertibleError, OperatorSpecError
from ..core.operator_spec import OperatorKind, OperatorSpec
from ..core.settings import EXHAUSTIVE_LIMIT

Row = Tuple[Tuple[int, ...], Tuple[int, ...]]


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp mod N by square-and-multiply"""
    if modulus == 0:
        raise OperatorSpecError("modulus must be non-zero")
    if modulus < 0:
        raise OperatorSpecError(f"modulus must be positive, got {modulus}")
    if exp < 0:
        raise OperatorSpecError(f"exponent must be non-negative, got {exp}")

    result = 1 % modulus
    square = base % modulus
    while exp:
        if exp & 1:
            result = (result * square) % modulus
        square = (square * square) % modulus
        exp >>= 1
    return result


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, s, t) with g = gcd(a, b) = s*a + t*b"""
    if a == 0 and b == 0:
        raise OperatorSpecError("gcd(0, 0) is undefined")
    prev_s, s = 1, 0
    prev_t, t = 0, 1
    while b != 0:
        q = a // b
        a, b = b, a - q * b
        prev_s, s = s, prev_s - q * s
        prev_t, t = t, prev_t - q * t
    if a < 0:
        a, prev_s, prev_t = -a, -prev_s, -prev_t
    return a, prev_s, prev_t


def mod_inv(k: int, modulus: int) -> int:
    """The r in [1, N) with k*r = 1 (mod N)"""
    g, s, _ = extended_gcd(k % modulus, modulus)
    if g != 1:
        raise NonInvertibleError(k, modulus, g)
    return s % modulus


def multiplicative_order(base: int, modulus: int) -> int:
    """Smallest r >= 1 with base**r = 1 (mod N), by brute force"""
    g = math.gcd(base, modulus)
    if g != 1:
        raise NonInvertibleError(base, modulus, g, what="base")
    value = base % modulus
    r = 1
    while value != 1 % modulus:
        value = (value * base) % modulus
        r += 1
    return r


def factor_from_period(base: int, modulus: int, period: int) -> Optional[Tuple[int, int]]:
    """Nontrivial factors of N from an even period of base, if it yields any"""
    if period % 2 != 0:
        return None
    half = mod_pow(base, period // 2, modulus)
    if half == modulus - 1:
        return None
    for candidate in (math.gcd(half - 1, modulus), math.gcd(half + 1, modulus)):
        if 1 < candidate < modulus:
            return candidate, modulus // candidate
    return None


def evaluate(spec: OperatorSpec, inputs: Tuple[int, ...]) -> Tuple[int, ...]:
    """Register values after the operator, in spec.output_roles order"""
    N = spec.modulus
    kind = spec.kind
    if kind is OperatorKind.ADD_IN_CONST:
        (a,) = inputs
        return ((a + spec.k) % N,)
    if kind is OperatorKind.ADD_OUT_CONST:
        (a,) = inputs
        return (a, (a + spec.k) % N)
    if kind is OperatorKind.ADD_IN_QQ:
        a, b = inputs
        return (a, (a + b) % N)
    if kind is OperatorKind.ADD_OUT_QQ:
        a, b = inputs
        return (a, b, (a + b) % N)
    if kind is OperatorKind.MULT_OUT_CONST:
        a, b = inputs
        return (a, (b + spec.k * a) % N)
    if kind is OperatorKind.MULT_IN_CONST:
        (a,) = inputs
        return ((spec.k * a) % N,)
    if kind is OperatorKind.MULT_OUT_QQ:
        a, b = inputs
        return (a, b, (a * b) % N)
    if kind is OperatorKind.EXP_OUT:
        (x,) = inputs
        return (x, mod_pow(spec.base, x, N))
    raise OperatorSpecError(f"No oracle for {kind}")


@dataclass(frozen=True)
class TruthTable:
    spec: OperatorSpec
    mapping: Tuple[Row, ...]

    def __len__(self) -> int:
        return len(self.mapping)

    def __iter__(self) -> Iterator[Row]:
        return iter(self.mapping)

    def as_dict(self) -> Dict[Tuple[int, ...], Tuple[int, ...]]:
        return dict(self.mapping)

    def is_injective(self) -> bool:
        outputs = [out for _, out in self.mapping]
        return len(set(outputs)) == len(outputs)

    def is_permutation(self) -> bool:
        """True when inputs and outputs are the same set of register tuples"""
        if self.spec.input_roles != self.spec.output_roles:
            return False
        inputs = {inp for inp, _ in self.mapping}
        outputs = {out for _, out in self.mapping}
        return self.is_injective() and inputs == outputs


def valid_inputs(
    spec: OperatorSpec, samples: int = EXHAUSTIVE_LIMIT, seed: int = 0
) -> List[Tuple[int, ...]]:
    """All valid basis inputs when N <= EXHAUSTIVE_LIMIT, otherwise a seeded sample"""
    bounds = [spec.input_bound(role) for role in spec.input_roles]
    if spec.modulus <= EXHAUSTIVE_LIMIT:
        return list(itertools.product(*(range(b) for b in bounds)))

    rng = np.random.default_rng(seed)
    chosen = set()
    total = math.prod(bounds)
    while len(chosen) < min(samples, total):
        chosen.add(tuple(int(rng.integers(0, b)) for b in bounds))
    return sorted(chosen)


def truth_table(
    spec: OperatorSpec, samples: int = EXHAUSTIVE_LIMIT, seed: int = 0
) -> TruthTable:
    spec.validate()
    rows = tuple(
        (inputs, evaluate(spec, inputs)) for inputs in valid_inputs(spec, samples, seed)
    )
    return TruthTable(spec, rows)
