"""Period finding: Hadamards, Exp(a,N) and an inverse QFT on the counting register,
followed by classical continued-fraction post-processing.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Set, Tuple

import numpy as np

from ..core.circuit import Circuit, CircuitBuilder
from ..core.errors import CapacityError, OperatorSpecError
from ..core.layout import RegisterLayout, modulus_bits
from ..core.operator_spec import OperatorKind, OperatorSpec
from ..core.settings import max_qubits
from ..core.statevector import apply_circuit, from_basis, sample_distribution
from ..util.oracle import mod_pow
from .exponent import ExponentBuilder
from .qft import FourierBuilder


@dataclass(frozen=True)
class PeriodFindingConfig:
    """Inputs of one period-finding run; `t` defaults to 2n counting wires"""

    base: int
    modulus: int
    t: Optional[int] = None
    shots: int = 1000
    seed: int = 0

    @property
    def n(self) -> int:
        return modulus_bits(self.modulus)

    @property
    def counting_width(self) -> int:
        return self.t if self.t is not None else 2 * self.n

    @property
    def total_qubits(self) -> int:
        return self.counting_width + self.n + (self.n + 1) + 1

    def validate(self) -> "PeriodFindingConfig":
        OperatorSpec(OperatorKind.EXP_OUT, self.modulus, base=self.base).validate()
        if self.t is not None and self.t < 1:
            raise OperatorSpecError(f"counting width t must be at least 1, got {self.t}")
        if self.shots < 1:
            raise OperatorSpecError(f"shots must be at least 1, got {self.shots}")
        return self


@dataclass(frozen=True)
class PeriodResult:
    candidate_period: Optional[int]
    measurement_histogram: Dict[int, int]
    success: bool
    counting_width: int
    probabilities: Optional[np.ndarray] = field(repr=False, compare=False, default=None)

    @property
    def shots(self) -> int:
        return sum(self.measurement_histogram.values())


def period_finding_circuit(cfg: PeriodFindingConfig) -> Tuple[Circuit, RegisterLayout]:
    """H^t on the counting register, Exp(a,N) with that register as exponent, QFT^-1"""
    cfg.validate()
    ceiling = max_qubits()
    if cfg.total_qubits > ceiling:
        raise CapacityError(
            f"period finding for N={cfg.modulus} with t={cfg.counting_width} needs "
            f"{cfg.total_qubits} qubits, above the ceiling of {ceiling}"
        )

    exp_circuit, layout = ExponentBuilder.exp_out(
        cfg.base, cfg.modulus, exponent_bits=cfg.counting_width
    )
    counting = layout.wires("data_a")

    builder = CircuitBuilder(layout.num_wires, f"PeriodFinding({cfg.base},{cfg.modulus})")
    for wire in counting:
        builder.h(wire)
    builder.extend(exp_circuit)
    FourierBuilder.append_iqft(builder, counting)
    return builder.build(), layout


def counting_distribution(cfg: PeriodFindingConfig) -> np.ndarray:
    """Exact outcome distribution of the counting register"""
    circuit, layout = period_finding_circuit(cfg)
    state = apply_circuit(from_basis(circuit.num_wires, 0), circuit)
    return state.marginal(layout.wires("data_a"))


def continued_fraction_period(outcome: int, t: int, modulus: int) -> Optional[int]:
    """Smallest convergent denominator d <= N of outcome/2**t within 1/2**t of it"""
    if not 0 <= outcome < 1 << t:
        raise OperatorSpecError(f"outcome {outcome} is outside [0, 2**{t})")
    if outcome == 0:
        return None

    target = Fraction(outcome, 1 << t)
    tolerance = Fraction(1, 1 << t)
    # Convergents h/k from the continued-fraction terms of `target`
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    rest = target
    while True:
        term = math.floor(rest)
        h_prev, h = h, term * h + h_prev
        k_prev, k = k, term * k + k_prev
        if k > modulus:
            return None
        if k > 1 or h != 0:
            if abs(target - Fraction(h, k)) <= tolerance:
                return k
        frac = rest - term
        if frac == 0:
            return None
        rest = 1 / frac


def minimal_period(base: int, modulus: int, period: int) -> int:
    """Smallest divisor d of a verified period with base**d = 1 (mod N)"""
    for d in range(1, period + 1):
        if period % d == 0 and mod_pow(base, d, modulus) == 1:
            return d
    return period


def peak_mass(probabilities: np.ndarray, t: int, period: int, window: int = 1) -> float:
    """Probability within +-window of the outcomes nearest j * 2**t / r"""
    size = 1 << t
    hits = set()
    for j in range(period):
        centre = int(round(j * size / period))
        for offset in range(-window, window + 1):
            hits.add((centre + offset) % size)
    return float(sum(probabilities[i] for i in hits))


def period_from_histogram(histogram: Dict[int, int], cfg: PeriodFindingConfig) -> Optional[int]:
    """First verified period from outcomes taken in order of count.

    A convergent c/r reduced by gcd(c, r) > 1 only reveals a divisor of r, so
    denominators that fail are kept and every lcm of them up to N is tried.
    """
    t = cfg.counting_width
    partials: Set[int] = set()
    ranked = sorted(histogram.items(), key=lambda kv: (-kv[1], kv[0]))
    for outcome, _ in ranked:
        d = continued_fraction_period(outcome, t, cfg.modulus)
        if d is None:
            continue
        reachable = {d} | {math.lcm(d, p) for p in partials}
        for candidate in sorted(v for v in reachable if v <= cfg.modulus):
            if mod_pow(cfg.base, candidate, cfg.modulus) == 1:
                return candidate
            partials.add(candidate)
    return None


def find_period(cfg: PeriodFindingConfig) -> PeriodResult:
    """Simulate once, sample cfg.shots outcomes and extract a verified period"""
    cfg.validate()
    probs = counting_distribution(cfg)
    histogram = sample_distribution(probs, cfg.shots, cfg.seed)

    if cfg.base % cfg.modulus == 1:
        candidate: Optional[int] = 1
    else:
        candidate = period_from_histogram(histogram, cfg)

    if candidate is None:
        return PeriodResult(None, histogram, False, cfg.counting_width, probs)
    return PeriodResult(
        minimal_period(cfg.base, cfg.modulus, candidate),
        histogram,
        True,
        cfg.counting_width,
        probs,
    )
