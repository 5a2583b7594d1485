"""Simulated-vs-oracle comparison of synthesised operators.

Shared by the test suite and the `verify` subcommand. Inputs are simulated in
batches so a whole truth table costs one pass over the gate list per chunk.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..core.circuit import Circuit, compose, inverse
from ..core.layout import RegisterLayout
from ..core.operator_spec import OperatorSpec
from ..core.settings import BATCH_AMPLITUDE_BUDGET, DEFAULT_TOLERANCE, EXHAUSTIVE_LIMIT
from ..core.statevector import simulate_basis_batch
from ..synthesis.operators import build_operator
from .oracle import truth_table, valid_inputs


@dataclass(frozen=True)
class CaseResult:
    inputs: Tuple[int, ...]
    expected: Tuple[int, ...]
    observed: Tuple[int, ...]
    fidelity: float
    ancilla_clean: float

    def passed(self, tolerance: float = DEFAULT_TOLERANCE) -> bool:
        return self.fidelity >= 1 - tolerance and self.ancilla_clean >= 1 - tolerance


@dataclass(frozen=True)
class VerificationReport:
    spec: OperatorSpec
    cases: Tuple[CaseResult, ...]
    tolerance: float = DEFAULT_TOLERANCE

    @property
    def failures(self) -> List[CaseResult]:
        return [c for c in self.cases if not c.passed(self.tolerance)]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __len__(self) -> int:
        return len(self.cases)


def input_index(layout: RegisterLayout, roles: Sequence[str], values: Sequence[int]) -> int:
    return layout.encode(dict(zip(roles, values)))


def _chunks(indices: List[int], num_wires: int) -> Iterator[List[int]]:
    size = max(1, BATCH_AMPLITUDE_BUDGET >> num_wires)
    for start in range(0, len(indices), size):
        yield indices[start : start + size]


def run_basis_inputs(circuit: Circuit, indices: Sequence[int]) -> Iterator[np.ndarray]:
    """Final amplitudes for each basis input, in order, simulated chunk by chunk"""
    for chunk in _chunks(list(indices), circuit.num_wires):
        for row in simulate_basis_batch(circuit, chunk):
            yield row


def verify_operator(
    spec: OperatorSpec,
    samples: int = EXHAUSTIVE_LIMIT,
    seed: int = 0,
    tolerance: float = DEFAULT_TOLERANCE,
    built: Optional[Tuple[Circuit, RegisterLayout]] = None,
) -> VerificationReport:
    """Compare the simulated operator with its truth table on every valid input"""
    table = truth_table(spec, samples, seed)
    circuit, layout = built if built is not None else build_operator(spec)
    clean = layout.ancilla_zero_mask()

    rows = list(table)
    starts = [input_index(layout, spec.input_roles, inp) for inp, _ in rows]
    cases = []
    for (inputs, expected), psi in zip(rows, run_basis_inputs(circuit, starts)):
        probs = np.abs(psi) ** 2
        target = input_index(layout, spec.output_roles, expected)
        decoded = layout.decode(int(np.argmax(probs)))
        cases.append(
            CaseResult(
                inputs=tuple(inputs),
                expected=tuple(expected),
                observed=tuple(decoded[role] for role in spec.output_roles),
                fidelity=float(probs[target]),
                ancilla_clean=float(probs[clean].sum()),
            )
        )
    return VerificationReport(spec, tuple(cases), tolerance)


def check_reversibility(
    spec: OperatorSpec, samples: int = 20, seed: int = 0
) -> Dict[Tuple[int, ...], float]:
    """Fidelity of operator-then-inverse with the starting basis state, per input"""
    circuit, layout = build_operator(spec)
    roundtrip = compose(circuit, inverse(circuit))
    inputs = valid_inputs(spec, samples, seed)
    if len(inputs) > samples:
        rng = np.random.default_rng(seed)
        picks = sorted(rng.choice(len(inputs), size=samples, replace=False))
        inputs = [inputs[i] for i in picks]

    starts = [input_index(layout, spec.input_roles, inp) for inp in inputs]
    result = {}
    for inp, start, psi in zip(inputs, starts, run_basis_inputs(roundtrip, starts)):
        result[tuple(inp)] = float(abs(psi[start]) ** 2)
    return result
