"""Dense state-vector engine.

Amplitudes are complex128, indexed by basis integer with wire 0 as the most
significant bit. Kernels work on a 2-D array of shape (batch, 2**n) viewed as
(batch, 2, ..., 2); fixing an axis to 0 or 1 selects the amplitude pairs a gate
mixes, so every gate is applied in place on strided views without building a
matrix. Multi-controlled gates are applied directly.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Sequence

import numpy as np

from .circuit import Circuit, Gate, GateKind
from .errors import CapacityError, DimensionError, QModError, WireError
from .settings import DEFAULT_TOLERANCE, max_qubits

_SQRT_HALF = 1.0 / np.sqrt(2.0)


def _index(num_qubits: int, fixed: Mapping[int, int]) -> tuple:
    return (slice(None),) + tuple(fixed.get(q, slice(None)) for q in range(num_qubits))


def _apply_kernel(psi: np.ndarray, gate: Gate, num_qubits: int) -> None:
    """Apply `gate` in place to every row of `psi` (shape (batch, 2**n))"""
    view = psi.reshape((psi.shape[0],) + (2,) * num_qubits)
    kind = gate.kind

    if kind.is_phase:
        # Diagonal: only the all-ones corner of the gate's wires picks up the phase
        view[_index(num_qubits, {w: 1 for w in gate.wires})] *= np.exp(1j * gate.angle)
        return

    if kind is GateKind.HADAMARD:
        target = gate.wires[0]
        lo = _index(num_qubits, {target: 0})
        hi = _index(num_qubits, {target: 1})
        a = view[lo].copy()
        b = view[hi].copy()
        view[lo] = (a + b) * _SQRT_HALF
        view[hi] = (a - b) * _SQRT_HALF
        return

    if kind.is_x:
        fixed = {c: 1 for c in gate.controls}
        target = gate.wires[-1]
        lo = _index(num_qubits, {**fixed, target: 0})
        hi = _index(num_qubits, {**fixed, target: 1})
    elif kind is GateKind.SWAP:
        a_wire, b_wire = gate.wires
        lo = _index(num_qubits, {a_wire: 0, b_wire: 1})
        hi = _index(num_qubits, {a_wire: 1, b_wire: 0})
    else:
        raise ValueError(f"No kernel for gate kind {kind}")

    tmp = view[lo].copy()
    view[lo] = view[hi]
    view[hi] = tmp


def _check_capacity(num_qubits: int) -> None:
    ceiling = max_qubits()
    if num_qubits > ceiling:
        raise CapacityError(
            f"{num_qubits} qubits exceeds the simulator ceiling of {ceiling} "
            f"(set QMOD_MAX_QUBITS to raise it)"
        )


class StateVector:
    """Normalized vector of 2**num_qubits amplitudes; single owner while mutating"""

    def __init__(self, amplitudes: Sequence[complex]):
        data = np.ascontiguousarray(np.asarray(amplitudes, dtype=np.complex128))
        if data.ndim != 1 or data.size == 0 or data.size & (data.size - 1):
            raise DimensionError(
                f"Amplitude count must be a power of two, got shape {data.shape}"
            )
        num_qubits = data.size.bit_length() - 1
        _check_capacity(num_qubits)
        norm = float(np.linalg.norm(data))
        if abs(norm - 1.0) > DEFAULT_TOLERANCE:
            raise QModError(f"Amplitudes must have unit norm, got {norm:.12g}")
        self.num_qubits = num_qubits
        self._data = data

    @property
    def amplitudes(self) -> np.ndarray:
        return self._data

    @property
    def dim(self) -> int:
        return self._data.size

    def copy(self) -> "StateVector":
        return StateVector(self._data.copy())

    def norm(self) -> float:
        return float(np.linalg.norm(self._data))

    def probabilities(self) -> np.ndarray:
        return np.abs(self._data) ** 2

    def marginal(self, wires: range) -> np.ndarray:
        """Probability of each value of the contiguous register `wires`"""
        if wires.start < 0 or wires.stop > self.num_qubits or len(wires) == 0:
            raise WireError(f"Register {wires} is outside a {self.num_qubits}-qubit state")
        probs = self.probabilities().reshape(
            1 << wires.start, 1 << len(wires), 1 << (self.num_qubits - wires.stop)
        )
        return probs.sum(axis=(0, 2))

    def __repr__(self) -> str:
        return f"StateVector(num_qubits={self.num_qubits})"


@dataclass(frozen=True)
class MeasurementCounts:
    """Outcome histogram of `shots` independent basis measurements"""

    shots: int
    counts: Dict[int, int] = field(default_factory=dict)

    def most_frequent(self) -> int:
        return max(self.counts, key=lambda k: (self.counts[k], -k))

    def probability(self, outcome: int) -> float:
        return self.counts.get(outcome, 0) / self.shots


def from_basis(num_qubits: int, basis_index: int) -> StateVector:
    """|basis_index> on num_qubits wires"""
    if num_qubits < 1:
        raise QModError(f"A state needs at least one qubit, got {num_qubits}")
    _check_capacity(num_qubits)
    if not 0 <= basis_index < 1 << num_qubits:
        raise QModError(
            f"Basis index {basis_index} out of range for {num_qubits} qubits"
        )
    data = np.zeros(1 << num_qubits, dtype=np.complex128)
    data[basis_index] = 1.0
    return StateVector(data)


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    """Apply one gate in place; returns the same state"""
    for w in gate.wires:
        if w >= state.num_qubits:
            raise WireError(
                f"{gate.kind.mnemonic} gate uses wire {w} on a {state.num_qubits}-qubit state"
            )
    _apply_kernel(state.amplitudes.reshape(1, -1), gate, state.num_qubits)
    return state


def apply_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    """Apply every gate of `circuit` in order, in place"""
    if circuit.num_wires != state.num_qubits:
        raise DimensionError(
            f"Circuit has {circuit.num_wires} wires but the state has {state.num_qubits} qubits"
        )
    psi = state.amplitudes.reshape(1, -1)
    for gate in circuit.gates:
        _apply_kernel(psi, gate, state.num_qubits)
    return state


def simulate_basis_batch(circuit: Circuit, basis_indices: Iterable[int]) -> np.ndarray:
    """Run `circuit` on several basis inputs at once.

    Row i of the result is the final state for basis_indices[i]; identical to
    running each input through apply_circuit separately.
    """
    num_qubits = circuit.num_wires
    _check_capacity(num_qubits)
    indices = np.fromiter((int(i) for i in basis_indices), dtype=np.int64)
    if indices.size and (indices.min() < 0 or indices.max() >= 1 << num_qubits):
        raise QModError(f"Basis index out of range for {num_qubits} qubits")
    psi = np.zeros((indices.size, 1 << num_qubits), dtype=np.complex128)
    psi[np.arange(indices.size), indices] = 1.0
    if indices.size == 0:
        return psi
    for gate in circuit.gates:
        _apply_kernel(psi, gate, num_qubits)
    return psi


def unitary(circuit: Circuit) -> np.ndarray:
    """Dense matrix of `circuit`; column j is the image of |j>"""
    return simulate_basis_batch(circuit, range(1 << circuit.num_wires)).T


def sample_distribution(
    probabilities: np.ndarray, shots: int, seed: int
) -> Dict[int, int]:
    """Draw `shots` outcomes from `probabilities` with a seeded generator"""
    if shots < 1:
        raise QModError(f"shots must be at least 1, got {shots}")
    probs = np.asarray(probabilities, dtype=np.float64)
    probs = probs / probs.sum()
    rng = np.random.default_rng(seed)
    outcomes = rng.choice(probs.size, size=shots, p=probs)
    tally = np.bincount(outcomes, minlength=probs.size)
    return {int(k): int(tally[k]) for k in np.flatnonzero(tally)}


def sample(state: StateVector, shots: int, seed: int) -> MeasurementCounts:
    """Measure every qubit `shots` times"""
    return MeasurementCounts(shots, sample_distribution(state.probabilities(), shots, seed))


def fidelity(a: StateVector, b: StateVector) -> float:
    """|<a|b>|^2"""
    if a.num_qubits != b.num_qubits:
        raise DimensionError(
            f"Cannot compare states of {a.num_qubits} and {b.num_qubits} qubits"
        )
    return float(abs(np.vdot(a.amplitudes, b.amplitudes)) ** 2)


def basis_fidelity(state: StateVector, basis_index: int) -> float:
    """|<basis_index|state>|^2"""
    return float(abs(state.amplitudes[basis_index]) ** 2)
