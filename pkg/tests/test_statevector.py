import numpy as np
import pytest

from src.core.circuit import CircuitBuilder, Gate, GateKind
from src.core.errors import CapacityError, DimensionError, QModError, WireError
from src.core.settings import DEFAULT_MAX_QUBITS, max_qubits
from src.core.statevector import (
    StateVector,
    apply_circuit,
    apply_gate,
    basis_fidelity,
    fidelity,
    from_basis,
    sample,
    simulate_basis_batch,
    unitary,
)


def test_from_basis_sets_single_amplitude():
    state = from_basis(2, 1)
    assert np.allclose(state.amplitudes, [0, 1, 0, 0])
    assert state.num_qubits == 2
    assert state.dim == 4


def test_wire_zero_is_most_significant():
    state = apply_gate(from_basis(2, 0), Gate.x(0))
    assert basis_fidelity(state, 0b10) == pytest.approx(1.0)


def test_hadamard_gives_equal_split():
    state = apply_gate(from_basis(2, 0), Gate(GateKind.HADAMARD, (0,)))
    assert np.allclose(state.probabilities(), [0.5, 0, 0.5, 0])


def test_controlled_x_flips_only_when_control_set():
    assert basis_fidelity(apply_gate(from_basis(2, 0b10), Gate.x(1, (0,))), 0b11) == 1.0
    assert basis_fidelity(apply_gate(from_basis(2, 0b01), Gate.x(1, (0,))), 0b01) == 1.0


def test_multi_controlled_x():
    gate = Gate.x(2, (0, 1))
    assert gate.kind is GateKind.MULTI_CONTROLLED_X
    assert basis_fidelity(apply_gate(from_basis(3, 0b110), gate), 0b111) == 1.0
    assert basis_fidelity(apply_gate(from_basis(3, 0b100), gate), 0b100) == 1.0


def test_swap_exchanges_wires():
    state = apply_gate(from_basis(3, 0b100), Gate(GateKind.SWAP, (0, 2)))
    assert basis_fidelity(state, 0b001) == 1.0


def test_phase_gates():
    state = apply_gate(from_basis(1, 1), Gate.phase(np.pi, 0))
    assert state.amplitudes[1] == pytest.approx(-1.0)

    theta = 0.3
    both = apply_gate(from_basis(2, 0b11), Gate.phase(theta, 1, (0,)))
    assert both.amplitudes[3] == pytest.approx(np.exp(1j * theta))
    one = apply_gate(from_basis(2, 0b10), Gate.phase(theta, 1, (0,)))
    assert one.amplitudes[2] == pytest.approx(1.0)


def test_norm_preserved_by_random_circuit():
    rng = np.random.default_rng(7)
    builder = CircuitBuilder(4)
    for _ in range(60):
        a, b, c = (int(w) for w in rng.choice(4, size=3, replace=False))
        choice = rng.integers(0, 5)
        if choice == 0:
            builder.h(a)
        elif choice == 1:
            builder.phase(float(rng.uniform(-np.pi, np.pi)), a, (b,))
        elif choice == 2:
            builder.x(a, (b, c))
        elif choice == 3:
            builder.swap(a, b)
        else:
            builder.phase(float(rng.uniform(-np.pi, np.pi)), a, (b, c))
    state = apply_circuit(from_basis(4, 5), builder.build())
    assert abs(state.norm() - 1.0) < 1e-12


def test_gate_on_missing_wire_rejected():
    with pytest.raises(WireError):
        apply_gate(from_basis(2, 0), Gate.x(3))


def test_circuit_width_mismatch_rejected():
    with pytest.raises(DimensionError):
        apply_circuit(from_basis(2, 0), CircuitBuilder(3).build())


def test_bad_basis_index_rejected():
    with pytest.raises(QModError):
        from_basis(2, 4)


def test_amplitudes_must_be_power_of_two():
    with pytest.raises(DimensionError):
        StateVector([1, 0, 0])


def test_qubit_ceiling(qubit_ceiling):
    qubit_ceiling(3)
    with pytest.raises(CapacityError):
        from_basis(4, 0)
    assert from_basis(3, 0).num_qubits == 3


def test_invalid_ceiling_is_ignored_with_warning(qubit_ceiling, capsys):
    qubit_ceiling("lots")
    assert max_qubits() == DEFAULT_MAX_QUBITS
    assert "Warning:" in capsys.readouterr().err


def test_sampling_is_reproducible():
    state = apply_gate(apply_gate(from_basis(2, 0), Gate(GateKind.HADAMARD, (0,))),
                       Gate(GateKind.HADAMARD, (1,)))
    first = sample(state, 500, seed=42)
    second = sample(state, 500, seed=42)
    assert first == second
    assert sum(first.counts.values()) == 500
    assert set(first.counts) <= {0, 1, 2, 3}


def test_sampling_basis_state_is_deterministic():
    counts = sample(from_basis(3, 6), 50, seed=1)
    assert counts.counts == {6: 50}
    assert counts.most_frequent() == 6
    assert counts.probability(6) == 1.0


def test_fidelity():
    a = from_basis(2, 1)
    assert fidelity(a, a.copy()) == pytest.approx(1.0)
    assert fidelity(a, from_basis(2, 2)) == 0.0
    with pytest.raises(DimensionError):
        fidelity(a, from_basis(3, 1))


def test_marginal_reads_register():
    state = from_basis(3, 0b101)
    assert np.allclose(state.marginal(range(0, 2)), [0, 0, 1, 0])
    assert np.allclose(state.marginal(range(2, 3)), [0, 1])


def test_batch_matches_individual_runs():
    builder = CircuitBuilder(3)
    builder.h(0).phase(0.7, 2, (0,)).x(1, (0,)).swap(1, 2).h(2)
    circuit = builder.build()
    batch = simulate_basis_batch(circuit, [0, 3, 5])
    for row, index in zip(batch, [0, 3, 5]):
        single = apply_circuit(from_basis(3, index), circuit)
        assert np.allclose(row, single.amplitudes)


def test_unitary_of_hadamard():
    circuit = CircuitBuilder(1).h(0).build()
    expected = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    assert np.allclose(unitary(circuit), expected)


def test_unnormalized_amplitudes_rejected():
    with pytest.raises(QModError):
        StateVector([1, 1])
    with pytest.raises(QModError):
        StateVector([0, 0, 0, 0])
    state = StateVector(np.array([1, 1]) / np.sqrt(2))
    assert state.norm() == pytest.approx(1.0)
    assert fidelity(state, state) == pytest.approx(1.0)


def test_sampling_plus_state_within_three_sigma():
    shots = 10000
    state = StateVector(np.array([1, 1]) / np.sqrt(2))
    counts = sample(state, shots, seed=2024)
    sigma = np.sqrt(shots * 0.5 * 0.5)
    assert abs(counts.counts.get(0, 0) - shots / 2) <= 3 * sigma
    assert counts.counts.get(0, 0) + counts.counts.get(1, 0) == shots


def test_sampling_uniform_two_qubit_state():
    shots = 4000
    state = StateVector(np.full(4, 0.5))
    counts = sample(state, shots, seed=2024)
    sigma = np.sqrt(shots * 0.25 * 0.75)
    assert set(counts.counts) == {0, 1, 2, 3}
    for outcome in range(4):
        assert abs(counts.counts[outcome] - shots / 4) <= 3 * sigma
