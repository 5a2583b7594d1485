import numpy as np
import pytest

from src.core.circuit import CircuitBuilder
from src.core.layout import RegisterLayout
from src.core.operator_spec import OperatorKind, OperatorSpec
from src.core.statevector import StateVector, apply_circuit, basis_fidelity, from_basis
from src.synthesis.adders import AdderBuilder
from src.synthesis.qft import FourierBuilder
from src.util.verify import check_reversibility, verify_operator

MODULI = [3, 5, 6, 7, 8, 15]


def assert_verified(spec):
    report = verify_operator(spec)
    assert report.ok, [(c.inputs, c.observed, c.expected) for c in report.failures[:5]]
    assert all(c.ancilla_clean >= 1 - 1e-9 for c in report.cases)
    return report


@pytest.mark.parametrize("N", MODULI)
def test_add_in_const_exhaustive(N):
    constants = range(N) if N <= 8 else (0, 1, 7, 14)
    for k in constants:
        assert_verified(OperatorSpec(OperatorKind.ADD_IN_CONST, N, k=k))


def test_add_in_const_layout():
    circuit, layout = AdderBuilder.add_in_const(3, 5)
    assert circuit.num_wires == 5
    assert layout.roles == ["overflow", "data_a", "sign_ancilla"]
    assert len(layout.ancilla_wires) == 2


@pytest.mark.parametrize("N", MODULI)
def test_add_out_const_exhaustive(N):
    report = assert_verified(OperatorSpec(OperatorKind.ADD_OUT_CONST, N, k=3 % N))
    assert len(report) == N


@pytest.mark.parametrize("N", [3, 5, 6, 7, 8])
def test_add_in_qq_exhaustive(N):
    report = assert_verified(OperatorSpec(OperatorKind.ADD_IN_QQ, N))
    assert len(report) == N * N


@pytest.mark.parametrize("N", [3, 5, 6, 7, 8])
def test_add_out_qq_exhaustive(N):
    report = assert_verified(OperatorSpec(OperatorKind.ADD_OUT_QQ, N))
    assert len(report) == N * N


@pytest.mark.slow
@pytest.mark.parametrize("kind", [OperatorKind.ADD_IN_QQ, OperatorKind.ADD_OUT_QQ])
def test_two_register_adders_modulus_15(kind):
    assert len(assert_verified(OperatorSpec(kind, 15))) == 225


@pytest.mark.parametrize(
    "spec",
    [
        OperatorSpec(OperatorKind.ADD_IN_CONST, 7, k=5),
        OperatorSpec(OperatorKind.ADD_OUT_CONST, 8, k=3),
        OperatorSpec(OperatorKind.ADD_IN_QQ, 6),
        OperatorSpec(OperatorKind.ADD_OUT_QQ, 5),
    ],
)
def test_adders_are_reversible(spec):
    fidelities = check_reversibility(spec, samples=20, seed=1)
    assert min(fidelities.values()) > 1 - 1e-9


@pytest.mark.parametrize("N, k", [(5, 3), (7, 4), (8, 4)])
def test_add_in_const_permutes_uniform_superposition(N, k):
    circuit, layout = AdderBuilder.add_in_const(k, N)
    amplitudes = np.zeros(1 << layout.num_wires, dtype=complex)
    for a in range(N):
        amplitudes[layout.encode({"data_a": a})] = 1 / np.sqrt(N)
    state = apply_circuit(StateVector(amplitudes.copy()), circuit)
    assert np.max(np.abs(state.amplitudes - amplitudes)) < 1e-9


def _controlled_block(k, N, control_value, a):
    """Fourier-basis modular adder gated by a single control wire"""
    layout = RegisterLayout.sequential(
        3, [("data_a", 1), ("overflow", 1), ("data_b", 3), ("sign_ancilla", 1)]
    )
    register = [layout.wires("overflow")[0]] + list(layout.wires("data_b"))
    ancilla = layout.wires("sign_ancilla")[0]
    control = layout.wires("data_a")[0]
    builder = CircuitBuilder(layout.num_wires)
    FourierBuilder.append_qft(builder, register)
    AdderBuilder.append_modular_add(builder, k, N, register, ancilla, controls=(control,))
    FourierBuilder.append_iqft(builder, register)
    start = layout.encode({"data_a": control_value, "data_b": a})
    state = apply_circuit(from_basis(layout.num_wires, start), builder.build())
    return state, layout


@pytest.mark.parametrize("a", range(7))
def test_controlled_block_respects_control(a):
    off, layout = _controlled_block(4, 7, 0, a)
    assert basis_fidelity(off, layout.encode({"data_b": a})) > 1 - 1e-9
    on, layout = _controlled_block(4, 7, 1, a)
    assert basis_fidelity(on, layout.encode({"data_a": 1, "data_b": (a + 4) % 7})) > 1 - 1e-9
