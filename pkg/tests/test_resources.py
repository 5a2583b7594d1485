import json

import numpy as np
import pytest
import yaml

from src.core.circuit import CircuitBuilder
from src.core.errors import DimensionError, QModError
from src.core.layout import RegisterLayout
from src.core.operator_spec import OperatorKind, OperatorSpec
from src.core.resources import asap_depth, loglog_slope, resource_report
from src.synthesis.adders import AdderBuilder
from src.util.report import parse_sweep, render, report_for, sweep

# Depth exponent of each construction over the sweep widths used below
SLOPE_BANDS = {
    OperatorKind.ADD_IN_CONST: (3, 8, 0.7, 1.3),
    OperatorKind.ADD_OUT_CONST: (3, 8, 0.7, 1.3),
    OperatorKind.ADD_IN_QQ: (3, 8, 1.5, 2.3),
    OperatorKind.ADD_OUT_QQ: (3, 8, 1.5, 2.3),
    OperatorKind.MULT_OUT_CONST: (3, 7, 1.5, 2.3),
    OperatorKind.MULT_IN_CONST: (3, 7, 1.5, 2.3),
    OperatorKind.MULT_OUT_QQ: (3, 7, 2.5, 3.4),
    OperatorKind.EXP_OUT: (3, 6, 2.6, 3.4),
}


def test_asap_depth():
    builder = CircuitBuilder(3)
    builder.h(0).h(1).h(2)  # one layer
    builder.x(1, (0,))  # layer 2
    builder.phase(0.5, 2)  # still layer 2
    builder.swap(1, 2)  # layer 3
    assert asap_depth(builder.build()) == 3
    assert asap_depth(CircuitBuilder(2).build()) == 0


def test_add_in_report():
    report = report_for(OperatorSpec(OperatorKind.ADD_IN_CONST, 5, k=3))
    assert report.total_qubits == 5
    assert report.ancilla_qubits == 2
    assert report.depth == 60
    assert report.gate_counts == {
        "cp": 40, "cx": 2, "h": 24, "mcp": 0, "mcx": 0, "p": 16, "swap": 12, "x": 2,
    }
    assert report.total_gates == 96


def test_report_dict_is_sorted():
    data = report_for(OperatorSpec(OperatorKind.ADD_IN_QQ, 5)).as_dict()
    assert list(data) == ["qubits", "ancilla", "depth", "gates"]
    assert list(data["gates"]) == sorted(data["gates"])
    assert json.loads(render(data, "json")) == data
    assert yaml.safe_load(render(data, "yaml")) == data


def test_layout_width_mismatch():
    circuit = CircuitBuilder(3).build()
    layout = RegisterLayout.sequential(1, [("data_a", 2)])
    with pytest.raises(DimensionError):
        resource_report(circuit, layout)


def test_loglog_slope():
    assert loglog_slope([1, 2, 4, 8], [3, 12, 48, 192]) == pytest.approx(2.0)
    with pytest.raises(ValueError):
        loglog_slope([1], [1])


def test_add_in_depth_grows_by_constant_steps():
    result = sweep(OperatorKind.ADD_IN_CONST, 3, 8)
    assert [result.points[n].depth for n in result.widths] == [60, 73, 86, 99, 112, 125]


@pytest.mark.parametrize("kind", list(SLOPE_BANDS), ids=lambda k: k.value)
def test_depth_scaling(kind):
    lo_n, hi_n, lo, hi = SLOPE_BANDS[kind]
    result = sweep(kind, lo_n, hi_n)
    assert lo <= result.slope() <= hi
    qubits = [result.points[n].total_qubits for n in result.widths]
    steps = {b - a for a, b in zip(qubits, qubits[1:])}
    # qubit count is affine in n
    assert len(steps) == 1 and steps.pop() in (1, 2, 3, 4)


def test_sweep_argument_parsing():
    assert parse_sweep("3:8") == (3, 8)
    with pytest.raises(QModError):
        parse_sweep("3-8")
    with pytest.raises(QModError):
        sweep(OperatorKind.ADD_IN_CONST, 5, 4)


def test_depth_ignores_wire_labels():
    circuit, _ = AdderBuilder.add_in_const(3, 5)
    base_depth = asap_depth(circuit)
    rng = np.random.default_rng(11)
    for _ in range(5):
        mapping = [int(w) for w in rng.permutation(circuit.num_wires)]
        assert asap_depth(circuit.remapped(mapping, circuit.num_wires)) == base_depth
