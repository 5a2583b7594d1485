import numpy as np
import pytest

from conftest import load_fixture, spec_from_case
from src.core.errors import OperatorSpecError
from src.core.operator_spec import OperatorKind, OperatorSpec
from src.synthesis.operators import MULT_IN_QQ_NAME, build_operator, describe
from src.util.verify import input_index, run_basis_inputs

EXAMPLES = load_fixture("operator_examples.yaml")


@pytest.mark.parametrize(
    "case", EXAMPLES, ids=[f"{c['op']}-N{c['modulus']}-{c['inputs']}" for c in EXAMPLES]
)
def test_worked_examples(case):
    spec = spec_from_case(case)
    circuit, layout = build_operator(spec)
    start = input_index(layout, spec.input_roles, case["inputs"])
    psi = next(run_basis_inputs(circuit, [start]))
    probs = np.abs(psi) ** 2
    decoded = layout.decode(int(np.argmax(probs)))
    assert decoded[spec.result_role] == case["result"]
    assert probs.max() > 1 - 1e-9
    # inputs other than the result register are preserved
    for role, value in zip(spec.input_roles, case["inputs"]):
        if role != spec.result_role:
            assert decoded[role] == value


@pytest.mark.parametrize("kind", list(OperatorKind))
def test_every_operator_builds(kind):
    spec = OperatorSpec(
        kind,
        7,
        k=3 if kind.value in ("add-in", "add-out", "mult-out", "mult-in") else None,
        base=3 if kind is OperatorKind.EXP_OUT else None,
    )
    circuit, layout = build_operator(spec)
    assert circuit.num_wires == layout.num_wires
    assert len(circuit) > 0
    assert all(layout.has(role) for role in spec.output_roles)


def test_build_validates_spec():
    with pytest.raises(OperatorSpecError):
        build_operator(OperatorSpec(OperatorKind.ADD_OUT_CONST, 5, k=5))


def test_catalog():
    assert "SWAP" in describe("mult-in")
    progression = describe(MULT_IN_QQ_NAME)
    assert "|a>|ab>|0>|0>" in progression
    assert "not synthesised" in progression
    with pytest.raises(OperatorSpecError):
        describe("mult-in-qqq")
