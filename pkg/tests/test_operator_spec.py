import pytest

from src.core.errors import NonInvertibleError, OperatorSpecError, WireError
from src.core.layout import RegisterLayout, modulus_bits
from src.core.operator_spec import OperatorKind, OperatorSpec, sweep_spec


def test_modulus_bits():
    assert [modulus_bits(N) for N in (2, 3, 4, 5, 8, 9, 15, 16)] == [1, 2, 2, 3, 3, 4, 4, 4]


def test_k_out_of_range():
    with pytest.raises(OperatorSpecError, match="k out of range"):
        OperatorSpec(OperatorKind.ADD_IN_CONST, 5, k=9).validate()
    with pytest.raises(OperatorSpecError):
        OperatorSpec(OperatorKind.ADD_IN_CONST, 5).validate()


def test_modulus_too_small():
    with pytest.raises(OperatorSpecError):
        OperatorSpec(OperatorKind.ADD_IN_QQ, 1).validate()


def test_non_invertible_constants():
    with pytest.raises(NonInvertibleError):
        OperatorSpec(OperatorKind.MULT_IN_CONST, 8, k=4).validate()
    with pytest.raises(NonInvertibleError) as exc:
        OperatorSpec(OperatorKind.EXP_OUT, 15, base=6).validate()
    assert "gcd(6, 15) = 3" in str(exc.value)


def test_unknown_operator():
    with pytest.raises(OperatorSpecError):
        OperatorKind.from_name("divide")


def test_exponent_width_default_and_override():
    assert OperatorSpec(OperatorKind.EXP_OUT, 15, base=7).exponent_width == 4
    spec = OperatorSpec(OperatorKind.EXP_OUT, 15, base=7, exponent_bits=8)
    assert spec.input_bound("data_a") == 256


def test_sweep_spec():
    spec = sweep_spec(OperatorKind.MULT_IN_CONST, 5)
    assert spec.modulus == 31 and spec.n == 5 and spec.k == 2
    assert sweep_spec(OperatorKind.EXP_OUT, 3).base == 2
    with pytest.raises(OperatorSpecError):
        sweep_spec(OperatorKind.ADD_IN_QQ, 1)


def test_layout_encode_decode():
    layout = RegisterLayout.sequential(3, [("data_a", 3), ("overflow", 1), ("data_b", 3), ("sign_ancilla", 1)])
    assert layout.num_wires == 8
    index = layout.encode({"data_a": 5, "data_b": 3})
    assert index == (5 << 5) | (3 << 1)
    assert layout.decode(index) == {"data_a": 5, "overflow": 0, "data_b": 3, "sign_ancilla": 0}
    assert layout.ancilla_wires == [3, 7]
    assert layout.ancilla_zero_mask()[index]
    with pytest.raises(WireError):
        layout.encode({"data_a": 8})


def test_layout_validation():
    with pytest.raises(WireError):
        RegisterLayout(2, (("data_a", 0, 2), ("data_b", 3, 5)))
    with pytest.raises(WireError):
        RegisterLayout(2, (("sign_ancilla", 0, 2),))
    with pytest.raises(WireError):
        RegisterLayout(2, (("scratch", 0, 1),))
