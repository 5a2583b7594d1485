import sys
import yaml
import pytest
from pathlib import Path

# Ensure the repository root and src/ are on sys.path so `src.*` is importable when not installed
ROOT = Path(__file__).parent.parent
SRC = ROOT / "src"
for p in (ROOT, SRC):
    if str(p) not in sys.path:
        sys.path.insert(0, str(p))

from src.core.operator_spec import OperatorKind, OperatorSpec  # noqa: E402

FIXTURE_DIR = Path(__file__).parent / "fixtures"


def load_fixture(name: str):
    with open(FIXTURE_DIR / name, "r", encoding="utf-8") as f:
        return yaml.safe_load(f)


def spec_from_case(case) -> OperatorSpec:
    return OperatorSpec(
        OperatorKind.from_name(case["op"]),
        case["modulus"],
        k=case.get("k"),
        base=case.get("base"),
    ).validate()


@pytest.fixture
def qubit_ceiling(monkeypatch):
    """Set QMOD_MAX_QUBITS for one test"""

    def _set(value):
        monkeypatch.setenv("QMOD_MAX_QUBITS", str(value))

    yield _set
    monkeypatch.delenv("QMOD_MAX_QUBITS", raising=False)
