"""Resource reports and n-sweeps rendered as JSON or YAML"""

import json
from dataclasses import dataclass
from typing import Dict, List, Tuple

import yaml

from ..core.errors import QModError
from ..core.operator_spec import OperatorKind, OperatorSpec, sweep_spec
from ..core.resources import ResourceReport, loglog_slope, resource_report
from ..synthesis.operators import build_operator

FORMATS = ("json", "yaml")


@dataclass(frozen=True)
class SweepReport:
    kind: OperatorKind
    points: Dict[int, ResourceReport]

    @property
    def widths(self) -> List[int]:
        return sorted(self.points)

    def slope(self) -> float:
        """Fitted exponent of depth against n"""
        xs = self.widths
        return loglog_slope(xs, [self.points[n].depth for n in xs])

    def qubit_slope(self) -> float:
        xs = self.widths
        return loglog_slope(xs, [self.points[n].total_qubits for n in xs])

    def as_dict(self) -> Dict[str, object]:
        return {
            "op": self.kind.value,
            "reports": {str(n): self.points[n].as_dict() for n in self.widths},
            "slope": round(self.slope(), 6),
            "qubit_slope": round(self.qubit_slope(), 6),
        }


def report_for(spec: OperatorSpec) -> ResourceReport:
    circuit, layout = build_operator(spec)
    return resource_report(circuit, layout)


def sweep(kind: OperatorKind, n_min: int, n_max: int) -> SweepReport:
    """Resource reports for the representative instance at every n in [n_min, n_max]"""
    if n_max < n_min:
        raise QModError(f"empty sweep range {n_min}:{n_max}")
    if n_max - n_min < 1:
        raise QModError("a sweep needs at least two widths to fit a slope")
    return SweepReport(kind, {n: report_for(sweep_spec(kind, n)) for n in range(n_min, n_max + 1)})


def parse_sweep(text: str) -> Tuple[int, int]:
    """'nmin:nmax' -> (nmin, nmax)"""
    try:
        lo, hi = (int(part) for part in text.split(":"))
    except ValueError as e:
        raise QModError(f"--sweep expects nmin:nmax, got {text!r}") from e
    return lo, hi


def render(data: Dict[str, object], fmt: str = "json") -> str:
    """Stable-key rendering of a report dictionary"""
    if fmt == "json":
        return json.dumps(data, indent=2, sort_keys=True)
    if fmt == "yaml":
        return yaml.safe_dump(data, sort_keys=True, default_flow_style=False).rstrip("\n")
    raise QModError(f"Unsupported format: {fmt}")
