"""Line-oriented circuit text format.

    qubits <n>
    h q[i]
    x q[i]
    p(<angle>) q[i]
    cp(<angle>) q[c],q[t]
    mcp(<angle>) q[c1],...,q[ck],q[t]
    cx q[c],q[t]
    mcx q[c1],...,q[ck],q[t]
    swap q[i],q[j]

Angles are radians printed with 17 significant digits, which round-trips
every double exactly.
"""

import os
import re
import sys
from typing import List

from .circuit import Circuit, Gate, GateKind
from .errors import CircuitFormatError, QModError

_HEADER = re.compile(r"^qubits (\d+)$")
_GATE = re.compile(
    r"^(?P<name>[a-z]+)(?:\((?P<angle>[^()\s]+)\))? (?P<wires>q\[\d+\](?:,q\[\d+\])*)$"
)
_WIRE = re.compile(r"q\[(\d+)\]")


def format_angle(angle: float) -> str:
    return format(angle, ".17g")


def emit_gate(gate: Gate) -> str:
    wires = ",".join(f"q[{w}]" for w in gate.wires)
    if gate.kind.is_phase:
        return f"{gate.kind.mnemonic}({format_angle(gate.angle)}) {wires}"
    return f"{gate.kind.mnemonic} {wires}"


def emit_text(circuit: Circuit) -> str:
    """Serialize `circuit`; deterministic, '\\n' line endings, trailing newline"""
    lines = [f"qubits {circuit.num_wires}"]
    lines.extend(emit_gate(g) for g in circuit.gates)
    return "\n".join(lines) + "\n"


def parse_text(text: str, label: str = "") -> Circuit:
    """Inverse of emit_text"""
    lines = text.split("\n")
    # A single trailing newline leaves one empty string behind
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CircuitFormatError("empty circuit text, expected 'qubits <n>'", 1)

    header = _HEADER.match(lines[0])
    if header is None:
        raise CircuitFormatError(f"expected 'qubits <n>', got {lines[0]!r}", 1)
    num_wires = int(header.group(1))

    gates: List[Gate] = []
    for number, line in enumerate(lines[1:], start=2):
        match = _GATE.match(line)
        if match is None:
            raise CircuitFormatError(f"cannot parse gate line {line!r}", number)
        try:
            kind = GateKind.from_mnemonic(match.group("name"))
        except ValueError as e:
            raise CircuitFormatError(str(e), number) from e

        raw_angle = match.group("angle")
        if kind.is_phase and raw_angle is None:
            raise CircuitFormatError(f"{kind.mnemonic} needs an angle", number)
        if not kind.is_phase and raw_angle is not None:
            raise CircuitFormatError(f"{kind.mnemonic} takes no angle", number)

        angle = None
        if raw_angle is not None:
            try:
                angle = float(raw_angle)
            except ValueError as e:
                raise CircuitFormatError(f"bad angle {raw_angle!r}", number) from e

        wires = tuple(int(w) for w in _WIRE.findall(match.group("wires")))
        try:
            gate = Gate(kind, wires, angle)
        except ValueError as e:
            raise CircuitFormatError(str(e), number) from e
        if any(w >= num_wires for w in wires):
            raise CircuitFormatError(
                f"wire out of range for a {num_wires}-wire circuit", number
            )
        gates.append(gate)

    return Circuit(num_wires, tuple(gates), label)


def load_circuit(path: str) -> Circuit:
    """Read a circuit text file"""
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except FileNotFoundError:
        print(f"Error: Circuit file '{path}' not found", file=sys.stderr)
        raise
    label = os.path.splitext(os.path.basename(path))[0]
    return parse_text(text, label)


def write_circuit(text: str, output_file: str, no_overwrite: bool = False) -> None:
    """Write circuit text, creating parent directories as needed"""
    if no_overwrite and os.path.exists(output_file):
        raise QModError(
            f"Output file '{output_file}' exists and --no-overwrite flag is set"
        )
    os.makedirs(os.path.dirname(os.path.abspath(output_file)), exist_ok=True)
    with open(output_file, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
