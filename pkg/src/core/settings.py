"""Module-level defaults and the QMOD_MAX_QUBITS override"""

import os
import sys

DEFAULT_MAX_QUBITS = 26
MAX_QUBITS_ENV = "QMOD_MAX_QUBITS"

# End-to-end comparisons vs. per-gate norm drift
DEFAULT_TOLERANCE = 1e-9
GATE_TOLERANCE = 1e-12

# Truth tables above this many inputs are sampled instead of enumerated
EXHAUSTIVE_LIMIT = 64

# Amplitudes per simulation chunk when running a batch of basis inputs
BATCH_AMPLITUDE_BUDGET = 1 << 22


def max_qubits() -> int:
    """Simulator qubit ceiling, honouring QMOD_MAX_QUBITS when it is valid"""
    raw = os.environ.get(MAX_QUBITS_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_QUBITS
    try:
        value = int(raw)
    except ValueError:
        print(
            f"Warning: ignoring {MAX_QUBITS_ENV}={raw!r}, expected an integer",
            file=sys.stderr,
        )
        return DEFAULT_MAX_QUBITS
    if value < 1:
        print(
            f"Warning: ignoring {MAX_QUBITS_ENV}={value}, must be at least 1",
            file=sys.stderr,
        )
        return DEFAULT_MAX_QUBITS
    return value
