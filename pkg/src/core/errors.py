"""Exception types raised by qmod.

Everything derives from ValueError so callers that only care about "bad
input" can keep catching that.
"""

from typing import Optional


class QModError(ValueError):
    """Base class for qmod precondition failures"""


class WireError(QModError):
    """A wire index is out of range, repeated, or collides with another wire"""


class UncontrollableGateError(QModError):
    """A gate kind has no controlled form in the gate set"""


class DimensionError(QModError):
    """State and circuit (or two states) disagree on width"""


class OperatorSpecError(QModError):
    """Invalid operator parameters (k, modulus, base, kind)"""


class NonInvertibleError(OperatorSpecError):
    """A constant has no inverse modulo N, so the in-place map is not bijective"""

    def __init__(self, value: int, modulus: int, gcd: int, what: str = "k"):
        self.value = value
        self.modulus = modulus
        self.gcd = gcd
        super().__init__(
            f"{what}={value} is not invertible modulo N={modulus} "
            f"(gcd({value}, {modulus}) = {gcd})"
        )


class CapacityError(QModError):
    """The requested register width exceeds the simulator qubit ceiling"""


class CircuitFormatError(QModError):
    """Malformed circuit text"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
