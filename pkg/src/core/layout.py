"""Named wire groups for an operator's qubit allocation.

Values are stored big-endian inside each group: the group's first wire is the
most significant bit. Across the whole register wire 0 is the MSB of the basis
index.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Tuple

import numpy as np

from .errors import WireError

ROLES = ("data_a", "data_b", "data_c", "overflow", "sign_ancilla", "aux")
ANCILLA_ROLES = ("overflow", "sign_ancilla", "aux")
SINGLE_WIRE_ROLES = ("overflow", "sign_ancilla")


@dataclass(frozen=True)
class RegisterLayout:
    """Role -> contiguous [start, stop) wire range"""

    modulus_bits: int
    groups: Tuple[Tuple[str, int, int], ...]

    def __post_init__(self):
        groups = tuple((str(r), int(a), int(b)) for r, a, b in self.groups)
        object.__setattr__(self, "groups", groups)

        seen = set()
        for role, start, stop in groups:
            if role not in ROLES:
                raise WireError(f"Unknown register role: {role}")
            if role in seen:
                raise WireError(f"Register role listed twice: {role}")
            seen.add(role)
            if stop <= start:
                raise WireError(f"Register '{role}' is empty")
            if role in SINGLE_WIRE_ROLES and stop - start != 1:
                raise WireError(f"Register '{role}' must be a single wire")

        # Groups must tile [0, num_wires) without gaps or overlap
        cursor = 0
        for role, start, stop in sorted(groups, key=lambda g: g[1]):
            if start != cursor:
                raise WireError(
                    f"Register '{role}' starts at wire {start}, expected {cursor}"
                )
            cursor = stop

    @staticmethod
    def sequential(modulus_bits: int, sizes: Iterable[Tuple[str, int]]) -> "RegisterLayout":
        """Lay out roles back to back in the given order"""
        groups = []
        cursor = 0
        for role, size in sizes:
            groups.append((role, cursor, cursor + size))
            cursor += size
        return RegisterLayout(modulus_bits, tuple(groups))

    @property
    def num_wires(self) -> int:
        return max((stop for _, _, stop in self.groups), default=0)

    @property
    def roles(self) -> List[str]:
        return [role for role, _, _ in self.groups]

    def has(self, role: str) -> bool:
        return any(r == role for r, _, _ in self.groups)

    def wires(self, role: str) -> range:
        for r, start, stop in self.groups:
            if r == role:
                return range(start, stop)
        raise KeyError(f"Layout has no '{role}' register")

    def width(self, role: str) -> int:
        return len(self.wires(role))

    @property
    def ancilla_wires(self) -> List[int]:
        return [w for r, a, b in self.groups if r in ANCILLA_ROLES for w in range(a, b)]

    def encode(self, values: Mapping[str, int]) -> int:
        """Basis index with each named register holding its value (others 0)"""
        index = 0
        total = self.num_wires
        for role, value in values.items():
            wires = self.wires(role)
            if value < 0 or value >= 1 << len(wires):
                raise WireError(
                    f"Value {value} does not fit the {len(wires)}-wire '{role}' register"
                )
            index |= int(value) << (total - wires.stop)
        return index

    def decode(self, index: int) -> Dict[str, int]:
        """Register values held by basis index `index`"""
        total = self.num_wires
        values = {}
        for role, start, stop in self.groups:
            values[role] = (index >> (total - stop)) & ((1 << (stop - start)) - 1)
        return values

    def register_indices(self, role: str) -> np.ndarray:
        """Value of register `role` for every basis index, as an int array"""
        wires = self.wires(role)
        index = np.arange(1 << self.num_wires, dtype=np.int64)
        return (index >> (self.num_wires - wires.stop)) & ((1 << len(wires)) - 1)

    def ancilla_zero_mask(self) -> np.ndarray:
        """Boolean array marking basis indices whose ancilla wires are all 0"""
        mask = np.ones(1 << self.num_wires, dtype=bool)
        for role, _, _ in self.groups:
            if role in ANCILLA_ROLES:
                mask &= self.register_indices(role) == 0
        return mask


def modulus_bits(modulus: int) -> int:
    """n = ceil(log2 N)"""
    return max(1, (int(modulus) - 1).bit_length())
