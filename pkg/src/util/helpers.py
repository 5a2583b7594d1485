# Helper functions for register values on the command line

from typing import Sequence, Tuple

from ..core.errors import QModError


def parse_residues(text: str) -> Tuple[int, ...]:
    """'3,4' -> (3, 4); register order, data_a first"""
    if not text or not text.strip():
        raise QModError("--input needs at least one value")
    values = []
    for part in text.split(","):
        part = part.strip()
        try:
            values.append(int(part))
        except ValueError as e:
            raise QModError(f"--input values must be integers, got {part!r}") from e
    return tuple(values)


def format_residues(values: Sequence[int]) -> str:
    """(4,) -> '4', (3, 4) -> '(3,4)'"""
    if len(values) == 1:
        return str(values[0])
    return "(" + ",".join(str(v) for v in values) + ")"


def format_histogram(counts, limit: int = 0) -> str:
    """'outcome: count' lines, most frequent first"""
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    if limit:
        ranked = ranked[:limit]
    return "\n".join(f"{outcome}: {count}" for outcome, count in ranked)
