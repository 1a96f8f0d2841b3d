"""Integer partitions, hook lengths and the s-core predicates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "Partition",
    "conjugate",
    "first_column_hooks",
    "hook_lengths",
    "is_s_core",
    "is_st_core",
]


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts.

    The empty partition ``Partition(())`` is the unique partition of 0.
    Construction validates the parts; nothing is sorted on the caller's
    behalf.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for x in parts:
            if not isinstance(x, int) or x < 1:
                raise PartitionError(f"parts must be positive integers: {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise PartitionError(f"parts must be weakly decreasing: {parts}")

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"5,3,3,2"``; ``"-"`` or an empty string is the empty partition."""
        text = text.strip()
        if text in ("", "-"):
            return cls(())
        try:
            parts = tuple(int(x) for x in text.split(","))
        except ValueError:
            raise PartitionError(f"malformed partition {text!r}") from None
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts)) if self.parts else "-"


def _as_partition(p: Partition | Iterable[int]) -> Partition:
    return p if isinstance(p, Partition) else Partition(tuple(p))


def conjugate(p: Partition | Iterable[int]) -> Partition:
    p = _as_partition(p)
    if not p.parts:
        return p
    return Partition(tuple(sum(1 for x in p.parts if x > j) for j in range(p.parts[0])))


def hook_lengths(p: Partition | Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Hook length of every cell, one row per part.

    Cell (i, j) has arm ``parts[i] - j - 1`` and leg ``conj[j] - i - 1``.
    """
    p = _as_partition(p)
    conj = conjugate(p).parts
    return tuple(
        tuple(row - j + conj[j] - i - 1 for j in range(row))
        for i, row in enumerate(p.parts)
    )


def is_s_core(p: Partition | Iterable[int], s: int, check_multiples: bool = False) -> bool:
    """True if no hook of ``p`` has length exactly ``s``.

    With ``check_multiples`` the classical equivalence is asserted as well:
    a hook of length m*s forces a hook of length s.
    """
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    hooks = {h for row in hook_lengths(p) for h in row}
    core = s not in hooks
    if check_multiples:
        has_multiple = any(h % s == 0 for h in hooks)
        assert core == (not has_multiple), (p, s)
    return core


def is_st_core(p: Partition | Iterable[int], s: int, t: int) -> bool:
    return is_s_core(p, s) and is_s_core(p, t)


def first_column_hooks(p: Partition | Iterable[int]) -> list[int]:
    """Hook lengths down the first column; strictly decreasing."""
    parts = _as_partition(p).parts
    m = len(parts)
    return [x + m - 1 - k for k, x in enumerate(parts)]
