"""The poset P_(s,t) of gaps of the numerical semigroup <s,t>.

An element ``a`` covers ``b`` when ``a - b`` is ``s`` or ``t``.  Elements are
identified by their integer value everywhere in the package.  The staircase
posets T_s = P_(s,s+1) additionally carry ranks and (rank, position)
coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Iterable, NamedTuple

from .errors import NotAGap, NotCoprime, UnrankedPoset

__all__ = [
    "GapPoset",
    "OrderIdeal",
    "StaircaseCoord",
    "build_gap_poset",
    "frobenius",
    "grid_coordinates",
    "principal_ideal",
    "rank_in_Ts",
    "staircase",
    "staircase_coord",
    "staircase_value",
]


@dataclass(frozen=True, eq=False)
class GapPoset:
    s: int
    t: int
    gaps: tuple[int, ...]
    covers_down: dict[int, tuple[int, ...]] = field(repr=False)
    covers_up: dict[int, tuple[int, ...]] = field(repr=False)

    @property
    def is_staircase(self) -> bool:
        return self.t == self.s + 1

    def __len__(self):
        return len(self.gaps)

    def __contains__(self, a):
        return a in self.covers_down

    def __iter__(self):
        return iter(self.gaps)

    def check_gap(self, a: int) -> None:
        if a not in self.covers_down:
            raise NotAGap(a, self.s, self.t)

    def minimal_elements(self) -> list[int]:
        return [a for a in self.gaps if not self.covers_down[a]]

    def to_json(self) -> dict:
        """JSON form; integers as decimal strings."""
        return {
            "s": str(self.s),
            "t": str(self.t),
            "gaps": [str(a) for a in self.gaps],
            "covers": {str(a): [str(b) for b in self.covers_down[a]] for a in self.gaps},
        }


@dataclass(frozen=True)
class OrderIdeal:
    """A downward-closed set of gaps of P_(s,t), stored ascending.

    Construction does not check closure; ``ideal_enum.is_order_ideal`` does.
    """

    s: int
    t: int
    elements: tuple[int, ...] = ()

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, a):
        return a in self.elements

    @property
    def poset(self) -> GapPoset:
        return build_gap_poset(self.s, self.t)

    def descending(self) -> tuple[int, ...]:
        return self.elements[::-1]

    def __str__(self):
        return ",".join(map(str, self.descending())) if self.elements else "-"


def _normalize(s: int, t: int) -> tuple[int, int]:
    if s < 0 or t < 0 or (s == 0 and t == 0):
        raise ValueError(f"generators must be nonnegative and not both zero: ({s}, {t})")
    if gcd(s, t) != 1:
        raise NotCoprime(s, t)
    return (s, t) if s <= t else (t, s)


def frobenius(s: int, t: int) -> int:
    """Largest gap of <s,t>; -1 when there are no gaps."""
    s, t = _normalize(s, t)
    return max(s * t - s - t, -1)


def _representable(s: int, t: int, limit: int) -> list[bool]:
    rep = [False] * (limit + 1)
    for n in range(limit + 1):
        rep[n] = n == 0 or (n >= s and rep[n - s]) or (n >= t and rep[n - t])
    return rep


@lru_cache(maxsize=256)
def build_gap_poset(s: int, t: int) -> GapPoset:
    """Gap poset of <s,t>, with the generators reordered so that s <= t.

    ``s`` in {0, 1} gives the empty poset.
    """
    s, t = _normalize(s, t)
    top = s * t - s - t
    if s <= 1 or top < 1:
        return GapPoset(s, t, (), {}, {})
    rep = _representable(s, t, top)
    gaps = tuple(n for n in range(1, top + 1) if not rep[n])
    gap_set = set(gaps)
    down = {a: tuple(b for b in (a - s, a - t) if b in gap_set) for a in gaps}
    up = {a: tuple(b for b in (a + s, a + t) if b in gap_set) for a in gaps}
    return GapPoset(s, t, gaps, down, up)


def staircase(j: int) -> GapPoset:
    """T_j = P_(j, j+1); T_0 and T_1 are empty."""
    if j < 0:
        raise ValueError(f"staircase index must be >= 0, got {j}")
    return build_gap_poset(j, j + 1)


class StaircaseCoord(NamedTuple):
    rank: int
    position: int


def rank_in_Ts(s: int, a: int) -> int:
    """Rank of the gap ``a`` in T_s; the minimal elements 1..s-1 have rank 0."""
    if a not in staircase(s):
        raise NotAGap(a, s, s + 1)
    return a // (s + 1)


def staircase_coord(s: int, a: int) -> StaircaseCoord:
    r = rank_in_Ts(s, a)
    return StaircaseCoord(r, a - r * (s + 1))


def staircase_value(s: int, rank: int, position: int) -> int:
    """Element of T_s at the given rank and position (1 <= position <= s-1-rank)."""
    if rank < 0 or not 1 <= position <= s - 1 - rank:
        raise ValueError(f"no element of T_{s} at rank {rank}, position {position}")
    return rank * (s + 1) + position


def grid_coordinates(poset: GapPoset) -> dict[int, tuple[int, int]]:
    """Write each gap as ``s*t - alpha*s - beta*t`` with alpha, beta >= 1.

    Covers move alpha or beta up by one, so these coordinates lay the Hasse
    diagram out on a square grid with the Frobenius number at (1, 1).
    """
    s, t = poset.s, poset.t
    coords = {}
    for a in poset.gaps:
        for beta in range(1, s):
            rest = s * t - beta * t - a
            if rest > 0 and rest % s == 0:
                coords[a] = (rest // s, beta)
                break
        else:  # pragma: no cover - every gap has such a representation
            raise AssertionError(f"no grid coordinates for gap {a} of <{s},{t}>")
    return coords


def principal_ideal(poset: GapPoset, generators: Iterable[int]) -> OrderIdeal:
    """Downward closure of ``generators`` under subtracting s and t."""
    seen = set()
    stack = []
    for g in generators:
        poset.check_gap(g)
        stack.append(g)
    while stack:
        a = stack.pop()
        if a in seen:
            continue
        seen.add(a)
        stack.extend(poset.covers_down[a])
    return OrderIdeal(poset.s, poset.t, tuple(sorted(seen)))


def require_staircase(poset: GapPoset) -> None:
    if not poset.is_staircase:
        raise UnrankedPoset(f"P_({poset.s},{poset.t}) is not a staircase poset T_s")
