"""Brute-force aggregates over enumerated ideals.

Everything is computed in a single streaming pass by ``CoreTally``, a
commutative monoid, so the parallel paths in ``ideal_enum.fold_ideals`` give
the same exact totals as a sequential walk.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .anderson import ideal_to_partition
from .closed_forms import armstrong_total
from .errors import UnrankedPoset
from .ideal_enum import DEFAULT_CAP, enumerate_ideals, fold_ideals
from .partition import is_st_core
from .report import Check
from .semigroup_poset import build_gap_poset

__all__ = [
    "RHO",
    "SIGMA",
    "TAU",
    "CoreStats",
    "CoreTally",
    "StaircaseSums",
    "WeightFn",
    "core_statistics",
    "g_sigma_brute",
    "lemma_st_check",
    "staircase_sums",
    "verify_armstrong",
    "weighted_ideal_sum",
]


@dataclass(frozen=True)
class WeightFn:
    """The weight a*sigma + b*tau + c*rho on T_s.

    sigma(x) = x, tau(x) = 1 and rho(x) = rank of x.
    """

    a: int = 0
    b: int = 0
    c: int = 0

    def __call__(self, s: int, x: int) -> int:
        return self.a * x + self.b + self.c * (x // (s + 1))

    def __add__(self, other: WeightFn) -> WeightFn:
        return WeightFn(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: WeightFn) -> WeightFn:
        return self + (-1) * other

    def __mul__(self, k: int) -> WeightFn:
        return WeightFn(k * self.a, k * self.b, k * self.c)

    __rmul__ = __mul__


SIGMA = WeightFn(1, 0, 0)
TAU = WeightFn(0, 1, 0)
RHO = WeightFn(0, 0, 1)


class CoreTally:
    """Running sums over a stream of ideals (ascending element tuples)."""

    def __init__(self, s: int, t: int, track_rank: bool = False):
        if track_rank and t != s + 1:
            raise UnrankedPoset(f"ranks are only defined on T_s, not P_({s},{t})")
        self.s = s
        self.t = t
        self.track_rank = track_rank
        self.count = 0
        self.sum_sizes = 0
        self.max_size = 0
        self.sum_card = 0
        self.sum_binom_card = 0
        self.sum_values = 0
        self.sum_ranks = 0

    def fresh(self) -> CoreTally:
        return CoreTally(self.s, self.t, self.track_rank)

    def add(self, elems: tuple[int, ...]) -> None:
        n = len(elems)
        total = sum(elems)
        pairs = n * (n - 1) // 2
        size = total - pairs
        self.count += 1
        self.sum_sizes += size
        if size > self.max_size:
            self.max_size = size
        self.sum_card += n
        self.sum_binom_card += pairs
        self.sum_values += total
        if self.track_rank:
            step = self.s + 1
            self.sum_ranks += sum(a // step for a in elems)

    def merge(self, other: CoreTally) -> None:
        self.count += other.count
        self.sum_sizes += other.sum_sizes
        self.max_size = max(self.max_size, other.max_size)
        self.sum_card += other.sum_card
        self.sum_binom_card += other.sum_binom_card
        self.sum_values += other.sum_values
        self.sum_ranks += other.sum_ranks

    def weighted(self, w: WeightFn) -> int:
        if w.c and not self.track_rank:
            raise UnrankedPoset("rank sums were not tracked")
        return w.a * self.sum_values + w.b * self.sum_card + w.c * self.sum_ranks


@dataclass(frozen=True)
class CoreStats:
    s: int
    t: int
    count: int
    sum_sizes: int
    max_size: int

    @property
    def average(self) -> Fraction:
        return Fraction(self.sum_sizes, self.count)

    def to_json(self) -> dict:
        avg = self.average
        return {
            "s": str(self.s),
            "t": str(self.t),
            "count": str(self.count),
            "sum_sizes": str(self.sum_sizes),
            "max_size": str(self.max_size),
            "average": {"numerator": str(avg.numerator), "denominator": str(avg.denominator)},
        }


def _tally(s: int, t: int, track_rank=False, workers=None, cap=DEFAULT_CAP) -> CoreTally:
    poset = build_gap_poset(s, t)
    tally = CoreTally(poset.s, poset.t, track_rank)
    return fold_ideals(poset, tally, workers=workers, cap=cap)


def core_statistics(s: int, t: int, workers: int | None = None, cap: int | None = DEFAULT_CAP) -> CoreStats:
    tally = _tally(s, t, workers=workers, cap=cap)
    return CoreStats(tally.s, tally.t, tally.count, tally.sum_sizes, tally.max_size)


def verify_armstrong(s: int, t: int, workers: int | None = None, cap: int | None = DEFAULT_CAP) -> Check:
    """Compare the brute size sum (``lhs``) with the closed total (``rhs``)."""
    stats = core_statistics(s, t, workers=workers, cap=cap)
    return Check("armstrong", stats.sum_sizes, armstrong_total(stats.s, stats.t), {"s": stats.s, "t": stats.t})


@dataclass(frozen=True)
class StaircaseSums:
    """f_j(sigma), f_j(tau), f_j(rho) and sum of binom(#I, 2) over J(T_j)."""

    f_sigma: int
    f_tau: int
    f_rho: int
    sum_binom_card: int

    @property
    def g_sigma(self) -> int:
        return self.f_sigma - self.sum_binom_card


@lru_cache(maxsize=None)
def staircase_sums(j: int, cap: int | None = DEFAULT_CAP) -> StaircaseSums:
    tally = _tally(j, j + 1, track_rank=True, cap=cap)
    return StaircaseSums(tally.sum_values, tally.sum_card, tally.sum_ranks, tally.sum_binom_card)


def weighted_ideal_sum(s: int, w: WeightFn, cap: int | None = DEFAULT_CAP) -> int:
    """f_s(w): the sum of w over every element of every ideal of T_s."""
    sums = staircase_sums(s, cap)
    return w.a * sums.f_sigma + w.b * sums.f_tau + w.c * sums.f_rho


def g_sigma_brute(s: int, cap: int | None = DEFAULT_CAP) -> int:
    """Total size of all (s, s+1)-cores, by enumeration."""
    return staircase_sums(s, cap).g_sigma


def lemma_st_check(s: int, t: int, cap: int | None = DEFAULT_CAP) -> bool:
    """Every (s,t)-core is also an (s, s+t)-core."""
    poset = build_gap_poset(s, t)
    return all(
        is_st_core(ideal_to_partition(ideal), s, s + t)
        for ideal in enumerate_ideals(poset, cap)
    )


def sum_binom_card(j: int) -> int:
    return staircase_sums(j).sum_binom_card
