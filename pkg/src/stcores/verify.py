"""Verification sweeps behind ``stcores verify``.

Each function returns a ``Report``; nothing here raises on a mismatch.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterator

from .anderson import core_size_of_ideal, ideal_to_partition, partition_to_ideal
from .closed_forms import armstrong_total, f_closed, g_closed, h_closed, max_core_size
from .exactnum import binomial, catalan
from .identities import (
    check_s4_recurrence,
    check_wz1,
    check_wz2,
    delta_closed,
    delta_enum,
    delta_families,
    f_rho_dp,
    g_sigma_dp,
    m_term,
    subtracted_term,
)
from .ideal_enum import (
    DEFAULT_CAP,
    enumerate_ideals,
    ideal_count,
    least_missing_index,
    reassemble,
    split_ideal,
)
from .partition import is_st_core
from .report import Check, Report
from .semigroup_poset import build_gap_poset, staircase
from .statistics import RHO, SIGMA, TAU, core_statistics, g_sigma_brute, weighted_ideal_sum

__all__ = [
    "armstrong_checks",
    "bijection_checks",
    "catalan_checks",
    "coprime_pairs",
    "decomposition_checks",
    "delta_checks",
    "identity_checks",
    "lemma_checks",
    "s4_checks",
    "weight_transfer_sides",
]


def coprime_pairs(max_sum: int) -> Iterator[tuple[int, int]]:
    """Coprime pairs 1 <= s <= t with s + t <= max_sum."""
    for total in range(2, max_sum + 1):
        for s in range(1, total // 2 + 1):
            t = total - s
            if gcd(s, t) == 1:
                yield s, t


def armstrong_checks(pairs, workers=None, cap=DEFAULT_CAP) -> Report:
    """Size sum, count and maximum size of the (s,t)-cores against closed forms."""
    report = Report()
    for s, t in pairs:
        stats = core_statistics(s, t, workers=workers, cap=cap)
        params = {"s": stats.s, "t": stats.t}
        report.append(Check("armstrong", stats.sum_sizes, armstrong_total(s, t), params))
        report.append(Check("core-count", stats.count, ideal_count(build_gap_poset(s, t)), params))
        report.append(Check("max-size", stats.max_size, max_core_size(s, t), params))
    return report


def catalan_checks(max_s: int, ratio_max: int = 100, cap=DEFAULT_CAP) -> Report:
    report = Report()
    for s in range(2, max_s + 1):
        report.append(Check("g-brute", g_sigma_brute(s, cap), g_closed(s), {"s": s}))
        report.append(Check("g-dp", g_sigma_dp(s), g_closed(s), {"s": s}))
    for s in range(1, ratio_max + 1):
        report.append(
            Check("average-size", Fraction(g_closed(s), catalan(s)), Fraction(binomial(s + 1, 3), 2), {"s": s})
        )
    return report


def identity_checks(max_s: int, brute_max: int = 10, dp_max: int | None = None, cap=DEFAULT_CAP) -> Report:
    """wz1/wz2, DP-vs-closed, and brute-vs-closed for the tau and rho sums."""
    report = Report()
    report.extend(check_wz1(max_s))
    report.extend(check_wz2(max_s))
    for s in range(0, (max_s if dp_max is None else dp_max) + 1):
        report.append(Check("f-rho-dp", f_rho_dp(s), f_closed(s), {"s": s}))
        report.append(Check("g-sigma-dp", g_sigma_dp(s), g_closed(s), {"s": s}))
    for s in range(0, brute_max + 1):
        report.append(Check("h-brute", weighted_ideal_sum(s, TAU, cap), h_closed(s), {"s": s}))
        report.append(Check("f-brute", weighted_ideal_sum(s, RHO, cap), f_closed(s), {"s": s}))
    return report


def weight_transfer_sides(s: int, ideal) -> tuple[int, int]:
    """Element sum of an ideal of T_s, directly and via its J_i split.

    Over the left piece (an ideal of T_(i-1)) the weight is
    sigma + (s+1) tau + (s-i+1) rho; over the right piece (an ideal of
    T_(s-i)) it is sigma + i tau + i rho; binom(i, 2) accounts for 1..i-1.
    """
    split = split_ideal(s, ideal)
    i = split.i
    w_left = SIGMA + (s + 1) * TAU + (s - i + 1) * RHO
    w_right = SIGMA + i * TAU + i * RHO
    moved = (
        sum(w_left(i - 1, a) for a in split.left)
        + sum(w_right(s - i, a) for a in split.right)
        + binomial(i, 2)
    )
    return sum(ideal), moved


def decomposition_checks(max_s: int, fiber_max: int | None = None, cap=DEFAULT_CAP) -> Report:
    """Round trips, weight transfer and fiber sizes of the J_i split of J(T_s).

    Per-ideal properties are reported as "number of ideals satisfying it"
    against C_s.
    """
    report = Report()
    for s in range(1, max_s + 1):
        ideals = list(enumerate_ideals(staircase(s), cap))
        round_trips = sum(1 for I in ideals if reassemble(s, split_ideal(s, I)) == I)
        transfers = 0
        fibers = [0] * (s + 1)
        for I in ideals:
            direct, moved = weight_transfer_sides(s, I)
            transfers += direct == moved
            fibers[least_missing_index(s, I)] += 1
        report.append(Check("split-round-trip", round_trips, catalan(s), {"s": s}))
        report.append(Check("weight-transfer", transfers, catalan(s), {"s": s}))
        for i in range(1, s + 1):
            report.append(Check("fiber-size", fibers[i], catalan(i - 1) * catalan(s - i), {"s": s, "i": i}))
    top = max_s if fiber_max is None else fiber_max
    for s in range(2, top + 1):
        contributions = sum(m_term(i, s, cap) - subtracted_term(i, s, cap) for i in range(1, s + 1))
        report.append(Check("fiber-contributions", contributions, g_closed(s), {"s": s}))
    return report


def delta_checks(max_n: int, cap=DEFAULT_CAP) -> Report:
    report = Report()
    for n in range(1, max_n + 1):
        closed = delta_closed(n)
        report.append(Check("delta-families", delta_families(n), closed, {"n": n}))
        report.append(Check("delta-enum", delta_enum(n, cap), closed, {"n": n}))
    return report


def s4_checks(max_n: int, brute_max: int = 4) -> Report:
    return check_s4_recurrence(max_n, brute_max)


def lemma_checks(max_sum: int, cap=DEFAULT_CAP) -> Report:
    """(s,t)-cores are (s,s+t)-cores: number passing against the core count."""
    report = Report()
    for s, t in coprime_pairs(max_sum):
        poset = build_gap_poset(s, t)
        passing = sum(
            1 for I in enumerate_ideals(poset, cap) if is_st_core(ideal_to_partition(I), s, s + t)
        )
        report.append(Check("lemma-st", passing, ideal_count(poset), {"s": s, "t": t}))
    return report


def bijection_checks(max_sum: int, cap=DEFAULT_CAP) -> Report:
    """Both-direction round trips and core membership of every image."""
    report = Report()
    for s, t in coprime_pairs(max_sum):
        poset = build_gap_poset(s, t)
        count = ideal_count(poset)
        good_images = round_trips = sizes = 0
        for I in enumerate_ideals(poset, cap):
            core = ideal_to_partition(I)
            good_images += is_st_core(core, s, t)
            back = partition_to_ideal(core, s, t)
            round_trips += back == I and ideal_to_partition(back) == core
            sizes += core_size_of_ideal(I) == core.size
        params = {"s": s, "t": t}
        report.append(Check("image-is-core", good_images, count, params))
        report.append(Check("round-trip", round_trips, count, params))
        report.append(Check("size-shortcut", sizes, count, params))
    return report
