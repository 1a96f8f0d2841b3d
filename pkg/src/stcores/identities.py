"""Recursions and identity checks for the Catalan and (3,t) cases.

The tables here grow on demand.  ``f_rho_dp`` and ``g_sigma_dp`` are the
recursions obtained from the J_i decomposition of J(T_s); they use only
Catalan numbers, earlier table entries and the closed form of f_j(tau), so
agreeing with ``f_closed``/``g_closed`` is a genuine check.

Check functions return a ``Report`` of exact comparisons instead of raising,
so callers (the CLI in particular) can print a full table.
"""

from __future__ import annotations

from typing import Callable

from .anderson import core_size_of_ideal, ideal_to_partition
from .closed_forms import (
    armstrong_total,
    delta_closed,
    f_closed,
    g_closed,
    h_closed,
    s4_total,
)
from .exactnum import binomial, catalan
from .ideal_enum import DEFAULT_CAP, enumerate_ideals
from .partition import is_st_core
from .report import Check, Report
from .semigroup_poset import build_gap_poset, principal_ideal
from .statistics import core_statistics, staircase_sums

__all__ = [
    "SequenceTable",
    "check_s4_recurrence",
    "check_wz1",
    "check_wz2",
    "delta_closed",
    "delta_enum",
    "delta_families",
    "delta_family_generators",
    "delta_family_sizes",
    "f_closed",
    "f_rho_dp",
    "g_closed",
    "g_sigma_dp",
    "h_closed",
    "m_term",
    "s4_brute",
    "s4_total",
    "subtracted_term",
]


class SequenceTable:
    """A memoized integer sequence indexed from 0.

    ``rule(table, n)`` may read ``table[k]`` for any k < n; entries are filled
    in order, so a recursion never recurses in Python.
    """

    def __init__(self, name: str, rule: Callable[["SequenceTable", int], int]):
        self.name = name
        self.rule = rule
        self.values: list[int] = []

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise IndexError(f"{self.name}[{n}]")
        while len(self.values) <= n:
            self.values.append(self.rule(self, len(self.values)))
        return self.values[n]

    def __repr__(self):
        return f"SequenceTable({self.name!r}, {len(self.values)} entries)"


C = SequenceTable("C", lambda _, n: catalan(n))
G = SequenceTable("g", lambda _, n: g_closed(n))
F = SequenceTable("f", lambda _, n: f_closed(n))
H = SequenceTable("h", lambda _, n: h_closed(n))


def _f_rho_rule(tab, s):
    return sum(C[s - i] * (2 * tab[i - 1] + H[i - 1]) for i in range(1, s + 1))


def _g_sigma_rule(tab, s):
    total = 0
    for i in range(1, s + 1):
        c = C[s - i]
        total += (
            2 * c * tab[i - 1]
            + 2 * (s - i + 1) * c * F_RHO[i - 1]
            + (s - i + 3) * c * H[i - 1]
            + (i - 1) * c * C[i - 1]
            - H[i - 1] * H[s - i]
        )
    return total


F_RHO = SequenceTable("f_rho_dp", _f_rho_rule)
G_SIGMA = SequenceTable("g_sigma_dp", _g_sigma_rule)
S4 = SequenceTable("S", lambda _, n: s4_total(n))


def f_rho_dp(s: int) -> int:
    """Rank sum over J(T_s) from f_s = sum_i C_(s-i) (2 f_(i-1) + f_(i-1)(tau))."""
    return F_RHO[s]


def g_sigma_dp(s: int) -> int:
    """Total size of the (s,s+1)-cores from the J_i recursion."""
    return G_SIGMA[s]


# -- Lemma identities --------------------------------------------------------


def _wz1_rhs(s: int) -> int:
    return sum(C[s - i] * (2 * F[i - 1] + H[i - 1]) for i in range(1, s + 1))


def _wz2_term(s: int, i: int) -> int:
    c = C[s - i]
    return (
        2 * c * G[i - 1]
        + 2 * (s - i + 1) * c * F[i - 1]
        + (s - i + 3) * c * H[i - 1]
        + (i - 1) * c * C[i - 1]
        - H[s - i] * H[i - 1]
    )


def _wz2_rhs(s: int) -> int:
    return sum(_wz2_term(s, i) for i in range(1, s + 1))


def _wz2_rhs_split(s: int) -> int:
    """The same sum grouped as i = 2..s-1 plus an explicit i = s term."""
    middle = sum(_wz2_term(s, i) for i in range(2, s))
    last = 2 * C[0] * G[s - 1] + 2 * C[0] * F[s - 1] + 3 * C[0] * H[s - 1] + (s - 1) * C[0] * C[s - 1]
    return middle + last


def check_wz1(s_max: int) -> Report:
    """f_s = sum_{i=1}^s C_(s-i) (2 f_(i-1) + h_(i-1)) for 1 <= s <= s_max."""
    report = Report()
    for s in range(1, s_max + 1):
        report.append(Check("wz1", F[s], _wz1_rhs(s), {"s": s}))
        grouped = sum(C[s - i] * (2 * F[i - 1] + H[i - 1]) for i in range(2, s + 1))
        report.append(Check("wz1-grouped", F[s], grouped, {"s": s}))
    return report


def check_wz2(s_max: int) -> Report:
    report = Report()
    for s in range(1, s_max + 1):
        report.append(Check("wz2", G[s], _wz2_rhs(s), {"s": s}))
        if s >= 2:
            report.append(Check("wz2-grouped", G[s], _wz2_rhs_split(s), {"s": s}))
    return report


# -- the contribution of a single fiber J_i(T_s) -----------------------------


def m_term(i: int, s: int, cap: int | None = DEFAULT_CAP) -> int:
    """Weighted element sum contributed by the fiber J_i(T_s).

    The f_j(sigma), f_j(tau), f_j(rho) ingredients come from enumerating the
    smaller staircases T_(i-1) and T_(s-i).
    """
    if not 1 <= i <= s:
        raise ValueError(f"need 1 <= i <= s, got i={i}, s={s}")
    left = staircase_sums(i - 1, cap)
    right = staircase_sums(s - i, cap)
    return (
        C[s - i] * (left.f_sigma + (s + 1) * left.f_tau + (s - i + 1) * left.f_rho)
        + C[s - i] * C[i - 1] * binomial(i, 2)
        + C[i - 1] * (right.f_sigma + i * right.f_tau + i * right.f_rho)
    )


def subtracted_term(i: int, s: int, cap: int | None = DEFAULT_CAP) -> int:
    """Sum of binom(#I1 + #I2 + i - 1, 2) over the fiber J_i(T_s).

    Uses the expansion of that binomial; the cardinality sums over J(T_j) are
    h_j and the binom(#I, 2) sums come from enumeration.
    """
    if not 1 <= i <= s:
        raise ValueError(f"need 1 <= i <= s, got i={i}, s={s}")
    b_left = staircase_sums(i - 1, cap).sum_binom_card
    b_right = staircase_sums(s - i, cap).sum_binom_card
    h_left, h_right = H[i - 1], H[s - i]
    return (
        C[s - i] * (b_left + (i - 1) * h_left)
        + C[i - 1] * (b_right + (i - 1) * h_right)
        + h_left * h_right
        + C[s - i] * C[i - 1] * binomial(i - 1, 2)
    )


# -- the (3, t) case ---------------------------------------------------------


def delta_family_generators(n: int) -> list[tuple[int, ...]]:
    """Generators of the ideals of P_(3,3n+1) that are not ideals of P_(3,3n-2).

    The n+2 principal ideals of 3n-1, 3n+2, ..., 6n-1 and 3n-2, then the
    2n-1 ideals generated by {3k+2, 3n-2} for 3k+2 = 2, 5, ..., 6n-4.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    principal = [(a,) for a in range(3 * n - 1, 6 * n, 3)] + [(3 * n - 2,)]
    paired = [(a, 3 * n - 2) for a in range(2, 6 * n - 3, 3)]
    return principal + paired


def delta_family_sizes(n: int) -> list[int]:
    poset = build_gap_poset(3, 3 * n + 1)
    return [core_size_of_ideal(principal_ideal(poset, gens)) for gens in delta_family_generators(n)]


def delta_families(n: int) -> int:
    return sum(delta_family_sizes(n))


def delta_enum(n: int, cap: int | None = DEFAULT_CAP) -> int:
    """Size sum of the (3,3n+1)-cores that are not (3,3n-2)-cores, by enumeration."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = 0
    for ideal in enumerate_ideals(build_gap_poset(3, 3 * n + 1), cap):
        core = ideal_to_partition(ideal)
        if not is_st_core(core, 3, 3 * n - 2):
            total += core.size
    return total


# -- s = 4 -------------------------------------------------------------------


def s4_brute(n: int, cap: int | None = DEFAULT_CAP) -> int:
    return core_statistics(4, 2 * n + 1, cap=cap).sum_sizes


def check_s4_recurrence(n_max: int, brute_max: int = 0) -> Report:
    """sum_{i=0}^6 (-1)^i binom(6,i) S(n-i) = 0 for 7 <= n <= n_max.

    Also compares S(n) with the closed total for (4, 2n+1), and with the
    enumerated size sum for n <= ``brute_max``.
    """
    report = Report()
    for n in range(7, n_max + 1):
        alt = sum((-1) ** i * binomial(6, i) * S4[n - i] for i in range(7))
        report.append(Check("s4-recurrence", alt, 0, {"n": n}))
    for n in range(0, max(n_max, brute_max) + 1):
        report.append(Check("s4-closed", S4[n], armstrong_total(4, 2 * n + 1), {"n": n}))
    for n in range(0, brute_max + 1):
        report.append(Check("s4-brute", s4_brute(n), S4[n], {"n": n}))
    return report
