"""Closed forms for core-size totals and the Catalan-case ingredient sums.

Every division goes through ``exact_div`` so integrality is checked on each
evaluation rather than assumed.
"""

from .exactnum import binomial, exact_div

__all__ = [
    "armstrong_total",
    "delta_closed",
    "f_closed",
    "g_closed",
    "h_closed",
    "max_core_size",
    "s4_total",
]


def armstrong_total(s: int, t: int) -> int:
    """Conjectured total size of all (s,t)-cores.

    (s+t+1)(s-1)(t-1) / (24(s+t)) * binom(s+t, s)
    """
    return exact_div((s + t + 1) * (s - 1) * (t - 1) * binomial(s + t, s), 24 * (s + t))


def max_core_size(s: int, t: int) -> int:
    return exact_div((s * s - 1) * (t * t - 1), 24)


def g_closed(j: int) -> int:
    """j(j-1)/12 * binom(2j, j): total size of the (j, j+1)-cores."""
    return exact_div(j * (j - 1) * binomial(2 * j, j), 12)


def f_closed(j: int) -> int:
    """(j^2+5j+2)/(8j+4) * binom(2j+2, j+1) - 4^j: rank sum over J(T_j)."""
    return exact_div((j * j + 5 * j + 2) * binomial(2 * j + 2, j + 1), 8 * j + 4) - 4**j


def h_closed(j: int) -> int:
    """2^(2j-1) - binom(2j+1, j) + binom(2j-1, j-1), and 0 at j = 0.

    This is the total cardinality of the ideals of T_j.
    """
    if j == 0:
        return 0
    return 2 ** (2 * j - 1) - binomial(2 * j + 1, j) + binomial(2 * j - 1, j - 1)


def delta_closed(n: int) -> int:
    """Size sum of (3,3n+1)-cores that are not (3,3n-2)-cores.

    Evaluated as the difference of the two conjectured totals, then checked
    against binom(3n+2, 3).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    upper = exact_div((3 * n + 5) * 2 * (3 * n) * binomial(3 * n + 4, 3), 24 * (3 * n + 4))
    lower = exact_div((3 * n + 2) * 2 * (3 * n - 3) * binomial(3 * n + 1, 3), 24 * (3 * n + 1))
    value = upper - lower
    if value != binomial(3 * n + 2, 3):
        raise ArithmeticError(f"delta({n}): {value} != binom({3 * n + 2}, 3)")
    return value


def s4_total(n: int) -> int:
    """(4n+6) binom(n+3, 4): conjectured size sum of the (4, 2n+1)-cores."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return (4 * n + 6) * binomial(n + 3, 4)
