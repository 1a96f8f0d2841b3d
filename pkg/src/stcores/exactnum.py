"""Exact integer and rational primitives.

Integers are plain Python ``int`` (arbitrary precision) and ratios are
``fractions.Fraction``, which is always kept in lowest terms with a positive
denominator.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DivisibilityError

ExactInt = int
ExactRatio = Fraction

__all__ = ["ExactInt", "ExactRatio", "binomial", "catalan", "exact_div", "ratio"]


def exact_div(a: int, b: int) -> int:
    """Return ``a // b``, raising DivisibilityError unless ``b`` divides ``a``."""
    if b == 0:
        raise ZeroDivisionError("exact_div by zero")
    q, r = divmod(a, b)
    if r:
        raise DivisibilityError(a, b)
    return q


@lru_cache(maxsize=65536)
def binomial(n: int, k: int) -> int:
    """n choose k, with 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"catalan needs n >= 0, got {n}")
    return exact_div(binomial(2 * n, n), n + 1)


def ratio(p: int, q: int) -> Fraction:
    return Fraction(p, q)
