from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from stcores.errors import DivisibilityError
from stcores.exactnum import binomial, catalan, exact_div

from oracles import binom_factorial


@pytest.mark.parametrize("n,k,expected", [(8, 3, 56), (5, 0, 1), (10, 5, 252), (4, 7, 0), (4, -1, 0)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_matches_factorials():
    for n in range(60):
        for k in range(-2, n + 3):
            assert binomial(n, k) == binom_factorial(n, k)


def test_pascal_rule():
    for n in range(1, 201):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


@pytest.mark.parametrize("n,expected", [(0, 1), (4, 14), (5, 42), (12, 208012)])
def test_catalan_examples(n, expected):
    assert catalan(n) == expected


def test_catalan_times_n_plus_one():
    for n in range(2001):
        assert catalan(n) * (n + 1) == binomial(2 * n, n)


def test_exact_div():
    assert exact_div(420, 12) == 35
    assert exact_div(56, 8) == 7
    assert exact_div(-56, 8) == -7
    with pytest.raises(DivisibilityError):
        exact_div(7, 2)
    with pytest.raises(ZeroDivisionError):
        exact_div(1, 0)


def test_exact_div_is_exact_for_huge_operands():
    big = 10**400 + 7
    assert exact_div(big * (3**300), 3**300) == big


@given(st.integers(-10**30, 10**30), st.integers(1, 10**12))
def test_ratio_round_trip(p, q):
    r = Fraction(p, q)
    assert r.denominator > 0
    assert r * q == p
