from fractions import Fraction
from itertools import product

import pytest

from stcores.closed_forms import armstrong_total, f_closed, h_closed, max_core_size
from stcores.errors import CapExceeded, NotCoprime, UnrankedPoset
from stcores.statistics import (
    RHO,
    SIGMA,
    TAU,
    CoreTally,
    WeightFn,
    core_statistics,
    g_sigma_brute,
    lemma_st_check,
    staircase_sums,
    verify_armstrong,
    weighted_ideal_sum,
)

# (count, size sum, max size) from filtering all partitions (tests/oracles.py)
CORE_TABLE = {
    (1, 1): (1, 0, 0), (1, 2): (1, 0, 0), (1, 7): (1, 0, 0), (2, 3): (2, 1, 1),
    (2, 5): (3, 4, 3), (3, 4): (5, 10, 5), (3, 5): (7, 21, 8), (2, 7): (4, 10, 6),
    (4, 5): (14, 70, 15), (3, 7): (12, 66, 16), (2, 9): (5, 20, 10), (3, 8): (15, 105, 21),
    (2, 11): (6, 35, 15),
}

# f_s(sigma), f_s(tau), f_s(rho), sum binom(#I, 2) over J(T_s) by subset filtering
STAIRCASE_TABLE = {
    0: (0, 0, 0, 0), 1: (0, 0, 0, 0), 2: (1, 1, 0, 0), 3: (14, 7, 1, 4),
    4: (119, 37, 10, 49), 5: (814, 176, 68, 394), 6: (4930, 794, 392, 2620),
}


@pytest.mark.parametrize("pair,row", CORE_TABLE.items())
def test_core_statistics_match_partition_filter(pair, row):
    stats = core_statistics(*pair)
    assert (stats.count, stats.sum_sizes, stats.max_size) == row


def test_golden_35():
    stats = core_statistics(3, 5)
    assert (stats.count, stats.sum_sizes, stats.max_size, stats.average) == (7, 21, 8, 3)


def test_small_examples():
    assert core_statistics(2, 3).average == Fraction(1, 2)
    stats = core_statistics(5, 6)
    assert (stats.count, stats.sum_sizes, stats.average) == (42, 420, 10)
    assert stats.average * stats.count == stats.sum_sizes


def test_stats_json():
    doc = core_statistics(2, 3).to_json()
    assert doc["average"] == {"numerator": "1", "denominator": "2"}
    assert all(isinstance(v, str) for k, v in doc.items() if k != "average")


def test_errors():
    with pytest.raises(NotCoprime):
        core_statistics(4, 6)
    with pytest.raises(CapExceeded):
        core_statistics(12, 13, cap=10)


@pytest.mark.parametrize("s,t,value", [(3, 5, 21), (3, 10, 231), (4, 5, 70)])
def test_verify_armstrong_examples(s, t, value):
    check = verify_armstrong(s, t)
    assert check.lhs == check.rhs == value and check.equal


@pytest.mark.parametrize("s,row", STAIRCASE_TABLE.items())
def test_staircase_sums_match_subset_filter(s, row):
    sums = staircase_sums(s)
    assert (sums.f_sigma, sums.f_tau, sums.f_rho, sums.sum_binom_card) == row


def test_weighted_examples():
    assert weighted_ideal_sum(3, TAU) == 7
    assert weighted_ideal_sum(4, RHO) == 10
    assert weighted_ideal_sum(1, SIGMA) == 0


@pytest.mark.parametrize("s,expected", [(2, 1), (3, 10), (4, 70), (5, 420)])
def test_g_sigma_brute(s, expected):
    assert g_sigma_brute(s) == expected


def test_weights_evaluate_pointwise():
    w = 2 * SIGMA + 3 * TAU - RHO
    assert w == WeightFn(2, 3, -1)
    # 13 is at rank 2 of T_5
    assert w(5, 13) == 26 + 3 - 2


def test_linearity():
    for s in range(0, 9):
        base = [weighted_ideal_sum(s, w) for w in (SIGMA, TAU, RHO)]
        for a, b, c in product(range(-2, 3), repeat=3):
            assert weighted_ideal_sum(s, WeightFn(a, b, c)) == a * base[0] + b * base[1] + c * base[2]


def test_tau_and_rho_match_closed_forms():
    for s in range(0, 13):
        assert weighted_ideal_sum(s, TAU) == h_closed(s)
        assert weighted_ideal_sum(s, RHO) == f_closed(s)


def test_rank_weight_needs_staircase():
    with pytest.raises(UnrankedPoset):
        CoreTally(3, 5, track_rank=True)
    with pytest.raises(UnrankedPoset):
        CoreTally(3, 5).weighted(RHO)


@pytest.mark.parametrize("s,t", [(3, 4), (3, 5), (2, 3), (4, 7), (5, 6)])
def test_lemma_examples(s, t):
    assert lemma_st_check(s, t)


def test_max_and_count_closed():
    for (s, t), (count, total, biggest) in CORE_TABLE.items():
        assert max_core_size(s, t) == biggest
        assert armstrong_total(s, t) == total
