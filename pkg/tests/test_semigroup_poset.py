import json
from math import gcd

import pytest

from stcores.errors import NotAGap, NotCoprime, UnrankedPoset
from stcores.semigroup_poset import (
    build_gap_poset,
    frobenius,
    grid_coordinates,
    principal_ideal,
    rank_in_Ts,
    require_staircase,
    staircase,
    staircase_coord,
    staircase_value,
)

from oracles import gaps_by_definition


def test_p35():
    P = build_gap_poset(3, 5)
    assert P.gaps == (1, 2, 4, 7)
    assert set(P.covers_down[7]) == {4, 2}
    assert P.covers_down[4] == (1,)
    assert P.covers_down[1] == () and P.covers_down[2] == ()
    assert P.minimal_elements() == [1, 2]


def test_p3_13():
    assert build_gap_poset(3, 13).gaps == (1, 2, 4, 5, 7, 8, 10, 11, 14, 17, 20, 23)


def test_order_normalized():
    P = build_gap_poset(5, 3)
    assert (P.s, P.t) == (3, 5)


@pytest.mark.parametrize("s,t", [(2, 4), (6, 9), (0, 0)])
def test_not_coprime(s, t):
    with pytest.raises((NotCoprime, ValueError)):
        build_gap_poset(s, t)
    if (s, t) != (0, 0):
        with pytest.raises(NotCoprime):
            frobenius(s, t)


def test_empty_posets():
    assert build_gap_poset(1, 7).gaps == ()
    assert staircase(0).gaps == () and staircase(1).gaps == ()
    assert build_gap_poset(1, 1).gaps == ()


@pytest.mark.parametrize("s,t,expected", [(3, 5, 7), (2, 3, 1), (5, 6, 19)])
def test_frobenius(s, t, expected):
    assert frobenius(s, t) == expected


def test_gap_count_and_frobenius_sweep():
    for total in range(2, 31):
        for s in range(1, total):
            t = total - s
            if gcd(s, t) != 1:
                continue
            P = build_gap_poset(s, t)
            assert len(P.gaps) == (s - 1) * (t - 1) // 2
            assert list(P.gaps) == gaps_by_definition(s, t)
            if P.gaps:
                assert max(P.gaps) == frobenius(s, t)
            for a in P.gaps:
                for b in P.covers_down[a]:
                    assert a - b in (P.s, P.t)
                for d in (P.s, P.t):
                    # gaps are closed under stepping down inside the positives
                    if a - d >= 1 and (a - d) in gaps_by_definition(s, t):
                        assert a - d in P.covers_down[a]


@pytest.mark.parametrize("s,a,rank", [(5, 7, 1), (5, 4, 0), (5, 19, 3), (5, 13, 2)])
def test_rank_in_Ts(s, a, rank):
    assert rank_in_Ts(s, a) == rank


def test_rank_rejects_non_gap():
    with pytest.raises(NotAGap):
        rank_in_Ts(5, 5)
    with pytest.raises(NotAGap):
        rank_in_Ts(5, 12)


def test_staircase_coordinates_biject_onto_gaps():
    for s in range(2, 51):
        T = staircase(s)
        coords = {
            (r, k): staircase_value(s, r, k) for r in range(s - 1) for k in range(1, s - r)
        }
        assert sorted(coords.values()) == list(T.gaps)
        for (r, k), v in coords.items():
            assert staircase_coord(s, v) == (r, k)
            expected = set()
            if r >= 1:
                expected = {coords[(r - 1, k)], coords[(r - 1, k + 1)]}
            assert set(T.covers_down[v]) == expected
        assert max(T.gaps) == staircase_value(s, s - 2, 1)


def test_staircase_value_bounds():
    with pytest.raises(ValueError):
        staircase_value(5, 0, 5)


def test_grid_coordinates():
    P = build_gap_poset(3, 5)
    coords = grid_coordinates(P)
    assert coords[7] == (1, 1)
    for a, (alpha, beta) in coords.items():
        assert a == 15 - 3 * alpha - 5 * beta


def test_principal_ideal():
    assert principal_ideal(build_gap_poset(3, 7), {11}).elements == (1, 2, 4, 5, 8, 11)
    assert principal_ideal(build_gap_poset(3, 5), {4}).elements == (1, 4)
    assert principal_ideal(build_gap_poset(3, 5), set()).elements == ()
    with pytest.raises(NotAGap):
        principal_ideal(build_gap_poset(3, 5), {3})


def test_json_form():
    doc = json.loads(json.dumps(build_gap_poset(3, 5).to_json()))
    assert doc == {"s": "3", "t": "5", "gaps": ["1", "2", "4", "7"],
                   "covers": {"1": [], "2": [], "4": ["1"], "7": ["4", "2"]}}


def test_require_staircase():
    require_staircase(staircase(4))
    with pytest.raises(UnrankedPoset):
        require_staircase(build_gap_poset(3, 5))
