from stcores.partition import Partition
from stcores.render import render_hasse, render_young
from stcores.semigroup_poset import build_gap_poset, staircase


def test_young_figure():
    out = render_young(Partition((5, 3, 3, 2))).splitlines()
    assert out == ["8 7 5 2 1", "5 4 2", "4 3 1", "2 1"]


def test_young_trivial():
    assert render_young(Partition(())) == ""
    assert render_young(Partition((1,))) == "1"


def test_young_wide_hooks_align():
    out = render_young(Partition((10, 1))).splitlines()
    assert out[0].split() == ["11", "9", "8", "7", "6", "5", "4", "3", "2", "1"]
    assert out[1] == " 1"


def test_young_boxes():
    out = render_young(Partition((2, 1)), boxes=True)
    assert out == "+---+---+\n| 3 | 1 |\n+---+---+\n| 1 |\n+---+"


def _rows(text):
    return [line.split() for line in text.splitlines()[::2]]


def test_hasse_t5_rows():
    assert _rows(render_hasse(staircase(5))) == [["19"], ["13", "14"], ["7", "8", "9"], ["1", "2", "3", "4"]]


def test_hasse_p35():
    text = render_hasse(build_gap_poset(3, 5))
    assert text.splitlines() == ["   7", "  / \\", " 2   4", "      \\", "       1"]


def test_hasse_trivial():
    assert render_hasse(build_gap_poset(2, 3)).strip() == "1"
    assert render_hasse(staircase(1)) == ""


def test_hasse_edges_count_covers():
    for s, t in [(3, 13), (4, 7), (5, 6)]:
        P = build_gap_poset(s, t)
        text = render_hasse(P)
        edges = sum(text.count(c) for c in "/\\")
        assert edges == sum(len(v) for v in P.covers_down.values())
