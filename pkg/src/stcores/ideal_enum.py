"""Order ideals of gap posets.

Enumeration walks the elements in decreasing order.  An element is forced
into the ideal when one of its upper covers is already in, and is otherwise
free; trying "out" before "in" at every free element produces each ideal
exactly once, with no dead branches, in colexicographic order (compare the
decreasingly sorted element lists).  For P_(3,5) this gives the familiar
listing: {}, {1}, {2}, {2,1}, {4,1}, {4,2,1}, {7,4,2,1}.

The J_i decomposition of ideals of T_s also lives here: an ideal whose least
missing rank-0 element is ``i`` splits into {1..i-1}, an ideal of T_(i-1)
sitting above and to the left of ``i``, and an ideal of T_(s-i) to its right.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Protocol

from .errors import CapExceeded, NotAGap
from .exactnum import binomial, catalan, exact_div
from .semigroup_poset import GapPoset, OrderIdeal, build_gap_poset, staircase

__all__ = [
    "DEFAULT_CAP",
    "IdealSplit",
    "OrderIdeal",
    "default_workers",
    "enumerate_ideals",
    "fiber_ideals",
    "fold_ideals",
    "ideal_count",
    "is_order_ideal",
    "iter_ideal_tuples",
    "least_missing_index",
    "reassemble",
    "split_ideal",
]

DEFAULT_CAP = 10**8
THREADS_ENV = "STCORES_THREADS"


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def ideal_count(poset: GapPoset) -> int:
    """Number of order ideals: binom(s+t, s) / (s+t)."""
    s, t = poset.s, poset.t
    return exact_div(binomial(s + t, s), s + t)


def check_cap(poset: GapPoset, cap: int | None = DEFAULT_CAP) -> int:
    expected = ideal_count(poset)
    if cap is not None and expected > cap:
        raise CapExceeded(expected, cap)
    return expected


# -- raw enumeration ---------------------------------------------------------


def _layout(poset: GapPoset):
    desc = poset.gaps[::-1]
    index = {a: k for k, a in enumerate(desc)}
    upper = [tuple(index[b] for b in poset.covers_up[a]) for a in desc]
    return desc, upper


def _odometer(upper, n: int, prefix: tuple[int, ...] = ()) -> Iterator[list[int]]:
    """Yield the 0/1 choice vector of every ideal extending ``prefix``.

    Position k is forced to 1 if any upper cover (an earlier position) is 1.
    The yielded list is reused; copy it if it must outlive the iteration.
    """
    start = len(prefix)
    choice = list(prefix) + [0] * (n - start)
    forced = [False] * n

    def fill(k):
        for j in range(k, n):
            f = False
            for u in upper[j]:
                if choice[u]:
                    f = True
                    break
            forced[j] = f
            choice[j] = 1 if f else 0

    fill(start)
    while True:
        yield choice
        k = n - 1
        while k >= start and (choice[k] or forced[k]):
            k -= 1
        if k < start:
            return
        choice[k] = 1
        fill(k + 1)


def iter_ideal_tuples(
    poset: GapPoset, cap: int | None = DEFAULT_CAP, prefix: tuple[int, ...] = ()
) -> Iterator[tuple[int, ...]]:
    """Stream every ideal as an ascending tuple of gaps, in canonical order.

    ``prefix`` pins the in/out choice of the largest ``len(prefix)`` elements;
    it is how enumeration work is split between processes.
    """
    check_cap(poset, cap)
    desc, upper = _layout(poset)
    asc_positions = range(len(desc) - 1, -1, -1)
    for choice in _odometer(upper, len(desc), prefix):
        yield tuple(desc[k] for k in asc_positions if choice[k])


def _prefixes(poset: GapPoset, depth: int) -> list[tuple[int, ...]]:
    _, upper = _layout(poset)
    return [tuple(c) for c in _odometer(upper[:depth], depth)]


def _split_prefixes(poset: GapPoset, workers: int) -> list[tuple[int, ...]]:
    """Feasible in/out patterns of the largest few elements, ~4 tasks per worker."""
    n = len(poset.gaps)
    depth = 0
    tasks = [()]
    while len(tasks) < 4 * workers and depth < n:
        depth += 1
        tasks = _prefixes(poset, depth)
    return tasks


def _ideal_chunk(args) -> list[tuple[int, ...]]:
    s, t, prefix = args
    return list(iter_ideal_tuples(build_gap_poset(s, t), None, prefix))


def enumerate_ideals(
    poset: GapPoset, cap: int | None = DEFAULT_CAP, workers: int = 1
) -> Iterator[OrderIdeal]:
    """Yield each order ideal of ``poset`` exactly once.

    Raises CapExceeded (carrying the exact expected count) before doing any
    work if the number of ideals is above ``cap``.  The multi-worker path
    splits on prefixes in canonical order and consumes results in task
    order, so the output order is the same as for one worker.
    """
    check_cap(poset, cap)
    s, t = poset.s, poset.t
    if workers <= 1 or len(poset.gaps) < 8:
        for elems in iter_ideal_tuples(poset, None):
            yield OrderIdeal(s, t, elems)
        return
    tasks = [(s, t, p) for p in _split_prefixes(poset, workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for chunk in pool.map(_ideal_chunk, tasks):
            for elems in chunk:
                yield OrderIdeal(s, t, elems)


def is_order_ideal(poset: GapPoset, subset: Iterable[int]) -> bool:
    members = set(subset)
    for a in members:
        poset.check_gap(a)
    return all(b in members for a in members for b in poset.covers_down[a])


# -- aggregation -------------------------------------------------------------


class Tally(Protocol):
    """A commutative monoid fed with ascending ideal tuples."""

    def fresh(self) -> "Tally": ...

    def add(self, elements: tuple[int, ...]) -> None: ...

    def merge(self, other: "Tally") -> None: ...


def _fold_prefix(args):
    s, t, prefix, tally = args
    for elems in iter_ideal_tuples(build_gap_poset(s, t), None, prefix):
        tally.add(elems)
    return tally


def _fold_fiber(args):
    s, i, tally = args
    for elems in _fiber_tuples(s, i):
        tally.add(elems)
    return tally


def fold_ideals(poset: GapPoset, tally, workers: int | None = None, cap: int | None = DEFAULT_CAP):
    """Feed every ideal of ``poset`` into ``tally`` and return it.

    With several workers, T_s is split into its J_i fibers and any other
    poset into prefix patterns of its largest elements; partial tallies are
    merged in task order, which only matters for non-commutative tallies.
    """
    check_cap(poset, cap)
    if workers is None:
        workers = default_workers()
    if workers <= 1 or len(poset.gaps) < 8:
        for elems in iter_ideal_tuples(poset, None):
            tally.add(elems)
        return tally
    if poset.is_staircase:
        tasks = [(poset.s, i, tally.fresh()) for i in range(1, poset.s + 1)]
        worker_fn = _fold_fiber
    else:
        tasks = [(poset.s, poset.t, p, tally.fresh()) for p in _split_prefixes(poset, workers)]
        worker_fn = _fold_prefix
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(worker_fn, tasks):
            tally.merge(part)
    return tally


# -- the J_i decomposition of J(T_s) -----------------------------------------


@dataclass(frozen=True)
class IdealSplit:
    i: int
    left: OrderIdeal  # ideal of T_(i-1)
    right: OrderIdeal  # ideal of T_(s-i)


def _check_staircase_ideal(s: int, ideal) -> tuple[int, ...]:
    elems = tuple(sorted(ideal))
    poset = staircase(s)
    for a in elems:
        if a not in poset:
            raise NotAGap(a, s, s + 1)
    return elems


def least_missing_index(s: int, ideal) -> int:
    """Least rank-0 element of T_s missing from ``ideal``, or ``s`` if none is."""
    members = set(_check_staircase_ideal(s, ideal))
    for i in range(1, s):
        if i not in members:
            return i
    return s


def _left_embed(s: int, i: int, x: int) -> int:
    """Element x of T_(i-1) to its place in T_s (one rank up, left of i)."""
    r, k = divmod(x, i)
    return (r + 1) * (s + 1) + k


def _right_embed(s: int, i: int, y: int) -> int:
    """Element y of T_(s-i) to its place in T_s (right of i)."""
    r, k = divmod(y, s - i + 1)
    return r * (s + 1) + k + i


def split_ideal(s: int, ideal) -> IdealSplit:
    elems = _check_staircase_ideal(s, ideal)
    if not is_order_ideal(staircase(s), elems):
        raise ValueError(f"{elems} is not an order ideal of T_{s}")
    i = least_missing_index(s, elems)
    left, right = [], []
    for a in elems:
        r, k = divmod(a, s + 1)
        if k >= i + 1:
            right.append(r * (s - i + 1) + (k - i))
        elif r >= 1 and k + r <= i - 1:
            left.append((r - 1) * i + k)
        elif not (r == 0 and k < i):  # pragma: no cover - excluded by ideal-ness
            raise AssertionError(f"{a} lies above the missing element {i} of T_{s}")
    return IdealSplit(
        i,
        OrderIdeal(i - 1, i, tuple(sorted(left))),
        OrderIdeal(s - i, s - i + 1, tuple(sorted(right))),
    )


def reassemble(s: int, split: IdealSplit) -> OrderIdeal:
    i = split.i
    elems = list(range(1, i))
    elems.extend(_left_embed(s, i, x) for x in split.left)
    elems.extend(_right_embed(s, i, y) for y in split.right)
    return OrderIdeal(s, s + 1, tuple(sorted(elems)))


def _fiber_tuples(s: int, i: int) -> Iterator[tuple[int, ...]]:
    base = list(range(1, i))
    lefts = [
        [_left_embed(s, i, x) for x in e] for e in iter_ideal_tuples(staircase(i - 1), None)
    ]
    rights = [
        [_right_embed(s, i, y) for y in e] for e in iter_ideal_tuples(staircase(s - i), None)
    ]
    for left in lefts:
        head = base + left
        for right in rights:
            yield tuple(sorted(head + right))


def fiber_ideals(s: int, i: int) -> Iterator[OrderIdeal]:
    """Ideals of T_s with least missing index ``i``, built as a product.

    There are exactly C_(i-1) * C_(s-i) of them.
    """
    if not 1 <= i <= s:
        raise ValueError(f"fiber index must lie in 1..{s}, got {i}")
    for elems in _fiber_tuples(s, i):
        yield OrderIdeal(s, s + 1, elems)


def fiber_size(s: int, i: int) -> int:
    return catalan(i - 1) * catalan(s - i)
