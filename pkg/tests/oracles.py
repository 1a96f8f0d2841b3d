"""Brute-force reference computations.

Nothing here imports from stcores: each function goes straight back to the
definitions, slowly, so the tests compare two independent routes.
"""

from itertools import combinations
from math import factorial


def binom_factorial(n, k):
    if k < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def partitions_of(n, largest=None):
    """All partitions of n as weakly decreasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def naive_hooks(parts):
    """Hook lengths by scanning the cell set of the Young diagram."""
    cells = {(i, j) for i, row in enumerate(parts) for j in range(row)}
    grid = []
    for i, row in enumerate(parts):
        line = []
        for j in range(row):
            right = sum(1 for (a, b) in cells if a == i and b > j)
            below = sum(1 for (a, b) in cells if b == j and a > i)
            line.append(1 + right + below)
        grid.append(line)
    return grid


def naive_is_core(parts, s):
    return all(h != s for row in naive_hooks(parts) for h in row)


def gaps_by_definition(s, t):
    """Positive integers that are not a*s + b*t with a, b >= 0."""
    if min(s, t) <= 1:
        return []
    bound = s * t
    rep = {a * s + b * t for a in range(bound // s + 1) for b in range(bound // t + 1)}
    return [n for n in range(1, bound) if n not in rep]


def ideals_by_subsets(s, t):
    """Every downward-closed subset of the gaps, by filtering all subsets."""
    gaps = gaps_by_definition(s, t)
    gap_set = set(gaps)
    found = []
    for r in range(len(gaps) + 1):
        for combo in combinations(gaps, r):
            chosen = set(combo)
            if all(b in chosen for a in chosen for b in (a - s, a - t) if b in gap_set):
                found.append(tuple(sorted(chosen)))
    return found


def cores_by_partitions(s, t, max_size):
    """All (s,t)-cores of size <= max_size, from scratch."""
    return [
        p
        for n in range(max_size + 1)
        for p in partitions_of(n)
        if naive_is_core(p, s) and naive_is_core(p, t)
    ]


def staircase_rank_sum(s, ideals):
    return sum(a // (s + 1) for I in ideals for a in I)
