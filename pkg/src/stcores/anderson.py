"""Anderson's bijection between order ideals of P_(s,t) and (s,t)-cores.

The forward map sends an ideal a_1 > ... > a_j to the partition with parts
a_k - (j - k).  The inverse reads the first-column hook lengths of the core;
it is written independently of the forward map so round trips test both.
"""

from __future__ import annotations

from typing import Iterable

from .errors import InternalBijectionError, NotACore
from .exactnum import binomial
from .ideal_enum import is_order_ideal
from .partition import Partition, first_column_hooks, is_st_core
from .semigroup_poset import OrderIdeal, build_gap_poset

__all__ = ["core_size_of_ideal", "ideal_to_partition", "partition_to_ideal"]


def ideal_to_partition(ideal: OrderIdeal | Iterable[int]) -> Partition:
    desc = sorted(ideal, reverse=True)
    j = len(desc)
    return Partition(tuple(a - (j - 1 - k) for k, a in enumerate(desc)))


def partition_to_ideal(p: Partition | Iterable[int], s: int, t: int) -> OrderIdeal:
    if not isinstance(p, Partition):
        p = Partition(tuple(p))
    if not is_st_core(p, s, t):
        raise NotACore(f"{p} is not a ({s},{t})-core")
    poset = build_gap_poset(s, t)
    hooks = first_column_hooks(p)
    if any(h not in poset for h in hooks) or not is_order_ideal(poset, hooks):
        raise InternalBijectionError(f"first-column hooks {hooks} of {p} are not an ideal of P_({s},{t})")
    return OrderIdeal(poset.s, poset.t, tuple(sorted(hooks)))


def core_size_of_ideal(ideal: OrderIdeal | Iterable[int]) -> int:
    """Size of the core matching ``ideal``, without building the partition."""
    elems = tuple(ideal)
    return sum(elems) - binomial(len(elems), 2)
