"""Exact enumeration of simultaneous (s,t)-core partitions.

Cores are built from order ideals of the poset of gaps of the numerical
semigroup <s,t>.  Every aggregate is an exact integer or Fraction, and the
brute-force counts are cross-checked against dynamic-programming recursions
and closed forms.
"""

from .errors import (
    CapExceeded,
    CoreError,
    DivisibilityError,
    InternalBijectionError,
    NotACore,
    NotAGap,
    NotCoprime,
    UnrankedPoset,
)
from .exactnum import binomial, catalan, exact_div
from .partition import Partition
from .semigroup_poset import GapPoset, build_gap_poset, staircase
from .ideal_enum import OrderIdeal, enumerate_ideals
from .anderson import core_size_of_ideal, ideal_to_partition, partition_to_ideal
from .statistics import CoreStats, WeightFn, core_statistics, verify_armstrong

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "CoreError",
    "CoreStats",
    "DivisibilityError",
    "GapPoset",
    "InternalBijectionError",
    "NotACore",
    "NotAGap",
    "NotCoprime",
    "OrderIdeal",
    "Partition",
    "UnrankedPoset",
    "WeightFn",
    "binomial",
    "build_gap_poset",
    "catalan",
    "core_size_of_ideal",
    "core_statistics",
    "enumerate_ideals",
    "exact_div",
    "ideal_to_partition",
    "partition_to_ideal",
    "staircase",
    "verify_armstrong",
]
