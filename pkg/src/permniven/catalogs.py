"""Reference catalogs of PINN digit classes for k = 1..9, kept as data.

The tables below are a hand transcription of the reference catalog this
library reproduces.  They are stored verbatim instead of being regenerated
at import time so that the search has an independent golden to be audited
against: any disagreement between these tables and the search output is a
real finding and surfaces in the test suite, never silently absorbed.

Layout.  Every catalog entry is a zero-free "core" padded with zeros up to
the requested length.  The cores are grouped exactly as the source tables
group them: one group per core length, except length 3 which the tables
split into repdigits and non-repdigits.  A k-digit catalog consists of the
groups whose cores fit in k digits, each core padded with zeros to width k
(the uniform padding makes every entry exactly k digits wide; the one
undersized entry printed in the 4-digit source table, 900, is thereby
completed to 9000).  Cores are written in the run-compressed notation of
the longer tables, in the printed order.
"""
from __future__ import annotations

from functools import lru_cache

from .digits import DigitMultiset, parse_number

__all__ = [
    "GROUP_CORES",
    "GROUP_CORE_LENGTH",
    "NN2_VALUES",
    "catalog_class_set",
    "catalog_groups",
    "group_ids",
]

# Zero-free cores, one tuple per printed group.
GROUP_CORES: tuple[tuple[str, ...], ...] = (
    ("1", "2", "3", "4", "5", "6", "7", "8", "9"),
    ("12", "18", "24", "27", "36", "45", "48"),
    ("1_(3)", "2_(3)", "3_(3)", "4_(3)", "5_(3)", "6_(3)", "7_(3)", "8_(3)",
     "9_(3)"),
    ("117", "126", "135", "144", "225", "234", "288", "468"),
    ("1_(3)6", "1125", "1134", "1224", "1233", "2_(3)3", "2448", "2268",
     "2466", "3699", "4_(3)6", "6_(3)9"),
    ("1_(4)5", "1_(3)24", "1_(3)33", "11223", "12_(4)", "2_(3)48", "2_(3)66",
     "22446", "24_(4)", "3_(3)99", "33669", "36_(4)", "48_(4)"),
    ("1_(5)4", "1_(4)23", "1_(3)2_(3)", "2_(5)8", "2_(4)46", "2_(3)4_(3)",
     "3_(4)69", "3_(3)6_(3)", "4_(3)8_(3)"),
    ("1_(6)3", "1_(5)22", "2_(6)6", "2_(5)44", "3_(6)9", "3_(5)66",
     "4_(5)88"),
    ("1_(7)2", "2_(7)4", "3_(7)6", "4_(7)8"),
    ("1_(9)", "2_(9)", "3_(9)", "4_(9)", "5_(9)", "6_(9)", "7_(9)", "8_(9)",
     "9_(9)"),
)

# Digits per core in each group (cores within a group share their length).
GROUP_CORE_LENGTH: tuple[int, ...] = (1, 2, 3, 3, 4, 5, 6, 7, 8, 9)

# The complete list of 2-digit PINN values, as printed.
NN2_VALUES: tuple[int, ...] = (
    10, 12, 18, 20, 21, 24, 27, 30, 36, 40, 42, 45, 48, 50, 54, 60, 63, 70,
    72, 80, 81, 84, 90,
)


@lru_cache(maxsize=None)
def _core_multisets(group: int) -> tuple[DigitMultiset, ...]:
    return tuple(
        DigitMultiset.from_string(parse_number(core))
        for core in GROUP_CORES[group]
    )


def group_ids(k: int) -> tuple[str, ...]:
    """Group labels for the k-digit catalog: N{k}1, N{k}2, ..."""
    n = sum(1 for length in GROUP_CORE_LENGTH if length <= k)
    return tuple(f"N{k}{i}" for i in range(1, n + 1))


def catalog_groups(k: int) -> list[tuple[str, tuple[DigitMultiset, ...]]]:
    """The k-digit catalog as (group id, padded classes), printed order."""
    if not 1 <= k <= 9:
        raise ValueError(f"catalog covers k = 1..9, got {k}")
    out = []
    i = 0
    for group, length in enumerate(GROUP_CORE_LENGTH):
        if length > k:
            continue
        i += 1
        members = tuple(
            m.with_zeros(k - length) for m in _core_multisets(group)
        )
        out.append((f"N{k}{i}", members))
    return out


def catalog_class_set(k: int) -> frozenset[DigitMultiset]:
    """All k-digit catalog classes as one set."""
    return frozenset(
        m for _, members in catalog_groups(k) for m in members
    )
