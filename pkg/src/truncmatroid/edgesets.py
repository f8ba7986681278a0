"""Bit-indexed edge sets.

Edge sets are exposed as ``frozenset`` of labels.  Internally a set over a
fixed, sorted ground tuple is an ``int`` whose bit ``i`` marks ``ground[i]``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable, Iterator, Sequence


def label_key(label):
    # ints and strings can share a ground set; order by type name first
    return (type(label).__name__, label)


def sort_labels(labels: Iterable[Hashable]) -> tuple:
    return tuple(sorted(labels, key=label_key))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(labels: Iterable[Hashable], index: dict) -> int:
    mask = 0
    for x in labels:
        mask |= 1 << index[x]
    return mask


def to_labels(mask: int, ground: Sequence) -> frozenset:
    return frozenset(ground[i] for i in bits(mask))


def sym_diff(*sets: Iterable) -> frozenset:
    """Symmetric difference of any number of label sets."""
    out: frozenset = frozenset()
    for s in sets:
        out = out.symmetric_difference(s)
    return out


def k_subsets(m: int, k: int) -> Iterator[int]:
    """All ``k``-element submasks of ``range(m)`` in lexicographic order."""
    for combo in combinations(range(m), k):
        mask = 0
        for i in combo:
            mask |= 1 << i
        yield mask


def submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def edge_set_key(s: Iterable) -> tuple:
    """Lexicographic key for comparing edge sets by their sorted labels."""
    return tuple(label_key(x) for x in sort_labels(s))
