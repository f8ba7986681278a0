"""Cycle matroids of graphs, their truncations, and GF(2) cycle-space membership."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .edgesets import bits, sort_labels, to_mask
from .errors import DomainError, PreconditionError
from .graph import LabeledGraph, forest_masks, is_connected, quasi_hamiltonian_cycles, small_cycles, spanning_forests
from .matroid import Matroid, truncate


def cycle_matroid(G: LabeledGraph) -> Matroid:
    """``M(G)``: ground set ``E(G)``, bases the maximal forests."""
    if G.m == 0:
        raise DomainError("the cycle matroid needs a non-empty edge set")
    cached = G._cache.get("M")
    if cached is None:
        cached = G._cache["M"] = Matroid.from_masks(G.labels, forest_masks(G))
    return cached


def truncated_cycle_matroid(G: LabeledGraph) -> Matroid:
    """``M_t(G)``; for connected ``G`` the bases are maximal two-component forests."""
    cached = G._cache.get("Mt")
    if cached is None:
        M = cycle_matroid(G)
        if M.rank == 0:
            raise DomainError("cycle matroid has rank 0")
        cached = G._cache["Mt"] = truncate(M)
    return cached


@dataclass(frozen=True)
class TruncatedCircuitDecomposition:
    trees: frozenset
    quasi: frozenset
    small: frozenset

    def union(self) -> frozenset:
        return self.trees | self.quasi | self.small

    def pairwise_disjoint(self) -> bool:
        return not (self.trees & self.quasi or self.trees & self.small or self.quasi & self.small)


def decompose_truncated_circuits(G: LabeledGraph) -> TruncatedCircuitDecomposition:
    """Split the truncated circuits of a connected simple graph into spanning
    trees, quasi-Hamiltonian cycles and small cycles, each enumerated on the
    graph directly (not from the matroid)."""
    if not is_connected(G):
        raise PreconditionError("graph must be connected")
    if not G.is_simple:
        raise PreconditionError("graph must have no parallel edges")
    return TruncatedCircuitDecomposition(
        trees=frozenset(spanning_forests(G)),
        quasi=frozenset(quasi_hamiltonian_cycles(G)),
        small=frozenset(small_cycles(G)),
    )


def gf2_combination(X: Iterable, family: Iterable[Iterable]):
    """Indices of members of ``family`` whose symmetric difference is ``X``.

    Gaussian elimination over GF(2) on edge-indicator bitmasks, pivoting on
    the lowest edge index first.  Returns ``None`` when ``X`` is outside the
    span.
    """
    family = [frozenset(s) for s in family]
    X = frozenset(X)
    ground = sort_labels(X.union(*family))
    index = {x: i for i, x in enumerate(ground)}
    # each row: (vector, set of family indices combined into it)
    pivots = {}
    for k, s in enumerate(family):
        vec, combo = to_mask(s, index), 1 << k
        while vec:
            low = (vec & -vec).bit_length() - 1
            if low not in pivots:
                pivots[low] = (vec, combo)
                break
            pv, pc = pivots[low]
            vec ^= pv
            combo ^= pc
    target, combo = to_mask(X, index), 0
    while target:
        low = (target & -target).bit_length() - 1
        if low not in pivots:
            return None
        pv, pc = pivots[low]
        target ^= pv
        combo ^= pc
    return sorted(bits(combo))


def in_gf2_span(X: Iterable, family: Iterable[Iterable]) -> bool:
    """True iff ``X`` is the symmetric difference of some subfamily."""
    return gf2_combination(X, family) is not None
