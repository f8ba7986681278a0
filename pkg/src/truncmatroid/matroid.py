"""Matroids given by an explicit family of bases.

Bases are stored as bitmasks over the sorted ground tuple.  Circuits are
derived on first use (minimal sets contained in no base) and cached.
"""

from __future__ import annotations

import json
from collections import Counter
from math import comb
from typing import Iterable, Iterator

import numpy as np

from .edgesets import bits, edge_set_key, k_subsets, popcount, sort_labels, submasks, to_labels, to_mask
from .errors import ConfigurationError, DomainError

#: verify_axioms refuses ground sets larger than this.
AXIOM_CHECK_MAX_GROUND = 24


class Matroid:
    """A matroid on ``ground`` with the given bases.

    Only equal cardinality of the bases is checked on construction; use
    :func:`verify_axioms` for the exchange property.
    """

    def __init__(self, ground: Iterable, bases: Iterable[Iterable]):
        self._ground = sort_labels(ground)
        if len(set(self._ground)) != len(self._ground):
            raise DomainError("ground set has repeated labels")
        self._index = {x: i for i, x in enumerate(self._ground)}
        masks = set()
        for b in bases:
            b = list(b)
            try:
                mask = to_mask(b, self._index)
            except KeyError as exc:
                raise DomainError(f"base element {exc.args[0]!r} not in the ground set") from None
            if popcount(mask) != len(b):
                raise DomainError(f"base {b!r} repeats an element")
            masks.add(mask)
        self._init_masks(masks)

    @classmethod
    def from_masks(cls, ground: tuple, masks: Iterable[int]) -> "Matroid":
        """Build from bitmasks over an already sorted ``ground`` tuple."""
        self = cls.__new__(cls)
        self._ground = tuple(ground)
        self._index = {x: i for i, x in enumerate(self._ground)}
        self._init_masks(set(masks))
        return self

    def _init_masks(self, masks):
        if not masks:
            raise DomainError("a matroid needs at least one base")
        sizes = {popcount(b) for b in masks}
        if len(sizes) != 1:
            raise DomainError(f"bases have different sizes {sorted(sizes)}")
        self._rank = sizes.pop()
        self._bases = frozenset(masks)
        self._cache = {}

    @property
    def ground(self) -> tuple:
        return self._ground

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def base_masks(self) -> frozenset:
        return self._bases

    @property
    def bases(self) -> frozenset:
        return frozenset(to_labels(b, self._ground) for b in self._bases)

    def mask(self, labels: Iterable) -> int:
        try:
            return to_mask(labels, self._index)
        except KeyError as exc:
            raise DomainError(f"element {exc.args[0]!r} not in the ground set") from None

    def labels_of(self, mask: int) -> frozenset:
        return to_labels(mask, self._ground)

    @property
    def independent_masks(self) -> frozenset:
        cached = self._cache.get("independent")
        if cached is None:
            found = set()
            for b in self._bases:
                found.update(submasks(b))
            cached = self._cache["independent"] = frozenset(found)
        return cached

    def is_independent(self, labels: Iterable) -> bool:
        return self.mask(labels) in self.independent_masks

    @property
    def circuit_masks(self) -> tuple:
        """Circuit bitmasks sorted by (size, mask)."""
        cached = self._cache.get("circuits")
        if cached is None:
            indep = self.independent_masks
            full = (1 << len(self._ground)) - 1
            found = set()
            for I in indep:
                for e in bits(full & ~I):
                    D = I | 1 << e
                    if D in indep or D in found:
                        continue
                    if all(D & ~(1 << x) in indep for x in bits(I)):
                        found.add(D)
            cached = self._cache["circuits"] = tuple(sorted(found, key=lambda c: (popcount(c), c)))
        return cached

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self._ground == other._ground and self._bases == other._bases

    def __hash__(self):
        return hash((self._ground, self._bases))

    def __repr__(self):
        return f"Matroid(m={len(self._ground)}, rank={self._rank}, bases={len(self._bases)})"


# ---------------------------------------------------------------------------
# circuits and truncation


def circuits(M: Matroid) -> frozenset:
    """All minimal dependent sets."""
    return frozenset(M.labels_of(c) for c in M.circuit_masks)


def hamiltonian_circuits(M: Matroid) -> frozenset:
    """Circuits with one element more than a base."""
    return frozenset(M.labels_of(c) for c in M.circuit_masks if popcount(c) == M.rank + 1)


def truncate(M: Matroid) -> Matroid:
    """Drop one element from every base in every possible way."""
    if M.rank == 0:
        raise DomainError("cannot truncate a rank-0 matroid")
    return Matroid.from_masks(M.ground, {b & ~(1 << x) for b in M.base_masks for x in bits(b)})


def truncation_circuit_masks(M: Matroid) -> frozenset:
    if M.rank == 0:
        raise DomainError("cannot truncate a rank-0 matroid")
    keep = {c for c in M.circuit_masks if popcount(c) != M.rank + 1}
    return frozenset(keep | M.base_masks)


def truncation_circuits(M: Matroid) -> frozenset:
    """Circuits of the truncation read off ``M``: its circuits and bases,
    minus the Hamiltonian circuits."""
    return frozenset(M.labels_of(c) for c in truncation_circuit_masks(M))


def equals(M1: Matroid, M2: Matroid) -> bool:
    """Same ground set and same bases."""
    return M1 == M2


# ---------------------------------------------------------------------------
# uniform matroids


def uniform(k: int, m: int, ground: Iterable | None = None) -> Matroid:
    """``U_{k,m}``: every ``k``-subset is a base.  Ground defaults to ``1..m``."""
    if not 0 <= k <= m:
        raise DomainError(f"uniform matroid needs 0 <= k <= m, got k={k}, m={m}")
    ground = sort_labels(range(1, m + 1) if ground is None else ground)
    if len(ground) != m:
        raise DomainError("ground set size must equal m")
    return Matroid.from_masks(ground, k_subsets(m, k))


def is_uniform(M: Matroid):
    """``(k, m)`` if ``M`` is a uniform matroid ``U_{k,m}``, else ``None``."""
    m = len(M.ground)
    if len(M.base_masks) == comb(m, M.rank):
        return M.rank, m
    return None


# ---------------------------------------------------------------------------
# isomorphism


def _signatures(M: Matroid) -> list:
    """Per element: sorted multiset of sizes of circuits through it."""
    per = [Counter() for _ in M.ground]
    for c in M.circuit_masks:
        size = popcount(c)
        for e in bits(c):
            per[e][size] += 1
    return [tuple(sorted(cnt.items())) for cnt in per]


def _summary(M: Matroid):
    return (
        len(M.ground),
        M.rank,
        len(M.base_masks),
        tuple(sorted(Counter(popcount(c) for c in M.circuit_masks).items())),
    )


def iter_isomorphisms(M1: Matroid, M2: Matroid) -> Iterator[dict]:
    """Yield every bijection ``ground(M1) -> ground(M2)`` carrying circuits onto circuits.

    Candidates are pruned by per-element circuit signatures.  A circuit is
    checked as soon as all its elements are mapped.
    """
    if _summary(M1) != _summary(M2):
        return
    sig1, sig2 = _signatures(M1), _signatures(M2)
    if sorted(sig1) != sorted(sig2):
        return
    m = len(M1.ground)

    order, seen = [], 0
    for c in M1.circuit_masks:
        for e in bits(c):
            if not seen >> e & 1:
                seen |= 1 << e
                order.append(e)
    order += [e for e in range(m) if not seen >> e & 1]
    position = {e: k for k, e in enumerate(order)}
    closing = [[] for _ in range(m)]
    for c in M1.circuit_masks:
        closing[max(position[e] for e in bits(c))].append(tuple(bits(c)))
    targets = set(M2.circuit_masks)
    candidates = [[f for f in range(m) if sig2[f] == sig1[e]] for e in order]

    image = [0] * m

    def extend(k, used):
        if k == m:
            yield {M1.ground[e]: M2.ground[image[e]] for e in range(m)}
            return
        e = order[k]
        for f in candidates[k]:
            if used >> f & 1:
                continue
            image[e] = f
            ok = True
            for c in closing[k]:
                img = 0
                for x in c:
                    img |= 1 << image[x]
                if img not in targets:
                    ok = False
                    break
            if ok:
                yield from extend(k + 1, used | 1 << f)

    yield from extend(0, 0)


def isomorphism(M1: Matroid, M2: Matroid):
    """A base-preserving bijection ``ground(M1) -> ground(M2)``, or ``None``."""
    return next(iter_isomorphisms(M1, M2), None)


def relabel(M: Matroid, mapping: dict) -> Matroid:
    """Image of ``M`` under a bijection of its ground set."""
    ground = sort_labels(mapping[x] for x in M.ground)
    index = {x: i for i, x in enumerate(ground)}
    moved = [1 << index[mapping[x]] for x in M.ground]
    return Matroid.from_masks(ground, {sum(moved[e] for e in bits(b)) for b in M.base_masks})


# ---------------------------------------------------------------------------
# axioms


def verify_axioms(M: Matroid, max_ground: int = AXIOM_CHECK_MAX_GROUND) -> bool:
    """Exhaustively check equal base sizes and the base exchange property.

    For every base ``B1``, element ``x`` of ``B1`` and base ``B2`` avoiding
    ``x``, some ``y`` in ``B2 - B1`` must make ``B1 - x + y`` a base.
    """
    m = len(M.ground)
    if m > max_ground:
        raise ConfigurationError(f"ground set of size {m} exceeds the axiom-check bound {max_ground}")
    bases = M.base_masks
    if not bases or len({popcount(b) for b in bases}) != 1:
        return False
    arr = np.fromiter(bases, dtype=np.int64, count=len(bases))
    for b1 in bases:
        outside = [y for y in range(m) if not b1 >> y & 1]
        for x in bits(b1):
            rest = b1 & ~(1 << x)
            ok_y = 0
            for y in outside:
                if rest | 1 << y in bases:
                    ok_y |= 1 << y
            # B2 must avoid x; then B2 - B1 has to meet ok_y
            avoid = (arr >> x) & 1 == 0
            if np.any(avoid & ((arr & ~b1 & ok_y) == 0)):
                return False
    return True


# ---------------------------------------------------------------------------
# JSON


def to_dict(M: Matroid) -> dict:
    bases = sorted((sort_labels(M.labels_of(b)) for b in M.base_masks), key=edge_set_key)
    return {
        "ground": list(M.ground),
        "rank": M.rank,
        "bases": [list(b) for b in bases],
        "circuits": circuit_family_sorted(circuits(M)),
    }


def to_json(M: Matroid) -> str:
    return json.dumps(to_dict(M))


def from_json(text: str) -> Matroid:
    data = json.loads(text)
    return Matroid(data["ground"], data["bases"])


def circuit_family_sorted(family: Iterable[Iterable]) -> list:
    """Deterministic listing of a family of edge sets."""
    return [list(sort_labels(s)) for s in sorted(family, key=lambda s: (len(s), edge_set_key(s)))]


__all__ = [
    "Matroid",
    "circuits",
    "hamiltonian_circuits",
    "truncate",
    "truncation_circuits",
    "equals",
    "uniform",
    "is_uniform",
    "isomorphism",
    "iter_isomorphisms",
    "relabel",
    "verify_axioms",
    "to_dict",
    "to_json",
    "from_json",
]
