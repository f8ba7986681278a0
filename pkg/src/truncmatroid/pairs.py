"""Pairs of graphs with equal truncated cycle matroids but different cycle matroids.

A pair ``(G, F)`` satisfies condition K when both graphs are connected and
simple, share the edge set, have equal truncated cycle matroids and unequal
cycle matroids.  This module finds the witness edge set, reads off the rim /
apex / spoke / chord structure, checks the structural claims and classifies
the pair.  It also carries the graph operations used along the way.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .cycle_matroid import cycle_matroid, gf2_combination, truncated_cycle_matroid
from .edgesets import edge_set_key, label_key, sort_labels
from .errors import DomainError, PreconditionError, TheoremViolation
from .graph import (
    LabeledGraph,
    components,
    connectivity_at_least,
    cycle_masks,
    forest_masks,
    is_connected,
    is_cycle_graph,
    isomorphic,
    quasi_hamiltonian_cycles,
    separates,
    small_cycles,
)
from .matroid import is_uniform

# ---------------------------------------------------------------------------
# condition K


@dataclass(frozen=True)
class ConditionKReport:
    b0_connected: tuple
    b1_simple: tuple
    b2_same_ground: bool
    b3_trunc_equal: bool
    b4_cycle_differ: bool

    @property
    def satisfied(self) -> bool:
        return all(self.b0_connected) and self.satisfied_except_b0

    @property
    def satisfied_except_b0(self) -> bool:
        return all(self.b1_simple) and self.b2_same_ground and self.b3_trunc_equal and self.b4_cycle_differ

    def to_dict(self) -> dict:
        return {
            "b0_connected": list(self.b0_connected),
            "b1_simple": list(self.b1_simple),
            "b2_same_ground": self.b2_same_ground,
            "b3_trunc_equal": self.b3_trunc_equal,
            "b4_cycle_differ": self.b4_cycle_differ,
            "satisfied": self.satisfied,
        }


def check_condition_K(G: LabeledGraph, F: LabeledGraph) -> ConditionKReport:
    same_ground = G.edge_set == F.edge_set
    if G.m == 0 or F.m == 0:
        trunc_equal, differ = False, G.m != F.m or not same_ground
    else:
        MG, MF = cycle_matroid(G), cycle_matroid(F)
        differ = MG != MF
        if MG.rank == 0 or MF.rank == 0:
            trunc_equal = False
        else:
            trunc_equal = truncated_cycle_matroid(G) == truncated_cycle_matroid(F)
    return ConditionKReport(
        b0_connected=(is_connected(G), is_connected(F)),
        b1_simple=(G.is_simple, F.is_simple),
        b2_same_ground=same_ground,
        b3_trunc_equal=trunc_equal,
        b4_cycle_differ=differ,
    )


# ---------------------------------------------------------------------------
# witness


class Orientation(str, enum.Enum):
    QUASI_IN_FIRST = "quasi_in_first"
    QUASI_IN_SECOND = "quasi_in_second"


@dataclass(frozen=True)
class WitnessX:
    """Edge set that is a quasi-Hamiltonian cycle on one side and a spanning
    tree on the other."""

    edges: frozenset
    orientation: Orientation

    def to_dict(self) -> dict:
        return {"edges": list(sort_labels(self.edges)), "orientation": self.orientation.value}


def _witness_candidates(Q: LabeledGraph, T: LabeledGraph):
    trees = set(forest_masks(T))
    for X in quasi_hamiltonian_cycles(Q):
        if T.mask(X) in trees:
            yield X


def find_witness(G: LabeledGraph, F: LabeledGraph) -> WitnessX:
    """Lexicographically least ``X`` over both orientations."""
    report = check_condition_K(G, F)
    if not report.satisfied:
        raise PreconditionError(f"pair does not satisfy condition K: {report.to_dict()}")
    found = [(X, Orientation.QUASI_IN_FIRST) for X in _witness_candidates(G, F)]
    found += [(X, Orientation.QUASI_IN_SECOND) for X in _witness_candidates(F, G)]
    if not found:
        raise TheoremViolation(
            "condition K holds but no witness edge set exists",
            {"G": G.to_dict(), "F": F.to_dict(), "condition_K": report.to_dict()},
        )
    X, side = min(found, key=lambda t: edge_set_key(t[0]))
    return WitnessX(frozenset(X), side)


# ---------------------------------------------------------------------------
# rim structure


@dataclass(frozen=True)
class RimStructure:
    rim: frozenset
    rim_vertices: tuple  # cyclic order around the rim
    apex: object
    spokes: tuple  # (label, rim end-vertex), sorted by label
    chords: tuple

    @property
    def feet(self) -> list:
        return [r for _, r in self.spokes]

    def rim_distance(self, a, b) -> int:
        k = len(self.rim_vertices)
        i, j = self.rim_vertices.index(a), self.rim_vertices.index(b)
        d = abs(i - j)
        return min(d, k - d)

    def on_three_vertex_path(self, vs: Sequence) -> bool:
        """True iff ``vs`` are a rim vertex and its two rim neighbours."""
        k = len(self.rim_vertices)
        want = set(vs)
        for i in range(k):
            trio = {self.rim_vertices[i - 1], self.rim_vertices[i], self.rim_vertices[(i + 1) % k]}
            if trio == want:
                return True
        return False

    def to_dict(self) -> dict:
        return {
            "rim": list(sort_labels(self.rim)),
            "rim_vertices": list(self.rim_vertices),
            "apex": self.apex,
            "spokes": [[x, r] for x, r in self.spokes],
            "chords": list(self.chords),
        }


def _cycle_order(G: LabeledGraph, X) -> tuple:
    nbrs = {}
    for x in X:
        u, v = G.ends(x)
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    start = min(nbrs, key=label_key)
    order, prev, cur = [start], None, start
    while True:
        a, b = sorted(nbrs[cur], key=label_key)
        nxt = a if a != prev else b
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


def rim_structure(G: LabeledGraph, X) -> RimStructure:
    """Classify the edges of ``G`` off the quasi-Hamiltonian cycle ``G[X]``.

    ``X`` may be a :class:`WitnessX` or a plain edge set.
    """
    edges = frozenset(X.edges if isinstance(X, WitnessX) else X)
    mask = G.mask(edges)
    if mask not in cycle_masks(G) or len(edges) != G.n - 1:
        raise DomainError(f"{sort_labels(edges)!r} is not a quasi-Hamiltonian cycle of G")
    order = _cycle_order(G, edges)
    (apex,) = set(G.vertices) - set(order)
    spokes, chords = [], []
    for x in G.labels:
        if x in edges:
            continue
        u, v = G.ends(x)
        if apex in (u, v):
            spokes.append((x, v if u == apex else u))
        else:
            chords.append(x)
    return RimStructure(edges, order, apex, tuple(spokes), tuple(chords))


# ---------------------------------------------------------------------------
# structural claims


@dataclass(frozen=True)
class ClaimCheck:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def verify_structural_claims(G: LabeledGraph, F: LabeledGraph, rs: RimStructure) -> list:
    """Check the witness/rim claims for a condition-K pair whose quasi side is ``G``."""
    small_g, small_f = small_cycles(G), small_cycles(F)
    results = []

    shared = small_g == small_f
    results.append(ClaimCheck("small_cycles_shared", shared, {} if shared else {
        "only_in_G": [list(sort_labels(s)) for s in small_g - small_f],
        "only_in_F": [list(sort_labels(s)) for s in small_f - small_g],
    }))

    combo = gf2_combination(rs.rim, sorted(small_g, key=edge_set_key))
    results.append(ClaimCheck("witness_not_small_cycle_sum", combo is None, {} if combo is None else {
        "small_cycles": [list(sort_labels(s)) for s in sorted(small_g, key=edge_set_key)],
        "combination": combo,
    }))

    results.append(ClaimCheck("no_chords", not rs.chords, {"chords": list(rs.chords)}))

    far = [
        [x1, x2, rs.rim_distance(r1, r2)]
        for (x1, r1), (x2, r2) in combinations(rs.spokes, 2)
        if rs.rim_distance(r1, r2) > 2
    ]
    results.append(ClaimCheck("spoke_feet_within_two", not far, {"far_pairs": far}))

    count = len(rs.spokes)
    ok = 1 <= count <= 3 and (count < 3 or rs.on_three_vertex_path(rs.feet))
    results.append(ClaimCheck("one_to_three_spokes", ok, {"spokes": count, "feet": rs.feet}))
    return results


# ---------------------------------------------------------------------------
# classification


class PairTag(str, enum.Enum):
    ONE_SPOKE = "OneSpoke"
    TWO_SPOKES_ADJACENT = "TwoSpokesAdjacent"
    TWO_SPOKES_DISTANCE_TWO = "TwoSpokesDistanceTwo"
    THREE_SPOKES = "ThreeSpokes"
    DISCONNECTED = "DisconnectedOneEdgePlusCycle"


@dataclass(frozen=True)
class PairClassification:
    """Outcome of :func:`classify_pair` with its certificate.

    ``isomorphism`` maps the first argument onto the second.  ``swapped``
    records that the quasi-Hamiltonian side was the second argument.
    """

    tag: PairTag
    witness: WitnessX | None = None
    rim: RimStructure | None = None
    isomorphism: tuple | None = None
    partner_is_cycle: bool | None = None
    uniform: tuple | None = None
    swapped: bool = False
    claims: tuple = ()
    disconnected: tuple = ()

    def to_dict(self) -> dict:
        out = {"tag": self.tag.value, "swapped": self.swapped}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.rim is not None:
            out["rim"] = self.rim.to_dict()
        if self.isomorphism is not None:
            nu, eps = self.isomorphism
            out["isomorphism"] = {
                "vertices": [[a, nu[a]] for a in sorted(nu, key=label_key)],
                "edges": [[x, eps[x]] for x in sorted(eps, key=label_key)],
            }
        if self.partner_is_cycle is not None:
            out["partner_is_cycle"] = self.partner_is_cycle
        if self.uniform is not None:
            out["uniform"] = list(self.uniform)
        if self.claims:
            out["claims"] = [c.to_dict() for c in self.claims]
        if self.disconnected:
            out["disconnected"] = [list(d) for d in self.disconnected]
        return out


def _dump(G, F, report, **extra) -> dict:
    cert = {"G": G.to_dict(), "F": F.to_dict(), "condition_K": report.to_dict()}
    for key, value in extra.items():
        cert[key] = value.to_dict() if hasattr(value, "to_dict") else value
    return cert


def _one_edge_plus_cycle(H: LabeledGraph) -> bool:
    parts = [c for c in components(H) if len(c) > 1]
    if len(parts) != 2:
        return False
    shapes = []
    for part in parts:
        sub = LabeledGraph({x: H.ends(x) for x in H.labels if H.ends(x)[0] in part})
        shapes.append("edge" if sub.m == 1 else "cycle" if is_cycle_graph(sub) else "other")
    return sorted(shapes) == ["cycle", "edge"]


def _classify_disconnected(G, F, report) -> PairClassification:
    flags = []
    for name, H in (("first", G), ("second", F)):
        if is_connected(H):
            continue
        if not _one_edge_plus_cycle(H):
            raise TheoremViolation(
                f"disconnected {name} graph is not a single edge plus a cycle",
                _dump(G, F, report),
            )
        flags.append((name, len([c for c in components(H) if len(c) > 1])))
    return PairClassification(PairTag.DISCONNECTED, disconnected=tuple(flags))


def classify_pair(G: LabeledGraph, F: LabeledGraph) -> PairClassification:
    """Place a pair into one of the five known shapes.

    Connectivity may fail (then the pair must be a single edge plus a cycle);
    every other part of condition K is required.  Anything that fits no shape
    raises :class:`TheoremViolation` carrying a full certificate.
    """
    report = check_condition_K(G, F)
    if not report.satisfied_except_b0:
        raise PreconditionError(f"pair fails condition K beyond connectivity: {report.to_dict()}")
    if not report.satisfied:
        return _classify_disconnected(G, F, report)

    witness = find_witness(G, F)
    swapped = witness.orientation is Orientation.QUASI_IN_SECOND
    Gq, Ft = (F, G) if swapped else (G, F)
    rs = rim_structure(Gq, witness)
    claims = tuple(verify_structural_claims(Gq, Ft, rs))
    failed = [c for c in claims if not c.passed]
    if failed:
        raise TheoremViolation(
            "structural claims fail: " + ", ".join(c.name for c in failed),
            _dump(G, F, report, witness=witness, rim=rs, claims=[c.to_dict() for c in claims]),
        )

    iso = isomorphic(G, F)
    spokes = len(rs.spokes)
    common = dict(witness=witness, rim=rs, isomorphism=iso, swapped=swapped, claims=claims)

    if spokes == 1:
        partner_cycle = is_cycle_graph(Ft)
        uni = is_uniform(truncated_cycle_matroid(G))
        m = G.m
        if not partner_cycle and iso is None:
            raise TheoremViolation(
                "one spoke, partner neither isomorphic nor a cycle",
                _dump(G, F, report, witness=witness, rim=rs),
            )
        if uni != (m - 2, m):
            raise TheoremViolation(
                f"one spoke but truncated matroid is not U_{{{m - 2},{m}}}",
                _dump(G, F, report, witness=witness, rim=rs, uniform=uni),
            )
        return PairClassification(PairTag.ONE_SPOKE, partner_is_cycle=partner_cycle, uniform=uni, **common)

    if spokes == 2:
        d = rs.rim_distance(*rs.feet)
        tag = PairTag.TWO_SPOKES_ADJACENT if d == 1 else PairTag.TWO_SPOKES_DISTANCE_TWO
    else:
        tag = PairTag.THREE_SPOKES
    if iso is None:
        raise TheoremViolation(f"{tag.value}: graphs are not isomorphic", _dump(G, F, report, witness=witness, rim=rs))
    if not (connectivity_at_least(G, 2) and connectivity_at_least(F, 2)):
        raise TheoremViolation(f"{tag.value}: graphs are not both 2-connected", _dump(G, F, report, witness=witness, rim=rs))
    return PairClassification(tag, **common)


# ---------------------------------------------------------------------------
# graph operations


def whitney_twist(G: LabeledGraph, cut: Sequence, side: Iterable) -> LabeledGraph:
    """Swap the roles of the cut vertices ``u, v`` on the edges joining them to ``side``.

    ``side`` must be made of whole components of ``G - {u, v}`` and must not
    be all of them.  Labels are kept, so the cycle matroid is unchanged.
    """
    u, v = cut
    if u == v or u not in G.vertices or v not in G.vertices:
        raise DomainError(f"cut must be two distinct vertices of G, got {cut!r}")
    if not separates(G, (u, v)):
        raise DomainError(f"{{{u!r}, {v!r}}} does not separate G")
    side = set(side)
    rest = set(G.vertices) - {u, v}
    if not side or not side < rest:
        raise DomainError("side must be a non-empty proper subset of V(G) - {u, v}")
    for a, b in G.incidence.values():
        if (a in side) != (b in side) and not {a, b} & {u, v}:
            raise DomainError("side is not a union of components of G - {u, v}")
    swap = {u: v, v: u}
    out = {}
    for x, (a, b) in G.incidence.items():
        if a in side or b in side:
            a, b = swap.get(a, a), swap.get(b, b)
        out[x] = (a, b)
    return LabeledGraph(out, G.vertices)


def identify_components(H: LabeledGraph, picks: Iterable, new_vertex=None) -> LabeledGraph:
    """Glue the components of ``H`` together at one chosen vertex each.

    ``new_vertex`` names the merged vertex; by default one past the largest
    integer vertex id, or ``"*"`` for non-integer ids.
    """
    comps = components(H)
    if len(comps) < 2:
        raise PreconditionError("H must be disconnected")
    if not H.is_simple:
        raise PreconditionError("H must have no parallel edges")
    if any(len(c) == 1 for c in comps):
        raise PreconditionError("H must have no isolated vertices")
    picks = list(picks)
    hit = []
    for p in picks:
        owner = [i for i, c in enumerate(comps) if p in c]
        if not owner:
            raise DomainError(f"{p!r} is not a vertex of H")
        hit.append(owner[0])
    if sorted(hit) != list(range(len(comps))):
        raise DomainError("picks must name exactly one vertex in each component")
    if new_vertex is None:
        ints = [v for v in H.vertices if isinstance(v, int)]
        new_vertex = max(ints) + 1 if len(ints) == H.n else "*"
    if new_vertex in H.vertices and new_vertex not in picks:
        raise DomainError(f"new vertex {new_vertex!r} already in H")
    glue = {p: new_vertex for p in picks}
    return LabeledGraph({x: (glue.get(a, a), glue.get(b, b)) for x, (a, b) in H.incidence.items()})


def edge_exchange(G: LabeledGraph, e1, e2) -> LabeledGraph:
    """Swap the end-vertex pairs of two edges."""
    for e in (e1, e2):
        if e not in G.edge_set:
            raise DomainError(f"edge {e!r} not in E(G)")
    inc = G.incidence
    inc[e1], inc[e2] = inc[e2], inc[e1]
    return LabeledGraph(inc, G.vertices)


__all__ = [
    "ConditionKReport",
    "check_condition_K",
    "Orientation",
    "WitnessX",
    "find_witness",
    "RimStructure",
    "rim_structure",
    "ClaimCheck",
    "verify_structural_claims",
    "PairTag",
    "PairClassification",
    "classify_pair",
    "whitney_twist",
    "identify_components",
    "edge_exchange",
]
