"""Exhaustive desk-scale experiments.

The pair search fixes one labeled representative ``A`` of each isomorphism
class and, for every class ``B`` with the same edge count and rank, walks the
bijections ``E(B) -> E(A)`` that carry ``M_t(B)`` onto ``M_t(A)``.  A
bijection that does *not* also carry ``M(B)`` onto ``M(A)`` yields a pair
satisfying condition K (connectivity aside), which is then classified.
Relabelings that only differ by a graph automorphism of ``B`` are counted once.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import groupby

from . import __version__
from .cycle_matroid import cycle_matroid, truncated_cycle_matroid
from .edgesets import popcount
from .errors import ConfigurationError, PreconditionError, TheoremViolation
from .generate import enumerate_graphs, graphs_without_isolated_vertices
from .graph import LabeledGraph, connectivity_at_least, is_connected, isomorphic, rank, vertex_stars
from .graph6 import parse_graph6, write_graph6
from .matroid import iter_isomorphisms
from .pairs import PairClassification, PairTag, _one_edge_plus_cycle, classify_pair

log = logging.getLogger(__name__)

SCHEMA = "truncmatroid.search/1"
DEFAULT_N_MAX = 6
HARD_N_MAX = 7
UNIQUENESS_M_MAX = 9


# ---------------------------------------------------------------------------
# records


@dataclass
class PairRecord:
    """One realized pair: ``first`` keeps its labels, ``second`` is relabeled onto them."""

    first: LabeledGraph
    second: LabeledGraph
    classification: PairClassification | None
    realizations: int = 1
    failures: int = 0

    @property
    def classes(self) -> tuple:
        return write_graph6(self.first), write_graph6(self.second)

    def to_dict(self) -> dict:
        g6a, g6b = self.classes
        return {
            "first_class": g6a,
            "second_class": g6b,
            "first": self.first.to_dict(),
            "second": self.second.to_dict(),
            "realizations": self.realizations,
            "failures": self.failures,
            "classification": None if self.classification is None else self.classification.to_dict(),
        }


@dataclass
class UniquenessVerdict:
    graph: LabeledGraph
    unique: bool
    counterexample: tuple | None = None  # (F relabeled onto E(G), bijection E(F) -> E(G))
    partner_isomorphic: bool | None = None

    def to_dict(self) -> dict:
        out = {"graph6": write_graph6(self.graph), "m": self.graph.m, "unique": self.unique}
        if self.counterexample is not None:
            F, bij = self.counterexample
            out["counterexample"] = {
                "partner": F.to_dict(),
                "bijection": [[x, y] for x, y in sorted(bij.items())],
                "partner_isomorphic": self.partner_isomorphic,
            }
        return out


@dataclass
class SearchReport:
    scope: dict
    pairs_found: list = field(default_factory=list)
    claim_failures: list = field(default_factory=list)
    three_connected_summary: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "schema": SCHEMA,
            "version": __version__,
            "scope": self.scope,
            "pairs": [p.to_dict() for p in self.pairs_found],
            "claim_failures": self.claim_failures,
            "three_connected": [v.to_dict() for v in self.three_connected_summary],
        }
        if timing:
            out["timing"] = self.timing
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["first_class", "second_class", "m", "tag", "spokes", "partner_is_cycle", "realizations", "failures"])
        for p in self.pairs_found:
            c = p.classification
            spokes = "" if c is None or c.rim is None else len(c.rim.spokes)
            cyc = "" if c is None or c.partner_is_cycle is None else c.partner_is_cycle
            tag = "" if c is None else c.tag.value
            w.writerow([*p.classes, p.first.m, tag, spokes, cyc, p.realizations, p.failures])
        return buf.getvalue()


# ---------------------------------------------------------------------------
# pair realization


def _star_key(G: LabeledGraph):
    return frozenset(vertex_stars(G).items())


def realize_pairs(A: LabeledGraph, B: LabeledGraph):
    """Yield ``(B', bijection)`` with ``M_t(B') = M_t(A)`` and ``M(B') != M(A)``.

    ``B'`` is ``B`` relabeled onto ``E(A)``.  Relabelings that give the same
    vertex stars are yielded once.
    """
    if A.m != B.m or A.m == 0 or rank(A) != rank(B) or rank(A) == 0:
        return
    MA, r = cycle_matroid(A), rank(A)
    # once M_t agrees, M agrees iff the rank-sized circuits of M agree
    targets = {c for c in MA.circuit_masks if popcount(c) == r}
    MB = cycle_matroid(B)
    b_circuits = [[B.labels[e] for e in range(B.m) if c >> e & 1] for c in MB.circuit_masks if popcount(c) == r]
    same_count = len(b_circuits) == len(targets)
    seen = set()
    for pi in iter_isomorphisms(truncated_cycle_matroid(B), truncated_cycle_matroid(A)):
        if same_count and all(A.mask(pi[x] for x in c) in targets for c in b_circuits):
            continue
        Bp = B.relabeled(pi)
        key = _star_key(Bp)
        if key in seen:
            continue
        seen.add(key)
        yield Bp, pi


def _pair_task(args):
    g6a, g6b, all_realizations = args
    A, B = parse_graph6(g6a), parse_graph6(g6b)
    record, failures = None, []
    count = 0
    for Bp, _ in realize_pairs(A, B):
        count += 1
        try:
            cls = classify_pair(A, Bp)
        except (TheoremViolation, PreconditionError) as exc:
            cert = getattr(exc, "certificate", None) or {"G": A.to_dict(), "F": Bp.to_dict()}
            failures.append({"first_class": g6a, "second_class": g6b, "error": str(exc), "certificate": cert})
            cls = None
        if record is None:
            record = PairRecord(A, Bp, cls)
        if not all_realizations:
            break
    if record is not None:
        record.realizations = count
        record.failures = len(failures)
    return record, failures


def _population(n_max: int, connected_only: bool) -> list:
    graphs = [G for G in enumerate_graphs(n_max, connected=True, n_min=1, bound=HARD_N_MAX) if G.m > 0]
    if not connected_only:
        graphs += [G for G in graphs_without_isolated_vertices(n_max, bound=HARD_N_MAX) if not is_connected(G)]
    return graphs


def _pair_tasks(graphs: list, want) -> list:
    """Unordered pairs (with repetition) sharing edge count and rank, filtered by ``want``."""
    keyed = sorted(((G.m, rank(G), write_graph6(G)) for G in graphs))
    tasks = []
    for _, bucket in groupby(keyed, key=lambda t: t[:2]):
        names = [t[2] for t in bucket]
        for i, a in enumerate(names):
            for b in names[i:]:
                if want(a, b):
                    tasks.append((a, b))
    return sorted(tasks)


def _run_tasks(tasks, jobs, all_realizations):
    args = [(a, b, all_realizations) for a, b in tasks]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_pair_task, args, chunksize=8))
    return [_pair_task(t) for t in args]


def _check_bound(n_max, bound):
    if n_max > HARD_N_MAX:
        raise ConfigurationError(f"n_max={n_max} exceeds the hard limit {HARD_N_MAX}")
    if n_max > bound:
        raise ConfigurationError(f"n_max={n_max} exceeds the configured bound {bound}")
    if n_max > DEFAULT_N_MAX:
        warnings.warn(f"n_max={n_max} is beyond the default scope and may run for a long time", stacklevel=3)


def search_K_pairs(
    n_max: int,
    jobs: int = 1,
    bound: int = DEFAULT_N_MAX,
    include_disconnected: bool = True,
    all_realizations: bool = True,
) -> SearchReport:
    """Find and classify every pair of graphs on at most ``n_max`` vertices
    with equal truncated and unequal cycle matroids.

    Connected pairs satisfy condition K; with ``include_disconnected`` the
    population also holds disconnected graphs without isolated vertices, and
    pairs failing only connectivity are reported too.
    """
    _check_bound(n_max, bound)
    t0 = time.perf_counter()
    graphs = _population(n_max, connected_only=not include_disconnected)
    tasks = _pair_tasks(graphs, lambda a, b: True)
    t1 = time.perf_counter()
    results = _run_tasks(tasks, jobs, all_realizations)
    t2 = time.perf_counter()

    report = SearchReport(scope={
        "n_max": n_max,
        "m_max": max((G.m for G in graphs), default=0),
        "graphs": len(graphs),
        "candidate_pairs": len(tasks),
        "include_disconnected": include_disconnected,
        "all_realizations": all_realizations,
    })
    for record, failures in results:
        if record is not None:
            report.pairs_found.append(record)
        report.claim_failures.extend(failures)

    partnered = {}
    for p in report.pairs_found:
        a, b = p.classes
        partnered.setdefault(a, []).append(b)
        partnered.setdefault(b, []).append(a)
    for G in graphs:
        if is_connected(G) and connectivity_at_least(G, 3):
            g6 = write_graph6(G)
            report.three_connected_summary.append(UniquenessVerdict(G, unique=g6 not in partnered))
    report.timing = {"population_s": t1 - t0, "pairs_s": t2 - t1, "total_s": time.perf_counter() - t0}
    log.info("searched %d candidate pairs, found %d", len(tasks), len(report.pairs_found))
    return report


# ---------------------------------------------------------------------------
# uniqueness of 3-connected graphs


def _uniqueness_verdict(G: LabeledGraph, partners: list) -> UniquenessVerdict:
    MtG = truncated_cycle_matroid(G)
    MG = cycle_matroid(G)
    for F in partners:
        same = isomorphic(G, F) is not None
        for pi in iter_isomorphisms(truncated_cycle_matroid(F), MtG):
            Fp = F.relabeled(pi)
            if not same:
                return UniquenessVerdict(G, False, (Fp, pi), partner_isomorphic=False)
            if cycle_matroid(Fp) != MG:
                return UniquenessVerdict(G, False, (Fp, pi), partner_isomorphic=True)
    return UniquenessVerdict(G, True)


def verify_three_connected_uniqueness(m_max: int = UNIQUENESS_M_MAX) -> list:
    """Decide for every 3-connected simple graph with at most ``m_max`` edges
    whether its truncated cycle matroid determines it.

    A 3-connected graph has minimum degree 3, so ``n <= 2 m / 3``.  Partners
    range over connected simple graphs with the same vertex and edge counts:
    any disconnected partner has the same matroids as the connected graph
    obtained by gluing its components at single vertices.
    """
    if m_max > UNIQUENESS_M_MAX:
        raise ConfigurationError(f"m_max={m_max} exceeds {UNIQUENESS_M_MAX}")
    verdicts = []
    for n in range(4, 2 * m_max // 3 + 1):
        graphs = list(enumerate_graphs(n, bound=HARD_N_MAX))
        for G in graphs:
            if G.m > m_max or not connectivity_at_least(G, 3):
                continue
            verdicts.append(_uniqueness_verdict(G, [F for F in graphs if F.m == G.m]))
    return verdicts


# ---------------------------------------------------------------------------
# disconnected participants


def verify_disconnected_case(n_max: int, jobs: int = 1, bound: int = DEFAULT_N_MAX):
    """Every disconnected graph in a pair that fails only connectivity must be
    one edge plus a cycle.  Returns a :class:`~truncmatroid.pairs.ClaimCheck`."""
    from .pairs import ClaimCheck

    _check_bound(n_max, bound)
    graphs = _population(n_max, connected_only=False)
    disconnected = {write_graph6(G) for G in graphs if not is_connected(G)}
    tasks = _pair_tasks(graphs, lambda a, b: a in disconnected or b in disconnected)
    checked, bad = 0, []
    for a, b in tasks:
        A, B = parse_graph6(a), parse_graph6(b)
        for Bp, _ in realize_pairs(A, B):
            checked += 1
            for H in (A, Bp):
                if not is_connected(H) and not _one_edge_plus_cycle(H):
                    bad.append({"first": A.to_dict(), "second": Bp.to_dict(), "offender": H.to_dict()})
    return ClaimCheck(
        "disconnected_one_edge_plus_cycle",
        not bad,
        {"n_max": n_max, "candidate_pairs": len(tasks), "pairs_checked": checked, "violations": bad},
    )
