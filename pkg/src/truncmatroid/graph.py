"""Labeled graphs: edges carry labels from a ground set, and each label maps
to an unordered pair of distinct vertices.  Parallel edges are allowed, loops
are not.

All edge-set results are ``frozenset`` of labels.  Cycle and forest families
are computed once per graph and cached (graphs are immutable).
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Hashable, Iterable, Mapping

from .edgesets import bits, k_subsets, label_key, popcount, sort_labels, to_labels, to_mask
from .errors import ConfigurationError, DomainError

#: Cycle enumeration is exhaustive; refuse graphs larger than this.
MAX_EDGES = 24


class LabeledGraph:
    """An immutable graph ``(V, E, phi)``.

    ``incidence`` maps each edge label to a pair of distinct vertices.  Vertex
    ids default to the endpoints; pass ``vertices`` to add isolated vertices.

    >>> g = LabeledGraph({1: (0, 1), 2: (1, 2)})
    >>> g.n, g.m
    (3, 2)
    """

    def __init__(self, incidence: Mapping[Hashable, Iterable], vertices: Iterable | None = None):
        ends = {}
        for label, pair in incidence.items():
            pair = tuple(pair)
            if len(pair) != 2 or pair[0] == pair[1]:
                raise DomainError(f"edge {label!r} must join two distinct vertices, got {pair!r}")
            ends[label] = tuple(sorted(pair, key=label_key))
        touched = {v for pair in ends.values() for v in pair}
        if vertices is None:
            vs = touched
        else:
            vs = set(vertices)
            missing = touched - vs
            if missing:
                raise DomainError(f"endpoints {sorted(missing, key=label_key)!r} not in vertex set")
        self._vertices = sort_labels(vs)
        self._labels = sort_labels(ends)
        self._ends = tuple(ends[x] for x in self._labels)
        self._index = {x: i for i, x in enumerate(self._labels)}
        self._vindex = {v: i for i, v in enumerate(self._vertices)}
        self._cache: dict = {}

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def labels(self) -> tuple:
        """Edge labels in canonical (sorted) order."""
        return self._labels

    @property
    def edge_set(self) -> frozenset:
        return frozenset(self._labels)

    @property
    def incidence(self) -> dict:
        return dict(zip(self._labels, self._ends))

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._labels)

    def ends(self, label) -> tuple:
        return self._ends[self._index[label]]

    def mask(self, labels: Iterable) -> int:
        """Bitmask of ``labels`` over :attr:`labels`; unknown labels raise."""
        try:
            return to_mask(labels, self._index)
        except KeyError as exc:
            raise DomainError(f"edge {exc.args[0]!r} not in E(G)") from None

    def edges_of(self, mask: int) -> frozenset:
        return to_labels(mask, self._labels)

    def degree(self, v) -> int:
        return sum(1 for pair in self._ends if v in pair)

    def neighbors(self, v) -> set:
        return {pair[1] if pair[0] == v else pair[0] for pair in self._ends if v in pair}

    @property
    def is_simple(self) -> bool:
        return len(set(self._ends)) == len(self._ends)

    # -- internal adjacency over indices ----------------------------------

    def _adjacency(self) -> list:
        """``adj[vi]`` lists ``(edge_index, other_vertex_index)``."""
        adj = self._cache.get("adj")
        if adj is None:
            adj = [[] for _ in self._vertices]
            for i, (u, v) in enumerate(self._ends):
                a, b = self._vindex[u], self._vindex[v]
                adj[a].append((i, b))
                adj[b].append((i, a))
            self._cache["adj"] = adj
        return adj

    def _end_indices(self) -> list:
        return [(self._vindex[u], self._vindex[v]) for u, v in self._ends]

    # -- value semantics -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self._vertices == other._vertices and self.incidence == other.incidence

    def __hash__(self):
        return hash((self._vertices, self._labels, self._ends))

    def __repr__(self):
        edges = ", ".join(f"{x!r}: {u!r}-{v!r}" for x, (u, v) in zip(self._labels, self._ends))
        return f"LabeledGraph({{{edges}}}, n={self.n})"

    def to_dict(self) -> dict:
        """JSON-ready form; edges listed as ``[label, u, v]`` in label order."""
        return {
            "vertices": list(self._vertices),
            "edges": [[x, u, v] for x, (u, v) in zip(self._labels, self._ends)],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "LabeledGraph":
        return cls({x: (u, v) for x, u, v in data["edges"]}, data["vertices"])

    def relabeled(self, mapping: Mapping) -> "LabeledGraph":
        """Rename edges by ``mapping`` (old label -> new label, injective)."""
        new = {mapping[x]: e for x, e in zip(self._labels, self._ends)}
        if len(new) != self.m:
            raise DomainError("edge relabeling is not injective")
        return LabeledGraph(new, self._vertices)

    def renamed_vertices(self, mapping: Mapping) -> "LabeledGraph":
        new = {x: (mapping[u], mapping[v]) for x, (u, v) in zip(self._labels, self._ends)}
        return LabeledGraph(new, [mapping[v] for v in self._vertices])


# ---------------------------------------------------------------------------
# subgraphs and components


def induced_subgraph(G: LabeledGraph, X: Iterable) -> LabeledGraph:
    """``G[X]``: the edges ``X`` together with their end-vertices."""
    X = set(X)
    missing = X - set(G.labels)
    if missing:
        raise DomainError(f"edges {sort_labels(missing)!r} not in E(G)")
    return LabeledGraph({x: G.ends(x) for x in X})


def components(G: LabeledGraph) -> list:
    """Vertex sets of the connected components, isolated vertices included."""
    cached = G._cache.get("components")
    if cached is not None:
        return cached
    adj = G._adjacency()
    seen = [False] * G.n
    out = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            a = stack.pop()
            comp.append(a)
            for _, b in adj[a]:
                if not seen[b]:
                    seen[b] = True
                    stack.append(b)
        out.append(frozenset(G.vertices[i] for i in comp))
    G._cache["components"] = out
    return out


def is_connected(G: LabeledGraph) -> bool:
    return len(components(G)) <= 1


def rank(G: LabeledGraph) -> int:
    """Size of a maximal forest, ``|V| - c(G)``."""
    return G.n - len(components(G))


def vertex_stars(G: LabeledGraph) -> Counter:
    """Multiset of vertex stars of the non-isolated vertices."""
    stars = Counter()
    for v in G.vertices:
        star = frozenset(x for x, pair in zip(G.labels, G._ends) if v in pair)
        if star:
            stars[star] += 1
    return stars


# ---------------------------------------------------------------------------
# cycles and forests


def _check_size(G):
    if G.m > MAX_EDGES:
        raise ConfigurationError(f"graph has {G.m} edges; exhaustive enumeration is capped at {MAX_EDGES}")


def cycle_masks(G: LabeledGraph) -> tuple:
    """Bitmasks of all cycles, sorted by (size, mask)."""
    cached = G._cache.get("cycles")
    if cached is not None:
        return cached
    _check_size(G)
    adj = G._adjacency()
    found = set()

    # Each cycle is discovered from its lowest vertex; other vertices stay above it.
    for s in range(G.n):
        on_path = [False] * G.n
        on_path[s] = True

        def walk(a, used):
            for e, b in adj[a]:
                bit = 1 << e
                if used & bit:
                    continue
                if b == s:
                    found.add(used | bit)
                elif b > s and not on_path[b]:
                    on_path[b] = True
                    walk(b, used | bit)
                    on_path[b] = False

        for e, b in adj[s]:
            if b > s:
                on_path[b] = True
                walk(b, 1 << e)
                on_path[b] = False

    out = tuple(sorted(found, key=lambda c: (popcount(c), c)))
    G._cache["cycles"] = out
    return out


def cycles(G: LabeledGraph) -> set:
    """Edge sets of all cycles of ``G``."""
    return {G.edges_of(c) for c in cycle_masks(G)}


def _acyclic(mask: int, ends: list, n: int) -> bool:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in bits(mask):
        a, b = ends[e]
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def forest_masks(G: LabeledGraph) -> tuple:
    """Bitmasks of maximal forests (spanning trees when connected), sorted."""
    cached = G._cache.get("forests")
    if cached is not None:
        return cached
    _check_size(G)
    ends = G._end_indices()
    r = rank(G)
    out = tuple(mask for mask in k_subsets(G.m, r) if _acyclic(mask, ends, G.n))
    out = tuple(sorted(out))
    G._cache["forests"] = out
    return out


def spanning_forests(G: LabeledGraph) -> set:
    """Edge sets of all maximal forests of ``G``."""
    return {G.edges_of(f) for f in forest_masks(G)}


def is_acyclic(G: LabeledGraph, X: Iterable) -> bool:
    return _acyclic(G.mask(X), G._end_indices(), G.n)


def hamiltonian_cycles(G: LabeledGraph) -> set:
    return {G.edges_of(c) for c in cycle_masks(G) if popcount(c) == G.n}


def quasi_hamiltonian_cycles(G: LabeledGraph) -> set:
    """Cycles missing exactly one vertex of ``G``.

    A cycle has as many vertices as edges, so this is a size filter.
    """
    return {G.edges_of(c) for c in cycle_masks(G) if popcount(c) == G.n - 1}


def small_cycles(G: LabeledGraph) -> set:
    """Cycles missing at least two vertices of ``G``."""
    return {G.edges_of(c) for c in cycle_masks(G) if popcount(c) <= G.n - 2}


def is_even(G: LabeledGraph, Y: Iterable) -> bool:
    """True iff every vertex of ``G[Y]`` has even degree."""
    mask = G.mask(Y)
    parity = [0] * G.n
    for a, b in (G._end_indices()[e] for e in bits(mask)):
        parity[a] ^= 1
        parity[b] ^= 1
    return not any(parity)


def is_cycle_graph(G: LabeledGraph) -> bool:
    """True iff ``G`` itself is a single cycle (connected, 2-regular)."""
    return G.m >= 2 and is_connected(G) and all(G.degree(v) == 2 for v in G.vertices)


# ---------------------------------------------------------------------------
# connectivity


def _connected_without(G: LabeledGraph, removed: set) -> bool:
    keep = [i for i, v in enumerate(G.vertices) if v not in removed]
    if len(keep) <= 1:
        return True
    adj = G._adjacency()
    blocked = {G._vindex[v] for v in removed}
    seen = {keep[0]}
    stack = [keep[0]]
    while stack:
        a = stack.pop()
        for _, b in adj[a]:
            if b not in seen and b not in blocked:
                seen.add(b)
                stack.append(b)
    return len(seen) == len(keep)


def connectivity_at_least(G: LabeledGraph, k: int) -> bool:
    """Vertex ``k``-connectivity for ``k`` in 1..3.

    ``G`` is k-connected when it has more than ``k`` vertices and deleting
    fewer than ``k`` of them never disconnects it.
    """
    if k not in (1, 2, 3):
        raise DomainError(f"k must be 1, 2 or 3, got {k}")
    if G.n <= k:
        return False
    for size in range(k):
        for cut in combinations(G.vertices, size):
            if not _connected_without(G, set(cut)):
                return False
    return True


def separates(G: LabeledGraph, cut: Iterable) -> bool:
    """True iff deleting ``cut`` leaves at least two components."""
    cut = set(cut)
    rest = [v for v in G.vertices if v not in cut]
    return len(rest) >= 2 and not _connected_without(G, cut)


# ---------------------------------------------------------------------------
# isomorphism


def _multiplicity(G: LabeledGraph) -> dict:
    mult = Counter()
    for a, b in G._end_indices():
        mult[(a, b)] += 1
        mult[(b, a)] += 1
    return mult


def _vertex_invariants(G: LabeledGraph) -> list:
    adj = G._adjacency()
    deg = [len(adj[a]) for a in range(G.n)]
    return [(deg[a], tuple(sorted(deg[b] for _, b in adj[a]))) for a in range(G.n)]


def isomorphic(G: LabeledGraph, F: LabeledGraph):
    """Find an isomorphism ``(nu, eps)`` from ``G`` to ``F``, or ``None``.

    ``nu`` maps vertices and ``eps`` maps edge labels so that
    ``G.ends(e) == {u, v}`` iff ``F.ends(eps[e]) == {nu[u], nu[v]}``.
    """
    if (G.n, G.m) != (F.n, F.m):
        return None
    inv_g, inv_f = _vertex_invariants(G), _vertex_invariants(F)
    if sorted(inv_g) != sorted(inv_f):
        return None
    mult_g, mult_f = _multiplicity(G), _multiplicity(F)

    # most constrained first: rare invariants, then high degree, then BFS order
    freq = Counter(inv_g)
    order = sorted(range(G.n), key=lambda a: (freq[inv_g[a]], -inv_g[a][0], a))
    adj = G._adjacency()
    placed, ordered = set(), []
    for root in order:
        if root in placed:
            continue
        queue = [root]
        placed.add(root)
        while queue:
            a = queue.pop(0)
            ordered.append(a)
            for _, b in sorted(adj[a], key=lambda t: order.index(t[1])):
                if b not in placed:
                    placed.add(b)
                    queue.append(b)

    image = [None] * G.n
    used = [False] * F.n

    def extend(depth):
        if depth == G.n:
            return True
        a = ordered[depth]
        for b in range(F.n):
            if used[b] or inv_f[b] != inv_g[a]:
                continue
            ok = True
            for prev in ordered[:depth]:
                if mult_g.get((a, prev), 0) != mult_f.get((b, image[prev]), 0):
                    ok = False
                    break
            if not ok:
                continue
            image[a], used[b] = b, True
            if extend(depth + 1):
                return True
            image[a], used[b] = None, False
        return False

    if not extend(0):
        return None
    nu = {G.vertices[a]: F.vertices[image[a]] for a in range(G.n)}
    by_pair = {}
    for x, (u, v) in zip(F.labels, F._ends):
        by_pair.setdefault(frozenset((u, v)), []).append(x)
    eps = {}
    for x, (u, v) in zip(G.labels, G._ends):
        eps[x] = by_pair[frozenset((nu[u], nu[v]))].pop(0)
    return nu, eps


def is_isomorphism(G: LabeledGraph, F: LabeledGraph, nu: Mapping, eps: Mapping) -> bool:
    """Check a claimed isomorphism independently of how it was found."""
    if set(nu) != set(G.vertices) or set(nu.values()) != set(F.vertices):
        return False
    if set(eps) != set(G.labels) or set(eps.values()) != set(F.labels):
        return False
    return all(
        frozenset(F.ends(eps[x])) == frozenset((nu[u], nu[v])) for x, (u, v) in G.incidence.items()
    )


def strongly_isomorphic(G: LabeledGraph, F: LabeledGraph) -> bool:
    """Same family of vertex stars (isolated vertices ignored)."""
    if G.edge_set != F.edge_set:
        raise DomainError("strong isomorphism needs a common edge set")
    return vertex_stars(G) == vertex_stars(F)
