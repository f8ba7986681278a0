"""Small-graph generation.

Isomorphism classes of simple graphs are built by vertex extension and
deduplicated by a canonical adjacency code.  The code is the minimum, over
vertex orders compatible with a colour refinement, of the upper-triangle bit
string, so it only has to search within refinement cells.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations, product

from .errors import ConfigurationError
from .graph import LabeledGraph, is_connected, separates

#: Largest vertex count :func:`enumerate_graphs` accepts by default.
MAX_VERTICES = 7


def _refine(n, adj):
    colors = [bin(adj[a]).count("1") for a in range(n)]
    while True:
        sig = [(colors[a], tuple(sorted(colors[b] for b in range(n) if adj[a] >> b & 1))) for a in range(n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranking[s] for s in sig]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _code(n, adj, order):
    code = 0
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonical_form(n: int, adj: tuple) -> tuple:
    """Return ``(code, order)``: the canonical code and a vertex order achieving it.

    ``adj[a]`` is the neighbour bitmask of vertex ``a``.
    """
    colors = _refine(n, adj)
    cells = [[a for a in range(n) if colors[a] == c] for c in sorted(set(colors))]
    best = None
    for parts in product(*(permutations(cell) for cell in cells)):
        order = [a for part in parts for a in part]
        code = _code(n, adj, order)
        if best is None or code < best[0]:
            best = (code, tuple(order))
    if best is None:
        return 0, ()
    return best


def _from_order(n, adj, order):
    pos = {a: i for i, a in enumerate(order)}
    pairs = sorted(
        (min(pos[a], pos[b]), max(pos[a], pos[b])) for a in range(n) for b in range(a + 1, n) if adj[a] >> b & 1
    )
    return LabeledGraph({k + 1: p for k, p in enumerate(pairs)}, range(n))


@lru_cache(maxsize=None)
def _classes(n):
    """Canonical ``(code, adj)`` for every simple graph on ``n`` vertices."""
    if n == 0:
        return ((0, ()),)
    if n == 1:
        return ((0, (0,)),)
    seen = {}
    for _, base in _classes(n - 1):
        for subset in range(1 << (n - 1)):
            adj = list(base) + [subset]
            for b in range(n - 1):
                if subset >> b & 1:
                    adj[b] |= 1 << (n - 1)
            code, order = canonical_form(n, tuple(adj))
            if code not in seen:
                pos = {a: i for i, a in enumerate(order)}
                canon = [0] * n
                for a in range(n):
                    for b in range(n):
                        if adj[a] >> b & 1:
                            canon[pos[a]] |= 1 << pos[b]
                seen[code] = tuple(canon)
    return tuple(sorted(seen.items()))


def _connected(n, adj):
    if n <= 1:
        return True
    seen, stack = 1, [0]
    while stack:
        a = stack.pop()
        fresh = adj[a] & ~seen
        seen |= fresh
        stack.extend(b for b in range(n) if fresh >> b & 1)
    return seen == (1 << n) - 1


def enumerate_graphs(n_max: int, connected: bool = True, n_min: int | None = None, bound: int = MAX_VERTICES):
    """Yield one simple graph per isomorphism class.

    Vertex counts run from ``n_min`` to ``n_max``; ``n_min`` defaults to
    ``n_max`` so ``enumerate_graphs(4)`` gives the six connected graphs on
    four vertices.  Within a vertex count graphs come ordered by edge count,
    then canonical code.  Edges are labeled as :func:`parse_graph6` would.
    """
    if n_max > bound:
        raise ConfigurationError(f"n_max={n_max} exceeds the enumeration bound {bound}")
    if n_min is None:
        n_min = n_max
    for n in range(max(n_min, 1), n_max + 1):
        found = []
        for code, adj in _classes(n):
            if connected and not _connected(n, adj):
                continue
            m = sum(bin(a).count("1") for a in adj) // 2
            found.append((m, code, adj))
        for m, code, adj in sorted(found):
            yield _from_order(n, adj, range(n))


def graphs_without_isolated_vertices(n_max: int, bound: int = MAX_VERTICES):
    """All simple graphs on ``2..n_max`` vertices with no isolated vertex."""
    for G in enumerate_graphs(n_max, connected=False, n_min=2, bound=bound):
        if all(G.degree(v) for v in G.vertices):
            yield G


# ---------------------------------------------------------------------------
# seeded random graphs


def random_connected_graph(rng: random.Random, n: int, m: int, first_label=1) -> LabeledGraph:
    """Uniform random spanning tree on ``n`` vertices plus ``m - n + 1`` extra edges."""
    max_m = n * (n - 1) // 2
    if not n - 1 <= m <= max_m:
        raise ValueError(f"need {n - 1} <= m <= {max_m}, got m={m}")
    verts = list(range(n))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, n):
        a, b = verts[i], verts[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    rest = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
    edges.update(rng.sample(rest, m - len(edges)))
    return LabeledGraph({first_label + k: e for k, e in enumerate(sorted(edges))}, range(n))


def random_disconnected_graph(rng: random.Random, n_max: int = 7, parts=(2, 3)) -> LabeledGraph:
    """Disjoint union of 2-3 random connected pieces, each with at least one edge."""
    k = rng.choice(parts)
    sizes = [2] * k
    for _ in range(rng.randint(0, n_max - 2 * k)):
        sizes[rng.randrange(k)] += 1
    incidence, offset, label = {}, 0, 1
    for size in sizes:
        m = rng.randint(size - 1, size * (size - 1) // 2)
        piece = random_connected_graph(rng, size, m)
        for u, v in piece.incidence.values():
            incidence[label] = (u + offset, v + offset)
            label += 1
        offset += size
    return LabeledGraph(incidence)


def random_two_cut_graph(rng: random.Random, n_max: int = 7) -> tuple:
    """A connected graph with a separating vertex pair.

    Returns ``(G, (u, v), side)`` where ``side`` is a vertex set made of
    whole components of ``G - {u, v}`` (never all of them).
    """
    while True:
        G, cut, side = _two_cut_attempt(rng, n_max)
        if set(cut) <= set(G.vertices) and is_connected(G) and separates(G, cut):
            return G, cut, side


def _two_cut_attempt(rng, n_max):
    u, v = 0, 1
    k1 = rng.randint(1, n_max - 3)
    k2 = rng.randint(1, n_max - 2 - k1)
    incidence, label, nxt = {}, 1, 2
    pieces = []
    for size in (k1, k2):
        inner = list(range(nxt, nxt + size))
        nxt += size
        verts = [u, v] + inner
        m = rng.randint(len(verts) - 1, len(verts) * (len(verts) - 1) // 2 - 1)
        piece = random_connected_graph(rng, len(verts), m)
        for a, b in piece.incidence.values():
            if {verts[a], verts[b]} == {u, v}:
                continue
            incidence[label] = (verts[a], verts[b])
            label += 1
        pieces.append(inner)
    if rng.random() < 0.5:
        incidence[label] = (u, v)
    G = LabeledGraph(incidence)
    return G, (u, v), pieces[0]
