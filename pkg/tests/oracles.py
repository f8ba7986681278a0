"""Brute-force reference computations, independent of the package internals."""

from itertools import chain, combinations

import networkx as nx
import numpy as np


def subsets(items):
    items = list(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def nx_multigraph(G, edges=None):
    H = nx.MultiGraph()
    labels = G.labels if edges is None else edges
    for x in labels:
        u, v = G.ends(x)
        H.add_edge(u, v, key=x)
    return H


def is_cycle_set(G, X):
    """Edges X form one connected 2-regular subgraph."""
    if not X:
        return False
    H = nx_multigraph(G, X)
    return nx.is_connected(H) and all(d == 2 for _, d in H.degree())


def brute_cycles(G):
    return {frozenset(X) for X in subsets(G.labels) if is_cycle_set(G, X)}


def is_forest_set(G, X):
    H = nx.MultiGraph()
    H.add_nodes_from(G.vertices)
    for x in X:
        H.add_edge(*G.ends(x), key=x)
    return nx.is_forest(H)


def brute_maximal_forests(G):
    forests = [frozenset(X) for X in subsets(G.labels) if is_forest_set(G, X)]
    top = max(len(f) for f in forests)
    return {f for f in forests if len(f) == top}


def matrix_tree_count(G):
    """Kirchhoff: any cofactor of the Laplacian."""
    idx = {v: i for i, v in enumerate(G.vertices)}
    L = np.zeros((G.n, G.n))
    for u, v in G.incidence.values():
        a, b = idx[u], idx[v]
        L[a, a] += 1
        L[b, b] += 1
        L[a, b] -= 1
        L[b, a] -= 1
    return round(np.linalg.det(L[1:, 1:]))


def brute_circuits(ground, bases):
    """Minimal subsets contained in no base."""
    bases = [frozenset(b) for b in bases]
    indep = lambda S: any(S <= b for b in bases)
    dependent = [frozenset(S) for S in subsets(ground) if not indep(frozenset(S))]
    return {D for D in dependent if all(indep(D - {x}) for x in D)}


def brute_exchange(bases):
    bases = {frozenset(b) for b in bases}
    if len({len(b) for b in bases}) != 1:
        return False
    for b1 in bases:
        for b2 in bases:
            for x in b1 - b2:
                if not any((b1 - {x}) | {y} in bases for y in b2 - b1):
                    return False
    return True


def brute_span(X, family):
    X = frozenset(X)
    for sub in subsets(range(len(family))):
        acc = frozenset()
        for i in sub:
            acc = acc ^ frozenset(family[i])
        if acc == X:
            return True
    return False
