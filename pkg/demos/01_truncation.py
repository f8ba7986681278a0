"""
Cycle matroids and their truncations
====================================

Build the cycle matroid of a small graph, truncate it, and look at the
three kinds of circuit the truncation picks up.
"""

import numpy as np

from truncmatroid import LabeledGraph, circuits, cycle_matroid, decompose_truncated_circuits, truncate
from truncmatroid.matroid import circuit_family_sorted, hamiltonian_circuits

# The house: a 5-cycle 0-1-2-3-4 with the chord 1-4.
G = LabeledGraph({1: (0, 1), 2: (1, 2), 3: (2, 3), 4: (3, 4), 5: (4, 0), 6: (1, 4)})

M = cycle_matroid(G)
print("rank", M.rank, "bases", len(M.bases))
print("circuits", circuit_family_sorted(circuits(M)))

# Truncating drops the rank by one. Bases of M_t are bases of M minus one edge.
Mt = truncate(M)
print("truncated rank", Mt.rank, "bases", len(Mt.bases))

# Circuits of M_t are the old circuits and bases, minus the circuits of size rank + 1.
formula = (circuits(M) | M.bases) - hamiltonian_circuits(M)
print("formula agrees:", formula == circuits(Mt))

# On a connected graph the same family splits into spanning trees,
# cycles missing exactly one vertex, and cycles missing two or more.
d = decompose_truncated_circuits(G)
print("trees", len(d.trees), "quasi", circuit_family_sorted(d.quasi), "small", circuit_family_sorted(d.small))

# Circuit sizes of M_t as a histogram.
sizes = np.array([len(c) for c in circuits(Mt)])
values, counts = np.unique(sizes, return_counts=True)
print("circuit sizes:", dict(zip(values.tolist(), counts.tolist())))
