"""
Which 3-connected graphs are fixed by their truncation?
=======================================================

Sweep every 3-connected simple graph with at most nine edges and try every
relabeling of every same-size partner.
"""

from truncmatroid import cycle_matroid, is_uniform, truncated_cycle_matroid
from truncmatroid.harness import verify_three_connected_uniqueness

verdicts = verify_three_connected_uniqueness(9)
for v in verdicts:
    print(v.to_dict()["graph6"], v.graph.n, v.graph.m, "unique" if v.unique else "NOT unique")

# The lone exception is K4. Its truncation is U(2,6), which every permutation
# of the six edges preserves, while only 24 of the 720 permutations come from
# the graph.
(k4,) = [v for v in verdicts if not v.unique]
F, bijection = k4.counterexample
print(is_uniform(truncated_cycle_matroid(k4.graph)))
print("partner relabeling:", bijection)
print("same M_t:", truncated_cycle_matroid(F) == truncated_cycle_matroid(k4.graph))
print("same M:  ", cycle_matroid(F) == cycle_matroid(k4.graph))
