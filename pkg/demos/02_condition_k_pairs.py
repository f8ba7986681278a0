"""
Graphs that share a truncated cycle matroid
===========================================

The pan (a triangle with a pendant edge) and the 4-cycle have different
cycle matroids on the labels 1..4 but identical truncations.
"""

import json

from truncmatroid import LabeledGraph, check_condition_K, classify_pair, whitney_twist, cycle_matroid
from truncmatroid.harness import search_K_pairs

pan = LabeledGraph({1: ("u", "v"), 2: ("v", "w"), 3: ("w", "u"), 4: ("w", "c")})
square = LabeledGraph({1: (0, 1), 2: (1, 2), 3: (2, 3), 4: (3, 0)})

print(check_condition_K(pan, square).to_dict())

# The edge set {1,2,3} is a cycle missing one vertex in the pan and a spanning
# tree of the square. The classification is built around that set.
cls = classify_pair(pan, square)
print(json.dumps(cls.to_dict(), indent=1)[:600])

# Whitney twists never produce such a pair: they keep the cycle matroid itself.
diamond = LabeledGraph({1: (0, 1), 2: (0, 2), 3: (1, 2), 4: (1, 3), 5: (2, 3)})
twisted = whitney_twist(diamond, (1, 2), {0})
print("twist keeps M:", cycle_matroid(twisted) == cycle_matroid(diamond))

# Every pair on at most five vertices.
report = search_K_pairs(5)
for p in report.pairs_found:
    print(*p.classes, p.classification.tag.value, sep="\t")
