"""Small named graphs used across the tests."""

from truncmatroid import LabeledGraph


def pan4():
    # triangle u,v,w plus pendant edge w-c
    return LabeledGraph({1: ("u", "v"), 2: ("v", "w"), 3: ("w", "u"), 4: ("w", "c")})


def c4f():
    return LabeledGraph({1: (0, 1), 2: (1, 2), 3: (2, 3), 4: (3, 0)})


def k3():
    return LabeledGraph({1: (0, 1), 2: (1, 2), 3: (2, 0)})


def k4():
    return LabeledGraph({1: (0, 1), 2: (0, 2), 3: (0, 3), 4: (1, 2), 5: (1, 3), 6: (2, 3)})


def diamond():
    # triangles {1,2,3} and {3,4,5} sharing edge 3 = 1-2
    return LabeledGraph({1: (0, 1), 2: (0, 2), 3: (1, 2), 4: (1, 3), 5: (2, 3)})


def house():
    # 5-cycle 0-1-2-3-4 with chord 1-4 cutting off triangle {0,1,4}
    return LabeledGraph({1: (0, 1), 2: (1, 2), 3: (2, 3), 4: (3, 4), 5: (4, 0), 6: (1, 4)})


def k3_plus_k2():
    return LabeledGraph({1: (0, 1), 2: (1, 2), 3: (2, 0), 4: (5, 6)})


def path(k, first_label=1):
    return LabeledGraph({first_label + i: (i, i + 1) for i in range(k)})


def cycle(k, first_label=1):
    return LabeledGraph({first_label + i: (i, (i + 1) % k) for i in range(k)})


def wheel(spokes):
    inc = {i + 1: (i, (i + 1) % spokes) for i in range(spokes)}
    inc.update({spokes + i + 1: ("hub", i) for i in range(spokes)})
    return LabeledGraph(inc)


def k33():
    inc, label = {}, 1
    for a in "abc":
        for b in "xyz":
            inc[label] = (a, b)
            label += 1
    return LabeledGraph(inc)
