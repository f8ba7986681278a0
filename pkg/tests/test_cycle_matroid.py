from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from named import c4f, diamond, k3, k3_plus_k2, k4, pan4
from oracles import brute_span
from strategies import simple_graphs
from truncmatroid import (
    DomainError,
    LabeledGraph,
    PreconditionError,
    circuits,
    cycle_matroid,
    cycles,
    decompose_truncated_circuits,
    gf2_combination,
    in_gf2_span,
    is_uniform,
    small_cycles,
    truncate,
    truncated_cycle_matroid,
)
from truncmatroid.edgesets import sym_diff


def fs(*sets):
    return {frozenset(s) for s in sets}


def ksubsets(items, k):
    return {frozenset(c) for c in combinations(items, k)}


class TestCycleMatroid:
    def test_c4(self):
        M = cycle_matroid(c4f())
        assert M.rank == 3 and M.bases == ksubsets(range(1, 5), 3)

    def test_k3_plus_k2(self):
        M = cycle_matroid(k3_plus_k2())
        assert M.rank == 3 and M.bases == fs({1, 2, 4}, {1, 3, 4}, {2, 3, 4})

    def test_single_edge(self):
        M = cycle_matroid(LabeledGraph({7: ("a", "b")}))
        assert M.rank == 1 and M.bases == fs({7})

    def test_empty(self):
        with pytest.raises(DomainError):
            cycle_matroid(LabeledGraph({}, vertices=[0]))

    @settings(max_examples=40, deadline=None)
    @given(simple_graphs())
    def test_circuits_are_cycles(self, g):
        assert circuits(cycle_matroid(g)) == cycles(g)


class TestTruncated:
    def test_pan4(self):
        assert is_uniform(truncated_cycle_matroid(pan4())) == (2, 4)

    def test_k4(self):
        assert is_uniform(truncated_cycle_matroid(k4())) == (2, 6)

    def test_k3(self):
        assert is_uniform(truncated_cycle_matroid(k3())) == (1, 3)

    def test_rank_zero(self):
        g = LabeledGraph({1: (0, 1), 2: (0, 1)})
        assert truncated_cycle_matroid(g).rank == 0  # rank 1 truncates to rank 0
        with pytest.raises(DomainError):
            truncate(truncated_cycle_matroid(g))


class TestDecomposition:
    def test_pan4(self):
        d = decompose_truncated_circuits(pan4())
        assert d.trees == fs({1, 2, 4}, {1, 3, 4}, {2, 3, 4})
        assert d.quasi == fs({1, 2, 3}) and d.small == set()

    def test_c4(self):
        d = decompose_truncated_circuits(c4f())
        assert d.trees == ksubsets(range(1, 5), 3)
        assert d.quasi == set() and d.small == set()

    def test_k4(self):
        d = decompose_truncated_circuits(k4())
        assert len(d.trees) == 16 and len(d.quasi) == 4 and d.small == set()
        assert all(len(q) == 3 for q in d.quasi)

    def test_disconnected(self):
        with pytest.raises(PreconditionError):
            decompose_truncated_circuits(k3_plus_k2())

    def test_parallel(self):
        with pytest.raises(PreconditionError):
            decompose_truncated_circuits(LabeledGraph({1: (0, 1), 2: (0, 1), 3: (1, 2)}))

    @settings(max_examples=60, deadline=None)
    @given(simple_graphs(connected=True, max_m=10))
    def test_identity(self, g):
        d = decompose_truncated_circuits(g)
        assert d.pairwise_disjoint()
        assert d.union() == circuits(truncated_cycle_matroid(g))


class TestGF2:
    def test_empty_target(self):
        assert in_gf2_span(set(), [])
        assert in_gf2_span(set(), [{1, 2}])

    def test_diamond(self):
        t1, t2 = {1, 2, 3}, {3, 4, 5}
        square = {1, 2, 4, 5}
        assert set(cycles(diamond())) >= fs(square)
        assert gf2_combination(square, [t1, t2]) == [0, 1]

    def test_k4_empty_family(self):
        assert not in_gf2_span({1, 2, 4}, small_cycles(k4()))

    def test_combination_reproduces_target(self):
        fam = [{1, 2}, {2, 3}, {3, 4}, {1, 4}]
        combo = gf2_combination({1, 3}, fam)
        assert sym_diff(*(fam[i] for i in combo)) == {1, 3}

    @settings(max_examples=80, deadline=None)
    @given(
        st.frozensets(st.integers(1, 6)),
        st.lists(st.frozensets(st.integers(1, 6)), max_size=6),
    )
    def test_brute_force(self, X, family):
        combo = gf2_combination(X, family)
        assert (combo is not None) == brute_span(X, family)
        if combo is not None:
            assert sym_diff(*(family[i] for i in combo)) == X
