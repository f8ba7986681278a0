import pytest
from hypothesis import given, settings

from named import c4f, cycle, diamond, house, k3, k4, pan4, path
from oracles import brute_cycles, brute_maximal_forests, matrix_tree_count, nx_multigraph
from strategies import multigraphs, simple_graphs
from truncmatroid import (
    DomainError,
    LabeledGraph,
    connectivity_at_least,
    cycles,
    induced_subgraph,
    is_even,
    isomorphic,
    quasi_hamiltonian_cycles,
    small_cycles,
    spanning_forests,
    strongly_isomorphic,
)
from truncmatroid.edgesets import sym_diff
from truncmatroid.graph import hamiltonian_cycles, is_isomorphism, vertex_stars
from truncmatroid.errors import ConfigurationError


def fs(*sets):
    return {frozenset(s) for s in sets}


class TestConstruction:
    def test_loops_rejected(self):
        with pytest.raises(DomainError):
            LabeledGraph({1: (0, 0)})

    def test_endpoint_outside_vertex_set(self):
        with pytest.raises(DomainError):
            LabeledGraph({1: (0, 1)}, vertices=[0])

    def test_isolated_vertices_kept(self):
        g = LabeledGraph({1: (0, 1)}, vertices=[0, 1, 2])
        assert g.n == 3 and g.m == 1

    def test_parallel_edges_are_not_simple(self):
        assert not LabeledGraph({1: (0, 1), 2: (1, 0)}).is_simple
        assert k4().is_simple

    def test_dict_round_trip(self):
        g = pan4()
        assert LabeledGraph.from_dict(g.to_dict()) == g


class TestInducedSubgraph:
    def test_triangle_of_k4(self):
        sub = induced_subgraph(k4(), {1, 2, 4})
        assert sub.edge_set == {1, 2, 4}
        assert set(sub.vertices) == {0, 1, 2}

    def test_empty(self):
        sub = induced_subgraph(k4(), set())
        assert sub.n == 0 and sub.m == 0

    def test_pan_path(self):
        sub = induced_subgraph(pan4(), {2, 4})
        assert set(sub.vertices) == {"v", "w", "c"}
        assert sub.incidence == {2: ("v", "w"), 4: ("c", "w")}

    def test_foreign_edge(self):
        with pytest.raises(DomainError):
            induced_subgraph(k3(), {9})


class TestCycles:
    def test_c4(self):
        assert cycles(c4f()) == fs({1, 2, 3, 4})

    def test_pan4(self):
        assert cycles(pan4()) == fs({1, 2, 3})

    def test_k4_counts(self):
        cs = cycles(k4())
        assert len(cs) == 7
        assert sorted(len(c) for c in cs) == [3, 3, 3, 3, 4, 4, 4]

    def test_parallel_pair_is_a_cycle(self):
        g = LabeledGraph({1: (0, 1), 2: (0, 1), 3: (1, 2)})
        assert cycles(g) == fs({1, 2})

    @settings(max_examples=60, deadline=None)
    @given(multigraphs())
    def test_matches_brute_force(self, g):
        assert cycles(g) == brute_cycles(g)

    def test_edge_cap(self):
        big = LabeledGraph({i: (0, i) for i in range(1, 30)})
        with pytest.raises(ConfigurationError):
            cycles(big)


class TestForests:
    def test_c4(self):
        assert spanning_forests(c4f()) == fs({1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4})

    def test_pan4(self):
        assert spanning_forests(pan4()) == fs({1, 2, 4}, {1, 3, 4}, {2, 3, 4})

    def test_k4_matrix_tree(self):
        assert len(spanning_forests(k4())) == 16 == matrix_tree_count(k4())

    @settings(max_examples=60, deadline=None)
    @given(multigraphs())
    def test_matches_brute_force(self, g):
        assert spanning_forests(g) == brute_maximal_forests(g)

    @settings(max_examples=40, deadline=None)
    @given(simple_graphs(connected=True, max_n=6))
    def test_tree_count_connected(self, g):
        assert len(spanning_forests(g)) == matrix_tree_count(g)

    @settings(max_examples=40, deadline=None)
    @given(simple_graphs())
    def test_maximal(self, g):
        from truncmatroid.graph import is_acyclic

        for f in spanning_forests(g):
            assert is_acyclic(g, f)
            for x in g.edge_set - f:
                assert not is_acyclic(g, f | {x})


class TestCycleFamilies:
    def test_pan4_quasi(self):
        assert quasi_hamiltonian_cycles(pan4()) == fs({1, 2, 3})

    def test_c4_has_no_quasi(self):
        assert quasi_hamiltonian_cycles(c4f()) == set()

    def test_k4_quasi_are_triangles(self):
        q = quasi_hamiltonian_cycles(k4())
        assert len(q) == 4 and all(len(c) == 3 for c in q)

    def test_k4_has_no_small(self):
        assert small_cycles(k4()) == set()

    def test_house_small_is_triangle(self):
        assert small_cycles(house()) == fs({1, 5, 6})

    def test_tree_has_no_small(self):
        assert small_cycles(path(4)) == set()

    @settings(max_examples=60, deadline=None)
    @given(simple_graphs())
    def test_partition(self, g):
        ham, quasi, small = hamiltonian_cycles(g), quasi_hamiltonian_cycles(g), small_cycles(g)
        assert not (ham & quasi or ham & small or quasi & small)
        assert ham | quasi | small == cycles(g)
        for c in quasi:
            assert induced_subgraph(g, c).n == g.n - 1


class TestEven:
    def test_cycle_is_even(self):
        for c in cycles(k4()):
            assert is_even(k4(), c)

    def test_diamond_triangles_sum(self):
        assert is_even(diamond(), sym_diff({1, 2, 3}, {3, 4, 5}))

    def test_pendant_edge(self):
        assert not is_even(pan4(), {4})

    def test_foreign(self):
        with pytest.raises(DomainError):
            is_even(k3(), {7})

    @settings(max_examples=60, deadline=None)
    @given(simple_graphs())
    def test_sum_of_cycles_is_even(self, g):
        cs = sorted(cycles(g), key=sorted)
        for y in cs:
            for z in cs:
                assert is_even(g, y ^ z)
        assert is_even(g, sym_diff(*cs))


class TestConnectivity:
    def test_k4_three_connected(self):
        assert connectivity_at_least(k4(), 3)

    def test_c4_not_three_connected(self):
        assert connectivity_at_least(c4f(), 2)
        assert not connectivity_at_least(c4f(), 3)

    def test_pan_cut_vertex(self):
        assert connectivity_at_least(pan4(), 1)
        assert not connectivity_at_least(pan4(), 2)

    def test_bad_k(self):
        with pytest.raises(DomainError):
            connectivity_at_least(k4(), 4)

    @settings(max_examples=60, deadline=None)
    @given(simple_graphs(max_n=6, max_m=12))
    def test_against_networkx(self, g):
        import networkx as nx

        h = nx_multigraph(g)
        h.add_nodes_from(g.vertices)
        kappa = nx.node_connectivity(nx.Graph(h))
        for k in (1, 2, 3):
            assert connectivity_at_least(g, k) == (kappa >= k and g.n > k)


class TestIsomorphism:
    def test_relabeled_pan(self):
        g = pan4()
        h = g.relabeled({x: x + 10 for x in g.labels})
        found = isomorphic(g, h)
        assert found is not None and is_isomorphism(g, h, *found)

    def test_pan_vs_cycle(self):
        assert isomorphic(pan4(), c4f()) is None

    def test_diamond_labelings(self):
        other = LabeledGraph({"a": ("p", "q"), "b": ("q", "r"), "c": ("r", "s"), "d": ("s", "p"), "e": ("p", "r")})
        found = isomorphic(diamond(), other)
        assert found is not None and is_isomorphism(diamond(), other, *found)

    @settings(max_examples=60, deadline=None)
    @given(simple_graphs(max_m=9), simple_graphs(max_m=9))
    def test_against_networkx(self, g, h):
        import networkx as nx

        expected = nx.is_isomorphic(nx.Graph(nx_multigraph(g)), nx.Graph(nx_multigraph(h))) and g.n == h.n
        found = isomorphic(g, h)
        assert (found is not None) == expected
        if found:
            assert is_isomorphism(g, h, *found)

    @settings(max_examples=30, deadline=None)
    @given(simple_graphs())
    def test_reflexive(self, g):
        assert isomorphic(g, g) is not None


class TestStrongIsomorphism:
    def test_renamed_vertex(self):
        g = pan4()
        h = g.renamed_vertices({"u": "u2", "v": "v", "w": "w", "c": "c"})
        assert strongly_isomorphic(g, h)

    def test_pan_vs_cycle(self):
        assert not strongly_isomorphic(pan4(), c4f())

    def test_k4_swapped_incidences(self):
        # edges 1 = 01 and 2 = 02 share vertex 0; no vertex map swaps just these two
        inc = k4().incidence
        inc[1], inc[2] = inc[2], inc[1]
        assert not strongly_isomorphic(k4(), LabeledGraph(inc))

    def test_ground_sets_must_agree(self):
        with pytest.raises(DomainError):
            strongly_isomorphic(k3(), k4())

    @settings(max_examples=40, deadline=None)
    @given(simple_graphs())
    def test_strong_implies_identity_isomorphism(self, g):
        h = g.renamed_vertices({v: ("r", v) for v in g.vertices})
        assert strongly_isomorphic(g, h)
        nu = {v: ("r", v) for v in g.vertices}
        assert is_isomorphism(g, h, nu, {x: x for x in g.labels})

    def test_stars_cover_each_edge_twice(self):
        stars = vertex_stars(k4())
        for x in k4().labels:
            assert sum(c for s, c in stars.items() if x in s) == 2
