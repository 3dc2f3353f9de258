import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from girthlab.errors import NotBipartite
from girthlab.graph import (
    BipartiteGraph,
    Graph,
    bipartition,
    chromatic_number,
    contains_cycle,
    cycle_spectrum,
    diameter,
    e_between,
    girth,
    is_bipartite,
    is_family_free,
    max_bipartite_local,
    neighborhood_layers,
    odd_cycle_run,
    peel_min_degree,
)

INF = math.inf


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs),
                         max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


class TestGraphBasics:
    def test_dedupe_and_symmetry(self):
        g = Graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.m == 1
        assert g.adj[0] == (1,) and g.adj[1] == (0,)

    def test_rejects_loops_and_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(2, [(0, 5)])

    def test_bipartite_validation(self):
        with pytest.raises(NotBipartite):
            BipartiteGraph(2, [(0, 1)], [0, 0])
        b = BipartiteGraph(3, [(0, 2), (1, 2)], [0, 0, 1])
        assert b.part_x == (0, 1) and b.part_y == (2,)


class TestLayers:
    def test_star_center(self):
        g = Graph(5, [(0, i) for i in range(1, 5)])
        layers = neighborhood_layers(g, 0, 2)
        assert layers[0] == (0,)
        assert layers[1] == (1, 2, 3, 4)
        assert layers[2] == ()

    def test_heawood_layer_profile(self, heawood):
        for v in range(heawood.n):
            sizes = [len(x) for x in neighborhood_layers(heawood, v, 3)]
            assert sizes == [1, 3, 6, 4]

    def test_disconnected(self):
        g = Graph(4, [(0, 1)])
        layers = neighborhood_layers(g, 3, 3)
        assert [len(x) for x in layers] == [1, 0, 0, 0]

    @given(graphs(max_n=9), st.integers(0, 8))
    @settings(max_examples=60, deadline=None)
    def test_layers_partition_component(self, g, v):
        v = v % g.n
        layers = neighborhood_layers(g, v, g.n)
        flat = [u for layer in layers for u in layer]
        assert len(flat) == len(set(flat))
        # consecutive-layer edges only
        index = {u: r for r, layer in enumerate(layers) for u in layer}
        for u, w in g.edges():
            if u in index and w in index:
                assert abs(index[u] - index[w]) <= 1


class TestGirthAndCycles:
    def test_known_girths(self, heawood, tutte_coxeter):
        assert girth(heawood) == 6
        assert girth(tutte_coxeter) == 8
        assert girth(path_graph(5)) == INF
        assert girth(cycle_graph(5)) == 5
        assert girth(complete_graph(4)) == 3

    def test_girth_matches_spectrum_minimum(self):
        for g in [cycle_graph(7), complete_graph(5), Graph(6, [(0, 1)]),
                  Graph(8, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6),
                            (6, 3)])]:
            spec = cycle_spectrum(g, g.n)
            expected = min(spec) if spec else INF
            assert girth(g) == expected

    def test_k4_spectrum(self):
        assert cycle_spectrum(complete_graph(4), 4) == frozenset({3, 4})

    def test_heawood_spectrum(self, heawood):
        assert cycle_spectrum(heawood, 14) == frozenset({6, 8, 10, 12, 14})

    def test_contains_cycle(self, heawood):
        assert contains_cycle(complete_graph(4), 3)
        assert not contains_cycle(heawood, 5)
        assert contains_cycle(heawood, 6)

    def test_family_free(self, heawood, tutte_coxeter):
        assert is_family_free(heawood, 2)
        assert not is_family_free(heawood, 3)
        assert is_family_free(tutte_coxeter, 3, k=7)
        assert is_family_free(path_graph(6), 5, k=3)

    def test_odd_cycle_run(self):
        # wheel-like dense graph: odd cycles of many lengths
        g = complete_graph(9)
        assert odd_cycle_run(g, 3, 5) == 1
        assert odd_cycle_run(path_graph(6), 3, 5) is None

    @given(graphs(max_n=8))
    @settings(max_examples=40, deadline=None)
    def test_spectrum_against_permutation_oracle(self, g):
        """Exhaustive oracle: cycles = closed vertex tours of distinct
        vertices with all consecutive adjacencies."""
        expected = set()
        for k in range(3, g.n + 1):
            found = False
            for combo in itertools.permutations(range(g.n), k):
                if combo[0] != min(combo):
                    continue
                if all(
                    g.has_edge(combo[i], combo[(i + 1) % k]) for i in range(k)
                ):
                    found = True
                    break
            if found:
                expected.add(k)
        assert set(cycle_spectrum(g, max(3, g.n))) == expected


class TestBipartition:
    def test_even_cycle(self):
        assert is_bipartite(cycle_graph(6))
        assert not is_bipartite(cycle_graph(5))

    def test_bipartition_colors(self):
        side = bipartition(path_graph(4))
        assert side == (0, 1, 0, 1)


class TestMaxBipartiteLocal:
    def test_bipartite_input_is_fixed_point(self, heawood):
        h = max_bipartite_local(heawood)
        assert h.m == heawood.m

    def test_triangle(self):
        h = max_bipartite_local(complete_graph(3))
        assert h.m == 2

    def test_half_degree_guarantee_polarity(self):
        from girthlab.geometry import polarity_graph

        g = polarity_graph(3)
        h = max_bipartite_local(g)
        assert h.m >= g.m / 2
        for v in range(g.n):
            assert h.degree(v) >= g.degree(v) / 2

    @given(graphs(max_n=10))
    @settings(max_examples=50, deadline=None)
    def test_half_degree_guarantee_random(self, g):
        h = max_bipartite_local(g)
        for v in range(g.n):
            assert 2 * h.degree(v) >= g.degree(v)


class TestPeel:
    def test_no_isolated_threshold_zero(self, heawood):
        res = peel_min_degree(heawood, 0)
        assert res.core.m == heawood.m and res.trace == ()

    def test_path_cascades(self):
        res = peel_min_degree(path_graph(4), 1)
        assert res.core.n == 0
        assert len(res.trace) == 4

    def test_regular_untouched(self, heawood):
        res = peel_min_degree(heawood, 2)
        assert res.core.n == 14

    @given(graphs(max_n=10), st.integers(0, 4))
    @settings(max_examples=50, deadline=None)
    def test_replaying_trace_reproduces_core(self, g, threshold):
        res = peel_min_degree(g, threshold)
        assert res.core.min_degree() > threshold or res.core.n == 0
        alive = set(range(g.n))
        for v in res.trace:
            deg = sum(1 for u in g.adj[v] if u in alive)
            assert deg <= threshold
            alive.discard(v)
        assert tuple(sorted(alive)) == res.kept


class TestChromatic:
    def brute_force_colorable(self, g, k):
        for assign in itertools.product(range(k), repeat=g.n):
            if all(assign[u] != assign[v] for u, v in g.edges()):
                return True
        return False

    def test_bipartite_is_two(self, heawood):
        assert chromatic_number(heawood) == 2

    def test_odd_cycle_three(self):
        assert chromatic_number(cycle_graph(7)) == 3

    def test_polarity_two_matches_brute_force(self):
        from girthlab.geometry import polarity_graph

        g = polarity_graph(2)
        chi = chromatic_number(g)
        assert not self.brute_force_colorable(g, chi - 1)
        assert self.brute_force_colorable(g, chi)

    @given(graphs(max_n=8))
    @settings(max_examples=40, deadline=None)
    def test_matches_brute_force(self, g):
        chi = chromatic_number(g)
        assert self.brute_force_colorable(g, chi)
        if chi > 1:
            assert not self.brute_force_colorable(g, chi - 1)


class TestEBetween:
    def test_parts_give_edge_count(self, heawood):
        assert e_between(heawood, heawood.part_x, heawood.part_y) == heawood.m

    def test_whole_vertex_set_doubles(self, heawood):
        v = range(heawood.n)
        assert e_between(heawood, v, v) == 2 * heawood.m

    def test_disjoint_nonadjacent(self):
        g = Graph(4, [(0, 1)])
        assert e_between(g, [2], [3]) == 0

    @given(graphs(max_n=9))
    @settings(max_examples=40, deadline=None)
    def test_self_pairs_double_induced_edges(self, g):
        S = [v for v in range(g.n) if v % 2 == 0]
        induced = sum(1 for u, v in g.edges() if u in S and v in S)
        assert e_between(g, S, S) == 2 * induced


def test_diameter(heawood, tutte_coxeter):
    assert diameter(heawood) == 3
    assert diameter(tutte_coxeter) == 4
    assert diameter(Graph(3, [(0, 1)])) == INF
