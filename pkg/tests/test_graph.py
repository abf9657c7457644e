import networkx as nx
import pytest
from conftest import random_graph, to_nx
from hypothesis import given, settings
from hypothesis import strategies as st

from bipzagreb.constructions import chain_graph, complete_bipartite, path
from bipzagreb.graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    bipartition,
    consecutive_layers_complete,
    diameter,
    diametral_root,
    distances_from,
    eccentricity,
    from_edge_list,
    is_bipartite,
    is_connected,
    layer_partition,
    layers_independent,
)
from bipzagreb.oracle import EnumSpec, enumerate_bipartite_connected


def cycle(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


@st.composite
def graphs(draw, max_n=8, connected=False):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        chosen = list(chosen) + [(i, i + 1) for i in range(n - 1)]
    return from_edge_list(n, chosen)


class TestFromEdgeList:
    def test_k2(self):
        g = from_edge_list(2, [(0, 1)])
        assert g.edges() == [(0, 1)] and g.degrees() == [1, 1]

    def test_p4(self):
        g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
        assert g.edges() == [(0, 1), (1, 2), (2, 3)]

    def test_duplicates_collapse(self):
        assert from_edge_list(3, [(0, 1), (1, 0), (0, 1)]).m == 1

    def test_loop_rejected(self):
        with pytest.raises(GraphError, match="loop"):
            from_edge_list(3, [(0, 1), (1, 1)])

    @pytest.mark.parametrize("edge", [(0, 3), (-1, 0)])
    def test_out_of_range(self, edge):
        with pytest.raises(GraphError):
            from_edge_list(3, [edge])

    def test_asymmetric_rows_rejected(self):
        with pytest.raises(GraphError, match="asymmetric"):
            Graph(2, (0b10, 0))


class TestConnectivity:
    def test_examples(self):
        assert is_connected(path(4))
        assert not is_connected(from_edge_list(3, [(0, 1)]))
        assert is_connected(from_edge_list(2, [(0, 1)]))

    @given(graphs())
    def test_matches_networkx(self, g):
        assert is_connected(g) == nx.is_connected(to_nx(g))


class TestBipartition:
    def test_c4(self):
        a, b = bipartition(cycle(4))
        assert (len(a), len(b)) == (2, 2) and 0 in a

    def test_triangle(self):
        assert bipartition(cycle(3)) is None

    def test_k23_smaller_side_first(self):
        a, b = bipartition(complete_bipartite(3, 2))
        assert (len(a), len(b)) == (2, 3)

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            bipartition(from_edge_list(3, [(0, 1)]))

    @given(graphs(connected=True))
    def test_matches_networkx(self, g):
        assert is_bipartite(g) == nx.is_bipartite(to_nx(g))


class TestDistances:
    def test_examples(self):
        assert diameter(path(4)) == 3
        assert diameter(complete_bipartite(3, 3)) == 2
        assert diameter(chain_graph([1, 1, 2, 2, 1, 1])) == 5

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            diameter(from_edge_list(3, [(0, 1)]))
        with pytest.raises(DisconnectedGraphError):
            eccentricity(from_edge_list(3, [(0, 1)]), 0)

    @settings(max_examples=60)
    @given(graphs(connected=True))
    def test_against_networkx(self, g):
        h = to_nx(g)
        assert diameter(g) == nx.diameter(h)
        assert diameter(g) == max(eccentricity(g, v) for v in range(g.n))
        d0 = distances_from(g, 0)
        assert d0 == [nx.shortest_path_length(h, 0, v) for v in range(g.n)]
        for v in range(g.n):
            assert distances_from(g, v)[0] == d0[v]


class TestLayering:
    def test_p4_endpoint(self):
        assert layer_partition(path(4), 0).layer_sizes == [1, 1, 1, 1]

    def test_k23_from_degree3_vertex(self):
        g = complete_bipartite(2, 3)  # vertices 0, 1 have degree 3
        assert layer_partition(g, 0).layer_sizes == [1, 3, 1]

    @pytest.mark.parametrize("root", range(6))
    def test_c6(self, root):
        g = cycle(6)
        p = layer_partition(g, root)
        assert p.layer_sizes == [1, 2, 2, 1]
        assert not consecutive_layers_complete(g, p)
        assert layers_independent(g, p)

    def test_c5_not_independent(self):
        g = cycle(5)
        assert all(not layers_independent(g, layer_partition(g, r)) for r in range(5))

    def test_chain_complete(self):
        g = chain_graph([1, 2, 2])
        assert consecutive_layers_complete(g, layer_partition(g, 0))
        assert consecutive_layers_complete(path(4), layer_partition(path(4), 0))

    def test_k2(self):
        g = path(2)
        assert layers_independent(g, layer_partition(g, 0))

    def test_diametral_root(self):
        g = chain_graph([1, 1, 2, 2, 1])
        r = diametral_root(g)
        assert eccentricity(g, r) == diameter(g)
        assert layer_partition(g, r).depth == diameter(g)

    @settings(max_examples=80)
    @given(graphs(connected=True), st.data())
    def test_bfs_properties(self, g, data):
        root = data.draw(st.integers(0, g.n - 1))
        p = layer_partition(g, root)
        assert sum(p.layer_sizes) == g.n
        assert p.layers[0] == frozenset({root})
        assert p.depth == eccentricity(g, root)
        dist = distances_from(g, root)
        for v in range(g.n):
            assert p.layer_of(v) == dist[v]
        for u, v in g.edges():
            assert abs(p.layer_of(u) - p.layer_of(v)) <= 1

    def test_bipartite_layers_independent_exhaustive(self):
        for n in range(2, 8):
            for g in enumerate_bipartite_connected(EnumSpec(n)):
                for root in range(g.n):
                    assert layers_independent(g, layer_partition(g, root))


def test_relabel_is_isomorphic(rng):
    for _ in range(20):
        g = random_graph(rng, 7)
        perm = list(range(7))
        rng.shuffle(perm)
        assert nx.is_isomorphic(to_nx(g), to_nx(g.relabel(perm)))
