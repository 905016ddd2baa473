import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockvpg.family import thin_spider
from blockvpg.graphs import (
    Graph,
    GraphInputError,
    complete_graph,
    connected_components,
    find_induced_copy,
    graphs_isomorphic,
    induced_subgraph,
    path_graph,
    star_graph,
)


def small_graphs(max_n=6):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=0, max_value=max_n))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        return Graph(n, [p for p, keep in zip(pairs, mask) if keep])

    return build()


class TestGraphType:
    def test_rejects_self_loop(self):
        with pytest.raises(GraphInputError):
            Graph(2, [(0, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphInputError):
            Graph(2, [(0, 2)])

    def test_deduplicates_edges(self):
        g = Graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.m == 1

    def test_adjacency_symmetric(self):
        g = path_graph(4)
        for u in range(4):
            for v in g.adj[u]:
                assert u in g.adj[v]


class TestInducedSubgraph:
    def test_complete_restriction(self):
        k4 = complete_graph(4)
        sub, back = induced_subgraph(k4, [0, 1, 2])
        assert sub == complete_graph(3)
        assert back == [0, 1, 2]

    def test_nonadjacent_pair(self):
        p3 = path_graph(3)
        sub, _ = induced_subgraph(p3, [0, 2])
        assert sub.n == 2 and sub.m == 0

    def test_spider_clique_restriction(self):
        n5 = thin_spider(5)
        sub, _ = induced_subgraph(n5, range(5))
        assert sub == complete_graph(5)

    def test_out_of_range(self):
        with pytest.raises(GraphInputError):
            induced_subgraph(path_graph(3), [0, 7])

    @given(small_graphs())
    def test_full_set_is_identity(self, g):
        sub, back = induced_subgraph(g, range(g.n))
        assert sub == g and back == list(range(g.n))


class TestConnectedComponents:
    def test_triangle(self):
        assert connected_components(complete_graph(3)) == [[0, 1, 2]]

    def test_isolated_vertices(self):
        assert connected_components(Graph(2)) == [[0], [1]]

    def test_spider_minus_clique_vertex(self):
        n5 = thin_spider(5)
        sub, back = induced_subgraph(n5, [v for v in range(10) if v != 0])
        comps = connected_components(sub)
        sizes = sorted(len(c) for c in comps)
        assert sizes == [1, 8]
        lone = next(c for c in comps if len(c) == 1)
        assert back[lone[0]] == 5  # the leaf that hung off the removed vertex

    @given(small_graphs())
    def test_partition(self, g):
        comps = connected_components(g)
        flat = [v for c in comps for v in c]
        assert sorted(flat) == list(range(g.n))
        assert len(set(flat)) == len(flat)


class TestFindInducedCopy:
    def test_triangle_in_k4(self):
        phi = find_induced_copy(complete_graph(3), complete_graph(4))
        assert phi is not None and len(set(phi.values())) == 3

    def test_triangle_not_in_tree(self):
        assert find_induced_copy(complete_graph(3), star_graph(5)) is None

    def test_no_spider5_in_one_step_member(self):
        from blockvpg.family import enumerate_family

        member = enumerate_family(19)[1]
        # every block of the 19-vertex member has at most 4 vertices, so it
        # cannot contain the 5-clique the spider needs
        assert find_induced_copy(thin_spider(5), member) is None

    @given(small_graphs(5), small_graphs(6))
    @settings(max_examples=60, deadline=None)
    def test_image_induces_pattern(self, pattern, host):
        phi = find_induced_copy(pattern, host)
        if phi is None:
            return
        assert len(set(phi.values())) == pattern.n
        for u in range(pattern.n):
            for v in range(u + 1, pattern.n):
                assert pattern.has_edge(u, v) == host.has_edge(phi[u], phi[v])


def test_graphs_isomorphic_relabeled_spider():
    g = thin_spider(3)
    perm = [3, 0, 5, 1, 4, 2]
    h = Graph(6, [(perm[u], perm[v]) for u, v in g.edges])
    assert graphs_isomorphic(g, h)
    assert not graphs_isomorphic(g, path_graph(6))
