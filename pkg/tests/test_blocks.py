import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockvpg.blocks import (
    BlockClass,
    bc_canonical_form,
    classify_block,
    cutpoint_multiplicity,
    decompose,
    is_two_cutpoint,
    validate_block_graph,
)
from blockvpg.family import enumerate_family, thin_spider
from blockvpg.graphs import (
    Graph,
    GraphInputError,
    complete_graph,
    cycle_graph,
    graphs_isomorphic,
    path_graph,
    star_graph,
)

from corpus import random_connected_block_graph


class TestDecompose:
    def test_path(self):
        d = decompose(path_graph(3))
        assert d.blocks == ((0, 1), (1, 2))
        assert d.cutpoints == (1,)

    def test_k4_single_block(self):
        d = decompose(complete_graph(4))
        assert d.blocks == ((0, 1, 2, 3),)
        assert d.cutpoints == ()

    def test_spider5(self):
        d = decompose(thin_spider(5))
        assert len(d.blocks) == 6
        assert d.cutpoints == (0, 1, 2, 3, 4)
        sizes = sorted(len(b) for b in d.blocks)
        assert sizes == [2, 2, 2, 2, 2, 5]

    def test_single_vertex(self):
        d = decompose(Graph(1))
        assert d.blocks == ((0,),)

    def test_rejects_disconnected(self):
        with pytest.raises(GraphInputError):
            decompose(Graph(3, [(0, 1)]))

    def test_bc_tree_shape(self):
        # bipartite tree: #edges = #blocks + #cutpoints - 1 on a connected graph
        rng = random.Random(5)
        for _ in range(25):
            g = random_connected_block_graph(rng.randint(2, 30), rng)
            d = decompose(g)
            assert len(d.bc_edges()) == len(d.blocks) + len(d.cutpoints) - 1

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=40, deadline=None)
    def test_block_sizes_sum(self, seed):
        # tree-like block structure: sum of (|block| - 1) = n - 1
        rng = random.Random(seed)
        g = random_connected_block_graph(rng.randint(1, 40), rng)
        d = decompose(g)
        assert sum(len(b) - 1 for b in d.blocks) == max(g.n - 1, 0) or g.n == 1

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=40, deadline=None)
    def test_at_least_two_endblocks(self, seed):
        rng = random.Random(seed)
        g = random_connected_block_graph(rng.randint(3, 40), rng)
        d = decompose(g)
        if len(d.blocks) >= 2:
            ends = sum(
                1 for i in range(len(d.blocks))
                if classify_block(d, i) is BlockClass.ENDBLOCK
            )
            assert ends >= 2


class TestValidateBlockGraph:
    def test_tree_ok(self):
        assert validate_block_graph(star_graph(6)) is None

    def test_c4_witness(self):
        w = validate_block_graph(cycle_graph(4))
        assert w is not None
        u, v = w.nonadjacent
        assert u in w.block and v in w.block
        assert not cycle_graph(4).has_edge(u, v)

    def test_diamond_witness(self):
        diamond = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        w = validate_block_graph(diamond)
        assert w is not None
        assert set(w.nonadjacent) == {2, 3}


class TestClassifyBlock:
    def test_spider5_clique_is_internal(self):
        # every cutpoint of the 5-clique touches only pendant endblocks, so
        # the almost-endblock count is zero and the clique falls through to
        # the internal bucket
        g = thin_spider(5)
        d = decompose(g)
        big = next(i for i, b in enumerate(d.blocks) if len(b) == 5)
        assert classify_block(d, big) is BlockClass.INTERNAL

    def test_one_step_member_spider_blocks_are_almost_endblocks(self):
        member = enumerate_family(19)[1]
        d = decompose(member)
        four_blocks = [i for i, b in enumerate(d.blocks) if len(b) == 4]
        assert len(four_blocks) == 3
        assert all(
            classify_block(d, i) is BlockClass.ALMOST_ENDBLOCK for i in four_blocks
        )

    def test_pendant_edge_is_endblock(self):
        d = decompose(path_graph(3))
        assert classify_block(d, 0) is BlockClass.ENDBLOCK
        assert classify_block(d, 1) is BlockClass.ENDBLOCK


class TestCutpointMultiplicity:
    def test_path_middle(self):
        d = decompose(path_graph(3))
        assert cutpoint_multiplicity(d, 1) == 2

    def test_one_step_member_hub(self):
        member = enumerate_family(19)[1]
        d = decompose(member)
        hubs = [c for c in d.cutpoints if cutpoint_multiplicity(d, c) == 3]
        assert len(hubs) == 1

    def test_star_center(self):
        d = decompose(star_graph(4))
        assert cutpoint_multiplicity(d, 0) == 4

    def test_non_cutpoint_rejected(self):
        d = decompose(path_graph(3))
        with pytest.raises(GraphInputError):
            cutpoint_multiplicity(d, 0)

    def test_two_cutpoint_needs_endblock(self):
        # middle vertex of two triangles sharing it: two blocks, neither an
        # endblock once pendants hang off every other vertex
        edges = [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4),
                 (0, 5), (1, 6), (3, 7), (4, 8)]
        g = Graph(9, edges)
        d = decompose(g)
        assert cutpoint_multiplicity(d, 2) == 2
        assert not is_two_cutpoint(d, 2)


class TestCanonicalForm:
    def test_relabeling_invariant(self):
        rng = random.Random(99)
        for _ in range(30):
            g = random_connected_block_graph(rng.randint(1, 25), rng)
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
            assert bc_canonical_form(g) == bc_canonical_form(h)

    def test_distinguishes_small_graphs(self):
        forms = {
            bc_canonical_form(g)
            for g in (path_graph(4), star_graph(3), complete_graph(4), thin_spider(2))
        }
        assert len(forms) == 4

    def test_agrees_with_exhaustive_isomorphism(self):
        rng = random.Random(3)
        pool = [random_connected_block_graph(rng.randint(2, 7), rng) for _ in range(40)]
        for a in pool[:12]:
            for b in pool[:12]:
                same_form = bc_canonical_form(a) == bc_canonical_form(b)
                assert same_form == graphs_isomorphic(a, b)

    def test_rejects_non_block_graph(self):
        with pytest.raises(GraphInputError):
            bc_canonical_form(cycle_graph(4))
