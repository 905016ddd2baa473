import pytest

from blockvpg.blocks import bc_canonical_form, decompose, validate_block_graph
from blockvpg.family import (
    ProcedureStep,
    apply_procedure,
    check_minimality,
    check_proposition,
    enumerate_family,
    thin_spider,
)
from blockvpg.graphs import GraphInputError, complete_graph, induced_subgraph
from blockvpg.verify import find_induced_f_member


class TestThinSpider:
    def test_size3(self):
        g = thin_spider(3)
        assert (g.n, g.m) == (6, 6)

    def test_size5(self):
        g = thin_spider(5)
        assert (g.n, g.m) == (10, 15)

    def test_decomposition(self):
        d = decompose(thin_spider(5))
        assert len(d.blocks) == 6 and len(d.cutpoints) == 5

    def test_too_small(self):
        with pytest.raises(GraphInputError):
            thin_spider(1)


class TestApplyProcedure:
    def test_on_spider5(self):
        n5 = thin_spider(5)
        out = apply_procedure(n5, ProcedureStep((0, 1, 2, 3), 0, 1))
        assert out.n == 19
        assert bc_canonical_form(out) == bc_canonical_form(enumerate_family(19)[1])

    def test_every_choice_on_spider5_is_isomorphic(self):
        n5 = thin_spider(5)
        forms = set()
        from itertools import combinations

        for h in combinations(range(5), 4):
            for v1, v2 in combinations(h, 2):
                forms.add(bc_canonical_form(apply_procedure(n5, ProcedureStep(h, v1, v2))))
        assert len(forms) == 1

    def test_vertex_delta_is_nine(self):
        g = thin_spider(5)
        for _ in range(3):
            d = decompose(g)
            step = next(
                ProcedureStep(h, vs[0], vs[1])
                for h in _four_sets(g, d)
                for vs in [_two_cuts_in(d, h)]
                if len(vs) >= 2
            )
            nxt = apply_procedure(g, step)
            assert nxt.n == g.n + 9
            g = nxt

    def test_rejects_non_complete_target(self):
        n5 = thin_spider(5)
        with pytest.raises(GraphInputError):
            apply_procedure(n5, ProcedureStep((0, 1, 2, 5), 0, 1))

    def test_rejects_non_two_cutpoint(self):
        member = enumerate_family(19)[1]
        d = decompose(member)
        hub = next(c for c in d.cutpoints if len(d.blocks_of[c]) == 3)
        block = next(b for b in d.blocks if hub in b and len(b) == 4)
        others = [v for v in block if v != hub]
        with pytest.raises(GraphInputError):
            apply_procedure(member, ProcedureStep(tuple(block), hub, others[0]))


def _four_sets(g, d):
    from itertools import combinations

    for b in d.blocks:
        if len(b) >= 4:
            yield from combinations(b, 4)


def _two_cuts_in(d, h):
    from blockvpg.blocks import is_two_cutpoint

    return [c for c in h if is_two_cutpoint(d, c)]


class TestEnumerateFamily:
    def test_bound_18_only_base(self):
        members = enumerate_family(18)
        assert len(members) == 1 and members[0].n == 10

    def test_bound_19(self):
        members = enumerate_family(19)
        assert [m.n for m in members] == [10, 19]

    def test_bound_28(self):
        assert [m.n for m in enumerate_family(28)] == [10, 19, 28]

    def test_counts_by_level_regression(self):
        # member counts per application count, frozen from the enumeration;
        # the k-application members correspond to the unlabeled trees on k
        # nodes with maximum degree 3 (triangles as edges between the
        # 3-fold cutpoints), which independently gives 1, 1, 1, 1, 2
        members = enumerate_family(46)
        by_n = {}
        for m in members:
            by_n[m.n] = by_n.get(m.n, 0) + 1
        assert by_n == {10: 1, 19: 1, 28: 1, 37: 1, 46: 2}

    def test_members_are_block_graphs(self):
        for m in enumerate_family(46):
            assert validate_block_graph(m) is None

    def test_pairwise_non_isomorphic(self):
        forms = [bc_canonical_form(m) for m in enumerate_family(46)]
        assert len(forms) == len(set(forms))


class TestCheckProposition:
    def test_one_step_counts(self):
        member = enumerate_family(19)[1]
        report = check_proposition(member, 1)
        assert report.ok, report.failures
        assert report.counts == {
            "blocks": 12,
            "endblocks": 9,
            "almost_endblocks": 3,
            "internal_blocks": 0,
            "cutpoints": 10,
            "cutpoints_3": 1,
            "cutpoints_2": 9,
            "vertices": 19,
        }

    def test_two_step_counts(self):
        member = enumerate_family(28)[2]
        report = check_proposition(member, 2)
        assert report.ok, report.failures
        assert report.counts["blocks"] == 18
        assert report.counts["cutpoints"] == 15
        assert report.counts["vertices"] == 28

    def test_rejects_base_member(self):
        with pytest.raises(GraphInputError):
            check_proposition(thin_spider(5), 0)

    def test_reports_failures_with_witness(self):
        report = check_proposition(thin_spider(5), 1)
        assert not report.ok
        assert any("item" in f for f in report.failures)


class TestCheckMinimality:
    def test_base_member(self):
        assert check_minimality(thin_spider(5), find_induced_f_member)

    def test_one_step_member(self):
        assert check_minimality(enumerate_family(19)[1], find_induced_f_member)

    def test_k5_with_four_pendants_has_no_member(self):
        n5 = thin_spider(5)
        sub, _ = induced_subgraph(n5, range(9))  # drop one leaf
        assert find_induced_f_member(sub) is None

    def test_rejects_non_block_graph(self):
        from blockvpg.graphs import cycle_graph

        with pytest.raises(GraphInputError):
            check_minimality(cycle_graph(4), find_induced_f_member)
