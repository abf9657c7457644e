import pytest

from bipzagreb import moves
from bipzagreb.canon import is_isomorphic
from bipzagreb.constructions import chain_graph
from bipzagreb.graph import GraphError, diameter, is_bipartite, is_connected, layer_partition
from bipzagreb.indices import ExactRatio, Ordering, pi1, pi2, ratio_vs_one
from bipzagreb.moves import MoveConfig, RatioQuad


def _chain_ratio(index, before, after):
    fn = pi1 if index == "pi1" else pi2
    return ExactRatio(fn(chain_graph(before)), fn(chain_graph(after)))


class TestRelocate:
    def test_move_to_far_layer(self):
        g = chain_graph([1, 2, 2, 1, 1, 1])
        p = layer_partition(g, 0)
        u = min(p.layers[2])
        h = moves.relocate(g, p, u, 4)
        assert is_connected(h) and is_bipartite(h)
        assert layer_partition(h, 0).layer_sizes == [1, 2, 1, 1, 2, 1]
        assert diameter(h) == 5

    @pytest.mark.parametrize("s,t", [(2, 3), (1, 4), (3, 3)])
    def test_d2_move_rebuilds_chain(self, s, t):
        g = chain_graph([1, s, t])
        p = layer_partition(g, 0)
        u = min(p.layers[2])
        h = moves.relocate(g, p, u, 1)
        assert set(h.neighbors(u)) == (p.layers[0] | p.layers[2]) - {u}
        assert layer_partition(h, 0).layer_sizes == [1, s + 1, t - 1]
        assert is_isomorphic(h, chain_graph([1, s + 1, t - 1]))

    def test_singleton_source(self):
        g = chain_graph([1, 1, 2, 1])
        p = layer_partition(g, 0)
        with pytest.raises(GraphError, match="only member"):
            moves.relocate(g, p, 1, 2)

    def test_target_range(self):
        g = chain_graph([1, 2, 2, 1])
        p = layer_partition(g, 0)
        with pytest.raises(GraphError):
            moves.relocate(g, p, 1, 3)
        with pytest.raises(GraphError):
            moves.relocate(g, p, 1, 0)


class TestRatioD2:
    def test_pi1_value(self):
        r = moves.ratio_d2("pi1", 2, 3)
        assert r == ExactRatio(65536, 531441)
        assert ratio_vs_one(r) == Ordering.LESS

    def test_equal_sides(self):
        for k in range(1, 8):
            assert ratio_vs_one(moves.ratio_d2("pi1", k, k)) == Ordering.EQUAL
            assert ratio_vs_one(moves.ratio_d2("pi2", k, k)) == Ordering.EQUAL

    def test_pi2_value(self):
        r = moves.ratio_d2("pi2", 3, 2)
        assert r == ExactRatio(9 ** 9, 8 ** 8)
        assert ratio_vs_one(r) == Ordering.GREATER

    def test_sign_table(self):
        for index in ("pi1", "pi2"):
            for s in range(1, 11):
                for t in range(1, 11):
                    assert ratio_vs_one(moves.ratio_d2(index, s, t)) == Ordering((s > t) - (s < t))

    def test_matches_graphs(self):
        for index in ("pi1", "pi2"):
            for s in range(1, 8):
                for t in range(2, 8):
                    assert moves.ratio_d2(index, s, t) == _chain_ratio(index, [1, s, t], [1, s + 1, t - 1])

    def test_bad_index(self):
        with pytest.raises(ValueError):
            moves.ratio_d2("m1", 1, 1)


class TestRatioBalance:
    def test_examples(self):
        assert moves.ratio_balance("pi1", 1, 3) == ExactRatio(2 ** 2 * 4 ** 2 * 2 ** 6 * 4 ** 2, 3 ** 2 * 3 ** 4 * 3 ** 4 * 3 ** 2)
        assert moves.ratio_balance("pi1", 1, 3) == ExactRatio(65536, 531441)
        assert moves.ratio_balance("pi2", 1, 3) == ExactRatio(8 ** 8, 9 ** 9)
        assert ratio_vs_one(moves.ratio_balance("pi1", 2, 4)) == Ordering.LESS

    def test_always_below_one(self):
        for index in ("pi1", "pi2"):
            for s in range(1, 9):
                for t in range(s + 2, 13):
                    assert ratio_vs_one(moves.ratio_balance(index, s, t)) == Ordering.LESS

    def test_matches_graphs(self):
        for index in ("pi1", "pi2"):
            for s in range(1, 5):
                for t in range(s + 2, 8):
                    got = _chain_ratio(index, [1, 1, s, t, 1, 1], [1, 1, s + 1, t - 1, 1, 1])
                    assert moves.ratio_balance(index, s, t) == got

    def test_hypothesis_guard(self):
        with pytest.raises(ValueError):
            moves.ratio_balance("pi1", 2, 3)


class TestQuads:
    def test_pi1_case1_example(self):
        q = moves.ratio_quads("pi1-case1", MoveConfig(1, 1, 2, 2, 1, 1))
        assert q.A == (1 + 2) * 3 * 3 * 2 * (2 + 1)
        assert min(q.A, q.B, q.C, q.D) > 0

    def test_symmetric_config(self):
        for case in ("pi1-case1", "pi2-case1"):
            q = moves.ratio_quads(case, MoveConfig(2, 3, 4, 4, 3, 2))
            assert (q.A, q.B) == (q.C, q.D)

    def test_pi2_case1_matches_move(self):
        cfg = MoveConfig(1, 1, 2, 3, 1, 1)
        sizes, i, j = cfg.chain_sizes()
        g = chain_graph(sizes)
        p = layer_partition(g, 0)
        h = moves.relocate(g, p, min(p.layers[j]), i)
        q = moves.ratio_quads("pi2-case1", cfg)
        assert ExactRatio(q.A, q.B) == ExactRatio(pi2(g), pi2(h))

    def test_predicted_forms(self):
        cfg = MoveConfig(1, 2, 3, 2, 1, 2, case=2, mid=2, gap=2)
        q = moves.ratio_quads("pi1-case2", cfg)
        fwd, bwd = moves.predicted_ratios("pi1-case2", cfg)
        assert fwd == ExactRatio(q.A ** 2, q.B ** 2) and bwd == ExactRatio(q.C ** 2, q.D ** 2)
        assert moves.predicted_ratios("pi2-case2", q) == (ExactRatio(q.A, q.B), ExactRatio(q.C, q.D))

    def test_case_mismatch(self):
        with pytest.raises(ValueError):
            moves.ratio_quads("pi1-case2", MoveConfig(1, 1, 2, 2, 1, 1))
        with pytest.raises(ValueError):
            moves.ratio_quads("pi3-case1", MoveConfig(1, 1, 2, 2, 1, 1))

    def test_raw_sizes_agree(self):
        cfg = MoveConfig(2, 1, 3, 2, 2, 1, case=2, mid=3, gap=2)
        assert moves.ratio_quads("pi2-case2", cfg) == moves.quads_for_sizes("pi2-case2", 2, 1, 3, 2, 2, 1, mid=3)


class TestMoveConfig:
    @pytest.mark.parametrize("kwargs", [
        dict(m_im2=1, m_im1=0, m_i=2, m_j=2, m_jp1=1, m_jp2=1),
        dict(m_im2=1, m_im1=1, m_i=1, m_j=2, m_jp1=1, m_jp2=1),
        dict(m_im2=1, m_im1=1, m_i=2, m_j=2, m_jp1=1, m_jp2=1, case=2, mid=1, gap=2),
        dict(m_im2=1, m_im1=1, m_i=2, m_j=2, m_jp1=1, m_jp2=1, case=1, mid=2),
        dict(m_im2=1, m_im1=1, m_i=2, m_j=2, m_jp1=1, m_jp2=1, case=3),
        dict(m_im2=-1, m_im1=1, m_i=2, m_j=2, m_jp1=1, m_jp2=1),
    ])
    def test_rejects(self, kwargs):
        with pytest.raises(ValueError):
            MoveConfig(**kwargs)

    def test_chain_sizes(self):
        assert MoveConfig(3, 1, 2, 2, 1, 2).chain_sizes() == ([1, 3, 1, 2, 1, 1, 2, 1, 2], 3, 6)
        assert MoveConfig(0, 1, 2, 2, 1, 0, gap=3).chain_sizes() == ([1, 2, 1, 1, 2, 1], 1, 4)
        with pytest.raises(ValueError):
            MoveConfig(0, 2, 2, 2, 1, 1).chain_sizes()


class TestImplicationSweeps:
    # premise counts frozen from a direct evaluation of the quantities
    @pytest.mark.parametrize("case,checked,held", [
        ("pi1-case1", 32400, 14605), ("pi1-case2", 162000, 76101),
        ("pi2-case1", 32400, 15377), ("pi2-case2", 162000, 79156),
    ])
    def test_sweep(self, case, checked, held):
        c, h, bad = moves.claim_sweep(case)
        assert (c, h) == (checked, held)
        assert bad == []

    def test_counterexample_is_detectable(self):
        # a quad violating the implication must register as premise-true, conclusion-false
        q = RatioQuad(1, 2, 1, 3)
        _, premise, conclusion, *_ = moves._CLAIMS["pi1-case1"]
        assert premise(q) and not conclusion(q)


class TestMonotonicity:
    def test_examples(self):
        assert moves.prop21_holds(1, 2, 1)
        assert moves.prop22_holds(1, 2, 1)

    def test_sweep(self):
        out = moves.monotonicity_sweep(50)
        assert out == {"monotone-ratio": [], "monotone-power-ratio": []}
