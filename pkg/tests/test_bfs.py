import numpy as np
import pytest

import tricount as tc
from tricount.bfs import EdgeClass

from conftest import er_graph, from_pairs, star_graph


def classes_by_edge(g, lab):
    return {
        (int(u), int(v)): EdgeClass(c)
        for u, v, c in zip(g.edge_u, g.edge_v, lab.edge_class)
    }


class TestBfsLabel:
    def test_path_levels_and_tree(self):
        g = from_pairs(3, [(0, 1), (1, 2)])
        lab = tc.bfs_label(g)
        assert lab.level.tolist() == [0, 1, 2]
        assert set(classes_by_edge(g, lab).values()) == {EdgeClass.TREE}
        assert lab.components == 1
        assert lab.max_level == 2

    def test_k3_classification(self, k3):
        lab = tc.bfs_label(k3)
        assert lab.level.tolist() == [0, 1, 1]
        cls = classes_by_edge(k3, lab)
        assert cls[(0, 1)] == EdgeClass.TREE
        assert cls[(0, 2)] == EdgeClass.TREE
        assert cls[(1, 2)] == EdgeClass.HORIZONTAL

    def test_k4_cover(self, k4):
        lab = tc.bfs_label(k4)
        assert lab.level.tolist() == [0, 1, 1, 1]
        cover = tc.cover_edges(lab, k4)
        assert cover.as_set() == {(1, 2), (1, 3), (2, 3)}
        assert cover.ratio == pytest.approx(0.5)

    def test_strut_edges(self):
        # square plus a diagonal reached later: 0-1, 0-2, 1-3, 2-3; edge
        # (2,3) closes at equal level?  use a 5-vertex case with a strut
        g = from_pairs(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (1, 4)])
        lab = tc.bfs_label(g)
        cls = classes_by_edge(g, lab)
        # levels: 0:[0] 1:[1,2] 2:[3,4]; (2,3) is a strut (3's tree parent is 1)
        assert lab.level.tolist() == [0, 1, 1, 2, 2]
        assert cls[(2, 3)] == EdgeClass.STRUT
        assert cls[(3, 4)] == EdgeClass.HORIZONTAL

    def test_every_edge_classified_once(self, small_corpus):
        for _, g in small_corpus:
            lab = tc.bfs_label(g)
            assert len(lab.edge_class) == g.m
            assert set(np.unique(lab.edge_class)) <= {0, 1, 2}

    def test_level_property(self, small_corpus):
        for _, g in small_corpus:
            lab = tc.bfs_label(g)
            if g.m:
                diff = np.abs(
                    lab.level[g.edge_u.astype(np.int64)]
                    - lab.level[g.edge_v.astype(np.int64)]
                )
                assert int(diff.max()) <= 1

    def test_components(self):
        # {0,1}, {2,3,4}, isolated {5}
        g = from_pairs(6, [(0, 1), (2, 3), (3, 4)])
        assert tc.bfs_label(g).components == 3


class TestCoverEdges:
    def test_star_is_triangle_free(self):
        g = star_graph(4)
        cover = tc.cover_edges(tc.bfs_label(g), g)
        assert len(cover) == 0 and cover.ratio == 0.0
        assert tc.verify_cover(g, cover)

    def test_karate_ratio_close_to_published(self, karate):
        cover = tc.cover_edges(tc.bfs_label(karate), karate)
        assert cover.ratio == pytest.approx(0.359, abs=0.10)

    def test_mismatched_labeling_rejected(self, karate, k4):
        lab = tc.bfs_label(k4)
        with pytest.raises(ValueError, match="match"):
            tc.cover_edges(lab, karate)

    def test_cover_bound_connected(self, small_corpus):
        # horizontal edges exclude the n-1 tree edges of a connected graph
        for _, g in small_corpus:
            lab = tc.bfs_label(g)
            if g.m == 0 or lab.components != 1:
                continue
            cover = tc.cover_edges(lab, g)
            assert cover.ratio <= (g.m - g.n + 1) / g.m + 1e-12


class TestVerifyCover:
    def test_k4(self, k4):
        cover = tc.cover_edges(tc.bfs_label(k4), k4)
        assert tc.verify_cover(k4, cover)

    def test_k3_single_edge(self, k3):
        cover = tc.cover_edges(tc.bfs_label(k3), k3)
        assert len(cover) == 1
        assert tc.verify_cover(k3, cover)

    def test_random_graph(self):
        g = er_graph(40, 0.2, seed=11)
        cover = tc.cover_edges(tc.bfs_label(g), g)
        assert tc.verify_cover(g, cover)

    def test_detects_non_cover(self, k4):
        # an empty set cannot cover K4's triangles
        bogus = tc.CoverEdgeSet(edges=np.empty((0, 2), dtype=np.int64), ratio=0.0)
        assert not tc.verify_cover(k4, bogus)

    def test_rejects_out_of_range(self, k3):
        bogus = tc.CoverEdgeSet(edges=np.array([[0, 9]]), ratio=0.1)
        with pytest.raises(ValueError):
            tc.verify_cover(k3, bogus)

    def test_lemma_counts_on_corpus(self, small_corpus):
        for name, g in small_corpus:
            if g.n > 100:
                continue
            cover = tc.cover_edges(tc.bfs_label(g), g)
            assert tc.verify_cover(g, cover), name
