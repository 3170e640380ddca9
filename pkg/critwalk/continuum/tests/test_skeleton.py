# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
import os
import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.stats import ks_2samp
from .. import ContinuumException
from ..excursion import ExcursionGrid, sample_excursion, crt_pseudometric
from ..skeleton import (MetricTreeSkeleton, reduced_tree_from_excursion, line_breaking,
                        skeleton_from_reduced, _reduced_from_points)
from ...trees.ordered import OrderedRootedTree
from ...trees.reduced import reduce


class TestSkeleton(object):
    """Test the functions in critwalk.continuum.skeleton.
    """

    def setup_method(self):
        self.tent = ExcursionGrid([0, 1, 2, 3, 2, 3, 2, 1, 2, 1, 0])

    def teardown_method(self):
        pass

    def test_skeleton(self):
        s = MetricTreeSkeleton([-1, 2, 0, 2], [0, 1.0, 2.0, 0.5], [1, 3])
        assert s.node_count == 4
        assert s.leaf_count == 2
        assert_allclose(s.total_length, 3.5)
        assert_allclose(s.root_distance, [0, 2.0, 3.0, 2.5])
        assert_allclose(s.leaf_distance(0, 1), 1.5)
        assert_allclose(s.leaf_distance(1, 1), 0.0)
        edge, offset = s.locate([0.0, 0.5, 1.0])
        assert_allclose(s.relative_position(edge, offset), [0.0, 0.5, 1.0])
        with pytest.raises(ValueError):
            MetricTreeSkeleton([-1, 0], [0, 0.0], [1])
        with pytest.raises(ValueError):
            MetricTreeSkeleton([-1, 0], [0, 1.0, 1.0], [1])

    def test_tent(self):
        parent, height, leaves = _reduced_from_points(self.tent.values, np.array([3, 5, 8]))
        lengths = height - np.where(parent >= 0, height[np.maximum(parent, 0)], 0.0)
        s = MetricTreeSkeleton(parent, lengths, leaves)
        assert s.node_count == 6
        assert s.leaf_count == 3
        assert_allclose(s.total_length, 5.0)
        for (i, a), (j, b) in [((0, 0.3), (1, 0.5)), ((0, 0.3), (2, 0.8)), ((1, 0.5), (2, 0.8))]:
            assert_allclose(s.leaf_distance(i, j), crt_pseudometric(self.tent, a, b))

    def test_from_excursion(self):
        rng = np.random.default_rng(21)
        w = sample_excursion(512, rng)
        s = reduced_tree_from_excursion(w, 1, rng)
        assert s.node_count == 2
        assert np.isclose(w.values, s.total_length).any()
        s = reduced_tree_from_excursion(w, 5, rng, scale=2.0)
        assert s.leaf_count == 5
        assert (s.lengths[1:] > 0).all()
        heights = s.root_distance[s.leaves]
        assert all(np.isclose(2.0 * w.values, h).any() for h in heights)
        flat = ExcursionGrid(np.concatenate(([0.0], np.ones(3), [0.0])))
        with pytest.raises(ContinuumException):
            reduced_tree_from_excursion(flat, 3, rng, max_tries=3)
        with pytest.raises(ValueError):
            reduced_tree_from_excursion(w, 0)

    def test_line_breaking(self):
        rng = np.random.default_rng(22)
        c1 = np.array([line_breaking(1, rng).total_length for k in range(4000)])
        p = (c1 > 1).mean()
        assert abs(p - np.exp(-0.5)) < 4 * np.sqrt(p * (1 - p) / c1.size)
        s = line_breaking(6, rng)
        assert s.leaf_count == 6
        assert s.node_count == 12
        with pytest.raises(ValueError):
            line_breaking(0)

    def test_two_routes(self):
        rng = np.random.default_rng(23)
        a = [line_breaking(2, rng).total_length for k in range(300)]
        b = [reduced_tree_from_excursion(sample_excursion(1024, rng), 2, rng, scale=2.0).total_length
             for k in range(300)]
        assert ks_2samp(a, b).pvalue > 1e-3

    def test_from_reduced(self):
        tree = OrderedRootedTree.from_parentheses('(((()())())())')
        anchors = [3, 4, 6]
        index = reduce(tree, anchors)
        s, edges, offsets = skeleton_from_reduced(tree, index, anchors)
        assert s.leaf_count == 3
        assert_allclose(s.total_length, index.members.size - 1)
        for i in range(3):
            for j in range(3):
                assert_allclose(s.leaf_distance(i, j), tree.distance(anchors[i], anchors[j]))
        assert_allclose(s.point_distance(edges, offsets), tree.depth[index.members])

    def test_export(self, tmpdir):
        filename = os.path.join(str(tmpdir), 'skeleton.csv')
        t = line_breaking(3, seed=4).write(filename)
        assert t.colnames == ['parentNode', 'childNode', 'length']
        assert len(t) == 5
