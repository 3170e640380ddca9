# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
import os
import numpy as np
import pytest
from .. import WalksException, WalksUserWarning
from ..walk import WalkPath, LocalTimeCurve, walk, local_time_root, project_walk
from ...percolation.conditioned import sample_conditioned_cluster
from ...percolation.iic import IICInstance
from ...trees.ordered import OrderedRootedTree
from ...trees.reduced import reduce


class TestWalk(object):
    """Test the functions in critwalk.walks.walk.
    """

    def setup_method(self):
        self.edge = OrderedRootedTree([-1, 0])
        self.cherry = OrderedRootedTree([-1, 0, 0])

    def teardown_method(self):
        pass

    def test_walk(self):
        path = walk(self.edge, 6, seed=1)
        assert path.vertices.tolist() == [0, 1, 0, 1, 0, 1, 0]
        assert path.step_count == 6
        assert walk(OrderedRootedTree([-1]), 0).vertices.tolist() == [0]
        assert walk(OrderedRootedTree([-1]), 5).vertices.tolist() == [0] * 6
        with pytest.raises(ValueError):
            walk(self.edge, -1)
        tree = sample_conditioned_cluster(200, seed=2)
        path = walk(tree, 5000, seed=3)
        assert path.is_path_of(tree)
        assert not WalkPath([0, 2]).is_path_of(self.cherry)

    def test_symmetry(self):
        steps = 100000
        v = walk(self.cherry, steps, seed=4).vertices
        after_root = v[1:][v[:-1] == 0]
        m = after_root.size
        assert abs((after_root == 1).mean() - 0.5) < 4 * np.sqrt(0.25 / m)

    def test_local_time(self):
        curve = local_time_root(WalkPath([0] * 6))
        assert curve.samples.tolist() == [1, 2, 3, 4, 5, 6]
        curve = local_time_root(walk(self.edge, 4, seed=5))
        assert curve.samples.tolist() == [1, 1, 2, 2, 3]
        assert curve.inverse(0) == 0
        assert curve.inverse(1) == 2
        assert curve.inverse_curve().tolist() == [0, 2, 4]
        assert curve(3) == 2
        with pytest.raises(ValueError):
            curve.inverse(3)
        with pytest.raises(ValueError):
            LocalTimeCurve([0, 1])
        with pytest.raises(ValueError):
            LocalTimeCurve([1, 3])

    def test_inverse_identity(self):
        tree = sample_conditioned_cluster(30, seed=6)
        curve = local_time_root(walk(tree, 2000, seed=7))
        s = curve.inverse_curve()
        #
        # l(l^{-1}(t)) = t + 1 and l^{-1}(l(s) - 1) <= s.
        #
        assert (curve(s) == np.arange(1, s.size + 1)).all()
        t = np.arange(curve.samples.size)
        assert (curve.inverse(curve(t) - 1) <= t).all()

    def test_project(self):
        branches = [OrderedRootedTree.from_parentheses(s) for s in ('(())', '()', '((()))')]
        iic = IICInstance(branches=branches)
        assert project_walk(WalkPath([0, 1, 0, 1]), iic).tolist() == [0, 0, 0, 0]
        with pytest.warns(WalksUserWarning):
            x = project_walk(WalkPath([0, 2, 3, 2]), iic)
        assert x.tolist() == [0, 1, 2, 1]
        index = reduce(self.cherry, [1])
        assert project_walk(WalkPath([0, 2, 0, 1]), index).tolist() == [0, 0, 0, 1]
        with pytest.raises(WalksException):
            project_walk(WalkPath([0, 1, 0, 2]), [0, 1, -1])
        with pytest.raises(WalksException):
            project_walk(WalkPath([0, 1, 0, 2]), [0, 1])

    def test_export(self, tmpdir):
        path = walk(self.cherry, 10, seed=8)
        filename = os.path.join(str(tmpdir), 'walk.csv')
        t = path.write(filename)
        assert t.colnames == ['time', 'vertex']
        filename = os.path.join(str(tmpdir), 'local.csv')
        t = local_time_root(path).write(filename)
        assert t.colnames == ['t', 'l_t']
        assert len(t) == 11
