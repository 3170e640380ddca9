# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
import os
import numpy as np
import pytest
from .. import PercolationException
from ..cluster import cluster_size_laplace
from ..envelope import EnvelopeProcess
from ..ipc import (IPCInstance, invade, estimate_backbone, structural_ipc_parameters,
                   structural_ipc_branches, ipc_branch_sizes)
from ...trees.ordered import OrderedRootedTree


class TestIPC(object):
    """Test the functions in critwalk.percolation.ipc.
    """

    def setup_method(self):
        pass

    def teardown_method(self):
        pass

    def test_small(self):
        ipc = invade(1, seed=1)
        assert ipc.invaded_tree.vertex_count == 1
        for seed in range(10):
            ipc = invade(2, seed=seed)
            parent_step, weight, step = ipc.candidates
            assert ipc.invaded_tree.vertex_count == 2
            assert ipc.weights[1] == weight[1:3].min()
        with pytest.raises(ValueError):
            invade(0)

    def test_greedy(self):
        ipc = invade(3000, seed=2)
        assert ipc.invaded_tree.vertex_count == 3000
        assert ipc.greedy_violations() == 0
        assert ipc.invasion_order[0] == 0
        assert sorted(ipc.invasion_order.tolist()) == list(range(3000))
        assert ((ipc.weights > 0) & (ipc.weights < 1)).all()
        assert (ipc.invasion_index[ipc.invaded_tree.parent[1:]] <
                ipc.invasion_index[1:]).all()
        #
        # Swapping two invasion steps breaks the rule.
        #
        parent_step, weight, step = ipc.candidates
        bad = step.copy()
        a, b = np.flatnonzero(step == 10)[0], np.flatnonzero(step == 11)[0]
        if weight[a] != weight[b] and parent_step[b] < 10:
            bad[a], bad[b] = 11, 10
            broken = IPCInstance(ipc.invaded_tree, ipc.weights, ipc.invasion_order,
                                 candidates=(parent_step, weight, bad))
            assert broken.greedy_violations() >= 1
        with pytest.raises(PercolationException):
            IPCInstance(ipc.invaded_tree, ipc.weights, ipc.invasion_order).greedy_violations()

    def test_criticality(self):
        rng = np.random.default_rng(77)
        below = 0
        for k in range(20):
            ipc = invade(10000, rng)
            late = ipc.invasion_order[2000:]
            below += ipc.weights[late].max() < 0.7
        assert below >= 17

    def test_backbone(self):
        path = OrderedRootedTree([-1, 0, 1, 2, 3])
        w = np.array([0.9, 0.1, 0.4, 0.3, 0.2])
        ipc = IPCInstance(path, w, np.arange(5))
        est = estimate_backbone(ipc, 0.5)
        assert est.depth == 2
        assert est.path.tolist() == [0, 1, 2]
        assert est.forward_max.tolist() == [0.4, 0.4, 0.3]
        assert est.statistic(1.0) == pytest.approx(2 * (2 * 0.3 - 1))
        assert est.projection.tolist() == [0, 1, 2, 3, 4]
        #
        # Two deepest vertices: the smaller label wins.
        #
        tree = OrderedRootedTree([-1, 0, 1, 0, 3])
        ipc = IPCInstance(tree, np.full(5, 0.5), np.arange(5))
        est = estimate_backbone(ipc, 1.0)
        assert est.path.tolist() == [0, 1]
        assert est.projection.tolist() == [0, 1, 2, 0, 0]
        with pytest.raises(PercolationException):
            estimate_backbone(IPCInstance(OrderedRootedTree([-1, 0, 0]), np.full(3, 0.5), np.arange(3)))
        with pytest.raises(ValueError):
            estimate_backbone(ipc, 0.0)

    def test_backbone_invaded(self):
        ipc = invade(5000, seed=8)
        est = ipc.backbone_estimate
        tree = ipc.invaded_tree
        assert est.path[0] == 0
        assert (tree.parent[est.path[1:]] == est.path[:-1]).all()
        assert (np.diff(est.forward_max) <= 0).all()

    def test_export(self, tmpdir):
        ipc = invade(20, seed=3)
        filename = os.path.join(str(tmpdir), 'ipc.csv')
        t = ipc.write(filename)
        assert t.colnames == ['parentId', 'childId', 'weight', 'invasionIndex']
        with open(filename) as f:
            assert f.readline().strip() == 'parentId,childId,weight,invasionIndex'

    def test_structural(self):
        k_max = 100
        e = EnvelopeProcess([], [50.0], 0.01, 1.0)
        p = structural_ipc_parameters(e, k_max)
        assert p.shape == (100,)
        assert np.allclose(p, 0.25)
        e = EnvelopeProcess([0.5], [500.0, 50.0], 0.01, 1.0)
        p = structural_ipc_parameters(e, k_max)
        assert (p[:49] == 0).all()
        assert np.allclose(p[49:], 0.25)
        branches = structural_ipc_branches(k_max, seed=4, envelope=e)
        assert all(b.vertex_count == 1 for b in branches[:49])
        assert len(structural_ipc_branches(10, seed=4)) == 10
        with pytest.raises(ValueError):
            structural_ipc_branches(0)

    def test_structural_laplace(self):
        k_max = 100000
        level = 20000.0
        e = EnvelopeProcess([], [level], 1.0 / k_max, 1.0)
        sizes = ipc_branch_sizes(k_max, seed=6, envelope=e)
        v = np.exp(-0.3 * sizes)
        p = (1 - level / k_max) / 2
        assert abs(v.mean() - cluster_size_laplace(p, 0.3)) < 4 * v.std() / np.sqrt(v.size)
