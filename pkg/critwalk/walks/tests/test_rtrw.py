# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
import os
import numpy as np
import pytest
from .. import WalksUserWarning
from ..rtrw import (DeterministicLandscape, SingleTrapLandscape, IICLandscape,
                    RTRWTrajectory, rtrw)
from ..walk import walk, project_walk
from ...percolation.cluster import cluster_size_pmf
from ...harness.stats import ks_two_sample
from ...percolation.conditioned import sample_conditioned_cluster
from ...percolation.iic import IICInstance
from ...trees.ordered import OrderedRootedTree


class TestRTRW(object):
    """Test the functions in critwalk.walks.rtrw.
    """

    def setup_method(self):
        pass

    def teardown_method(self):
        pass

    def test_trajectory(self):
        traj = RTRWTrajectory([0, 1, 0], [1.0, 2.5, 3.0])
        assert traj.position(0.0) == 0
        assert traj.position(1.0) == 1
        assert traj.position([2.4, 2.5]).tolist() == [1, 0]
        assert traj.arrival_times.tolist() == [0.0, 1.0, 2.5]
        assert traj.occupation(0) == 1.5
        with pytest.raises(ValueError):
            traj.position(3.0)
        with pytest.raises(ValueError):
            RTRWTrajectory([0, 2], [1.0, 2.0])
        with pytest.raises(ValueError):
            RTRWTrajectory([0, 1], [1.0, 1.0])
        with pytest.raises(ValueError):
            RTRWTrajectory([0, 1], [1.0])

    def test_unit_holding(self):
        traj = rtrw(DeterministicLandscape(), 1000, seed=1)
        n = traj.sites.size
        assert traj.times.tolist() == list(range(1, n + 1))
        assert traj.times[-1] > 1000
        x = traj.position(np.arange(1000))
        assert (np.abs(np.diff(x)) == 1).all()
        with pytest.raises(ValueError):
            rtrw(DeterministicLandscape(), 0)
        with pytest.raises(ValueError):
            DeterministicLandscape(0)

    def test_reflect(self):
        traj = rtrw(DeterministicLandscape(), 2000, seed=2, reflect=True)
        assert (traj.sites >= 0).all()
        at_zero = np.flatnonzero(traj.sites[:-1] == 0)
        assert (traj.sites[at_zero + 1] == 1).all()

    def test_single_trap(self):
        M = 50.0
        traj = rtrw(SingleTrapLandscape(M), 200000, seed=3)
        visits = int((traj.sites == 0).sum())
        others = traj.sites.size - visits
        assert abs(traj.occupation(0) / visits - M) < 4 * M / np.sqrt(visits)
        total = traj.times[-1]
        assert total - traj.occupation(0) == pytest.approx(others)
        #
        # Renewal-reward: the time fraction at the trap is M v / (M v + others).
        #
        fraction = traj.occupation(0) / total
        predicted = M * visits / (M * visits + others)
        assert abs(fraction - predicted) < 4 * predicted * (1 - predicted) / np.sqrt(visits)
        assert SingleTrapLandscape(M).mean_depth(0) == M
        assert SingleTrapLandscape(M).mean_depth(3) == 1.0

    def test_iic_landscape(self):
        a = IICLandscape(seed=4)
        b = IICLandscape(seed=4)
        assert a.branch(5) == b.branch(5)
        assert a.censored == set()
        assert a.mean_depth(5) == a.branch(5).vertex_count
        with pytest.raises(ValueError):
            a.branch(-1)
        sites = 500
        depth = np.array([a.mean_depth(x) for x in range(1, sites + 1)])
        tail = 1 - cluster_size_pmf(0.5, 99).sum()
        assert abs((depth >= 100).mean() - tail) < 4 * np.sqrt(tail * (1 - tail) / sites)
        traj = rtrw(a, 500, seed=5, reflect=True)
        assert (traj.sites >= 0).all()
        assert (np.diff(traj.times) >= 1).all()

    def test_cached(self):
        with pytest.warns(WalksUserWarning):
            c = IICLandscape(seed=6, cached=True, cache_samples=20)
        rng = np.random.default_rng(7)
        h = [c.sample_holding(0, rng) for k in range(50)]
        assert set(h) <= set(c._cache[0].tolist())

    def test_from_iic(self):
        branches = [OrderedRootedTree.from_parentheses(s) for s in ('(())', '()')]
        iic = IICInstance(branches=branches)
        landscape = IICLandscape(iic=iic)
        assert landscape.mean_depth(0) == 3.0
        assert landscape.censored == set()
        assert IICLandscape(iic=IICInstance(branches=branches, censored=[1])).censored == {1}
        with pytest.warns(WalksUserWarning):
            assert landscape.mean_depth(1) == 1.0
        with pytest.raises(IndexError):
            landscape.branch(2)

    def test_root_holding(self):
        #
        # The root of the glued cluster has one backbone neighbour.
        #
        branches = [OrderedRootedTree.from_parentheses(s) for s in ['(())'] + ['()'] * 40]
        iic = IICInstance(branches=branches)
        landscape = IICLandscape(iic=iic)
        rng = np.random.default_rng(12)
        h = np.array([landscape.sample_holding(0, rng) for k in range(4000)])
        assert (h % 2 == 1).all()
        assert abs(h.mean() - 3.0) < 4 * h.std() / np.sqrt(h.size)
        exits = []
        for k in range(4000):
            x = project_walk(walk(iic.tree, 60, rng), iic)
            exits.append(np.flatnonzero(x != 0)[0])
        exits = np.array(exits)
        assert abs(exits.mean() - 3.0) < 4 * exits.std() / np.sqrt(exits.size)
        d, p = ks_two_sample(h, exits)
        assert p > 1e-3

    def test_projected_iic_walk(self):
        #
        # The walk on the glued cluster, seen on the backbone, is the trapped
        # walk with the exit-time landscape of the same branches.
        #
        rng = np.random.default_rng(13)
        sizes = rng.integers(1, 30, size=60)
        iic = IICInstance(branches=[sample_conditioned_cluster(int(n), rng) for n in sizes])
        t = 500
        projected = np.array([project_walk(walk(iic.tree, t, rng), iic)[t] for k in range(400)])
        landscape = IICLandscape(iic=iic)
        trapped = np.array([rtrw(landscape, t, rng, reflect=True).position(t)
                            for k in range(400)])
        assert (projected >= 0).all()
        d, p = ks_two_sample(projected, trapped)
        assert d < 0.15
        assert p > 1e-3

    def test_export(self, tmpdir):
        traj = rtrw(SingleTrapLandscape(3.0), 50, seed=8)
        filename = os.path.join(str(tmpdir), 'rtrw.csv')
        t = traj.write(filename)
        assert t.colnames == ['time', 'site']
        assert len(t) == traj.sites.size
