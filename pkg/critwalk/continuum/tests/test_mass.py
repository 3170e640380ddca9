# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
import os
import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.stats import kstest
from .. import ContinuumException
from ..mass import TreeMassMeasure, sample_branch_mass_measure, sample_reduced_crt
from ..skeleton import MetricTreeSkeleton, line_breaking


class TestMass(object):
    """Test the functions in critwalk.continuum.mass.
    """

    def setup_method(self):
        self.skeleton = MetricTreeSkeleton([-1, 0, 1, 1], [0, 1.0, 0.5, 2.0], [2, 3])

    def teardown_method(self):
        pass

    def test_measure(self):
        mu = TreeMassMeasure(self.skeleton, [0, 1, 3], [0.0, 0.5, 2.0], [1.0, 1.0, 2.0])
        assert mu.size == 3
        assert_allclose(mu.masses, [0.25, 0.25, 0.5])
        assert_allclose(mu.root_distance(), [0.0, 0.5, 3.0])
        assert_allclose(mu.positions_along(), [0.0, 0.5 / 3.5, 1.0])
        with pytest.raises(ValueError):
            TreeMassMeasure(self.skeleton, [1], [1.5], [1.0])
        with pytest.raises(ValueError):
            TreeMassMeasure(self.skeleton, [4], [0.0], [1.0])
        with pytest.raises(ValueError):
            TreeMassMeasure(self.skeleton, [1], [0.5], [0.0])
        with pytest.raises(ValueError):
            TreeMassMeasure(self.skeleton, [1, 2], [0.5], [1.0])

    def test_branch_mass(self):
        rng = np.random.default_rng(31)
        skeleton = line_breaking(2, rng)
        mu = sample_branch_mass_measure(skeleton, 5000, rng)
        assert abs(mu.masses.sum() - 1.0) < 1e-12
        assert (mu.offsets <= skeleton.lengths[mu.edges]).all()
        assert kstest(mu.positions_along(), 'uniform').statistic < 0.05
        with pytest.raises(ValueError):
            sample_branch_mass_measure(skeleton, 2)

    def test_reduced_crt(self):
        rng = np.random.default_rng(33)
        skeleton, mu = sample_reduced_crt(3, 3000, rng)
        assert skeleton.leaf_count == 3
        assert mu.skeleton is skeleton
        assert abs(mu.masses.sum() - 1.0) < 1e-12
        assert (mu.offsets <= skeleton.lengths[mu.edges]).all()
        #
        # Graph distances over sqrt(n) have the law of the line-breaking
        # tree: the single edge has mean sqrt(pi/2).
        #
        lengths = np.array([sample_reduced_crt(1, 2000, rng)[0].total_length
                            for k in range(300)])
        assert abs(lengths.mean() - np.sqrt(np.pi / 2.0)) < 0.15
        with pytest.raises(ValueError):
            sample_reduced_crt(0, 100)
        with pytest.raises(ValueError):
            sample_reduced_crt(5, 5)

    def test_masses_follow_lengths(self):
        #
        # Short spines carry a few large atoms, long spines many small ones.
        #
        rng = np.random.default_rng(34)
        lengths = np.zeros(300)
        largest = np.zeros(300)
        for k in range(lengths.size):
            skeleton, mu = sample_reduced_crt(1, 2000, rng)
            lengths[k] = skeleton.total_length
            largest[k] = mu.masses.max()
        short = lengths <= np.median(lengths)
        assert largest[short].mean() > 1.3 * largest[~short].mean()

    def test_tail(self):
        rng = np.random.default_rng(32)
        masses = np.concatenate([sample_branch_mass_measure(line_breaking(1, rng), 4000, rng).masses
                                 for k in range(80)])
        h = np.array([2.5e-3, 2.5e-2])
        counts = np.array([(masses > x).sum() for x in h])
        slope = -np.diff(np.log(counts))[0] / np.diff(np.log(h))[0]
        assert abs(slope - 0.5) < 0.1

    def test_mismatch(self):
        #
        # One labelled point but two leaves: no reduced subtree fits.
        #
        skeleton = MetricTreeSkeleton([-1, 0, 0], [0, 1.0, 1.0], [1])
        with pytest.raises(ContinuumException):
            sample_branch_mass_measure(skeleton, 100, seed=1, max_tries=3)

    def test_export(self, tmpdir):
        filename = os.path.join(str(tmpdir), 'mass.csv')
        mu = TreeMassMeasure(self.skeleton, [1, 3], [0.5, 1.0], [1.0, 1.0])
        t = mu.write(filename)
        assert t.colnames == ['edge', 'offset', 'mass']
        assert len(t) == 2
