# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
import numpy as np
import pytest
from numpy.testing import assert_allclose
from .. import HarnessUserWarning
from ..stats import (batch_means_stderr, tail_index_fit, ks_two_sample, ks_one_sample,
                     running_maxima, displacement_exponent, maxima_exponent)
from ...rng import get_rng
from ...walks.rtrw import RTRWTrajectory


class TestStats(object):
    """Test the functions in critwalk.harness.stats.
    """

    def setup_method(self):
        self.rng = get_rng(20170101)

    def teardown_method(self):
        pass

    def test_batch_means_stderr(self):
        assert batch_means_stderr(np.ones(1000)) == 0.0
        assert batch_means_stderr([3.0]) == 0.0
        x = np.array([1.0, 2.0, 3.0, 4.0])
        assert_allclose(batch_means_stderr(x), x.std(ddof=1) / 2.0)
        y = self.rng.standard_normal(30000)
        assert abs(batch_means_stderr(y) - 1.0 / np.sqrt(y.size)) < 0.5 / np.sqrt(y.size)
        with pytest.raises(ValueError):
            batch_means_stderr([])
        with pytest.raises(ValueError):
            batch_means_stderr(y, batches=1)

    def test_tail_index_pareto(self):
        #
        # P[X > u] = u**(-1/2) for u >= 1.
        #
        x = self.rng.random(100000)**(-2)
        gamma, c, stderr, gamma_regression = tail_index_fit(x)
        assert_allclose(stderr, 0.005, rtol=0.05)
        assert abs(gamma - 0.5) < 4 * stderr
        assert abs(c - 1.0) < 0.15
        assert abs(gamma_regression - 0.5) < 0.05

    def test_tail_index_light_tail(self):
        x = 1.0 + self.rng.random(100000)
        with pytest.warns(HarnessUserWarning):
            tail_index_fit(x)

    def test_tail_index_too_few(self):
        with pytest.raises(ValueError):
            tail_index_fit(np.ones(100))

    def test_tail_index_bad_input(self):
        with pytest.raises(ValueError):
            tail_index_fit([-1.0, 2.0, 3.0, 4.0], min_samples=2)
        with pytest.raises(ValueError):
            tail_index_fit(np.ones(20), fraction=1.5, min_samples=2)

    def test_ks_two_sample(self):
        a = self.rng.random(500)
        d, p = ks_two_sample(a, a)
        assert d == 0.0
        assert p == 1.0
        b = self.rng.random(50)
        d, p = ks_two_sample(b, b + 2.0, permutations=200, seed=1)
        assert d == 1.0
        assert p < 0.05
        d2, p2 = ks_two_sample(b, b + 2.0, permutations=200, seed=1)
        assert p2 == p
        with pytest.raises(ValueError):
            ks_two_sample([], a)

    def test_ks_one_sample(self):
        x = self.rng.exponential(size=2000)
        d, p = ks_one_sample(x, 'expon')
        assert d < 4.0 / np.sqrt(x.size)
        d, p = ks_one_sample(x + 1.0, 'expon')
        assert d > 0.5
        with pytest.raises(ValueError):
            ks_one_sample([], 'expon')

    def test_running_maxima(self):
        x = np.array([0, 1, 0, -1, 2, 1, 3])
        assert running_maxima(x, [1, 3, 5, 6]).tolist() == [1, 1, 2, 3]
        traj = RTRWTrajectory([0, 1, 2, 1], [1.0, 2.0, 3.0, 4.0])
        assert running_maxima(traj, [0.5, 2.5, 3.5]).tolist() == [0, 2, 2]
        with pytest.raises(ValueError):
            running_maxima(x, [1, 7])
        with pytest.raises(ValueError):
            running_maxima(traj, [1.0, 4.0])

    def test_ballistic_exponent(self):
        slope, stderr = displacement_exponent([np.arange(2000)], [1, 10, 100, 1000])
        assert_allclose(slope, 1.0)
        assert stderr < 1e-8

    def test_simple_walk_exponent(self):
        t = np.geomspace(100, 100000, 7).astype(np.int64)
        walks = []
        for k in range(200):
            steps = 2 * self.rng.integers(0, 2, size=int(t[-1]), dtype=np.int16) - 1
            walks.append(np.concatenate(([0], np.cumsum(steps, dtype=np.int16))))
        slope, stderr = displacement_exponent(walks, t)
        assert abs(slope - 0.5) < 0.05

    def test_exponent_errors(self):
        with pytest.warns(HarnessUserWarning):
            maxima_exponent([[1.0, 10.0]], [1, 10])
        with pytest.raises(ValueError):
            displacement_exponent([np.zeros(1001)], [1, 10, 100, 1000])
        with pytest.raises(ValueError):
            displacement_exponent([], [1, 10, 100, 1000])
        with pytest.raises(ValueError):
            displacement_exponent([np.arange(2000)], [10, 1])
        with pytest.raises(ValueError):
            displacement_exponent([np.arange(2000)], [10, 100, 1000])
