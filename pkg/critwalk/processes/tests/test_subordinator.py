# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.integrate import quad
from .. import ProcessesUserWarning
from ..measure import AtomicMeasure
from ..subordinator import (SubordinatorPath, identity_subordinator, ig_laplace_exponent,
                            ig_small_jump_exponent, ig_small_jump_mass,
                            inverse_gaussian_variates, sample_inverse_gaussian_path,
                            sample_ig_jumps, mu_ipc, mu_ipc_laplace_exponent)
from ...percolation.envelope import EnvelopeProcess


class TestSubordinator(object):
    """Test the functions in critwalk.processes.subordinator.
    """

    def setup_method(self):
        pass

    def teardown_method(self):
        pass

    def test_path(self):
        s = SubordinatorPath(0.5, AtomicMeasure([0.5], [1.0]), 2.0)
        assert s(0.0) == 0.0
        assert s(0.4) == pytest.approx(0.2)
        assert s(0.5) == pytest.approx(1.25)
        assert (np.diff(s(np.linspace(0, 2, 50))) >= 0).all()
        with pytest.raises(ValueError):
            s(2.5)
        with pytest.raises(ValueError):
            SubordinatorPath(-1.0, AtomicMeasure.empty(), 1.0)
        with pytest.raises(ValueError):
            SubordinatorPath(0.0, AtomicMeasure([2.0], [1.0]), 1.0)
        assert identity_subordinator(3, 2.0)(1.5) == 1.5

    def test_moments(self):
        rng = np.random.default_rng(3)
        n = 200000
        for delta, gamma, t in ((1.0, 1.0, 1.0), (0.5, 2.0, 1.0), (2**-0.5, 2**0.5, 0.5)):
            mean = delta * t / gamma
            shape = (delta * t)**2
            x = inverse_gaussian_variates(mean, shape, n, rng)
            assert abs(x.mean() - mean) < 4 * x.std() / np.sqrt(n)
            var = delta * t / gamma**3
            rel = np.sqrt((15 * mean / shape + 2) / n)
            assert abs(x.var() / var - 1) < 5 * rel
        with pytest.raises(ValueError):
            inverse_gaussian_variates(-1.0, 1.0)

    def test_ig_laplace(self):
        rng = np.random.default_rng(4)
        draws = 5000
        with pytest.warns(ProcessesUserWarning):
            end = np.array([sample_inverse_gaussian_path(2**-0.5, 0.0, 1.0, seed=rng, cells=4)(1.0)
                            for k in range(draws)])
        v = np.exp(-end)
        assert abs(v.mean() - np.exp(-1)) < 4 * v.std() / np.sqrt(draws)
        end = np.array([sample_inverse_gaussian_path(2**-0.5, 2**0.5, 1.0, seed=rng, cells=4)(1.0)
                        for k in range(draws)])
        assert abs(end.mean() - 0.5) < 4 * end.std() / np.sqrt(draws)
        assert_allclose(ig_laplace_exponent(1.0, 2**-0.5, 0.0), 1.0)

    def test_path_grid(self):
        path = sample_inverse_gaussian_path(1.0, 1.0, 0.0)
        assert path(0.0) == 0.0
        path = sample_inverse_gaussian_path(1.0, 1.0, 2.0, time_grid=[0, 0.5, 2.0], seed=5)
        assert path.jumps.locations.tolist() == [0.5, 2.0]
        assert path(0.0) == 0.0
        with pytest.raises(ValueError):
            sample_inverse_gaussian_path(1.0, 1.0, 2.0, time_grid=[0, 1.5, 1.0, 2.0])
        with pytest.raises(ValueError):
            sample_inverse_gaussian_path(0.0, 1.0, 1.0)
        with pytest.raises(ValueError):
            sample_inverse_gaussian_path(1.0, -1.0, 1.0)

    def test_small_jumps(self):
        for lam, h, delta, g in ((1.0, 0.1, 0.7, 1.4), (5.0, 1e-3, 1.0, 0.0), (0.5, 1.0, 2.0, 3.0)):
            c = delta / np.sqrt(2 * np.pi)
            exact, err = quad(lambda y: -np.expm1(-lam * y) * c * y**-1.5 * np.exp(-0.5 * g * g * y), 0, h)
            assert_allclose(ig_small_jump_exponent(lam, h, delta, g), exact, rtol=1e-6)
            mass, err = quad(lambda y: c * y**-0.5 * np.exp(-0.5 * g * g * y), 0, h)
            assert_allclose(ig_small_jump_mass(h, delta, g), mass, rtol=1e-6)

    def test_jumps(self):
        rng = np.random.default_rng(6)
        draws = 4000
        h = 1e-3
        lam = 1.0
        v = np.array([np.exp(-lam * sample_ig_jumps((0, 1), h, 1.0, 1.0, rng).total_mass)
                      for k in range(draws)])
        expected = np.exp(-ig_laplace_exponent(lam, 1.0, 1.0) + ig_small_jump_exponent(lam, h, 1.0, 1.0))
        assert abs(v.mean() - expected) < 4 * v.std() / np.sqrt(draws)
        with pytest.raises(ValueError):
            sample_ig_jumps((0, 1), 0.0, 1.0, 1.0)
        assert sample_ig_jumps((1, 1), 0.1, 1.0, 1.0).size == 0

    def test_mu_ipc(self):
        rng = np.random.default_rng(7)
        draws = 4000
        h = 1e-3
        for env in (EnvelopeProcess([], [1.5], 1e-12, 1.0),
                    EnvelopeProcess([0.4], [3.0, 0.5], 1e-12, 1.0)):
            lam = 2.0
            v = np.array([np.exp(-lam * mu_ipc(env, rng, h).total_mass) for k in range(draws)])
            expected = np.exp(-mu_ipc_laplace_exponent(env, lam, h_min=h))
            assert abs(v.mean() - expected) < 4 * v.std() / np.sqrt(draws)
        env = EnvelopeProcess([], [1.5], 1e-12, 1.0)
        e = 1.5
        assert_allclose(mu_ipc_laplace_exponent(env, 2.0),
                        2**-0.5 * (np.sqrt(4.0 + 2 * e * e) - np.sqrt(2.0) * e))
        far = EnvelopeProcess([], [1e6], 1e-12, 1.0)
        assert mu_ipc(far, rng, h).total_mass == 0.0
        mu = mu_ipc(EnvelopeProcess([0.4], [3.0, 0.5], 0.1, 1.0), rng, h)
        assert ((mu.locations >= 0.1) & (mu.locations < 1.0)).all()
        assert mu.deficit > 0
