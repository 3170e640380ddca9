# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
import os
import numpy as np
import pytest
from numpy.testing import assert_allclose
from .. import HorizonExceeded
from ..localtime import CRTInverseLocalTime
from ..mass import TreeMassMeasure, sample_reduced_crt
from ..skeleton import MetricTreeSkeleton
from ..ssbm import SSBMPath, ssbm_simulate, k_ssbm_simulate
from ...processes.lattice import reflected_lattice_bm
from ...processes.measure import AtomicMeasure
from ...processes.ppp import mu_iic
from ...processes.subordinator import identity_subordinator


class TestSSBM(object):
    """Test the functions in critwalk.continuum.ssbm.
    """

    def setup_method(self):
        self.dx = 0.05

    def teardown_method(self):
        pass

    def test_single_trap(self):
        dx = self.dx
        traps = AtomicMeasure([0.0], [1.0])
        path = ssbm_simulate(traps, identity_subordinator, dx, 2.0, seed=51)
        assert (path.positions == 0).all()
        assert (np.diff(path.phi) >= 0).all()
        lattice = reflected_lattice_bm(dx, 2.0, seed=51)
        assert_allclose(path.total_clock, dx * (lattice.sites == 0).sum())
        assert_allclose(path.trap_clock.sum(), path.total_clock)
        assert path.times.size == 200

    def test_uniform_traps(self):
        dx = 0.1
        traps = AtomicMeasure(dx * np.arange(101), np.full(101, dx))
        times = np.linspace(0.0, 0.9, 10)
        path = ssbm_simulate(traps, identity_subordinator, dx, 1.0, seed=52, times=times)
        k = np.arange(101)
        assert_allclose(path.phi, dx * dx * (k + 1))
        lattice = reflected_lattice_bm(dx, 1.0, seed=52)
        steps = np.searchsorted(path.phi, times, side='right')
        assert_allclose(path.positions, lattice.positions[steps])
        assert_allclose(path.psi, steps * dx * dx)
        #
        # psi is a right-continuous inverse of phi.
        #
        assert (path.phi[steps] > times).all()
        assert (path.phi[np.maximum(steps - 1, 0)][steps > 0] <= times[steps > 0]).all()
        assert_allclose(path.clock(0.5), path.phi[50])

    def test_deficit_drift(self):
        dx = self.dx
        traps = AtomicMeasure([0.0], [1.0], deficit=5.0)
        path = ssbm_simulate(traps, identity_subordinator, dx, 2.0, seed=51, window=100.0)
        lattice = reflected_lattice_bm(dx, 2.0, seed=51)
        rate = 5.0 / 100.0
        assert (path.phi >= rate * lattice.times).all()
        assert_allclose(path.drift_clock, rate * dx * dx * lattice.sites.size)
        assert_allclose(path.phi, dx * np.cumsum(lattice.sites == 0) +
                        rate * dx * dx * np.arange(1, lattice.sites.size + 1))
        assert_allclose(path.trap_clock.sum() + path.drift_clock, path.total_clock)
        #
        # Outside the window the clock gains nothing from the dropped mass.
        #
        path = ssbm_simulate(traps, identity_subordinator, dx, 2.0, seed=51, window=dx / 2.0)
        inside = np.cumsum(lattice.sites == 0)
        assert_allclose(path.phi, dx * inside + 5.0 / (dx / 2.0) * dx * dx * inside)
        with pytest.raises(ValueError):
            ssbm_simulate(AtomicMeasure.empty(1.0), identity_subordinator, dx, 1.0, seed=51)

    def test_errors(self):
        traps = AtomicMeasure([0.0], [1.0])
        with pytest.raises(HorizonExceeded):
            ssbm_simulate(traps, identity_subordinator, self.dx, 1.0, seed=53, times=[0.0, 100.0])
        with pytest.raises(HorizonExceeded):
            ssbm_simulate(AtomicMeasure([50.0], [1.0]), identity_subordinator, self.dx, 0.1, seed=53)
        with pytest.raises(ValueError):
            ssbm_simulate(AtomicMeasure([-1.0], [1.0]), identity_subordinator, self.dx, 1.0)
        with pytest.raises(ValueError):
            SSBMPath([1.0, 0.5], [0.0, 0.0], [1.0], [0.0, 0.0], 0.1)

    def test_iic_traps(self):
        rng = np.random.default_rng(54)
        traps = mu_iic((0.0, 4.0), h_min=1e-2, seed=rng)
        path = ssbm_simulate(traps, CRTInverseLocalTime(50, rng), 0.1, 4.0, seed=rng)
        assert (path.positions >= 0).all()
        assert path.deficit > 0
        assert path.drift_clock > 0
        assert_allclose(path.trap_clock.sum() + path.drift_clock, path.total_clock)
        assert (np.diff(path.running_max()) >= 0).all()

    def test_tree(self):
        skeleton = MetricTreeSkeleton([-1, 0], [0, 1.04], [1])
        root = TreeMassMeasure(skeleton, [0], [0.0], [1.0])
        path = k_ssbm_simulate(skeleton, root, identity_subordinator, 0.1, 1.0, seed=55)
        assert (path.positions == 0).all()
        assert_allclose(path.length_perturbation, 0.04)
        rng = np.random.default_rng(56)
        skeleton, mu = sample_reduced_crt(3, 2000, rng)
        path = k_ssbm_simulate(skeleton, mu, identity_subordinator, 0.05, 2.0, seed=rng)
        assert_allclose(path.positions, skeleton.point_distance(path.edges, path.offsets))
        assert (path.positions <= skeleton.root_distance.max() + 1e-12).all()
        assert_allclose(path.trap_clock.sum(), path.total_clock)
        with pytest.raises(ValueError):
            k_ssbm_simulate(skeleton, mu, identity_subordinator, 0.0, 1.0)

    def test_export(self, tmpdir):
        filename = os.path.join(str(tmpdir), 'ssbm.csv')
        path = ssbm_simulate(AtomicMeasure([0.0], [1.0]), identity_subordinator, 0.1, 1.0,
                             seed=57)
        t = path.write(filename)
        assert t.colnames == ['clockTime', 'position']
        assert len(t) == 200
