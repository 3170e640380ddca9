# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
import os
import numpy as np
import pytest
from numpy.testing import assert_allclose
from ..lattice import LatticeReflectedPath, reflected_lattice_bm


class TestLattice(object):
    """Test the functions in critwalk.processes.lattice.
    """

    def setup_method(self):
        pass

    def teardown_method(self):
        pass

    def test_path(self):
        dx = 0.05
        path = reflected_lattice_bm(dx, 2.0, seed=1)
        assert path.step_count == 800
        assert path.sites[0] == 0
        assert path.sites.min() == 0
        assert (np.abs(np.diff(path.sites)) == 1).all()
        assert_allclose(path.time_step, dx * dx)
        #
        # Occupation identity: every step contributes dx**2 of time.
        #
        field = path.local_time_field()
        assert_allclose((field * dx).sum(), (path.step_count + 1) * dx * dx)
        assert_allclose(path.local_time(0), dx * (path.sites == 0).sum())
        assert path.local_time(10**6) == 0.0
        steps, lt = path.local_time_curve(0)
        assert steps[0] == 0
        assert_allclose(lt[-1], path.local_time(0))
        assert path.position(0.0) == 0.0
        with pytest.raises(ValueError):
            path.position(3.0)
        with pytest.raises(ValueError):
            LatticeReflectedPath(dx, [0, -1])
        with pytest.raises(ValueError):
            reflected_lattice_bm(0.0, 1.0)

    def test_local_time_at_zero(self):
        rng = np.random.default_rng(2)
        dx = 0.01
        lt = np.array([reflected_lattice_bm(dx, 1.0, rng).local_time(0) for k in range(2000)])
        assert abs(lt.mean() / np.sqrt(2 / np.pi) - 1) < 0.15

    def test_export(self, tmpdir):
        filename = os.path.join(str(tmpdir), 'lattice.csv')
        t = reflected_lattice_bm(0.1, 1.0, seed=3).write(filename)
        assert t.colnames == ['time', 'position']
        assert len(t) == 101
