# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
import numpy as np
import pytest
from ..envelope import EnvelopeProcess, sample_envelope


class TestEnvelope(object):
    """Test the functions in critwalk.percolation.envelope.
    """

    def setup_method(self):
        pass

    def teardown_method(self):
        pass

    def test_process(self):
        e = EnvelopeProcess([1.5, 2.0], [3.0, 2.0, 0.5], 1.0, 4.0)
        assert e(1.0) == 3.0
        assert e(1.5) == 2.0
        assert e(1.99) == 2.0
        assert e(4.0) == 0.5
        assert e([1.2, 3.0]).tolist() == [3.0, 0.5]
        assert e.intervals() == [(1.0, 1.5, 3.0), (1.5, 2.0, 2.0), (2.0, 4.0, 0.5)]
        with pytest.raises(ValueError):
            e(0.5)
        with pytest.raises(ValueError):
            EnvelopeProcess([1.5], [1.0, 2.0], 1.0, 4.0)
        with pytest.raises(ValueError):
            EnvelopeProcess([0.5], [2.0, 1.0], 1.0, 4.0)
        with pytest.raises(ValueError):
            EnvelopeProcess([], [1.0], 2.0, 1.0)

    def test_laws(self):
        rng = np.random.default_rng(271828)
        draws = 20000
        above = 0
        no_jump = 0
        for k in range(draws):
            e = sample_envelope(1.0, 2.0, rng)
            assert (np.diff(e.levels) < 0).all()
            above += e(1.0) > 1.0
            no_jump += e.jump_times.size == 0
        assert abs(above / draws - np.exp(-1)) < 4 * np.sqrt(np.exp(-1) * (1 - np.exp(-1)) / draws)
        assert abs(no_jump / draws - 0.5) < 4 * np.sqrt(0.25 / draws)

    def test_brute_force(self):
        #
        # Compare E(2) with the minimum height of Poisson points on [0, 2].
        #
        rng = np.random.default_rng(5)
        draws = 5000
        exact = np.array([sample_envelope(0.5, 2.0, rng)(2.0) for k in range(draws)])
        brute = np.empty(draws)
        for k in range(draws):
            count = rng.poisson(2.0 * 20.0)
            ys = rng.random(count) * 20.0
            brute[k] = ys.min() if count > 0 else 20.0
        from scipy.stats import ks_2samp
        assert ks_2samp(exact, brute).pvalue > 1e-3
