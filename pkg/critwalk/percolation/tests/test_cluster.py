# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
import numpy as np
import pytest
from numpy.testing import assert_allclose
from .. import ClusterCapExceeded, PercolationUserWarning
from ..cluster import (PercolationParams, sample_cluster, sample_cluster_sizes,
                       cluster_size_laplace, cluster_size_pmf,
                       extinction_probability, dual_parameter, scales)


def enumerate_shapes(n):
    """All subtrees with `n` vertices of a vertex with two child slots,
    as nested ``(left, right)`` tuples with ``None`` for a closed slot.
    """
    if n == 0:
        return [None]
    shapes = []
    for left in range(n):
        for l in enumerate_shapes(left):
            for r in enumerate_shapes(n - 1 - left):
                shapes.append((l, r))
    return shapes


def shape_probability(shape, p):
    """Probability that the cluster below a two-slot vertex is `shape`.
    """
    prob = 1.0
    for child in shape:
        if child is None:
            prob *= 1 - p
        else:
            prob *= p * shape_probability(child, p)
    return prob


class TestCluster(object):
    """Test the functions in critwalk.percolation.cluster.
    """

    def setup_method(self):
        pass

    def teardown_method(self):
        pass

    def test_params(self):
        params = PercolationParams(0.5)
        assert params.substrate == 'TStar'
        assert params.root_slots == 1
        assert PercolationParams(0.5, 'T').root_slots == 2
        with pytest.raises(ValueError):
            PercolationParams(0.0)
        with pytest.raises(ValueError):
            PercolationParams(1.5)
        with pytest.raises(ValueError):
            PercolationParams(0.5, 'Z')

    def test_sample_cluster(self):
        tree = sample_cluster(PercolationParams(1.0e-12), seed=1)
        assert tree.vertex_count == 1
        tree, slots = sample_cluster(PercolationParams(0.5, 'T'), seed=5,
                                     return_slots=True)
        assert slots[0] == -1
        assert slots.size == tree.vertex_count
        assert (tree.degree[1:] <= 3).all()
        assert tree.degree[0] <= 2
        for v in range(tree.vertex_count):
            kids = tree.children(v)
            assert (np.diff(slots[kids]) > 0).all()
        tree = sample_cluster(PercolationParams(0.3, "TStar"), seed=5)
        assert tree.degree[0] <= 1

    def test_cap(self):
        with pytest.raises(ClusterCapExceeded):
            sample_cluster(PercolationParams(1.0, 'T'), seed=1, cap=50)
        with pytest.raises(ValueError):
            sample_cluster(PercolationParams(1.0, 'T'), seed=1)
        with pytest.warns(PercolationUserWarning):
            sizes = sample_cluster_sizes(1.0, 3, 'T', seed=1, cap=50)
        assert (sizes == 51).all()

    def test_laplace_tree_sampler(self):
        rng = np.random.default_rng(20180601)
        sizes = np.array([sample_cluster(PercolationParams(0.45), rng).vertex_count
                          for k in range(4000)])
        v = np.exp(-0.5 * sizes)
        assert abs(v.mean() - cluster_size_laplace(0.45, 0.5)) < 4 * v.std() / np.sqrt(v.size)
        assert abs((sizes == 1).mean() - 0.55) < 4 * np.sqrt(0.2475 / sizes.size)

    def test_laplace_sizes(self):
        for p in (0.3, 0.5):
            sizes = sample_cluster_sizes(p, 100000, seed=int(p * 10), cap=10**6)
            for lam in (0.1, 0.5, 1.0, 2.0):
                v = np.exp(-lam * sizes)
                se = v.std() / np.sqrt(v.size)
                assert abs(v.mean() - cluster_size_laplace(p, lam)) < 4 * se
        sizes = sample_cluster_sizes(0.5, 100000, 'T', seed=7, cap=10**6)
        v = np.exp(-0.5 * sizes)
        assert abs(v.mean() - cluster_size_laplace(0.5, 0.5, 'T')) < 4 * v.std() / np.sqrt(v.size)

    def test_closed_form(self):
        assert cluster_size_laplace(0.5, 0.0) == pytest.approx(1.0)
        assert cluster_size_laplace(0.5, 1.0) == pytest.approx(0.204940, abs=1e-6)
        assert cluster_size_laplace(0.25, 0.0) == pytest.approx(1.0)
        assert cluster_size_laplace(0.0, 2.0) == pytest.approx(np.exp(-2.0))
        lam = np.array([0.1, 1.0, 3.0])
        x = np.exp(-lam)
        p = 0.4
        D = np.sqrt(1 - 4*p*(1 - p)*x)
        assert_allclose(cluster_size_laplace(p, lam), (1 - D)/(2*p))
        assert_allclose(cluster_size_laplace(p, lam, 'T'),
                        (1 - 2*p*(1 - p)*x - D)/(2*p*p*x))
        with pytest.raises(ValueError):
            cluster_size_laplace(0.6, 1.0)
        with pytest.raises(ValueError):
            cluster_size_laplace(0.5, -1.0)

    def test_pmf(self):
        for p in (0.2, 0.5, 0.8):
            #
            # The single edge below the root of TStar, then a two-slot vertex.
            #
            for n in range(1, 7):
                exact = (1 - p) if n == 1 else sum(
                    p * shape_probability(s, p) for s in enumerate_shapes(n - 1))
                assert cluster_size_pmf(p, 6)[n - 1] == pytest.approx(exact)
                exact_t = sum(shape_probability(s, p) for s in enumerate_shapes(n))
                assert cluster_size_pmf(p, 6, 'T')[n - 1] == pytest.approx(exact_t)
        lam = 0.7
        n = np.arange(1, 2001)
        for substrate in ('TStar', 'T'):
            pmf = cluster_size_pmf(0.3, 2000, substrate)
            assert (pmf * np.exp(-lam * n)).sum() == pytest.approx(
                cluster_size_laplace(0.3, lam, substrate))

    def test_duality(self):
        for p in (0.6, 0.75, 0.9):
            for substrate in ('TStar', 'T'):
                assert_allclose(cluster_size_pmf(p, 6, substrate, conditioned_finite=True),
                                cluster_size_pmf(dual_parameter(p), 6, substrate))
        assert extinction_probability(0.75, 'T') == pytest.approx(1.0/9.0)
        assert extinction_probability(0.75) == pytest.approx(1.0/3.0)
        assert extinction_probability(0.4) == 1.0
        assert dual_parameter(0.75) == 0.25
        assert dual_parameter(0.9) == pytest.approx(0.1)
        assert dual_parameter(0.5 + 1e-6) == pytest.approx(0.5 - 1e-6)
        for bad in (0.5, 0.2, 1.0):
            with pytest.raises(ValueError):
                dual_parameter(bad)

    def test_scales(self):
        d, q = scales(1.0)
        assert d == pytest.approx(1/np.pi)
        assert q == pytest.approx(np.pi)
        d, q = scales(0.1)
        assert d == pytest.approx(31.8310, abs=1e-4)
        assert q == pytest.approx(0.00314159, abs=1e-8)
        rng = np.random.default_rng(99)
        for eps in rng.random(100):
            d, q = scales(eps)
            assert q == pytest.approx(eps / d)
        with pytest.raises(ValueError):
            scales(0.0)
