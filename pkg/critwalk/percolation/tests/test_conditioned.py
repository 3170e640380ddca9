# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
import numpy as np
import pytest
from ..conditioned import (conditioned_galton_watson, sample_uniform_tree,
                           sample_conditioned_cluster)


class TestConditioned(object):
    """Test the functions in critwalk.percolation.conditioned.
    """

    def setup_method(self):
        pass

    def teardown_method(self):
        pass

    def test_small(self):
        tree = sample_conditioned_cluster(1, seed=1)
        assert tree.vertex_count == 1
        for seed in range(5):
            tree = sample_conditioned_cluster(2, seed=seed)
            assert tree.to_parentheses() == '(())'
        with pytest.raises(ValueError):
            sample_conditioned_cluster(0)
        with pytest.raises(ValueError):
            conditioned_galton_watson(3, 'geometric')

    def test_uniform_embedded(self):
        #
        # Five 4-vertex subtrees of the degree-one-root tree, equally likely.
        #
        rng = np.random.default_rng(4)
        draws = 20000
        counts = dict()
        for k in range(draws):
            tree, slots = sample_conditioned_cluster(4, rng, return_slots=True)
            key = (tree.to_parentheses(), tuple(slots.tolist()))
            counts[key] = counts.get(key, 0) + 1
        assert len(counts) == 5
        se = np.sqrt(0.2 * 0.8 / draws)
        for c in counts.values():
            assert abs(c / draws - 0.2) < 4 * se

    def test_degree_constraint(self):
        rng = np.random.default_rng(1001)
        for n in (3, 10, 1000, 5000):
            tree, slots = sample_conditioned_cluster(n, rng, return_slots=True)
            assert tree.vertex_count == n
            assert len(tree.children(0)) == 1
            kids = np.bincount(tree.parent[1:], minlength=n)
            assert (kids <= 2).all()
            assert set(slots[1:].tolist()) <= set([0, 1])

    def test_uniform_tree(self):
        #
        # Poisson(1) weights: path 2/3, cherry 1/3.
        #
        rng = np.random.default_rng(33)
        draws = 20000
        paths = sum(sample_uniform_tree(3, rng).to_parentheses() == '((()))'
                    for k in range(draws))
        assert abs(paths / draws - 2.0/3.0) < 4 * np.sqrt(2.0/9.0 / draws)
        tree = conditioned_galton_watson(10000, 'poisson', rng)
        assert tree.vertex_count == 10000
