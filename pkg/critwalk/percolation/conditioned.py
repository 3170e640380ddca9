# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Galton-Watson trees conditioned on their size.

Trees are sampled exactly with the cycle lemma: an exchangeable sequence
of offspring counts with the right total is rotated so that its
Lukasiewicz path first reaches -1 at the last step.
"""
import numpy as np
from scipy.special import gammaln
from ..rng import get_rng
from ..trees.ordered import OrderedRootedTree

OFFSPRING = ('binomial', 'poisson')


def _binomial_counts(m, rng):
    """Offspring counts of an m-vertex Binomial(2, 1/2) tree, in random order.

    With ``a`` vertices of two children there are ``a + 1`` leaves and
    ``m - 1 - 2a`` vertices of one child.
    """
    a = np.arange(0, (m - 1)//2 + 1, dtype=np.float64)
    b = m - 1 - 2*a
    logw = (-gammaln(a + 1) - gammaln(b + 1) - gammaln(a + 2) +
            (2*a + 1)*np.log(0.25) + b*np.log(0.5))
    w = np.exp(logw - logw.max())
    twos = int(rng.choice(a.size, p=w / w.sum()))
    counts = np.repeat(np.array([2, 1, 0], dtype=np.int64),
                       [twos, m - 1 - 2*twos, twos + 1])
    return rng.permutation(counts)


def _rotate(counts):
    """Cyclic shift whose Lukasiewicz path stays non-negative until the end.
    """
    walk = np.cumsum(counts - 1)
    k = int(np.argmin(walk))
    return np.roll(counts, -(k + 1))


def _decode(counts):
    """Parent map of the tree with preorder offspring sequence `counts`.
    """
    c = counts.tolist()
    m = len(c)
    parent = [-1] * m
    remaining = list(c)
    stack = [0] if c[0] > 0 else []
    for i in range(1, m):
        u = stack[-1]
        parent[i] = u
        remaining[u] -= 1
        if remaining[u] == 0:
            stack.pop()
        if c[i] > 0:
            stack.append(i)
    return np.array(parent, dtype=np.int64)


def conditioned_galton_watson(n, offspring='binomial', seed=None):
    """Galton-Watson tree conditioned to have exactly `n` vertices.

    Parameters
    ----------
    n : :class:`int`
        Number of vertices, at least 1.
    offspring : {'binomial', 'poisson'}, optional
        Binomial(2, 1/2) or Poisson(1) offspring.  Conditioned Poisson(1)
        trees are uniform random trees on `n` vertices.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.

    Returns
    -------
    :class:`~critwalk.trees.ordered.OrderedRootedTree`
        The tree.
    """
    if n < 1:
        raise ValueError('A tree has at least one vertex.')
    if offspring not in OFFSPRING:
        raise ValueError('Unknown offspring law: {0}.'.format(offspring))
    rng = get_rng(seed)
    if offspring == 'binomial':
        counts = _binomial_counts(n, rng)
    else:
        #
        # i.i.d. Poisson counts given their sum are multinomial.
        #
        counts = rng.multinomial(n - 1, np.full(n, 1.0/n)).astype(np.int64)
    return OrderedRootedTree(_decode(_rotate(counts)), check=False)


def sample_uniform_tree(n, seed=None):
    """Uniform random tree on `n` vertices, as an ordered tree.
    """
    return conditioned_galton_watson(n, 'poisson', seed)


def sample_conditioned_cluster(n, seed=None, return_slots=False):
    """Critical cluster of the degree-one-root tree conditioned to have `n`
    vertices.

    The law is uniform over the `n`-vertex subtrees of the tree containing
    the root.  Below the root it is a Binomial(2, 1/2) Galton-Watson tree
    with ``n - 1`` vertices; a single child is put in either slot with
    probability 1/2.

    Parameters
    ----------
    n : :class:`int`
        Number of vertices, at least 1.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    return_slots : :class:`bool`, optional
        Also return the child slot of every vertex (root -1).

    Returns
    -------
    :class:`~critwalk.trees.ordered.OrderedRootedTree`
        The cluster.
    """
    if n < 1:
        raise ValueError('A cluster has at least one vertex.')
    rng = get_rng(seed)
    if n == 1:
        tree = OrderedRootedTree([-1], check=False)
        slots = np.array([-1], dtype=np.int64)
    else:
        below = conditioned_galton_watson(n - 1, 'binomial', rng)
        parent = np.empty(n, dtype=np.int64)
        parent[0] = -1
        parent[1:] = below.parent + 1
        parent[1] = 0
        tree = OrderedRootedTree(parent, check=False)
        slots = np.full(n, -1, dtype=np.int64)
        slots[1] = 0
        if n > 2:
            order, offsets = tree._csr
            pc = parent[order]
            rank = np.arange(n - 1) - offsets[pc]
            nkids = np.diff(offsets)[pc]
            coin = rng.integers(0, 2, size=n - 1)
            slots[order] = np.where(nkids == 2, rank, coin)
            slots[1] = 0
    if return_slots:
        return tree, slots
    return tree
