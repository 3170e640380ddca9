# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Truncated incipient infinite cluster of the binary tree.

The cluster is a backbone ``0, 1, 2, ...`` with an independent critical
cluster of the degree-one-root tree hanging from every backbone vertex.
Only the first `K` backbone vertices are kept.
"""
import numpy as np
from astropy.utils import lazyproperty
from .cluster import sample_cluster_sizes
from .conditioned import sample_conditioned_cluster
from ..rng import get_rng, spawn_key, keyed_rng
from ..trees.ordered import OrderedRootedTree


class IICInstance(object):
    """Backbone of length `K` with its branches.

    Branches are either given explicitly or built on demand from their
    sizes: a critical cluster conditioned on its size is uniform over the
    subtrees of that size.

    Parameters
    ----------
    branch_sizes : array-like
        Size of branch ``k``, ``k = 0 .. K-1``.
    key : :class:`list`, optional
        Key of the sub-streams used to build branches on demand.
    branches : :class:`list`, optional
        Explicit branches; `branch_sizes` may then be ``None``.
    censored : array-like, optional
        Backbone indices whose branch size was censored at the cluster cap.
    """

    def __init__(self, branch_sizes=None, key=None, branches=None, censored=None):
        if branches is not None:
            self._branches = dict(enumerate(branches))
            branch_sizes = [b.vertex_count for b in branches]
        else:
            if key is None:
                raise ValueError('A sub-stream key is needed to build branches on demand.')
            self._branches = dict()
        self.branch_sizes = np.asarray(branch_sizes, dtype=np.int64)
        if self.branch_sizes.size < 1 or (self.branch_sizes < 1).any():
            raise ValueError('An IIC needs at least one branch of positive size.')
        self.key = key
        self.censored = np.asarray([] if censored is None else censored, dtype=np.int64)
        if ((self.censored < 0) | (self.censored >= self.branch_sizes.size)).any():
            raise ValueError('Censored branches must lie on the backbone.')

    @property
    def is_censored(self):
        """``True`` if some branch is only a stand-in for a larger cluster.
        """
        return self.censored.size > 0

    @property
    def backbone_length(self):
        """Number of backbone vertices kept.
        """
        return self.branch_sizes.size

    def branch(self, k):
        """Branch hanging from backbone vertex `k`.
        """
        if not (0 <= k < self.backbone_length):
            raise IndexError('No branch {0:d} on a backbone of length {1:d}.'.format(k, self.backbone_length))
        if k not in self._branches:
            self._branches[k] = sample_conditioned_cluster(int(self.branch_sizes[k]),
                                                           keyed_rng(self.key, k))
        return self._branches[k]

    @property
    def branches(self):
        """All branches, in backbone order.
        """
        return [self.branch(k) for k in range(self.backbone_length)]

    @lazyproperty
    def backbone_vertices(self):
        """Labels of the backbone vertices in :attr:`tree`.
        """
        base = np.zeros(self.backbone_length, dtype=np.int64)
        base[1:] = np.cumsum(self.branch_sizes)[:-1]
        return base

    @lazyproperty
    def tree(self):
        """The glued tree.

        Backbone vertex ``k`` is the root of branch ``k``; its backbone child
        comes after the branch children, so the labels are already in
        depth-first order.
        """
        base = self.backbone_vertices
        parent = np.empty(int(self.branch_sizes.sum()), dtype=np.int64)
        for k, b in enumerate(self.branches):
            parent[base[k] + 1:base[k] + b.vertex_count] = b.parent[1:] + base[k]
        parent[base[1:]] = base[:-1]
        parent[0] = -1
        return OrderedRootedTree(parent, check=False)

    @lazyproperty
    def projection(self):
        """Backbone index of every vertex of :attr:`tree`.
        """
        return np.repeat(np.arange(self.backbone_length, dtype=np.int64), self.branch_sizes)

    def __repr__(self):
        return 'IICInstance(backbone_length={0:d})'.format(self.backbone_length)


def build_iic(K, seed=None, cap=None):
    """Incipient infinite cluster truncated to `K` backbone vertices.

    Branches larger than `cap` are built with ``cap + 1`` vertices and
    listed in :attr:`IICInstance.censored`.

    Parameters
    ----------
    K : :class:`int`
        Backbone length, at least 1.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    cap : :class:`int`, optional
        Largest branch size, :attr:`critwalk.conf.cluster_cap` by default.

    Returns
    -------
    :class:`IICInstance`
        The cluster; branches are built on first access.
    """
    from astropy import log
    from .. import conf
    if K < 1:
        raise ValueError('The backbone needs at least one vertex.')
    if cap is None:
        cap = conf.cluster_cap
    rng = get_rng(seed)
    sizes = sample_cluster_sizes(0.5, K, 'TStar', rng, cap=cap)
    log.debug("IIC with {0:d} branches, {1:d} vertices.".format(K, int(sizes.sum())))
    return IICInstance(sizes, key=spawn_key(rng), censored=np.flatnonzero(sizes > cap))
