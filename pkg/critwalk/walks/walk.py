# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Discrete time simple random walk on a finite tree.
"""
from warnings import warn
import numpy as np
from . import WalksException, WalksUserWarning
from ..rng import get_rng


class WalkPath(object):
    """Sequence of visited vertices.

    Parameters
    ----------
    vertices : array-like
        ``vertices[t]`` is the position at time `t`.
    """

    def __init__(self, vertices):
        self.vertices = np.asarray(vertices, dtype=np.int64)
        if self.vertices.ndim != 1 or self.vertices.size == 0:
            raise ValueError('A walk visits at least one vertex.')

    @property
    def step_count(self):
        """Number of steps.
        """
        return self.vertices.size - 1

    def __len__(self):
        return self.vertices.size

    def is_path_of(self, tree):
        """``True`` if consecutive positions are neighbours in `tree`.
        """
        v = self.vertices
        if (v < 0).any() or (v >= tree.vertex_count).any():
            return False
        a, b = v[:-1], v[1:]
        parent = tree.parent
        return bool(((parent[a] == b) | (parent[b] == a)).all())

    def write(self, filename):
        """Export the path as ``time, vertex`` CSV columns.
        """
        from ..export import write_columns
        return write_columns(filename, ['time', 'vertex'],
                             [np.arange(self.vertices.size), self.vertices])

    def __repr__(self):
        return 'WalkPath(step_count={0:d})'.format(self.step_count)


class LocalTimeCurve(object):
    """Number of visits to the root up to each integer time.

    Parameters
    ----------
    samples : array-like
        ``samples[t] = #{i <= t : Y_i = root}``.  Starts at 1 and increases
        by 0 or 1.
    """

    def __init__(self, samples):
        samples = np.asarray(samples, dtype=np.int64)
        if samples.ndim != 1 or samples.size == 0 or samples[0] != 1:
            raise ValueError('A local time curve starts at 1.')
        steps = np.diff(samples)
        if ((steps != 0) & (steps != 1)).any():
            raise ValueError('Local time increments must be 0 or 1.')
        self.samples = samples

    def __call__(self, t):
        """Local time at integer time(s) `t`.
        """
        return self.samples[t]

    def __len__(self):
        return self.samples.size

    def inverse(self, t):
        """Generalized inverse ``min{s : l_s > t}``.

        Parameters
        ----------
        t : :class:`int` or array-like
            Local time level(s), below the final value of the curve.

        Returns
        -------
        :class:`int` or :class:`~numpy.ndarray`
            First time(s) the curve exceeds `t`.
        """
        t = np.asarray(t)
        if (t < 0).any() or (t >= self.samples[-1]).any():
            raise ValueError('The curve never exceeds the requested level.')
        s = np.searchsorted(self.samples, t, side='right')
        if s.ndim == 0:
            return int(s)
        return s

    def inverse_curve(self):
        """``l^{-1}_t`` for ``t = 0 .. l_max - 1``, the visit times.
        """
        return self.inverse(np.arange(self.samples[-1]))

    def write(self, filename):
        """Export the curve as ``t, l_t`` CSV columns.
        """
        from ..export import write_columns
        return write_columns(filename, ['t', 'l_t'],
                             [np.arange(self.samples.size), self.samples])

    def __repr__(self):
        return 'LocalTimeCurve(length={0:d})'.format(self.samples.size)


def walk(tree, steps, seed=None):
    """Simple random walk on `tree` started at the root.

    At every step the walk moves to a neighbour chosen uniformly at random.
    On a single-vertex tree the walk stays at the root.

    Parameters
    ----------
    tree : :class:`~critwalk.trees.ordered.OrderedRootedTree`
        The tree.
    steps : :class:`int`
        Number of steps, non-negative.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.

    Returns
    -------
    :class:`WalkPath`
        Positions at times ``0 .. steps``.
    """
    if steps < 0:
        raise ValueError('The number of steps must be non-negative.')
    if tree.vertex_count == 1:
        return WalkPath(np.zeros(steps + 1, dtype=np.int64))
    rng = get_rng(seed)
    offsets, neighbours = tree.adjacency
    off = offsets.tolist()
    nb = neighbours.tolist()
    deg = tree.degree.tolist()
    u = rng.random(steps).tolist()
    path = [0] * (steps + 1)
    v = 0
    for t in range(steps):
        v = nb[off[v] + int(u[t] * deg[v])]
        path[t + 1] = v
    return WalkPath(path)


def local_time_root(path):
    """Local time at the root of a walk.

    Examples
    --------
    >>> from critwalk.walks.walk import WalkPath, local_time_root
    >>> local_time_root(WalkPath([0, 1, 0, 1, 0])).samples.tolist()
    [1, 1, 2, 2, 3]
    """
    return LocalTimeCurve(np.cumsum(path.vertices == 0))


def project_walk(path, index):
    """Project a walk through a vertex map.

    Parameters
    ----------
    path : :class:`WalkPath`
        The walk.
    index : object
        A :class:`~critwalk.trees.reduced.ReducedSubtreeIndex`, an
        :class:`~critwalk.percolation.iic.IICInstance` (projection onto the
        backbone) or any integer array mapping vertices to values; negative
        values mark uncovered vertices.

    Returns
    -------
    :class:`~numpy.ndarray`
        Projected position at every integer time.

    Raises
    ------
    WalksException
        If the walk visits a vertex that `index` does not cover.
    """
    from ..percolation.iic import IICInstance
    truncated = None
    if isinstance(index, IICInstance):
        truncated = index.backbone_length - 1
        phi = index.projection
    elif hasattr(index, 'projection'):
        phi = index.projection
    else:
        phi = np.asarray(index, dtype=np.int64)
    v = path.vertices
    if (v >= phi.size).any():
        raise WalksException('The walk leaves the vertices covered by the index.')
    x = phi[v]
    if (x < 0).any():
        raise WalksException('The walk visits a vertex the index does not cover.')
    if truncated is not None and truncated > 0 and (x == truncated).any():
        warn('The walk reached the truncated end of the backbone.', WalksUserWarning)
    return x
