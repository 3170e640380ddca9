# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Atomic probability measures on metric skeletons.
"""
import numpy as np
from . import ContinuumException
from ..rng import get_rng


class TreeMassMeasure(object):
    """Atoms placed on the edges of a :class:`~critwalk.continuum.skeleton.MetricTreeSkeleton`.

    An atom sits at `offset` from the upper end of edge `edge`; edge 0
    with offset 0 is the root.  Masses are normalized to sum to 1.

    Parameters
    ----------
    skeleton : :class:`~critwalk.continuum.skeleton.MetricTreeSkeleton`
        The skeleton.
    edges, offsets, masses : array-like
        One entry per atom.
    """

    def __init__(self, skeleton, edges, offsets, masses):
        edges = np.asarray(edges, dtype=np.int64)
        offsets = np.asarray(offsets, dtype=np.float64)
        masses = np.asarray(masses, dtype=np.float64)
        if not (edges.shape == offsets.shape == masses.shape):
            raise ValueError('edges, offsets and masses must have the same shape.')
        if masses.size == 0 or (masses <= 0).any():
            raise ValueError('A mass measure needs positive masses.')
        if (edges < 0).any() or (edges >= skeleton.node_count).any():
            raise ValueError('Atoms must lie on edges of the skeleton.')
        if (offsets < 0).any() or (offsets > skeleton.lengths[edges] + 1e-12).any():
            raise ValueError('Offsets must lie within their edge.')
        masses = masses / masses.sum()
        if abs(masses.sum() - 1.0) > 1e-12:
            raise ContinuumException('Masses do not normalize to 1.')
        self.skeleton = skeleton
        self.edges = edges
        self.offsets = np.minimum(offsets, skeleton.lengths[edges])
        self.masses = masses

    @property
    def size(self):
        return self.masses.size

    def root_distance(self):
        """Distance of every atom from the root.
        """
        return self.skeleton.point_distance(self.edges, self.offsets)

    def positions_along(self):
        """Relative position of every atom along the concatenated edges.
        """
        return self.skeleton.relative_position(self.edges, self.offsets)

    def write(self, filename):
        """Export the atoms as ``edge, offset, mass``.
        """
        from ..export import write_columns
        return write_columns(filename, ['edge', 'offset', 'mass'],
                             [self.edges, self.offsets, self.masses])

    def __repr__(self):
        return 'TreeMassMeasure(atoms={0:d})'.format(self.size)


def _reduced_draw(K, n, rng, unit):
    """One uniform tree reduced to `K` random vertices, or None if an anchor
    is an ancestor of another.
    """
    from ..percolation.conditioned import sample_uniform_tree
    from ..trees.reduced import reduce
    from .skeleton import skeleton_from_reduced
    tree = sample_uniform_tree(n, rng)
    anchors = rng.choice(np.arange(1, n), size=K, replace=False)
    index = reduce(tree, anchors)
    skeleton, edges, offsets = skeleton_from_reduced(tree, index, anchors, unit=unit)
    if skeleton.leaf_count != K:
        return None
    counts = np.bincount(index.projection, minlength=n)[index.members]
    return skeleton, edges, offsets, counts / float(n)


def sample_reduced_crt(K, n, seed=None, max_tries=10):
    """Reduced tree with `K` leaves and its branch masses, sampled jointly.

    A uniform tree on `n` vertices is reduced to the root and `K` random
    vertices.  Edge lengths are graph distances divided by ``sqrt(n)``, so
    the skeleton has approximately the law of
    :func:`~critwalk.continuum.skeleton.line_breaking`.  Every vertex of the
    reduced subtree carries the fraction of the `n` vertices that project
    onto it.  Long spines carry many small atoms, short spines few large
    ones.

    Parameters
    ----------
    K : :class:`int`
        Number of leaves, at least 1.
    n : :class:`int`
        Size of the uniform tree.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    max_tries : :class:`int`, optional
        Draws in which an anchor lies below another are resampled this many
        times.

    Returns
    -------
    :class:`tuple`
        The :class:`~critwalk.continuum.skeleton.MetricTreeSkeleton` and its
        :class:`TreeMassMeasure`.

    Raises
    ------
    ContinuumException
        If every draw was degenerate.
    """
    if K < 1:
        raise ValueError('At least one leaf is required.')
    if n <= K:
        raise ValueError('The uniform tree must have more vertices than the skeleton has points.')
    rng = get_rng(seed)
    for attempt in range(max_tries):
        draw = _reduced_draw(K, n, rng, 1.0 / np.sqrt(n))
        if draw is None:
            continue
        skeleton, edges, offsets, masses = draw
        return skeleton, TreeMassMeasure(skeleton, edges, offsets, masses)
    raise ContinuumException('No reduced subtree with {0:d} leaves in {1:d} draws.'.format(
        K, max_tries))


def sample_branch_mass_measure(skeleton, n, seed=None, max_tries=10):
    """Mass measure of a uniform random tree carried onto a given skeleton.

    A uniform tree on `n` vertices is reduced to as many random vertices as
    the skeleton has labelled points.  Every vertex of the reduced subtree
    gets the fraction of the `n` vertices that project onto it, and is
    carried to the point of `skeleton` at the same relative position along
    the concatenated edges.

    The masses do not depend on the lengths of `skeleton`, so the pair is
    not a sample of a reduced tree with its own masses; use
    :func:`sample_reduced_crt` for that.

    Parameters
    ----------
    skeleton : :class:`~critwalk.continuum.skeleton.MetricTreeSkeleton`
        Target skeleton.
    n : :class:`int`
        Size of the uniform tree.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    max_tries : :class:`int`, optional
        Draws whose reduced subtree has a different number of leaves than
        `skeleton` are resampled this many times.

    Returns
    -------
    :class:`TreeMassMeasure`
        Atoms of total mass 1.

    Raises
    ------
    ContinuumException
        If no draw matched the leaf count of `skeleton`.
    """
    K = skeleton.leaves.size
    if n <= K:
        raise ValueError('The uniform tree must have more vertices than the skeleton has points.')
    rng = get_rng(seed)
    for attempt in range(max_tries):
        draw = _reduced_draw(K, n, rng, 1.0)
        if draw is None or draw[0].leaf_count != skeleton.leaf_count:
            continue
        discrete, edges, offsets, masses = draw
        s = discrete.relative_position(edges, offsets)
        e, o = skeleton.locate(s)
        root = s <= 0
        e[root] = 0
        o[root] = 0.0
        return TreeMassMeasure(skeleton, e, o, masses)
    raise ContinuumException('No reduced subtree with {0:d} leaves in {1:d} draws.'.format(
        skeleton.leaf_count, max_tries))
