# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Reduced subtrees spanned by a set of anchor vertices, and the projection
of every vertex onto them.
"""
import numpy as np


class ReducedSubtreeIndex(object):
    """Membership flags and nearest-member projection of a reduced subtree.

    Parameters
    ----------
    member : array-like of :class:`bool`
        Membership flag per vertex.
    projection : array-like of :class:`int`
        Nearest member vertex per vertex.
    anchors : array-like of :class:`int`
        The anchors that span the subtree.
    """

    def __init__(self, member, projection, anchors):
        self.member = np.asarray(member, dtype=bool)
        self.projection = np.asarray(projection, dtype=np.int64)
        self.anchors = np.asarray(anchors, dtype=np.int64)

    @property
    def members(self):
        """Labels of the member vertices, in increasing order.
        """
        return np.flatnonzero(self.member)

    def __contains__(self, v):
        return bool(self.member[v])

    def __call__(self, v):
        """Project vertex (or array of vertices) `v`.
        """
        return self.projection[v]

    def __repr__(self):
        return 'ReducedSubtreeIndex(members={0:d}, anchors={1:d})'.format(
            int(self.member.sum()), self.anchors.size)


def reduce(tree, anchors):
    """Reduce `tree` to the union of the root-to-anchor paths.

    Parameters
    ----------
    tree : :class:`~critwalk.trees.ordered.OrderedRootedTree`
        The tree.
    anchors : iterable of :class:`int`
        Anchor vertices.

    Returns
    -------
    :class:`ReducedSubtreeIndex`
        Members and projection.  A non-member vertex has no member in its own
        subtree, so its nearest member is its first member ancestor.

    Raises
    ------
    ValueError
        If `anchors` is empty.
    IndexError
        If an anchor is not a vertex of `tree`.

    Examples
    --------
    >>> from critwalk.trees.ordered import OrderedRootedTree
    >>> from critwalk.trees.reduced import reduce
    >>> reduce(OrderedRootedTree([-1, 0, 1]), [1]).projection.tolist()
    [0, 1, 1]
    """
    anchors = np.unique(np.asarray(list(anchors), dtype=np.int64))
    if anchors.size == 0:
        raise ValueError('At least one anchor vertex is required.')
    for a in anchors:
        tree._check_vertex(a)
    p = tree.parent.tolist()
    n = len(p)
    member = [False] * n
    for a in anchors.tolist():
        v = a
        while v >= 0 and not member[v]:
            member[v] = True
            v = p[v]
    projection = list(range(n))
    for v in range(1, n):
        if not member[v]:
            projection[v] = projection[p[v]]
    return ReducedSubtreeIndex(member, projection, anchors)
