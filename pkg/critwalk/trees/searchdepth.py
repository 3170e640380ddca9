# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""The search-depth encoding of ordered trees.

For a tree with `n` vertices the depth-first walk around the tree visits
``2n - 1`` vertices.  The search-depth curve samples their depths on the
grid ``i/2n``, ``i = 1 .. 2n-1``, and adds the endpoints ``0`` at ``i = 0``
and ``i = 2n``.
"""
import numpy as np
from .ordered import OrderedRootedTree


class SearchDepthCurve(object):
    """Search-depth curve of a tree with `n` vertices.

    Parameters
    ----------
    values : array-like
        The ``2n + 1`` integer depths.

    Raises
    ------
    ValueError
        If `values` violates the curve invariants: odd length at least 3,
        zero endpoints, zero at the first and last visit of the root,
        non-negative values and unit steps in between.
    """

    def __init__(self, values):
        values = np.asarray(values)
        if values.ndim != 1 or values.size < 3 or values.size % 2 == 0:
            raise ValueError('A search-depth curve has an odd number (>= 3) of samples.')
        if not np.issubdtype(values.dtype, np.integer):
            if not np.all(values == np.round(values)):
                raise ValueError('Search-depth values must be integers.')
        values = values.astype(np.int64)
        n = (values.size - 1) // 2
        if values[0] != 0 or values[1] != 0 or values[-1] != 0 or values[2*n - 1] != 0:
            raise ValueError('Search-depth curves start and end at the root (depth 0).')
        if (values < 0).any():
            raise ValueError('Search-depth values must be non-negative.')
        if n > 1 and (np.abs(np.diff(values[1:2*n])) != 1).any():
            raise ValueError('Interior search-depth steps must be +1 or -1.')
        self.n = n
        self.values = values

    @property
    def grid(self):
        """The sample points ``i/2n``.
        """
        return np.arange(self.values.size) / (2.0 * self.n)

    def __call__(self, s):
        """Linear interpolation of the curve at `s` in ``[0, 1]``.
        """
        return np.interp(s, self.grid, self.values)

    def write(self, filename):
        """Export as ``s, depth`` CSV columns.
        """
        from ..export import write_columns
        return write_columns(filename, ['s', 'depth'], [self.grid, self.values])

    def __len__(self):
        return self.values.size

    def __repr__(self):
        return 'SearchDepthCurve(n={0:d})'.format(self.n)


def search_depth(tree):
    """Encode `tree` by its search-depth curve.

    Parameters
    ----------
    tree : :class:`~critwalk.trees.ordered.OrderedRootedTree`
        The tree.

    Returns
    -------
    :class:`SearchDepthCurve`
        The ``2n + 1`` depths.

    Examples
    --------
    >>> from critwalk.trees.ordered import OrderedRootedTree
    >>> from critwalk.trees.searchdepth import search_depth
    >>> search_depth(OrderedRootedTree([-1, 0, 0])).values.tolist()
    [0, 0, 1, 0, 1, 0, 0]
    """
    steps = tree.dfs_steps
    values = np.zeros(2 * tree.vertex_count + 1, dtype=np.int64)
    values[2:2 + steps.size] = np.cumsum(steps)
    return SearchDepthCurve(values)


def tree_from_search_depth(curve):
    """Decode a search-depth curve.

    Parameters
    ----------
    curve : :class:`SearchDepthCurve` or array-like
        The curve; raw arrays are validated first.

    Returns
    -------
    :class:`~critwalk.trees.ordered.OrderedRootedTree`
        The tree, labelled in depth-first order.

    Raises
    ------
    ValueError
        If the curve is invalid.
    """
    if not isinstance(curve, SearchDepthCurve):
        curve = SearchDepthCurve(curve)
    n = curve.n
    steps = np.diff(curve.values[1:2*n]).tolist()
    parent = [-1]
    stack = [0]
    for s in steps:
        if s > 0:
            parent.append(stack[-1])
            stack.append(len(parent) - 1)
        else:
            stack.pop()
    return OrderedRootedTree(parent, check=False)
