# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Finite ordered rooted trees.

Every tree in the package, whether a percolation cluster, a branch of the
IIC or a conditioned Galton-Watson tree, is an :class:`OrderedRootedTree`.
Vertices are labelled ``0 .. n-1`` in depth-first discovery order, so the
root is ``0`` and every parent has a smaller label than its children.
"""
import numpy as np
from astropy.utils import lazyproperty
from . import TreesException


class OrderedRootedTree(object):
    """An immutable finite ordered rooted tree.

    Parameters
    ----------
    parent : array-like
        ``parent[v]`` is the parent of vertex `v`; ``parent[0]`` must be
        ``-1``.  Children of a vertex are ordered by their label in `parent`.
        The tree is relabelled in depth-first discovery order; the original
        label of new vertex ``v`` is kept in :attr:`original_ids`.
    check : :class:`bool`, optional
        If ``False``, `parent` is trusted to be a valid tree already in
        depth-first order.  Used internally by samplers.

    Raises
    ------
    ValueError
        If `parent` is empty or refers to labels outside ``0 .. n-1``.
    TreesException
        If `parent` contains a cycle, so that some vertex cannot reach
        the root.
    """

    def __init__(self, parent, check=True):
        parent = np.asarray(parent, dtype=np.int64)
        if parent.ndim != 1 or parent.size == 0:
            raise ValueError('The parent map must be a non-empty 1-d array.')
        if not check:
            self._parent = parent
            self.original_ids = np.arange(parent.size, dtype=np.int64)
            return
        n = parent.size
        if parent[0] != -1:
            raise ValueError('Vertex 0 must be the root (parent -1).')
        if n > 1:
            rest = parent[1:]
            if (rest < 0).any() or (rest >= n).any():
                raise ValueError('Parent labels must lie in 0 .. n-1.')
        order, offsets = _children_csr(parent)
        o = order.tolist()
        off = offsets.tolist()
        preorder = []
        stack = [0]
        while stack:
            u = stack.pop()
            preorder.append(u)
            stack.extend(reversed(o[off[u]:off[u + 1]]))
        if len(preorder) != n:
            raise TreesException('Parent map does not describe a connected tree.')
        preorder = np.array(preorder, dtype=np.int64)
        relabel = np.empty(n, dtype=np.int64)
        relabel[preorder] = np.arange(n, dtype=np.int64)
        new_parent = np.full(n, -1, dtype=np.int64)
        new_parent[1:] = relabel[parent[preorder[1:]]]
        self._parent = new_parent
        self.original_ids = preorder

    @classmethod
    def from_parentheses(cls, text):
        """Decode a balanced-parentheses string.

        Each vertex is written as ``(`` followed by its children and ``)``,
        so a single vertex is ``()``.

        Parameters
        ----------
        text : :class:`str`
            The encoding.

        Returns
        -------
        :class:`OrderedRootedTree`
            The decoded tree.

        Examples
        --------
        >>> from critwalk.trees.ordered import OrderedRootedTree
        >>> OrderedRootedTree.from_parentheses('(()())').vertex_count
        3
        """
        text = text.strip()
        if len(text) < 2 or len(text) % 2 != 0 or set(text) - set('()'):
            raise ValueError('Invalid parenthesis encoding: {0}.'.format(text))
        parent = []
        stack = []
        for i, c in enumerate(text):
            if c == '(':
                if i > 0 and not stack:
                    raise ValueError('Parenthesis encoding contains more than one tree.')
                parent.append(stack[-1] if stack else -1)
                stack.append(len(parent) - 1)
            else:
                if not stack:
                    raise ValueError('Unbalanced parenthesis encoding.')
                stack.pop()
        if stack:
            raise ValueError('Unbalanced parenthesis encoding.')
        return cls(parent, check=False)

    @property
    def vertex_count(self):
        """Number of vertices.
        """
        return self._parent.size

    def __len__(self):
        return self._parent.size

    @property
    def parent(self):
        """Parent map as an array, with ``parent[0] == -1``.
        """
        return self._parent

    @lazyproperty
    def _csr(self):
        return _children_csr(self._parent)

    def children(self, v):
        """Ordered children of vertex `v`.
        """
        self._check_vertex(v)
        order, offsets = self._csr
        return order[offsets[v]:offsets[v + 1]]

    @lazyproperty
    def depth(self):
        """Distance of every vertex from the root.
        """
        p = self._parent.tolist()
        d = [0] * len(p)
        for v in range(1, len(p)):
            d[v] = d[p[v]] + 1
        return np.array(d, dtype=np.int64)

    @lazyproperty
    def degree(self):
        """Graph degree of every vertex.
        """
        n = self.vertex_count
        deg = np.bincount(self._parent[1:], minlength=n).astype(np.int64)
        deg[1:] += 1
        return deg

    @lazyproperty
    def subtree_size(self):
        """Number of vertices in the subtree of every vertex.
        """
        p = self._parent.tolist()
        size = [1] * len(p)
        for v in range(len(p) - 1, 0, -1):
            size[p[v]] += size[v]
        return np.array(size, dtype=np.int64)

    @lazyproperty
    def adjacency(self):
        """Neighbour lists in compressed form.

        Returns a tuple ``(offsets, neighbours)``; the neighbours of `v` are
        ``neighbours[offsets[v]:offsets[v+1]]``, parent first, then the
        children in order.
        """
        n = self.vertex_count
        deg = self.degree
        offsets = np.zeros(n + 1, dtype=np.int64)
        offsets[1:] = np.cumsum(deg)
        neighbours = np.empty(offsets[-1], dtype=np.int64)
        if n > 1:
            v = np.arange(1, n)
            neighbours[offsets[v]] = self._parent[v]
            order, coff = self._csr
            pc = self._parent[order]
            rank = np.arange(n - 1) - coff[pc]
            neighbours[offsets[pc] + (pc != 0) + rank] = order
        return (offsets, neighbours)

    @lazyproperty
    def dfs_steps(self):
        """Depth changes (+1 or -1) of the depth-first walk around the tree.

        The walk starts and ends at the root and has ``2*(n-1)`` steps.
        """
        n = self.vertex_count
        if n == 1:
            return np.zeros(0, dtype=np.int64)
        d = self.depth
        #
        # Before vertex v is discovered the walk climbs from v-1 to parent(v).
        #
        closes = d[:-1] - d[1:] + 1
        ends = np.cumsum(closes + 1) - 1
        steps = -np.ones(2 * (n - 1), dtype=np.int64)
        steps[ends] = 1
        return steps

    def to_parentheses(self):
        """Canonical balanced-parentheses encoding.

        Examples
        --------
        >>> from critwalk.trees.ordered import OrderedRootedTree
        >>> OrderedRootedTree([-1, 0, 0]).to_parentheses()
        '(()())'
        """
        inner = np.where(self.dfs_steps > 0, '(', ')')
        return '(' + ''.join(inner.tolist()) + ')'

    def write(self, filename):
        """Export the tree as ``parentId, childId`` CSV columns.

        The root row has ``parentId = -1``.
        """
        from ..export import write_columns
        return write_columns(filename, ['parentId', 'childId'],
                             [self._parent, np.arange(self.vertex_count)])

    def distance(self, u, v):
        """Graph distance between `u` and `v`.
        """
        return graph_distance(self, u, v)

    def _check_vertex(self, v):
        if not (0 <= int(v) < self.vertex_count):
            raise IndexError('Vertex {0:d} is not in a tree of {1:d} vertices.'.format(int(v), self.vertex_count))

    def __eq__(self, other):
        if not isinstance(other, OrderedRootedTree):
            return NotImplemented
        return (self.vertex_count == other.vertex_count and
                bool((self._parent == other._parent).all()))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._parent.tobytes())

    def __repr__(self):
        return 'OrderedRootedTree(vertex_count={0:d})'.format(self.vertex_count)


def _children_csr(parent):
    """Children of every vertex, grouped by parent and ordered by label.
    """
    n = parent.size
    if n == 1:
        return (np.zeros(0, dtype=np.int64), np.zeros(2, dtype=np.int64))
    order = np.argsort(parent[1:], kind='stable').astype(np.int64) + 1
    counts = np.bincount(parent[1:], minlength=n)
    offsets = np.zeros(n + 1, dtype=np.int64)
    offsets[1:] = np.cumsum(counts)
    return (order, offsets)


def graph_distance(tree, u, v):
    """Number of edges on the path between `u` and `v`.

    Parameters
    ----------
    tree : :class:`OrderedRootedTree`
        The tree.
    u, v : :class:`int`
        Vertex labels.

    Returns
    -------
    :class:`int`
        The path length.

    Raises
    ------
    IndexError
        If either label is not a vertex of `tree`.

    Examples
    --------
    >>> from critwalk.trees.ordered import OrderedRootedTree, graph_distance
    >>> graph_distance(OrderedRootedTree([-1, 0, 0]), 1, 2)
    2
    """
    tree._check_vertex(u)
    tree._check_vertex(v)
    u, v = int(u), int(v)
    d = tree.depth
    p = tree.parent
    a, b = u, v
    #
    # Ancestors carry smaller labels, so climbing the larger label meets the LCA.
    #
    while a != b:
        if a > b:
            a = int(p[a])
        else:
            b = int(p[b])
    return int(d[u] + d[v] - 2 * d[a])
