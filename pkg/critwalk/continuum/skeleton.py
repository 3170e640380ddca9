# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Finite metric trees: reduced trees of an excursion, the line-breaking
construction and skeletons of discrete reduced subtrees.

Edge ``v`` of a skeleton joins node ``v`` to its parent, so edges are
numbered ``1 .. node_count - 1``; the root is node 0.
"""
import numpy as np
from astropy.utils import lazyproperty
from . import ContinuumException
from ..rng import get_rng
from ..trees.ordered import OrderedRootedTree


def _lca(parent, a, b):
    while a != b:
        if a > b:
            a = parent[a]
        else:
            b = parent[b]
    return a


class MetricTreeSkeleton(object):
    """A rooted tree with positive edge lengths and labelled points.

    Nodes are relabelled in depth-first order on construction.

    Parameters
    ----------
    parent : array-like
        Parent of every node, ``-1`` for the root (node 0).
    lengths : array-like
        ``lengths[v]`` is the length of the edge above node `v`;
        ``lengths[0]`` is ignored.
    leaves : array-like
        Node of labelled point ``k``, ``k = 0 .. K-1``.
    """

    def __init__(self, parent, lengths, leaves):
        tree = OrderedRootedTree(parent)
        lengths = np.asarray(lengths, dtype=np.float64)
        if lengths.size != tree.vertex_count:
            raise ValueError('There must be one length per node.')
        lengths = lengths[tree.original_ids]
        lengths[0] = 0.0
        if (lengths[1:] <= 0).any():
            raise ValueError('Edge lengths must be positive.')
        relabel = np.empty(tree.vertex_count, dtype=np.int64)
        relabel[tree.original_ids] = np.arange(tree.vertex_count)
        self.tree = tree
        self.lengths = lengths
        self.leaves = relabel[np.asarray(leaves, dtype=np.int64)]
        self.relabel = relabel

    @property
    def node_count(self):
        return self.tree.vertex_count

    @property
    def parent(self):
        return self.tree.parent

    @property
    def edge_count(self):
        return self.tree.vertex_count - 1

    @property
    def total_length(self):
        """Sum of the edge lengths.
        """
        return float(self.lengths.sum())

    @property
    def leaf_count(self):
        """Number of nodes other than the root without children.
        """
        kids = np.bincount(self.parent[1:], minlength=self.node_count)
        return int((kids[1:] == 0).sum())

    @lazyproperty
    def root_distance(self):
        """Distance of every node from the root.
        """
        p = self.parent.tolist()
        length = self.lengths.tolist()
        d = [0.0] * len(p)
        for v in range(1, len(p)):
            d[v] = d[p[v]] + length[v]
        return np.array(d)

    @lazyproperty
    def _edge_starts(self):
        return np.concatenate(([0.0], np.cumsum(self.lengths[1:])))

    def leaf_distance(self, i, j):
        """Distance between labelled points `i` and `j`.
        """
        a = int(self.leaves[i])
        b = int(self.leaves[j])
        d = self.root_distance
        return float(d[a] + d[b] - 2.0 * d[_lca(self.parent, a, b)])

    def point_distance(self, edge, offset):
        """Distance from the root of the point `offset` along `edge`.
        """
        edge = np.asarray(edge, dtype=np.int64)
        start = np.where(edge > 0, self.root_distance[self.parent[edge]], 0.0)
        return start + np.asarray(offset, dtype=np.float64)

    def relative_position(self, edge, offset):
        """Position of a point along the concatenated edges, in ``[0, 1]``.

        Edges are concatenated in node order; the root is at 0.
        """
        edge = np.asarray(edge, dtype=np.int64)
        before = np.where(edge > 0, self._edge_starts[np.maximum(edge - 1, 0)], 0.0)
        return (before + np.asarray(offset, dtype=np.float64)) / self.total_length

    def locate(self, s):
        """Inverse of :meth:`relative_position`: ``(edge, offset)`` arrays.
        """
        s = np.asarray(s, dtype=np.float64) * self.total_length
        starts = self._edge_starts
        k = np.clip(np.searchsorted(starts, s, side='right') - 1, 0, self.edge_count - 1)
        edge = k + 1
        offset = np.clip(s - starts[k], 0.0, self.lengths[edge])
        return edge, offset

    def write(self, filename):
        """Export the edge list as ``parentNode, childNode, length``.
        """
        from ..export import write_columns
        v = np.arange(1, self.node_count)
        return write_columns(filename, ['parentNode', 'childNode', 'length'],
                             [self.parent[v], v, self.lengths[v]])

    def __repr__(self):
        return 'MetricTreeSkeleton(nodes={0:d}, total_length={1:g})'.format(
            self.node_count, self.total_length)


def _reduced_from_points(values, points):
    """Parent, heights and leaf nodes of the tree spanned by grid points.

    Points are visited from left to right; the minimum of the excursion
    between two consecutive points is the height of their branch point.
    """
    order = np.argsort(points, kind='stable')
    pts = points[order]
    h = values[pts]
    parent = [-1]
    height = [0.0]
    stack = [0]
    leaf_node = [0] * pts.size
    for r in range(pts.size):
        if r > 0:
            m = float(values[pts[r - 1]:pts[r] + 1].min())
            last = None
            while height[stack[-1]] > m:
                last = stack.pop()
            top = stack[-1]
            if height[top] < m:
                b = len(parent)
                parent.append(top)
                height.append(m)
                parent[last] = b
                stack.append(b)
        node = len(parent)
        parent.append(stack[-1])
        height.append(float(h[r]))
        stack.append(node)
        leaf_node[order[r]] = node
    return np.array(parent), np.array(height), np.array(leaf_node)


def reduced_tree_from_excursion(w, K, seed=None, scale=1.0, max_tries=10):
    """Tree spanned by the root and `K` uniform points of the tree coded by
    ``scale * w``.

    Parameters
    ----------
    w : :class:`~critwalk.continuum.excursion.ExcursionGrid`
        The excursion.
    K : :class:`int`
        Number of points, at least 1.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    scale : :class:`float`, optional
        Multiplier of the excursion.  The line-breaking tree has the law of
        the tree coded by ``2 e``.
    max_tries : :class:`int`, optional
        Degenerate draws (coincident points, zero-length edges) are
        resampled this many times.

    Returns
    -------
    :class:`MetricTreeSkeleton`
        The reduced tree, labelled point ``k`` being the ``k``-th draw.

    Raises
    ------
    ContinuumException
        If every draw was degenerate.
    """
    if K < 1:
        raise ValueError('At least one point is required.')
    rng = get_rng(seed)
    v = scale * w.values
    m = w.grid_size
    for attempt in range(max_tries):
        points = rng.integers(1, m, size=K)
        if np.unique(points).size < K:
            continue
        parent, height, leaves = _reduced_from_points(v, points)
        lengths = height - np.where(parent >= 0, height[np.maximum(parent, 0)], 0.0)
        kids = np.bincount(parent[1:], minlength=parent.size)
        if (lengths[1:] <= 0).any() or (kids[leaves] > 0).any():
            continue
        return MetricTreeSkeleton(parent, lengths, leaves)
    raise ContinuumException('Could not draw a non-degenerate reduced tree.')


def line_breaking(K, seed=None):
    """Reduced continuum random tree with `K` leaves by line breaking.

    Cut times ``C_k = sqrt(2 Gamma_k)`` come from a Poisson process of rate
    ``t``.  The first edge has length ``C_1``; edge ``k`` has length
    ``C_k - C_{k-1}`` and is attached at a point chosen uniformly by length
    on the current tree.

    Parameters
    ----------
    K : :class:`int`
        Number of leaves, at least 1.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.

    Returns
    -------
    :class:`MetricTreeSkeleton`
        The tree; labelled point ``k`` is the ``k``-th leaf added.
    """
    if K < 1:
        raise ValueError('At least one leaf is required.')
    rng = get_rng(seed)
    C = np.sqrt(2.0 * np.cumsum(rng.exponential(1.0, K)))
    parent = [-1, 0]
    length = [0.0, float(C[0])]
    leaves = [1]
    for k in range(1, K):
        L = np.array(length[1:])
        starts = np.concatenate(([0.0], np.cumsum(L)))
        while True:
            u = rng.random() * starts[-1]
            e = int(np.searchsorted(starts, u, side='right'))
            offset = u - starts[e - 1]
            if 0 < offset < length[e]:
                break
        b = len(parent)
        parent.append(parent[e])
        length.append(offset)
        parent[e] = b
        length[e] -= offset
        parent.append(b)
        length.append(float(C[k] - C[k - 1]))
        leaves.append(b + 1)
    return MetricTreeSkeleton(parent, length, leaves)


def skeleton_from_reduced(tree, index, anchors, unit=1.0):
    """Metric skeleton of a discrete reduced subtree.

    Skeleton nodes are the root, the anchors and the branch points of the
    reduced subtree; edge lengths are graph distances times `unit`.

    Parameters
    ----------
    tree : :class:`~critwalk.trees.ordered.OrderedRootedTree`
        The tree.
    index : :class:`~critwalk.trees.reduced.ReducedSubtreeIndex`
        Its reduction to `anchors`.
    anchors : array-like
        Anchor vertices, in label order of the skeleton's points.
    unit : :class:`float`, optional
        Length of one discrete edge.

    Returns
    -------
    :class:`tuple`
        The :class:`MetricTreeSkeleton` and, for every member vertex of the
        reduced subtree (in :attr:`~critwalk.trees.reduced.ReducedSubtreeIndex.members`
        order), its skeleton edge and offset.
    """
    anchors = np.asarray(anchors, dtype=np.int64)
    n = tree.vertex_count
    member = index.member
    members = index.members
    parent = tree.parent
    depth = tree.depth
    kids = np.bincount(parent[members[1:]], minlength=n) if members.size > 1 else np.zeros(n, dtype=np.int64)
    is_node = np.zeros(n, dtype=bool)
    is_node[0] = True
    is_node[anchors] = True
    is_node[members[kids[members] >= 2]] = True
    nodes = np.flatnonzero(is_node)
    node_id = np.full(n, -1, dtype=np.int64)
    node_id[nodes] = np.arange(nodes.size)
    p = parent.tolist()
    anc = dict()
    for v in members[1:].tolist():
        u = p[v]
        anc[v] = u if is_node[u] else anc[u]
    child = dict()
    for v in members[1:].tolist():
        child[p[v]] = v
    below = dict()
    for v in members[::-1].tolist():
        if not is_node[v]:
            c = child[v]
            below[v] = c if is_node[c] else below[c]
    sk_parent = np.full(nodes.size, -1, dtype=np.int64)
    sk_length = np.zeros(nodes.size)
    for v in nodes[1:].tolist():
        sk_parent[node_id[v]] = node_id[anc[v]]
        sk_length[node_id[v]] = (depth[v] - depth[anc[v]]) * unit
    skeleton = MetricTreeSkeleton(sk_parent, sk_length, node_id[anchors])
    edges = np.zeros(members.size, dtype=np.int64)
    offsets = np.zeros(members.size)
    for k, v in enumerate(members.tolist()):
        if v == 0:
            continue
        e = v if is_node[v] else below[v]
        edges[k] = skeleton.relabel[node_id[e]]
        offsets[k] = (depth[v] - depth[anc[v]]) * unit
    return skeleton, edges, offsets
