# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Invasion percolation on the binary tree, its backbone, and the
structural description of its branches.
"""
import heapq
import numpy as np
from astropy.utils import lazyproperty
from . import PercolationException
from .cluster import PercolationParams, sample_cluster, sample_cluster_sizes
from .envelope import sample_envelope
from ..rng import get_rng
from ..trees.ordered import OrderedRootedTree
from ..trees.reduced import reduce


class IPCInstance(object):
    """An invaded cluster.

    Parameters
    ----------
    invaded_tree : :class:`~critwalk.trees.ordered.OrderedRootedTree`
        The invaded vertices.
    weights : array-like
        Weight of every vertex of `invaded_tree`.  The root's weight is never
        compared.
    invasion_order : array-like
        Vertices of `invaded_tree` in the order they were invaded.
    candidates : :class:`tuple`, optional
        ``(parent_step, weight, step)`` of every materialized vertex, invaded
        or on the final boundary: the invasion step of its parent, its weight
        and its own invasion step (-1 if never invaded).  Needed by
        :meth:`greedy_violations`.
    """

    def __init__(self, invaded_tree, weights, invasion_order, candidates=None):
        self.invaded_tree = invaded_tree
        self.weights = np.asarray(weights, dtype=np.float64)
        self.invasion_order = np.asarray(invasion_order, dtype=np.int64)
        self.candidates = candidates

    @lazyproperty
    def invasion_index(self):
        """Invasion step of every vertex of :attr:`invaded_tree`.
        """
        index = np.empty(self.invasion_order.size, dtype=np.int64)
        index[self.invasion_order] = np.arange(self.invasion_order.size)
        return index

    @lazyproperty
    def backbone_estimate(self):
        """:func:`estimate_backbone` with the default trim.
        """
        return estimate_backbone(self)

    def greedy_violations(self):
        """Count invasions that did not take a minimal boundary weight.

        The invasion is replayed: at every step the invaded weight is
        compared with the smallest weight on the boundary at that time.
        """
        if self.candidates is None:
            raise PercolationException('Boundary records are required to check the invasion.')
        parent_step, weight, step = self.candidates
        n = self.invasion_order.size
        step = np.where(step < 0, n, step)
        by_parent = np.argsort(parent_step, kind='stable')
        ps = parent_step[by_parent].tolist()
        invaded_weight = np.empty(n, dtype=np.float64)
        invaded_weight[step[step < n]] = weight[step < n]
        heap = []
        violations = 0
        i = 0
        while i < len(ps) and ps[i] < 0:
            i += 1
        for j in range(n):
            if j > 0:
                while heap and step[heap[0][1]] < j:
                    heapq.heappop(heap)
                if heap and invaded_weight[j] > heap[0][0]:
                    violations += 1
            while i < len(ps) and ps[i] == j:
                c = int(by_parent[i])
                heapq.heappush(heap, (float(weight[c]), c))
                i += 1
        return violations

    def write(self, filename):
        """Export the invaded tree as an edge list with weights.

        Columns are ``parentId, childId, weight, invasionIndex``; the root
        row has ``parentId = -1``.
        """
        from ..export import write_columns
        n = self.invaded_tree.vertex_count
        return write_columns(filename, ['parentId', 'childId', 'weight', 'invasionIndex'],
                             [self.invaded_tree.parent, np.arange(n),
                              self.weights, self.invasion_index])

    def __repr__(self):
        return 'IPCInstance(invaded={0:d})'.format(self.invasion_order.size)


def invade(N, seed=None):
    """Grow the invasion percolation cluster of the binary tree.

    Every vertex carries an independent uniform weight.  Starting from the
    root, the boundary vertex of smallest weight is invaded until `N`
    vertices are invaded.  Boundary vertices are materialized only when
    their parent is invaded, and kept in a binary heap.

    Parameters
    ----------
    N : :class:`int`
        Number of invaded vertices, at least 1.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.

    Returns
    -------
    :class:`IPCInstance`
        The invaded cluster.
    """
    from astropy import log
    if N < 1:
        raise ValueError('At least one vertex must be invaded.')
    rng = get_rng(seed)
    total = 2*N + 1
    weight = rng.random(total)
    parent_step = np.full(total, -1, dtype=np.int64)
    step = np.full(total, -1, dtype=np.int64)
    step[0] = 0
    invaded = [0]
    heap = []
    created = 1
    for j in range(N):
        if j > 0:
            w, x = heapq.heappop(heap)
            step[x] = j
            invaded.append(x)
        if j < N - 1:
            for c in (created, created + 1):
                parent_step[c] = j
                heapq.heappush(heap, (weight[c], c))
            created += 2
    invaded = np.array(invaded, dtype=np.int64)
    #
    # Parent of the j-th invaded vertex, as an invasion step.
    #
    tree_parent = parent_step[invaded]
    tree = OrderedRootedTree(tree_parent)
    invasion_order = np.empty(N, dtype=np.int64)
    invasion_order[tree.original_ids] = np.arange(N)
    log.debug("Invaded {0:d} vertices.".format(N))
    return IPCInstance(tree, weight[invaded[tree.original_ids]], invasion_order,
                       candidates=(parent_step[:created], weight[:created], step[:created]))


class BackboneEstimate(object):
    """Trimmed ancestral path of the deepest invaded vertex.

    Attributes
    ----------
    path : :class:`~numpy.ndarray`
        Vertices ``0 .. k`` of the trimmed path.
    weights : :class:`~numpy.ndarray`
        Weight of each path vertex.
    forward_max : :class:`~numpy.ndarray`
        ``M[j]``, the largest weight beyond level `j` on the full path.
    depth : :class:`int`
        Trimmed depth ``k``.
    projection : :class:`~numpy.ndarray`
        Level of the nearest path vertex for every vertex of the tree,
        computed on the full path.
    """

    def __init__(self, path, weights, forward_max, depth, projection):
        self.path = path
        self.weights = weights
        self.forward_max = forward_max
        self.depth = depth
        self.projection = projection

    def statistic(self, t):
        """``k (2 M[ceil(k t)] - 1)`` for `t` in ``(0, 1]``.
        """
        if not (0 < t <= 1):
            raise ValueError('t must lie in (0, 1].')
        k = self.depth
        return k * (2.0 * self.forward_max[int(np.ceil(k * t))] - 1.0)


def estimate_backbone(instance, trim_fraction=0.5):
    """Estimate the backbone of an invaded cluster.

    The backbone is taken to be the ancestral path of the deepest invaded
    vertex (smallest label on ties), cut to ``trim_fraction`` of the maximal
    depth.

    Parameters
    ----------
    instance : :class:`IPCInstance`
        The invaded cluster.
    trim_fraction : :class:`float`, optional
        Kept fraction of the path, in ``(0, 1]``.

    Returns
    -------
    :class:`BackboneEstimate`
        The trimmed path and its forward maxima.

    Raises
    ------
    PercolationException
        If the invaded tree has depth less than 2.
    """
    if not (0 < trim_fraction <= 1):
        raise ValueError('trim_fraction must lie in (0, 1].')
    tree = instance.invaded_tree
    depth = tree.depth
    D = int(depth.max())
    if D < 2:
        raise PercolationException('The invaded tree is too shallow to carry a backbone.')
    deepest = int(np.argmax(depth))
    path = [deepest]
    while path[-1] != 0:
        path.append(int(tree.parent[path[-1]]))
    path = np.array(path[::-1], dtype=np.int64)
    w = instance.weights[path]
    forward_max = np.empty(D + 1, dtype=np.float64)
    forward_max[:-1] = np.maximum.accumulate(w[::-1])[::-1][1:]
    forward_max[-1] = np.nan
    k = max(1, min(D - 1, int(np.floor(trim_fraction * D))))
    index = reduce(tree, [deepest])
    projection = depth[index.projection]
    return BackboneEstimate(path[:k + 1], w[:k + 1], forward_max[:k + 1], k, projection)


def structural_ipc_parameters(envelope, k_max):
    """Percolation parameters of the structural branches.

    Branch ``k`` is a supercritical cluster with parameter
    ``M = (1 + E(k/k_max)/k_max)/2`` conditioned to be finite, which is the
    subcritical cluster with parameter ``1 - M``; for ``M >= 1`` the branch
    is the root alone.

    Parameters
    ----------
    envelope : :class:`~critwalk.percolation.envelope.EnvelopeProcess`
        The envelope, defined on ``[1/k_max, 1]``.
    k_max : :class:`int`
        Number of branches.

    Returns
    -------
    :class:`~numpy.ndarray`
        One parameter per branch, ``k = 1 .. k_max``.
    """
    k = np.arange(1, k_max + 1, dtype=np.float64)
    M = 0.5 * (1.0 + envelope(k / k_max) / k_max)
    return np.where(M < 1, 1.0 - M, 0.0)


def structural_ipc_branches(k_max, seed=None, envelope=None):
    """Independent IPC branches driven by an envelope.

    Parameters
    ----------
    k_max : :class:`int`
        Number of branches, at least 1.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    envelope : :class:`~critwalk.percolation.envelope.EnvelopeProcess`, optional
        Envelope on ``[1/k_max, 1]``; a fresh one is drawn by default.

    Returns
    -------
    :class:`list`
        ``k_max`` :class:`~critwalk.trees.ordered.OrderedRootedTree` branches.
    """
    if k_max < 1:
        raise ValueError('k_max must be at least 1.')
    rng = get_rng(seed)
    if envelope is None:
        envelope = sample_envelope(min(1.0 / k_max, 0.5), 1.0, rng)
    branches = []
    for p in structural_ipc_parameters(envelope, k_max):
        if p > 0:
            branches.append(sample_cluster(PercolationParams(p, 'TStar'), rng))
        else:
            branches.append(OrderedRootedTree([-1], check=False))
    return branches


def ipc_branch_sizes(k_max, seed=None, envelope=None, cap=None):
    """Sizes of :func:`structural_ipc_branches` without building the trees.
    """
    if k_max < 1:
        raise ValueError('k_max must be at least 1.')
    rng = get_rng(seed)
    if envelope is None:
        envelope = sample_envelope(min(1.0 / k_max, 0.5), 1.0, rng)
    return sample_cluster_sizes(structural_ipc_parameters(envelope, k_max), k_max,
                                'TStar', rng, cap=cap)
