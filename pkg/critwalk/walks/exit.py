# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Excursion and exit durations of the walk on a finite tree.

``sigma`` is the length of an excursion of the walk away from the root.
``sigma_tilde`` is the exit time of the walk on the tree augmented by two
extra vertices attached to the root; the walk is started at the root and
stopped when it first steps onto an extra vertex.  For every tree
``E[sigma_tilde]`` is the number of vertices.  With a single extra vertex,
as at the end of a half-line, the mean is ``2 n - 1``.
"""
import numpy as np
from ..rng import get_rng


def _uniforms(rng, block=64, largest=65536):
    while True:
        for u in rng.random(block).tolist():
            yield u
        block = min(2 * block, largest)


def _tables(tree):
    offsets, neighbours = tree.adjacency
    return offsets.tolist(), neighbours.tolist(), tree.degree.tolist()


def _one_sigma(off, nb, deg, u):
    v = nb[int(next(u) * deg[0])]
    steps = 1
    while v != 0:
        v = nb[off[v] + int(next(u) * deg[v])]
        steps += 1
    return steps


def _one_sigma_tilde(off, nb, deg, u, extra):
    d0 = deg[0]
    steps = 0
    v = 0
    while True:
        steps += 1
        if v == 0:
            k = int(next(u) * (d0 + extra))
            if k >= d0:
                return steps
            v = nb[k]
        else:
            v = nb[off[v] + int(next(u) * deg[v])]


def sample_sigma(tree, seed=None, size=None):
    """Duration of an excursion of the walk away from the root.

    On a single-vertex tree the excursion is taken to be the forced
    reflection of length 2.

    Parameters
    ----------
    tree : :class:`~critwalk.trees.ordered.OrderedRootedTree`
        The tree.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    size : :class:`int`, optional
        Number of independent samples; a single integer is returned if
        omitted.

    Returns
    -------
    :class:`int` or :class:`~numpy.ndarray`
        ``min{l > 0 : Y_l = root}``.
    """
    rng = get_rng(seed)
    count = 1 if size is None else size
    if tree.vertex_count == 1:
        out = np.full(count, 2, dtype=np.int64)
    else:
        off, nb, deg = _tables(tree)
        u = _uniforms(rng)
        out = np.array([_one_sigma(off, nb, deg, u) for k in range(count)], dtype=np.int64)
    return int(out[0]) if size is None else out


def sample_sigma_tilde(tree, seed=None, size=None, extra=2):
    """Exit time of the walk through `extra` vertices attached to the root.

    Parameters
    ----------
    tree : :class:`~critwalk.trees.ordered.OrderedRootedTree`
        The tree.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    size : :class:`int`, optional
        Number of independent samples; a single integer is returned if
        omitted.
    extra : :class:`int`, optional
        Number of extra vertices, 2 by default.  The root of a glued
        cluster has one.

    Returns
    -------
    :class:`int` or :class:`~numpy.ndarray`
        Number of steps up to and including the step onto an extra vertex.
    """
    if extra < 1:
        raise ValueError('At least one extra vertex is needed to leave the tree.')
    rng = get_rng(seed)
    count = 1 if size is None else size
    off, nb, deg = _tables(tree)
    u = _uniforms(rng)
    out = np.array([_one_sigma_tilde(off, nb, deg, u, extra) for k in range(count)], dtype=np.int64)
    return int(out[0]) if size is None else out


def _solve(tree, diagonal_root, absorbing_root):
    """Solve ``h = 1 + P h`` for the mean first-passage times.

    With `absorbing_root` the root is removed from the system and
    ``h(root) = 0``; otherwise the root moves to each of its neighbours with
    probability ``1/diagonal_root`` and exits with the remaining mass.
    """
    import scipy.sparse as sp
    from scipy.sparse.linalg import spsolve
    from scipy.linalg import solve
    n = tree.vertex_count
    deg = tree.degree.astype(np.float64)
    deg[0] = diagonal_root
    v = np.arange(1, n)
    u = tree.parent[1:]
    #
    # Row v holds -1/deg(v) for every neighbour w of v.
    #
    rows = np.concatenate((v, u))
    cols = np.concatenate((u, v))
    vals = np.concatenate((-1.0 / deg[v], -1.0 / deg[u]))
    if absorbing_root:
        keep = (rows != 0) & (cols != 0)
        rows, cols, vals = rows[keep] - 1, cols[keep] - 1, vals[keep]
        m = n - 1
    else:
        m = n
    A = sp.coo_matrix((vals, (rows, cols)), shape=(m, m)).tocsr() + sp.identity(m, format='csr')
    b = np.ones(m, dtype=np.float64)
    if m <= 1000:
        return solve(A.toarray(), b)
    return spsolve(A.tocsc(), b)


def expected_exit_time_exact(tree, extra=2):
    """Mean of :func:`sample_sigma_tilde`, from the first-passage system.

    With two extra vertices the result equals the number of vertices, with
    one it is ``2 n - 1``; the solve is the independent check.  Systems with at most 1000 unknowns are solved densely.

    Examples
    --------
    >>> from critwalk.trees.ordered import OrderedRootedTree
    >>> from critwalk.walks.exit import expected_exit_time_exact
    >>> print('{0:.6f}'.format(expected_exit_time_exact(OrderedRootedTree([-1, 0, 0]))))
    3.000000
    """
    h = _solve(tree, tree.degree[0] + float(extra), False)
    return float(h[0])


def expected_return_time_exact(tree):
    """Mean of :func:`sample_sigma`, from the first-passage system.

    For a tree with ``n >= 2`` vertices the result is
    ``2 (n - 1) / deg(root)``.
    """
    if tree.vertex_count == 1:
        return 2.0
    h = _solve(tree, float(tree.degree[0]), True)
    #
    # Labels shift by one once the root is removed.
    #
    first = tree.children(0) - 1
    return float(1.0 + h[first].mean())


def exit_laplace_from_return(nu_hat, lam, root_degree=1):
    """Laplace transform of ``sigma_tilde`` from that of ``sigma``.

    The walk leaves the root towards an extra vertex with probability
    ``2/(d + 2)`` and otherwise makes an excursion, so
    ``E[exp(-lam sigma_tilde)] = exp(-lam) 2 / (d + 2 - d nu_hat)``.

    Parameters
    ----------
    nu_hat : :class:`float` or array-like
        ``E[exp(-lam sigma)]``.
    lam : :class:`float` or array-like
        The Laplace argument.
    root_degree : :class:`int`, optional
        Degree ``d`` of the root in the tree, 1 by default.

    Returns
    -------
    :class:`float` or :class:`~numpy.ndarray`
        The transform of ``sigma_tilde``.
    """
    d = float(root_degree)
    return np.exp(-np.asarray(lam, dtype=np.float64)) * 2.0 / (d + 2.0 - d * np.asarray(nu_hat))
