# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Bernoulli bond percolation on the binary tree.

Two substrates are supported: ``'T'``, the rooted binary tree where every
vertex (root included) has two children, and ``'TStar'``, the same tree
with a root of degree one.  The critical parameter is 1/2 on both.
"""
from warnings import warn
import numpy as np
from scipy.special import gammaln
from . import ClusterCapExceeded, PercolationUserWarning
from ..rng import get_rng
from ..trees.ordered import OrderedRootedTree

SUBSTRATES = ('T', 'TStar')


class PercolationParams(object):
    """Percolation parameter and substrate.

    Parameters
    ----------
    p : :class:`float`
        Probability that an edge is open, in ``(0, 1]``.
    substrate : {'T', 'TStar'}, optional
        The tree; ``'TStar'`` (root of degree one) by default.
    """

    def __init__(self, p, substrate='TStar'):
        if not (0 < p <= 1):
            raise ValueError('p must lie in (0, 1].')
        if substrate not in SUBSTRATES:
            raise ValueError('Unknown substrate: {0}.'.format(substrate))
        self.p = float(p)
        self.substrate = substrate

    @property
    def root_slots(self):
        """Number of potential children of the root.
        """
        return 2 if self.substrate == 'T' else 1

    def __repr__(self):
        return "PercolationParams(p={0:g}, substrate='{1}')".format(self.p, self.substrate)


def sample_cluster(params, seed=None, cap=None, return_slots=False):
    """Sample the open cluster of the root.

    The cluster is grown one generation at a time; each potential child
    edge is open independently with probability `p`.

    Parameters
    ----------
    params : :class:`PercolationParams`
        Parameter and substrate.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    cap : :class:`int`, optional
        Maximum number of vertices.  Defaults to no cap for ``p <= 1/2``
        and to :attr:`critwalk.conf.cluster_cap` above.
    return_slots : :class:`bool`, optional
        Also return the child slot (0 or 1) of every vertex in the
        substrate; the root gets -1.

    Returns
    -------
    :class:`~critwalk.trees.ordered.OrderedRootedTree`
        The cluster, with children ordered by slot.

    Raises
    ------
    ValueError
        If ``p == 1`` and no cap is given.
    ClusterCapExceeded
        If the cluster grows beyond `cap` vertices.
    """
    from .. import conf
    if cap is None:
        if params.p == 1:
            raise ValueError('p = 1 gives an infinite cluster; supply a vertex cap.')
        if params.p > 0.5:
            cap = conf.cluster_cap
    rng = get_rng(seed)
    p = params.p
    parent = [np.array([-1], dtype=np.int64)]
    slot = [np.array([-1], dtype=np.int64)]
    current = np.array([0], dtype=np.int64)
    total = 1
    slots = params.root_slots
    while current.size > 0:
        is_open = rng.random((current.size, 2)) < p
        if slots == 1:
            is_open[:, 1] = False
        rows, cols = np.nonzero(is_open)
        count = rows.size
        if cap is not None and total + count > cap:
            raise ClusterCapExceeded('Cluster exceeded the cap of {0:d} vertices.'.format(cap))
        parent.append(current[rows])
        slot.append(cols.astype(np.int64))
        current = np.arange(total, total + count, dtype=np.int64)
        total += count
        slots = 2
    tree = OrderedRootedTree(np.concatenate(parent))
    if return_slots:
        return tree, np.concatenate(slot)[tree.original_ids]
    return tree


def sample_cluster_sizes(p, size, substrate='TStar', seed=None, cap=None):
    """Sample sizes of independent root clusters without building them.

    Generation sizes follow ``Z[k+1] ~ Binomial(2 Z[k], p)``, drawn for all
    clusters at once.

    Parameters
    ----------
    p : :class:`float` or array-like
        Percolation parameter, scalar or one per cluster, in ``[0, 1]``.
    size : :class:`int`
        Number of clusters.
    substrate : {'T', 'TStar'}, optional
        The tree.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    cap : :class:`int`, optional
        Clusters larger than `cap` are reported as ``cap + 1``.  Defaults to
        :attr:`critwalk.conf.cluster_cap`.

    Returns
    -------
    :class:`~numpy.ndarray`
        Cluster sizes.
    """
    from astropy import log
    from .. import conf
    if substrate not in SUBSTRATES:
        raise ValueError('Unknown substrate: {0}.'.format(substrate))
    if cap is None:
        cap = conf.cluster_cap
    p = np.broadcast_to(np.asarray(p, dtype=np.float64), (size,))
    if (p < 0).any() or (p > 1).any():
        raise ValueError('p must lie in [0, 1].')
    rng = get_rng(seed)
    sizes = np.ones(size, dtype=np.int64)
    root_slots = 2 if substrate == 'T' else 1
    z = rng.binomial(root_slots, p)
    active = np.flatnonzero(z > 0)
    z = z[active]
    generations = 0
    while active.size > 0:
        sizes[active] += z
        over = sizes[active] > cap
        if over.any():
            sizes[active[over]] = cap + 1
            keep = ~over
            active = active[keep]
            z = z[keep]
        z = rng.binomial(2 * z, p[active])
        keep = z > 0
        active = active[keep]
        z = z[keep]
        generations += 1
    censored = int((sizes > cap).sum())
    log.debug("Sampled {0:d} cluster sizes in {1:d} generations.".format(size, generations))
    if censored > 0:
        warn('{0:d} cluster sizes censored at the cap of {1:d} vertices.'.format(censored, cap),
             PercolationUserWarning)
    return sizes


def cluster_size_laplace(p, lam, substrate='TStar'):
    """Laplace transform of the root cluster size.

    On ``'TStar'`` the transform is
    ``(1 - sqrt(1 - 4 p (1-p) exp(-lam))) / (2 p)``; on ``'T'`` it is the
    square of that value times ``exp(lam)``.

    Parameters
    ----------
    p : :class:`float`
        Percolation parameter in ``[0, 1/2]``.
    lam : :class:`float` or array-like
        Non-negative argument(s).
    substrate : {'T', 'TStar'}, optional
        The tree.

    Returns
    -------
    :class:`float` or :class:`~numpy.ndarray`
        ``E[exp(-lam N_p)]``.

    Raises
    ------
    ValueError
        If `p` is supercritical or `lam` is negative.

    Examples
    --------
    >>> from critwalk.percolation.cluster import cluster_size_laplace
    >>> print('{0:.6f}'.format(cluster_size_laplace(0.5, 1.0)))
    0.204940
    """
    if not (0 <= p <= 0.5):
        raise ValueError('The closed form holds for 0 <= p <= 1/2.')
    if substrate not in SUBSTRATES:
        raise ValueError('Unknown substrate: {0}.'.format(substrate))
    lam = np.asarray(lam, dtype=np.float64)
    if (lam < 0).any():
        raise ValueError('lam must be non-negative.')
    x = np.exp(-lam)
    #
    # Rationalised form of (1 - sqrt(D))/(2p); finite as p -> 0.
    #
    g = 2.0 * (1.0 - p) * x / (1.0 + np.sqrt(1.0 - 4.0 * p * (1.0 - p) * x))
    if substrate == 'T':
        g = g * g / x
    if g.ndim == 0:
        return float(g)
    return g


def _log_catalan(k):
    k = np.asarray(k, dtype=np.float64)
    return gammaln(2*k + 1) - gammaln(k + 1) - gammaln(k + 2)


def cluster_size_pmf(p, nmax, substrate='TStar', conditioned_finite=False):
    """Exact probabilities of the cluster sizes ``1 .. nmax``.

    A cluster of ``n`` vertices on ``'TStar'`` is one of ``Cat(n-1)``
    subtrees, each with ``n - 1`` open and ``n`` closed edges; on ``'T'``
    there are ``Cat(n)`` subtrees with ``n + 1`` closed edges.

    Parameters
    ----------
    p : :class:`float`
        Percolation parameter in ``(0, 1)``.
    nmax : :class:`int`
        Largest size.
    substrate : {'T', 'TStar'}, optional
        The tree.
    conditioned_finite : :class:`bool`, optional
        Condition on the cluster being finite.

    Returns
    -------
    :class:`~numpy.ndarray`
        ``P[N_p = n]`` for ``n = 1 .. nmax``.
    """
    if not (0 < p < 1):
        raise ValueError('p must lie in (0, 1).')
    if substrate not in SUBSTRATES:
        raise ValueError('Unknown substrate: {0}.'.format(substrate))
    n = np.arange(1, nmax + 1, dtype=np.float64)
    if substrate == 'TStar':
        logp = _log_catalan(n - 1) + (n - 1)*np.log(p) + n*np.log1p(-p)
    else:
        logp = _log_catalan(n) + (n - 1)*np.log(p) + (n + 1)*np.log1p(-p)
    pmf = np.exp(logp)
    if conditioned_finite:
        pmf = pmf / extinction_probability(p, substrate)
    return pmf


def extinction_probability(p, substrate='TStar'):
    """Probability that the root cluster is finite.

    Examples
    --------
    >>> from critwalk.percolation.cluster import extinction_probability
    >>> extinction_probability(0.75, 'T')
    0.1111111111111111
    """
    if not (0 < p <= 1):
        raise ValueError('p must lie in (0, 1].')
    if substrate not in SUBSTRATES:
        raise ValueError('Unknown substrate: {0}.'.format(substrate))
    if p <= 0.5:
        return 1.0
    q = (1.0 - p) / p
    return q * q if substrate == 'T' else q


def dual_parameter(p):
    """Subcritical parameter dual to the supercritical `p`.

    On the binary tree a supercritical cluster conditioned to be finite is
    a subcritical cluster with parameter ``1 - p``.

    Parameters
    ----------
    p : :class:`float`
        Supercritical parameter in ``(1/2, 1)``.

    Returns
    -------
    :class:`float`
        The dual parameter.

    Examples
    --------
    >>> from critwalk.percolation.cluster import dual_parameter
    >>> dual_parameter(0.75)
    0.25
    """
    if not (0.5 < p < 1):
        raise ValueError('The dual parameter is defined for 1/2 < p < 1.')
    return 1.0 - p


def scales(epsilon, gamma=0.5, c=None):
    """Space and Laplace-argument scales of a trapping landscape.

    Returns ``d = c**(1/gamma) * epsilon**(-1/gamma)`` and ``q = epsilon/d``.
    The defaults ``gamma = 1/2``, ``c = pi**(-1/2)`` are those of critical
    branches and give ``(epsilon**-2/pi, pi*epsilon**3)``.

    Parameters
    ----------
    epsilon : :class:`float`
        Scale parameter, positive.
    gamma : :class:`float`, optional
        Tail index in ``(0, 1)``.
    c : :class:`float`, optional
        Tail constant.

    Returns
    -------
    :class:`tuple`
        ``(d, q)``.
    """
    if epsilon <= 0:
        raise ValueError('epsilon must be positive.')
    if not (0 < gamma < 1):
        raise ValueError('gamma must lie in (0, 1).')
    if c is None:
        c = np.pi**-0.5
    d = c**(1.0/gamma) * epsilon**(-1.0/gamma)
    return (d, epsilon / d)
