# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Randomly trapped random walks on the integers.

The walk waits at site `x` for a time drawn afresh from the holding law of
`x` on every visit, then jumps to one of its two neighbours.  On the
half-line the walk always moves from 0 to 1.
"""
from warnings import warn
import numpy as np
from . import WalksUserWarning
from .exit import sample_sigma_tilde
from ..rng import get_rng, spawn_key, keyed_rng


class TrappingLandscape(object):
    """A holding-time law for every site.

    Subclasses provide :meth:`sample_holding` and :meth:`mean_depth`.
    """

    def sample_holding(self, site, rng):
        """One holding time at `site`.
        """
        raise NotImplementedError

    def mean_depth(self, site):
        """Mean holding time at `site`.
        """
        raise NotImplementedError


class DeterministicLandscape(TrappingLandscape):
    """Every holding time equals `value`.
    """

    def __init__(self, value=1.0):
        if value <= 0:
            raise ValueError('Holding times must be positive.')
        self.value = value

    def sample_holding(self, site, rng):
        return self.value

    def mean_depth(self, site):
        return float(self.value)


class SingleTrapLandscape(TrappingLandscape):
    """Exponential trap of mean `trap_mean` at `trap_site`, unit holding
    times elsewhere.
    """

    def __init__(self, trap_mean, trap_site=0):
        if trap_mean <= 0:
            raise ValueError('The trap mean must be positive.')
        self.trap_mean = float(trap_mean)
        self.trap_site = trap_site

    def sample_holding(self, site, rng):
        if site == self.trap_site:
            return rng.exponential(self.trap_mean)
        return 1.0

    def mean_depth(self, site):
        return self.trap_mean if site == self.trap_site else 1.0


class IICLandscape(TrappingLandscape):
    """Exit times of critical branches, one branch per site.

    The holding time at site `x` is the exit time ``sigma_tilde`` of the walk
    on the branch of `x`, simulated afresh on every visit; its mean is the
    branch size.  Site 0 is the root of the cluster and has a single
    backbone neighbour, so its branch is left through one extra vertex and
    the mean holding time is ``2 n - 1``.  Branches come from `iic` when
    given, otherwise they are independent critical clusters built on first
    use from sub-streams keyed by site.

    Parameters
    ----------
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`; ignored if `iic`
        is given.
    iic : :class:`~critwalk.percolation.iic.IICInstance`, optional
        Take the branches of this cluster; sites are its backbone indices.
    cached : :class:`bool`, optional
        Replace the exact holding law of each site by resampling from
        `cache_samples` pre-drawn exit times.  This is an approximation.
    cache_samples : :class:`int`, optional
        Size of the cached sample per site.

    Attributes
    ----------
    censored : :class:`set`
        Sites whose branch size was censored at the cluster cap.
    """

    def __init__(self, seed=None, iic=None, cached=False, cache_samples=200):
        self.iic = iic
        self.key = None if iic is not None else spawn_key(get_rng(seed))
        self.cached = cached
        self.cache_samples = cache_samples
        self._branches = dict()
        self._cache = dict()
        self._warned_end = False
        self.censored = set() if iic is None else set(iic.censored.tolist())
        if cached:
            warn('Cached holding laws approximate the exact exit-time law.', WalksUserWarning)

    def branch(self, site):
        """The branch hanging at `site`.
        """
        if site < 0:
            raise ValueError('Sites of an IIC landscape are non-negative.')
        if self.iic is not None:
            if site == self.iic.backbone_length - 1 and not self._warned_end:
                warn('The walk reached the truncated end of the backbone.', WalksUserWarning)
                self._warned_end = True
            return self.iic.branch(site)
        if site not in self._branches:
            from .. import conf
            from ..percolation.cluster import sample_cluster_sizes
            from ..percolation.conditioned import sample_conditioned_cluster
            rng = keyed_rng(self.key, site)
            n = int(sample_cluster_sizes(0.5, 1, 'TStar', rng, cap=conf.cluster_cap)[0])
            if n > conf.cluster_cap:
                self.censored.add(site)
            self._branches[site] = sample_conditioned_cluster(n, rng)
        return self._branches[site]

    def sample_holding(self, site, rng):
        b = self.branch(site)
        extra = 1 if site == 0 else 2
        if not self.cached:
            return sample_sigma_tilde(b, rng, extra=extra)
        if site not in self._cache:
            self._cache[site] = sample_sigma_tilde(b, rng, size=self.cache_samples,
                                                   extra=extra)
        return int(self._cache[site][rng.integers(self.cache_samples)])

    def mean_depth(self, site):
        n = self.branch(site).vertex_count
        return float(2 * n - 1 if site == 0 else n)


class RTRWTrajectory(object):
    """Sites visited by a trapped walk and the times it leaves them.

    Site ``sites[i]`` is occupied on ``[times[i-1], times[i])``, with
    ``times[-1]`` read as 0 for ``i = 0``.

    Parameters
    ----------
    sites : array-like
        Visited sites; consecutive sites differ by one.
    times : array-like
        Strictly increasing departure times, one per site.
    """

    def __init__(self, sites, times):
        self.sites = np.asarray(sites, dtype=np.int64)
        self.times = np.asarray(times, dtype=np.float64)
        if self.sites.size == 0 or self.sites.size != self.times.size:
            raise ValueError('There must be one departure time per visited site.')
        if (np.abs(np.diff(self.sites)) != 1).any():
            raise ValueError('Consecutive sites must be neighbours.')
        if self.times[0] <= 0 or (np.diff(self.times) <= 0).any():
            raise ValueError('Departure times must be positive and strictly increasing.')

    @property
    def arrival_times(self):
        """Time at which each site is entered.
        """
        return np.concatenate(([0.0], self.times[:-1]))

    def position(self, t):
        """Site occupied at time(s) `t`, before the last departure.
        """
        t = np.asarray(t, dtype=np.float64)
        if (t < 0).any() or (t >= self.times[-1]).any():
            raise ValueError('Times must lie in [0, last departure).')
        x = self.sites[np.searchsorted(self.times, t, side='right')]
        if x.ndim == 0:
            return int(x)
        return x

    def occupation(self, site):
        """Total time spent at `site`.
        """
        hold = np.diff(np.concatenate(([0.0], self.times)))
        return float(hold[self.sites == site].sum())

    def write(self, filename):
        """Export the trajectory as ``time, site`` CSV columns.
        """
        from ..export import write_columns
        return write_columns(filename, ['time', 'site'], [self.arrival_times, self.sites])

    def __repr__(self):
        return 'RTRWTrajectory(jumps={0:d}, end={1:g})'.format(self.sites.size - 1, self.times[-1])


def rtrw(landscape, horizon, seed=None, reflect=False, start=0):
    """Simulate a randomly trapped random walk up to time `horizon`.

    Parameters
    ----------
    landscape : :class:`TrappingLandscape`
        Holding laws.
    horizon : :class:`float`
        Positive time; the walk is run until its last departure exceeds it.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    reflect : :class:`bool`, optional
        Walk on the half-line: a move from 0 to -1 is replaced by a move to
        1.  Required for :class:`IICLandscape`.
    start : :class:`int`, optional
        Starting site.

    Returns
    -------
    :class:`RTRWTrajectory`
        The trajectory.
    """
    from astropy import log
    if horizon <= 0:
        raise ValueError('The horizon must be positive.')
    if reflect and start < 0:
        raise ValueError('A reflected walk starts on the half-line.')
    rng = get_rng(seed)
    x = start
    t = 0.0
    sites = []
    times = []
    while t <= horizon:
        h = landscape.sample_holding(x, rng)
        if h <= 0:
            raise ValueError('Holding times must be positive.')
        t += h
        sites.append(x)
        times.append(t)
        if reflect and x == 0:
            x = 1
        else:
            x += 1 if rng.random() < 0.5 else -1
    log.debug("Trapped walk made {0:d} jumps before time {1:g}.".format(len(sites) - 1, horizon))
    return RTRWTrajectory(sites, times)
