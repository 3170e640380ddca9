# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Inverse local time at the root of Brownian motion on a critical branch,
approximated from the walk on a large conditioned cluster.
"""
import numpy as np
from ..rng import get_rng, spawn_key, keyed_rng


def crt_inverse_local_time_sampler(m, seed=None, horizon=1.0):
    """Rescaled inverse local time of the walk on an `m`-vertex cluster.

    The walk makes ``J = floor(sqrt(m) horizon / 2)`` excursions from the
    root of a critical cluster conditioned on `m` vertices.  Excursion `j`
    is a jump of size ``m**(-3/2) sigma_j`` at local time ``2 j / sqrt(m)``.

    Parameters
    ----------
    m : :class:`int`
        Cluster size, at least 2.  Sizes of 1000 and more approach the
        continuum limit.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    horizon : :class:`float`, optional
        Last local time of the path.

    Returns
    -------
    :class:`~critwalk.processes.subordinator.SubordinatorPath`
        A pure-jump path on ``[0, horizon]``.
    """
    from ..percolation.conditioned import sample_conditioned_cluster
    from ..processes.measure import AtomicMeasure
    from ..processes.subordinator import SubordinatorPath
    from ..walks.exit import sample_sigma
    if m < 2:
        raise ValueError('The cluster needs at least two vertices.')
    if horizon < 0:
        raise ValueError('The horizon must be non-negative.')
    rng = get_rng(seed)
    tree = sample_conditioned_cluster(m, rng)
    J = int(np.floor(np.sqrt(m) * horizon / 2.0))
    if J == 0:
        return SubordinatorPath(0.0, AtomicMeasure.empty(), horizon)
    sigma = sample_sigma(tree, rng, size=J)
    t = np.minimum(2.0 * np.arange(1, J + 1) / np.sqrt(m), horizon)
    return SubordinatorPath(0.0, AtomicMeasure(t, m**-1.5 * sigma), horizon)


class CRTInverseLocalTime(object):
    """Subordinator factory: an independent cluster for every trap.

    Calling the factory with a trap index and a horizon returns
    :func:`crt_inverse_local_time_sampler` on the sub-stream of that index,
    so the path of a trap does not depend on the other traps.

    Parameters
    ----------
    m : :class:`int`
        Cluster size.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    """

    def __init__(self, m, seed=None):
        if m < 2:
            raise ValueError('The cluster needs at least two vertices.')
        self.m = int(m)
        self.key = spawn_key(get_rng(seed))

    def __call__(self, index, horizon=1.0):
        return crt_inverse_local_time_sampler(self.m, keyed_rng(self.key, index), horizon)

    def __repr__(self):
        return 'CRTInverseLocalTime(m={0:d})'.format(self.m)
