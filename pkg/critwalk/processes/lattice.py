# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Lattice approximation of Brownian motion reflected at the origin.

The walk lives on ``{0, dx, 2 dx, ...}``, moves every ``dx**2`` units of
time and always steps from 0 to ``dx``.  The local time at a site is
``dx`` times its number of visits.
"""
import numpy as np
from ..rng import get_rng


class LatticeReflectedPath(object):
    """A reflected lattice walk.

    Parameters
    ----------
    grid_step : :class:`float`
        Lattice spacing ``dx``.
    sites : array-like
        Non-negative site index at every step, starting at time 0.
    """

    def __init__(self, grid_step, sites):
        if grid_step <= 0:
            raise ValueError('The grid step must be positive.')
        self.grid_step = float(grid_step)
        self.sites = np.asarray(sites, dtype=np.int64)
        if (self.sites < 0).any():
            raise ValueError('A reflected walk has no negative sites.')

    @property
    def time_step(self):
        """Duration of one step, ``dx**2``.
        """
        return self.grid_step**2

    @property
    def step_count(self):
        return self.sites.size - 1

    @property
    def times(self):
        """Time of every step.
        """
        return np.arange(self.sites.size) * self.time_step

    @property
    def positions(self):
        """Position of every step.
        """
        return self.sites * self.grid_step

    def _step(self, t):
        k = np.floor(np.asarray(t, dtype=np.float64) / self.time_step + 1e-9).astype(np.int64)
        if (k < 0).any() or (k > self.step_count).any():
            raise ValueError('Times must lie within the simulated horizon.')
        return k

    def position(self, t):
        """Position at time(s) `t`.
        """
        return self.sites[self._step(t)] * self.grid_step

    def local_time_field(self, t=None):
        """Local time of every site up to time `t` (the end by default).
        """
        k = self.step_count if t is None else int(self._step(t))
        return self.grid_step * np.bincount(self.sites[:k + 1])

    def local_time(self, site, t=None):
        """Local time of `site` up to time `t`.
        """
        field = self.local_time_field(t)
        return float(field[site]) if site < field.size else 0.0

    def local_time_curve(self, site):
        """Steps at which `site` is visited and the local time after each.
        """
        steps = np.flatnonzero(self.sites == site)
        return steps, self.grid_step * np.arange(1, steps.size + 1)

    def write(self, filename):
        """Export as ``time, position`` CSV columns.
        """
        from ..export import write_columns
        return write_columns(filename, ['time', 'position'], [self.times, self.positions])

    def __repr__(self):
        return 'LatticeReflectedPath(grid_step={0:g}, steps={1:d})'.format(
            self.grid_step, self.step_count)


def reflected_lattice_bm(grid_step, horizon, seed=None):
    """Reflected simple random walk approximating reflected Brownian motion.

    The walk is the absolute value of a simple random walk, which always
    moves from 0 to 1.

    Parameters
    ----------
    grid_step : :class:`float`
        Lattice spacing, positive.
    horizon : :class:`float`
        Final time; ``ceil(horizon / grid_step**2)`` steps are made.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.

    Returns
    -------
    :class:`LatticeReflectedPath`
        The walk.
    """
    if grid_step <= 0:
        raise ValueError('The grid step must be positive.')
    if horizon < 0:
        raise ValueError('The horizon must be non-negative.')
    rng = get_rng(seed)
    steps = int(np.ceil(horizon / grid_step**2 - 1e-9))
    moves = 2 * rng.integers(0, 2, size=steps, dtype=np.int64) - 1
    sites = np.zeros(steps + 1, dtype=np.int64)
    sites[1:] = np.abs(np.cumsum(moves))
    return LatticeReflectedPath(grid_step, sites)
