# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Normalized Brownian excursions on a grid and the pseudometric they
code.
"""
import numpy as np
from ..rng import get_rng


class ExcursionGrid(object):
    """An excursion sampled at ``k/m``, ``k = 0 .. m``.

    Parameters
    ----------
    values : array-like
        ``m + 1`` non-negative values with both endpoints exactly 0.
    """

    def __init__(self, values):
        values = np.asarray(values, dtype=np.float64)
        if values.ndim != 1 or values.size < 3:
            raise ValueError('An excursion grid has at least three points.')
        if values[0] != 0 or values[-1] != 0:
            raise ValueError('An excursion starts and ends at 0.')
        if (values < 0).any():
            raise ValueError('An excursion is non-negative.')
        self.values = values

    @property
    def grid_size(self):
        """Number of grid cells ``m``.
        """
        return self.values.size - 1

    @property
    def grid(self):
        return np.arange(self.values.size) / self.grid_size

    @property
    def zero_fraction(self):
        """Fraction of interior grid points where the excursion is 0.
        """
        return float((self.values[1:-1] == 0).mean())

    def integral(self):
        """Trapezoidal ``int_0^1 w``.
        """
        return float(self.values.sum() / self.grid_size)

    def index(self, s):
        """Grid index of the grid point(s) `s` in ``[0, 1]``.
        """
        k = np.asarray(s, dtype=np.float64) * self.grid_size
        r = np.rint(k)
        if (np.abs(k - r) > 1e-9 * self.grid_size).any() or (r < 0).any() or (r > self.grid_size).any():
            raise ValueError('Arguments must be grid points in [0, 1].')
        return r.astype(np.int64)

    def __call__(self, s):
        """Value at the grid point(s) `s`.
        """
        return self.values[self.index(s)]

    def __repr__(self):
        return 'ExcursionGrid(grid_size={0:d})'.format(self.grid_size)


def sample_excursion(grid_size, seed=None):
    """Normalized Brownian excursion on a grid.

    A Brownian bridge is sampled on the grid and rotated cyclically so that
    its minimum moves to time 0 (the Vervaat transform).

    Parameters
    ----------
    grid_size : :class:`int`
        Number of grid cells, at least 2.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.

    Returns
    -------
    :class:`ExcursionGrid`
        The excursion.
    """
    if grid_size < 2:
        raise ValueError('The grid needs at least two cells.')
    rng = get_rng(seed)
    m = grid_size
    walk = np.zeros(m + 1, dtype=np.float64)
    walk[1:] = np.cumsum(rng.standard_normal(m)) / np.sqrt(m)
    bridge = walk - np.arange(m + 1) / m * walk[-1]
    k = int(np.argmin(bridge[:-1]))
    excursion = np.empty(m + 1, dtype=np.float64)
    excursion[:-1] = np.roll(bridge[:-1], -k) - bridge[k]
    excursion[-1] = 0.0
    return ExcursionGrid(np.maximum(excursion, 0.0))


def crt_pseudometric(w, s, t):
    """``d_w(s, t) = w(s) + w(t) - 2 min_{[s ^ t, s v t]} w``.

    Parameters
    ----------
    w : :class:`ExcursionGrid`
        The excursion.
    s, t : :class:`float`
        Grid points in ``[0, 1]``.

    Returns
    -------
    :class:`float`
        The distance.

    Raises
    ------
    ValueError
        If `s` or `t` is not a grid point.
    """
    i = int(w.index(s))
    j = int(w.index(t))
    if i > j:
        i, j = j, i
    v = w.values
    return float(v[i] + v[j] - 2.0 * v[i:j + 1].min())
