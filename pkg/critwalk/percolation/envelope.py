# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Lower envelope of a unit-rate Poisson process in the quarter plane.

``E(t)`` is the smallest height of a Poisson point with abscissa at most
`t`.  It has the exponential law of rate `t`, and it jumps down at the
abscissae of successive record minima.
"""
import numpy as np
from ..rng import get_rng


class EnvelopeProcess(object):
    """Non-increasing, right-continuous, piecewise-constant process.

    Parameters
    ----------
    jump_times : array-like
        Strictly increasing jump times in ``(x_min, x_max]``.
    levels : array-like
        Strictly decreasing positive values, one more than `jump_times`;
        ``levels[0]`` holds on ``[x_min, jump_times[0])``.
    x_min, x_max : :class:`float`
        Domain of the process.
    """

    def __init__(self, jump_times, levels, x_min, x_max):
        jump_times = np.asarray(jump_times, dtype=np.float64)
        levels = np.asarray(levels, dtype=np.float64)
        if not (0 < x_min < x_max):
            raise ValueError('The domain must satisfy 0 < x_min < x_max.')
        if levels.size != jump_times.size + 1:
            raise ValueError('There must be one more level than jump times.')
        if (levels <= 0).any() or (np.diff(levels) >= 0).any():
            raise ValueError('Levels must be positive and strictly decreasing.')
        if jump_times.size > 0:
            if (np.diff(jump_times) <= 0).any():
                raise ValueError('Jump times must be strictly increasing.')
            if jump_times[0] <= x_min or jump_times[-1] > x_max:
                raise ValueError('Jump times must lie in (x_min, x_max].')
        self.jump_times = jump_times
        self.levels = levels
        self.x_min = float(x_min)
        self.x_max = float(x_max)

    def __call__(self, t):
        """Evaluate the process at `t` (scalar or array) in ``[x_min, x_max]``.
        """
        t = np.asarray(t, dtype=np.float64)
        if (t < self.x_min).any() or (t > self.x_max).any():
            raise ValueError('Evaluation points must lie in [x_min, x_max].')
        v = self.levels[np.searchsorted(self.jump_times, t, side='right')]
        if v.ndim == 0:
            return float(v)
        return v

    def intervals(self):
        """Constancy intervals as a list of ``(a, b, level)`` tuples.
        """
        edges = np.concatenate(([self.x_min], self.jump_times, [self.x_max]))
        return [(float(edges[i]), float(edges[i + 1]), float(self.levels[i]))
                for i in range(self.levels.size) if edges[i + 1] > edges[i]]

    def __repr__(self):
        return 'EnvelopeProcess(x_min={0:g}, x_max={1:g}, jumps={2:d})'.format(
            self.x_min, self.x_max, self.jump_times.size)


def sample_envelope(x_min, x_max, seed=None):
    """Exact simulation of the lower envelope on ``[x_min, x_max]``.

    ``E(x_min)`` is exponential with rate `x_min`.  From level `e` the next
    record below `e` arrives after an exponential waiting time of rate `e`
    and is uniform on ``(0, e)``.

    Parameters
    ----------
    x_min, x_max : :class:`float`
        Domain, with ``0 < x_min < x_max``.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.

    Returns
    -------
    :class:`EnvelopeProcess`
        The envelope.
    """
    if not (0 < x_min < x_max):
        raise ValueError('The domain must satisfy 0 < x_min < x_max.')
    rng = get_rng(seed)
    level = rng.exponential(1.0 / x_min)
    levels = [level]
    jumps = []
    t = x_min
    while True:
        t += rng.exponential(1.0 / level)
        if t > x_max:
            break
        level *= rng.random()
        jumps.append(t)
        levels.append(level)
    return EnvelopeProcess(jumps, levels, x_min, x_max)
