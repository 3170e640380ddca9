# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Subordinator paths and inverse Gaussian subordinators.

The inverse Gaussian subordinator with parameters ``(delta, gamma)`` has
``E[exp(-lam I_t)] = exp(-t delta (sqrt(2 lam + gamma**2) - gamma))`` and
Levy measure ``delta / sqrt(2 pi) y**(-3/2) exp(-gamma**2 y / 2) dy``.  Its
increment over a time ``t`` is inverse Gaussian with mean
``delta t / gamma`` and shape ``(delta t)**2``.
"""
from warnings import warn
import numpy as np
from scipy.special import erf
from . import ProcessesUserWarning
from .measure import AtomicMeasure
from ..rng import get_rng

IPC_DELTA = 1.0 / np.sqrt(2.0)


class SubordinatorPath(object):
    """Drift plus jumps, evaluated on ``[0, horizon]``.

    ``S(t) = drift * t + (mass of the jumps at times <= t)``, which is
    non-decreasing, right-continuous and 0 at 0 when no jump sits at 0.

    Parameters
    ----------
    drift : :class:`float`
        Non-negative drift per unit time.
    jumps : :class:`~critwalk.processes.measure.AtomicMeasure`
        Jump times and sizes.
    horizon : :class:`float`
        Last time at which the path is known.
    """

    def __init__(self, drift, jumps, horizon):
        if drift < 0:
            raise ValueError('The drift must be non-negative.')
        if horizon < 0:
            raise ValueError('The horizon must be non-negative.')
        if jumps.size > 0 and (jumps.locations[0] <= 0 or jumps.locations[-1] > horizon):
            raise ValueError('Jump times must lie in (0, horizon].')
        self.drift = float(drift)
        self.jumps = jumps
        self.horizon = float(horizon)

    def __call__(self, t):
        """Value of the path at time(s) `t` in ``[0, horizon]``.
        """
        t = np.asarray(t, dtype=np.float64)
        if (t < 0).any() or (t > self.horizon).any():
            raise ValueError('The path is only known on [0, horizon].')
        v = self.drift * t + self.jumps.cumulative(t)
        if np.ndim(v) == 0:
            return float(v)
        return v

    def __repr__(self):
        return 'SubordinatorPath(drift={0:g}, jumps={1:d}, horizon={2:g})'.format(
            self.drift, self.jumps.size, self.horizon)


def identity_subordinator(index=0, horizon=1.0):
    """The path ``S(t) = t`` on ``[0, horizon]``.

    The signature matches the subordinator factories used by
    :func:`~critwalk.continuum.ssbm.ssbm_simulate`.
    """
    return SubordinatorPath(1.0, AtomicMeasure.empty(), horizon)


def ig_laplace_exponent(lam, delta, gamma):
    """``delta (sqrt(2 lam + gamma**2) - gamma)``.
    """
    lam = np.asarray(lam, dtype=np.float64)
    return delta * (np.sqrt(2.0 * lam + gamma * gamma) - gamma)


def _half_stable_part(lam, h):
    """``int_0^h (1 - exp(-lam y)) y**(-3/2) dy``.
    """
    lam = np.asarray(lam, dtype=np.float64)
    return 2.0 * (np.sqrt(np.pi * lam) * erf(np.sqrt(lam * h)) + np.expm1(-lam * h) / np.sqrt(h))


def ig_small_jump_exponent(lam, h, delta, gamma, length=1.0):
    """Laplace exponent of the jumps below `h` over a time `length`.
    """
    lam = np.asarray(lam, dtype=np.float64)
    a = 0.5 * gamma * gamma
    c = delta / np.sqrt(2.0 * np.pi)
    return length * c * (_half_stable_part(lam + a, h) - _half_stable_part(a, h))


def ig_small_jump_mass(h, delta, gamma, length=1.0):
    """Expected total size of the jumps below `h` over a time `length`.
    """
    if gamma == 0:
        return length * delta * np.sqrt(2.0 * h / np.pi)
    return length * delta * erf(gamma * np.sqrt(0.5 * h)) / gamma


def inverse_gaussian_variates(mean, shape, size=None, seed=None):
    """Inverse Gaussian variates.

    NumPy's Wald generator implements the transformation method of
    Michael, Schucany and Haas.  An infinite `mean` gives the Levy
    distribution ``shape / Z**2`` with ``Z`` standard normal, the limit of
    the inverse Gaussian law as the mean diverges.

    Parameters
    ----------
    mean : :class:`float` or array-like
        Positive means, possibly infinite.
    shape : :class:`float` or array-like
        Positive shape parameters.
    size : :class:`int` or :class:`tuple`, optional
        Output shape.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.

    Returns
    -------
    :class:`~numpy.ndarray`
        The variates.
    """
    rng = get_rng(seed)
    mean = np.asarray(mean, dtype=np.float64)
    shape = np.asarray(shape, dtype=np.float64)
    if (mean <= 0).any() or (shape <= 0).any():
        raise ValueError('Mean and shape must be positive.')
    if size is None:
        size = np.broadcast(mean, shape).shape
    mean = np.broadcast_to(mean, size)
    shape = np.broadcast_to(shape, size)
    finite = np.isfinite(mean)
    out = np.empty(size, dtype=np.float64)
    if finite.any():
        out[finite] = rng.wald(mean[finite], shape[finite])
    if (~finite).any():
        z = rng.standard_normal(int((~finite).sum()))
        out[~finite] = shape[~finite] / (z * z)
    return out


def sample_inverse_gaussian_path(delta, gamma, horizon, time_grid=None, seed=None, cells=100):
    """Inverse Gaussian subordinator sampled exactly on a time grid.

    Parameters
    ----------
    delta : :class:`float`
        Positive scale parameter.
    gamma : :class:`float`
        Non-negative tilting parameter; 0 gives the 1/2-stable subordinator
        with infinite mean.
    horizon : :class:`float`
        Final time, non-negative.
    time_grid : array-like, optional
        Increasing grid from 0 to `horizon`; `cells` equal cells by default.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    cells : :class:`int`, optional
        Number of cells of the default grid.

    Returns
    -------
    :class:`SubordinatorPath`
        The path, with each cell increment placed at the right end of its
        cell.
    """
    if delta <= 0:
        raise ValueError('delta must be positive.')
    if gamma < 0:
        raise ValueError('gamma must be non-negative.')
    if gamma == 0:
        warn('gamma = 0 gives a subordinator with infinite mean.', ProcessesUserWarning)
    if horizon == 0:
        return SubordinatorPath(0.0, AtomicMeasure.empty(), 0.0)
    if time_grid is None:
        time_grid = np.linspace(0.0, horizon, cells + 1)
    grid = np.asarray(time_grid, dtype=np.float64)
    if grid[0] != 0 or not np.isclose(grid[-1], horizon) or (np.diff(grid) <= 0).any():
        raise ValueError('The time grid must increase from 0 to the horizon.')
    rng = get_rng(seed)
    dt = np.diff(grid)
    mean = delta * dt / gamma if gamma > 0 else np.full(dt.size, np.inf)
    increments = inverse_gaussian_variates(mean, (delta * dt)**2, seed=rng)
    keep = increments > 0
    return SubordinatorPath(0.0, AtomicMeasure(grid[1:][keep], increments[keep]), grid[-1])


def sample_ig_jumps(x_range, h_min, delta, gamma, seed=None):
    """Jumps above `h_min` of an inverse Gaussian subordinator on a window.

    Proposals come from the 1/2-stable intensity
    ``delta / sqrt(2 pi) y**(-3/2)`` above `h_min` and are kept with
    probability ``exp(-gamma**2 y / 2)``.

    Returns
    -------
    :class:`~critwalk.processes.measure.AtomicMeasure`
        Jump times and sizes; the expected size of the dropped jumps is the
        deficit.
    """
    if h_min <= 0:
        raise ValueError('The mass cut must be positive.')
    rng = get_rng(seed)
    x0, x1 = x_range
    length = max(0.0, x1 - x0)
    if length == 0:
        return AtomicMeasure.empty()
    count = rng.poisson(length * delta * np.sqrt(2.0 / (np.pi * h_min)))
    y = h_min * rng.random(count)**-2.0
    keep = rng.random(count) < np.exp(-0.5 * gamma * gamma * y)
    x = x0 + length * rng.random(count)
    return AtomicMeasure(x[keep], y[keep], ig_small_jump_mass(h_min, delta, gamma, length))


def mu_ipc(envelope, seed=None, h_min=None, delta=IPC_DELTA):
    """Trap measure of the IPC driven by an envelope.

    On each constancy interval ``[a, b)`` of `envelope` with level `e`, the
    atoms are the jumps of an inverse Gaussian subordinator with parameters
    ``(delta, sqrt(2) e)``, independently over intervals.

    Parameters
    ----------
    envelope : :class:`~critwalk.percolation.envelope.EnvelopeProcess`
        The envelope.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    h_min : :class:`float`, optional
        Mass cut, :attr:`critwalk.conf.mass_cut` by default.
    delta : :class:`float`, optional
        Scale parameter, ``1/sqrt(2)`` by default.

    Returns
    -------
    :class:`~critwalk.processes.measure.AtomicMeasure`
        The atoms, with the summed deficit of the intervals.
    """
    from astropy import log
    if h_min is None:
        from .. import conf
        h_min = conf.mass_cut
    rng = get_rng(seed)
    mu = AtomicMeasure.empty()
    for a, b, level in envelope.intervals():
        mu = mu + sample_ig_jumps((a, b), h_min, delta, np.sqrt(2.0) * level, rng)
    log.debug("IPC trap measure with {0:d} atoms.".format(mu.size))
    return mu


def mu_ipc_laplace_exponent(envelope, lam, delta=IPC_DELTA, h_min=None):
    """Laplace exponent of the total mass of :func:`mu_ipc`.

    With `h_min` only the atoms above the cut are counted.
    """
    lam = np.asarray(lam, dtype=np.float64)
    total = np.zeros(lam.shape)
    for a, b, level in envelope.intervals():
        g = np.sqrt(2.0) * level
        total = total + (b - a) * ig_laplace_exponent(lam, delta, g)
        if h_min is not None:
            total = total - ig_small_jump_exponent(lam, h_min, delta, g, b - a)
    return total
