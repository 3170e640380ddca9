# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Stable trap point processes.

The points ``(x_i, y_i)`` form a Poisson process on ``R x (0, inf)`` with
intensity ``a y**(-1-gamma) dx dy``.  Its total mass over ``[0, t]`` is a
``gamma``-stable subordinator with Laplace exponent
``a Gamma(1-gamma) lam**gamma / gamma``.  The measure ``mu_IIC`` has
``a = 1/(2 sqrt(pi))`` and ``gamma = 1/2``, for which the exponent is
``sqrt(lam)``.
"""
import numpy as np
from scipy.special import gamma as gammafn, gammainc
from .measure import AtomicMeasure
from ..rng import get_rng

IIC_INTENSITY = 0.5 / np.sqrt(np.pi)


def stable_tail_mass(h, a=IIC_INTENSITY, gamma=0.5):
    """Intensity of the atoms with mass above `h`, per unit length.
    """
    return a / gamma * h**(-gamma)


def stable_laplace_exponent(lam, a=IIC_INTENSITY, gamma=0.5):
    """``int (1 - exp(-lam y)) a y**(-1-gamma) dy``.
    """
    lam = np.asarray(lam, dtype=np.float64)
    return a * gammafn(1.0 - gamma) / gamma * lam**gamma


def stable_small_jump_exponent(lam, h, a=IIC_INTENSITY, gamma=0.5, length=1.0):
    """Laplace exponent of the atoms below `h` on a window of `length`.

    Integrating by parts,
    ``int_0^h (1 - exp(-lam y)) y**(-1-gamma) dy`` equals
    ``(lam**gamma Gamma(1-gamma) P(1-gamma, lam h) - (1 - exp(-lam h)) h**(-gamma)) / gamma``
    with ``P`` the regularized lower incomplete gamma function.
    """
    lam = np.asarray(lam, dtype=np.float64)
    value = (lam**gamma * gammafn(1.0 - gamma) * gammainc(1.0 - gamma, lam * h) +
             np.expm1(-lam * h) * h**(-gamma)) / gamma
    return length * a * value


def sample_stable_ppp(x_range, h_min, a=IIC_INTENSITY, gamma=0.5, seed=None):
    """Atoms of the stable point process with mass above `h_min`.

    Parameters
    ----------
    x_range : :class:`tuple`
        ``(x0, x1)``; an empty range gives an empty measure.
    h_min : :class:`float`
        Mass cut, positive.
    a : :class:`float`, optional
        Intensity constant.
    gamma : :class:`float`, optional
        Stability index in ``(0, 1)``.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.

    Returns
    -------
    :class:`~critwalk.processes.measure.AtomicMeasure`
        The atoms; the expected mass below the cut is recorded as the
        deficit.
    """
    if h_min <= 0:
        raise ValueError('The mass cut must be positive.')
    if not (0 < gamma < 1):
        raise ValueError('gamma must lie in (0, 1).')
    rng = get_rng(seed)
    x0, x1 = x_range
    length = max(0.0, x1 - x0)
    if length == 0:
        return AtomicMeasure.empty()
    count = rng.poisson(length * stable_tail_mass(h_min, a, gamma))
    x = x0 + length * rng.random(count)
    #
    # Pareto tail of index gamma above h_min.
    #
    y = h_min * rng.random(count)**(-1.0 / gamma)
    deficit = length * a * h_min**(1.0 - gamma) / (1.0 - gamma)
    return AtomicMeasure(x, y, deficit)


def mu_iic(x_range, h_min=None, seed=None):
    """Trap measure of the IIC: atoms of ``y**(-3/2) / (2 sqrt(pi))``.

    `h_min` defaults to :attr:`critwalk.conf.mass_cut`.
    """
    if h_min is None:
        from .. import conf
        h_min = conf.mass_cut
    return sample_stable_ppp(x_range, h_min, IIC_INTENSITY, 0.5, seed)


def stable_total_masses(length, h_min, size, a=IIC_INTENSITY, gamma=0.5, seed=None):
    """Total masses of `size` independent truncated draws on a window.
    """
    rng = get_rng(seed)
    counts = rng.poisson(length * stable_tail_mass(h_min, a, gamma), size)
    y = h_min * rng.random(int(counts.sum()))**(-1.0 / gamma)
    owner = np.repeat(np.arange(size), counts)
    return np.bincount(owner, weights=y, minlength=size)


def stable_subordinator_marginal_check(lam, h_min=1e-4, samples=10000, a=IIC_INTENSITY,
                                       gamma=0.5, seed=None):
    """Empirical Laplace transform of ``V_1`` against the stable closed form.

    ``V_1`` is the total mass on ``[0, 1]`` of the truncated point process;
    the truncated atoms are independent of the kept ones, so the empirical
    transform is multiplied by the exact small-jump factor.

    Parameters
    ----------
    lam : array-like
        Laplace arguments.
    h_min : :class:`float`, optional
        Mass cut.
    samples : :class:`int`, optional
        Number of draws of ``V_1``.
    a, gamma : :class:`float`, optional
        Intensity constant and index.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.

    Returns
    -------
    :class:`~critwalk.processes.laplace.LaplaceCurve`
        Corrected empirical transform, with ``exp(-exponent)`` as reference.
    """
    from .laplace import empirical_laplace
    lam = np.atleast_1d(np.asarray(lam, dtype=np.float64))
    v = stable_total_masses(1.0, h_min, samples, a, gamma, seed)
    curve = empirical_laplace(v, lam)
    factor = np.exp(-stable_small_jump_exponent(lam, h_min, a, gamma))
    curve.value = curve.value * factor
    curve.stderr = curve.stderr * factor
    curve.reference = np.exp(-stable_laplace_exponent(lam, a, gamma))
    return curve
