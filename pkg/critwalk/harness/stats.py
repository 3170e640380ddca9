# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Standard errors, tail-index fits, Kolmogorov-Smirnov tests and
displacement exponents.
"""
from warnings import warn
import numpy as np
from scipy.stats import ks_2samp, kstest, linregress
from . import HarnessUserWarning
from ..rng import get_rng


def batch_means_stderr(values, batches=None):
    """Standard error of the mean of `values` by batch means.

    The sample is cut into `batches` consecutive batches of equal size; the
    standard error is the standard deviation of the batch means over
    ``sqrt(batches)``.  Samples shorter than two batches are treated as
    independent.

    Parameters
    ----------
    values : array-like
        Non-empty sample.
    batches : :class:`int`, optional
        Number of batches, :attr:`critwalk.conf.batch_count` by default.

    Returns
    -------
    :class:`float`
        The standard error; 0 for a single value.
    """
    from .. import conf
    x = np.asarray(values, dtype=np.float64).ravel()
    if x.size == 0:
        raise ValueError('The sample is empty.')
    if batches is None:
        batches = conf.batch_count
    if batches < 2:
        raise ValueError('At least two batches are required.')
    if x.size == 1:
        return 0.0
    if x.size < 2 * batches:
        return float(x.std(ddof=1) / np.sqrt(x.size))
    m = x.size // batches
    means = x[:m * batches].reshape(batches, m).mean(axis=1)
    return float(means.std(ddof=1) / np.sqrt(batches))


def tail_index_fit(samples, fraction=None, min_samples=None):
    """Fit ``P[X > u] ~ c u**(-gamma)`` to the largest order statistics.

    The Hill estimator over the top ``k = fraction * n`` order statistics
    gives ``gamma`` and its standard error ``gamma / sqrt(k)``; the constant
    is ``(k / n) u_k**gamma`` with ``u_k`` the threshold.  A log-log
    regression of the empirical survival function over the same order
    statistics is reported alongside.  A
    :class:`~critwalk.harness.HarnessUserWarning` is issued when the two
    halves of the tail disagree on the slope, as they do for light tails.

    Parameters
    ----------
    samples : array-like
        Positive sample.
    fraction : :class:`float`, optional
        Fraction of the sample in the tail,
        :attr:`critwalk.conf.tail_fraction` by default.
    min_samples : :class:`int`, optional
        Smallest accepted sample, :attr:`critwalk.conf.min_tail_samples`
        by default.

    Returns
    -------
    :class:`tuple`
        ``(gamma, c, stderr, gamma_regression)``.

    Raises
    ------
    ValueError
        If there are fewer than `min_samples` samples.
    """
    from .. import conf
    if fraction is None:
        fraction = conf.tail_fraction
    if min_samples is None:
        min_samples = conf.min_tail_samples
    x = np.sort(np.asarray(samples, dtype=np.float64).ravel())[::-1]
    n = x.size
    if n < min_samples:
        raise ValueError('A tail fit needs at least {0:d} samples.'.format(min_samples))
    if not (0 < fraction < 1):
        raise ValueError('fraction must lie in (0, 1).')
    if (x <= 0).any():
        raise ValueError('Tail fits need positive samples.')
    k = max(2, int(fraction * n))
    u = x[k]
    xi = np.log(x[:k] / u).mean()
    gamma = 1.0 / xi
    c = (k / n) * u**gamma
    stderr = gamma / np.sqrt(k)
    #
    # Empirical survival P[X >= x_(i)] = i/n at the i-th largest value.
    #
    logx = np.log(x[:k])
    logs = np.log(np.arange(1, k + 1) / n)
    gamma_regression = -linregress(logx, logs).slope
    h = k // 2
    upper = -linregress(logx[:h], logs[:h]).slope
    lower = -linregress(logx[h:], logs[h:]).slope
    if abs(upper - lower) > 0.5 * abs(lower):
        warn('Tail slopes {0:.3g} and {1:.3g} disagree; the sample may not be '
             'heavy-tailed.'.format(lower, upper), HarnessUserWarning)
    return gamma, c, stderr, gamma_regression


def ks_two_sample(a, b, permutations=None, seed=None):
    """Two-sample Kolmogorov-Smirnov distance and p-value.

    When the smaller sample has fewer than 100 values the p-value comes
    from a permutation null.

    Parameters
    ----------
    a, b : array-like
        Non-empty samples.
    permutations : :class:`int`, optional
        Permutation count, :attr:`critwalk.conf.ks_permutations` by default.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.

    Returns
    -------
    :class:`tuple`
        ``(distance, pvalue)``.
    """
    from .. import conf
    a = np.asarray(a, dtype=np.float64).ravel()
    b = np.asarray(b, dtype=np.float64).ravel()
    if a.size == 0 or b.size == 0:
        raise ValueError('Both samples must be non-empty.')
    result = ks_2samp(a, b)
    d = float(result.statistic)
    if min(a.size, b.size) >= 100:
        return d, float(result.pvalue)
    if permutations is None:
        permutations = conf.ks_permutations
    rng = get_rng(seed)
    pooled = np.concatenate((a, b))
    exceed = 0
    for k in range(permutations):
        p = rng.permutation(pooled)
        if ks_2samp(p[:a.size], p[a.size:]).statistic >= d - 1e-12:
            exceed += 1
    return d, (exceed + 1.0) / (permutations + 1.0)


def ks_one_sample(samples, cdf):
    """Kolmogorov-Smirnov distance and p-value against a closed-form law.

    Parameters
    ----------
    samples : array-like
        Non-empty sample.
    cdf : callable or :class:`str`
        Distribution function, or the name of a :mod:`scipy.stats`
        distribution.

    Returns
    -------
    :class:`tuple`
        ``(distance, pvalue)``.
    """
    x = np.asarray(samples, dtype=np.float64).ravel()
    if x.size == 0:
        raise ValueError('The sample is empty.')
    result = kstest(x, cdf)
    return float(result.statistic), float(result.pvalue)


def _time_grid(t_grid):
    t = np.asarray(t_grid)
    if t.ndim != 1 or t.size < 2 or (t <= 0).any() or (np.diff(t) <= 0).any():
        raise ValueError('The time grid must have at least two increasing positive times.')
    return t


def running_maxima(trajectory, t_grid):
    """Running maximum of a trajectory at the times of `t_grid`.

    `trajectory` holds positions at integer times, or is a trapped-walk
    trajectory with ``sites`` and ``arrival_times``.
    """
    t = np.asarray(t_grid)
    if hasattr(trajectory, 'arrival_times'):
        if t[-1] >= trajectory.times[-1]:
            raise ValueError('Trajectories are shorter than the time grid.')
        k = np.searchsorted(trajectory.arrival_times, t, side='right') - 1
        return np.maximum.accumulate(trajectory.sites)[k]
    x = np.asarray(trajectory)
    if t[-1] >= x.size:
        raise ValueError('Trajectories are shorter than the time grid.')
    return np.maximum.accumulate(x)[t.astype(np.int64)]


def displacement_exponent(trajectories, t_grid):
    """Growth exponent of the median running maximum.

    Parameters
    ----------
    trajectories : sequence
        Positions at integer times (1-d arrays), or trapped-walk
        trajectories with ``sites`` and ``arrival_times``.
    t_grid : array-like
        Increasing positive times spanning at least three decades.

    Returns
    -------
    :class:`tuple`
        ``(slope, stderr)`` of the regression of the log median running
        maximum on the log time.

    Raises
    ------
    ValueError
        If the grid spans fewer than three decades, a trajectory is shorter
        than the grid or a median is not positive.
    """
    t = _time_grid(t_grid)
    if t[-1] / t[0] < 1000:
        raise ValueError('The time grid must span at least three decades.')
    if len(trajectories) == 0:
        raise ValueError('At least one trajectory is required.')
    maxima = np.array([running_maxima(tr, t) for tr in trajectories], dtype=np.float64)
    return maxima_exponent(maxima, t)


def maxima_exponent(maxima, t_grid):
    """Regression of :func:`displacement_exponent` on precomputed maxima.

    `maxima` has one row per trajectory and one column per time.  A grid
    of fewer than three decades only triggers a
    :class:`~critwalk.harness.HarnessUserWarning` here.
    """
    t = _time_grid(t_grid)
    if t[-1] / t[0] < 1000:
        warn('The time grid spans fewer than three decades.', HarnessUserWarning)
    maxima = np.atleast_2d(np.asarray(maxima, dtype=np.float64))
    median = np.median(maxima, axis=0)
    if (median <= 0).any():
        raise ValueError('The median running maximum must be positive on the grid.')
    fit = linregress(np.log(t), np.log(median))
    return float(fit.slope), float(fit.stderr)
