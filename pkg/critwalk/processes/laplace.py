# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Empirical Laplace transforms and the rescaled exponent ``Psi_epsilon``.
"""
import numpy as np


class LaplaceCurve(object):
    """Values of a transform on a grid of arguments.

    Parameters
    ----------
    lam : array-like
        Arguments.
    value : array-like
        Transform values.
    stderr : array-like, optional
        Standard errors of `value`.
    reference : array-like, optional
        Closed-form values to compare with.
    """

    def __init__(self, lam, value, stderr=None, reference=None):
        self.lam = np.asarray(lam, dtype=np.float64)
        self.value = np.asarray(value, dtype=np.float64)
        self.stderr = None if stderr is None else np.asarray(stderr, dtype=np.float64)
        self.reference = None if reference is None else np.asarray(reference, dtype=np.float64)

    def deviation(self):
        """``|value - reference|`` in units of the standard error.
        """
        if self.reference is None or self.stderr is None:
            raise ValueError('A reference and standard errors are required.')
        with np.errstate(divide='ignore', invalid='ignore'):
            z = np.abs(self.value - self.reference) / self.stderr
        return np.where(self.value == self.reference, 0.0, z)

    def is_exponent_shaped(self, atol=0.0):
        """Non-negative, non-decreasing and concave on the grid.
        """
        v = self.value
        if (v < -atol).any() or (np.diff(v) < -atol).any():
            return False
        slopes = np.diff(v) / np.diff(self.lam)
        return bool((np.diff(slopes) <= atol).all())

    def write(self, filename):
        """Export as ``lambda, value`` CSV columns.
        """
        from ..export import write_columns
        return write_columns(filename, ['lambda', 'value'], [self.lam, self.value])

    def __repr__(self):
        return 'LaplaceCurve(points={0:d})'.format(self.lam.size)


def empirical_laplace(samples, lam, batches=None):
    """Empirical transform ``mean(exp(-lam X))`` with batch-means errors.

    Parameters
    ----------
    samples : array-like
        Non-empty sample of ``X``.
    lam : array-like
        Arguments.
    batches : :class:`int`, optional
        Number of batches, :attr:`critwalk.conf.batch_count` by default.

    Returns
    -------
    :class:`LaplaceCurve`
        The transform.
    """
    from ..harness.stats import batch_means_stderr
    x = np.asarray(samples, dtype=np.float64).ravel()
    if x.size == 0:
        raise ValueError('The sample is empty.')
    lam = np.atleast_1d(np.asarray(lam, dtype=np.float64))
    e = np.exp(-np.outer(lam, x))
    stderr = np.array([batch_means_stderr(row, batches) for row in e])
    return LaplaceCurve(lam, e.mean(axis=1), stderr)


def psi_epsilon(samples, epsilon, lam, q=None):
    """``Psi_epsilon(nu)(lam) = (1 - nu_hat(q lam)) / epsilon``.

    Parameters
    ----------
    samples : array-like
        Durations drawn from ``nu``.
    epsilon : :class:`float`
        Scale in ``(0, 1)``.
    lam : array-like
        Arguments.
    q : :class:`float`, optional
        Laplace-argument scale, ``pi epsilon**3`` by default.

    Returns
    -------
    :class:`LaplaceCurve`
        The plug-in estimate.
    """
    if not (0 < epsilon < 1):
        raise ValueError('epsilon must lie in (0, 1).')
    if q is None:
        from ..percolation.cluster import scales
        q = scales(epsilon)[1]
    lam = np.atleast_1d(np.asarray(lam, dtype=np.float64))
    nu = empirical_laplace(samples, q * lam)
    return LaplaceCurve(lam, (1.0 - nu.value) / epsilon, nu.stderr / epsilon)
