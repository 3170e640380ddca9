# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Purely atomic measures on the line.
"""
import numpy as np


class AtomicMeasure(object):
    """A finite sum of point masses ``sum_i y_i delta_{x_i}``.

    Atoms are kept sorted by location.  Atoms sharing a location are merged
    by summing their masses.

    Parameters
    ----------
    locations : array-like
        Atom locations ``x_i``.
    masses : array-like
        Strictly positive atom masses ``y_i``.
    deficit : :class:`float`, optional
        Expected mass of the atoms dropped by a truncated sampler.

    Examples
    --------
    >>> from critwalk.processes.measure import AtomicMeasure
    >>> mu = AtomicMeasure([0.5, 0.1, 0.5], [1.0, 2.0, 3.0])
    >>> mu.locations.tolist(), mu.masses.tolist()
    ([0.1, 0.5], [2.0, 4.0])
    """

    def __init__(self, locations, masses, deficit=0.0):
        x = np.asarray(locations, dtype=np.float64).ravel()
        y = np.asarray(masses, dtype=np.float64).ravel()
        if x.size != y.size:
            raise ValueError('There must be one mass per location.')
        if (y <= 0).any():
            raise ValueError('Atom masses must be strictly positive.')
        if deficit < 0:
            raise ValueError('The mass deficit is non-negative.')
        ux, inverse = np.unique(x, return_inverse=True)
        self.locations = ux
        self.masses = np.bincount(inverse.ravel(), weights=y, minlength=ux.size)
        self.deficit = float(deficit)

    @classmethod
    def empty(cls, deficit=0.0):
        """A measure with no atoms.
        """
        return cls([], [], deficit)

    @property
    def size(self):
        """Number of atoms.
        """
        return self.locations.size

    def __len__(self):
        return self.locations.size

    @property
    def total_mass(self):
        """Sum of the atom masses.
        """
        return float(self.masses.sum())

    def cumulative(self, x):
        """Mass of the atoms at locations ``<= x``.
        """
        c = np.concatenate(([0.0], np.cumsum(self.masses)))
        v = c[np.searchsorted(self.locations, x, side='right')]
        if np.ndim(v) == 0:
            return float(v)
        return v

    def restrict(self, a, b):
        """Atoms with locations in ``[a, b)``.
        """
        keep = (self.locations >= a) & (self.locations < b)
        return AtomicMeasure(self.locations[keep], self.masses[keep])

    def above(self, h):
        """Atoms with mass greater than `h`.
        """
        keep = self.masses > h
        return AtomicMeasure(self.locations[keep], self.masses[keep])

    def __add__(self, other):
        return AtomicMeasure(np.concatenate((self.locations, other.locations)),
                             np.concatenate((self.masses, other.masses)),
                             self.deficit + other.deficit)

    def write(self, filename):
        """Export the atoms as ``x, y`` CSV columns.
        """
        from ..export import write_columns
        return write_columns(filename, ['x', 'y'], [self.locations, self.masses])

    def __repr__(self):
        return 'AtomicMeasure(atoms={0:d}, total_mass={1:g})'.format(self.size, self.total_mass)
