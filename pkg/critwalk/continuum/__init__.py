# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""
This subpackage implements Brownian excursions and the trees they code,
reduced continuum trees and the line-breaking construction, mass measures
on metric trees, inverse local times of large critical trees, and spatially
subordinated Brownian motions on the half-line and on metric trees.
"""
#
# Define this early on so that submodules can use it
#
from .. import CritwalkException
import astropy.utils.exceptions as aue


class ContinuumException(CritwalkException):
    """Exceptions raised by :mod:`critwalk.continuum` that don't fit into a
    standard exception class like :exc:`ValueError`.
    """
    pass


class HorizonExceeded(ContinuumException):
    """Raised when a clock does not reach the requested time within the
    simulated horizon.
    """
    pass


class ContinuumUserWarning(aue.AstropyUserWarning):
    """Class for warnings issued by :mod:`critwalk.continuum`.
    """
    pass


__all__ = ['ContinuumException', 'HorizonExceeded', 'ContinuumUserWarning']
