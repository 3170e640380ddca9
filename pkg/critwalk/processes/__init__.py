# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""
This subpackage implements purely atomic measures, stable and inverse
Gaussian trap point processes, subordinator paths, empirical Laplace
transforms and lattice approximations of reflected Brownian motion.
"""
#
# Define this early on so that submodules can use it
#
from .. import CritwalkException
import astropy.utils.exceptions as aue


class ProcessesException(CritwalkException):
    """Exceptions raised by :mod:`critwalk.processes` that don't fit into a
    standard exception class like :exc:`ValueError`.
    """
    pass


class ProcessesUserWarning(aue.AstropyUserWarning):
    """Class for warnings issued by :mod:`critwalk.processes`.
    """
    pass


__all__ = ['ProcessesException', 'ProcessesUserWarning']
