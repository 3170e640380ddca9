# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""
This subpackage implements percolation clusters on the binary tree, size
conditioned clusters, the incipient infinite cluster, invasion percolation
and the lower envelope of a planar Poisson process.
"""
#
# Define this early on so that submodules can use it
#
from .. import CritwalkException
import astropy.utils.exceptions as aue


class PercolationException(CritwalkException):
    """Exceptions raised by :mod:`critwalk.percolation` that don't fit into a
    standard exception class like :exc:`ValueError`.
    """
    pass


class ClusterCapExceeded(PercolationException):
    """Raised when a cluster grows beyond its vertex cap.
    """
    pass


class PercolationUserWarning(aue.AstropyUserWarning):
    """Class for warnings issued by :mod:`critwalk.percolation`.
    """
    pass


__all__ = ['PercolationException', 'ClusterCapExceeded',
           'PercolationUserWarning']
