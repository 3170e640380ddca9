# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""
This subpackage implements finite ordered rooted trees, their search-depth
encoding, reduced subtrees and projections.
"""
#
# Define this early on so that submodules can use it
#
from .. import CritwalkException
import astropy.utils.exceptions as aue


class TreesException(CritwalkException):
    """Exceptions raised by :mod:`critwalk.trees` that don't fit into a
    standard exception class like :exc:`ValueError`.
    """
    pass


class TreesUserWarning(aue.AstropyUserWarning):
    """Class for warnings issued by :mod:`critwalk.trees`.
    """
    pass


__all__ = ['TreesException', 'TreesUserWarning']
