# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""
This subpackage implements simple random walks on finite trees, their
local time at the root, excursion and exit durations, projections onto a
backbone and randomly trapped random walks on the integers.
"""
#
# Define this early on so that submodules can use it
#
from .. import CritwalkException
import astropy.utils.exceptions as aue


class WalksException(CritwalkException):
    """Exceptions raised by :mod:`critwalk.walks` that don't fit into a
    standard exception class like :exc:`ValueError`.
    """
    pass


class WalksUserWarning(aue.AstropyUserWarning):
    """Class for warnings issued by :mod:`critwalk.walks`.
    """
    pass


__all__ = ['WalksException', 'WalksUserWarning']
