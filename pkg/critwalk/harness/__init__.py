# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""
This subpackage implements the statistics used to check simulated laws,
experiment configuration files, statistical reports, the acceptance
experiments and the command-line interface.
"""
#
# Define this early on so that submodules can use it
#
from .. import CritwalkException
import astropy.utils.exceptions as aue


class HarnessException(CritwalkException):
    """Exceptions raised by :mod:`critwalk.harness` that don't fit into a
    standard exception class like :exc:`ValueError`.
    """
    pass


class ConfigError(HarnessException):
    """Raised for an invalid experiment configuration.
    """
    pass


class HarnessUserWarning(aue.AstropyUserWarning):
    """Class for warnings issued by :mod:`critwalk.harness`.
    """
    pass


__all__ = ['HarnessException', 'ConfigError', 'HarnessUserWarning']
