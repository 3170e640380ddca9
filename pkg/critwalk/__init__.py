# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""
========
critwalk
========

Simulation and verification tools for random walks on critical random trees.
The package samples critical and conditioned percolation clusters on the
binary tree, the incipient infinite cluster (IIC) and the invasion
percolation cluster (IPC), random walks on those trees and their projections
onto the backbone, trap point processes and subordinators, spatially
subordinated Brownian motions and continuum random tree constructions, and
checks the associated formulas and scaling exponents statistically.
"""
from astropy import config as _config

try:
    from importlib.metadata import version as _version, PackageNotFoundError
    try:
        __version__ = _version('critwalk')
    except PackageNotFoundError:
        __version__ = 'dev'
except ImportError:
    __version__ = 'dev'


class CritwalkException(Exception):
    """Base class for exceptions raised in critwalk functions.
    """
    pass


class Conf(_config.ConfigNamespace):
    """Configuration parameters for :mod:`critwalk`.
    """
    cluster_cap = _config.ConfigItem(
        10000000,
        'Default vertex cap applied when sampling percolation clusters.',
        cfgtype='integer')
    mass_cut = _config.ConfigItem(
        1.0e-4,
        'Default mass below which atoms of trap point processes are dropped.',
        cfgtype='float')
    batch_count = _config.ConfigItem(
        30,
        'Number of batches used for batch-means standard errors.',
        cfgtype='integer')
    ks_permutations = _config.ConfigItem(
        2000,
        'Number of permutations for the small-sample two-sample KS null.',
        cfgtype='integer')
    tail_fraction = _config.ConfigItem(
        0.1,
        'Fraction of the largest order statistics used by the Hill estimator.',
        cfgtype='float')
    min_tail_samples = _config.ConfigItem(
        10000,
        'Minimum number of samples accepted by tail_index_fit.',
        cfgtype='integer')


conf = Conf()

__all__ = ['CritwalkException', 'Conf', 'conf', '__version__']
