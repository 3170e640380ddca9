# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Experiment configurations.

A configuration is a JSON object with a ``schema_version`` field.  Keys
missing from a file are taken from the defaults registered for its
``experiment_id``; the registered defaults are the full-scale acceptance
sizes.
"""
import copy
import hashlib
import json
from . import ConfigError
from ..rng import get_rng, replicate_key

SCHEMA_VERSION = 1

#
# Time grid of the displacement-exponent criteria.
#
_DISPLACEMENT = {'t_min': 1000, 't_max': 1000000, 'points': 13}

DEFAULTS = {
    'criterion-1': {'replicates': 10, 'sizes': [100000],
                    'lambdas': [0.1, 0.5, 1.0, 2.0],
                    'parameters': {'p': [0.3, 0.5]},
                    'tolerances': {'se': 3.0}},
    'criterion-2': {'replicates': 100, 'sizes': [100000],
                    'parameters': {'u': [100, 1000]},
                    'tolerances': {'relative': 0.15, 'tail_index': 0.05}},
    'criterion-3': {'replicates': 100, 'sizes': [1000],
                    'parameters': {'samples': 1000},
                    'tolerances': {'exact': 1e-9, 'se': 3.0}},
    'criterion-4': {'replicates': 10, 'sizes': [50], 'lambdas': [0.1, 1.0],
                    'parameters': {'samples': 20000},
                    'tolerances': {'se': 3.0}},
    'criterion-5': {'replicates': 1000,
                    'parameters': dict(_DISPLACEMENT, backbone=1000, cached=False),
                    'tolerances': {'exponent': 0.05}},
    'criterion-6': {'replicates': 1000, 'parameters': dict(_DISPLACEMENT),
                    'tolerances': {'exponent': 0.03}},
    'criterion-7': {'replicates': 1000, 'sizes': [1000000],
                    'epsilons': [0.01, 0.005, 0.0025], 'lambdas': [1.0],
                    'parameters': {'envelope_draws': 1000000, 't': [0.5, 1.0],
                                   'trim': 0.5, 'volume_runs': 1000},
                    'tolerances': {'se': 3.0, 'ks': 0.05, 'trim_shift': 0.02}},
    'criterion-8': {'replicates': 10, 'sizes': [10000], 'lambdas': [0.1, 1.0],
                    'parameters': {'delta': [0.5, 1.0, 2.0], 'gamma': [0.5, 1.0, 2.0],
                                   'x_min': 0.1, 'h_min': 1e-3},
                    'tolerances': {'se': 3.0}},
    'criterion-9': {'replicates': 10, 'sizes': [1000], 'lambdas': [0.1, 1.0, 10.0],
                    'parameters': {'h_min': 1e-4},
                    'tolerances': {'se': 3.0}},
    'criterion-10': {'replicates': 10000, 'sizes': [10000],
                     'tolerances': {'failures': 0}},
    'criterion-11': {'replicates': 10000, 'sizes': [1000, 2000, 4000, 8000]},
    'criterion-12': {'replicates': 200, 'epsilons': [0.2, 0.1, 0.05, 0.025],
                     'lambdas': [0.0, 0.5, 1.0, 2.0, 4.0],
                     'parameters': {'samples': 50},
                     'tolerances': {'se': 3.0}},
    'criterion-13': {'replicates': 10000, 'sizes': [100000],
                     'parameters': {'K': 2, 'grid_size': 10000, 'projection_runs': 1000,
                                    't': 1.0, 'lattice_step': 0.02, 'mass_size': 2000,
                                    'local_time_size': 1000},
                     'tolerances': {'ks': 0.05, 'projection_ks': 0.07}},
    'assumption-L': {'replicates': 200, 'epsilons': [0.2, 0.1, 0.05, 0.025],
                     'lambdas': [0.0, 0.5, 1.0, 2.0, 4.0],
                     'parameters': {'samples': 50},
                     'tolerances': {'se': 3.0}},
    'ipc-envelope': {'replicates': 1000, 'sizes': [250000, 1000000],
                     'epsilons': [0.01, 0.005], 'lambdas': [1.0],
                     'parameters': {'t': [0.5, 1.0], 'trim': 0.5, 'volume_runs': 1000},
                     'tolerances': {'se': 3.0, 'ks': 0.05, 'trim_shift': 0.02}},
    'k-projection': {'replicates': 1000, 'sizes': [25000, 50000, 100000],
                     'parameters': {'K': 1, 't': 1.0, 'lattice_step': 0.02,
                                    'mass_size': 2000, 'local_time_size': 1000},
                     'tolerances': {'projection_ks': 0.07}},
}


def _int(value, low=None):
    if isinstance(value, bool) or int(value) != value:
        raise ValueError('not an integer')
    value = int(value)
    if low is not None and value < low:
        raise ValueError('must be at least {0:d}'.format(low))
    return value


def _grid(convert):
    def grid(value):
        values = [convert(v) for v in value]
        if len(values) == 0:
            raise ValueError('the grid is empty')
        return values
    return grid


def _positive_int(value):
    return _int(value, 1)


def _epsilon(value):
    value = float(value)
    if not (0 < value < 1):
        raise ValueError('must lie in (0, 1)')
    return value


def _lambda(value):
    value = float(value)
    if value < 0:
        raise ValueError('must be non-negative')
    return value


def _positive(value):
    value = float(value)
    if value <= 0:
        raise ValueError('must be positive')
    return value


def _mapping(value):
    if not isinstance(value, dict):
        raise ValueError('not an object')
    return dict(value)


def _tolerances(value):
    return dict((str(k), float(v)) for k, v in _mapping(value).items())


CONVERTERS = {
    'schema_version': _int,
    'experiment_id': str,
    'base_seed': lambda v: _int(v, 0),
    'replicates': lambda v: _int(v, 1),
    'sizes': _grid(_positive_int),
    'epsilons': _grid(_epsilon),
    'lambdas': _grid(_lambda),
    'tolerances': _tolerances,
    'parameters': _mapping,
    'output': str,
    'offspring_variance': _positive,
    'threads': lambda v: _int(v, 1),
}


class ExperimentConfig(object):
    """Validated settings of one experiment.

    Parameters
    ----------
    experiment_id : :class:`str`
        Name of the experiment, for example ``'criterion-1'``.
    base_seed : :class:`int`, optional
        Run-level seed.
    replicates : :class:`int`, optional
        Number of independent replicates, at least 1.
    sizes, epsilons, lambdas : :class:`list`, optional
        Size, scale and Laplace-argument grids.  A grid that is given must
        not be empty.
    tolerances : :class:`dict`, optional
        Pre-registered tolerances by name.
    parameters : :class:`dict`, optional
        Further experiment settings.
    output : :class:`str`, optional
        Output directory.
    offspring_variance : :class:`float`, optional
        Offspring variance of the trees of the K-projection experiment.
    threads : :class:`int`, optional
        Number of worker processes.

    Raises
    ------
    ConfigError
        If a value fails validation; the message names the key.
    """

    def __init__(self, experiment_id, base_seed=0, replicates=1, sizes=None, epsilons=None,
                 lambdas=None, tolerances=None, parameters=None, output='.',
                 offspring_variance=1.0, threads=1):
        values = {'experiment_id': experiment_id, 'base_seed': base_seed,
                  'replicates': replicates, 'output': output,
                  'offspring_variance': offspring_variance, 'threads': threads,
                  'tolerances': {} if tolerances is None else tolerances,
                  'parameters': {} if parameters is None else parameters}
        for key, value in (('sizes', sizes), ('epsilons', epsilons), ('lambdas', lambdas)):
            if value is not None:
                values[key] = value
        for key, value in values.items():
            setattr(self, key, _convert(key, value))
        for key in ('sizes', 'epsilons', 'lambdas'):
            if key not in values:
                setattr(self, key, [])

    @classmethod
    def from_dict(cls, data):
        """Build a configuration, filling missing keys from :data:`DEFAULTS`.
        """
        if not isinstance(data, dict):
            raise ConfigError('A configuration must be a JSON object.')
        data = dict(data)
        version = _convert('schema_version', data.pop('schema_version', SCHEMA_VERSION))
        if version != SCHEMA_VERSION:
            raise ConfigError('Unsupported schema_version {0:d}.'.format(version))
        if 'experiment_id' not in data:
            raise ConfigError('Missing key: experiment_id.')
        unknown = sorted(set(data) - set(CONVERTERS))
        if unknown:
            raise ConfigError('Unknown key: {0}.'.format(unknown[0]))
        merged = copy.deepcopy(DEFAULTS.get(data['experiment_id'], {}))
        for key in ('tolerances', 'parameters'):
            if key in data and key in merged:
                merged[key].update(_convert(key, data.pop(key)))
        merged.update(data)
        return cls(**merged)

    @classmethod
    def from_file(cls, filename):
        """Read a JSON configuration file.
        """
        with open(filename) as f:
            try:
                data = json.load(f)
            except ValueError as e:
                raise ConfigError('{0} is not valid JSON: {1}.'.format(filename, e))
        return cls.from_dict(data)

    @classmethod
    def default(cls, experiment_id, **overrides):
        """Registered defaults of `experiment_id`, with `overrides`.

        Raises
        ------
        KeyError
            If no defaults are registered for `experiment_id`.
        """
        if experiment_id not in DEFAULTS:
            raise KeyError('No experiment named {0}.'.format(experiment_id))
        data = dict(overrides)
        data['experiment_id'] = experiment_id
        return cls.from_dict(data)

    def to_dict(self):
        """The configuration as a JSON-compatible dictionary.
        """
        d = {'schema_version': SCHEMA_VERSION}
        for key in CONVERTERS:
            if key == 'schema_version':
                continue
            value = getattr(self, key)
            if key in ('sizes', 'epsilons', 'lambdas') and len(value) == 0:
                continue
            d[key] = copy.deepcopy(value)
        return d

    def config_hash(self):
        """SHA-256 of the canonical JSON form.

        The output directory and the thread count do not change results
        and are left out.
        """
        d = self.to_dict()
        del d['output']
        del d['threads']
        text = json.dumps(d, sort_keys=True, separators=(',', ':'))
        return hashlib.sha256(text.encode('utf-8')).hexdigest()

    def replace(self, **changes):
        """Copy of the configuration with some keys changed.
        """
        d = self.to_dict()
        d.update(changes)
        return ExperimentConfig.from_dict(d)

    def parameter(self, name):
        """Value of an entry of :attr:`parameters`.
        """
        try:
            return self.parameters[name]
        except KeyError:
            raise ConfigError('{0} needs the parameter {1}.'.format(self.experiment_id, name))

    def tolerance(self, name):
        """Value of a pre-registered tolerance.
        """
        try:
            return self.tolerances[name]
        except KeyError:
            raise ConfigError('{0} needs the tolerance {1}.'.format(self.experiment_id, name))

    def key(self, *labels):
        """Seed key of the stream labelled by `labels`.

        Replicate ``i`` uses ``key(0, i)``; other streams of the experiment
        use other leading labels.
        """
        return replicate_key(self.base_seed, self.experiment_id, labels[0]) + \
            [int(l) for l in labels[1:]]

    def rng(self, index):
        """Generator of replicate `index`.
        """
        return get_rng(self.key(0, index))

    def __repr__(self):
        return "ExperimentConfig(experiment_id='{0}', replicates={1:d})".format(
            self.experiment_id, self.replicates)


def _convert(key, value):
    try:
        return CONVERTERS[key](value)
    except (TypeError, ValueError) as e:
        raise ConfigError('Invalid value for {0}: {1}.'.format(key, e))
