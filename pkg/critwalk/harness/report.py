# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Statistical reports.
"""
import json
import numpy as np
from . import HarnessException

KINDS = ('stderr', 'ks', 'exact')


class StatReport(object):
    """Metrics and pass/fail results of one experiment.

    Every metric carries an uncertainty: a standard error (``'stderr'``),
    the asymptotic null scale ``sqrt((n + m)/(n m))`` of a KS distance
    (``'ks'``), or zero for values computed without sampling error
    (``'exact'``).

    Parameters
    ----------
    experiment_id : :class:`str`
        Name of the experiment.
    config_hash : :class:`str`
        Hash of the configuration that produced the report.
    base_seed : :class:`int`
        Run-level seed.
    """

    def __init__(self, experiment_id, config_hash, base_seed):
        self.experiment_id = experiment_id
        self.config_hash = config_hash
        self.base_seed = int(base_seed)
        self.metrics = dict()
        self.criteria = dict()
        self.tables = dict()
        self.files = []

    @classmethod
    def for_config(cls, config):
        """Empty report carrying the provenance of `config`.
        """
        return cls(config.experiment_id, config.config_hash(), config.base_seed)

    def add_metric(self, name, value, uncertainty, kind='stderr'):
        """Record a metric.

        Raises
        ------
        ValueError
            If the uncertainty is missing or negative, or `kind` is unknown.
        """
        if kind not in KINDS:
            raise ValueError('Unknown metric kind: {0}.'.format(kind))
        if uncertainty is None or not (float(uncertainty) >= 0):
            raise ValueError('Metric {0} needs a non-negative uncertainty.'.format(name))
        self.metrics[name] = {'value': float(value), 'uncertainty': float(uncertainty),
                              'kind': kind}

    def add_ks(self, name, distance, n, m):
        """Record a two-sample KS distance between samples of sizes `n` and `m`.
        """
        self.add_metric(name, distance, np.sqrt((n + m) / float(n * m)), 'ks')

    def add_criterion(self, name, passed, value, tolerance):
        """Record the outcome of a pre-registered check.

        Parameters
        ----------
        name : :class:`str`
            Name of the check.
        passed : :class:`bool`
            Outcome.
        value : :class:`float`
            The statistic compared with the tolerance.
        tolerance : :class:`float`
            The tolerance, as registered in the configuration.
        """
        if name in self.criteria:
            raise HarnessException('Criterion {0} recorded twice.'.format(name))
        self.criteria[name] = {'passed': bool(passed), 'value': float(value),
                               'tolerance': float(tolerance)}

    def add_table(self, name, names, columns):
        """Attach raw data, written as CSV next to the report.
        """
        if len(names) != len(columns):
            raise ValueError('Number of column names does not match number of columns.')
        self.tables[name] = (list(names), [np.asarray(c) for c in columns])

    @property
    def passed(self):
        """``True`` if every recorded criterion passed.
        """
        return all(c['passed'] for c in self.criteria.values())

    @property
    def failures(self):
        """Names of the failed criteria.
        """
        return sorted(k for k, c in self.criteria.items() if not c['passed'])

    def to_dict(self):
        return {'experimentId': self.experiment_id,
                'provenance': {'configHash': self.config_hash, 'baseSeed': self.base_seed},
                'metrics': self.metrics,
                'criteria': self.criteria,
                'passed': self.passed,
                'files': sorted(self.files)}

    def write_tables(self, directory):
        """Write the attached tables as ``<experiment>_<name>.csv`` files.

        Returns
        -------
        :class:`list`
            The base names of the files written.
        """
        import os
        from ..export import write_columns
        for name in sorted(self.tables):
            names, columns = self.tables[name]
            base = '{0}_{1}.csv'.format(self.experiment_id, name)
            write_columns(os.path.join(directory, base), names, columns)
            if base not in self.files:
                self.files.append(base)
        return sorted(self.files)

    def write(self, filename):
        """Write the report as JSON.

        Keys are sorted and no timestamps are recorded, so identical runs
        give identical files.
        """
        from astropy import log
        with open(filename, 'w') as f:
            json.dump(self.to_dict(), f, sort_keys=True, indent=2)
            f.write('\n')
        log.info("Wrote {0}.".format(filename))
        return filename

    def __repr__(self):
        return "StatReport(experiment_id='{0}', metrics={1:d}, criteria={2:d})".format(
            self.experiment_id, len(self.metrics), len(self.criteria))
