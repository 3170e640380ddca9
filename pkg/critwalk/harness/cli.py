# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Command-line interface.

Generators write plot-ready CSV files; ``verify`` runs experiments and
writes one JSON report per experiment.  The exit code is nonzero if any
criterion fails.
"""
import os
import numpy as np
from . import ConfigError
from .config import ExperimentConfig, DEFAULTS
from .experiments import CRITERIA, run_experiment


def run(config):
    """Run an experiment and write its report and raw data.

    Parameters
    ----------
    config : :class:`~critwalk.harness.config.ExperimentConfig`
        The experiment.

    Returns
    -------
    :class:`~critwalk.harness.report.StatReport`
        The report, also written to ``<output>/<experiment_id>.json``.
    """
    if not os.path.isdir(config.output):
        os.makedirs(config.output)
    report = run_experiment(config)
    report.write_tables(config.output)
    report.write(os.path.join(config.output, '{0}.json'.format(config.experiment_id)))
    return report


def _experiment_names(name):
    """Expand ``all``, a bare number or a name into experiment names.
    """
    if name == 'all':
        return list(CRITERIA)
    if name.isdigit():
        name = 'criterion-{0}'.format(name)
    if name not in DEFAULTS:
        raise KeyError('No experiment named {0}.'.format(name))
    return [name]


def _configs(options):
    """Experiment configurations selected by the ``verify`` options.
    """
    overrides = dict()
    if options.seed is not None:
        overrides['base_seed'] = options.seed
    if options.replicates is not None:
        overrides['replicates'] = options.replicates
    if options.threads is not None:
        overrides['threads'] = options.threads
    overrides['output'] = options.out
    if options.config is not None:
        config = ExperimentConfig.from_file(options.config)
        if options.name is not None and _experiment_names(options.name) != [config.experiment_id]:
            raise ConfigError('{0} configures {1}, not {2}.'.format(options.config,
                                                                    config.experiment_id,
                                                                    options.name))
        return [config.replace(**overrides)]
    if options.name is None:
        raise ConfigError('Name an experiment or supply --config.')
    return [ExperimentConfig.default(name, **overrides)
            for name in _experiment_names(options.name)]


def _rng(options):
    from ..rng import get_rng
    return get_rng(options.seed)


def _output(options, name):
    if not os.path.isdir(options.out):
        os.makedirs(options.out)
    return os.path.join(options.out, name)


def _gen_tree(options):
    from ..percolation.cluster import PercolationParams, sample_cluster
    from ..percolation.conditioned import conditioned_galton_watson, sample_conditioned_cluster
    from ..trees.searchdepth import search_depth
    rng = _rng(options)
    if options.law == 'cluster':
        tree = sample_cluster(PercolationParams(options.p, options.substrate), rng)
    elif options.law == 'conditioned':
        tree = sample_conditioned_cluster(options.size, rng)
    else:
        tree = conditioned_galton_watson(options.size, options.law, rng)
    tree.write(_output(options, 'tree.csv'))
    search_depth(tree).write(_output(options, 'search_depth.csv'))


def _iic(options):
    from ..export import write_columns
    from ..percolation.iic import build_iic
    iic = build_iic(options.backbone, _rng(options))
    iic.tree.write(_output(options, 'iic.csv'))
    write_columns(_output(options, 'iic_projection.csv'), ['vertex', 'backboneIndex'],
                  [np.arange(iic.tree.vertex_count), iic.projection])


def _ipc(options):
    from ..export import write_columns
    from ..percolation.ipc import invade
    instance = invade(options.size, _rng(options))
    instance.write(_output(options, 'ipc.csv'))
    backbone = instance.backbone_estimate
    write_columns(_output(options, 'ipc_backbone.csv'),
                  ['level', 'vertex', 'weight', 'forwardMax'],
                  [np.arange(backbone.depth + 1), backbone.path, backbone.weights,
                   backbone.forward_max])


def _envelope(options):
    from ..export import write_columns
    from ..percolation.envelope import sample_envelope
    intervals = sample_envelope(options.x_min, options.x_max, _rng(options)).intervals()
    write_columns(_output(options, 'envelope.csv'), ['start', 'end', 'level'],
                  [[i[k] for i in intervals] for k in range(3)])


def _walk(options):
    from ..percolation.conditioned import sample_conditioned_cluster
    from ..walks.walk import walk, local_time_root
    rng = _rng(options)
    tree = sample_conditioned_cluster(options.size, rng)
    path = walk(tree, options.steps, rng)
    tree.write(_output(options, 'walk_tree.csv'))
    path.write(_output(options, 'walk.csv'))
    local_time_root(path).write(_output(options, 'local_time.csv'))


def _rtrw(options):
    from ..percolation.iic import IICInstance
    from ..percolation.ipc import structural_ipc_branches
    from ..walks.rtrw import IICLandscape, rtrw
    rng = _rng(options)
    if options.landscape == 'iic':
        landscape = IICLandscape(seed=rng)
    else:
        branches = structural_ipc_branches(options.backbone, rng)
        landscape = IICLandscape(iic=IICInstance(branches=branches))
    rtrw(landscape, options.horizon, rng, reflect=True).write(_output(options, 'rtrw.csv'))


def _ssbm(options):
    from ..continuum.localtime import CRTInverseLocalTime
    from ..continuum.ssbm import ssbm_simulate
    from ..processes.ppp import mu_iic
    rng = _rng(options)
    traps = mu_iic((0.0, options.length), options.mass_cut, rng)
    factory = CRTInverseLocalTime(options.local_time_size, rng)
    traps.write(_output(options, 'traps.csv'))
    path = ssbm_simulate(traps, factory, options.lattice_step, options.horizon, rng,
                         window=options.length)
    path.write(_output(options, 'ssbm.csv'))


def _kssbm(options):
    from ..continuum.localtime import CRTInverseLocalTime
    from ..continuum.mass import sample_reduced_crt
    from ..continuum.ssbm import k_ssbm_simulate
    rng = _rng(options)
    skeleton, masses = sample_reduced_crt(options.K, options.mass_size, rng)
    factory = CRTInverseLocalTime(options.local_time_size, rng)
    skeleton.write(_output(options, 'skeleton.csv'))
    masses.write(_output(options, 'masses.csv'))
    path = k_ssbm_simulate(skeleton, masses, factory, options.lattice_step, options.horizon, rng)
    path.write(_output(options, 'kssbm.csv'))


def _verify(options):
    from astropy import log
    failed = []
    for config in _configs(options):
        report = run(config)
        if not report.passed:
            failed.append(config.experiment_id)
    if failed:
        log.info("Failed: {0}.".format(', '.join(failed)))
        return 1
    return 0


def main(args=None):
    """Entry point for the ``critwalk`` command.

    Parameters
    ----------
    args : :class:`list`, optional
        Command-line arguments; :data:`sys.argv` by default.

    Returns
    -------
    :class:`int`
        Exit status: 1 if a criterion failed, 2 on a configuration error.
    """
    from argparse import ArgumentParser
    from astropy import log
    common = ArgumentParser(add_help=False)
    common.add_argument('--seed', action='store', dest='seed', metavar='N', type=int,
                        help='Base seed.')
    common.add_argument('--config', action='store', dest='config', metavar='FILE',
                        help='Read the experiment configuration from FILE.')
    common.add_argument('--out', action='store', dest='out', metavar='DIR', default='.',
                        help='Write output files to DIR (default: %(default)s).')
    common.add_argument('--replicates', action='store', dest='replicates', metavar='N',
                        type=int, help='Override the number of replicates.')
    common.add_argument('--threads', action='store', dest='threads', metavar='N', type=int,
                        help='Run replicates in N worker processes.')
    common.add_argument('-v', '--verbose', action='store_true', dest='verbose',
                        help='Print lots of extra information.')
    parser = ArgumentParser(description='Simulate and verify random walks on critical trees.')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True
    p = sub.add_parser('gen-tree', parents=[common], help='Sample a tree.')
    p.add_argument('-n', '--size', action='store', dest='size', type=int, default=100,
                   help='Number of vertices of a conditioned tree (default: %(default)s).')
    p.add_argument('-l', '--law', action='store', dest='law', default='conditioned',
                   choices=['cluster', 'conditioned', 'binomial', 'poisson'],
                   help='Tree law (default: %(default)s).')
    p.add_argument('-p', action='store', dest='p', type=float, default=0.5,
                   help='Percolation parameter of a cluster (default: %(default)s).')
    p.add_argument('--substrate', action='store', dest='substrate', default='TStar',
                   choices=['T', 'TStar'], help='Substrate of a cluster (default: %(default)s).')
    p.set_defaults(func=_gen_tree)
    p = sub.add_parser('iic', parents=[common], help='Sample a truncated IIC.')
    p.add_argument('-K', '--backbone', action='store', dest='backbone', type=int, default=100,
                   help='Backbone length (default: %(default)s).')
    p.set_defaults(func=_iic)
    p = sub.add_parser('ipc', parents=[common], help='Grow an invasion cluster.')
    p.add_argument('-n', '--size', action='store', dest='size', type=int, default=10000,
                   help='Number of invaded vertices (default: %(default)s).')
    p.set_defaults(func=_ipc)
    p = sub.add_parser('envelope', parents=[common], help='Sample the lower envelope.')
    p.add_argument('--x-min', action='store', dest='x_min', type=float, default=0.01,
                   help='Start of the domain (default: %(default)s).')
    p.add_argument('--x-max', action='store', dest='x_max', type=float, default=1.0,
                   help='End of the domain (default: %(default)s).')
    p.set_defaults(func=_envelope)
    p = sub.add_parser('walk', parents=[common], help='Walk on a conditioned cluster.')
    p.add_argument('-n', '--size', action='store', dest='size', type=int, default=1000,
                   help='Number of vertices (default: %(default)s).')
    p.add_argument('-t', '--steps', action='store', dest='steps', type=int, default=10000,
                   help='Number of steps (default: %(default)s).')
    p.set_defaults(func=_walk)
    p = sub.add_parser('rtrw', parents=[common], help='Randomly trapped walk on the backbone.')
    p.add_argument('--landscape', action='store', dest='landscape', default='iic',
                   choices=['iic', 'ipc'], help='Trapping landscape (default: %(default)s).')
    p.add_argument('-K', '--backbone', action='store', dest='backbone', type=int, default=1000,
                   help='Backbone length of the IPC landscape (default: %(default)s).')
    p.add_argument('--horizon', action='store', dest='horizon', type=float, default=1.0e5,
                   help='Time horizon (default: %(default)s).')
    p.set_defaults(func=_rtrw)
    for name, func, text in (('ssbm', _ssbm, 'SSBM on the half-line with IIC traps.'),
                             ('kssbm', _kssbm, 'SSBM on a line-breaking K-CRT.')):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument('--horizon', action='store', dest='horizon', type=float, default=1.0,
                       help='Brownian time simulated (default: %(default)s).')
        p.add_argument('--lattice-step', action='store', dest='lattice_step', type=float,
                       default=0.01, help='Lattice spacing (default: %(default)s).')
        p.add_argument('--local-time-size', action='store', dest='local_time_size', type=int,
                       default=1000,
                       help='Cluster size of the inverse local times (default: %(default)s).')
        if name == 'ssbm':
            p.add_argument('--length', action='store', dest='length', type=float, default=10.0,
                           help='Length of the trap window (default: %(default)s).')
            p.add_argument('--mass-cut', action='store', dest='mass_cut', type=float,
                           default=1.0e-4, help='Trap mass cut (default: %(default)s).')
        else:
            p.add_argument('-K', action='store', dest='K', type=int, default=2,
                           help='Number of leaves (default: %(default)s).')
            p.add_argument('--mass-size', action='store', dest='mass_size', type=int,
                           default=2000,
                           help='Uniform tree size of the branch masses (default: %(default)s).')
        p.set_defaults(func=func)
    p = sub.add_parser('verify', parents=[common], help='Run acceptance criteria.')
    p.add_argument('name', metavar='CRITERION', nargs='?',
                   help="Criterion number, experiment name or 'all'.")
    p.set_defaults(func=_verify)
    options = parser.parse_args(args)
    if options.verbose:
        log.setLevel('DEBUG')
    try:
        status = options.func(options)
    except (ConfigError, KeyError) as e:
        log.error(str(e))
        return 2
    return 0 if status is None else status
