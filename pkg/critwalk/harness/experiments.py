# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Statistical experiments and the numbered acceptance criteria.

Every experiment draws its replicates from streams keyed by the base seed,
the experiment name and the replicate index, so results do not depend on
the number of worker processes.  Aggregation always follows replicate
order.
"""
import warnings
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
import numpy as np
from scipy.stats import expon
from . import ConfigError, HarnessException
from .report import StatReport
from .stats import (batch_means_stderr, tail_index_fit, ks_two_sample, ks_one_sample,
                    running_maxima, maxima_exponent)
from ..rng import get_rng, spawn_key

#
# Offspring law of the trees of the K-projection experiment, by variance.
#
OFFSPRING_VARIANCE = {1.0: 'poisson', 0.5: 'binomial'}


def _call(worker, key, args):
    return worker(get_rng(key), *args)


def fan_out(worker, keys, args=(), threads=1):
    """Run ``worker(rng, *args)`` once per seed key.

    Parameters
    ----------
    worker : callable
        A module-level function, so that it can be sent to worker processes.
    keys : iterable
        Seed keys, one per replicate.
    args : :class:`tuple`, optional
        Further arguments of `worker`.
    threads : :class:`int`, optional
        Number of worker processes; 1 runs everything in this process.

    Returns
    -------
    :class:`list`
        Results in the order of `keys`.
    """
    keys = list(keys)
    if threads > 1 and len(keys) > 1:
        with ProcessPoolExecutor(max_workers=threads) as executor:
            return list(executor.map(_call, repeat(worker), keys, repeat(args)))
    return [_call(worker, k, args) for k in keys]


def _replicates(worker, config, *args):
    keys = [config.key(0, i) for i in range(config.replicates)]
    return fan_out(worker, keys, args, config.threads)


def _binomial_stderr(p, n):
    return np.sqrt(max(p * (1.0 - p), 0.0) / n)


def _pooled_z(differences, stderrs):
    """``|sum(differences)| / sqrt(sum(stderrs**2))``, 0 if both vanish.
    """
    total = float(np.sum(differences))
    scale = float(np.sqrt(np.sum(np.square(stderrs))))
    if scale == 0:
        return 0.0 if total == 0 else np.inf
    return abs(total) / scale


#
# Workers.  Each takes a generator first and returns plain numbers or arrays.
#
def _sigma_tilde_worker(rng, d, samples):
    from ..percolation.conditioned import sample_conditioned_cluster
    from ..walks.exit import sample_sigma_tilde
    return sample_sigma_tilde(sample_conditioned_cluster(d, rng), rng, size=samples)


def _backbone_worker(rng, N, t_values, trim):
    from ..percolation.ipc import invade, estimate_backbone
    instance = invade(N, rng)
    out = []
    for fraction in (trim, 0.5 * trim):
        backbone = estimate_backbone(instance, fraction)
        out.append([backbone.statistic(t) for t in t_values] + [backbone.depth])
    return out


def _volume_worker(rng, k_max):
    from ..percolation import PercolationUserWarning
    from ..percolation.ipc import ipc_branch_sizes
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', PercolationUserWarning)
        return float(ipc_branch_sizes(k_max, rng).sum())


def _projected_worker(rng, n, K, t, offspring, variance):
    from ..percolation.conditioned import conditioned_galton_watson
    from ..trees.reduced import reduce
    from ..walks.walk import walk, project_walk
    tree = conditioned_galton_watson(n, offspring, rng)
    anchors = rng.choice(np.arange(1, n), size=K, replace=False)
    index = reduce(tree, anchors)
    sigma = np.sqrt(variance)
    steps = int(np.rint(t * n**1.5 / sigma))
    path = walk(tree, steps, rng)
    v = project_walk(path, index)[-1]
    return sigma * tree.depth[v] / np.sqrt(n)


def _kssbm_worker(rng, K, t, lattice_step, mass_size, local_time_size, attempts=5):
    from ..continuum import HorizonExceeded
    from ..continuum.localtime import CRTInverseLocalTime
    from ..continuum.mass import sample_reduced_crt
    from ..continuum.ssbm import k_ssbm_simulate
    skeleton, masses = sample_reduced_crt(K, mass_size, rng)
    factory = CRTInverseLocalTime(local_time_size, rng)
    horizon = 3.0 * t * skeleton.total_length
    for attempt in range(attempts):
        try:
            path = k_ssbm_simulate(skeleton, masses, factory, lattice_step, horizon, rng,
                                   times=[t])
        except HorizonExceeded:
            horizon *= 2.0
            continue
        return float(path.positions[0])
    raise HarnessException('The K-SSBM clock did not reach {0:g}.'.format(t))


def _cluster_size_worker(rng, ps, size):
    from ..percolation import PercolationUserWarning
    from ..percolation.cluster import sample_cluster_sizes
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', PercolationUserWarning)
        return [sample_cluster_sizes(p, size, 'TStar', rng) for p in ps]


def _exit_worker(rng, max_size, samples):
    from ..percolation.conditioned import sample_conditioned_cluster
    from ..walks.exit import expected_exit_time_exact, sample_sigma_tilde
    n = int(rng.integers(1, max_size + 1))
    tree = sample_conditioned_cluster(n, rng)
    s = sample_sigma_tilde(tree, rng, size=samples)
    return n, expected_exit_time_exact(tree), float(s.mean()), batch_means_stderr(s)


def _geometric_worker(rng, max_size, samples, lam):
    from ..percolation.conditioned import sample_conditioned_cluster
    from ..processes.laplace import empirical_laplace
    from ..walks.exit import sample_sigma, sample_sigma_tilde, exit_laplace_from_return
    n = int(rng.integers(2, max_size + 1))
    tree = sample_conditioned_cluster(n, rng)
    d = float(tree.degree[0])
    nu = empirical_laplace(sample_sigma(tree, rng, size=samples), lam)
    nu_tilde = empirical_laplace(sample_sigma_tilde(tree, rng, size=samples), lam)
    predicted = exit_laplace_from_return(nu.value, nu.lam, d)
    slope = np.exp(-nu.lam) * 2.0 * d / (d + 2.0 - d * nu.value)**2
    stderr = np.sqrt(nu_tilde.stderr**2 + (slope * nu.stderr)**2)
    return nu_tilde.value - predicted, stderr


def _iic_walk_worker(rng, t_grid, cached):
    from ..walks.rtrw import IICLandscape, rtrw
    landscape = IICLandscape(seed=rng, cached=cached)
    return running_maxima(rtrw(landscape, t_grid[-1], rng, reflect=True), t_grid)


def _ipc_walk_worker(rng, t_grid, backbone, cached):
    from ..percolation.iic import IICInstance
    from ..percolation.ipc import structural_ipc_branches
    from ..walks.rtrw import IICLandscape, rtrw
    branches = structural_ipc_branches(backbone, rng)
    landscape = IICLandscape(iic=IICInstance(branches=branches), cached=cached)
    return running_maxima(rtrw(landscape, t_grid[-1], rng, reflect=True), t_grid)


def _simple_walk_worker(rng, t_grid):
    steps = 2 * rng.integers(0, 2, size=int(t_grid[-1]), dtype=np.int8) - 1
    x = np.concatenate(([0], np.cumsum(steps, dtype=np.int64)))
    return running_maxima(x, t_grid)


def _envelope_worker(rng, count):
    from ..percolation.envelope import sample_envelope
    return np.array([sample_envelope(1.0, 2.0, rng)(1.0) for k in range(count)])


def _ig_worker(rng, deltas, gammas, size):
    from ..processes.subordinator import sample_inverse_gaussian_path
    out = np.empty((len(deltas), len(gammas), size))
    for a, delta in enumerate(deltas):
        for b, gamma in enumerate(gammas):
            for k in range(size):
                path = sample_inverse_gaussian_path(delta, gamma, 1.0, seed=rng, cells=1)
                out[a, b, k] = path(1.0)
    return out


def _mu_ipc_worker(rng, envelope, h_min, size):
    from ..processes.subordinator import mu_ipc
    return np.array([mu_ipc(envelope, rng, h_min).total_mass for k in range(size)])


def _atom_count_worker(rng, h_min, size):
    from ..processes.ppp import mu_iic
    return np.array([mu_iic((0.0, 1.0), h_min, rng).size for k in range(size)])


def _codec_worker(rng, max_size):
    from ..percolation.conditioned import sample_uniform_tree
    from ..trees.searchdepth import search_depth, tree_from_search_depth
    tree = sample_uniform_tree(int(rng.integers(1, max_size + 1)), rng)
    return int(tree_from_search_depth(search_depth(tree)) != tree)


def _local_time_worker(rng, n):
    from ..percolation.conditioned import sample_conditioned_cluster
    from ..walks.walk import walk, local_time_root
    tree = sample_conditioned_cluster(n, rng)
    steps = int(np.floor(n**1.5))
    return local_time_root(walk(tree, steps, rng))(steps) / np.sqrt(n)


def _length_worker(rng, K, grid_size):
    from ..continuum.excursion import sample_excursion
    from ..continuum.skeleton import line_breaking, reduced_tree_from_excursion
    a = line_breaking(K, rng).total_length
    w = sample_excursion(grid_size, rng)
    b = reduced_tree_from_excursion(w, K, rng, scale=2.0).total_length
    return a, b


#
# Experiments.
#
def assumption_L_statistic(epsilons, lambdas, seed=None, trees=100, samples=50, threads=1):
    """Stabilization of ``Psi_epsilon`` for exit times of critical branches.

    For every ``epsilon``, `trees` critical clusters conditioned on
    ``d(epsilon)`` vertices are drawn, `samples` exit times are drawn on
    each, and ``Psi_epsilon`` of the pooled sample is estimated.

    Parameters
    ----------
    epsilons : array-like
        Strictly decreasing scales in ``(0, 1)``.
    lambdas : array-like
        Laplace arguments.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    trees, samples : :class:`int`, optional
        Trees per scale and exit times per tree.
    threads : :class:`int`, optional
        Number of worker processes.

    Returns
    -------
    :class:`dict`
        ``'sizes'``: ``d(epsilon)``; ``'curves'``: one
        :class:`~critwalk.processes.laplace.LaplaceCurve` per scale;
        ``'gaps'`` and ``'gap_stderr'``: sup-norm distance between the
        curves of successive scales and its standard error.
    """
    from ..percolation.cluster import scales
    from ..processes.laplace import psi_epsilon
    eps = np.asarray(epsilons, dtype=np.float64)
    if eps.size < 2 or (np.diff(eps) >= 0).any():
        raise ValueError('At least two strictly decreasing scales are required.')
    key = spawn_key(get_rng(seed))
    sizes = []
    curves = []
    for i, e in enumerate(eps.tolist()):
        d = max(1, int(np.rint(scales(e)[0])))
        draws = fan_out(_sigma_tilde_worker, [key + [i, j] for j in range(trees)],
                        (d, samples), threads)
        sizes.append(d)
        curves.append(psi_epsilon(np.concatenate(draws), e, lambdas))
    gaps = np.array([np.abs(a.value - b.value).max() for a, b in zip(curves[:-1], curves[1:])])
    gap_stderr = np.array([np.sqrt((a.stderr**2 + b.stderr**2).max())
                           for a, b in zip(curves[:-1], curves[1:])])
    return {'sizes': sizes, 'curves': curves, 'gaps': gaps, 'gap_stderr': gap_stderr}


def ipc_envelope_experiment(sizes, seed=None, runs=100, t_values=(0.5, 1.0), trim=0.5,
                            epsilons=(), lambdas=(1.0,), volume_runs=100, threads=1):
    """Backbone statistics and rescaled volumes of invasion clusters.

    For every size `N`, `runs` clusters of `N` invaded vertices are grown.
    On each, the statistic ``k (2 M[ceil(k t)] - 1)`` of the estimated
    backbone is computed with kept fraction `trim` and ``trim / 2``, and
    compared with the exponential law of rate `t` by a KS test.  For every
    ``epsilon``, the rescaled volume ``epsilon**2 V`` of ``ceil(1/epsilon)``
    structural branches is drawn `volume_runs` times and its Laplace
    transform estimated.

    Parameters
    ----------
    sizes : array-like
        Increasing numbers of invaded vertices.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    runs : :class:`int`, optional
        Clusters per size.
    t_values : sequence, optional
        Values of `t` in ``(0, 1]``.
    trim : :class:`float`, optional
        Kept fraction of the backbone.
    epsilons : sequence, optional
        Decreasing scales of the volume check; skipped when empty.
    lambdas : sequence, optional
        Laplace arguments of the volume check.
    volume_runs : :class:`int`, optional
        Volume draws per scale.
    threads : :class:`int`, optional
        Number of worker processes.

    Returns
    -------
    :class:`dict`
        ``'ks'`` and ``'ks_trimmed'`` map ``(N, t)`` to ``(distance,
        pvalue)`` at kept fractions `trim` and ``trim / 2``; ``'depth'``
        maps `N` to the mean and standard error of the kept depth;
        ``'volume'`` holds one Laplace curve per scale.
    """
    from astropy import log
    from ..processes.laplace import empirical_laplace
    sizes = [int(N) for N in sizes]
    if len(sizes) == 0 or (np.diff(sizes) <= 0).any():
        raise ValueError('sizes must be a non-empty increasing grid.')
    key = spawn_key(get_rng(seed))
    result = {'ks': {}, 'ks_trimmed': {}, 'depth': {}, 'volume': [], 'runs': runs,
              'volume_runs': volume_runs}
    for i, N in enumerate(sizes):
        rows = np.array(fan_out(_backbone_worker, [key + [0, i, j] for j in range(runs)],
                                (N, list(t_values), trim), threads))
        for k, t in enumerate(t_values):
            law = expon(scale=1.0 / t).cdf
            result['ks'][(N, t)] = ks_one_sample(rows[:, 0, k], law)
            result['ks_trimmed'][(N, t)] = ks_one_sample(rows[:, 1, k], law)
        depth = rows[:, 0, -1]
        result['depth'][N] = (float(depth.mean()), batch_means_stderr(depth))
        log.debug("Invasion size {0:d}: mean kept depth {1:.1f}.".format(N, depth.mean()))
    for i, e in enumerate(epsilons):
        k_max = int(np.ceil(1.0 / e))
        volumes = fan_out(_volume_worker, [key + [1, i, j] for j in range(volume_runs)],
                          (k_max,), threads)
        result['volume'].append(empirical_laplace(e * e * np.array(volumes), lambdas))
    return result


def k_projection_experiment(sizes, K, seed=None, runs=100, t=1.0, offspring_variance=1.0,
                            lattice_step=0.02, mass_size=2000, local_time_size=1000,
                            threads=1):
    """Projected walks on large trees against the SSBM on the K-CRT.

    For every size `n` a Galton-Watson tree conditioned on `n` vertices is
    reduced to the root and `K` uniform vertices; a walk of
    ``t n**(3/2) / sigma`` steps is projected onto the reduced tree and its
    distance from the root is rescaled by ``sigma / sqrt(n)``.  The same
    distance at clock time `t` is sampled from
    :func:`~critwalk.continuum.ssbm.k_ssbm_simulate` on reduced
    uniform trees sampled jointly with their branch masses
    (:func:`~critwalk.continuum.mass.sample_reduced_crt`) and CRT inverse
    local times.

    Parameters
    ----------
    sizes : array-like
        Increasing tree sizes.
    K : :class:`int`
        Number of reduced-tree points, at least 1.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    runs : :class:`int`, optional
        Samples per size and of the continuum law.
    t : :class:`float`, optional
        Clock time.
    offspring_variance : :class:`float`, optional
        1 for Poisson(1) offspring (uniform trees), 0.5 for Binomial(2, 1/2).
    lattice_step, mass_size, local_time_size : optional
        Settings of the continuum sampler.
    threads : :class:`int`, optional
        Number of worker processes.

    Returns
    -------
    :class:`dict`
        ``'discrete'`` maps `n` to the rescaled positions; ``'continuum'``
        holds the continuum sample; ``'ks'`` maps `n` to the two-sample KS
        result against the continuum; ``'doubling'`` lists ``(n1, n2,
        distance, pvalue)`` for successive sizes.

    Raises
    ------
    ConfigError
        If no offspring law has the requested variance.
    """
    if K < 1:
        raise ValueError('K must be at least 1.')
    try:
        offspring = OFFSPRING_VARIANCE[float(offspring_variance)]
    except KeyError:
        raise ConfigError('No offspring law with variance {0:g}.'.format(offspring_variance))
    sizes = [int(n) for n in sizes]
    if len(sizes) == 0 or (np.diff(sizes) <= 0).any() or sizes[0] <= K:
        raise ValueError('sizes must be an increasing grid of trees larger than K.')
    key = spawn_key(get_rng(seed))
    discrete = dict()
    for i, n in enumerate(sizes):
        discrete[n] = np.array(fan_out(_projected_worker, [key + [0, i, j] for j in range(runs)],
                                       (n, K, t, offspring, float(offspring_variance)), threads))
    continuum = np.array(fan_out(_kssbm_worker, [key + [1, j] for j in range(runs)],
                                 (K, t, lattice_step, mass_size, local_time_size), threads))
    ks = dict((n, ks_two_sample(discrete[n], continuum, seed=key + [2, i]))
              for i, n in enumerate(sizes))
    doubling = [(a, b) + ks_two_sample(discrete[a], discrete[b], seed=key + [3, i])
                for i, (a, b) in enumerate(zip(sizes[:-1], sizes[1:]))]
    return {'discrete': discrete, 'continuum': continuum, 'ks': ks, 'doubling': doubling}


#
# Reports.
#
def _report_assumption_L(report, config, result):
    tol = config.tolerance('se')
    for e, d, curve in zip(config.epsilons, result['sizes'], result['curves']):
        for lam, v, s in zip(curve.lam, curve.value, curve.stderr):
            report.add_metric('psi[epsilon={0:g},d={1:d},lambda={2:g}]'.format(e, d, lam), v, s)
        atol = tol * float(curve.stderr.max())
        shaped = curve.is_exponent_shaped(atol)
        report.add_criterion('exponent_shape[epsilon={0:g}]'.format(e), shaped,
                             0.0 if shaped else 1.0, 0.0)
        if (curve.lam == 0).any():
            zero = float(np.abs(curve.value[curve.lam == 0]).max())
            report.add_criterion('lambda_zero[epsilon={0:g}]'.format(e), zero == 0, zero, 0.0)
    curves = result['curves']
    report.add_table('psi', ['lambda'] + ['epsilon{0:g}'.format(e) for e in config.epsilons],
                     [curves[0].lam] + [c.value for c in curves])
    gaps = result['gaps']
    for i, (g, s) in enumerate(zip(gaps, result['gap_stderr'])):
        report.add_metric('gap[{0:d}]'.format(i), g, s)
    worst = float(np.diff(gaps).max()) if gaps.size > 1 else -1.0
    report.add_criterion('gaps_decreasing', worst < 0, worst, 0.0)
    return report


def _report_ipc_envelope(report, config, result):
    sizes = sorted(result['depth'])
    largest = sizes[-1]
    runs = result['runs']
    for N in sizes:
        mean, stderr = result['depth'][N]
        report.add_metric('backbone_depth[N={0:d}]'.format(N), mean, stderr)
    for (N, t), (d, p) in sorted(result['ks'].items()):
        name = 'backbone_ks[N={0:d},t={1:g}]'.format(N, t)
        report.add_metric(name, d, np.sqrt(1.0 / runs), 'ks')
        shift = abs(d - result['ks_trimmed'][(N, t)][0])
        report.add_metric('trim_shift[N={0:d},t={1:g}]'.format(N, t), shift,
                          np.sqrt(2.0 / runs), 'ks')
        if N == largest:
            report.add_criterion(name, d < config.tolerance('ks'), d, config.tolerance('ks'))
            report.add_criterion('trim_shift[t={0:g}]'.format(t),
                                 shift < config.tolerance('trim_shift'), shift,
                                 config.tolerance('trim_shift'))
    curves = result['volume']
    for e, curve in zip(config.epsilons, curves):
        for lam, v, s in zip(curve.lam, curve.value, curve.stderr):
            report.add_metric('volume_laplace[epsilon={0:g},lambda={1:g}]'.format(e, lam), v, s)
    for i, (a, b) in enumerate(zip(curves[:-1], curves[1:])):
        with np.errstate(divide='ignore', invalid='ignore'):
            z = np.abs(a.value - b.value) / np.sqrt(a.stderr**2 + b.stderr**2)
        z = float(np.where(a.value == b.value, 0.0, z).max())
        report.add_criterion('volume_stability[{0:d}]'.format(i), z <= config.tolerance('se'),
                             z, config.tolerance('se'))
    return report


def _report_k_projection(report, config, result):
    continuum = result['continuum']
    sizes = sorted(result['discrete'])
    for n in sizes:
        x = result['discrete'][n]
        report.add_metric('projected_position[n={0:d}]'.format(n), x.mean(),
                          batch_means_stderr(x))
        report.add_ks('projection_ks[n={0:d}]'.format(n), result['ks'][n][0], x.size,
                      continuum.size)
    report.add_metric('kssbm_position', continuum.mean(), batch_means_stderr(continuum))
    for a, b, d, p in result['doubling']:
        report.add_ks('doubling_ks[n={0:d},{1:d}]'.format(a, b), d,
                      result['discrete'][a].size, result['discrete'][b].size)
    report.add_table('projection', ['discrete', 'continuum'],
                     [result['discrete'][sizes[-1]], continuum])
    d = result['ks'][sizes[-1]][0]
    tol = config.tolerance('projection_ks')
    report.add_criterion('projection_ks', d < tol, d, tol)
    return report


def assumption_L_report(config):
    result = assumption_L_statistic(config.epsilons, config.lambdas, config.key(1),
                                    config.replicates, config.parameter('samples'),
                                    config.threads)
    return _report_assumption_L(StatReport.for_config(config), config, result)


def ipc_envelope_report(config):
    result = _ipc_envelope(config)
    return _report_ipc_envelope(StatReport.for_config(config), config, result)


def k_projection_report(config):
    result = _k_projection(config, config.parameter('K'))
    return _report_k_projection(StatReport.for_config(config), config, result)


def _ipc_envelope(config):
    return ipc_envelope_experiment(config.sizes, config.key(2), config.replicates,
                                   config.parameter('t'), config.parameter('trim'),
                                   config.epsilons, config.lambdas,
                                   config.parameter('volume_runs'), config.threads)


def _k_projection(config, K, runs=None):
    if runs is None:
        runs = config.replicates
    return k_projection_experiment(config.sizes, K, config.key(2), runs,
                                   config.parameter('t'), config.offspring_variance,
                                   config.parameter('lattice_step'),
                                   config.parameter('mass_size'),
                                   config.parameter('local_time_size'), config.threads)


#
# Acceptance criteria.
#
def criterion_1(config):
    """Laplace transform of cluster sizes against the closed form.
    """
    from ..percolation.cluster import cluster_size_laplace
    from ..processes.laplace import empirical_laplace
    report = StatReport.for_config(config)
    ps = config.parameter('p')
    tol = config.tolerance('se')
    rows = _replicates(_cluster_size_worker, config, ps, config.sizes[0])
    for i, p in enumerate(ps):
        curve = empirical_laplace(np.concatenate([r[i] for r in rows]), config.lambdas)
        curve.reference = cluster_size_laplace(p, curve.lam)
        for lam, v, s, z in zip(curve.lam, curve.value, curve.stderr, curve.deviation()):
            name = 'cluster_laplace[p={0:g},lambda={1:g}]'.format(p, lam)
            report.add_metric(name, v, s)
            report.add_criterion(name, z <= tol, z, tol)
    return report


def criterion_2(config):
    """Tail constant and tail index of critical cluster sizes.
    """
    from .. import conf
    report = StatReport.for_config(config)
    x = np.concatenate(_replicates(_cluster_size_worker, config, [0.5], config.sizes[0]))
    n = x.size
    tol = config.tolerance('relative')
    for u in config.parameter('u'):
        pu = float((x > u).mean())
        value = np.sqrt(u) * pu
        name = 'tail_constant[u={0:g}]'.format(u)
        report.add_metric(name, value, np.sqrt(u) * _binomial_stderr(pu, n))
        relative = abs(value * np.sqrt(np.pi) - 1.0)
        report.add_criterion(name, relative <= tol, relative, tol)
    gamma, c, stderr, gamma_regression = tail_index_fit(x)
    k = max(2, int(conf.tail_fraction * n))
    log_threshold = np.log(c * n / k) / gamma
    report.add_metric('tail_index', gamma, stderr)
    report.add_metric('tail_index_regression', gamma_regression, stderr)
    report.add_metric('tail_constant_hill', c, c * abs(log_threshold) * stderr)
    tol = config.tolerance('tail_index')
    report.add_criterion('tail_index', abs(gamma - 0.5) <= tol, abs(gamma - 0.5), tol)
    return report


def criterion_3(config):
    """Mean exit times equal cluster sizes.
    """
    report = StatReport.for_config(config)
    rows = _replicates(_exit_worker, config, config.sizes[0], config.parameter('samples'))
    n, exact, mean, stderr = (np.array(c, dtype=np.float64) for c in zip(*rows))
    error = float(np.abs(exact / n - 1.0).max())
    report.add_metric('exit_time_exact_error', error, 0.0, 'exact')
    report.add_criterion('exit_time_exact', error <= config.tolerance('exact'), error,
                         config.tolerance('exact'))
    report.add_table('exit_times', ['size', 'exact', 'mean', 'stderr'],
                     [n, exact, mean, stderr])
    ratio = mean / n
    report.add_metric('exit_time_ratio', ratio.mean(),
                      np.sqrt(np.sum((stderr / n)**2)) / n.size)
    z = _pooled_z(mean - n, stderr)
    report.add_criterion('exit_time_monte_carlo', z <= config.tolerance('se'), z,
                         config.tolerance('se'))
    return report


def criterion_4(config):
    """Geometric-sum relation between the transforms of the exit and return times.
    """
    report = StatReport.for_config(config)
    lam = np.asarray(config.lambdas)
    rows = _replicates(_geometric_worker, config, config.sizes[0],
                       config.parameter('samples'), lam)
    gaps = np.array([r[0] for r in rows])
    stderr = np.array([r[1] for r in rows])
    tol = config.tolerance('se')
    for j, l in enumerate(lam):
        for i in range(len(rows)):
            report.add_metric('geometric_gap[tree={0:d},lambda={1:g}]'.format(i, l),
                              gaps[i, j], stderr[i, j])
        z = _pooled_z(gaps[:, j], stderr[:, j])
        report.add_criterion('geometric_relation[lambda={0:g}]'.format(l), z <= tol, z, tol)
    return report


def _displacement_grid(config):
    t = np.geomspace(config.parameter('t_min'), config.parameter('t_max'),
                     config.parameter('points'))
    return np.unique(np.rint(t))


def _exponent(report, config, name, maxima, t_grid, target):
    slope, stderr = maxima_exponent(maxima, t_grid)
    report.add_table(name, ['t', 'medianRunningMax'],
                     [t_grid, np.median(np.asarray(maxima, dtype=np.float64), axis=0)])
    report.add_metric(name, slope, stderr)
    tol = config.tolerance('exponent')
    report.add_criterion(name, abs(slope - target) <= tol, abs(slope - target), tol)


def criterion_5(config):
    """Subdiffusive exponent of the projected IIC and IPC walks.
    """
    report = StatReport.for_config(config)
    t_grid = _displacement_grid(config)
    cached = bool(config.parameter('cached'))
    _exponent(report, config, 'exponent_iic',
              _replicates(_iic_walk_worker, config, t_grid, cached), t_grid, 1.0 / 3.0)
    keys = [config.key(1, i) for i in range(config.replicates)]
    maxima = fan_out(_ipc_walk_worker, keys, (t_grid, config.parameter('backbone'), cached),
                     config.threads)
    _exponent(report, config, 'exponent_ipc', maxima, t_grid, 1.0 / 3.0)
    return report


def criterion_6(config):
    """Diffusive exponent of the simple random walk.
    """
    report = StatReport.for_config(config)
    t_grid = _displacement_grid(config)
    _exponent(report, config, 'exponent_simple_walk',
              _replicates(_simple_walk_worker, config, t_grid), t_grid, 0.5)
    return report


def criterion_7(config):
    """Envelope law and the IPC backbone statistic.
    """
    from .. import conf
    report = StatReport.for_config(config)
    draws = config.parameter('envelope_draws')
    chunks = min(draws, conf.batch_count)
    count = int(np.ceil(draws / float(chunks)))
    e = np.concatenate(fan_out(_envelope_worker, [config.key(1, j) for j in range(chunks)],
                               (count,), config.threads))
    p = float((e > 1.0).mean())
    stderr = _binomial_stderr(p, e.size)
    report.add_metric('envelope_survival', p, stderr)
    z = abs(p - np.exp(-1.0)) / stderr if stderr > 0 else np.inf
    report.add_criterion('envelope_survival', z <= config.tolerance('se'), z,
                         config.tolerance('se'))
    return _report_ipc_envelope(report, config, _ipc_envelope(config))


def criterion_8(config):
    """Inverse Gaussian increments and the IPC trap measure.
    """
    from ..percolation.envelope import sample_envelope
    from ..processes.laplace import empirical_laplace
    from ..processes.subordinator import ig_laplace_exponent, mu_ipc_laplace_exponent
    report = StatReport.for_config(config)
    tol = config.tolerance('se')
    deltas = config.parameter('delta')
    gammas = config.parameter('gamma')
    size = config.sizes[0]
    rows = np.concatenate(_replicates(_ig_worker, config, deltas, gammas, size), axis=2)
    for a, delta in enumerate(deltas):
        for b, gamma in enumerate(gammas):
            curve = empirical_laplace(rows[a, b], config.lambdas)
            curve.reference = np.exp(-ig_laplace_exponent(curve.lam, delta, gamma))
            for lam, v, s, z in zip(curve.lam, curve.value, curve.stderr, curve.deviation()):
                name = 'ig_laplace[delta={0:g},gamma={1:g},lambda={2:g}]'.format(delta, gamma,
                                                                               lam)
                report.add_metric(name, v, s)
                report.add_criterion(name, z <= tol, z, tol)
    h_min = config.parameter('h_min')
    envelope = sample_envelope(config.parameter('x_min'), 1.0, get_rng(config.key(1)))
    keys = [config.key(2, i) for i in range(config.replicates)]
    masses = np.concatenate(fan_out(_mu_ipc_worker, keys, (envelope, h_min, size),
                                    config.threads))
    curve = empirical_laplace(masses, config.lambdas)
    curve.reference = np.exp(-mu_ipc_laplace_exponent(envelope, curve.lam, h_min=h_min))
    for lam, v, s, z in zip(curve.lam, curve.value, curve.stderr, curve.deviation()):
        name = 'mu_ipc_laplace[lambda={0:g}]'.format(lam)
        report.add_metric(name, v, s)
        report.add_criterion(name, z <= tol, z, tol)
    return report


def criterion_9(config):
    """Atom counts and total mass of the stable trap field.
    """
    from ..processes.ppp import stable_tail_mass, stable_subordinator_marginal_check
    report = StatReport.for_config(config)
    tol = config.tolerance('se')
    h_min = config.parameter('h_min')
    counts = np.concatenate(_replicates(_atom_count_worker, config, h_min, config.sizes[0]))
    stderr = batch_means_stderr(counts)
    report.add_metric('atom_count', counts.mean(), stderr)
    z = _pooled_z([counts.mean() - stable_tail_mass(h_min)], [stderr])
    report.add_criterion('atom_count', z <= tol, z, tol)
    curve = stable_subordinator_marginal_check(config.lambdas, h_min,
                                               config.replicates * config.sizes[0],
                                               seed=config.key(1))
    for lam, v, s, z in zip(curve.lam, curve.value, curve.stderr, curve.deviation()):
        name = 'stable_laplace[lambda={0:g}]'.format(lam)
        report.add_metric(name, v, s)
        report.add_criterion(name, z <= tol, z, tol)
    return report


def criterion_10(config):
    """Search-depth codec round trip.
    """
    report = StatReport.for_config(config)
    failures = int(np.sum(_replicates(_codec_worker, config, config.sizes[0])))
    report.add_metric('codec_failures', failures, 0.0, 'exact')
    tol = config.tolerance('failures')
    report.add_criterion('codec_failures', failures <= tol, failures, tol)
    return report


def criterion_11(config):
    """Stability of the rescaled local time at the root across sizes.
    """
    report = StatReport.for_config(config)
    samples = []
    for i, n in enumerate(config.sizes):
        keys = [config.key(i + 1, j) for j in range(config.replicates)]
        samples.append(np.array(fan_out(_local_time_worker, keys, (n,), config.threads)))
        report.add_metric('local_time[n={0:d}]'.format(n), samples[-1].mean(),
                          batch_means_stderr(samples[-1]))
    report.add_table('local_time', ['n{0:d}'.format(n) for n in config.sizes], samples)
    distances = []
    for i, (a, b) in enumerate(zip(samples[:-1], samples[1:])):
        d, p = ks_two_sample(a, b, seed=config.key(0, i))
        report.add_ks('local_time_ks[n={0:d},{1:d}]'.format(config.sizes[i], config.sizes[i + 1]),
                      d, a.size, b.size)
        distances.append(d)
    worst = float(np.diff(distances).max()) if len(distances) > 1 else -1.0
    report.add_criterion('local_time_ks_decreasing', worst < 0, worst, 0.0)
    return report


def criterion_12(config):
    """Stabilization of ``Psi_epsilon`` across scale halvings.
    """
    return assumption_L_report(config)


def criterion_13(config):
    """Line-breaking against excursion trees, and the K-projection experiment.
    """
    report = StatReport.for_config(config)
    K = config.parameter('K')
    rows = np.array(_replicates(_length_worker, config, K, config.parameter('grid_size')))
    d, p = ks_two_sample(rows[:, 0], rows[:, 1], seed=config.key(1))
    report.add_table('total_length', ['lineBreaking', 'excursion'], [rows[:, 0], rows[:, 1]])
    report.add_ks('total_length_ks', d, rows.shape[0], rows.shape[0])
    report.add_metric('line_breaking_length', rows[:, 0].mean(), batch_means_stderr(rows[:, 0]))
    report.add_metric('excursion_length', rows[:, 1].mean(), batch_means_stderr(rows[:, 1]))
    report.add_criterion('total_length_ks', d < config.tolerance('ks'), d,
                         config.tolerance('ks'))
    result = _k_projection(config, K, config.parameter('projection_runs'))
    return _report_k_projection(report, config, result)


EXPERIMENTS = {'criterion-1': criterion_1, 'criterion-2': criterion_2,
               'criterion-3': criterion_3, 'criterion-4': criterion_4,
               'criterion-5': criterion_5, 'criterion-6': criterion_6,
               'criterion-7': criterion_7, 'criterion-8': criterion_8,
               'criterion-9': criterion_9, 'criterion-10': criterion_10,
               'criterion-11': criterion_11, 'criterion-12': criterion_12,
               'criterion-13': criterion_13,
               'assumption-L': assumption_L_report,
               'ipc-envelope': ipc_envelope_report,
               'k-projection': k_projection_report}
CRITERIA = ['criterion-{0:d}'.format(i) for i in range(1, 14)]


def run_experiment(config):
    """Run the experiment named by ``config.experiment_id``.

    Parameters
    ----------
    config : :class:`~critwalk.harness.config.ExperimentConfig`
        The experiment.

    Returns
    -------
    :class:`~critwalk.harness.report.StatReport`
        Metrics and pass/fail results.

    Raises
    ------
    KeyError
        If no experiment has that name.
    """
    from astropy import log
    if config.experiment_id not in EXPERIMENTS:
        raise KeyError('No experiment named {0}.'.format(config.experiment_id))
    log.info("Running {0} with {1:d} replicates.".format(config.experiment_id,
                                                         config.replicates))
    report = EXPERIMENTS[config.experiment_id](config)
    log.info("{0}: {1}.".format(config.experiment_id, 'passed' if report.passed else
                                'failed ' + ', '.join(report.failures)))
    return report
