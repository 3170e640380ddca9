# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Spatially subordinated Brownian motion on the half-line and on metric
trees.

A lattice walk is run for a fixed Brownian time.  Every trap ``(x, y)``
owns a subordinator ``S``; while the walk sits at ``x`` the clock advances
by ``y**(1+gamma) * (S(y**(-gamma) l) - S(y**(-gamma) l'))`` where ``l'``
and ``l`` are the local times at ``x`` before and after the visit.  The
position at clock time ``t`` is the walk at the right-continuous inverse
of the clock.
"""
import numpy as np
from . import HorizonExceeded
from ..rng import get_rng


class SSBMPath(object):
    """A sampled spatially subordinated Brownian motion.

    Parameters
    ----------
    times : array-like
        Increasing clock times at which the process was sampled.
    positions : array-like
        Distance from the origin (the root) at every entry of `times`.
    phi : array-like
        Clock value after every lattice step.
    psi : array-like
        Brownian time ``inf{s : phi(s) > t}`` for every entry of `times`.
    time_step : :class:`float`
        Brownian time of one lattice step.
    deficit : :class:`float`, optional
        Trap mass dropped by the sampler of the traps.
    drift_clock : :class:`float`, optional
        Clock time added for the dropped mass.
    trap_clock : array-like, optional
        Clock time consumed by every trap.
    edges, offsets : array-like, optional
        Skeleton location at every entry of `times`, on trees.
    length_perturbation : :class:`float`, optional
        Largest change of an edge length made by snapping to the lattice.
    """

    def __init__(self, times, positions, phi, psi, time_step, deficit=0.0, trap_clock=None,
                 edges=None, offsets=None, length_perturbation=0.0, drift_clock=0.0):
        self.times = np.asarray(times, dtype=np.float64)
        self.positions = np.asarray(positions, dtype=np.float64)
        if self.times.shape != self.positions.shape:
            raise ValueError('There must be one position per time.')
        if (np.diff(self.times) <= 0).any():
            raise ValueError('Times must be strictly increasing.')
        self.phi = np.asarray(phi, dtype=np.float64)
        self.psi = np.asarray(psi, dtype=np.float64)
        self.time_step = float(time_step)
        self.deficit = float(deficit)
        self.drift_clock = float(drift_clock)
        self.trap_clock = None if trap_clock is None else np.asarray(trap_clock, dtype=np.float64)
        self.edges = edges
        self.offsets = offsets
        self.length_perturbation = float(length_perturbation)

    @property
    def total_clock(self):
        """Clock value at the end of the Brownian horizon.
        """
        return float(self.phi[-1])

    def clock(self, s):
        """``phi`` at Brownian time(s) `s`.
        """
        k = np.floor(np.asarray(s, dtype=np.float64) / self.time_step + 1e-9).astype(np.int64)
        if (k < 0).any() or (k >= self.phi.size).any():
            raise ValueError('Brownian times must lie within the simulated horizon.')
        v = self.phi[k]
        if v.ndim == 0:
            return float(v)
        return v

    def running_max(self):
        """``sup_{s <= t}`` of the position at every sampled time.
        """
        return np.maximum.accumulate(self.positions)

    def write(self, filename):
        """Export as ``clockTime, position`` CSV columns.
        """
        from ..export import write_columns
        return write_columns(filename, ['clockTime', 'position'], [self.times, self.positions])

    def __repr__(self):
        return 'SSBMPath(samples={0:d}, total_clock={1:g})'.format(self.times.size,
                                                                   self.total_clock)


def _clock(sites, grid_step, trap_sites, masses, subordinator_factory, gamma):
    """Clock after every step and the clock consumed by every trap.
    """
    from astropy import log
    increments = np.zeros(sites.size, dtype=np.float64)
    consumed = np.zeros(trap_sites.size, dtype=np.float64)
    order = np.argsort(sites, kind='stable')
    counts = np.bincount(sites)
    starts = np.concatenate(([0], np.cumsum(counts)))
    for i, (x, y) in enumerate(zip(trap_sites.tolist(), masses.tolist())):
        if x >= counts.size or counts[x] == 0:
            continue
        visits = order[starts[x]:starts[x + 1]]
        local = grid_step * np.arange(0, visits.size + 1)
        S = subordinator_factory(i, y**-gamma * local[-1])
        values = y**(1.0 + gamma) * S(y**-gamma * local)
        steps = np.diff(values)
        increments[visits] += steps
        consumed[i] = values[-1] - values[0]
    log.debug("Clock built from {0:d} traps over {1:d} steps.".format(trap_sites.size, sites.size))
    return np.cumsum(increments), consumed


def _drift(positions, time_step, deficit, locations, window):
    """Clock added for the dropped trap mass after every step.
    """
    if deficit <= 0:
        return np.zeros(positions.size, dtype=np.float64)
    if window is None:
        if locations.size == 0:
            raise ValueError('A mass deficit without atoms needs the trap window.')
        window = float(locations.max())
    if window <= 0:
        raise ValueError('The trap window must be positive.')
    inside = (positions <= window).astype(np.float64)
    return np.cumsum(inside) * time_step * deficit / window


def _invert(phi, times, time_step):
    """Step index of ``inf{s : phi(s) > t}`` for every clock time `t`.
    """
    if times.size > 0 and times[-1] >= phi[-1]:
        raise HorizonExceeded('The clock reaches {0:g} before the requested time {1:g}; '
                              'increase the horizon.'.format(phi[-1], times[-1]))
    return np.searchsorted(phi, times, side='right')


def _default_times(phi, times):
    if times is None:
        if phi[-1] <= 0:
            raise HorizonExceeded('The walk visits no trap before the horizon.')
        return np.linspace(0.0, phi[-1], 201)[:-1]
    times = np.asarray(times, dtype=np.float64)
    if (times < 0).any():
        raise ValueError('Clock times must be non-negative.')
    return times


def ssbm_simulate(traps, subordinator_factory, lattice_step, horizon, seed=None, times=None,
                  gamma=0.5, window=None):
    """Spatially subordinated reflected Brownian motion on the half-line.

    Trap mass dropped by a truncated sampler, the
    :attr:`~critwalk.processes.measure.AtomicMeasure.deficit`, enters the
    clock as a drift of ``deficit / window`` per unit of Brownian time
    spent in ``[0, window]``.  This is the mean contribution of small traps
    whose subordinators have unit mean rate.

    Parameters
    ----------
    traps : :class:`~critwalk.processes.measure.AtomicMeasure`
        Trap locations (non-negative) and masses.  Traps are snapped to the
        nearest lattice site; masses of traps sharing a site are summed.
    subordinator_factory : callable
        ``subordinator_factory(index, horizon)`` returns the subordinator
        of trap `index`, a callable on ``[0, horizon]``.  Traps are indexed
        in increasing order of their site.
    lattice_step : :class:`float`
        Lattice spacing of the underlying walk.
    horizon : :class:`float`
        Brownian time simulated.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    times : array-like, optional
        Clock times to sample; 200 evenly spaced times below the final
        clock value by default.
    gamma : :class:`float`, optional
        Trap scaling exponent.
    window : :class:`float`, optional
        Length of the interval the traps were sampled on; the largest trap
        location by default.

    Returns
    -------
    :class:`SSBMPath`
        Positions at the requested clock times.

    Raises
    ------
    HorizonExceeded
        If the clock does not pass the largest requested time within
        `horizon`.
    """
    from ..processes.lattice import reflected_lattice_bm
    from ..processes.measure import AtomicMeasure
    if (traps.locations < 0).any():
        raise ValueError('Traps of a reflected motion lie on the half-line.')
    rng = get_rng(seed)
    snapped = np.rint(traps.locations / lattice_step)
    merged = AtomicMeasure(snapped, traps.masses, traps.deficit)
    trap_sites = merged.locations.astype(np.int64)
    path = reflected_lattice_bm(lattice_step, horizon, rng)
    phi, consumed = _clock(path.sites, lattice_step, trap_sites, merged.masses,
                           subordinator_factory, gamma)
    drift = _drift(path.sites * lattice_step, path.time_step, merged.deficit,
                   traps.locations, window)
    phi = phi + drift
    times = _default_times(phi, times)
    k = _invert(phi, times, path.time_step)
    return SSBMPath(times, path.sites[k] * lattice_step, phi, k * path.time_step,
                    path.time_step, deficit=merged.deficit, trap_clock=consumed,
                    drift_clock=float(drift[-1]))


def _lattice_tree(skeleton, lattice_step):
    """Subdivide every edge of `skeleton` into lattice steps.

    Returns the parent map, the vertices of every edge from its upper to
    its lower end, and the edge and offset of every lattice vertex.
    """
    n = skeleton.node_count
    parent = skeleton.parent
    lengths = skeleton.lengths
    steps = np.maximum(1, np.rint(lengths / lattice_step).astype(np.int64))
    steps[0] = 0
    node_vertex = np.zeros(n, dtype=np.int64)
    lattice_parent = [-1]
    vertex_edge = [0]
    vertex_offset = [0.0]
    chains = [[0]]
    for v in range(1, n):
        chain = [int(node_vertex[parent[v]])]
        for j in range(1, steps[v] + 1):
            lattice_parent.append(chain[-1])
            vertex_edge.append(v)
            vertex_offset.append(j * lengths[v] / steps[v])
            chain.append(len(lattice_parent) - 1)
        node_vertex[v] = chain[-1]
        chains.append(chain)
    perturbation = float(np.abs(steps[1:] * lattice_step - lengths[1:]).max()) if n > 1 else 0.0
    return (np.array(lattice_parent), chains, np.array(vertex_edge),
            np.array(vertex_offset), steps, perturbation)


def k_ssbm_simulate(skeleton, mass_measure, subordinator_factory, lattice_step, horizon,
                    seed=None, times=None, gamma=0.5):
    """Spatially subordinated Brownian motion on a metric skeleton.

    Each edge is divided into ``max(1, round(length / lattice_step))``
    equal steps and a simple random walk runs on the resulting tree,
    choosing uniformly among the directions at every branch point.  Atoms
    of `mass_measure` are snapped to the nearest lattice vertex of their
    edge.

    Parameters
    ----------
    skeleton : :class:`~critwalk.continuum.skeleton.MetricTreeSkeleton`
        The tree, rooted at its node 0.
    mass_measure : :class:`~critwalk.continuum.mass.TreeMassMeasure`
        Trap masses on `skeleton`.
    subordinator_factory : callable
        As for :func:`ssbm_simulate`; traps are indexed by lattice vertex.
    lattice_step : :class:`float`
        Target lattice spacing.
    horizon : :class:`float`
        Brownian time simulated.
    seed : optional
        Anything accepted by :func:`~critwalk.rng.get_rng`.
    times : array-like, optional
        Clock times to sample.
    gamma : :class:`float`, optional
        Trap scaling exponent.

    Returns
    -------
    :class:`SSBMPath`
        Distance from the root, edge and offset at the requested clock
        times.  :attr:`SSBMPath.length_perturbation` records the largest
        change of an edge length.

    Raises
    ------
    HorizonExceeded
        If the clock does not pass the largest requested time within
        `horizon`.
    """
    from astropy import log
    from ..trees.ordered import OrderedRootedTree
    from ..walks.walk import walk
    if lattice_step <= 0:
        raise ValueError('The lattice step must be positive.')
    rng = get_rng(seed)
    parent, chains, vertex_edge, vertex_offset, steps, perturbation = _lattice_tree(skeleton,
                                                                                    lattice_step)
    if perturbation > 0:
        log.debug("Edge lengths snapped to the lattice, largest change {0:g}.".format(perturbation))
    tree = OrderedRootedTree(parent)
    atom_vertex = np.zeros(mass_measure.size, dtype=np.int64)
    for a, (e, o) in enumerate(zip(mass_measure.edges.tolist(), mass_measure.offsets.tolist())):
        if e == 0:
            continue
        j = int(np.rint(o / skeleton.lengths[e] * steps[e]))
        atom_vertex[a] = chains[e][j]
    masses = np.bincount(atom_vertex, weights=mass_measure.masses, minlength=tree.vertex_count)
    trap_vertices = np.flatnonzero(masses > 0)
    time_step = lattice_step**2
    N = int(np.ceil(horizon / time_step - 1e-9))
    path = walk(tree, N, rng)
    sites = tree.original_ids[path.vertices]
    phi, consumed = _clock(sites, lattice_step, trap_vertices, masses[trap_vertices],
                           subordinator_factory, gamma)
    times = _default_times(phi, times)
    k = _invert(phi, times, time_step)
    v = sites[k]
    edges = vertex_edge[v]
    offsets = vertex_offset[v]
    return SSBMPath(times, skeleton.point_distance(edges, offsets), phi, k * time_step,
                    time_step, trap_clock=consumed, edges=edges, offsets=offsets,
                    length_perturbation=perturbation)
