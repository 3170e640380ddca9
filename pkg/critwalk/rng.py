# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""Seed handling shared by every sampler.

All samplers accept a ``seed`` argument that may be ``None``, an integer, a
sequence of integers or a :class:`numpy.random.Generator`.  Integer seeds are
turned into Philox counter-based streams, so that replicate streams keyed by
``(base_seed, experiment_id, index)`` are independent of the order in which
replicates are evaluated.
"""
import hashlib
import numpy as np


def get_rng(seed=None):
    """Return a :class:`numpy.random.Generator` for `seed`.

    Parameters
    ----------
    seed : :class:`int`, sequence of :class:`int`, :class:`numpy.random.Generator` or ``None``
        A generator is returned unchanged; anything else seeds a new Philox
        stream.

    Returns
    -------
    :class:`numpy.random.Generator`
        The generator.

    Examples
    --------
    >>> from critwalk.rng import get_rng
    >>> a = get_rng(42).integers(0, 1000, 3)
    >>> b = get_rng(42).integers(0, 1000, 3)
    >>> bool((a == b).all())
    True
    """
    if isinstance(seed, np.random.Generator):
        return seed
    if seed is None:
        return np.random.Generator(np.random.Philox())
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


def experiment_key(experiment_id):
    """Stable 64-bit integer derived from an experiment identifier.

    Python's :func:`hash` is salted per process, so the key is taken from
    the SHA-256 digest instead.
    """
    digest = hashlib.sha256(experiment_id.encode('utf-8')).digest()
    return int.from_bytes(digest[:8], 'little')


def replicate_key(base_seed, experiment_id, index):
    """Seed key of replicate `index` of experiment `experiment_id`.
    """
    if base_seed < 0 or index < 0:
        raise ValueError('Seeds and replicate indices must be non-negative.')
    return [int(base_seed), experiment_key(experiment_id), int(index)]


def replicate_rng(base_seed, experiment_id, index):
    """Generator for replicate `index` of experiment `experiment_id`.

    Parameters
    ----------
    base_seed : :class:`int`
        The run-level seed.
    experiment_id : :class:`str`
        Experiment name.
    index : :class:`int`
        Replicate index.

    Returns
    -------
    :class:`numpy.random.Generator`
        A Philox stream keyed by all three values.
    """
    return get_rng(replicate_key(base_seed, experiment_id, index))


def spawn_key(rng):
    """Draw a base key from `rng` for lazily keyed sub-streams.
    """
    return [int(rng.integers(0, 2**63 - 1))]


def keyed_rng(key, *labels):
    """Generator for the sub-stream of `key` labelled by `labels`.

    The stream depends only on `key` and `labels`, never on the order in
    which sub-streams are requested.

    Parameters
    ----------
    key : :class:`list`
        A key returned by :func:`spawn_key`.
    *labels : :class:`int`
        Non-negative integer labels such as a site or trap index.

    Returns
    -------
    :class:`numpy.random.Generator`
        The sub-stream.
    """
    return get_rng(list(key) + [int(l) for l in labels])
