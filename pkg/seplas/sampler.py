# -*- coding: utf-8 -*-

"""
seplas.sampler

Exactly uniform random separable permutations drawn through the law of
the first indecomposable block, uniform permutations as a baseline, and
a reproducible multi-process Monte Carlo harness for the longest
alternating subsequence statistics.
"""

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from multiprocessing import Pool

import numpy as np

from .exceptions import DomainError
from .las import KEYS, profile_matrix
from .perm import Permutation
from .schroder import schroder_numbers
from .utils import progress


ENSEMBLES = ('separable', 'uniform')
DRAW_BITS = 128
RAW_BLOCK = 1024
BATCH_ROWS = 256
SEED_LIMIT = 1 << 64


class RandomStream(object):
    """
    Independent substream of a PCG64 generator keyed by (seed, worker).

    Besides the numpy Generator it hands out uniform 128-bit integers
    assembled from pairs of raw 64-bit draws.
    """

    def __init__(self, seed, worker=0):
        if not 0 <= seed < SEED_LIMIT:
            raise DomainError('Seed must be a 64-bit unsigned integer, got {}'.format(seed))
        self.seed = seed
        self.worker = worker
        sequence = np.random.SeedSequence(seed, spawn_key=(worker,))
        self.generator = np.random.Generator(np.random.PCG64(sequence))
        self._buffer = []


    def draw128(self):
        """
        :return: int uniform on [0, 2^128)
        """
        if not self._buffer:
            raw = self.generator.bit_generator.random_raw(2 * RAW_BLOCK).tolist()
            self._buffer = [(hi << 64) | lo for hi, lo in zip(raw[0::2], raw[1::2])]
            self._buffer.reverse()
        return self._buffer.pop()


def _thresholds(weights):
    # T_j = ceil(W_j 2^128 / W) for the cumulative weights W_j
    total = sum(weights)
    scale = 1 << DRAW_BITS
    cumulative = 0
    thresholds = []
    for weight in weights:
        cumulative += weight
        thresholds.append(-((-cumulative * scale) // total))
    return tuple(thresholds)


@lru_cache(maxsize=None)
def first_block_thresholds(n):
    """
    Inverse-transform table of the first block length of SEP(n), n >= 2:
    weights 2 s_{n-1} at 1, s_j s_{n-j} for 1 < j < n, s_n at n, over 2 s_n.
    """
    s = [1] + schroder_numbers(n)
    weights = [2 * s[n - 1]] + [s[j] * s[n - j] for j in range(2, n)] + [s[n]]
    return _thresholds(weights)


@lru_cache(maxsize=None)
def skew_block_thresholds(m):
    """
    Inverse-transform table of the first skew block length of a
    plus-indecomposable element of SEP(m), m >= 2: weights 2 s_{m-1} at 1
    and s_k s_{m-k} for 1 < k < m, over s_m.
    """
    s = [1] + schroder_numbers(m)
    weights = [2 * s[m - 1]] + [s[k] * s[m - k] for k in range(2, m)]
    return _thresholds(weights)


def _draw(thresholds, stream):
    return bisect_right(thresholds, stream.draw128()) + 1


def _separable_values(n, stream):
    out = [0] * n
    # ('sep', size, pos, lo) fills positions pos.. with a uniform SEP(size)
    # on values lo..lo+size-1; ('plus', size, pos, lo, flip) with a uniform
    # plus-indecomposable one, complemented when flip is set.
    stack = [('sep', n, 0, 1, False)]
    while stack:
        kind, size, pos, lo, flip = stack.pop()
        if size == 1:
            out[pos] = lo
            continue

        if kind == 'sep':
            j = _draw(first_block_thresholds(size), stream)
            if j < size:
                stack.append(('sep', size - j, pos + j, lo + j, False))
            stack.append(('plus', j, pos, lo, False))
        else:
            k = _draw(skew_block_thresholds(size), stream)
            if flip:
                stack.append(('sep', size - k, pos + k, lo + k, False))
                stack.append(('plus', k, pos, lo, False))
            else:
                stack.append(('sep', size - k, pos + k, lo, False))
                stack.append(('plus', k, pos, lo + size - k, True))
    return out


def sample_separable(n, stream):
    """
    Exactly uniform element of SEP(n), up to the 2^-128 resolution of the
    inverse transform.

    The first block length J follows the exact first-block law; a block
    that is plus-indecomposable is built as a skew sum whose first skew
    block is drawn from its own exact law, so no draw is ever rejected.

    :param int n: length, n >= 1
    :param RandomStream stream: source of randomness
    :raises DomainError: n < 1
    :return: Permutation
    """
    if n < 1:
        raise DomainError('Length must be positive, got {}'.format(n))
    return Permutation(tuple(_separable_values(n, stream)))


def sample_uniform(n, stream):
    """
    :param int n: length, n >= 1
    :param RandomStream stream: source of randomness
    :raises DomainError: n < 1
    :return: uniform Permutation of 1..n
    """
    if n < 1:
        raise DomainError('Length must be positive, got {}'.format(n))
    return Permutation(tuple((stream.generator.permutation(n) + 1).tolist()))


def sample_stream(n, count, seed, ensemble='separable'):
    """
    Generator of count permutations from one substream of seed.

    :param int n: length
    :param int count: number of permutations
    :param int seed: 64-bit seed
    :param str ensemble: 'separable' or 'uniform'
    :return: generator of Permutation
    """
    sampler = _ensemble_sampler(ensemble)
    stream = RandomStream(seed, 0)
    for _ in range(count):
        yield sampler(n, stream)


def _ensemble_sampler(ensemble):
    if ensemble == 'separable':
        return sample_separable
    if ensemble == 'uniform':
        return sample_uniform
    raise DomainError('Unknown ensemble {!r}, expected one of {}'.format(
        ensemble, ', '.join(ENSEMBLES)))


@dataclass
class McEstimate(object):
    """
    Monte Carlo estimate of every flavor's mean and variance.
    """
    n: int
    ensemble: str
    samples: int
    seed: int
    workers: int
    mean: dict = field(default_factory=dict)
    variance: dict = field(default_factory=dict)
    stderr: dict = field(default_factory=dict)


    def to_dict(self):
        return {
            'n': self.n,
            'ensemble': self.ensemble,
            'samples': self.samples,
            'seed': self.seed,
            'workers': self.workers,
            'mean': dict(self.mean),
            'variance': dict(self.variance),
            'stderr': dict(self.stderr),
        }


def _worker_sums(task):
    n, count, seed, worker, ensemble = task
    stream = RandomStream(seed, worker)
    first = [0] * len(KEYS)
    second = [0] * len(KEYS)
    done = 0
    while done < count:
        rows = min(BATCH_ROWS, count - done)
        if ensemble == 'separable':
            batch = np.array([_separable_values(n, stream) for _ in range(rows)], dtype=np.int64)
        else:
            batch = np.array([stream.generator.permutation(n) + 1 for _ in range(rows)],
                             dtype=np.int64)
        profiles = profile_matrix(batch)
        first = [a + b for a, b in zip(first, profiles.sum(axis=0).tolist())]
        second = [a + b for a, b in zip(second, (profiles * profiles).sum(axis=0).tolist())]
        done += rows
    return count, first, second


def split_budget(samples, workers):
    """
    Deterministic split of a sample budget: the first samples % workers
    workers take one extra sample.
    """
    base, extra = divmod(samples, workers)
    return [base + (1 if w < extra else 0) for w in range(workers)]


def mc_stats(n, samples, seed, workers=1, ensemble='separable', verbose=False):
    """
    Estimate the mean and variance of every flavor over random permutations.

    Worker w consumes the substream (seed, w); partial sums are exact
    integers merged in worker order, so a fixed (n, samples, seed,
    workers, ensemble) reproduces identical estimates. Different worker
    counts use different substreams.

    :param int n: length, n >= 1
    :param int samples: sample count, at least 2
    :param int seed: 64-bit seed
    :param int workers: worker processes
    :param str ensemble: 'separable' or 'uniform'
    :param bool verbose: enable verbosity
    :raises DomainError: fewer than 2 samples, n < 1, workers < 1, bad seed or ensemble
    :return: McEstimate
    """
    if samples < 2:
        raise DomainError('Need at least 2 samples, got {}'.format(samples))
    if n < 1:
        raise DomainError('Length must be positive, got {}'.format(n))
    if workers < 1:
        raise DomainError('Need at least one worker, got {}'.format(workers))
    if not 0 <= seed < SEED_LIMIT:
        raise DomainError('Seed must be a 64-bit unsigned integer, got {}'.format(seed))
    _ensemble_sampler(ensemble)

    tasks = [(n, count, seed, w, ensemble)
             for w, count in enumerate(split_budget(samples, workers))]
    progress(verbose, 'Sampling {} {} permutations of length {} on {} worker(s)...',
             samples, ensemble, n, workers)
    if workers > 1:
        with Pool(workers) as pool:
            parts = pool.map(_worker_sums, tasks)
    else:
        parts = [_worker_sums(task) for task in tasks]

    first = [0] * len(KEYS)
    second = [0] * len(KEYS)
    for _, part_first, part_second in parts:
        first = [a + b for a, b in zip(first, part_first)]
        second = [a + b for a, b in zip(second, part_second)]

    estimate = McEstimate(n=n, ensemble=ensemble, samples=samples, seed=seed, workers=workers)
    for key, s1, s2 in zip(KEYS, first, second):
        mean = Fraction(s1, samples)
        variance = Fraction(s2 * samples - s1 * s1, samples * (samples - 1))
        estimate.mean[key] = float(mean)
        estimate.variance[key] = float(variance)
        estimate.stderr[key] = math.sqrt(float(variance) / samples)
    progress(verbose, 'Mean A^(+,-) = {:.6f}', estimate.mean['pm'])
    return estimate


# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
