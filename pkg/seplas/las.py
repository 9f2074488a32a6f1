# -*- coding: utf-8 -*-

"""
seplas.las

Longest alternating subsequences typed by their first and last step,
exhaustive moment tables over SEP(n) and the exact checks of the
recursions those moments satisfy.

A singleton counts as an alternating subsequence of types (+,-) and
(-,+) but not (+,+) or (-,-).
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool

import numpy as np

from . import perm
from .exceptions import CapacityError, DomainError
from .schroder import block_distribution, schroder_numbers
from .utils import enumeration_cap, format_rational, progress


FLAVORS = ('pp', 'pm', 'mp', 'mm')
KEYS = ('overall',) + FLAVORS
BRUTEFORCE_CAP = 12


@dataclass(frozen=True)
class AltProfile(object):
    """
    Longest alternating subsequence lengths of one permutation.
    """
    a_overall: int
    a_pp: int
    a_pm: int
    a_mp: int
    a_mm: int


    def flavor(self, name):
        return getattr(self, 'a_' + name)


    def as_tuple(self):
        return (self.a_overall, self.a_pp, self.a_pm, self.a_mp, self.a_mm)


def _profile_values(values):
    # chain started by an ascent: down_p holds (+,-), seeded by the singleton
    down_p, up_p = 1, 0
    # chain started by a descent: up_m holds (-,+), seeded by the singleton
    up_m, down_m = 1, 0
    for prev, cur in zip(values, values[1:]):
        if cur > prev:
            up_p = max(up_p, down_p + 1)
            if down_m:
                up_m = max(up_m, down_m + 1)
        else:
            if up_p:
                down_p = max(down_p, up_p + 1)
            down_m = max(down_m, up_m + 1)
    return (max(up_p, down_p, up_m, down_m), up_p, down_p, up_m, down_m)


def alt_profile(p):
    """
    Single left-to-right pass over p.

    :param Permutation p: permutation
    :return: AltProfile
    """
    return AltProfile(*_profile_values(p.values))


def alt_profile_bruteforce(p):
    """
    Classify every subsequence of p. Exponential; test oracle only.

    :param Permutation p: permutation of length at most 12
    :raises CapacityError: p longer than 12
    :return: AltProfile
    """
    if p.n > BRUTEFORCE_CAP:
        raise CapacityError('Brute force profile limited to length {}, got {}'.format(
            BRUTEFORCE_CAP, p.n))

    best = dict.fromkeys(FLAVORS, 0)
    best['pm'] = best['mp'] = 1
    for size in range(2, p.n + 1):
        for sub in itertools.combinations(p.values, size):
            if not perm.is_alternating(perm.Permutation(perm.standardize(sub))):
                continue
            name = ('p' if sub[1] > sub[0] else 'm') + ('p' if sub[-1] > sub[-2] else 'm')
            best[name] = max(best[name], size)

    return AltProfile(max(best.values()), best['pp'], best['pm'], best['mp'], best['mm'])


def profile_matrix(batch):
    """
    Profiles of many equal-length permutations from their monotone runs.

    A sequence with k maximal monotone runs has a longest alternating
    subsequence of length k + 1; a typed flavor loses one for each end
    run whose direction disagrees with the requested first or last step.

    :param batch: 2-D integer array, one permutation per row
    :return: int64 array of shape (rows, 5) ordered as AltProfile fields
    """
    batch = np.asarray(batch)
    if batch.ndim != 2:
        raise DomainError('Expected a 2-D batch, got shape {}'.format(batch.shape))

    rows, n = batch.shape
    if n == 1:
        return np.tile(np.array([1, 0, 1, 1, 0], dtype=np.int64), (rows, 1))

    up = np.diff(batch, axis=1) > 0
    runs = 1 + np.count_nonzero(up[:, 1:] != up[:, :-1], axis=1)
    first = up[:, 0].astype(np.int64)
    last = up[:, -1].astype(np.int64)
    overall = (runs + 1).astype(np.int64)

    return np.column_stack((
        overall,
        overall - (1 - first) - (1 - last),
        overall - (1 - first) - last,
        overall - first - (1 - last),
        overall - first - last,
    ))


def alt_profile_runs(p):
    """
    :param Permutation p: permutation
    :return: AltProfile computed from monotone runs
    """
    row = profile_matrix(np.asarray([p.values], dtype=np.int64))[0]
    return AltProfile(*(int(v) for v in row))


class Census(object):
    """
    Exhaustive tally of SEP(n): for every flavor, the count of each
    subsequence length split by first block length, and the same among
    the skew-indecomposable permutations.
    """

    def __init__(self, n, count, by_block, skew):
        self.n = n
        self.count = count
        self.by_block = by_block
        self.skew = skew


    @classmethod
    def build(cls, n, workers=1, cap=None, verbose=False):
        """
        Enumerate SEP(n), optionally fanning out over first block lengths.

        :param int n: length
        :param int workers: worker processes
        :param int cap: enumeration cap, defaults to SEPLAS_ENUM_CAP
        :param bool verbose: enable verbosity
        :raises CapacityError: n above the cap
        :return: Census
        """
        if cap is None:
            cap = enumeration_cap()
        perm.check_enumerable(n, cap)

        progress(verbose, 'Enumerating SEP({}) with {} worker(s)...', n, workers)
        tasks = [(n, j, cap) for j in range(1, n + 1)]
        if workers > 1:
            with Pool(workers) as pool:
                parts = pool.map(_tally_first_block, tasks)
        else:
            parts = [_tally_first_block(task) for task in tasks]

        count = 0
        by_block = {key: [[0] * (n + 1) for _ in range(n + 1)] for key in KEYS}
        skew = {key: [0] * (n + 1) for key in KEYS}
        for part_count, part_block, part_skew in parts:
            count += part_count
            for key in KEYS:
                for j in range(n + 1):
                    row = by_block[key][j]
                    for length, value in enumerate(part_block[key][j]):
                        row[length] += value
                for length, value in enumerate(part_skew[key]):
                    skew[key][length] += value

        progress(verbose, 'SEP({}) holds {} permutations', n, count)
        return cls(n, count, by_block, skew)


    def block_count(self, j):
        return sum(self.by_block['overall'][j])


    def skew_count(self):
        return sum(self.skew['overall'])


    def law(self, key, j=None):
        """
        Exact law of a flavor's length, optionally given b_plus = j.

        :param str key: 'overall' or a flavor
        :param int j: condition on first block length j
        :return: list of Fraction indexed by length 0..n
        """
        if j is None:
            counts = [sum(self.by_block[key][b][length] for b in range(self.n + 1))
                      for length in range(self.n + 1)]
        else:
            counts = self.by_block[key][j]
        return _normalise(counts)


    def skew_law(self, key):
        return _normalise(self.skew[key])


def _normalise(counts):
    total = sum(counts)
    if not total:
        return [Fraction(0)] * len(counts)
    return [Fraction(c, total) for c in counts]


def _tally_first_block(task):
    n, j, cap = task
    count = 0
    by_block = {key: [[0] * (n + 1) for _ in range(n + 1)] for key in KEYS}
    skew = {key: [0] * (n + 1) for key in KEYS}
    for p in perm.enumerate_with_first_block(n, j, cap=cap):
        count += 1
        stats = perm.block_stats(p)
        for key, length in zip(KEYS, _profile_values(p.values)):
            by_block[key][stats.b_plus][length] += 1
            if stats.b_minus == n:
                skew[key][length] += 1
    return count, by_block, skew


_CENSUS = {}


def census(n, workers=1, verbose=False):
    """
    Cached Census of SEP(n).

    :param int n: length
    :param int workers: worker processes for a first build
    :param bool verbose: enable verbosity
    :return: Census
    """
    if n > enumeration_cap():
        raise CapacityError('Enumeration of SEP({}) exceeds cap {}'.format(n, enumeration_cap()))
    if n not in _CENSUS:
        _CENSUS[n] = Census.build(n, workers=workers, verbose=verbose)
    return _CENSUS[n]


def _mean(law):
    return sum(length * p for length, p in enumerate(law))


def _second(law):
    return sum(length * length * p for length, p in enumerate(law))


@dataclass
class MomentTable(object):
    """
    Exact conditional and unconditional moments of every flavor over SEP(n).

    c and C condition on b_plus = n, d and D on b_minus = n.
    """
    n: int
    count: int
    c: dict = field(default_factory=dict)
    d: dict = field(default_factory=dict)
    C: dict = field(default_factory=dict)
    D: dict = field(default_factory=dict)
    mean: dict = field(default_factory=dict)
    secmom: dict = field(default_factory=dict)


    @property
    def variance(self):
        return {key: self.secmom[key] - self.mean[key] ** 2 for key in self.mean}


    def to_dict(self):
        out = {'n': self.n, 'count': self.count}
        for name in ('c', 'd', 'C', 'D', 'mean', 'secmom'):
            out[name] = {key: format_rational(v) for key, v in getattr(self, name).items()}
        return out


def moment_table(n, workers=1, verbose=False):
    """
    Exact moments by full enumeration of SEP(n).

    :param int n: length, at most the enumeration cap
    :param int workers: worker processes
    :param bool verbose: enable verbosity
    :raises CapacityError: n above the cap
    :return: MomentTable
    """
    table = census(n, workers=workers, verbose=verbose)
    result = MomentTable(n=n, count=table.count)
    for key in KEYS:
        plus = table.law(key, n)
        minus = table.skew_law(key)
        overall = table.law(key)
        result.c[key] = _mean(plus)
        result.C[key] = _second(plus)
        result.d[key] = _mean(minus)
        result.D[key] = _second(minus)
        result.mean[key] = _mean(overall)
        result.secmom[key] = _second(overall)
    return result


def _convolve(left, right):
    out = [Fraction(0)] * (len(left) + len(right) - 1)
    for a, p in enumerate(left):
        if p:
            for b, q in enumerate(right):
                out[a + b] += p * q
    return out


def _row(identity, n, lhs, rhs):
    if isinstance(lhs, list):
        render = lambda values: [format_rational(v) for v in values]
    else:
        render = format_rational
    return {
        'identity': identity,
        'n': n,
        'status': 'pass' if lhs == rhs else 'fail',
        'lhs': render(lhs),
        'rhs': render(rhs),
    }


def verify_structure(n, workers=1, verbose=False):
    """
    Check the first-block recursions and distributional identities of SEP(n)
    against exhaustive enumeration, in exact rational arithmetic.

    :param int n: length, 3 <= n <= enumeration cap
    :param int workers: worker processes for the largest census
    :param bool verbose: enable verbosity
    :raises DomainError: n < 3
    :raises CapacityError: n above the cap
    :return: list of dicts with keys identity, n, status, lhs, rhs
    """
    if n < 3:
        raise DomainError('Structure checks need n >= 3, got {}'.format(n))
    if n > enumeration_cap():
        raise CapacityError('Enumeration of SEP({}) exceeds cap {}'.format(n, enumeration_cap()))

    progress(verbose, 'Verifying first-block structure of SEP({})...', n)
    tables = {m: moment_table(m, workers=workers if m == n else 1) for m in range(1, n + 1)}
    counts = {m: tables[m].count for m in tables}
    c = {m: tables[m].c for m in tables}
    C = {m: tables[m].C for m in tables}
    s_n = counts[n]
    middle = range(2, n)
    rows = []

    rows.append(_row('count', n, s_n, schroder_numbers(n)[-1]))

    rhs = counts[1] * counts[n - 1] + Fraction(
        sum(counts[j] * counts[n - j] for j in middle), 2) + Fraction(s_n, 2)
    rows.append(_row('rec', n, s_n, rhs))

    observed = [Fraction(census(n).block_count(j), s_n) for j in range(1, n + 1)]
    rows.append(_row('Bprob', n, observed, list(block_distribution(n))))

    weight = lambda j: Fraction(counts[j] * counts[n - j], 2 * s_n)
    head = Fraction(counts[n - 1], s_n)

    rhs = head * (1 + c[n - 1]['pm']) + sum(
        weight(j) * (c[j]['pm'] + c[n - j]['pm']) for j in middle)
    rows.append(_row('keypair--', n, c[n]['mm'] / 2, rhs))

    rhs = head * c[n - 1]['pm'] + sum(
        weight(j) * (c[j]['mm'] + c[n - j]['pm']) for j in middle)
    rows.append(_row('keypair+-', n, c[n]['pm'] / 2, rhs))

    rhs = counts[n - 1] * (2 + 4 * c[n - 1]['pm'] + 2 * C[n - 1]['pm']) + sum(
        counts[j] * counts[n - j]
        * (C[j]['pm'] + 2 * c[j]['pm'] * c[n - j]['pm'] + C[n - j]['pm'])
        for j in middle)
    rows.append(_row('varrecur--', n, s_n * C[n]['mm'], rhs))

    rhs = 2 * counts[n - 1] * C[n - 1]['pm'] + sum(
        counts[j] * counts[n - j]
        * (C[j]['mm'] + 2 * c[j]['mm'] * c[n - j]['pm'] + C[n - j]['pm'])
        for j in middle)
    rows.append(_row('varrecur-+', n, s_n * C[n]['pm'], rhs))

    whole = census(n)
    for j in range(1, n):
        block = census(j)
        rest = census(n - j).law('mp')
        rows.append(_row('A++cond[j={}]'.format(j), n, whole.law('pp', j),
                         _convolve(block.law('pm', j), rest)))
        rows.append(_row('A-+cond[j={}]'.format(j), n, whole.law('mp', j),
                         _convolve(block.law('mm', j), rest)))

    table = tables[n]
    for name, lhs, rhs in (
            ('d_pp=c_mm', table.d['pp'], table.c['mm']),
            ('d_mm=c_pp', table.d['mm'], table.c['pp']),
            ('c_mp=c_pm', table.c['mp'], table.c['pm']),
            ('d_mp=c_pm', table.d['mp'], table.c['pm']),
            ('d_pm=c_mp', table.d['pm'], table.c['mp']),
            ('D_pp=C_mm', table.D['pp'], table.C['mm']),
            ('C_mp=C_pm', table.C['mp'], table.C['pm']),
            ('D_mp=C_pm', table.D['mp'], table.C['pm']),
            ('mean_pm=c_pm', table.mean['pm'], table.c['pm']),
            ('mean_pp=mean_pm', table.mean['pp'], table.mean['pm']),
            ('mean_mm=mean_pp', table.mean['mm'], table.mean['pp'])):
        rows.append(_row(name, n, lhs, rhs))

    # the conditional (-,-) mean sits s_{n-1} / s_n above the common mean
    rows.append(_row('c_mm-c_pm', n, table.c['mm'] - table.c['pm'],
                     Fraction(counts[n - 1], s_n)))

    rows.append(_row('sym', n, whole.block_count(n), whole.skew_count()))
    rows.append(_row('sym-half', n, whole.skew_count(), Fraction(s_n, 2)))

    failed = [row['identity'] for row in rows if row['status'] != 'pass']
    progress(verbose, 'SEP({}): {} checks, {} failed', n, len(rows), len(failed))
    return rows


def report_passed(rows):
    return all(row['status'] == 'pass' for row in rows)


# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
