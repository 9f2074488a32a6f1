# -*- coding: utf-8 -*-

"""
seplas.perm

Permutations in one-line notation, their symmetries, direct and skew
sums, separability and first-block statistics.
"""

import itertools
from collections import namedtuple
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import CapacityError, DomainError
from .utils import enumeration_cap


SEPARABLE_AVOIDED = ((2, 4, 1, 3), (3, 1, 4, 2))

BlockStats = namedtuple('BlockStats', ['b_plus', 'b_minus'])


@dataclass(frozen=True)
class Permutation(object):
    """
    Immutable permutation of 1..n in one-line notation.
    """
    values: tuple


    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if not values:
            raise DomainError('Permutation must have length at least 1')
        if sorted(values) != list(range(1, len(values) + 1)):
            raise DomainError('Values {} are not a permutation of 1..{}'.format(
                ' '.join(str(v) for v in values), len(values)))
        object.__setattr__(self, 'values', values)


    @classmethod
    def parse(cls, text):
        """
        Parse the space-separated text format.

        :param str text: line such as '4 3 5 2 1 6 7'
        :raises DomainError: tokens are not a permutation
        :return: Permutation
        """
        try:
            return cls(tuple(int(token) for token in text.split()))
        except ValueError:
            raise DomainError('Cannot parse permutation from {!r}'.format(text))


    @property
    def n(self):
        return len(self.values)


    def __len__(self):
        return len(self.values)


    def __iter__(self):
        return iter(self.values)


    def __getitem__(self, index):
        return self.values[index]


    def __str__(self):
        return ' '.join(str(v) for v in self.values)


def standardize(sequence):
    """
    Replace distinct values by their ranks 1..k, keeping relative order.

    :param sequence: distinct comparable values
    :return: tuple of ranks
    """
    ranks = {v: i for i, v in enumerate(sorted(sequence), start=1)}
    return tuple(ranks[v] for v in sequence)


def reverse(p):
    return Permutation(p.values[::-1])


def complement(p):
    top = p.n + 1
    return Permutation(tuple(top - v for v in p.values))


def reverse_complement(p):
    return complement(reverse(p))


def _direct_sum(a, b):
    shift = len(a)
    return a + tuple(v + shift for v in b)


def _skew_sum(a, b):
    shift = len(b)
    return tuple(v + shift for v in a) + b


def direct_sum(p, q):
    """
    Direct sum: q placed after p with every value of q above those of p.

    :param Permutation p: first block
    :param Permutation q: second block
    :return: Permutation of length |p| + |q|
    """
    return Permutation(_direct_sum(p.values, q.values))


def skew_sum(p, q):
    """
    Skew sum: q placed after p with every value of q below those of p.

    :param Permutation p: first block
    :param Permutation q: second block
    :return: Permutation of length |p| + |q|
    """
    return Permutation(_skew_sum(p.values, q.values))


def contains_pattern(p, pattern):
    """
    Brute-force pattern containment, meant for short patterns.

    :param Permutation p: text permutation
    :param Permutation pattern: pattern permutation
    :return: True if some subsequence of p is order-isomorphic to pattern
    """
    k = len(pattern)
    if k > len(p):
        return False

    target = tuple(pattern.values)
    return any(standardize(sub) == target
               for sub in itertools.combinations(p.values, k))


def _first_split(values):
    """
    Shortest proper prefix of values that is a block of a direct or skew
    sum, as ('+', j) or ('-', j).
    """
    n = len(values)
    run_max = 0
    run_min = n + 1
    for j, v in enumerate(values[:-1], start=1):
        run_max = max(run_max, v)
        run_min = min(run_min, v)
        if run_max == j:
            return '+', j
        if run_min == n - j + 1:
            return '-', j
    return None


def split(p):
    """
    One level of the recursive block decomposition.

    :param Permutation p: permutation to split
    :return: (kind, first, rest) with kind '+' or '-', or None when p is a
             singleton or neither sum- nor skew-decomposable
    """
    if p.n == 1:
        return None

    found = _first_split(p.values)
    if found is None:
        return None

    kind, j = found
    first = Permutation(standardize(p.values[:j]))
    rest = Permutation(standardize(p.values[j:]))
    return kind, first, rest


def is_separable(p):
    """
    Decide separability by recursive block splitting.

    :param Permutation p: permutation to test
    :return: True if p reduces to singletons through direct and skew sums
    """
    stack = [p]
    while stack:
        block = stack.pop()
        if block.n == 1:
            continue

        parts = split(block)
        if parts is None:
            return False
        stack.extend(parts[1:])
    return True


def is_alternating(p):
    """
    :param Permutation p: permutation
    :return: True if the steps of p strictly alternate between ascents and descents
    """
    steps = [b > a for a, b in zip(p.values, p.values[1:])]
    return all(x != y for x, y in zip(steps, steps[1:]))


def block_stats(p):
    """
    Lengths of the first indecomposable and first skew-indecomposable blocks.

    :param Permutation p: permutation
    :return: BlockStats(b_plus, b_minus)
    """
    n = p.n
    b_plus = b_minus = None
    run_max = 0
    run_min = n + 1
    for j, v in enumerate(p.values, start=1):
        run_max = max(run_max, v)
        run_min = min(run_min, v)
        if b_plus is None and run_max == j:
            b_plus = j
        if b_minus is None and run_min == n - j + 1:
            b_minus = j
        if b_plus is not None and b_minus is not None:
            break
    return BlockStats(b_plus, b_minus)


@lru_cache(maxsize=None)
def _separable_tuples(n):
    if n == 0:
        return ((),)
    return tuple(_generate(n))


@lru_cache(maxsize=None)
def _plus_indecomposable(m):
    # for m >= 2 plus-indecomposable separable means skew-decomposable
    if m == 1:
        return ((1,),)
    return tuple(_skew_sum(head, tail)
                 for k in range(1, m)
                 for head in _skew_indecomposable(k)
                 for tail in _separable_tuples(m - k))


@lru_cache(maxsize=None)
def _skew_indecomposable(k):
    top = k + 1
    return tuple(tuple(top - v for v in block) for block in _plus_indecomposable(k))


def _with_first_block(n, j):
    for head in _plus_indecomposable(j):
        for tail in _separable_tuples(n - j):
            yield _direct_sum(head, tail)


def _generate(n):
    for j in range(1, n + 1):
        yield from _with_first_block(n, j)


def check_enumerable(n, cap):
    if cap is None:
        cap = enumeration_cap()
    if n < 1:
        raise DomainError('Length must be positive, got {}'.format(n))
    if n > cap:
        raise CapacityError('Enumeration of SEP({}) exceeds cap {}'.format(n, cap))


def enumerate_separable(n, cap=None):
    """
    Stream every separable permutation of length n exactly once.

    Generation follows the first-block decomposition: an indecomposable
    first block of length j followed by any separable remainder.

    :param int n: length
    :param int cap: enumeration cap, defaults to SEPLAS_ENUM_CAP
    :raises DomainError: n < 1
    :raises CapacityError: n above the cap
    :return: generator of Permutation
    """
    check_enumerable(n, cap)
    for values in _generate(n):
        yield Permutation(values)


def enumerate_with_first_block(n, j, cap=None):
    """
    Stream the separable permutations of length n whose first indecomposable
    block has length j. The chunks for j = 1..n partition SEP(n).

    :param int n: length
    :param int j: first block length, 1 <= j <= n
    :param int cap: enumeration cap, defaults to SEPLAS_ENUM_CAP
    :raises DomainError: j outside 1..n
    :raises CapacityError: n above the cap
    :return: generator of Permutation
    """
    check_enumerable(n, cap)
    if not 1 <= j <= n:
        raise DomainError('First block length {} outside 1..{}'.format(j, n))

    for values in _with_first_block(n, j):
        yield Permutation(values)


# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
