# -*- coding: utf-8 -*-

"""
seplas.schroder

Big Schröder numbers, the first-block law, the coefficient sequences of
(t^2 - 6t + 1)^(m/2) for m in {1, -1, -3}, and high-precision evaluation
of their asymptotic expansions around the root r1 = 3 - 2*sqrt(2).
"""

import operator
from fractions import Fraction
from functools import lru_cache

import mpmath

from .exceptions import DomainError
from .utils import check_precision, format_decimal, working_precision


# exponent m of (t^2 - 6t + 1)^(m/2)
SEQUENCE_EXPONENTS = {
    'b': 1,
    'a': -1,
    'alpha': -3,
}

ASYMPTOTIC_KINDS = (
    's_lead', 's_refined',
    'a_lead', 'a_refined',
    'b_lead', 'b_refined',
    'alpha_lead', 'alpha_refined',
)

_SCHRODER = [1, 1]


def schroder_numbers(N):
    """
    Big Schröder numbers s_1..s_N.

    Uses s_n = 2 s_{n-1} + sum_{j=2}^{n-1} s_j s_{n-j}, the count recursion
    with its s_n / 2 term moved to the left.

    :param int N: number of terms, N >= 1
    :raises DomainError: N < 1
    :return: list of int, s_1 first
    """
    if N < 1:
        raise DomainError('Need at least one Schröder number, got N={}'.format(N))

    s = _SCHRODER
    while len(s) <= N:
        n = len(s)
        s.append(2 * s[n - 1] + sum(map(operator.mul, s[2:n], s[n - 2:0:-1])))
    return s[1:N + 1]


def block_distribution(n):
    """
    Exact law of the first indecomposable block length of a uniform
    separable permutation of length n.

    :param int n: length, n >= 2
    :raises DomainError: n < 2
    :return: list of Fraction for j = 1..n, summing to 1
    """
    if n < 2:
        raise DomainError('Block law needs n >= 2, got {}'.format(n))

    s = [None] + schroder_numbers(n)
    law = [Fraction(s[1] * s[n - 1], s[n])]
    law.extend(Fraction(s[j] * s[n - j], 2 * s[n]) for j in range(2, n))
    law.append(Fraction(1, 2))
    return law


@lru_cache(maxsize=16)
def _sequence(m, N):
    c = [1, -3 * m]
    for n in range(1, N):
        numerator = 3 * (2 * n - m) * c[n] - (n - 1 - m) * c[n - 1]
        value, remainder = divmod(numerator, n + 1)
        if remainder:
            raise ArithmeticError('Non-integral coefficient at index {}'.format(n + 1))
        c.append(value)
    return tuple(c[:N + 1])


def coeff_sequence(kind, N):
    """
    Exact power series coefficients c_0..c_N of (t^2 - 6t + 1)^(m/2).

    'a' is m = -1, 'b' is m = 1 and 'alpha' is m = -3. From
    (t^2 - 6t + 1) y' = m (t - 3) y:

        (n + 1) c_{n+1} = 3 (2n - m) c_n - (n - 1 - m) c_{n-1}

    :param str kind: 'a', 'b' or 'alpha'
    :param int N: highest index
    :raises DomainError: unknown kind or negative N
    :return: list of int
    """
    if kind not in SEQUENCE_EXPONENTS:
        raise DomainError('Unknown sequence {!r}, expected one of {}'.format(
            kind, ', '.join(sorted(SEQUENCE_EXPONENTS))))
    if N < 0:
        raise DomainError('Index must be non-negative, got {}'.format(N))
    return list(_sequence(SEQUENCE_EXPONENTS[kind], max(N, 1)))[:N + 1]


class QuadraticSurd(object):
    """
    Exact number a + b*sqrt(2) with rational a and b.
    """

    __slots__ = ('a', 'b')


    def __init__(self, a, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)


    @staticmethod
    def _lift(other):
        if isinstance(other, QuadraticSurd):
            return other
        return QuadraticSurd(other)


    def __add__(self, other):
        other = self._lift(other)
        return QuadraticSurd(self.a + other.a, self.b + other.b)

    __radd__ = __add__


    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b)


    def __sub__(self, other):
        return self + (-self._lift(other))


    def __rsub__(self, other):
        return self._lift(other) - self


    def __mul__(self, other):
        other = self._lift(other)
        return QuadraticSurd(self.a * other.a + 2 * self.b * other.b,
                             self.a * other.b + self.b * other.a)

    __rmul__ = __mul__


    def __truediv__(self, other):
        other = self._lift(other)
        norm = other.norm()
        if not norm:
            raise ZeroDivisionError('division by zero in Q(sqrt 2)')
        return self * other.conjugate() * QuadraticSurd(Fraction(1) / norm)


    def __pow__(self, exponent):
        if exponent < 0:
            return QuadraticSurd(1) / (self ** -exponent)
        result = QuadraticSurd(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result


    def __eq__(self, other):
        if not isinstance(other, (QuadraticSurd, int, Fraction)):
            return NotImplemented
        other = self._lift(other)
        return self.a == other.a and self.b == other.b


    def __hash__(self):
        return hash((self.a, self.b))


    def __repr__(self):
        return 'QuadraticSurd({}, {})'.format(self.a, self.b)


    def conjugate(self):
        return QuadraticSurd(self.a, -self.b)


    def norm(self):
        return self.a * self.a - 2 * self.b * self.b


    def to_mpf(self):
        """
        Real value at the current mpmath precision. When a and b have
        opposite signs the value is formed as norm / conjugate so the
        subtraction never cancels.
        """
        a = mpmath.mpf(self.a.numerator) / self.a.denominator
        b = mpmath.mpf(self.b.numerator) / self.b.denominator
        if self.a * self.b >= 0:
            return a + b * mpmath.sqrt(2)
        norm = self.norm()
        return (mpmath.mpf(norm.numerator) / norm.denominator) / (a - b * mpmath.sqrt(2))


class AsymptoticConstants(object):
    """
    Roots of t^2 - 6t + 1 and the limiting constants built from them.
    """

    def __init__(self):
        self.r1 = QuadraticSurd(3, -2)
        self.r2 = QuadraticSurd(3, 2)
        self.mean_slope = QuadraticSurd(2, -1)
        self.mean_shift_pm = -self.r1 / 4
        self.mean_shift_mm = 3 * self.r1 / 4
        self.variance_slope = QuadraticSurd(8, Fraction(-11, 2))
        self.translation = self.r1


CONSTANTS = AsymptoticConstants()

# sqrt(r1) = sqrt(2) - 1 and 1/sqrt(r1) = sqrt(2) + 1
_SQRT_R1 = QuadraticSurd(-1, 1)
_INV_SQRT_R1 = QuadraticSurd(1, 1)


def _root_power(n, shift):
    """
    r1^(-n + shift) for half-integer shift in {1/2, -1/2, -3/2}, exact
    in Q(sqrt 2) before a single rounding.
    """
    if shift == Fraction(1, 2):
        exact = CONSTANTS.r2 ** n * _SQRT_R1
    elif shift == Fraction(-1, 2):
        exact = CONSTANTS.r2 ** n * _INV_SQRT_R1
    else:
        exact = CONSTANTS.r2 ** (n + 1) * _INV_SQRT_R1
    return exact.to_mpf()


def _expansion(kind, n):
    family, order = kind.split('_')
    nn = mpmath.mpf(n)
    sqrt2 = mpmath.sqrt(2)
    root = mpmath.root(2, 4)

    if family == 's':
        scale = _root_power(n, Fraction(1, 2))
        terms = (nn ** -1.5 / root ** 3,
                 (12 * sqrt2 - 9) / (root * 32) * nn ** -2.5)
    elif family == 'b':
        scale = _root_power(n, Fraction(1, 2))
        terms = (-root * nn ** -1.5,
                 (9 - 12 * sqrt2) / (16 * root) * nn ** -2.5)
    elif family == 'a':
        scale = _root_power(n, Fraction(-1, 2))
        terms = (nn ** -0.5 / root ** 5,
                 (3 - 4 * sqrt2) / (32 * root ** 3) * nn ** -1.5)
    else:
        scale = _root_power(n, Fraction(-3, 2))
        terms = (mpmath.sqrt(nn) / (4 * root ** 3),
                 (24 - 9 * sqrt2) / (128 * root ** 3) / mpmath.sqrt(nn))

    series = terms[0] if order == 'lead' else terms[0] + terms[1]
    return scale * series / mpmath.sqrt(mpmath.pi)


def asymptotic_value(kind, n, precision=None):
    """
    Evaluate an asymptotic expansion at n.

    :param str kind: one of ASYMPTOTIC_KINDS
    :param int n: index, n >= 3
    :param int precision: working precision in bits, defaults to SEPLAS_PRECISION
    :raises DomainError: unknown kind, n < 3 or precision below 128 bits
    :return: mpmath.mpf
    """
    if kind not in ASYMPTOTIC_KINDS:
        raise DomainError('Unknown asymptotic kind {!r}, expected one of {}'.format(
            kind, ', '.join(ASYMPTOTIC_KINDS)))
    if n < 3:
        raise DomainError('Asymptotic evaluation needs n >= 3, got {}'.format(n))
    precision = check_precision(precision or working_precision())

    with mpmath.workprec(precision):
        return +_expansion(kind, n)


def exact_value(family, n):
    """
    :param str family: 's', 'a', 'b' or 'alpha'
    :param int n: index
    :return: exact integer term of the sequence
    """
    if family == 's':
        return schroder_numbers(n)[-1]
    return coeff_sequence(family, n)[n]


def asymptotic_ratio(kind, n, precision=None):
    """
    Exact term divided by an expansion.

    :param str kind: one of ASYMPTOTIC_KINDS
    :param int n: index, n >= 3
    :param int precision: working precision in bits
    :return: mpmath.mpf
    """
    precision = check_precision(precision or working_precision())
    approx = asymptotic_value(kind, n, precision)
    with mpmath.workprec(precision):
        return mpmath.mpf(exact_value(kind.split('_')[0], n)) / approx


def refined_residual(kind, n, precision=None):
    """
    n * (exact / refined - 1); tends to zero when the second-order term
    of the expansion is right.

    :param str kind: 's', 'a', 'b' or 'alpha'
    :param int n: index, n >= 3
    :param int precision: working precision in bits
    :return: mpmath.mpf
    """
    precision = check_precision(precision or working_precision())
    ratio = asymptotic_ratio('{}_refined'.format(kind), n, precision)
    with mpmath.workprec(precision):
        return n * (ratio - 1)


def leading_constant_estimate(n, precision=None):
    """
    n^(3/2) r1^(n - 1/2) sqrt(pi) s_n, which tends to the leading constant
    of the Schröder asymptotics: 2^(-3/4) here, 1/2 in part of the literature.

    :param int n: index, n >= 3
    :param int precision: working precision in bits
    :return: mpmath.mpf
    """
    if n < 3:
        raise DomainError('Constant estimate needs n >= 3, got {}'.format(n))
    precision = check_precision(precision or working_precision())
    with mpmath.workprec(precision):
        scale = _root_power(n, Fraction(1, 2))
        return mpmath.mpf(schroder_numbers(n)[-1]) * mpmath.mpf(n) ** 1.5 \
            * mpmath.sqrt(mpmath.pi) / scale


def asymptotic_report(n_values, precision=None, digits=30):
    """
    Rows comparing the exact sequences with their expansions.

    :param n_values: indices, each >= 3
    :param int precision: working precision in bits
    :param int digits: significant digits of decimal columns
    :return: list of dicts with keys kind, n, value, lead_formula,
             refined_formula, ratio, scaled_residual
    """
    precision = check_precision(precision or working_precision())
    rows = []
    for family in ('s', 'a', 'b', 'alpha'):
        for n in n_values:
            lead = asymptotic_value('{}_lead'.format(family), n, precision)
            refined = asymptotic_value('{}_refined'.format(family), n, precision)
            rows.append({
                'kind': family,
                'n': n,
                'value': str(exact_value(family, n)),
                'lead_formula': format_decimal(lead, digits),
                'refined_formula': format_decimal(refined, digits),
                'ratio': format_decimal(asymptotic_ratio('{}_lead'.format(family), n, precision), digits),
                'scaled_residual': format_decimal(refined_residual(family, n, precision), digits),
            })
    return rows


# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
