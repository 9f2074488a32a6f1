# -*- coding: utf-8 -*-

"""
seplas.series

Exact truncated power series over the rationals, the generating
functions of the first and second moments of typed longest alternating
subsequences, and coefficientwise checks of the algebraic identities
relating them.

Every series in the catalog is a function of t and X = sqrt(t^2 - 6t + 1).
"""

import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd

from .exceptions import CapacityError, DomainError
from .schroder import coeff_sequence
from .utils import format_decimal, format_rational, progress


DEFAULT_ORDER = 2048
SPARSE_TERMS = 8

CATALOG_NAMES = ('X', 'X_inv', 'X_inv3', 's', 'G_pm', 'G_mm', 'H_pm', 'H_mm')


def _lcm(a, b):
    return a // gcd(a, b) * b


class TruncatedSeries(object):
    """
    Power series c_0 + c_1 t + ... + c_N t^N, exact modulo t^(N+1).

    Coefficients are held as integer numerators over one positive common
    denominator, reduced so the representation is canonical.
    """

    __slots__ = ('nums', 'den', 'order')


    def __init__(self, nums, den=1, order=None):
        if order is None:
            order = len(nums) - 1
        nums = list(nums[:order + 1])
        nums.extend([0] * (order + 1 - len(nums)))
        if den < 0:
            nums = [-v for v in nums]
            den = -den

        g = den
        for v in nums:
            if g == 1:
                break
            g = gcd(g, v)
        if g > 1:
            nums = [v // g for v in nums]
            den //= g

        self.nums = nums
        self.den = den
        self.order = order


    @classmethod
    def from_fractions(cls, coeffs, order=None):
        """
        :param coeffs: int or Fraction coefficients from t^0 upwards
        :param int order: truncation order, defaults to len(coeffs) - 1
        :return: TruncatedSeries
        """
        coeffs = [Fraction(c) for c in coeffs]
        den = reduce(_lcm, (c.denominator for c in coeffs), 1)
        nums = [c.numerator * (den // c.denominator) for c in coeffs]
        return cls(nums, den, order)

    polynomial = from_fractions


    @classmethod
    def constant(cls, value, order):
        return cls.from_fractions([value], order)


    @classmethod
    def variable(cls, order):
        return cls.from_fractions([0, 1], order)


    def __getitem__(self, k):
        return Fraction(self.nums[k], self.den)


    def __len__(self):
        return self.order + 1


    def coefficients(self):
        return [Fraction(v, self.den) for v in self.nums]


    def at_order(self, order):
        """
        Truncate, or pad with zero coefficients, to the given order.
        """
        return TruncatedSeries(self.nums, self.den, order)


    def support(self):
        return [(k, v) for k, v in enumerate(self.nums) if v]


    def is_sparse(self):
        count = 0
        for v in self.nums:
            if v:
                count += 1
                if count > SPARSE_TERMS:
                    return False
        return True


    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order)
        return None


    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        order = min(self.order, other.order)
        den = _lcm(self.den, other.den)
        fa = den // self.den
        fb = den // other.den
        nums = [a * fa + b * fb for a, b in zip(self.nums[:order + 1], other.nums[:order + 1])]
        return TruncatedSeries(nums, den, order)

    __radd__ = __add__


    def __neg__(self):
        return TruncatedSeries([-v for v in self.nums], self.den, self.order)


    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)


    def __rsub__(self, other):
        return (-self) + other


    def scale(self, value):
        value = Fraction(value)
        return TruncatedSeries([v * value.numerator for v in self.nums],
                               self.den * value.denominator, self.order)


    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented

        order = min(self.order, other.order)
        a = self.nums[:order + 1]
        b = other.nums[:order + 1]
        if other.is_sparse():
            nums = _sparse_product(a, other.support(), order)
        elif self.is_sparse():
            nums = _sparse_product(b, self.support(), order)
        else:
            nums = [sum(map(operator.mul, a[:k + 1], b[k::-1])) for k in range(order + 1)]
        return TruncatedSeries(nums, self.den * other.den, order)

    __rmul__ = __mul__


    def __truediv__(self, other):
        """
        Division by a scalar or by a unit series. Sparse divisors use the
        linear recurrence of the quotient, others the Newton inverse.
        """
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DomainError('Division of a series by zero')
            return self.scale(Fraction(1) / Fraction(other))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if not other.nums[0]:
            raise DomainError('Divisor series has zero constant term')

        order = min(self.order, other.order)
        if not other.is_sparse():
            return self * series_inverse(other.at_order(order))

        terms = [(k, Fraction(v, other.den)) for k, v in other.support() if k and k <= order]
        lead = Fraction(other.nums[0], other.den)
        quotient = []
        for k in range(order + 1):
            value = Fraction(self.nums[k], self.den)
            for i, p in terms:
                if i > k:
                    break
                value -= p * quotient[k - i]
            quotient.append(value / lead)
        return TruncatedSeries.from_fractions(quotient, order)


    def shift(self, k):
        """
        Multiply by t^k, keeping the order.
        """
        return TruncatedSeries([0] * k + self.nums[:self.order + 1 - k], self.den, self.order)


    def first_difference(self, other):
        """
        :param TruncatedSeries other: series to compare with
        :return: lowest index where the coefficients differ, None if they
                 agree up to the smaller order
        """
        order = min(self.order, other.order)
        for k in range(order + 1):
            if self.nums[k] * other.den != other.nums[k] * self.den:
                return k
        return None


    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.first_difference(other) is None


    def __hash__(self):
        return hash((tuple(self.nums), self.den, self.order))


    def __repr__(self):
        head = ', '.join(format_rational(c) for c in self.coefficients()[:6])
        return 'TruncatedSeries([{}{}], order={})'.format(
            head, ', ...' if self.order > 5 else '', self.order)


def _sparse_product(dense, support, order):
    out = [0] * (order + 1)
    for i, p in support:
        if i > order:
            break
        for k in range(i, order + 1):
            out[k] += p * dense[k - i]
    return out


def _newton_orders(order):
    # k + 1 correct terms need (k + 1) / 2 rounded up from the previous step
    orders = []
    k = order
    while k > 0:
        orders.append(k)
        k //= 2
    return reversed(orders)


def series_inverse(f):
    """
    Multiplicative inverse by Newton iteration, g <- g (2 - f g), doubling
    the number of correct terms each step.

    :param TruncatedSeries f: series with nonzero constant term
    :raises DomainError: constant term is zero
    :return: TruncatedSeries g with f g = 1 modulo t^(N+1)
    """
    if not f.nums[0]:
        raise DomainError('Series inverse needs a nonzero constant term')
    if f.is_sparse():
        return TruncatedSeries.constant(1, f.order) / f

    g = TruncatedSeries.constant(Fraction(f.den, f.nums[0]), 0)
    for k in _newton_orders(f.order):
        fk = f.at_order(k)
        gk = g.at_order(k)
        g = gk * (2 - fk * gk)
    return g


def series_inverse_sqrt(f):
    """
    The branch of f^(-1/2) with constant term 1, by the Newton step
    h <- h + h (1 - f h^2) / 2.

    :param TruncatedSeries f: series with constant term 1
    :raises DomainError: constant term is not 1
    :return: TruncatedSeries
    """
    if f[0] != 1:
        raise DomainError('Series square root needs constant term 1, got {}'.format(
            format_rational(f[0])))

    h = TruncatedSeries.constant(1, 0)
    for k in _newton_orders(f.order):
        fk = f.at_order(k)
        hk = h.at_order(k)
        h = hk + (hk * (1 - fk * (hk * hk))).scale(Fraction(1, 2))
    return h


def series_sqrt(f):
    """
    The branch of f^(1/2) with constant term 1, formed as f * f^(-1/2).

    :param TruncatedSeries f: series with constant term 1
    :raises DomainError: constant term is not 1
    :return: TruncatedSeries g with g g = f modulo t^(N+1)
    """
    return f * series_inverse_sqrt(f)


def _poly(coeffs, order):
    return TruncatedSeries.polynomial(coeffs, order)


def _printed_h_pm(order, t, X_inv, X_inv3, X):
    """
    H^{+,-} exactly as printed in its closed form, with the X coefficient
    1/2 t^2 (1 - t).
    """
    one_minus_t = 1 - t
    shift = _poly([0, -3, 8, -5], order) / (t - 3)
    return (2 * (t * t * one_minus_t * one_minus_t) * X_inv3
            + shift * X_inv
            + (t * t * one_minus_t).scale(Fraction(1, 2)) * X
            - (t * t * one_minus_t).scale(Fraction(1, 2)))


def _printed_h_mm(order, t, X_inv, X, quad, h_pm_printed):
    """
    H^{-,-} read literally from its printed closed form, taking the
    garbled factor as (t^2 - 6t + 1).
    """
    one_minus_t = 1 - t
    half = Fraction(1, 2)
    return (h_pm_printed
            - _poly([0, -3, 8, -5], order) / (t - 3)
            - (t * t * one_minus_t * quad).scale(half)
            + (t * t * one_minus_t).scale(half) * X
            + (t * one_minus_t).scale(half)
            - (t * quad).scale(half)
            + 2 * (t * t * one_minus_t) * X_inv)


_CATALOGS = {}


def build_catalog(N=DEFAULT_ORDER, verbose=False):
    """
    Generating functions of s_n times the first and second conditional
    moments of the typed lengths, to order N.

    X and 1/X come from a Newton square root of t^2 - 6t + 1. G_pm and
    H_pm use their closed forms, G_mm and H_mm the relations
    G_mm = (2s + t) G_pm + t s and
    H_mm = (2s + t) H_pm + t s + 2t G_pm + 2 G_pm^2.

    :param int N: order, N >= 4
    :param bool verbose: enable verbosity
    :raises DomainError: N < 4
    :return: dict name -> TruncatedSeries, cached per order
    """
    if N < 4:
        raise DomainError('Catalog order must be at least 4, got {}'.format(N))
    if N in _CATALOGS:
        return _CATALOGS[N]

    progress(verbose, 'Building series catalog to order {}...', N)
    t = TruncatedSeries.variable(N)
    quad = _poly([1, -6, 1], N)
    one_minus_t = 1 - t

    X_inv = series_inverse_sqrt(quad)
    X = quad * X_inv
    progress(verbose, '  X = sqrt(t^2 - 6t + 1) done')

    s = (1 - t - X).scale(Fraction(1, 2))
    G_pm = (t * one_minus_t) * X_inv
    G_mm = (2 * s + t) * G_pm + t * s
    progress(verbose, '  first moments done')

    X_inv3 = X_inv * series_inverse(quad)
    # -5t^3 + 8t^2 - 3t and t^2 (1 - t) / 2, each over t - 3
    H_pm = (2 * (t * t * one_minus_t * one_minus_t) * X_inv3
            + (_poly([0, -3, 8, -5], N) * X_inv) / (t - 3)
            + ((t * t * one_minus_t).scale(Fraction(1, 2)) * X) / (t - 3)
            - (t * t * one_minus_t).scale(Fraction(1, 2)))
    H_mm = (2 * s + t) * H_pm + t * s + 2 * t * G_pm + 2 * (t * t * one_minus_t * one_minus_t) / quad
    progress(verbose, '  second moments done')

    catalog = {
        'X': X,
        'X_inv': X_inv,
        'X_inv3': X_inv3,
        's': s,
        'G_pm': G_pm,
        'G_mm': G_mm,
        'H_pm': H_pm,
        'H_mm': H_mm,
    }
    _CATALOGS[N] = catalog
    return catalog


@dataclass(frozen=True)
class ExactMoments(object):
    """
    Exact moments of A^{+,-} and conditional moments of A^{-,-} read off
    the catalog coefficients.

    The unconditional means of all four flavors coincide; translation is
    the gap c_mm - mean_pm of the conditional (-,-) mean, equal to s_{n-1} / s_n
    for n >= 3 and tending to 3 - 2 sqrt(2).
    """
    n: int
    mean_pm: Fraction
    c_mm: Fraction
    secmom_pm: Fraction
    C_mm: Fraction
    var_pm: Fraction
    var_mm: Fraction
    translation: Fraction


    def to_dict(self, digits=30):
        out = {'n': self.n}
        for name in ('mean_pm', 'c_mm', 'secmom_pm', 'C_mm', 'var_pm', 'var_mm',
                     'translation'):
            value = getattr(self, name)
            out[name] = format_rational(value)
            out[name + '_decimal'] = format_decimal(value, digits)
        return out


def exact_moments(n, catalog):
    """
    :param int n: length, 1 <= n <= catalog order
    :param dict catalog: result of build_catalog
    :raises DomainError: n < 1
    :raises CapacityError: n above the catalog order
    :return: ExactMoments
    """
    order = catalog['s'].order
    if n < 1:
        raise DomainError('Length must be positive, got {}'.format(n))
    if n > order:
        raise CapacityError('Length {} exceeds catalog order {}'.format(n, order))

    s_n = catalog['s'][n]
    mean_pm = catalog['G_pm'][n] / s_n
    c_mm = catalog['G_mm'][n] / s_n
    secmom_pm = catalog['H_pm'][n] / s_n
    C_mm = catalog['H_mm'][n] / s_n
    return ExactMoments(
        n=n,
        mean_pm=mean_pm,
        c_mm=c_mm,
        secmom_pm=secmom_pm,
        C_mm=C_mm,
        var_pm=secmom_pm - mean_pm ** 2,
        var_mm=C_mm - c_mm ** 2,
        translation=c_mm - mean_pm,
    )


def _check(identity, order, lhs, rhs):
    index = lhs.first_difference(rhs)
    return {
        'identity': identity,
        'order': order,
        'status': 'pass' if index is None else 'fail',
        'first_difference': index,
    }


def _compare(identity, order, lhs, rhs):
    index = lhs.first_difference(rhs)
    return {
        'identity': identity,
        'order': order,
        'status': 'agree' if index is None else 'differ',
        'first_difference': index,
    }


def verify_identities(N, verbose=False):
    """
    Check the generating function identities coefficientwise to order N.
    Denominators are cleared by multiplication; only units are divided by.

    Rows with status 'agree' or 'differ' compare the printed closed forms
    of H_pm and H_mm with the catalog; they report, and never fail.

    :param int N: order, N >= 16
    :param bool verbose: enable verbosity
    :raises DomainError: N < 16
    :return: list of dicts with keys identity, order, status, first_difference
    """
    if N < 16:
        raise DomainError('Identity checks need order >= 16, got {}'.format(N))

    catalog = build_catalog(N, verbose=verbose)
    X, X_inv, X_inv3 = catalog['X'], catalog['X_inv'], catalog['X_inv3']
    s, G_pm, G_mm = catalog['s'], catalog['G_pm'], catalog['G_mm']
    H_pm, H_mm = catalog['H_pm'], catalog['H_mm']

    progress(verbose, 'Checking identities to order {}...', N)
    t = TruncatedSeries.variable(N)
    one_minus_t = 1 - t
    quad = _poly([1, -6, 1], N)
    Y = t - 3
    half = Fraction(1, 2)
    denominator = 1 - t - s - 2 * s * s - t * s
    rows = []

    rows.append(_check('X^2=quad', N, X * X, quad))
    rows.append(_check('2s+t=1-X', N, 2 * s + t, 1 - X))
    rows.append(_check('s^2', N, 2 * s * s, t * t - 4 * t + 1 - one_minus_t * X))
    rows.append(_check('denomG+-', N, 2 * denominator, -(quad + Y * X)))
    rows.append(_check('numeratorG+-', N, 2 * (s * s + 1), 3 - 4 * t + t * t - one_minus_t * X))
    rows.append(_check('G+-', N, G_pm * denominator, t * (1 + s * s)))
    rows.append(_check('Ggenmeanform+-', N, G_pm * X, t * one_minus_t))
    rows.append(_check('simplificationG+-', N,
                       t * (-3 + 4 * t - t * t + one_minus_t * X) * X,
                       t * one_minus_t * (quad + Y * X)))
    rows.append(_check('genfuncequa--', N, G_mm - 4 * t * t,
                       2 * t * (s - t) + 2 * t * (G_pm - t) + 2 * G_pm * s - t * s - t * G_pm))
    rows.append(_check('genfuncequa+-', N, G_pm - 2 * t * t - t,
                       2 * t * (G_pm - t) + G_mm * s + G_pm * s - t * G_pm))
    rows.append(_check('Ggenmeanform--', N, G_mm * X,
                       t * one_minus_t - (t * one_minus_t).scale(half) * X - (t * quad).scale(half)))
    rows.append(_check('G--minusG+-', N, G_mm - G_pm, t * s - t + t * t))

    a = coeff_sequence('a', N)
    differences = [n for n in range(2, N + 1) if G_pm[n] != a[n - 1] - a[n - 2]]
    rows.append({
        'identity': 'anan-1',
        'order': N,
        'status': 'pass' if not differences else 'fail',
        'first_difference': differences[0] if differences else None,
    })

    numerator = t + t * s * s + 2 * G_mm * G_pm + 2 * t * s * G_pm + 2 * s * G_pm * G_pm
    rows.append(_check('H+-', N, H_pm * denominator, numerator))

    cubic = _poly([0, Fraction(3, 2), -4, Fraction(5, 2)], N)
    lhs = numerator * quad * X
    rhs = (cubic * quad * X
           - (t * one_minus_t).scale(half) * quad * quad
           - t * t * one_minus_t * one_minus_t * quad
           - t * t * one_minus_t * one_minus_t * Y * X)
    rows.append(_check('numeratorH+-', N, lhs, rhs))

    rows.append(_check('XY', N, 8 * Y * X, (X * X + Y * X) * (8 - Y * X + X * X)))
    rows.append(_check('Hgenfuncequa+-', N, H_pm - 2 * t * t - t,
                       2 * t * (H_pm - t) + s * H_mm + s * H_pm - t * H_pm + 2 * G_mm * G_pm))
    rows.append(_check('Hgenfuncequa--', N, H_mm - 8 * t * t,
                       2 * t * (s - t) + 4 * t * (G_pm - t) + 2 * t * (H_pm - t)
                       + 2 * s * H_pm - t * s - t * H_pm + 2 * G_pm * G_pm - 2 * t * G_pm))

    shift = _poly([0, -3, 8, -5], N)
    lhs = Y * X * H_mm
    rhs = (Y * X * H_pm
           - shift * X
           - (t * t * one_minus_t).scale(half) * quad * X
           + (t * t * one_minus_t * Y).scale(half) * quad
           + (t * one_minus_t * Y).scale(half) * X
           - (t * Y).scale(half) * quad
           + 2 * t * t * one_minus_t * Y)
    rows.append(_check('Hgenvarform--corrected', N, lhs, rhs))

    for name in ('s', 'G_pm', 'G_mm', 'H_pm', 'H_mm'):
        rows.append({
            'identity': 'integral[{}]'.format(name),
            'order': N,
            'status': 'pass' if catalog[name].den == 1 else 'fail',
            'first_difference': None,
        })

    printed_pm = _printed_h_pm(N, t, X_inv, X_inv3, X)
    rows.append(_compare('Hgenvarform+-printed', N, printed_pm, H_pm))
    rows.append(_compare('Hgenvarform--printed', N,
                         _printed_h_mm(N, t, X_inv, X, quad, printed_pm), H_mm))

    failed = [row['identity'] for row in rows if row['status'] == 'fail']
    progress(verbose, 'Order {}: {} identities, {} failed', N, len(rows), len(failed))
    return rows


def report_passed(rows):
    return all(row['status'] != 'fail' for row in rows)


# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
