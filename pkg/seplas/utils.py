# -*- coding: utf-8 -*-

"""
Utility functions used by other parts of the seplas module
"""

import os
import string
import sys
from fractions import Fraction

import mpmath

from .exceptions import DomainError, SeplasException


DEFAULT_ENUM_CAP = 10
DEFAULT_PRECISION = 256
MIN_PRECISION = 128
DEFAULT_DIGITS = 30


def env_int(name, default, minimum=None):
    """
    Read a non-negative integer setting from the environment.

    Acceptable values are plain decimal integers. An unset or empty
    variable yields the default.

    Examples:
        SEPLAS_ENUM_CAP=9 returns 9
        SEPLAS_ENUM_CAP unset returns the default

    :param str name: environment variable to read
    :param int default: value used when the variable is unset
    :param int minimum: optional lower bound for the value
    :raises SeplasException: value is not a non-negative integer or below minimum
    :return: integer value of the setting
    """
    raw = os.environ.get(name, '').strip()
    if not raw:
        return default

    if not all(c in string.digits for c in raw):
        raise SeplasException('Cannot convert {}={} to integer'.format(name, raw))
    value = int(raw)

    if minimum is not None and value < minimum:
        raise SeplasException(
            '{} must be at least {}, got {}'.format(name, minimum, value))
    return value


def enumeration_cap():
    """
    Largest n for which SEP(n) may be enumerated.

    :return: value of SEPLAS_ENUM_CAP, default 10
    """
    return env_int('SEPLAS_ENUM_CAP', DEFAULT_ENUM_CAP, minimum=1)


def working_precision():
    """
    Binary precision used for asymptotic evaluation.

    :return: value of SEPLAS_PRECISION in bits, default 256
    """
    return env_int('SEPLAS_PRECISION', DEFAULT_PRECISION, minimum=MIN_PRECISION)


def default_workers():
    """
    Default worker count for Monte Carlo runs.

    :return: value of SEPLAS_WORKERS, default 1
    """
    return env_int('SEPLAS_WORKERS', 1, minimum=1)


def check_precision(bits):
    """
    Validate a working precision.

    :param int bits: requested precision in bits
    :raises DomainError: fewer than 128 bits requested
    :return: the precision
    """
    if bits < MIN_PRECISION:
        raise DomainError(
            'Working precision must be at least {} bits, got {}'.format(MIN_PRECISION, bits))
    return bits


def format_rational(value):
    """
    Render an exact rational as 'p/q'.

    :param value: int or Fraction
    :return: string of the form p/q with q >= 1
    """
    value = Fraction(value)
    return '{}/{}'.format(value.numerator, value.denominator)


def format_decimal(value, digits=DEFAULT_DIGITS):
    """
    Render an exact rational or mpf with an explicit number of significant digits.

    :param value: int, Fraction or mpmath.mpf
    :param int digits: significant digits
    :return: decimal string
    """
    with mpmath.workdps(digits + 10):
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            number = mpmath.mpf(value.numerator) / value.denominator
        else:
            number = mpmath.mpf(value)
        return mpmath.nstr(number, digits, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)


def progress(verbose, message, *args):
    """
    Print a status line to standard error when verbose.

    :param bool verbose: enable verbosity
    :param str message: format string
    """
    if verbose:
        print(message.format(*args), file=sys.stderr)


# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
