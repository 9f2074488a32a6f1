# -*- coding: utf-8 -*-

"""
seplas.exceptions

This module contains all of the custom seplas exceptions
"""


class SeplasException(Exception):
    """Custom exception for seplas module"""


class DomainError(SeplasException):
    """Argument outside the mathematical domain of an operation"""


class CapacityError(SeplasException):
    """Request larger than a configured cap"""


# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
