# -*- coding: utf-8 -*-

"""
Longest alternating subsequences of random separable permutations:
exact counts, generating functions, asymptotics and Monte Carlo.
"""

__title__ = 'seplas'
__author__ = 'Joseph Wegner'
__version__ = '0.1.0'
__license__ = 'GPLv3'
__copyright__ = 'Copyright 2018 Joseph Wegner'

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
