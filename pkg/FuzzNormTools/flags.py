#! /usr/bin/env python
"""
Flag and verdict constants for use by FuzzNormTools.
"""

__author__ = "FuzzNorm developers"

# Flags for alpha-cut cells
DEGENERATE = 1  #  1  N(x,t) > alpha for every t > 0

# Verdicts for check reports
PASS = 'pass'
FAIL = 'fail'
INCONCLUSIVE = 'inconclusive'

# Probe classifications
CONTINUOUS = 'continuous'
JUMP = 'jump'


def flag_name(flag):
    """
    Convert a cell flag into the word used in CSV output.

    Parameters
    ----------
    flag : int
        Bitwise combination of the cell flags.

    Returns
    -------
    name : str
        'degenerate' or 'ok'.
    """
    if flag & DEGENERATE:
        return 'degenerate'
    return 'ok'
