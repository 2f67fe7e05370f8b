#! /usr/bin/env python
"""
Module for reading and writing norm spec files, points files, and CSV tables
"""

from __future__ import print_function

__author__ = "FuzzNorm developers"

import json
import os

import numpy as np

# input/output table formats
from astropy.table.table import Table
from astropy.io import ascii

from .generators import make_generator, GeneratorError, DimensionError
from .flags import flag_name

# join the FuzzNorm logger
import logging
log = logging.getLogger('FuzzNorm')

REAL_FORMAT = '%.17g'


class FormatError(ValueError):
    """A spec, points, or table file that cannot be interpreted."""
    pass


def load_spec(filename):
    """
    Load a norm spec file.

    A spec file is a JSON object with the keys "dim" (int), "generator" (a
    generator description, see :func:`FuzzNormTools.generators.make_generator`),
    and optionally "label" (str).

    Parameters
    ----------
    filename : str
        File to read.

    Returns
    -------
    gen : :class:`FuzzNormTools.generators.Generator`
        The validated generator.

    label : str
        The label, or the file name without extension if none is given.

    Raises
    ------
    FormatError
        If the file is not JSON or the generator description is invalid.
    """
    log.info("Reading spec {0}".format(filename))
    try:
        with open(filename, 'r') as f:
            spec = json.load(f)
    except ValueError as e:
        log.error("{0} is not valid JSON".format(filename))
        raise FormatError("Cannot parse {0}: {1}".format(filename, e))
    if not isinstance(spec, dict) or 'generator' not in spec:
        raise FormatError("{0} must hold an object with a 'generator' key".format(filename))
    dim = spec.get('dim', None)
    label = spec.get('label', os.path.splitext(os.path.basename(filename))[0])
    try:
        gen = make_generator(spec['generator'], dim)
    except (GeneratorError, DimensionError) as e:
        log.error("Invalid generator in {0}".format(filename))
        raise FormatError("{0}: {1}".format(filename, e))
    return gen, label


def load_points(filename, dim=None):
    """
    Load a points file: CSV with header x1,...,xd and one vector per row.

    Parameters
    ----------
    filename : str
        File to read.

    dim : int
        Expected dimension. Default = None means take it from the header.

    Returns
    -------
    points : numpy.ndarray
        Shape (n, dim).

    Raises
    ------
    FormatError
        For a missing or misnamed column, the wrong dimension, or non-finite cells.
    """
    log.info("Reading points {0}".format(filename))
    try:
        t = ascii.read(filename, format='csv', fast_reader=False)
    except Exception as e:
        log.error("Points file {0} not loaded".format(filename))
        raise FormatError("Cannot parse {0}: {1}".format(filename, e))
    names = ['x{0}'.format(i + 1) for i in range(len(t.colnames))]
    if t.colnames != names:
        raise FormatError("Points file header must be {0}, not {1}".format(','.join(names), ','.join(t.colnames)))
    if dim is not None and len(names) != dim:
        raise FormatError("Points file has {0} columns but the norm has dimension {1}".format(len(names), dim))
    try:
        points = np.array([np.asarray(t[n], dtype=np.float64) for n in names]).T
    except (TypeError, ValueError):
        raise FormatError("Points file {0} has cells that are not numbers".format(filename))
    if np.ma.is_masked(t.as_array()) or not np.all(np.isfinite(points)):
        raise FormatError("Points file {0} has empty or non-finite cells".format(filename))
    return points.reshape(-1, len(names))


def write_points(filename, points):
    """
    Write a points file with header x1,...,xd.

    Parameters
    ----------
    filename : str
        Destination.

    points : array-like
        Shape (n, dim).
    """
    points = np.atleast_2d(np.asarray(points, dtype=np.float64))
    t = Table([points[:, i] for i in range(points.shape[1])],
              names=['x{0}'.format(i + 1) for i in range(points.shape[1])])
    write_csv(t, filename)


def alpha_table(table):
    """
    Convert an alpha-cut table into rows of alpha, point_index, p_alpha, flag (alpha-major).

    Parameters
    ----------
    table : :class:`FuzzNormTools.decomposition.AlphaCutTable`

    Returns
    -------
    t : astropy.table.Table
    """
    na, npts = table.values.shape
    alpha = np.repeat(table.alphas, npts)
    index = np.tile(np.arange(npts), na)
    flag = [flag_name(f) for f in table.flags.ravel()]
    return Table([alpha, index, table.values.ravel(), flag], names=['alpha', 'point_index', 'p_alpha', 'flag'])


def curve_table(t_grid, values):
    """
    Rows of t, value for a sampled t-curve.

    Returns
    -------
    t : astropy.table.Table
    """
    return Table([np.asarray(t_grid, dtype=np.float64), np.asarray(values, dtype=np.float64)],
                 names=['t', 'value'])


def report_table(reports):
    """
    Convert check reports into rows of axiom, verdict, samples_used, seed, witness.

    The witness column holds a JSON object with sorted keys, or is empty.

    Parameters
    ----------
    reports : list
        A list of :class:`FuzzNormTools.verification.CheckReport`.

    Returns
    -------
    t : astropy.table.Table
    """
    names = ['axiom', 'verdict', 'samples_used', 'seed', 'witness']
    if not reports:
        return Table(names=names, dtype=[str, str, np.int64, np.int64, str])
    # a missing seed is written as -1
    seeds = [-1 if r.seed is None else int(r.seed) for r in reports]
    seed_type = np.uint64 if max(seeds) >= 2 ** 63 and min(seeds) >= 0 else np.int64
    return Table([[r.axiom for r in reports],
                  [r.verdict for r in reports],
                  np.array([r.samples_used for r in reports], dtype=np.int64),
                  np.array(seeds, dtype=seed_type),
                  [r.witness_json() for r in reports]],
                 names=names)


def write_csv(table, filename):
    """
    Write a table as CSV, with reals printed to 17 significant digits, and read it back.

    Parameters
    ----------
    table : astropy.table.Table
        The table.

    filename : str
        Destination.

    Raises
    ------
    FormatError
        If the file does not read back to the same content.
    """
    formats = dict((n, REAL_FORMAT) for n in table.colnames if table[n].dtype.kind == 'f')
    ascii.write(table, filename, format='csv', formats=formats, overwrite=True)
    log.info("Wrote {0}".format(filename))
    verify_csv(table, filename)


def read_csv(filename):
    """
    Read a CSV table written by :func:`FuzzNormTools.tables.write_csv`.

    Returns
    -------
    t : astropy.table.Table
    """
    return ascii.read(filename, format='csv', fast_reader=False)


def _cells(column):
    """The cells of a column, with masked cells as empty strings"""
    out = []
    for v in column:
        if v is np.ma.masked:
            out.append('')
        else:
            out.append(v)
    return out


def verify_csv(table, filename):
    """
    Check that a written CSV file reads back to the given table.

    Raises
    ------
    FormatError
        On a mismatch in columns, row count, or any cell.
    """
    back = read_csv(filename)
    if back.colnames != table.colnames or len(back) != len(table):
        log.error("{0} did not read back".format(filename))
        raise FormatError("{0} does not read back to the table that was written".format(filename))
    for name in table.colnames:
        if table[name].dtype.kind in 'fiu':
            if not np.array_equal(np.asarray(back[name], dtype=np.float64),
                                  np.asarray(table[name], dtype=np.float64)):
                raise FormatError("Column {0} of {1} does not read back".format(name, filename))
        elif [str(v) for v in _cells(back[name])] != [str(v) for v in table[name]]:
            raise FormatError("Column {0} of {1} does not read back".format(name, filename))
    log.debug("{0} read back".format(filename))
