#! /usr/bin/env python
"""
Test tables.py
"""
from __future__ import print_function

__author__ = 'FuzzNorm developers'

from FuzzNormTools import tables
from FuzzNormTools import flags
from FuzzNormTools.correspondence import norm_from_generator
from FuzzNormTools.decomposition import decompose_table
from FuzzNormTools.generators import make_generator
from FuzzNormTools.verification import CheckReport
import json
import numpy as np
import os
from numpy.testing import assert_raises, assert_array_equal

import logging
logging.basicConfig(format="%(module)s:%(levelname)s %(message)s")
log = logging.getLogger("FuzzNorm")
log.setLevel(logging.INFO)


def write_text(filename, text):
    with open(filename, 'w') as f:
        f.write(text)


def test_load_spec():
    """Test reading spec files"""
    fname = 'dlme_spec.json'
    with open(fname, 'w') as f:
        json.dump({'dim': 2, 'label': 'euclid', 'generator': {'kind': 'standard', 'p': 2}}, f)
    gen, label = tables.load_spec(fname)
    if not (gen.kind == 'standard' and gen.dim == 2 and label == 'euclid'):
        raise AssertionError("spec not read correctly")

    with open(fname, 'w') as f:
        json.dump({'generator': {'kind': 'indicator', 'r': 3}}, f)
    gen, label = tables.load_spec(fname)
    if not (gen.radius == 3 and gen.dim == 1 and label == 'dlme_spec'):
        raise AssertionError("label should default to the file name")

    for bad in ['{"dim": 2, "generator": ', '[1, 2]', '{"dim": 2}',
                '{"generator": {"kind": "shifted", "beta": 1.5}}',
                '{"dim": 2, "generator": {"kind": "standard", "weights": [1, 2, 3]}}']:
        write_text(fname, bad)
        assert_raises(tables.FormatError, tables.load_spec, fname)
    os.remove(fname)
    assert_raises(IOError, tables.load_spec, fname)


def test_points():
    """Test writing and reading points files"""
    fname = 'dlme_points.csv'
    pts = np.random.default_rng(9).uniform(-10, 10, size=(20, 3))
    tables.write_points(fname, pts)
    back = tables.load_points(fname, 3)
    assert_array_equal(back, pts)
    assert_raises(tables.FormatError, tables.load_points, fname, 2)

    write_text(fname, "y1,y2\n1,2\n")
    assert_raises(tables.FormatError, tables.load_points, fname)
    write_text(fname, "x1,x2\n1,cat\n")
    assert_raises(tables.FormatError, tables.load_points, fname)
    write_text(fname, "x1,x2\n1,\n")
    assert_raises(tables.FormatError, tables.load_points, fname)
    write_text(fname, "x1\n1\n2\n")
    assert_array_equal(tables.load_points(fname), [[1], [2]])
    os.remove(fname)


def test_alpha_table():
    """Test the layout of the alpha-cut CSV"""
    fname = 'dlme_alpha.csv'
    norm = norm_from_generator(make_generator({'kind': 'shifted', 'beta': 0.5}))
    table = decompose_table(norm, [0.25, 0.75], [[1.], [2.], [3.]])
    t = tables.alpha_table(table)
    if not t.colnames == ['alpha', 'point_index', 'p_alpha', 'flag']:
        raise AssertionError("wrong columns {0}".format(t.colnames))
    assert_array_equal(t['alpha'], [0.25, 0.25, 0.25, 0.75, 0.75, 0.75])
    assert_array_equal(t['point_index'], [0, 1, 2, 0, 1, 2])
    if not list(t['flag']) == ['degenerate'] * 3 + ['ok'] * 3:
        raise AssertionError("wrong flags {0}".format(list(t['flag'])))

    tables.write_csv(t, fname)
    back = tables.read_csv(fname)
    assert_array_equal(back['p_alpha'], table.values.ravel())
    with open(fname) as f:
        first = f.readline().strip()
    if not first == 'alpha,point_index,p_alpha,flag':
        raise AssertionError("header is '{0}'".format(first))
    os.remove(fname)


def test_report_table():
    """Test that JSON witnesses survive the CSV round trip"""
    fname = 'dlme_report.csv'
    reports = [CheckReport('N1', flags.PASS, None, 10, 7),
               CheckReport('N6', flags.FAIL, {'x': np.array([0.1, 1. / 3]), 't': 1e-300,
                                              'reason': 'N(x,t) > 0, "quoted"'}, 5, 7),
               CheckReport('ascending', flags.PASS, None, 4, None)]
    t = tables.report_table(reports)
    if not list(t['seed']) == [7, 7, -1]:
        raise AssertionError("missing seed should be -1")
    tables.write_csv(t, fname)
    back = tables.read_csv(fname)
    w = json.loads(str(back['witness'][1]))
    if not (w['x'] == [0.1, 1. / 3] and w['t'] == 1e-300):
        raise AssertionError("witness did not survive: {0}".format(w))
    if not list(back['verdict']) == ['pass', 'fail', 'pass']:
        raise AssertionError("verdicts did not survive")
    os.remove(fname)

    if not len(tables.report_table([])) == 0:
        raise AssertionError("empty report table should have no rows")


def test_curve_table():
    """Test that reals are written with enough digits to read back exactly"""
    fname = 'dlme_curve.csv'
    grid = np.linspace(0, 1, 7)
    values = grid / (1 + grid)
    tables.write_csv(tables.curve_table(grid, values), fname)
    back = tables.read_csv(fname)
    assert_array_equal(back['t'], grid)
    assert_array_equal(back['value'], values)
    os.remove(fname)


if __name__ == "__main__":
    # introspect and run all the functions starting with 'test'
    for f in dir():
        if f.startswith('test'):
            print(f)
            globals()[f]()
