#! /usr/bin/env python
"""
Test correspondence.py
"""
from __future__ import print_function

__author__ = 'FuzzNorm developers'

from FuzzNormTools import correspondence as cor
from FuzzNormTools.generators import make_generator, DimensionError
import numpy as np
from numpy.testing import assert_raises, assert_almost_equal, assert_array_equal

import logging
logging.basicConfig(format="%(module)s:%(levelname)s %(message)s")
log = logging.getLogger("FuzzNorm")
log.setLevel(logging.INFO)


def test_norm_from_generator():
    """Test the induced fuzzy norm"""
    norm = cor.norm_from_generator(make_generator({'kind': 'standard', 'dim': 2}))
    assert_almost_equal(cor.eval_norm(norm, [3, 4], 5), 0.5)
    if not norm([0, 0], 7) == 1:
        raise AssertionError("N(0, t) != 1")
    if not norm([3, 4], 0) == 0:
        raise AssertionError("N(x, 0) != 0")
    if not norm([0, 0], 0) == 0:
        raise AssertionError("N(0, 0) != 0")
    if not norm.checked or not norm.member:
        raise AssertionError("a checked norm should be flagged as such")

    expo = cor.norm_from_generator(make_generator({'kind': 'exponential'}))
    assert_almost_equal(expo(2, 1), np.exp(-2))

    vals = norm([[0, 0], [3, 4]], 5)
    assert_almost_equal(vals, [1, 0.5])
    if not np.all(norm([[0, 0], [3, 4]], 0) == 0):
        raise AssertionError("N(x, 0) != 0 for a stack")


def test_bad_t():
    """Test that t must be finite and non-negative"""
    norm = cor.norm_from_generator(make_generator({'kind': 'standard'}))
    assert_raises(ValueError, cor.eval_norm, norm, 1, -1)
    assert_raises(ValueError, cor.eval_norm, norm, 1, np.nan)
    assert_raises(ValueError, cor.eval_norm, norm, 1, np.inf)
    assert_raises(ValueError, cor.eval_norm, norm, 1, 'one')
    assert_raises(DimensionError, cor.eval_norm, norm, [1, 1], 1)


def test_membership():
    """Test that the cosine control is only wrapped on request"""
    cosine = make_generator({'kind': 'cosine_control'})
    assert_raises(cor.MembershipError, cor.norm_from_generator, cosine)
    norm = cor.norm_from_generator(cosine, checked=False)
    if norm.checked or norm.member:
        raise AssertionError("an unchecked cosine norm should not be flagged as a member")
    if not norm(0, 1) == 1:
        raise AssertionError("cosine N(0, 1) != 1")

    # callables need a dimension
    assert_raises(DimensionError, cor.norm_from_generator, lambda x: 1., False)
    norm = cor.norm_from_generator(lambda x: 1., checked=False, dim=3)
    if not norm.dim == 3:
        raise AssertionError("dimension not taken from the argument")
    assert_raises(DimensionError, cor.norm_from_generator, make_generator({'kind': 'standard'}), True, 2)


def test_generator_from_norm():
    """Test that f_N agrees with f exactly"""
    for kind in ['standard', 'indicator', 'exponential', 'piecewise_linear', 'shifted']:
        g = make_generator({'kind': kind, 'dim': 2})
        view = cor.generator_from_norm(cor.norm_from_generator(g))
        pts = np.random.default_rng(2).uniform(-3, 3, size=(100, 2))
        assert_array_equal(view(pts), g(pts))
        if not view([0, 0]) == 1:
            raise AssertionError("{0}: f_N(0) != 1".format(kind))
        if not view.member or view.dim != 2:
            raise AssertionError("view should carry dim and membership")


def test_t_curve():
    """Test sampling of t -> N(x,t)"""
    std = cor.norm_from_generator(make_generator({'kind': 'standard'}))
    assert_almost_equal(cor.t_curve(std, 1, [0, 1, 3]), [0, 0.5, 0.75])

    ind = cor.norm_from_generator(make_generator({'kind': 'indicator', 'r': 1}))
    # the open ball gives 0 at t = ||x||
    assert_array_equal(cor.t_curve(ind, 1, [0.5, 1, 1.5]), [0, 0, 1])

    assert_raises(ValueError, cor.t_curve, std, 1, [1, 0.5])
    assert_raises(ValueError, cor.t_curve, std, 1, [1, 1])
    assert_raises(ValueError, cor.t_curve, std, 1, [-1, 1])
    assert_raises(DimensionError, cor.t_curve, std, [[1], [2]], [1, 2])


def test_t_curve_decreasing():
    """Test that a decreasing curve is reported"""
    cosine = cor.norm_from_generator(make_generator({'kind': 'cosine_control'}), checked=False)
    # x/t goes from 2pi (cos = 1) to pi (cos = -1)
    assert_raises(cor.CurveError, cor.t_curve, cosine, 1, [1. / (2 * np.pi), 1. / np.pi])


def test_plain_callable_stack():
    """Test that a plain callable is evaluated row by row on a stack"""
    def first_coordinate(x):
        return 1. / (1. + abs(x[0]))

    norm = cor.norm_from_generator(first_coordinate, checked=False, dim=2)
    vals = norm([[1, 5], [0, 0], [-3, 2]], 1)
    assert_almost_equal(vals, [0.5, 1, 0.25])
    vals = norm([[2, 0], [4, 1]], 2)
    assert_almost_equal(vals, [0.5, 1. / 3])
    assert_array_equal(norm([[2, 0], [4, 1]], 0), [0, 0])
    assert_almost_equal(norm([1, 5], 1), 0.5)


def test_level_set_contains():
    """Test the strict superlevel sets"""
    g = make_generator({'kind': 'standard', 'dim': 2})
    if not cor.level_set_contains(g, [1, 0], 0.4):
        raise AssertionError("f(1,0) = 0.5 > 0.4")
    if cor.level_set_contains(g, [1, 0], 0.5):
        raise AssertionError("the superlevel set is strict")
    inside = cor.level_set_contains(g, [[0, 0], [10, 0]], 0.5)
    assert_array_equal(inside, [True, False])


def test_roundtrip_check():
    """Test that both round trips are exact for every family"""
    pts = np.vstack([np.zeros((1, 2)), np.eye(2), -np.eye(2),
                     np.random.default_rng(3).uniform(-10, 10, size=(100, 2))])
    t_values = [0, 1e-3, 0.5, 1, 2, 1e3]
    for desc in [{'kind': 'standard'}, {'kind': 'indicator', 'r': 1}, {'kind': 'exponential'},
                 {'kind': 'piecewise_linear'}, {'kind': 'shifted', 'beta': 0.5},
                 {'kind': 'min_combination', 'children': [{'kind': 'standard'}, {'kind': 'piecewise_linear'}]},
                 {'kind': 'linear_precompose', 'inner': {'kind': 'standard'}, 'matrix': [[1, 2], [0, 1]]},
                 {'kind': 'cosine_control'}]:
        g = make_generator(desc, dim=2)
        n_checked, mismatches = cor.roundtrip_check(g, pts, t_values)
        if not n_checked == len(pts) * (1 + len(t_values)):
            raise AssertionError("wrong number of equalities checked")
        if mismatches:
            raise AssertionError("{0}: round trip failed at {1}".format(desc['kind'], mismatches[0]))


if __name__ == "__main__":
    # introspect and run all the functions starting with 'test'
    for f in dir():
        if f.startswith('test'):
            print(f)
            globals()[f]()
