#! /usr/bin/env python
"""
Test generators.py
"""
from __future__ import print_function

__author__ = 'FuzzNorm developers'

from FuzzNormTools import generators as gen
import numpy as np
from numpy.testing import assert_raises, assert_almost_equal, assert_array_equal

import logging
logging.basicConfig(format="%(module)s:%(levelname)s %(message)s")
log = logging.getLogger("FuzzNorm")
log.setLevel(logging.INFO)


def test_as_vector():
    """Test the conversion of scalars, vectors and stacks"""
    v = gen.as_vector(3)
    if not v.shape == (1,):
        raise AssertionError("scalar should become a vector of dim 1")
    v = gen.as_vector([[1, 2], [3, 4]], dim=2)
    if not v.shape == (2, 2):
        raise AssertionError("stack shape is wrong")
    if v.flags.writeable:
        raise AssertionError("vectors should be read-only")
    assert_raises(gen.DimensionError, gen.as_vector, [1, 2], 3)
    assert_raises(gen.DimensionError, gen.as_vector, [1, np.nan])
    assert_raises(gen.DimensionError, gen.as_vector, [np.inf])
    assert_raises(gen.DimensionError, gen.as_vector, np.zeros((2, 2, 2)))


def test_crisp_eval():
    """Test the p-norm examples"""
    if not gen.crisp_eval(gen.CrispNormSpec(2), [3, 4]) == 5:
        raise AssertionError("||(3,4)||_2 != 5")
    if not gen.crisp_eval(gen.CrispNormSpec('inf'), [-2, 1]) == 2:
        raise AssertionError("||(-2,1)||_inf != 2")
    if not gen.crisp_eval(gen.CrispNormSpec(1, weights=[2, 1]), [1, 1]) == 3:
        raise AssertionError("weighted 1-norm of (1,1) != 3")
    if not gen.crisp_eval(gen.CrispNormSpec(2), [0, 0]) == 0:
        raise AssertionError("||0|| != 0")
    vals = gen.crisp_eval(gen.CrispNormSpec(2), [[3, 4], [0, 1]])
    assert_array_equal(vals, [5, 1])
    # weights fix the dimension
    assert_raises(gen.DimensionError, gen.crisp_eval, gen.CrispNormSpec(1, weights=[2, 1]), [1, 1, 1])


def test_crisp_spec_errors():
    """Test that bad crisp norm parameters are rejected"""
    assert_raises(gen.GeneratorError, gen.CrispNormSpec, 0.5)
    assert_raises(gen.GeneratorError, gen.CrispNormSpec, 'banana')
    assert_raises(gen.GeneratorError, gen.CrispNormSpec, 2, [1, 0])
    assert_raises(gen.GeneratorError, gen.CrispNormSpec, 2, [1, -1])
    if not gen.CrispNormSpec(2) == gen.CrispNormSpec(2.):
        raise AssertionError("equal specs compare unequal")
    if gen.CrispNormSpec(2) == gen.CrispNormSpec(2, [1, 1]):
        raise AssertionError("weighted and unweighted specs compare equal")


def test_make_generator():
    """Test validation of generator descriptions"""
    g = gen.make_generator({'kind': 'standard', 'p': 2, 'dim': 3})
    if not (g.kind == 'standard' and g.dim == 3 and g.member):
        raise AssertionError("standard generator not built")
    g = gen.make_generator({'kind': 'min_combination', 'children': [{'kind': 'standard'},
                                                                    {'kind': 'exponential'}]})
    if not g.member or len(g.children) != 2:
        raise AssertionError("min_combination not built")
    # passing a generator through is allowed
    if gen.make_generator(g) is not g:
        raise AssertionError("Generator should be returned unchanged")

    bad = [{'kind': 'shifted', 'beta': 1.2},
           {'kind': 'shifted', 'beta': -0.1},
           {'kind': 'standard', 'p': 0.5},
           {'kind': 'indicator', 'r': 0},
           {'kind': 'indicator', 'r': np.inf},
           {'kind': 'min_combination', 'children': []},
           {'kind': 'linear_precompose', 'inner': {'kind': 'standard'}, 'matrix': [[1, 2], [2, 4]]},
           {'kind': 'linear_precompose', 'inner': {'kind': 'standard'}, 'matrix': [[1, 2, 3]]},
           {'kind': 'linear_precompose', 'inner': {'kind': 'standard'}},
           {'kind': 'min_combination', 'children': [{'kind': 'cosine_control'}]},
           {'kind': 'triangle'},
           'standard']
    for b in bad:
        assert_raises(gen.GeneratorError, gen.make_generator, b)

    assert_raises(gen.DimensionError, gen.make_generator, {'kind': 'standard', 'dim': 0})
    assert_raises(gen.DimensionError, gen.make_generator, {'kind': 'standard', 'dim': 2, 'weights': [1, 2, 3]})
    assert_raises(gen.DimensionError, gen.make_generator, {'kind': 'standard', 'dim': 2}, 3)


def test_cosine_control():
    """Test that the cosine control is built but flagged"""
    g = gen.make_generator({'kind': 'cosine_control'})
    if g.member:
        raise AssertionError("cosine_control must not be a member")
    if not g(0) == 1:
        raise AssertionError("cosine_control(0) != 1")
    # the midpoint of 0 and 2pi is pi, where cos is -1
    if not g(np.pi) == 0:
        raise AssertionError("cosine_control(pi) != 0")
    if not g(2 * np.pi) > 0.99:
        raise AssertionError("cosine_control(2pi) is not ~1")


def test_immutable():
    """Test that generators cannot be changed"""
    g = gen.make_generator({'kind': 'standard'})
    try:
        g.kind = 'indicator'
    except AttributeError:
        pass
    else:
        raise AssertionError("Generator attributes should be read-only")


def test_eval_generator():
    """Test the family formulas"""
    std = gen.make_generator({'kind': 'standard', 'dim': 2})
    if not gen.eval_generator(std, [0, 0]) == 1:
        raise AssertionError("standard(0) != 1")
    assert_almost_equal(std([3, 4]), 1. / 6)

    ind = gen.make_generator({'kind': 'indicator', 'r': 1})
    if not ind(1) == 0:
        raise AssertionError("indicator is 0 on the boundary")
    if not ind(-0.999) == 1:
        raise AssertionError("indicator is 1 inside the ball")

    expo = gen.make_generator({'kind': 'exponential'})
    assert_almost_equal(expo(1), 0.367879, decimal=6)

    pwl = gen.make_generator({'kind': 'piecewise_linear'})
    assert_almost_equal(pwl(0.25), 0.75)
    if not pwl(3) == 0:
        raise AssertionError("piecewise_linear is clipped at 0")

    shifted = gen.make_generator({'kind': 'shifted', 'beta': 0.5})
    assert_almost_equal(shifted(1), 0.75)
    # the infimum is beta
    assert_almost_equal(shifted(1e12), 0.5, decimal=9)

    # stacks give arrays
    vals = std([[0, 0], [3, 4]])
    if not isinstance(vals, np.ndarray) or vals.shape != (2,):
        raise AssertionError("stack evaluation should give an array")
    assert_raises(gen.DimensionError, gen.eval_generator, std, [1, 2, 3])


def test_linear_precompose():
    """Test that the inner generator sees A x"""
    g = gen.make_generator({'kind': 'linear_precompose', 'inner': {'kind': 'standard', 'p': 1},
                            'matrix': [[2, 0], [0, 1]]})
    assert_almost_equal(g([1, 1]), 1. / 4)
    if not g.member:
        raise AssertionError("linear_precompose of a member is a member")


def test_min_combine():
    """Test the pointwise minimum"""
    ind = gen.make_generator({'kind': 'indicator', 'r': 1})
    expo = gen.make_generator({'kind': 'exponential'})
    g = gen.min_combine([ind, expo])
    assert_almost_equal(g(0.5), np.exp(-0.5))
    if not g(2) == 0:
        raise AssertionError("min(indicator, exponential)(2) != 0")

    std = gen.make_generator({'kind': 'standard', 'dim': 2})
    twice = gen.min_combine([std, std])
    pts = np.random.default_rng(0).uniform(-5, 5, size=(50, 2))
    assert_array_equal(twice(pts), std(pts))

    assert_raises(gen.GeneratorError, gen.min_combine, [])
    assert_raises(gen.DimensionError, gen.min_combine, [ind, std])
    assert_raises(gen.GeneratorError, gen.min_combine, [gen.make_generator({'kind': 'cosine_control'})])


def test_describe_generator():
    """Test that describe_generator inverts make_generator"""
    descs = [{'kind': 'indicator', 'r': 2.5, 'p': 'inf', 'dim': 2},
             {'kind': 'shifted', 'beta': 0.25, 'p': 1, 'weights': [1, 3]},
             {'kind': 'min_combination', 'children': [{'kind': 'standard', 'dim': 2},
                                                      {'kind': 'piecewise_linear', 'dim': 2}]},
             {'kind': 'linear_precompose', 'inner': {'kind': 'exponential'}, 'matrix': [[1, 1], [0, 1]]}]
    pts = np.random.default_rng(1).uniform(-3, 3, size=(20, 2))
    for d in descs:
        g = gen.make_generator(d)
        again = gen.make_generator(gen.describe_generator(g))
        assert_array_equal(g(pts), again(pts))


def test_ray_profile():
    """Test that the scalar families decay along rays"""
    radii = np.linspace(0, 20, 41)
    for kind in gen.SCALAR_KINDS:
        g = gen.make_generator({'kind': kind, 'dim': 2})
        prof = gen.ray_profile(g, [1, -2], radii)
        if not prof[0] == 1:
            raise AssertionError("{0}: f(0) != 1".format(kind))
        if np.any(np.diff(prof) > 0):
            raise AssertionError("{0} increases along a ray".format(kind))


if __name__ == "__main__":
    # introspect and run all the functions starting with 'test'
    for f in dir():
        if f.startswith('test'):
            print(f)
            globals()[f]()
