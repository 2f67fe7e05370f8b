#! /usr/bin/env python
"""
Property based tests of the generator catalogue and the correspondence
"""
from __future__ import print_function

__author__ = 'FuzzNorm developers'

from FuzzNormTools.correspondence import norm_from_generator, generator_from_norm, eval_norm
from FuzzNormTools.generators import make_generator, QC_TOL
from hypothesis import given, settings
from hypothesis import strategies as st
import numpy as np

import logging
logging.basicConfig(format="%(module)s:%(levelname)s %(message)s")
log = logging.getLogger("FuzzNorm")
log.setLevel(logging.WARNING)

_coord = st.floats(min_value=-100., max_value=100., allow_nan=False, allow_infinity=False)
_weight = st.floats(min_value=0., max_value=1., allow_nan=False, allow_infinity=False)
_t = st.one_of(st.just(0.), st.floats(min_value=1e-6, max_value=1e6, allow_nan=False, allow_infinity=False))

# the indicator is left out of the quasiconcavity property: a midpoint within one
# ulp of the sphere can round onto it
_continuous = [{'kind': 'standard'},
               {'kind': 'standard', 'p': 1},
               {'kind': 'exponential', 'p': 'inf'},
               {'kind': 'piecewise_linear'},
               {'kind': 'shifted', 'beta': 0.5},
               {'kind': 'min_combination', 'children': [{'kind': 'standard'}, {'kind': 'exponential', 'p': 1}]},
               {'kind': 'linear_precompose', 'inner': {'kind': 'standard'}}]
_members = _continuous + [{'kind': 'indicator', 'r': 1}, {'kind': 'indicator', 'r': 0.5, 'p': 1}]


def _build(desc, dim):
    desc = dict(desc)
    if desc['kind'] == 'linear_precompose':
        # upper triangular with a unit diagonal is always invertible
        desc['matrix'] = (np.eye(dim) + np.triu(np.ones((dim, dim)), 1)).tolist()
    return make_generator(desc, dim)


@st.composite
def generator_and_vectors(draw, kinds=_members, count=1):
    """A generator of dimension 1-3 and count vectors of that dimension"""
    dim = draw(st.integers(min_value=1, max_value=3))
    gen = _build(draw(st.sampled_from(kinds)), dim)
    vecs = [np.array(draw(st.lists(_coord, min_size=dim, max_size=dim))) for _ in range(count)]
    return gen, vecs


@settings(max_examples=200, deadline=None)
@given(case=generator_and_vectors())
def test_range_and_symmetry(case):
    """Test 0 <= f <= 1, f(0) = 1 and f(-x) = f(x)"""
    gen, (x,) = case
    fx = gen(x)
    if not 0 <= fx <= 1:
        raise AssertionError("{0}({1}) = {2} is outside [0,1]".format(gen.kind, x, fx))
    if not gen(-x) == fx:
        raise AssertionError("{0} is not symmetric at {1}".format(gen.kind, x))
    if not gen(np.zeros_like(x)) == 1:
        raise AssertionError("{0}(0) != 1".format(gen.kind))


@settings(max_examples=200, deadline=None)
@given(case=generator_and_vectors(kinds=_continuous, count=2), lam=_weight)
def test_quasiconcave(case, lam):
    """Test f(lam*x + (1-lam)*y) >= min(f(x), f(y))"""
    gen, (x, y) = case
    mid = gen(lam * x + (1 - lam) * y)
    low = min(gen(x), gen(y))
    if not mid >= low - QC_TOL:
        raise AssertionError("{0}: f(mid)={1} < min={2} for x={3} y={4} lambda={5}".format(
            gen.kind, mid, low, x, y, lam))


@settings(max_examples=200, deadline=None)
@given(case=generator_and_vectors(), t=_t)
def test_roundtrip_exact(case, t):
    """Test N_{f_N}(x,t) == N(x,t) and f_{N_f}(x) == f(x) with exact equality"""
    gen, (x,) = case
    norm = norm_from_generator(gen)
    view = generator_from_norm(norm)
    if not view(x) == gen(x):
        raise AssertionError("f_N != f for {0} at {1}".format(gen.kind, x))
    back = norm_from_generator(view)
    if not eval_norm(back, x, t) == eval_norm(norm, x, t):
        raise AssertionError("N_(f_N) != N for {0} at x={1}, t={2}".format(gen.kind, x, t))


@settings(max_examples=200, deadline=None)
@given(case=generator_and_vectors(), s=_t, t=_t)
def test_t_monotone(case, s, t):
    """Test that t -> N(x,t) is non-decreasing"""
    gen, (x,) = case
    norm = norm_from_generator(gen)
    lo, hi = min(s, t), max(s, t)
    if not eval_norm(norm, x, lo) <= eval_norm(norm, x, hi) + QC_TOL:
        raise AssertionError("{0}: N(x,{1}) > N(x,{2}) at x={3}".format(gen.kind, lo, hi, x))


if __name__ == "__main__":
    # introspect and run all the functions starting with 'test'
    for f in dir():
        if f.startswith('test'):
            print(f)
            globals()[f]()
