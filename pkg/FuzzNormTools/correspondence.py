#! /usr/bin/env python
"""
The correspondence between generators and fuzzy norms.

A generator f induces the fuzzy norm

    N_f(x, t) = f(x/t) for t > 0, and N_f(x, 0) = 0,

and a fuzzy norm N gives back its generator f_N(x) = N(x, 1).
Both directions are the same arithmetic so the round trip is exact.
"""

from __future__ import print_function, division

__author__ = "FuzzNorm developers"

import numpy as np

from .generators import as_vector, eval_generator, Generator, DimensionError

# join the FuzzNorm logger
import logging
log = logging.getLogger('FuzzNorm')

# allowance for rounding when asserting a monotone t-curve
CURVE_TOL = 1e-12


class MembershipError(ValueError):
    """A generator that is not quasiconcave was passed to a checked constructor."""
    pass


class CurveError(AssertionError):
    """A t-curve that should be non-decreasing was not."""
    pass


class FuzzyNorm(object):
    """
    The fuzzy norm induced by a generator.

    Attributes
    ----------
    generator : :class:`FuzzNormTools.generators.Generator` or callable
        The generator f.

    dim : int
        Dimension of the space.

    checked : bool
        True if the generator passed membership validation on construction.
        Norms built with checked=False may violate the axioms, and are meant for
        the verification harness.
    """

    def __init__(self, generator, dim, checked=True):
        self.generator = generator
        self.dim = dim
        self.checked = checked

    @property
    def member(self):
        """False if the generator is known to lie outside the generator class"""
        return bool(getattr(self.generator, 'member', False))

    def __call__(self, x, t):
        return eval_norm(self, x, t)

    def __repr__(self):
        return "FuzzyNorm({0!r}, checked={1})".format(self.generator, self.checked)


class GeneratorView(object):
    """
    The generator f_N(x) = N(x, 1) of a fuzzy norm N, as a callable.

    Attributes
    ----------
    norm : :class:`FuzzNormTools.correspondence.FuzzyNorm`
        The fuzzy norm.

    dim : int
        Dimension of the space.
    """
    kind = 'view'

    def __init__(self, norm):
        self.norm = norm
        self.dim = norm.dim

    @property
    def member(self):
        return self.norm.member

    def __call__(self, x):
        return eval_norm(self.norm, x, 1.)

    def __repr__(self):
        return "GeneratorView({0!r})".format(self.norm)


def norm_from_generator(gen, checked=True, dim=None):
    """
    Build the fuzzy norm N_f induced by a generator f.

    Parameters
    ----------
    gen : :class:`FuzzNormTools.generators.Generator` or callable
        The generator.

    checked : bool
        If True (default) the generator must be a member of the generator class.
        If False any callable is accepted and the result is flagged as unchecked.

    dim : int
        Dimension of the space, required only for callables without a `dim` attribute.

    Returns
    -------
    norm : :class:`FuzzNormTools.correspondence.FuzzyNorm`
        The induced fuzzy norm.

    Raises
    ------
    MembershipError
        If checked is True and the generator is not a known member.
    """
    gdim = getattr(gen, 'dim', None)
    if gdim is None:
        gdim = dim
    elif dim is not None and dim != gdim:
        raise DimensionError("Generator has dimension {0}, expected {1}".format(gdim, dim))
    if gdim is None:
        raise DimensionError("Cannot determine the dimension of {0!r}".format(gen))
    if checked and not getattr(gen, 'member', False):
        log.error("{0!r} is not a member of the generator class".format(gen))
        raise MembershipError("Generator is not quasiconcave or not validated; use checked=False to wrap it anyway")
    if not checked:
        log.debug("Wrapping {0!r} without membership validation".format(gen))
    return FuzzyNorm(gen, int(gdim), checked=checked)


def _check_t(t):
    """Make sure t is a finite non-negative real"""
    try:
        t = float(t)
    except (TypeError, ValueError):
        raise ValueError("t must be a real number, got {0!r}".format(t))
    if not np.isfinite(t) or t < 0:
        log.error("Fuzzy norms are evaluated at finite t >= 0, not {0}".format(t))
        raise ValueError("t must be finite and >= 0, got {0}".format(t))
    return t


def eval_norm(norm, x, t):
    """
    Evaluate a fuzzy norm.

    Parameters
    ----------
    norm : :class:`FuzzNormTools.correspondence.FuzzyNorm`
        The fuzzy norm.

    x : array-like
        A vector of shape (dim,) or a stack of shape (n, dim).

    t : float
        Finite, non-negative.

    Returns
    -------
    value : float or numpy.ndarray
        f(x/t) for t > 0, and 0 for t = 0.

    Raises
    ------
    ValueError
        For negative or non-finite t.

    DimensionError
        For a dimension mismatch.
    """
    t = _check_t(t)
    x = as_vector(x, norm.dim)
    if t == 0:
        if x.ndim == 1:
            return 0.
        return np.zeros(x.shape[0])
    gen = norm.generator
    if x.ndim == 2 and not isinstance(gen, (Generator, GeneratorView)):
        # plain callables take one vector at a time
        return np.array([gen(row / t) for row in x], dtype=np.float64)
    return eval_generator(gen, x / t)


def generator_from_norm(norm):
    """
    Recover the generator f_N(x) = N(x, 1) of a fuzzy norm.

    Parameters
    ----------
    norm : :class:`FuzzNormTools.correspondence.FuzzyNorm`
        The fuzzy norm.

    Returns
    -------
    view : :class:`FuzzNormTools.correspondence.GeneratorView`
        A callable generator that can be passed to
        :func:`FuzzNormTools.generators.eval_generator`.
    """
    return GeneratorView(norm)


def t_curve(norm, x, t_grid):
    """
    Sample the curve t -> N(x, t), which is non-decreasing.

    Parameters
    ----------
    norm : :class:`FuzzNormTools.correspondence.FuzzyNorm`
        The fuzzy norm.

    x : array-like
        A single vector.

    t_grid : array-like
        Strictly increasing, finite, non-negative values of t.

    Returns
    -------
    values : numpy.ndarray
        N(x, t) for each t in the grid.

    Raises
    ------
    ValueError
        If the grid is not strictly increasing, or has negative or non-finite entries.

    CurveError
        If the sampled curve decreases by more than the rounding allowance.
    """
    x = as_vector(x, norm.dim)
    if x.ndim != 1:
        raise DimensionError("t_curve takes a single vector")
    grid = np.asarray(t_grid, dtype=np.float64).ravel()
    if not np.all(np.isfinite(grid)) or np.any(grid < 0):
        raise ValueError("t grid must be finite and non-negative")
    if np.any(np.diff(grid) <= 0):
        raise ValueError("t grid must be strictly increasing")
    values = np.array([eval_norm(norm, x, t) for t in grid])
    drops = np.where(np.diff(values) < -CURVE_TOL)[0]
    if len(drops) > 0:
        i = drops[0]
        log.error("t-curve decreases between t={0} and t={1}".format(grid[i], grid[i + 1]))
        raise CurveError("N(x,{0})={1} > N(x,{2})={3}".format(grid[i], values[i], grid[i + 1], values[i + 1]))
    return values


def level_set_contains(gen, x, alpha):
    """
    Test membership of the strict superlevel set {f > alpha}.

    This set is convex and symmetric, and p_alpha is its gauge.

    Parameters
    ----------
    gen : :class:`FuzzNormTools.generators.Generator` or callable
        The generator.

    x : array-like
        A vector or stack of vectors.

    alpha : float
        The level.

    Returns
    -------
    inside : bool or numpy.ndarray
    """
    val = eval_generator(gen, x)
    if np.ndim(val) == 0:
        return bool(val > alpha)
    return np.asarray(val) > alpha


def roundtrip_check(gen, points, t_values):
    """
    Check both round trips of the correspondence with exact equality.

    - f -> N_f -> f_{N_f} must equal f at every point.
    - N -> f_N -> N_{f_N} must equal N at every (point, t), including t = 0.

    Parameters
    ----------
    gen : :class:`FuzzNormTools.generators.Generator`
        The generator. It is wrapped without membership validation so that
        the identity can be checked for every family.

    points : array-like
        A stack of vectors, shape (n, dim).

    t_values : array-like
        Non-negative values of t.

    Returns
    -------
    n_checked : int
        The number of equalities checked.

    mismatches : list
        One dict per failed equality, with keys 'direction', 'x', 't', 'lhs', 'rhs'.
    """
    norm = norm_from_generator(gen, checked=False)
    view = generator_from_norm(norm)
    back = norm_from_generator(view, checked=False)
    pts = as_vector(points, norm.dim)
    if pts.ndim == 1:
        pts = pts.reshape(1, -1)
    mismatches = []
    n_checked = 0

    lhs = np.asarray(eval_generator(view, pts))
    rhs = np.asarray(eval_generator(gen, pts))
    n_checked += len(pts)
    for i in np.where(lhs != rhs)[0]:
        mismatches.append({'direction': 'f->N->f', 'x': pts[i].tolist(), 't': 1.,
                           'lhs': float(lhs[i]), 'rhs': float(rhs[i])})

    for t in t_values:
        lhs = np.asarray(eval_norm(back, pts, t))
        rhs = np.asarray(eval_norm(norm, pts, t))
        n_checked += len(pts)
        for i in np.where(lhs != rhs)[0]:
            mismatches.append({'direction': 'N->f->N', 'x': pts[i].tolist(), 't': float(t),
                               'lhs': float(lhs[i]), 'rhs': float(rhs[i])})
    if mismatches:
        log.warning("{0} of {1} round trip equalities failed".format(len(mismatches), n_checked))
    return n_checked, mismatches
