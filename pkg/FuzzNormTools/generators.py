#! /usr/bin/env python
"""
Vectors, crisp norms, and the catalogue of quasiconcave generator functions.

A generator is a function f: R^n -> [0,1] with f(0)=1 that is quasiconcave,
symmetric, and tends to 1 along every ray towards the origin.
Each generator induces a fuzzy norm via N(x,t) = f(x/t), see
:mod:`FuzzNormTools.correspondence`.

The cosine_control family is deliberately *not* quasiconcave and is shipped so
that the verification harness always has an input that must fail.
"""

from __future__ import print_function, division

__author__ = "FuzzNorm developers"

import numpy as np

# join the FuzzNorm logger
import logging
log = logging.getLogger('FuzzNorm')

KINDS = ('standard', 'indicator', 'exponential', 'piecewise_linear', 'shifted',
         'min_combination', 'linear_precompose', 'cosine_control')
# families that are a function of a single crisp norm
SCALAR_KINDS = ('standard', 'indicator', 'exponential', 'piecewise_linear', 'shifted')

SINGULAR_TOL = 1e-12
# violations of quasiconcavity smaller than this are rounding
QC_TOL = 1e-12


class GeneratorError(ValueError):
    """Generator parameters outside the ranges of their family."""
    pass


class DimensionError(ValueError):
    """Vectors or generators of the wrong dimension, or with non-finite components."""
    pass


def as_vector(x, dim=None):
    """
    Convert the input into a read-only float vector, or a stack of vectors.

    Parameters
    ----------
    x : float, list, or numpy.ndarray
        A scalar (treated as a vector of dimension 1), a vector of shape (dim,),
        or a stack of vectors of shape (n, dim).

    dim : int
        The required dimension. Default = None means don't check.

    Returns
    -------
    vec : numpy.ndarray
        A read-only copy with dtype float64.

    Raises
    ------
    DimensionError
        If the dimension does not match, or any component is not finite.
    """
    vec = np.array(x, dtype=np.float64)
    if vec.ndim == 0:
        vec = vec.reshape(1)
    if vec.ndim > 2 or vec.shape[-1] < 1:
        log.error("Cannot interpret an array of shape {0} as vectors".format(vec.shape))
        raise DimensionError("Vectors must have shape (dim,) or (n, dim), not {0}".format(vec.shape))
    if dim is not None and vec.shape[-1] != dim:
        raise DimensionError("Expected dimension {0} but got {1}".format(dim, vec.shape[-1]))
    if not np.all(np.isfinite(vec)):
        raise DimensionError("Vector components must be finite")
    vec.flags.writeable = False
    return vec


def _parse_p(p):
    """Accept 'inf', None, or a number and return the float exponent"""
    if p is None:
        return 2.
    if isinstance(p, str):
        p = p.strip().lower()
        if p in ('inf', 'infinity', 'max'):
            return np.inf
    try:
        p = float(p)
    except (TypeError, ValueError):
        raise GeneratorError("Cannot interpret p={0!r}".format(p))
    if not p >= 1:
        log.error("p-norm exponent must be >= 1, got {0}".format(p))
        raise GeneratorError("p must be >= 1, got {0}".format(p))
    return p


class CrispNormSpec(object):
    """
    A (weighted) p-norm on R^n.

    Attributes
    ----------
    kind : str
        Either 'p_norm' or 'weighted_p_norm'.

    p : float
        Exponent in [1, inf]. np.inf gives the max-norm.

    weights : numpy.ndarray or None
        Positive weight per coordinate. The weighted norm is
        (sum w_i |x_i|^p)^(1/p), or max w_i |x_i| when p is infinite.
    """

    def __init__(self, p=2, weights=None):
        p = _parse_p(p)
        if weights is not None:
            weights = np.array(weights, dtype=np.float64).ravel()
            if len(weights) < 1 or not np.all(np.isfinite(weights)) or np.any(weights <= 0):
                log.error("Weights must be finite and positive: {0}".format(weights))
                raise GeneratorError("Weights must be finite and positive")
            weights.flags.writeable = False
            self.kind = 'weighted_p_norm'
        else:
            self.kind = 'p_norm'
        self.p = p
        self.weights = weights

    def __call__(self, x):
        return crisp_eval(self, x)

    def __eq__(self, other):
        if not isinstance(other, CrispNormSpec):
            return False
        if self.p != other.p:
            return False
        if self.weights is None or other.weights is None:
            return self.weights is None and other.weights is None
        return np.array_equal(self.weights, other.weights)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        if self.weights is None:
            return "CrispNormSpec(p={0})".format(self.p)
        return "CrispNormSpec(p={0}, weights={1})".format(self.p, list(self.weights))

    def as_dict(self):
        """
        Return the description of this norm as used in spec files.
        """
        d = {'p': 'inf' if np.isinf(self.p) else self.p}
        if self.weights is not None:
            d['weights'] = [float(w) for w in self.weights]
        return d


def crisp_eval(spec, x):
    """
    Evaluate a crisp norm.

    Parameters
    ----------
    spec : :class:`FuzzNormTools.generators.CrispNormSpec`
        The norm.

    x : array-like
        A vector of shape (dim,) or a stack of shape (n, dim).

    Returns
    -------
    norm : float or numpy.ndarray
        ||x||, a float for a single vector and an array for a stack.

    Raises
    ------
    DimensionError
        If the weights and the vector disagree in dimension.
    """
    dim = None if spec.weights is None else len(spec.weights)
    x = as_vector(x, dim)
    ax = np.abs(x)
    if spec.weights is not None:
        if np.isinf(spec.p):
            ax = ax * spec.weights
        else:
            ax = ax * spec.weights ** (1. / spec.p)
    val = np.linalg.norm(ax, ord=spec.p, axis=-1)
    if x.ndim == 1:
        return float(val)
    return val


class Generator(object):
    """
    A generator function f: R^dim -> [0,1] from the catalogue.

    Instances are created by :func:`FuzzNormTools.generators.make_generator`
    and are immutable after construction.

    Attributes
    ----------
    kind : str
        One of :data:`FuzzNormTools.generators.KINDS`.

    dim : int
        Dimension of the space the generator acts on.

    base : :class:`FuzzNormTools.generators.CrispNormSpec`
        The crisp norm for scalar families (and cosine_control).

    radius : float
        Radius of the open ball for the indicator family.

    beta : float
        Infimum of the shifted family, in [0, 1).

    children : tuple
        Child generators for min_combination, or the single inner generator
        for linear_precompose.

    matrix : numpy.ndarray
        Invertible dim x dim matrix for linear_precompose.

    member : bool
        False if the generator is known to lie outside the class of
        quasiconcave generators (the cosine control, or anything built on it).
    """

    def __init__(self, kind, dim, base=None, radius=None, beta=None, children=(), matrix=None):
        self.kind = kind
        self.dim = dim
        self.base = base
        self.radius = radius
        self.beta = beta
        self.children = tuple(children)
        self.matrix = matrix
        self.member = kind != 'cosine_control' and all(c.member for c in self.children)
        self._frozen = True

    def __setattr__(self, name, value):
        if getattr(self, '_frozen', False):
            raise AttributeError("Generator objects are immutable")
        object.__setattr__(self, name, value)

    def __call__(self, x):
        return eval_generator(self, x)

    def __repr__(self):
        return "Generator({0})".format(describe_generator(self))


def _kind_params(desc, name, default=None):
    """Look up a parameter allowing a few spellings"""
    aliases = {'radius': ('radius', 'r'),
               'beta': ('beta', 'shift')}
    for key in aliases.get(name, (name,)):
        if key in desc:
            return desc[key]
    return default


def make_generator(desc, dim=None):
    """
    Validate a generator description and build the generator.

    Parameters
    ----------
    desc : dict or :class:`FuzzNormTools.generators.Generator`
        The description. Keys are 'kind' (required), 'dim', 'p', 'weights',
        'r' (or 'radius'), 'beta', 'children', 'inner', and 'matrix'.
        A Generator is returned unchanged (after checking its dimension).

    dim : int
        Dimension of the space. Overrides nothing: if both this and desc['dim']
        are given they must agree. If neither is given then the dimension is
        taken from the weights, the matrix, or the children, and finally
        defaults to 1.

    Returns
    -------
    gen : :class:`FuzzNormTools.generators.Generator`
        A validated generator.

    Raises
    ------
    GeneratorError
        For parameters outside their ranges, a singular matrix, an empty list of
        children, or an unknown kind.

    DimensionError
        For inconsistent dimensions.
    """
    if isinstance(desc, Generator):
        if dim is not None and desc.dim != dim:
            raise DimensionError("Generator has dimension {0}, expected {1}".format(desc.dim, dim))
        return desc
    if not isinstance(desc, dict):
        raise GeneratorError("A generator description must be a dict, not {0}".format(type(desc).__name__))

    kind = desc.get('kind', None)
    if kind not in KINDS:
        log.error("Unknown generator kind {0!r}".format(kind))
        raise GeneratorError("Unknown generator kind {0!r}. Choose from {1}".format(kind, ', '.join(KINDS)))

    ddim = desc.get('dim', None)
    if ddim is not None:
        if dim is not None and int(ddim) != int(dim):
            raise DimensionError("Description has dim={0} but dim={1} was requested".format(ddim, dim))
        dim = ddim

    if kind in SCALAR_KINDS or kind == 'cosine_control':
        base = CrispNormSpec(desc.get('p', 2), desc.get('weights', None))
        if base.weights is not None:
            if dim is None:
                dim = len(base.weights)
            elif len(base.weights) != int(dim):
                raise DimensionError("{0} weights given for dimension {1}".format(len(base.weights), dim))
        dim = _check_dim(dim)
        radius = beta = None
        if kind == 'indicator':
            radius = _kind_params(desc, 'radius', 1.)
            try:
                radius = float(radius)
            except (TypeError, ValueError):
                raise GeneratorError("Cannot interpret radius {0!r}".format(radius))
            if not (np.isfinite(radius) and radius > 0):
                log.error("Indicator radius must be finite and > 0, got {0}".format(radius))
                raise GeneratorError("Indicator radius must be finite and > 0")
        elif kind == 'shifted':
            beta = _kind_params(desc, 'beta', 0.)
            try:
                beta = float(beta)
            except (TypeError, ValueError):
                raise GeneratorError("Cannot interpret beta {0!r}".format(beta))
            if not 0 <= beta < 1:
                log.error("Shift beta must be in [0,1), got {0}".format(beta))
                raise GeneratorError("Shift beta must be in [0,1), got {0}".format(beta))
        elif kind == 'cosine_control':
            log.warning("cosine_control is not quasiconcave and is not a generator of a fuzzy norm")
        return Generator(kind, dim, base=base, radius=radius, beta=beta)

    if kind == 'min_combination':
        kids = desc.get('children', None)
        if not kids:
            log.error("min_combination requires at least one child")
            raise GeneratorError("min_combination requires a non-empty list of children")
        if dim is None:
            dim = _first_dim(kids)
        dim = _check_dim(dim)
        children = [make_generator(k, dim) for k in kids]
        for c in children:
            if c.kind == 'cosine_control':
                log.error("min_combination cannot take a cosine_control child")
                raise GeneratorError("min_combination children must be members of the generator class")
        return Generator(kind, dim, children=children)

    # linear_precompose
    inner = desc.get('inner', None)
    if inner is None:
        kids = desc.get('children', None) or []
        if len(kids) != 1:
            raise GeneratorError("linear_precompose requires exactly one inner generator")
        inner = kids[0]
    matrix = desc.get('matrix', None)
    if matrix is None:
        raise GeneratorError("linear_precompose requires a matrix")
    matrix = np.array(matrix, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise GeneratorError("Matrix must be square, got shape {0}".format(matrix.shape))
    if not np.all(np.isfinite(matrix)):
        raise GeneratorError("Matrix entries must be finite")
    if dim is None:
        dim = matrix.shape[0]
    dim = _check_dim(dim)
    if matrix.shape[0] != dim:
        raise DimensionError("Matrix of shape {0} for dimension {1}".format(matrix.shape, dim))
    if abs(np.linalg.det(matrix)) <= SINGULAR_TOL:
        log.error("Matrix is singular (|det| <= {0})".format(SINGULAR_TOL))
        raise GeneratorError("linear_precompose requires an invertible matrix")
    matrix.flags.writeable = False
    inner = make_generator(inner, dim)
    return Generator(kind, dim, children=[inner], matrix=matrix)


def _check_dim(dim):
    """Default the dimension to 1 and check it is a positive integer"""
    if dim is None:
        return 1
    try:
        idim = int(dim)
    except (TypeError, ValueError):
        raise DimensionError("Cannot interpret dim={0!r}".format(dim))
    if idim != dim or idim < 1:
        raise DimensionError("dim must be a positive integer, got {0!r}".format(dim))
    return idim


def _first_dim(kids):
    """Find a dimension declared by any of the children"""
    for k in kids:
        if isinstance(k, Generator):
            return k.dim
        if isinstance(k, dict) and k.get('dim', None) is not None:
            return k['dim']
    return None


def describe_generator(gen):
    """
    Convert a generator back into a description dict.

    Parameters
    ----------
    gen : :class:`FuzzNormTools.generators.Generator`
        The generator.

    Returns
    -------
    desc : dict
        A description that :func:`FuzzNormTools.generators.make_generator` turns
        back into an equivalent generator.
    """
    desc = {'kind': gen.kind, 'dim': gen.dim}
    if gen.base is not None:
        desc.update(gen.base.as_dict())
    if gen.kind == 'indicator':
        desc['r'] = gen.radius
    elif gen.kind == 'shifted':
        desc['beta'] = gen.beta
    elif gen.kind == 'min_combination':
        desc['children'] = [describe_generator(c) for c in gen.children]
    elif gen.kind == 'linear_precompose':
        desc['inner'] = describe_generator(gen.children[0])
        desc['matrix'] = gen.matrix.tolist()
    return desc


def eval_generator(gen, x):
    """
    Evaluate a generator.

    Parameters
    ----------
    gen : :class:`FuzzNormTools.generators.Generator` or callable
        The generator. Any other callable (such as the view returned by
        :func:`FuzzNormTools.correspondence.generator_from_norm`) is called directly.

    x : array-like
        A vector of shape (dim,) or a stack of shape (n, dim).

    Returns
    -------
    value : float or numpy.ndarray
        f(x) in [0,1].

    Raises
    ------
    DimensionError
        If x does not have the dimension of the generator.
    """
    if not isinstance(gen, Generator):
        return gen(x)
    x = as_vector(x, gen.dim)
    kind = gen.kind
    if kind == 'min_combination':
        vals = np.minimum.reduce([np.asarray(eval_generator(c, x), dtype=np.float64) for c in gen.children])
    elif kind == 'linear_precompose':
        vals = np.asarray(eval_generator(gen.children[0], np.dot(x, gen.matrix.T)), dtype=np.float64)
    else:
        s = np.asarray(crisp_eval(gen.base, x))
        if kind == 'standard':
            vals = 1. / (1. + s)
        elif kind == 'indicator':
            # open ball, so the boundary has value 0
            vals = np.where(s < gen.radius, 1., 0.)
        elif kind == 'exponential':
            vals = np.exp(-s)
        elif kind == 'piecewise_linear':
            vals = np.maximum(0., 1. - s)
        elif kind == 'shifted':
            vals = gen.beta + (1. - gen.beta) / (1. + s)
        else:  # cosine_control
            vals = np.maximum(0., np.cos(s))
    if x.ndim == 1:
        return float(vals)
    return vals


def min_combine(gens):
    """
    Combine generators by taking their pointwise minimum.

    The superlevel sets of the minimum are intersections of convex symmetric
    sets, so the result is again quasiconcave and symmetric.

    Parameters
    ----------
    gens : list
        A non-empty list of :class:`FuzzNormTools.generators.Generator` of equal dimension.

    Returns
    -------
    gen : :class:`FuzzNormTools.generators.Generator`
        The min_combination generator.

    Raises
    ------
    GeneratorError
        For an empty list or a cosine_control child.

    DimensionError
        For mixed dimensions.
    """
    gens = list(gens)
    if len(gens) < 1:
        raise GeneratorError("Cannot combine an empty list of generators")
    dims = set(g.dim for g in gens)
    if len(dims) > 1:
        log.error("Cannot combine generators of dimensions {0}".format(sorted(dims)))
        raise DimensionError("Generators have mixed dimensions {0}".format(sorted(dims)))
    return make_generator({'kind': 'min_combination', 'children': gens}, gens[0].dim)


def ray_profile(gen, direction, radii):
    """
    Evaluate a generator along a ray from the origin.

    Parameters
    ----------
    gen : :class:`FuzzNormTools.generators.Generator` or callable
        The generator.

    direction : array-like
        The direction vector u (not normalised).

    radii : array-like
        Non-negative multipliers r.

    Returns
    -------
    values : numpy.ndarray
        f(r*u) for each r.
    """
    u = as_vector(direction)
    radii = np.asarray(radii, dtype=np.float64)
    return np.array([eval_generator(gen, r * u) for r in radii])
