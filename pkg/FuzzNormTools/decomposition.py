#! /usr/bin/env python
"""
Decomposition of a fuzzy norm into its ascending family of crisp alpha-cut norms

    p_alpha(x) = inf{t > 0 : N(x, t) > alpha},   0 < alpha < 1.

The infimum is found by bracketing and bisection on the non-decreasing
curve t -> N(x, t). The answer is the upper end of the final bracket, so it
is biased upward by at most tol.

When N(x, t) does not go to 0 as t -> 0 the predicate can hold for every t > 0,
in which case p_alpha(x) = 0 for some x != 0 and the cell is flagged as degenerate.
"""

from __future__ import print_function, division

__author__ = "FuzzNorm developers"

import multiprocessing
import sys

import numpy as np

from . import flags
from .correspondence import eval_norm, level_set_contains, _check_t
from .generators import as_vector, eval_generator, make_generator, Generator, GeneratorError, SCALAR_KINDS

# join the FuzzNorm logger
import logging
log = logging.getLogger('FuzzNorm')

DEFAULT_TOL = 1e-9
MAX_DOUBLINGS = 200
# halvings below the collapsed bracket before a cut is declared degenerate
MAX_HALVINGS = 200
# tolerance for recognising a query point as a multiple of a tabulated point
MULTIPLE_TOL = 1e-12
# how far below the first failing probe the limit t -> 0 is estimated
LIMIT_HALVINGS = 60
LIMIT_TOL = 1e-12


class BracketError(RuntimeError):
    """
    The bracket for p_alpha could not be expanded far enough.

    Attributes
    ----------
    point : numpy.ndarray or None
        The vector x whose cut failed, when known.

    alpha : float or None
        The level, when known.
    """

    def __init__(self, message, point=None, alpha=None):
        super(BracketError, self).__init__(message)
        self.point = point
        self.alpha = alpha


class ReconstructionError(ValueError):
    """The queried point is not a multiple of any tabulated point."""
    pass


def _check_alpha(alpha):
    """Make sure that 0 < alpha < 1"""
    alpha = float(alpha)
    if not 0 < alpha < 1:
        log.error("alpha must be in (0,1), got {0}".format(alpha))
        raise ValueError("alpha must be in (0,1), got {0}".format(alpha))
    return alpha


def _bisect_infimum(above, tol, value=None, level=None):
    """
    Find inf{t > 0 : above(t)} for a predicate that is monotone in t.

    Parameters
    ----------
    above : callable
        A predicate that is False below the infimum and True above it.

    tol : float
        Width of the final bracket.

    value, level : callable, float
        Optional. The predicate is value(t) > level. When given, a curve whose
        limit as t -> 0 is the level itself is reported as degenerate.

    Returns
    -------
    t_hi : float
        The upper end of the final bracket, or 0 when the predicate holds down to the
        smallest probed t.

    flag : int
        :data:`FuzzNormTools.flags.DEGENERATE` when the predicate holds at every
        probed t, else 0.

    Raises
    ------
    BracketError
        If the predicate is still False after :data:`MAX_DOUBLINGS` doublings.
    """
    if not tol > 0:
        raise ValueError("tol must be > 0, got {0}".format(tol))
    t_hi = 1.
    n = 0
    while not above(t_hi):
        if n >= MAX_DOUBLINGS:
            log.error("No bracket after {0} doublings (t={1:g})".format(n, t_hi))
            raise BracketError("N(x,t) > alpha was not reached by t={0:g}; either N does not tend to 1 "
                               "or alpha is indistinguishable from sup N(x,t)".format(t_hi))
        t_hi *= 2.
        n += 1
    log.debug("bracket [0, {0:g}] after {1} doublings".format(t_hi, n))

    t_lo = 0.
    lo_moved = False
    while t_hi - t_lo > tol:
        mid = 0.5 * (t_lo + t_hi)
        # no representable point left between the ends
        if mid <= t_lo or mid >= t_hi:
            break
        if above(mid):
            t_hi = mid
        else:
            t_lo = mid
            lo_moved = True

    if lo_moved:
        return t_hi, 0

    # the predicate held on every probe; look below the bracket before giving up
    t = t_hi
    for _ in range(MAX_HALVINGS):
        t *= 0.5
        if not above(t):
            break
    else:
        log.debug("predicate holds down to t={0:g}, degenerate cut".format(t))
        return 0., flags.DEGENERATE

    # a curve that settles at the level itself only fails the predicate by rounding
    if value is not None and abs(value(t * 2. ** -LIMIT_HALVINGS) - level) <= LIMIT_TOL:
        log.debug("N(x,t) settles at alpha={0} as t -> 0, degenerate cut".format(level))
        return 0., flags.DEGENERATE
    return t_hi, 0


def alpha_cut_flagged(norm, x, alpha, tol=DEFAULT_TOL):
    """
    Compute p_alpha(x) and report whether the cut is degenerate.

    Parameters
    ----------
    norm : :class:`FuzzNormTools.correspondence.FuzzyNorm`
        The fuzzy norm. It must tend to 1 as t grows.

    x : array-like
        A single vector.

    alpha : float
        The level, 0 < alpha < 1.

    tol : float
        The bisection tolerance. Default = 1e-9.

    Returns
    -------
    value : float
        p_alpha(x) to within tol (from above).

    flag : int
        :data:`FuzzNormTools.flags.DEGENERATE` if N(x,t) > alpha for every probed
        t > 0, in which case value is 0.

    Raises
    ------
    BracketError
        If N(x,t) > alpha is not reached within :data:`MAX_DOUBLINGS` doublings of t.
    """
    alpha = _check_alpha(alpha)
    x = as_vector(x, norm.dim)
    if x.ndim != 1:
        raise ValueError("alpha_cut takes a single vector")
    if not np.any(x):
        return 0., 0

    def value(t):
        return eval_norm(norm, x, t)

    def above(t):
        return value(t) > alpha

    try:
        return _bisect_infimum(above, tol, value, alpha)
    except BracketError as e:
        raise BracketError(str(e), point=x, alpha=alpha)


def alpha_cut(norm, x, alpha, tol=DEFAULT_TOL):
    """
    Compute the crisp alpha-cut norm p_alpha(x) = inf{t > 0 : N(x,t) > alpha}.

    See :func:`FuzzNormTools.decomposition.alpha_cut_flagged` for parameters.
    Degenerate cuts return 0.

    Returns
    -------
    value : float
        p_alpha(x).
    """
    return alpha_cut_flagged(norm, x, alpha, tol)[0]


def gauge_of_level_set(gen, x, alpha, tol=DEFAULT_TOL):
    """
    The Minkowski functional of the superlevel set {f > alpha} of a generator.

    inf{t > 0 : x/t in {f > alpha}}, which equals p_alpha(x) for the fuzzy norm
    induced by f.

    Parameters
    ----------
    gen : :class:`FuzzNormTools.generators.Generator` or callable
        The generator.

    x : array-like
        A single vector.

    alpha : float
        The level, 0 < alpha < 1.

    tol : float
        The bisection tolerance.

    Returns
    -------
    gauge : float
    """
    alpha = _check_alpha(alpha)
    x = as_vector(x, getattr(gen, 'dim', None))
    if not np.any(x):
        return 0.

    def value(t):
        return eval_generator(gen, x / t)

    def above(t):
        return level_set_contains(gen, x / t, alpha)

    return _bisect_infimum(above, tol, value, alpha)[0]


def alpha_cut_oracle(kind, alpha, s):
    """
    Closed form of p_alpha(x) for the scalar families, given s = ||x||.

    Parameters
    ----------
    kind : :class:`FuzzNormTools.generators.Generator`, dict, or str
        The generator, its description, or just the kind (with default parameters).

    alpha : float
        The level, 0 < alpha < 1.

    s : float
        The crisp norm of x, s >= 0.

    Returns
    -------
    value : float
        standard: alpha*s/(1-alpha); indicator(r): s/r; exponential: s/(-ln alpha);
        piecewise_linear: s/(1-alpha); shifted(beta): s*(alpha-beta)/(1-alpha) if alpha > beta
        else 0.

    Raises
    ------
    GeneratorError
        For kinds without a closed form.
    """
    if isinstance(kind, str):
        kind = {'kind': kind}
    gen = make_generator(kind) if not isinstance(kind, Generator) else kind
    if gen.kind not in SCALAR_KINDS:
        raise GeneratorError("No closed form alpha-cut for kind {0}".format(gen.kind))
    alpha = _check_alpha(alpha)
    s = float(s)
    if gen.kind == 'standard':
        return alpha * s / (1 - alpha)
    if gen.kind == 'indicator':
        return s / gen.radius
    if gen.kind == 'exponential':
        return s / (-np.log(alpha))
    if gen.kind == 'piecewise_linear':
        return s / (1 - alpha)
    # shifted
    if alpha > gen.beta:
        return s * (alpha - gen.beta) / (1 - alpha)
    return 0.


class AlphaCutTable(object):
    """
    Sampled values of p_alpha(x) over a grid of alpha and a set of points.

    Attributes
    ----------
    alphas : numpy.ndarray
        Strictly increasing levels in (0,1).

    points : numpy.ndarray
        The points, shape (n_points, dim).

    values : numpy.ndarray
        values[i, j] = p_{alphas[i]}(points[j]).

    flags : numpy.ndarray
        Cell flags, see :mod:`FuzzNormTools.flags`.

    tol : float
        The bisection tolerance used.
    """

    def __init__(self, alphas, points, values, flags, tol):
        self.alphas = np.asarray(alphas, dtype=np.float64)
        self.points = np.asarray(points, dtype=np.float64)
        self.values = np.asarray(values, dtype=np.float64)
        self.flags = np.asarray(flags, dtype=int)
        self.tol = float(tol)

    @property
    def dim(self):
        return self.points.shape[1]

    def column(self, j):
        """
        The values p_alpha(points[j]) over all alphas.
        """
        return self.values[:, j]

    def __repr__(self):
        return "AlphaCutTable({0} alphas x {1} points, tol={2:g})".format(len(self.alphas), len(self.points),
                                                                          self.tol)


def _cut_cell(args):
    """
    A shallow wrapper for alpha_cut_flagged that reports the cell coordinates on failure.

    Parameters
    ----------
    args : tuple
        (i, j, norm, x, alpha, tol)

    Returns
    -------
    value, flag : float, int
    """
    i, j, norm, x, alpha, tol = args
    try:
        return alpha_cut_flagged(norm, x, alpha, tol)
    except BracketError as e:
        raise BracketError("cell (alpha index {0}, point index {1}): {2}".format(i, j, e), point=e.point,
                           alpha=e.alpha)
    except Exception:
        # an easier to debug traceback when multiprocessing
        import traceback
        raise RuntimeError("".join(traceback.format_exception(*sys.exc_info())))


def decompose_table(norm, alphas, points, tol=DEFAULT_TOL, cores=1):
    """
    Tabulate p_alpha(x) over a grid of alphas and a set of points.

    Parameters
    ----------
    norm : :class:`FuzzNormTools.correspondence.FuzzyNorm`
        The fuzzy norm.

    alphas : array-like
        Strictly increasing levels in (0,1).

    points : array-like
        Points of shape (n, dim).

    tol : float
        The bisection tolerance.

    cores : int
        Number of processes used to evaluate cells. Default = 1 (serial).
        The table does not depend on the number of cores.

    Returns
    -------
    table : :class:`FuzzNormTools.decomposition.AlphaCutTable`

    Raises
    ------
    BracketError
        From any cell, with the cell coordinates in the message.
    """
    alphas = np.asarray(alphas, dtype=np.float64).ravel()
    if len(alphas) < 1:
        raise ValueError("At least one alpha is required")
    for a in alphas:
        _check_alpha(a)
    if np.any(np.diff(alphas) <= 0):
        raise ValueError("alphas must be strictly increasing")
    pts = as_vector(points, norm.dim)
    if pts.ndim == 1:
        pts = pts.reshape(1, -1)

    args = [(i, j, norm, pts[j], alphas[i], tol) for i in range(len(alphas)) for j in range(len(pts))]
    if cores is not None and cores > 1:
        cores = min(multiprocessing.cpu_count(), cores)
        log.info("using {0} cores for {1} cells".format(cores, len(args)))
        pool = multiprocessing.Pool(processes=cores)
        try:
            # map preserves the order of the cells
            results = pool.map(_cut_cell, args)
        finally:
            pool.close()
            pool.join()
    else:
        results = [_cut_cell(a) for a in args]

    values = np.array([r[0] for r in results]).reshape(len(alphas), len(pts))
    cell_flags = np.array([r[1] for r in results], dtype=int).reshape(len(alphas), len(pts))
    ndeg = int(np.sum(cell_flags & flags.DEGENERATE > 0))
    if ndeg > 0:
        log.warning("{0} of {1} cells are degenerate (N(x,t) does not vanish as t -> 0)".format(ndeg, len(args)))
    return AlphaCutTable(alphas, pts, values, cell_flags, tol)


class ReconstructedNorm(object):
    """
    The fuzzy norm rebuilt from a finite alpha-cut table

        N~(x, t) = max{alpha in the grid : p_alpha(x) < t}, or 0 if there is none.

    It is only defined on multiples of the tabulated points, using
    p_alpha(lam * x) = |lam| * p_alpha(x).

    Attributes
    ----------
    table : :class:`FuzzNormTools.decomposition.AlphaCutTable`
    """

    def __init__(self, table):
        self.table = table
        self.dim = table.dim

    def _find_multiple(self, x):
        """Return (lam, j) with x = lam * points[j]"""
        pts = self.table.points
        xnorm = np.linalg.norm(x)
        if xnorm == 0:
            return 0., 0
        for j, p in enumerate(pts):
            pp = np.dot(p, p)
            if pp == 0:
                continue
            lam = np.dot(x, p) / pp
            if np.linalg.norm(x - lam * p) <= MULTIPLE_TOL * max(1., xnorm):
                return lam, j
        log.error("{0} is not a multiple of any tabulated point".format(list(x)))
        raise ReconstructionError("Point {0} is not a multiple of a tabulated point".format(list(x)))

    def __call__(self, x, t):
        t = _check_t(t)
        x = as_vector(x, self.dim)
        if x.ndim != 1:
            raise ValueError("ReconstructedNorm takes a single vector")
        if t == 0:
            return 0.
        lam, j = self._find_multiple(x)
        cuts = abs(lam) * self.table.column(j)
        below = self.table.alphas[cuts < t]
        if len(below) == 0:
            return 0.
        return float(np.max(below))


def reconstruct_norm(table):
    """
    Invert a decomposition on its grid.

    Parameters
    ----------
    table : :class:`FuzzNormTools.decomposition.AlphaCutTable`

    Returns
    -------
    norm : :class:`FuzzNormTools.decomposition.ReconstructedNorm`
        A callable norm(x, t), accurate to the alpha mesh away from the tabulated cuts.
    """
    return ReconstructedNorm(table)


class AlphaCutNorm(object):
    """
    The crisp norm x -> p_alpha(x) of a fuzzy norm, as a picklable callable.

    Attributes
    ----------
    norm : :class:`FuzzNormTools.correspondence.FuzzyNorm`
        The fuzzy norm.

    alpha : float
        The level.

    tol : float
        The bisection tolerance.
    """

    def __init__(self, norm, alpha, tol=DEFAULT_TOL):
        self.norm = norm
        self.alpha = _check_alpha(alpha)
        self.tol = tol
        self.dim = norm.dim

    def __call__(self, x):
        return alpha_cut(self.norm, x, self.alpha, self.tol)

    def __repr__(self):
        return "AlphaCutNorm({0!r}, alpha={1})".format(self.norm, self.alpha)
