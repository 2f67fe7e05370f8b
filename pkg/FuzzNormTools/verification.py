#! /usr/bin/env python
"""
Seeded checks of the fuzzy norm axioms (N1)-(N7), the generator axioms (A0)-(A3),
the crisp norm axioms of the alpha-cut norms, and the ascending family property.

Failures are returned as :class:`FuzzNormTools.verification.CheckReport` objects
carrying a concrete witness that can be replayed with
:func:`FuzzNormTools.verification.replay_witness`.

Limit properties ((N5), (A2), (N6')) can only be followed for a finite number of
steps. When the followed values neither reach their target nor settle somewhere
else the verdict is inconclusive.
"""

from __future__ import print_function, division

__author__ = "FuzzNorm developers"

import json
import multiprocessing
import sys

import numpy as np
from scipy.optimize import minimize_scalar

from . import flags
from .correspondence import eval_norm, generator_from_norm, GeneratorView
from .decomposition import AlphaCutNorm, BracketError, decompose_table, DEFAULT_TOL
from .generators import as_vector, eval_generator, Generator, DimensionError, QC_TOL

# join the FuzzNorm logger
import logging
log = logging.getLogger('FuzzNorm')

NORM_LABELS = ('N1', 'N2', 'N3', 'N4', 'N5', 'N6', "N6'", 'N7')
GENERATOR_LABELS = ('A0', 'A1', 'A2', 'A3')
CRISP_LABELS = ('crisp-definite', 'crisp-homogeneous', 'crisp-triangle')
LABELS = NORM_LABELS + GENERATOR_LABELS + CRISP_LABELS + ('ascending',)

# closeness to the limit value 1 (N5, A2) or 0 (N6')
LIMIT_EPS = 1e-6
MAX_STEPS = 200
# a followed limit has settled when the last SETTLE_STEPS values move less than SETTLE_TOL
SETTLE_STEPS = 10
SETTLE_TOL = 1e-12
# values below this just above a zero of N(x, .) mean the zero came from underflow
UNDERFLOW = 1e-300
HOMOGENEITY_LAMBDAS = (-2., -0.5, 0.5, 3.)
SCALING_LAMBDAS = (-2., -1., -0.5, 0.5, 3.)
GAP = 0.1
EPS_CONV = 1e-3
REFINE_STEPS = 100


class CheckConfig(object):
    """
    Configuration for the verification harness.

    Attributes
    ----------
    seed : int
        Seed in [0, 2**64). Default = 0.

    samples : int
        Number of random vectors per check, in addition to the fixed vectors
        (zero, unit coordinate vectors and their negatives). Default = 2000.

    tol : float
        Tolerance for alpha-cut and crisp norm checks. Default = 1e-9.

    t_grid : numpy.ndarray
        Positive values of t for t-sweeps. Default = 16 log-spaced values in [1e-4, 1e4].

    lambda_grid : numpy.ndarray
        Convex weights in (0,1). Default = 0.1, 0.2, ..., 0.9.

    box : float
        Random vectors are uniform on [-box, box]^dim. Default = 10.

    eps_conv : float
        Closeness to 1 for fuzzy convergence. Default = 1e-3.

    gap : float
        Deviation that counts as a jump. Default = 0.1.

    conv_t_grid : numpy.ndarray
        Values of t for the convergence checker. Default = 5 log-spaced values in [1, 1e4].

    ray_radii : numpy.ndarray
        Radii for the radial quasiconcavity scan. Default = 20 values evenly spaced in
        [box/20, box].

    cores : int
        Number of processes used to run independent checks. Default = 1.
    """

    def __init__(self, seed=0, samples=2000, tol=DEFAULT_TOL, t_grid=None, lambda_grid=None, box=10.,
                 eps_conv=EPS_CONV, gap=GAP, conv_t_grid=None, ray_radii=None, cores=1):
        seed = int(seed)
        if not 0 <= seed < 2 ** 64:
            raise ValueError("seed must be in [0, 2**64), got {0}".format(seed))
        samples = int(samples)
        if samples < 1:
            raise ValueError("samples must be >= 1, got {0}".format(samples))
        if not tol > 0:
            raise ValueError("tol must be > 0, got {0}".format(tol))
        if not box > 0:
            raise ValueError("box must be > 0, got {0}".format(box))
        self.seed = seed
        self.samples = samples
        self.tol = float(tol)
        self.box = float(box)
        self.eps_conv = float(eps_conv)
        self.gap = float(gap)
        self.cores = int(cores)
        self.t_grid = _grid(np.logspace(-4, 4, 16) if t_grid is None else t_grid, 't_grid')
        self.lambda_grid = _grid(np.round(np.arange(1, 10) * 0.1, 1) if lambda_grid is None else lambda_grid,
                                 'lambda_grid')
        if np.any(self.lambda_grid >= 1):
            raise ValueError("lambda_grid must lie in (0,1)")
        self.conv_t_grid = _grid(np.logspace(0, 4, 5) if conv_t_grid is None else conv_t_grid, 'conv_t_grid')
        self.ray_radii = _grid(np.linspace(self.box / 20, self.box, 20) if ray_radii is None else ray_radii,
                               'ray_radii')

    def __repr__(self):
        return "CheckConfig(seed={0}, samples={1}, tol={2:g}, box={3:g})".format(self.seed, self.samples,
                                                                                self.tol, self.box)


def _grid(values, name):
    """Validate a non-empty grid of positive finite reals"""
    arr = np.array(values, dtype=np.float64).ravel()
    if len(arr) < 1:
        raise ValueError("{0} must not be empty".format(name))
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0):
        raise ValueError("{0} must hold positive finite values".format(name))
    arr.flags.writeable = False
    return arr


class CheckReport(object):
    """
    The outcome of checking one axiom.

    Attributes
    ----------
    axiom : str
        One of :data:`FuzzNormTools.verification.LABELS` (or 'continuity').

    verdict : str
        'pass', 'fail', or 'inconclusive'.

    witness : dict or None
        Inputs and values demonstrating a failure (or the reason for an
        inconclusive verdict).

    samples_used : int
        Number of inputs examined.

    seed : int or None
        The sampling seed.
    """
    header = "#axiom             verdict       samples  seed\n" + \
             "#================================================"
    formatter = "{0.axiom:18s} {0.verdict:12s} {0.samples_used:8d}  {0.seed}"
    names = ['axiom', 'verdict', 'samples_used', 'seed', 'witness']

    def __init__(self, axiom, verdict, witness=None, samples_used=0, seed=None):
        self.axiom = axiom
        self.verdict = verdict
        self.witness = witness
        self.samples_used = int(samples_used)
        self.seed = seed

    @property
    def passed(self):
        return self.verdict == flags.PASS

    def witness_json(self):
        """
        The witness as a JSON string with sorted keys, or '' when there is none.
        """
        if self.witness is None:
            return ''
        return json.dumps(_plain(self.witness), sort_keys=True)

    def as_dict(self):
        return {'axiom': self.axiom, 'verdict': self.verdict, 'witness': self.witness,
                'samples_used': self.samples_used, 'seed': self.seed}

    def __str__(self):
        return self.formatter.format(self)

    def __repr__(self):
        return "CheckReport({0!r}, {1!r})".format(self.axiom, self.verdict)


def _plain(obj):
    """Convert numpy values inside a witness into plain python types"""
    if isinstance(obj, dict):
        return dict((k, _plain(v)) for k, v in obj.items())
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    return obj


def normalize_label(label):
    """
    Map the spellings of an axiom label onto :data:`LABELS`.

    Parameters
    ----------
    label : str
        For example 'n1', 'N6p', "N6'", 'N6′' or 'Ascending'. Case is ignored.

    Returns
    -------
    label : str

    Raises
    ------
    ValueError
        For an unknown label.
    """
    lab = label.strip().replace(u'′', "'")
    if lab.upper() in ('N6P', 'N6PRIME'):
        lab = "N6'"
    known = dict((l.lower(), l) for l in LABELS)
    if lab.lower() not in known:
        raise ValueError("Unknown axiom label {0!r}. Choose from {1}".format(label, ', '.join(LABELS)))
    return known[lab.lower()]


def expand_labels(spec):
    """
    Expand a comma separated list of labels, allowing ranges such as 'N1..N5'.

    Parameters
    ----------
    spec : str or list
        The labels.

    Returns
    -------
    labels : list
        Labels in the order of :data:`LABELS`, without repeats.
    """
    if isinstance(spec, str):
        parts = [p for p in spec.split(',') if p.strip()]
    else:
        parts = list(spec)
    wanted = set()
    for p in parts:
        if '..' in p:
            lo, hi = [normalize_label(q) for q in p.split('..', 1)]
            i, j = LABELS.index(lo), LABELS.index(hi)
            if j < i:
                raise ValueError("Empty label range {0}".format(p))
            wanted.update(LABELS[i:j + 1])
        else:
            wanted.add(normalize_label(p))
    return [lab for lab in LABELS if lab in wanted]


def _rng(cfg, stream):
    """A random generator that depends only on the seed and the stream index"""
    return np.random.default_rng([cfg.seed, stream])


def sample_vectors(cfg, dim, stream=0):
    """
    Draw the sample vectors for a check.

    Parameters
    ----------
    cfg : :class:`FuzzNormTools.verification.CheckConfig`
        The configuration.

    dim : int
        Dimension of the vectors.

    stream : int
        Index of the random stream. Different checks use different streams so that
        the samples of one check do not depend on which other checks are run.

    Returns
    -------
    points : numpy.ndarray
        Shape (1 + 2*dim + cfg.samples, dim). The zero vector, the unit coordinate
        vectors, their negatives, then uniform samples on [-box, box]^dim.
    """
    eye = np.eye(dim)
    fixed = np.vstack([np.zeros((1, dim)), eye, -eye])
    rand = _rng(cfg, stream).uniform(-cfg.box, cfg.box, size=(cfg.samples, dim))
    return np.vstack([fixed, rand])


def _nonzero(points):
    """The rows of points that are not the zero vector"""
    return points[np.any(points != 0, axis=1)]


def _values(gen, points):
    """Evaluate a generator on a stack, one row at a time for plain callables"""
    if isinstance(gen, (Generator, GeneratorView)):
        return np.asarray(eval_generator(gen, points), dtype=np.float64)
    return np.array([gen(x) for x in points], dtype=np.float64)


def _follow_limit(value, points, t0, factor, reached):
    """
    Follow value(points, t) along t = t0 * factor**k until reached(v) holds.

    Parameters
    ----------
    value : callable
        value(points, t) -> array of values.

    points : numpy.ndarray
        A stack of vectors.

    t0, factor : float
        The first t and the multiplier per step.

    reached : callable
        Vectorised predicate on the values.

    Returns
    -------
    status : numpy.ndarray
        Per point: 1 if reached, 2 if the values settled without reaching, 0 if
        still open after :data:`MAX_STEPS` steps.

    t_at, v_at : numpy.ndarray
        The last t and value examined for each point.
    """
    n = len(points)
    status = np.zeros(n, dtype=int)
    t_at = np.zeros(n)
    v_at = np.zeros(n)
    active = np.ones(n, dtype=bool)
    recent = []
    t = t0
    for _ in range(MAX_STEPS + 1):
        v = np.asarray(value(points, t), dtype=np.float64)
        hit = active & reached(v)
        status[hit] = 1
        t_at[hit] = t
        v_at[hit] = v[hit]
        active &= ~hit
        recent = (recent + [v])[-(SETTLE_STEPS + 1):]
        if len(recent) > SETTLE_STEPS:
            spread = np.max(np.abs(np.diff(np.array(recent), axis=0)), axis=0)
            flat = active & (spread <= SETTLE_TOL)
            status[flat] = 2
            t_at[flat] = t
            v_at[flat] = v[flat]
            active &= ~flat
        if not np.any(active):
            break
        t *= factor
    t_at[active] = t
    v_at[active] = v[active]
    return status, t_at, v_at


def _limit_report(label, status, points, t_at, v_at, cfg, what):
    """Turn the outcome of _follow_limit into a report"""
    n = len(points)
    settled = np.where(status == 2)[0]
    if len(settled) > 0:
        i = settled[0]
        return CheckReport(label, flags.FAIL, {'x': points[i], 't': t_at[i], 'value': v_at[i],
                                               'reason': '{0} settled away from its limit'.format(what)},
                           n, cfg.seed)
    still_open = np.where(status == 0)[0]
    if len(still_open) > 0:
        i = still_open[0]
        log.warning("{0}: limit not reached for x={1} after {2} steps".format(label, list(points[i]), MAX_STEPS))
        return CheckReport(label, flags.INCONCLUSIVE, {'x': points[i], 't': t_at[i], 'value': v_at[i],
                                                       'reason': 'limit not reached within the horizon'},
                           n, cfg.seed)
    return CheckReport(label, flags.PASS, None, n, cfg.seed)


# -- fuzzy norm axioms ---------------------------------------------------------


def _check_n1(norm, cfg, stream):
    pts = sample_vectors(cfg, norm.dim, stream)
    vals = np.asarray(eval_norm(norm, pts, 0.))
    bad = np.where(vals != 0)[0]
    if len(bad) > 0:
        i = bad[0]
        return CheckReport('N1', flags.FAIL, {'x': pts[i], 't': 0., 'value': vals[i]}, len(pts), cfg.seed)
    return CheckReport('N1', flags.PASS, None, len(pts), cfg.seed)


def _check_n2(norm, cfg, stream):
    zero = np.zeros(norm.dim)
    for t in cfg.t_grid:
        v = eval_norm(norm, zero, t)
        if v != 1:
            return CheckReport('N2', flags.FAIL, {'x': zero, 't': t, 'value': v, 'reason': 'N(0,t) != 1'},
                               1, cfg.seed)
    pts = _nonzero(sample_vectors(cfg, norm.dim, stream))
    # smaller t gives smaller N, so search downward from the grid
    grid = np.array([eval_norm(norm, pts, t) for t in cfg.t_grid])
    pending = np.where(np.all(grid >= 1, axis=0))[0]
    for i in pending:
        t = cfg.t_grid[0]
        for _ in range(MAX_STEPS):
            t *= 0.5
            if eval_norm(norm, pts[i], t) < 1:
                break
        else:
            return CheckReport('N2', flags.FAIL, {'x': pts[i], 't': t, 'value': eval_norm(norm, pts[i], t),
                                                  'reason': 'N(x,t) = 1 at every probed t for x != 0'},
                               len(pts) + 1, cfg.seed)
    return CheckReport('N2', flags.PASS, None, len(pts) + 1, cfg.seed)


def _check_n3(norm, cfg, stream):
    pts = sample_vectors(cfg, norm.dim, stream)
    for lam in SCALING_LAMBDAS:
        for t in cfg.t_grid:
            lhs = np.asarray(eval_norm(norm, lam * pts, t))
            rhs = np.asarray(eval_norm(norm, pts, t / abs(lam)))
            bad = np.where(np.abs(lhs - rhs) > QC_TOL)[0]
            if len(bad) > 0:
                i = bad[0]
                return CheckReport('N3', flags.FAIL, {'x': pts[i], 't': t, 'lambda': lam,
                                                      'lhs': lhs[i], 'rhs': rhs[i]}, len(pts), cfg.seed)
    return CheckReport('N3', flags.PASS, None, len(pts), cfg.seed)


def _check_n4(norm, cfg, stream):
    rng = _rng(cfg, stream + 1000)
    xs = sample_vectors(cfg, norm.dim, stream)
    ys = xs[rng.permutation(len(xs))]
    ts = rng.choice(cfg.t_grid, size=len(xs))
    ss = rng.choice(cfg.t_grid, size=len(xs))
    for x, y, t, s in zip(xs, ys, ts, ss):
        lhs = eval_norm(norm, x + y, t + s)
        rhs = min(eval_norm(norm, x, t), eval_norm(norm, y, s))
        if lhs < rhs - QC_TOL:
            return CheckReport('N4', flags.FAIL, {'x': x, 'y': y, 't': t, 's': s, 'lhs': lhs, 'rhs': rhs},
                               len(xs), cfg.seed)
    return CheckReport('N4', flags.PASS, None, len(xs), cfg.seed)


def _check_n5(norm, cfg, stream):
    pts = sample_vectors(cfg, norm.dim, stream)
    status, t_at, v_at = _follow_limit(lambda p, t: eval_norm(norm, p, t), pts, 1., 2.,
                                       lambda v: v >= 1 - LIMIT_EPS)
    return _limit_report('N5', status, pts, t_at, v_at, cfg, 'N(x,t) as t grows')


def _genuine_zero(norm, x, t_zero, t_pos):
    """
    Decide whether N(x, t_zero) = 0 is a true zero or floating point underflow.

    The boundary between t_zero and t_pos is located by bisection, and the value just
    above it is inspected. Curves that decay to 0 only asymptotically are still
    subnormal there.
    """
    lo, hi = t_zero, t_pos
    for _ in range(REFINE_STEPS):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if eval_norm(norm, x, mid) > 0:
            hi = mid
        else:
            lo = mid
    return eval_norm(norm, x, hi) > UNDERFLOW


def _check_n6(norm, cfg, stream):
    pts = _nonzero(sample_vectors(cfg, norm.dim, stream))
    grid = cfg.t_grid
    vals = np.array([eval_norm(norm, pts, t) for t in grid])
    for i, x in enumerate(pts):
        col = vals[:, i]
        probes = list(zip(grid, col))
        # extend below the grid while the curve is still positive
        if col[0] > 0:
            t = grid[0]
            for _ in range(MAX_STEPS):
                t *= 0.5
                v = eval_norm(norm, x, t)
                probes.insert(0, (t, v))
                if v == 0:
                    break
        probes.sort()
        zeros = [k for k, (_, v) in enumerate(probes) if v == 0]
        genuine = False
        if zeros:
            k = zeros[-1]
            t_zero = probes[k][0]
            t_pos = probes[k + 1][0] if k + 1 < len(probes) else None
            if t_pos is None:
                t_pos = t_zero
                for _ in range(MAX_STEPS):
                    t_pos *= 2.
                    if eval_norm(norm, x, t_pos) > 0:
                        break
            genuine = _genuine_zero(norm, x, t_zero, t_pos)
        if not genuine:
            # smallest probed t at which N is still clearly positive
            positive = [(t, v) for t, v in probes if v > cfg.tol]
            t_w, v_w = positive[0] if positive else probes[-1]
            return CheckReport('N6', flags.FAIL, {'x': x, 't': t_w, 'value': v_w,
                                                  'reason': 'N(x,t) > 0 at every probed t > 0 for x != 0'},
                               i + 1, cfg.seed)
    return CheckReport('N6', flags.PASS, None, len(pts), cfg.seed)


def _check_n6p(norm, cfg, stream):
    pts = _nonzero(sample_vectors(cfg, norm.dim, stream))
    status, t_at, v_at = _follow_limit(lambda p, t: eval_norm(norm, p, t), pts, cfg.t_grid[0], 0.5,
                                       lambda v: v <= LIMIT_EPS)
    return _limit_report("N6'", status, pts, t_at, v_at, cfg, 'N(x,t) as t -> 0')


def _find_jump(curve, a, b, gap):
    """
    Narrow [a, b] towards a discontinuity of a non-decreasing curve.

    Returns
    -------
    a, b, va, vb : float
        The final interval and the curve values at its ends.
    """
    va, vb = curve(a), curve(b)
    for _ in range(REFINE_STEPS):
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            break
        vm = curve(m)
        # keep the half with the larger rise
        if vm - va >= vb - vm:
            b, vb = m, vm
        else:
            a, va = m, vm
        if vb - va <= gap:
            break
    return a, b, va, vb


def _check_n7(norm, cfg, stream):
    pts = _nonzero(sample_vectors(cfg, norm.dim, stream))
    grid = cfg.t_grid
    vals = np.array([eval_norm(norm, pts, t) for t in grid])
    for i, x in enumerate(pts):
        col = vals[:, i]
        for k in range(len(grid) - 1):
            if col[k + 1] - col[k] > cfg.gap:
                a, b, va, vb = _find_jump(lambda t: eval_norm(norm, x, t), grid[k], grid[k + 1], cfg.gap)
                if vb - va > cfg.gap:
                    return CheckReport('N7', flags.FAIL, {'x': x, 't_left': a, 't_right': b,
                                                          'value_left': va, 'value_right': vb,
                                                          'reason': 'jump in t -> N(x,t)'}, i + 1, cfg.seed)
            inside = 0 < col[k] < 1 and 0 < col[k + 1] < 1
            if inside and not col[k + 1] > col[k]:
                return CheckReport('N7', flags.FAIL, {'x': x, 't_left': grid[k], 't_right': grid[k + 1],
                                                      'value_left': col[k], 'value_right': col[k + 1],
                                                      'reason': 'not strictly increasing on 0 < N < 1'},
                                   i + 1, cfg.seed)
    return CheckReport('N7', flags.PASS, None, len(pts), cfg.seed)


# -- generator axioms ----------------------------------------------------------


def _midpoint_margin(gen, u, r):
    """min(f(a), f(0)) - f(a/2) for a = r*u"""
    a = r * u
    return min(eval_generator(gen, a), eval_generator(gen, np.zeros_like(u))) - eval_generator(gen, 0.5 * a)


def _ray_directions(dim):
    """Unit coordinate vectors and the normalised diagonal"""
    dirs = list(np.eye(dim))
    if dim > 1:
        dirs.append(np.ones(dim) / np.sqrt(dim))
    return dirs


def _check_a0(gen, dim, cfg, stream):
    radii = cfg.ray_radii
    worst = None
    for u in _ray_directions(dim):
        margins = np.array([_midpoint_margin(gen, u, r) for r in radii])
        k = int(np.argmax(margins))
        if margins[k] > QC_TOL and (worst is None or margins[k] > worst[2]):
            worst = (u, k, margins[k])
    if worst is not None:
        u, k, margin = worst
        r = radii[k]
        # shrink the witness towards the largest violation near the grid point
        lo = radii[k - 1] if k > 0 else 0.5 * radii[0]
        hi = radii[k + 1] if k + 1 < len(radii) else radii[k] + (radii[k] - lo)
        res = minimize_scalar(lambda s: -_midpoint_margin(gen, u, s), bounds=(lo, hi), method='bounded',
                              options={'xatol': 1e-12})
        if res.success and -res.fun >= margin:
            r, margin = float(res.x), -float(res.fun)
        a = r * u
        b = np.zeros(dim)
        witness = {'a': a, 'b': b, 'lambda': 0.5, 'f_a': eval_generator(gen, a), 'f_b': eval_generator(gen, b),
                   'f_mid': eval_generator(gen, 0.5 * a), 'margin': margin, 'source': 'ray scan'}
        return CheckReport('A0', flags.FAIL, witness, len(radii) * len(_ray_directions(dim)), cfg.seed)

    rng = _rng(cfg, stream + 1000)
    xs = sample_vectors(cfg, dim, stream)
    ys = xs[rng.permutation(len(xs))]
    fx = _values(gen, xs)
    fy = _values(gen, ys)
    low = np.minimum(fx, fy)
    for lam in cfg.lambda_grid:
        fz = _values(gen, lam * xs + (1 - lam) * ys)
        bad = np.where(fz < low - QC_TOL)[0]
        if len(bad) > 0:
            i = bad[0]
            witness = {'a': xs[i], 'b': ys[i], 'lambda': lam, 'f_a': fx[i], 'f_b': fy[i], 'f_mid': fz[i],
                       'margin': low[i] - fz[i], 'source': 'random pairs'}
            return CheckReport('A0', flags.FAIL, witness, len(xs), cfg.seed)
    return CheckReport('A0', flags.PASS, None, len(xs), cfg.seed)


def _check_a1(gen, dim, cfg, stream):
    zero = np.zeros(dim)
    f0 = eval_generator(gen, zero)
    if f0 != 1:
        return CheckReport('A1', flags.FAIL, {'x': zero, 'value': f0, 'reason': 'f(0) != 1'}, 1, cfg.seed)
    pts = _nonzero(sample_vectors(cfg, dim, stream))
    pending = np.arange(len(pts))
    scale = 1.
    for _ in range(MAX_STEPS + 1):
        vals = _values(gen, scale * pts[pending])
        pending = pending[vals >= 1]
        if len(pending) == 0:
            return CheckReport('A1', flags.PASS, None, len(pts) + 1, cfg.seed)
        scale *= 2.
    i = pending[0]
    return CheckReport('A1', flags.FAIL, {'x': pts[i], 'max_scale': scale / 2., 'value': 1.,
                                          'reason': 'f(s*x) = 1 at every probed s for x != 0'},
                       len(pts) + 1, cfg.seed)


def _check_a2(gen, dim, cfg, stream):
    pts = sample_vectors(cfg, dim, stream)
    status, t_at, v_at = _follow_limit(lambda p, t: _values(gen, t * p), pts, 1., 0.5,
                                       lambda v: v >= 1 - LIMIT_EPS)
    return _limit_report('A2', status, pts, t_at, v_at, cfg, 'f(t*x) as t -> 0')


def _check_a3(gen, dim, cfg, stream):
    pts = sample_vectors(cfg, dim, stream)
    fp = _values(gen, pts)
    fm = _values(gen, -pts)
    bad = np.where(fp != fm)[0]
    if len(bad) > 0:
        i = bad[0]
        return CheckReport('A3', flags.FAIL, {'x': pts[i], 'f_x': fp[i], 'f_minus_x': fm[i]}, len(pts), cfg.seed)
    return CheckReport('A3', flags.PASS, None, len(pts), cfg.seed)


# -- crisp norm axioms ---------------------------------------------------------


def _check_crisp_definite(p, dim, cfg, stream):
    zero = np.zeros(dim)
    p0 = p(zero)
    if p0 > cfg.tol:
        return CheckReport('crisp-definite', flags.FAIL, {'x': zero, 'value': p0, 'tol': cfg.tol,
                                                          'reason': 'p(0) > tol'},
                           1, cfg.seed)
    pts = _nonzero(sample_vectors(cfg, dim, stream))
    for i, x in enumerate(pts):
        v = p(x)
        if not v > cfg.tol:
            return CheckReport('crisp-definite', flags.FAIL, {'x': x, 'value': v, 'tol': cfg.tol,
                                                              'reason': 'p(x) <= tol for x != 0'},
                               i + 2, cfg.seed)
    return CheckReport('crisp-definite', flags.PASS, None, len(pts) + 1, cfg.seed)


def _check_crisp_homogeneous(p, dim, cfg, stream):
    pts = sample_vectors(cfg, dim, stream)
    for x in pts:
        px = p(x)
        for lam in HOMOGENEITY_LAMBDAS:
            plx = p(lam * x)
            if abs(plx - abs(lam) * px) > (1 + abs(lam)) * cfg.tol:
                return CheckReport('crisp-homogeneous', flags.FAIL, {'x': x, 'lambda': lam, 'p_lambda_x': plx,
                                                                     'p_x': px, 'tol': cfg.tol}, len(pts), cfg.seed)
    return CheckReport('crisp-homogeneous', flags.PASS, None, len(pts), cfg.seed)


def _check_crisp_triangle(p, dim, cfg, stream):
    rng = _rng(cfg, stream + 1000)
    xs = sample_vectors(cfg, dim, stream)
    ys = xs[rng.permutation(len(xs))]
    for x, y in zip(xs, ys):
        pxy, px, py = p(x + y), p(x), p(y)
        if pxy > px + py + 3 * cfg.tol:
            return CheckReport('crisp-triangle', flags.FAIL, {'x': x, 'y': y, 'p_x_plus_y': pxy, 'p_x': px,
                                                              'p_y': py, 'tol': cfg.tol}, len(xs), cfg.seed)
    return CheckReport('crisp-triangle', flags.PASS, None, len(xs), cfg.seed)


_NORM_CHECKS = {'N1': _check_n1, 'N2': _check_n2, 'N3': _check_n3, 'N4': _check_n4, 'N5': _check_n5,
                'N6': _check_n6, "N6'": _check_n6p, 'N7': _check_n7}
_GENERATOR_CHECKS = {'A0': _check_a0, 'A1': _check_a1, 'A2': _check_a2, 'A3': _check_a3}
_CRISP_CHECKS = {'crisp-definite': _check_crisp_definite, 'crisp-homogeneous': _check_crisp_homogeneous,
                 'crisp-triangle': _check_crisp_triangle}


def _target_dim(target, dim):
    """The dimension of a generator, norm, or callable"""
    tdim = getattr(target, 'dim', None)
    if tdim is None:
        tdim = dim
    if tdim is None:
        raise DimensionError("Cannot determine the dimension of {0!r}; pass dim=".format(target))
    return int(tdim)


def _dispatch(label, target, dim, cfg):
    """Run the check for one label"""
    stream = LABELS.index(label)
    if label in _NORM_CHECKS:
        return _NORM_CHECKS[label](target, cfg, stream)
    if label in _GENERATOR_CHECKS:
        return _GENERATOR_CHECKS[label](target, dim, cfg, stream)
    try:
        return _CRISP_CHECKS[label](target, dim, cfg, stream)
    except BracketError as e:
        return _bracket_report(label, e, cfg)


def _bracket_report(label, err, cfg):
    """An inconclusive report for a p_alpha that could not be bracketed"""
    log.warning("{0}: {1}".format(label, err))
    witness = {'reason': 'no bracket for p_alpha: {0}'.format(err)}
    if err.point is not None:
        witness['x'] = err.point
    if err.alpha is not None:
        witness['alpha'] = err.alpha
    return CheckReport(label, flags.INCONCLUSIVE, witness, 0, cfg.seed)


def _run_check(args):
    """
    A shallow wrapper for _dispatch so that checks can be mapped over a pool.

    Parameters
    ----------
    args : tuple
        (label, target, dim, cfg)

    Returns
    -------
    report : :class:`FuzzNormTools.verification.CheckReport`
    """
    try:
        return _dispatch(*args)
    except Exception:
        # an easier to debug traceback when multiprocessing
        import traceback
        raise RuntimeError("".join(traceback.format_exception(*sys.exc_info())))


def _run_all(jobs, cores):
    """Run the jobs serially or over a pool; the order of the reports is the order of the jobs"""
    if cores > 1 and len(jobs) > 1:
        cores = min(multiprocessing.cpu_count(), cores, len(jobs))
        log.info("using {0} cores for {1} checks".format(cores, len(jobs)))
        pool = multiprocessing.Pool(processes=cores)
        try:
            reports = pool.map(_run_check, jobs)
        finally:
            pool.close()
            pool.join()
    else:
        reports = [_dispatch(*j) for j in jobs]
    for r in reports:
        log.debug(str(r))
    return reports


def check_fuzzy_norm_axioms(norm, cfg=None, which=None, alpha=None):
    """
    Check the fuzzy norm axioms on seeded samples.

    Parameters
    ----------
    norm : :class:`FuzzNormTools.correspondence.FuzzyNorm`
        The norm, checked or unchecked.

    cfg : :class:`FuzzNormTools.verification.CheckConfig`
        The configuration. Default = CheckConfig().

    which : str or list
        Labels to check. Default = 'N1..N5'. Generator labels (A0-A3) are checked on
        f_N(x) = N(x,1). Crisp labels are checked on p_alpha (requires alpha), and
        'ascending' on an alpha-cut table of sampled points.

    alpha : float
        Level for the crisp labels.

    Returns
    -------
    reports : list
        One :class:`FuzzNormTools.verification.CheckReport` per label, in the order of
        :data:`LABELS`.
    """
    if cfg is None:
        cfg = CheckConfig()
    labels = expand_labels('N1..N5' if which is None else which)
    jobs = []
    extra = {}
    for lab in labels:
        if lab in _NORM_CHECKS:
            jobs.append((lab, norm, norm.dim, cfg))
        elif lab in _GENERATOR_CHECKS:
            jobs.append((lab, generator_from_norm(norm), norm.dim, cfg))
        elif lab in _CRISP_CHECKS:
            if alpha is None:
                extra[lab] = CheckReport(lab, flags.INCONCLUSIVE, {'reason': 'no alpha given'}, 0, cfg.seed)
            else:
                jobs.append((lab, AlphaCutNorm(norm, alpha, cfg.tol), norm.dim, cfg))
    reports = dict((r.axiom, r) for r in _run_all(jobs, cfg.cores))
    reports.update(extra)
    if 'ascending' in labels:
        pts = sample_vectors(cfg, norm.dim, LABELS.index('ascending'))[:min(cfg.samples, 50)]
        alphas = np.round(np.linspace(0.025, 0.975, 21), 4)
        try:
            table = decompose_table(norm, alphas, pts, cfg.tol, cores=cfg.cores)
        except BracketError as e:
            reports['ascending'] = _bracket_report('ascending', e, cfg)
        else:
            rep = check_ascending_family(table)
            rep.seed = cfg.seed
            reports['ascending'] = rep
    return [reports[lab] for lab in labels]


def check_generator_axioms(gen, cfg=None, which=None, dim=None):
    """
    Check the generator axioms (A0)-(A3) on seeded samples.

    - A0 (quasiconcavity): a radial scan of midpoints between 0 and r*u, then random
      pairs and every lambda in the grid. A radial violation is refined to the radius
      with the largest violation.
    - A1: f(0) = 1 exactly, and for every sampled x != 0 some scaling s*x with f(s*x) < 1.
    - A2: f(t*x) -> 1 as t is halved.
    - A3: f(-x) = f(x) exactly.

    Parameters
    ----------
    gen : :class:`FuzzNormTools.generators.Generator` or callable
        The generator. Any callable on vectors is accepted, in which case dim is required.

    cfg : :class:`FuzzNormTools.verification.CheckConfig`
        The configuration. Default = CheckConfig().

    which : str or list
        Labels to check. Default = 'A0..A3'.

    dim : int
        Dimension, for callables without a dim attribute.

    Returns
    -------
    reports : list
        One :class:`FuzzNormTools.verification.CheckReport` per label.
    """
    if cfg is None:
        cfg = CheckConfig()
    dim = _target_dim(gen, dim)
    labels = expand_labels('A0..A3' if which is None else which)
    for lab in labels:
        if lab not in _GENERATOR_CHECKS:
            raise ValueError("{0} is not a generator axiom".format(lab))
    return _run_all([(lab, gen, dim, cfg) for lab in labels], cfg.cores)


def check_crisp_norm_axioms(p, cfg=None, dim=None):
    """
    Check that a function is a crisp norm: definiteness, absolute homogeneity and the
    triangle inequality, each up to the tolerances used by the alpha-cut solver.

    Parameters
    ----------
    p : callable
        A function of a single vector returning a non-negative real.

    cfg : :class:`FuzzNormTools.verification.CheckConfig`
        The configuration. Default = CheckConfig().

    dim : int
        Dimension, for callables without a dim attribute.

    Returns
    -------
    reports : list
        Reports for 'crisp-definite', 'crisp-homogeneous', and 'crisp-triangle'.
    """
    if cfg is None:
        cfg = CheckConfig()
    dim = _target_dim(p, dim)
    return _run_all([(lab, p, dim, cfg) for lab in CRISP_LABELS], cfg.cores)


def check_ascending_family(table):
    """
    Check that every column of an alpha-cut table is non-decreasing in alpha.

    Parameters
    ----------
    table : :class:`FuzzNormTools.decomposition.AlphaCutTable`

    Returns
    -------
    report : :class:`FuzzNormTools.verification.CheckReport`
        Label 'ascending'. A failure carries the offending (alpha_i, alpha_i+1, point) cell.
    """
    vals = table.values
    ncells = vals.size
    for j in range(vals.shape[1]):
        for i in range(vals.shape[0] - 1):
            if vals[i + 1, j] < vals[i, j] - 2 * table.tol:
                witness = {'alpha_low': table.alphas[i], 'alpha_high': table.alphas[i + 1], 'point_index': j,
                           'point': table.points[j], 'p_low': vals[i, j], 'p_high': vals[i + 1, j]}
                return CheckReport('ascending', flags.FAIL, witness, ncells, None)
    return CheckReport('ascending', flags.PASS, None, ncells, None)


# -- continuity ----------------------------------------------------------------


class ProbeResult(object):
    """
    Classification of a function near a point.

    Attributes
    ----------
    classification : str
        'continuous', 'jump', or 'inconclusive'.

    gap : float
        The smallest deviation over the innermost radii (the size of the detected jump).

    radii, deviations : numpy.ndarray
        max |f(x0 + r*u) - f(x0)| over the directions, for each radius.
    """

    def __init__(self, classification, gap, radii, deviations):
        self.classification = classification
        self.gap = gap
        self.radii = radii
        self.deviations = deviations

    def __repr__(self):
        return "ProbeResult({0!r}, gap={1:g})".format(self.classification, self.gap)


def _default_radii():
    return np.logspace(0, -10, 21)


def _check_radii(radii):
    radii = np.asarray(_default_radii() if radii is None else radii, dtype=np.float64).ravel()
    if len(radii) < 2 or np.any(radii <= 0) or np.any(np.diff(radii) >= 0):
        raise ValueError("radii must be positive and strictly decreasing")
    if radii[-1] >= 1e-8:
        raise ValueError("radii must decrease below 1e-8")
    return radii


def _classify(radii, devs, gap, tol):
    """Classify deviations that were measured at decreasing radii"""
    inner = devs[-max(3, len(devs) // 3):]
    observed = float(np.min(inner))
    if observed >= gap:
        return ProbeResult(flags.JUMP, observed, radii, devs)
    if devs[-1] <= 100 * tol:
        return ProbeResult(flags.CONTINUOUS, observed, radii, devs)
    return ProbeResult(flags.INCONCLUSIVE, observed, radii, devs)


def probe_continuity(func, x0, radii=None, gap=GAP, tol=DEFAULT_TOL):
    """
    Probe a function for continuity at a point.

    The function is sampled on shells x0 + r*u for the unit coordinate directions, their
    negatives, and the normalised diagonal (and its negative), as r decreases.

    Parameters
    ----------
    func : :class:`FuzzNormTools.generators.Generator` or callable
        Function of a vector.

    x0 : array-like
        The point.

    radii : array-like
        Strictly decreasing positive radii reaching below 1e-8.
        Default = 21 log-spaced values from 1 to 1e-10.

    gap : float
        Deviation that counts as a jump. Default = 0.1.

    tol : float
        Deviations below 100*tol at the smallest radius count as continuous.

    Returns
    -------
    result : :class:`FuzzNormTools.verification.ProbeResult`
    """
    radii = _check_radii(radii)
    x0 = as_vector(x0, getattr(func, 'dim', None))
    dim = len(x0)
    dirs = _ray_directions(dim)
    dirs = dirs + [-u for u in dirs]
    f0 = eval_generator(func, x0)
    devs = np.array([max(abs(eval_generator(func, x0 + r * u) - f0) for u in dirs) for r in radii])
    return _classify(radii, devs, gap, tol)


def probe_t_continuity(norm, x, t0, radii=None, gap=GAP, tol=DEFAULT_TOL):
    """
    Probe the curve t -> N(x, t) for continuity at t0.

    Parameters
    ----------
    norm : :class:`FuzzNormTools.correspondence.FuzzyNorm`
        The norm.

    x : array-like
        The vector.

    t0 : float
        The point on the curve, t0 >= 0. Radii larger than t0 are only probed to the right.

    radii, gap, tol
        See :func:`FuzzNormTools.verification.probe_continuity`.

    Returns
    -------
    result : :class:`FuzzNormTools.verification.ProbeResult`
    """
    radii = _check_radii(radii)
    x = as_vector(x, norm.dim)
    t0 = float(t0)
    f0 = eval_norm(norm, x, t0)
    devs = []
    for r in radii:
        d = abs(eval_norm(norm, x, t0 + r) - f0)
        if r <= t0:
            d = max(d, abs(eval_norm(norm, x, t0 - r) - f0))
        devs.append(d)
    return _classify(radii, np.array(devs), gap, tol)


class _Section(object):
    """The function x -> N(x, t0)"""

    def __init__(self, norm, t0):
        self.norm = norm
        self.t0 = t0
        self.dim = norm.dim

    def __call__(self, x):
        return eval_norm(self.norm, x, self.t0)


def check_continuity_correspondence(norm, x0, t0, cfg=None, radii=None):
    """
    Compare continuity of N(., t0) at x0 with continuity of t -> N(x0, t) at t0.

    In finite dimensions N(., t0) is always continuous at 0, and at x0 != 0 with
    N(x0, t0) < 1 it is continuous exactly when the t-curve is continuous at t0.

    Parameters
    ----------
    norm : :class:`FuzzNormTools.correspondence.FuzzyNorm`
        The norm.

    x0 : array-like
        The point.

    t0 : float
        The value of t, t0 > 0.

    cfg : :class:`FuzzNormTools.verification.CheckConfig`
        For gap and tol. Default = CheckConfig().

    radii : array-like
        See :func:`FuzzNormTools.verification.probe_continuity`.

    Returns
    -------
    report : :class:`FuzzNormTools.verification.CheckReport`
        Label 'continuity'.
    """
    if cfg is None:
        cfg = CheckConfig()
    x0 = as_vector(x0, norm.dim)
    section = _Section(norm, t0)
    spatial = probe_continuity(section, x0, radii, cfg.gap, cfg.tol)
    witness = {'x0': x0, 't0': t0, 'spatial': spatial.classification, 'spatial_gap': spatial.gap}
    if not np.any(x0):
        verdict = flags.PASS if spatial.classification == flags.CONTINUOUS else flags.FAIL
        return CheckReport('continuity', verdict, witness if verdict == flags.FAIL else None, 1, cfg.seed)
    if eval_norm(norm, x0, t0) >= 1:
        witness['reason'] = 'N(x0,t0) = 1'
        return CheckReport('continuity', flags.INCONCLUSIVE, witness, 1, cfg.seed)
    temporal = probe_t_continuity(norm, x0, t0, radii, cfg.gap, cfg.tol)
    witness['temporal'] = temporal.classification
    witness['temporal_gap'] = temporal.gap
    if flags.INCONCLUSIVE in (spatial.classification, temporal.classification):
        return CheckReport('continuity', flags.INCONCLUSIVE, witness, 1, cfg.seed)
    if spatial.classification == temporal.classification:
        return CheckReport('continuity', flags.PASS, None, 1, cfg.seed)
    return CheckReport('continuity', flags.FAIL, witness, 1, cfg.seed)


# -- convergence ---------------------------------------------------------------

SEQUENCE_RULES = ('inverse_n', 'constant', 'alternating')


class SequenceRule(object):
    """
    A named rule generating x_n from a base vector v.

    - inverse_n: x_n = v/n
    - constant: x_n = v
    - alternating: x_n = v for odd n, v/n for even n
    """

    def __init__(self, name, vector):
        if name not in SEQUENCE_RULES:
            raise ValueError("Unknown sequence rule {0!r}. Choose from {1}".format(name, ', '.join(SEQUENCE_RULES)))
        self.name = name
        self.vector = as_vector(vector)
        if name != 'inverse_n' and not np.any(self.vector):
            raise ValueError("The {0} rule needs a non-zero vector".format(name))

    def __call__(self, n):
        if self.name == 'inverse_n':
            return self.vector / n
        if self.name == 'constant':
            return self.vector
        return self.vector if n % 2 else self.vector / n


class ConvergenceReport(object):
    """
    Fuzzy and crisp verdicts for a sequence tending to 0.

    Attributes
    ----------
    fuzzy : bool
        True if N(x_n, t) >= 1 - eps_conv on the tail for every t in the scaled grid.

    crisp : bool
        True if ||x_n|| <= eps_conv * min(t grid) * scale on the tail.

    per_t : list
        (t, smallest N(x_n, t) on the tail, verdict) for each scaled t.

    witness : dict or None
        The first t and n with N(x_n, t) < 1 - eps_conv on the tail.

    n_max : int
        Length of the sequence.

    tail_norm : float
        Largest ||x_n|| on the tail.

    scale : float
        Largest ||x_n|| over the whole sequence (1 for the zero sequence).
    """

    def __init__(self, fuzzy, crisp, per_t, witness, n_max, tail_norm, scale=1.):
        self.fuzzy = fuzzy
        self.crisp = crisp
        self.per_t = per_t
        self.witness = witness
        self.n_max = n_max
        self.tail_norm = tail_norm
        self.scale = scale

    @property
    def agree(self):
        return self.fuzzy == self.crisp

    def lines(self):
        """
        The report as a list of text lines.
        """
        out = ["#t              min_tail_N           converges",
               "#============================================"]
        for t, v, ok in self.per_t:
            out.append("{0:<16.6g} {1:<20.17g} {2}".format(t, v, str(ok).lower()))
        out.append("fuzzy: {0}".format(str(self.fuzzy).lower()))
        out.append("crisp: {0} (max tail norm {1:.17g}, scale {2:.17g})".format(str(self.crisp).lower(),
                                                                               self.tail_norm, self.scale))
        out.append("fuzzy == crisp: {0}".format(str(self.agree).lower()))
        return out

    def __repr__(self):
        return "ConvergenceReport(fuzzy={0}, crisp={1})".format(self.fuzzy, self.crisp)


def check_fuzzy_convergence(norm, seq, n_max, cfg=None):
    """
    Compare fuzzy convergence of a sequence to 0 with crisp convergence.

    Both verdicts are judged on the tail n_max//2 <= n <= n_max, in units of the
    largest term S = max ||x_n|| over 1 <= n <= n_max:

    - fuzzy: N(x_n, tau*S) >= 1 - eps_conv on the tail for every tau in conv_t_grid.
    - crisp: ||x_n|| <= eps_conv * min(conv_t_grid) * S on the tail.

    Rescaling the sequence therefore does not change either verdict. In finite
    dimension the two should agree.

    Parameters
    ----------
    norm : :class:`FuzzNormTools.correspondence.FuzzyNorm`
        The norm.

    seq : callable
        n -> x_n for n >= 1, for example a :class:`FuzzNormTools.verification.SequenceRule`.

    n_max : int
        Number of terms, at least 10.

    cfg : :class:`FuzzNormTools.verification.CheckConfig`
        For eps_conv and conv_t_grid. Default = CheckConfig().

    Returns
    -------
    report : :class:`FuzzNormTools.verification.ConvergenceReport`
    """
    if cfg is None:
        cfg = CheckConfig()
    n_max = int(n_max)
    if n_max < 10:
        raise ValueError("n_max must be >= 10, got {0}".format(n_max))
    terms = as_vector(np.array([seq(n) for n in range(1, n_max + 1)]), norm.dim)
    sizes = np.linalg.norm(terms, axis=1)
    scale = float(np.max(sizes))
    if scale == 0:
        scale = 1.
    ns = np.arange(n_max // 2, n_max + 1)
    tail = terms[ns - 1]

    per_t = []
    witness = None
    for tau in cfg.conv_t_grid:
        t = float(tau) * scale
        vals = np.asarray(eval_norm(norm, tail, t))
        ok = bool(np.all(vals >= 1 - cfg.eps_conv))
        per_t.append((t, float(np.min(vals)), ok))
        if not ok and witness is None:
            k = int(np.argmin(vals))
            witness = {'t': t, 'n': int(ns[k]), 'x_n': tail[k].tolist(), 'value': float(vals[k])}
    fuzzy = all(ok for _, _, ok in per_t)
    tail_norm = float(np.max(sizes[ns - 1]))
    crisp = tail_norm <= cfg.eps_conv * float(np.min(cfg.conv_t_grid)) * scale
    report = ConvergenceReport(fuzzy, crisp, per_t, witness, n_max, tail_norm, scale)
    if not report.agree:
        log.warning("fuzzy ({0}) and crisp ({1}) convergence verdicts disagree".format(fuzzy, crisp))
    return report


# -- witness replay ------------------------------------------------------------


def replay_witness(report, target):
    """
    Re-evaluate the witness of a failed report in isolation.

    Parameters
    ----------
    report : :class:`FuzzNormTools.verification.CheckReport`
        A report with verdict 'fail'.

    target : object
        What the report was produced from: a FuzzyNorm for N labels, a generator for
        A labels, a crisp norm callable for crisp labels, or an AlphaCutTable for 'ascending'.

    Returns
    -------
    reproduced : bool
        True if the violated inequality holds again at the witness.
    """
    if report.verdict != flags.FAIL or report.witness is None:
        return False
    w = report.witness
    lab = report.axiom
    def N(x, t):
        return eval_norm(target, x, t)
    if lab == 'N1':
        return N(w['x'], 0.) != 0
    if lab == 'N2':
        if not np.any(w['x']):
            return N(w['x'], w['t']) != 1
        return N(w['x'], w['t']) == 1
    if lab == 'N3':
        lam = w['lambda']
        return abs(N(lam * np.asarray(w['x']), w['t']) - N(w['x'], w['t'] / abs(lam))) > QC_TOL
    if lab == 'N4':
        x, y = np.asarray(w['x']), np.asarray(w['y'])
        return N(x + y, w['t'] + w['s']) < min(N(x, w['t']), N(y, w['s'])) - QC_TOL
    if lab == 'N5':
        return N(w['x'], w['t']) < 1 - LIMIT_EPS
    if lab == 'N6':
        return N(w['x'], w['t']) > 0
    if lab == "N6'":
        return N(w['x'], w['t']) > LIMIT_EPS
    if lab == 'N7':
        vl, vr = N(w['x'], w['t_left']), N(w['x'], w['t_right'])
        if w.get('reason', '').startswith('jump'):
            return vr - vl > GAP
        return not vr > vl
    if lab == 'A0':
        a, b, lam = np.asarray(w['a']), np.asarray(w['b']), w['lambda']
        fa, fb = eval_generator(target, a), eval_generator(target, b)
        return eval_generator(target, lam * a + (1 - lam) * b) < min(fa, fb) - QC_TOL
    if lab == 'A1':
        if 'max_scale' in w:
            return eval_generator(target, w['max_scale'] * np.asarray(w['x'])) == 1
        return eval_generator(target, w['x']) != 1
    if lab == 'A2':
        return eval_generator(target, w['t'] * np.asarray(w['x'])) < 1 - LIMIT_EPS
    if lab == 'A3':
        x = np.asarray(w['x'])
        return eval_generator(target, x) != eval_generator(target, -x)
    tol = w.get('tol', DEFAULT_TOL)
    if lab == 'crisp-definite':
        x = np.asarray(w['x'])
        return target(x) > tol if not np.any(x) else not target(x) > tol
    if lab == 'crisp-homogeneous':
        x, lam = np.asarray(w['x']), w['lambda']
        return abs(target(lam * x) - abs(lam) * target(x)) > (1 + abs(lam)) * tol
    if lab == 'crisp-triangle':
        x, y = np.asarray(w['x']), np.asarray(w['y'])
        return target(x + y) > target(x) + target(y) + 3 * tol
    if lab == 'ascending':
        i = int(np.searchsorted(target.alphas, w['alpha_low']))
        j = w['point_index']
        return target.values[i + 1, j] < target.values[i, j] - 2 * target.tol
    raise ValueError("No replay for label {0}".format(lab))
