#!/usr/bin/env python
# encoding: utf-8
"""
interval_dynamics

Exact rational dynamics of piecewise-affine self-maps of [0,1), seen either
as an interval or as the circle R/Z. Regions are finite unions of half-open
intervals [a, b) with rational endpoints; images and preimages of such
regions are computed exactly.

Open balls, Bowen balls and images of decreasing branches are represented
by half-open intervals, so set equalities hold up to finitely many
endpoints.
"""

from bisect import bisect_right
from collections import namedtuple
from fractions import Fraction
import logging
import math

from .exceptions import (PointOutsideDomain,
                         BadRadius,
                         InvalidMap,
                         MaxIterationsExceeded)
from .utils import as_fraction, format_rational, parse_rational

INTERVAL = 'interval'
CIRCLE = 'circle'
TOPOLOGIES = (INTERVAL, CIRCLE)

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def _check_topology(topology):
    if topology not in TOPOLOGIES:
        raise ValueError('{} is not a valid topology, '
                         'choose from {}'.format(topology, TOPOLOGIES))


def distance(x, y, topology=INTERVAL):
    """Distance between two points of [0,1] in the interval or circle metric."""
    d = abs(as_fraction(x) - as_fraction(y))
    if topology == CIRCLE:
        d = d - math.floor(d)
        return min(d, 1 - d)
    return d


def _max_circle_distance(lo, hi):
    # sup of the circle distance to 0 over differences in [lo, hi]
    if math.ceil(lo - HALF) + HALF <= hi:
        return HALF
    return max(distance(lo, 0, CIRCLE), distance(hi, 0, CIRCLE))


class IntervalSet(object):
    """Finite union of disjoint half-open intervals [a, b) inside [0, 1).

    The representation is canonical: intervals are sorted, nonempty and
    overlapping or adjacent intervals are merged. On the circle an interval
    ending at 1 and one starting at 0 form a single arc (see `arcs`); they
    are still stored as two intervals so that equality stays a plain
    comparison of endpoints.

    Parameters
    ----------
    intervals : iterable of (a, b) pairs
        Endpoints are converted to Fractions and clipped to [0, 1).
    topology : {'interval', 'circle'}
        Metric used by `diameter`, `arcs` and `hausdorff_distance`.
    """

    __slots__ = ('_intervals', 'topology')

    def __init__(self, intervals=(), topology=INTERVAL):
        _check_topology(topology)

        pieces = []
        for a, b in intervals:
            a, b = max(as_fraction(a), ZERO), min(as_fraction(b), ONE)
            if a < b:
                pieces.append((a, b))
        pieces.sort()

        merged = []
        for a, b in pieces:
            if merged and a <= merged[-1][1]:
                if b > merged[-1][1]:
                    merged[-1] = (merged[-1][0], b)
            else:
                merged.append((a, b))

        self._intervals = tuple(merged)
        self.topology = topology

    @classmethod
    def full(cls, topology=INTERVAL):
        return cls([(ZERO, ONE)], topology)

    @classmethod
    def empty(cls, topology=INTERVAL):
        return cls([], topology)

    @classmethod
    def arc(cls, a, b, topology=INTERVAL):
        """The set of points between a and b.

        On the circle the endpoints may lie outside [0, 1) and the arc wraps
        around; on the interval the range is clipped.
        """
        a, b = as_fraction(a), as_fraction(b)
        if not a < b:
            return cls.empty(topology)
        if topology == INTERVAL:
            return cls([(a, b)], topology)
        if b - a >= 1:
            return cls.full(topology)
        shift = math.floor(a)
        a, b = a - shift, b - shift
        if b <= 1:
            return cls([(a, b)], topology)
        return cls([(a, ONE), (ZERO, b - 1)], topology)

    @property
    def intervals(self):
        return self._intervals

    def __iter__(self):
        return iter(self._intervals)

    def __len__(self):
        return len(self._intervals)

    def __bool__(self):
        return len(self._intervals) > 0

    __nonzero__ = __bool__

    def __eq__(self, other):
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._intervals == other._intervals

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._intervals)

    def __repr__(self):
        if not self._intervals:
            return 'IntervalSet(empty)'
        return 'IntervalSet({})'.format(' U '.join(
            '[{},{})'.format(a, b) for a, b in self._intervals))

    @property
    def measure(self):
        return sum((b - a for a, b in self._intervals), ZERO)

    def is_full(self):
        return self._intervals == ((ZERO, ONE),)

    def contains_point(self, x):
        x = as_fraction(x)
        idx = bisect_right(self._intervals, (x, ONE + 1)) - 1
        if idx < 0:
            return False
        a, b = self._intervals[idx]
        return a <= x < b

    __contains__ = contains_point

    def _with(self, intervals):
        return IntervalSet(intervals, self.topology)

    def union(self, other):
        return self._with(self._intervals + tuple(other))

    def intersection(self, other):
        if not isinstance(other, IntervalSet):
            other = self._with(other)
        A, B = self._intervals, other._intervals
        out = []
        i = j = 0
        while i < len(A) and j < len(B):
            a = max(A[i][0], B[j][0])
            b = min(A[i][1], B[j][1])
            if a < b:
                out.append((a, b))
            if A[i][1] < B[j][1]:
                i += 1
            else:
                j += 1
        return self._with(out)

    def complement(self):
        gaps = []
        left = ZERO
        for a, b in self._intervals:
            if left < a:
                gaps.append((left, a))
            left = b
        if left < ONE:
            gaps.append((left, ONE))
        return self._with(gaps)

    def difference(self, other):
        if not isinstance(other, IntervalSet):
            other = self._with(other)
        return self.intersection(other.complement())

    def issubset(self, other):
        return not self.difference(other)

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __le__ = issubset

    def closure_hull(self):
        """Closed intervals [a, b] whose union is the closure of the set."""
        return tuple(self._intervals)

    def arcs(self):
        """Connected components as (a, b) pairs.

        On the circle a component through 0 is returned once, as (a, b) with
        b > 1.
        """
        arcs = list(self._intervals)
        if (self.topology == CIRCLE and len(arcs) > 1 and
                arcs[0][0] == ZERO and arcs[-1][1] == ONE):
            first = arcs.pop(0)
            last = arcs.pop()
            arcs.append((last[0], first[1] + 1))
        return arcs

    def diameter(self):
        """Supremum of the distances between points of the set."""
        if not self._intervals:
            return ZERO
        if self.topology == INTERVAL:
            return self._intervals[-1][1] - self._intervals[0][0]

        best = ZERO
        ivs = self._intervals
        for i, (a, b) in enumerate(ivs):
            for c, d in ivs[i:]:
                best = max(best, _max_circle_distance(c - b, d - a))
                if best == HALF:
                    return best
        return best

    def _point_distance(self, x):
        best = None
        for a, b in self._intervals:
            if a <= x <= b:
                return ZERO
            d = min(distance(x, a, self.topology), distance(x, b, self.topology))
            if best is None or d < best:
                best = d
        return best

    def _gap_midpoints(self):
        comp = self.complement()
        mids = [(a + b) / 2 for a, b in comp]
        if self.topology == CIRCLE:
            for a, b in comp.arcs():
                if b > 1:
                    mids.append(((a + b) / 2) % 1)
        return mids

    def hausdorff_distance(self, other):
        """Hausdorff distance between the closures of two sets.

        Returns 0 for two empty sets and 1 when exactly one set is empty.
        """
        if not self and not other:
            return ZERO
        if not self or not other:
            return ONE

        def one_sided(A, B):
            candidates = [p for iv in A for p in iv]
            candidates += [m for m in B._gap_midpoints()
                           if any(a <= m <= b for a, b in A)]
            return max(B._point_distance(p) for p in candidates)

        return max(one_sided(self, other), one_sided(other, self))

    def to_json(self):
        return {'topology': self.topology,
                'intervals': [[format_rational(a), format_rational(b)] for a, b in self._intervals]}

    @classmethod
    def from_json(cls, data, topology=INTERVAL):
        """Read `to_json` output, or a bare list of endpoint pairs in `topology`."""
        if isinstance(data, dict):
            topology = data.get('topology', topology)
            data = data['intervals']
        return cls([(parse_rational(a), parse_rational(b)) for a, b in data], topology)


def as_interval_set(S, topology=INTERVAL):
    """Accept an IntervalSet, a single (a, b) pair or a list of pairs."""
    if isinstance(S, IntervalSet):
        return S
    S = list(S)
    if len(S) == 2 and not isinstance(S[0], (tuple, list)):
        S = [tuple(S)]
    return IntervalSet(S, topology)


Branch = namedtuple('Branch', ['a', 'b', 'slope', 'intercept'])


class PiecewiseAffineMap(object):
    """Self-map of [0,1) given by finitely many affine branches.

    Parameters
    ----------
    branches : list
        Ordered ``((a, b), slope, intercept)`` triples. The half-open
        domains [a, b) must tile [0, 1).
    topology : {'interval', 'circle'}
        Metric on [0,1).
    reduce_mod_one : bool
        Reduce values with x -> x - floor(x), as for beta-transformations.
        Only increasing branches may be reduced.
    name : str, optional
        Label used in reports.

    Notes
    -----
    Internally every branch is cut into `pieces` on which the reduced map is
    affine without any reduction, so that images and preimages are plain
    affine transports of intervals.

    Branch values lie in [0, 1]; the value 1 is only attained at an endpoint
    of a branch whose closed form reaches the right end of the interval
    (f(1/3) = 1 for the invariant-domain map).
    """

    def __init__(self, branches, topology=INTERVAL, reduce_mod_one=False, name=None):
        _check_topology(topology)
        self.topology = topology
        self.reduce_mod_one = bool(reduce_mod_one)
        self.name = name

        parsed = []
        for branch in branches:
            if isinstance(branch, Branch):
                parsed.append(branch)
                continue
            (a, b), slope, intercept = branch
            parsed.append(Branch(as_fraction(a), as_fraction(b),
                                 as_fraction(slope), as_fraction(intercept)))
        parsed.sort(key=lambda br: br.a)
        self.branches = tuple(parsed)

        self._validate()
        self.pieces = self._split_pieces()
        self._starts = [p.a for p in self.pieces]

    def _validate(self):
        if not self.branches:
            raise InvalidMap('a map needs at least one branch')
        if self.branches[0].a != 0 or self.branches[-1].b != 1:
            raise InvalidMap('branch domains should cover [0,1)')
        for left, right in zip(self.branches[:-1], self.branches[1:]):
            if left.b != right.a:
                raise InvalidMap('branch domains [{},{}) and [{},{}) do not '
                                 'tile [0,1)'.format(left.a, left.b, right.a, right.b))
        for br in self.branches:
            if not br.a < br.b:
                raise InvalidMap('empty branch domain [{},{})'.format(br.a, br.b))
            if br.slope == 0:
                raise InvalidMap('branch on [{},{}) has slope 0'.format(br.a, br.b))
            if self.reduce_mod_one:
                if br.slope < 0:
                    raise InvalidMap('reduced branches should be increasing')
                continue
            values = (br.slope * br.a + br.intercept, br.slope * br.b + br.intercept)
            if min(values) < 0 or max(values) > 1:
                raise InvalidMap('branch on [{},{}) leaves [0,1]'.format(br.a, br.b))

    def _split_pieces(self):
        if not self.reduce_mod_one:
            return self.branches

        pieces = []
        for br in self.branches:
            lo_val = br.slope * br.a + br.intercept
            hi_val = br.slope * br.b + br.intercept
            for k in range(math.floor(lo_val), math.ceil(hi_val)):
                a = max(br.a, (k - br.intercept) / br.slope)
                b = min(br.b, (k + 1 - br.intercept) / br.slope)
                if a < b:
                    pieces.append(Branch(a, b, br.slope, br.intercept - k))
        return tuple(pieces)

    def __repr__(self):
        if self.name:
            return 'PiecewiseAffineMap({}, {} branches)'.format(self.name, len(self.branches))
        return 'PiecewiseAffineMap({} branches, {})'.format(len(self.branches), self.topology)

    def piece_index(self, x):
        """Index of the piece containing x."""
        x = as_fraction(x)
        if not 0 <= x < 1:
            raise PointOutsideDomain(x)
        return bisect_right(self._starts, x) - 1

    def eval(self, x):
        """Exact value of the map at x."""
        x = as_fraction(x)
        piece = self.pieces[self.piece_index(x)]
        return piece.slope * x + piece.intercept

    __call__ = eval

    def orbit(self, x, n):
        """The points x, f(x), ..., f^n(x)."""
        points = [as_fraction(x)]
        for _ in range(n):
            points.append(self.eval(points[-1]))
        return points

    def _interval_set(self, intervals):
        return IntervalSet(intervals, self.topology)

    def image(self, S):
        """Exact forward image of a region."""
        S = as_interval_set(S, self.topology)
        out = []
        for a, b in S:
            for piece in self.pieces:
                lo, hi = max(a, piece.a), min(b, piece.b)
                if lo < hi:
                    u = piece.slope * lo + piece.intercept
                    v = piece.slope * hi + piece.intercept
                    out.append((min(u, v), max(u, v)))
        return self._interval_set(out)

    def preimage(self, S):
        """Exact preimage of a region: affine pullbacks cut to the pieces."""
        S = as_interval_set(S, self.topology)
        out = []
        starts = [a for a, _ in S]
        for piece in self.pieces:
            u = piece.slope * piece.a + piece.intercept
            v = piece.slope * piece.b + piece.intercept
            lo_val, hi_val = min(u, v), max(u, v)
            first = max(bisect_right(starts, lo_val) - 1, 0)
            for a, b in S.intervals[first:]:
                if a >= hi_val:
                    break
                x0 = (a - piece.intercept) / piece.slope
                x1 = (b - piece.intercept) / piece.slope
                lo, hi = max(min(x0, x1), piece.a), min(max(x0, x1), piece.b)
                if lo < hi:
                    out.append((lo, hi))
        return self._interval_set(out)

    def iterate_image(self, S, n):
        S = as_interval_set(S, self.topology)
        for _ in range(n):
            S = self.image(S)
        return S

    def iterate_preimage(self, S, n):
        S = as_interval_set(S, self.topology)
        for _ in range(n):
            S = self.preimage(S)
        return S

    def point_preimages(self, y):
        """All points x with f(x) = y, in increasing order."""
        y = as_fraction(y)
        out = []
        for piece in self.pieces:
            x = (y - piece.intercept) / piece.slope
            if piece.a <= x < piece.b:
                out.append(x)
        return sorted(out)

    def to_json(self):
        return {'name': self.name,
                'topology': self.topology,
                'reduce_mod_one': self.reduce_mod_one,
                'branches': [{'domain': [format_rational(br.a), format_rational(br.b)],
                              'slope': format_rational(br.slope),
                              'intercept': format_rational(br.intercept)}
                             for br in self.branches]}

    @classmethod
    def from_json(cls, data):
        try:
            branches = [((parse_rational(br['domain'][0]), parse_rational(br['domain'][1])),
                         parse_rational(br['slope']),
                         parse_rational(br['intercept']))
                        for br in data['branches']]
        except (KeyError, TypeError, IndexError):
            raise InvalidMap('map JSON should hold a list of branches with '
                             'domain, slope and intercept')
        return cls(branches,
                   topology=data.get('topology', INTERVAL),
                   reduce_mod_one=data.get('reduce_mod_one', False),
                   name=data.get('name'))


def doubling_map():
    """x -> 2x mod 1 on the circle."""
    return PiecewiseAffineMap([((0, 1), 2, 0)], topology=CIRCLE,
                              reduce_mod_one=True, name='doubling')


def identity_map(topology=INTERVAL):
    return PiecewiseAffineMap([((0, 1), 1, 0)], topology=topology, name='identity')


def eval_map(f, x):
    return f.eval(x)


def image(f, S):
    return f.image(S)


def preimage(f, S):
    return f.preimage(S)


def _check_radius(eps):
    eps = as_fraction(eps)
    if eps <= 0 or eps > HALF:
        raise BadRadius(eps)
    return eps


def ball(x, eps, topology=INTERVAL):
    """Open ball of radius eps around x, as the half-open set [x-eps, x+eps).

    On the circle a ball of radius 1/2 is the whole circle.
    """
    _check_topology(topology)
    x, eps = as_fraction(x), _check_radius(eps)
    if topology == CIRCLE and eps == HALF:
        return IntervalSet.full(topology)
    return IntervalSet.arc(x - eps, x + eps, topology)


def pull_back_within(f, region, target, steps):
    """region intersected with the `steps`-fold preimage of target.

    The pullback is intersected with the forward images of `region` on the
    way back, which keeps intermediate sets small and does not change the
    result: region & f^-1(D) is always inside f^-1(f(region)).
    """
    if steps == 0:
        return region & target
    forward = [region]
    for _ in range(steps - 1):
        forward.append(f.image(forward[-1]))

    pulled = target
    for j in range(steps - 1, 0, -1):
        pulled = forward[j] & f.preimage(pulled)
        if not pulled:
            return IntervalSet.empty(f.topology)
    return region & f.preimage(pulled)


def bowen_ball(f, x, n, eps):
    """Bowen ball B_n(x, eps) = {y : d(f^i x, f^i y) < eps for 0 <= i < n}.

    Built with the recursion B_{j+1} = B_j & f^-j(B(f^j x, eps)).
    """
    if n < 1:
        raise ValueError('n should be at least 1, got {}'.format(n))
    eps = _check_radius(eps)
    points = f.orbit(x, n - 1)

    region = ball(points[0], eps, f.topology)
    for j in range(1, n):
        region = pull_back_within(f, region, ball(points[j], eps, f.topology), j)
    return region


def bowen_image_diam(f, x, n, eps, steps=None):
    """Diameter of the image of the Bowen ball B_n(x, eps).

    By default the ball is pushed forward `n - 1` times, to the last time
    at which it is constrained, where it contains the ball B(f^{n-1} x, eps)
    whenever a refinement took place. Pass ``steps=n`` for one more push.
    """
    if steps is None:
        steps = n - 1
    return f.iterate_image(bowen_ball(f, x, n, eps), steps).diameter()


def affine_pieces(f, n, lo=ZERO, hi=ONE):
    """Cut [lo, hi] into pieces on which f^n is affine.

    Returns
    -------
    list of (u, v, slope, intercept)
        f^n(x) = slope * x + intercept on [u, v) and, as a limit, at v.
    """
    pieces = [(as_fraction(lo), as_fraction(hi), ONE, ZERO)]
    starts = [p.a for p in f.pieces[1:]]
    for _ in range(n):
        refined = []
        for u, v, s, c in pieces:
            cuts = sorted({u, v} | {(t - c) / s for t in starts if u < (t - c) / s < v})
            for p, q in zip(cuts[:-1], cuts[1:]):
                piece = f.pieces[f.piece_index(s * (p + q) / 2 + c)]
                refined.append((p, q, piece.slope * s, piece.slope * c + piece.intercept))
        pieces = refined
    return pieces


def fixed_points(f, n, S=None):
    """Points of the closure of S (by default [0,1)) with f^n(x) = x, ascending.

    Candidates solve x = s x + c on the affine pieces of f^n and are kept
    only when exact iteration confirms them.
    """
    S = IntervalSet.full(f.topology) if S is None else as_interval_set(S, f.topology)
    out = set()
    for a, b in S.closure_hull():
        for u, v, s, c in affine_pieces(f, n, a, b):
            if s == 1:
                continue
            x = c / (1 - s)
            if u <= x <= v and 0 <= x < 1 and f.orbit(x, n)[-1] == x:
                out.add(x)
    return sorted(out)


def verify_invariant(f, S):
    """True when f(S) = S exactly."""
    S = as_interval_set(S, f.topology)
    return f.image(S) == S


class LeoCertificate(object):
    """Outcome of `leo_certify`.

    Attributes
    ----------
    certified : bool
    n : int or None
        Least number of iterations after which the image covers the target.
    terminal : IntervalSet
        Last image computed.
    failure : MaxIterationsExceeded or None
    """

    def __init__(self, certified, n, terminal, failure=None):
        self.certified = certified
        self.n = n
        self.terminal = terminal
        self.failure = failure

    def __bool__(self):
        return self.certified

    __nonzero__ = __bool__

    def __repr__(self):
        if self.certified:
            return 'LeoCertificate(N={})'.format(self.n)
        return 'LeoCertificate(failed, terminal={!r})'.format(self.terminal)


def leo_certify(f, J, max_n=64, target=None):
    """Least N <= max_n with f^N(J) covering the target (by default [0,1)).

    A restricted target certifies the map on an invariant region, e.g. the
    invariant domain [1/3, 1) of the invariant-domain example.
    """
    J = as_interval_set(J, f.topology)
    if not J:
        raise ValueError('J should be nonempty')
    target = IntervalSet.full(f.topology) if target is None \
        else as_interval_set(target, f.topology)

    current = J
    for n in range(1, max_n + 1):
        current = f.image(current)
        if target.issubset(current):
            return LeoCertificate(True, n, current)

    logging.info('{!r} did not cover {!r} within {} iterations'.format(J, target, max_n))
    return LeoCertificate(False, None, current,
                          MaxIterationsExceeded(max_n, current))


class ExpandingWitness(object):
    """Constants lambda > 1 and 0 < delta0 <= 1/2 of a distance-expanding map."""

    def __init__(self, lambda_, delta0, grid_step=Fraction(1, 2 ** 10)):
        self.lambda_ = as_fraction(lambda_)
        self.delta0 = as_fraction(delta0)
        self.grid_step = as_fraction(grid_step)
        if self.lambda_ <= 1:
            raise ValueError('lambda should exceed 1, got {}'.format(self.lambda_))
        if not 0 < self.delta0 <= HALF:
            raise ValueError('delta0 should lie in (0, 1/2], got {}'.format(self.delta0))
        if self.grid_step <= 0:
            raise ValueError('grid_step should be positive')


class ExpansivityWitness(object):
    """Expansivity constant alpha > 0 and iteration horizon."""

    def __init__(self, alpha, horizon=64):
        self.alpha = as_fraction(alpha)
        self.horizon = int(horizon)
        if self.alpha <= 0:
            raise ValueError('alpha should be positive')
        if self.horizon < 1:
            raise ValueError('horizon should be at least 1')


class ExpansionCheck(object):
    """Pass, or the first pair (x, y) violating the expansion inequality."""

    def __init__(self, passed, pair=None):
        self.passed = passed
        self.pair = pair

    def __bool__(self):
        return self.passed

    __nonzero__ = __bool__

    def __repr__(self):
        if self.passed:
            return 'ExpansionCheck(pass)'
        return 'ExpansionCheck(counterexample={})'.format(self.pair)


def expanding_check(f, witness):
    """Check d(f(x), f(y)) >= lambda d(x, y) whenever d(x, y) < delta0.

    Pairs in different affine pieces are checked exhaustively on the grid
    of step `witness.grid_step`; pairs inside one piece reduce to
    |slope| >= lambda. On the circle, whose diameter is 1/2, pairs with
    lambda d(x, y) > 1/2 are skipped.
    """
    lam, delta0, step = witness.lambda_, witness.delta0, witness.grid_step

    n_points = int(math.ceil(1 / step))
    grid = [step * i for i in range(n_points)]
    values = [f.eval(x) for x in grid]
    pieces = [f.piece_index(x) for x in grid]
    reach = int(math.ceil(delta0 / step))
    wrap = f.topology == CIRCLE

    for i in range(n_points):
        for offset in range(1, reach + 1):
            j = i + offset
            if j >= n_points:
                if not wrap:
                    break
                j -= n_points
                if j >= i:
                    break
            if pieces[i] == pieces[j]:
                continue
            d = distance(grid[i], grid[j], f.topology)
            if d >= delta0 or d == 0 or (wrap and lam * d > HALF):
                continue
            if distance(values[i], values[j], f.topology) < lam * d:
                return ExpansionCheck(False, (grid[i], grid[j]))

    for piece in f.pieces:
        if abs(piece.slope) < lam:
            h = min(step, (piece.b - piece.a) / 2, delta0 / 2)
            return ExpansionCheck(False, (piece.a, piece.a + h))
    return ExpansionCheck(True)


def expansivity_first_separation(f, x, y, witness, strict=True):
    """Least n <= horizon with d(f^n x, f^n y) > alpha, or None.

    With ``strict=False`` the comparison is d >= alpha.
    """
    x, y = as_fraction(x), as_fraction(y)
    if x == y:
        raise ValueError('x and y should be distinct')
    f.piece_index(x)
    f.piece_index(y)

    alpha = witness.alpha
    for n in range(witness.horizon + 1):
        d = distance(x, y, f.topology)
        if d > alpha or (not strict and d == alpha):
            return n
        if n < witness.horizon:
            x, y = f.eval(x), f.eval(y)
    return None


def _unclipped_ball(x, r, topology):
    if topology == CIRCLE and r >= HALF:
        return IntervalSet.full(topology)
    return IntervalSet.arc(x - r, x + r, topology)


class ConformalCheck(object):

    def __init__(self, passed, counterexample=None):
        self.passed = passed
        self.counterexample = counterexample

    def __bool__(self):
        return self.passed

    __nonzero__ = __bool__

    def __repr__(self):
        if self.passed:
            return 'ConformalCheck(pass)'
        return 'ConformalCheck(counterexample={})'.format(self.counterexample)


def is_ball_about(S, center, topology):
    """True when S is a ball about `center` in the given metric."""
    if S.is_full():
        return True
    arcs = S.arcs()
    if len(arcs) != 1:
        return False
    a, b = arcs[0]
    if topology == CIRCLE:
        r = (b - a) / 2
        mid = (a + r) % 1
        return mid == center % 1 and _unclipped_ball(center, r, topology) == S
    r = max(center - a, b - center)
    return _unclipped_ball(center, r, topology) == S


def conformal_like_check(f, radii=None, centers=None):
    """Check that images of balls are balls about the image of the center.

    Parameters
    ----------
    radii : list of rationals, optional
        Defaults to 1/8, 1/16 and 1/32.
    centers : list of rationals, optional
        Defaults to the grid k/16.
    """
    radii = [Fraction(1, 8), Fraction(1, 16), Fraction(1, 32)] if radii is None \
        else [as_fraction(r) for r in radii]
    centers = [Fraction(k, 16) for k in range(16)] if centers is None \
        else [as_fraction(c) for c in centers]

    for eps in radii:
        for x in centers:
            img = f.image(ball(x, eps, f.topology))
            if not is_ball_about(img, f.eval(x), f.topology):
                return ConformalCheck(False, (x, eps))
    return ConformalCheck(True)
