#!/usr/bin/env python
# encoding: utf-8
"""
specification

N-spaced specifications and the shadowing solver. A specification is a
family of orbit segments f^[a_i, b_i](x_i) with a_i - b_{i-1} >= N; the
solver builds the nested regions

    B_{m_1+1}(f^{a_1} x_1, eps) & f^-(a_i - a_1)(B_{m_i+1}(f^{a_i} x_i, eps))

one segment at a time, picks a representative of the last region and
verifies the shadowing inequality with exact arithmetic. The
representative is f^{a_1} x_1 when it lies in that region, else the
least-denominator rational of the region (least word for shifts), not a
midpoint.

The solver is generic over a `RegionSystem`: `IntervalRegionSystem` wraps
a PiecewiseAffineMap (regions are IntervalSets), `ShiftRegionSystem` wraps
a ShiftSpace (regions are CylinderSets).
"""

from fractions import Fraction
import logging
import math

from .exceptions import (EmptyRefinement,
                         GapBelowCoveringTime,
                         NoPeriodicPointInRegion,
                         NotApplicable,
                         NotCoveringWithinBound,
                         SpacingViolation,
                         TruncationTooSmall)
from .interval_dynamics import (IntervalSet,
                                ball,
                                bowen_ball,
                                distance,
                                fixed_points,
                                pull_back_within,
                                _check_radius)
from .symbolic import (CylinderSet,
                       SymbolSequence,
                       is_sigma_graph,
                       sequence_distance,
                       words,
                       _dyadic_exponent)
from .utils import as_fraction, format_rational, parse_rational, simplest_in


class OrbitSegment(object):
    """The orbit segment f^[a, b](x) = {f^j(x) : a <= j <= b}.

    Parameters
    ----------
    a, b : int
        0 <= a <= b.
    x : point
        A rational for interval systems, a SymbolSequence for shifts.
    lag : int
        The segment follows the point "f^-lag(x)", i.e. its orbit at time
        j is f^(j - lag)(x). Only used for the wrap-around segment of
        `periodic_extend`, whose point is never materialized.
    """

    def __init__(self, a, b, x, lag=0):
        a, b, lag = int(a), int(b), int(lag)
        if not 0 <= a <= b:
            raise ValueError('segment times should satisfy 0 <= a <= b, '
                             'got a={}, b={}'.format(a, b))
        if lag < 0 or lag > a:
            raise ValueError('lag should lie in [0, a]')
        self.a = a
        self.b = b
        self.x = x
        self.lag = lag

    @property
    def m(self):
        return self.b - self.a

    def __repr__(self):
        lag = ', lag={}'.format(self.lag) if self.lag else ''
        return 'OrbitSegment([{}, {}], {!r}{})'.format(self.a, self.b, self.x, lag)

    def __eq__(self, other):
        if not isinstance(other, OrbitSegment):
            return NotImplemented
        return (self.a, self.b, self.x, self.lag) == (other.a, other.b, other.x, other.lag)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.a, self.b, self.lag))


class SpecificationInstance(object):
    """Ordered orbit segments with a gap N and a tolerance eps."""

    def __init__(self, segments, gap, eps):
        self.segments = tuple(segments)
        if not self.segments:
            raise ValueError('a specification needs at least one segment')
        self.gap = int(gap)
        self.eps = as_fraction(eps)
        if self.gap < 0:
            raise ValueError('gap should be nonnegative')

    def __len__(self):
        return len(self.segments)

    def __repr__(self):
        return 'SpecificationInstance({} segments, N={}, eps={})'.format(
            len(self.segments), self.gap, self.eps)

    def to_json(self, system):
        out = []
        for seg in self.segments:
            item = {'a': seg.a, 'b': seg.b, 'x': system.point_to_json(seg.x)}
            if seg.lag:
                item['lag'] = seg.lag
            out.append(item)
        return {'gap': self.gap, 'eps': format_rational(self.eps), 'segments': out}

    @classmethod
    def from_json(cls, data, system):
        segments = []
        for item in data['segments']:
            if isinstance(item, dict):
                segments.append(OrbitSegment(item['a'], item['b'],
                                             system.point_from_json(item['x']),
                                             item.get('lag', 0)))
            else:
                a, b, x = item
                segments.append(OrbitSegment(a, b, system.point_from_json(x)))
        eps = data['eps']
        eps = parse_rational(eps) if isinstance(eps, str) else as_fraction(eps)
        return cls(segments, data['gap'], eps)


class SpacingCheck(object):
    """Pass, or the (1-based) index of the first segment starting too early."""

    def __init__(self, passed, index=None):
        self.passed = passed
        self.index = index

    def __bool__(self):
        return self.passed

    __nonzero__ = __bool__

    def __repr__(self):
        if self.passed:
            return 'SpacingCheck(pass)'
        return 'SpacingCheck(violation({}))'.format(self.index)


def validate_spacing(spec):
    """Check a_i - b_{i-1} >= N for consecutive segments."""
    for i in range(1, len(spec.segments)):
        if spec.segments[i].a - spec.segments[i - 1].b < spec.gap:
            return SpacingCheck(False, i + 1)
    return SpacingCheck(True)


class ShadowingCheck(object):
    """Exact maximal deviation max d(f^k y, f^k x_i) over all windows."""

    def __init__(self, passed, deviation, worst=None):
        self.passed = passed
        self.deviation = deviation
        self.worst = worst

    def __bool__(self):
        return self.passed

    __nonzero__ = __bool__

    def __repr__(self):
        return 'ShadowingCheck({}, deviation={})'.format(
            'pass' if self.passed else 'fail', self.deviation)


class ShadowResult(object):
    """Nested certificate, representative and optional period.

    Attributes
    ----------
    certificate : list
        One region per refinement stage, all at time a_1; each region is
        contained in the previous one and nonempty.
    representative : point
        The shadowing point y (at time 0).
    period : int or None
        When set, f^period(y) = y exactly.
    check : ShadowingCheck
    spec : SpecificationInstance
        The instance that was refined (the extended one for periodic runs).
    """

    def __init__(self, certificate, representative, check, spec, period=None):
        self.certificate = list(certificate)
        self.representative = representative
        self.check = check
        self.spec = spec
        self.period = period

    @property
    def periodic(self):
        if self.period is None:
            return None
        return {'period': self.period}

    @property
    def deviation(self):
        return self.check.deviation

    def __repr__(self):
        period = ', period={}'.format(self.period) if self.period is not None else ''
        return 'ShadowResult(y={!r}, deviation={}{})'.format(
            self.representative, self.deviation, period)

    def to_json(self, system):
        return {'representative': system.point_to_json(self.representative),
                'deviation': format_rational(self.deviation),
                'periodic': self.periodic,
                'certificate': [system.region_to_json(R) for R in self.certificate],
                'spec': self.spec.to_json(system)}

    @classmethod
    def from_json(cls, data, system):
        spec = SpecificationInstance.from_json(data['spec'], system)
        deviation = parse_rational(data['deviation'])
        periodic = data.get('periodic')
        return cls([system.region_from_json(R) for R in data['certificate']],
                   system.point_from_json(data['representative']),
                   ShadowingCheck(deviation <= spec.eps, deviation),
                   spec,
                   None if periodic is None else int(periodic['period']))


class RegionSystem(object):
    """A dynamical system with exact region operations.

    Subclasses implement the methods below; regions are values with
    truthiness for nonemptiness and `&` for intersection.
    """

    def __init__(self):
        self._covering_times = {}

    def check_eps(self, eps):
        raise NotImplementedError('implement in subclass')

    def whole(self):
        raise NotImplementedError('implement in subclass')

    def is_whole(self, region):
        raise NotImplementedError('implement in subclass')

    def image(self, region):
        raise NotImplementedError('implement in subclass')

    def pull_back_within(self, region, target, steps):
        """region & f^-steps(target)."""
        raise NotImplementedError('implement in subclass')

    def covering_cells(self, eps):
        """Finitely many sets of diameter eps, one inside every eps-ball."""
        raise NotImplementedError('implement in subclass')

    def window(self, x, a, b, eps):
        """Points y with d(f^j y, f^j x) within eps for a <= j <= b, as a region at time a."""
        raise NotImplementedError('implement in subclass')

    def prune(self, region):
        """A nonempty part of `region` kept for further refinement."""
        raise NotImplementedError('implement in subclass')

    def iterate(self, x, k):
        raise NotImplementedError('implement in subclass')

    def distance(self, x, y):
        raise NotImplementedError('implement in subclass')

    def representative(self, region, hint=None):
        raise NotImplementedError('implement in subclass')

    def point_at_time(self, y, k):
        """Some point x with f^k(x) = y."""
        raise NotImplementedError('implement in subclass')

    def periodic_candidates(self, region, period):
        """Points of the closure of `region` fixed by f^period, in preference order."""
        raise NotImplementedError('implement in subclass')

    def point_to_json(self, x):
        raise NotImplementedError('implement in subclass')

    def point_from_json(self, data):
        raise NotImplementedError('implement in subclass')

    def region_to_json(self, region):
        return region.to_json()

    def region_from_json(self, data):
        raise NotImplementedError('implement in subclass')

    def segment_point(self, segment, time):
        """The point of the segment's orbit at `time`."""
        return self.iterate(segment.x, time - segment.lag)

    def segment_window(self, segment, eps):
        return self.window(self.iterate(segment.x, segment.a - segment.lag),
                           0, segment.m, eps)


class IntervalRegionSystem(RegionSystem):
    """A PiecewiseAffineMap with IntervalSet regions."""

    def __init__(self, f):
        super(IntervalRegionSystem, self).__init__()
        self.f = f

    def __repr__(self):
        return 'IntervalRegionSystem({!r})'.format(self.f)

    def check_eps(self, eps):
        return _check_radius(eps)

    def whole(self):
        return IntervalSet.full(self.f.topology)

    def is_whole(self, region):
        return region.is_full()

    def image(self, region):
        return self.f.image(region)

    def pull_back_within(self, region, target, steps):
        return pull_back_within(self.f, region, target, steps)

    def covering_cells(self, eps):
        # balls of radius eps/2 around the eps/3-net j eps/3
        step = eps / 3
        return [ball(step * j, eps / 2, self.f.topology)
                for j in range(int(math.ceil(1 / step)))]

    def window(self, x, a, b, eps):
        return bowen_ball(self.f, self.iterate(x, a), b - a + 1, eps)

    def prune(self, region):
        # keep the largest component, the first one on ties
        best = None
        for a, b in region.arcs():
            if best is None or b - a > best[1] - best[0]:
                best = (a, b)
        return IntervalSet.arc(best[0], best[1], self.f.topology)

    def iterate(self, x, k):
        x = as_fraction(x)
        for _ in range(k):
            x = self.f.eval(x)
        return x

    def distance(self, x, y):
        return distance(x, y, self.f.topology)

    def representative(self, region, hint=None):
        """Pick the point returned by the solver.

        The solver passes f^{a_1} x_1 as `hint`; it is kept when it lies in
        the region. Otherwise each component contributes its simplest
        rational (the unique least-denominator rational, see `simplest_in`)
        and the one with the least (denominator, value) wins. The choice
        is deterministic but is not the midpoint of a component.
        """
        if hint is not None and hint in region:
            return hint
        candidates = [simplest_in(a, b) for a, b in region]
        return min(candidates, key=lambda y: (y.denominator, y))

    def point_at_time(self, y, k):
        for _ in range(k):
            preimages = self.f.point_preimages(y)
            if not preimages:
                raise EmptyRefinement('preimage of {}'.format(y))
            y = preimages[0]
        return y

    def periodic_candidates(self, region, period):
        return sorted(fixed_points(self.f, period, region),
                      key=lambda y: (y.denominator, y))

    def point_to_json(self, x):
        return format_rational(x)

    def point_from_json(self, data):
        return parse_rational(data) if isinstance(data, str) else as_fraction(data)

    def region_from_json(self, data):
        return IntervalSet.from_json(data, self.f.topology)


class ShiftRegionSystem(RegionSystem):
    """A ShiftSpace with CylinderSet regions.

    eps is a power 2^-r; the eps-ball around x is the closed ball
    d(x, y) <= eps, i.e. the cylinder of the first r symbols of x.
    """

    def __init__(self, space):
        super(ShiftRegionSystem, self).__init__()
        self.space = space

    def __repr__(self):
        return 'ShiftRegionSystem({!r})'.format(self.space)

    def check_eps(self, eps):
        _dyadic_exponent(eps)
        return as_fraction(eps)

    def whole(self):
        return CylinderSet.whole(self.space)

    def is_whole(self, region):
        return region.is_whole()

    def image(self, region):
        return region.image()

    def pull_back_within(self, region, target, steps):
        return region.pull_back_within(target, steps)

    def covering_cells(self, eps):
        return [CylinderSet.cylinder(self.space, w)
                for w in words(self.space, _dyadic_exponent(eps))]

    def window(self, x, a, b, eps):
        r = _dyadic_exponent(eps)
        length = b - a + r if r > 0 else 0
        return CylinderSet.cylinder(self.space, x.take(length, start=a))

    def prune(self, region):
        return CylinderSet.cylinder(self.space, region.words[0])

    def iterate(self, x, k):
        return x.shift(k)

    def distance(self, x, y):
        return sequence_distance(x, y)

    def representative(self, region, hint=None):
        """`hint` when it lies in the region, else the smallest word extended minimally."""
        if hint is not None and hint in region:
            return hint
        return SymbolSequence.minimal_extension(self.space, region.words[0])

    def point_at_time(self, y, k):
        if k == 0:
            return y
        paths = [self.space.bridge(s, y[0], k) for s in self.space.alphabet]
        path = min(p for p in paths if p is not None)
        return SymbolSequence(path[:-1] + y.prefix, y.cycle)

    def periodic_candidates(self, region, period):
        out = []
        for u in region.words:
            if len(u) >= period:
                v = u[:period]
                y = SymbolSequence.periodic(v)
                if y.take(len(u)) == u and y.is_allowed_in(self.space):
                    out.append(y)
                continue
            if not u:
                u = (self.space.alphabet[0],)
            path = self.space.bridge(u[-1], u[0], period - len(u) + 1)
            if path is not None:
                out.append(SymbolSequence.periodic(u + path[1:-1]))
        return out

    def point_to_json(self, x):
        return x.to_json()

    def point_from_json(self, data):
        y = SymbolSequence.from_json(data)
        if not y.is_allowed_in(self.space):
            raise ValueError('{!r} is not a sequence of {!r}'.format(y, self.space))
        return y

    def region_from_json(self, data):
        return CylinderSet.from_json(self.space, data)


def covering_time(system, eps, max_n=64):
    """Least N with f^N(C) the whole space for every eps-cell C.

    The cells are the balls of radius eps/2 around an eps/3-net (cylinders
    of length r for shifts with eps = 2^-r). Every eps-ball contains such a
    cell, so f^N maps every eps-ball onto the space.

    Raises
    ------
    NotCoveringWithinBound
        When a cell does not cover within `max_n` iterations.
    """
    eps = system.check_eps(eps)
    key = (eps, max_n)
    if key in system._covering_times:
        return system._covering_times[key]

    cells = system.covering_cells(eps)
    images = list(cells)
    for n in range(1, max_n + 1):
        images = [C if system.is_whole(C) else system.image(C) for C in images]
        if all(system.is_whole(C) for C in images):
            system._covering_times[key] = n
            return n

    stuck = next(i for i, C in enumerate(images) if not system.is_whole(C))
    raise NotCoveringWithinBound(eps, max_n, cells[stuck])


def verify_shadowing(system, spec, y):
    """Exact check of d(f^k y, f^k x_i) <= eps on every window a_i <= k <= b_i."""
    deviation, worst = Fraction(0), None
    for i, seg in enumerate(spec.segments, 1):
        yk = system.iterate(y, seg.a)
        xk = system.segment_point(seg, seg.a)
        for k in range(seg.a, seg.b + 1):
            d = system.distance(yk, xk)
            if d > deviation or worst is None:
                deviation, worst = max(d, deviation), (i, k)
            if k < seg.b:
                yk, xk = system.iterate(yk, 1), system.iterate(xk, 1)
    return ShadowingCheck(deviation <= spec.eps, deviation, worst)


def _refine(system, spec, covering=None, prune=True, requested=None):
    # `requested` is the instance whose gap is gated (the unextended one)
    requested = spec if requested is None else requested
    check = validate_spacing(spec)
    if not check:
        raise SpacingViolation(check.index, spec.gap)
    eps = system.check_eps(spec.eps)
    if len(requested.segments) > 1:
        if covering is None:
            covering = covering_time(system, eps)
        if requested.gap < covering:
            raise GapBelowCoveringTime(requested.gap, covering)

    first = spec.segments[0]
    region = system.segment_window(first, eps)
    certificate = [region]
    for i, seg in enumerate(spec.segments[1:], 2):
        if prune:
            region = system.prune(region)
        region = system.pull_back_within(region, system.segment_window(seg, eps),
                                         seg.a - first.a)
        if not region:
            raise EmptyRefinement(i)
        certificate.append(region)
        logging.info('refinement stage {}: {!r}'.format(i, region))
    return certificate


def shadow(system, spec, covering=None, prune=True):
    """Find y that eps-shadows every segment of an N-spaced specification.

    Parameters
    ----------
    system : RegionSystem
    spec : SpecificationInstance
    covering : int, optional
        covering_time(system, spec.eps), computed when omitted.
    prune : bool
        Continue each refinement stage from one component of the previous
        region (the largest interval, the smallest cylinder) instead of the
        whole region. The certificate stays nested; the exact regions have
        exponentially many components in the number of segments.

    Returns
    -------
    ShadowResult

    Raises
    ------
    SpacingViolation, GapBelowCoveringTime, EmptyRefinement
    """
    certificate = _refine(system, spec, covering, prune)
    first = spec.segments[0]

    hint = system.segment_point(first, first.a)
    y_start = system.representative(certificate[-1], hint)
    if y_start == hint and first.lag == 0:
        y = first.x
    else:
        y = system.point_at_time(y_start, first.a)

    check = verify_shadowing(system, spec, y)
    assert check.passed, 'representative {} fails the shadowing check'.format(y)
    return ShadowResult(certificate, y, check, spec)


def periodic_extend(spec):
    """Append the wrap-around segment a = b_n + N, b = a + m_1 repeating segment 1."""
    check = validate_spacing(spec)
    if not check:
        raise SpacingViolation(check.index, spec.gap)
    first, last = spec.segments[0], spec.segments[-1]
    a = last.b + spec.gap
    extra = OrbitSegment(a, a + first.m, first.x, lag=first.lag + a - first.a)
    return SpecificationInstance(spec.segments + (extra,), spec.gap, spec.eps)


def extension_period(spec):
    """P = b_{n+1} - a_1 + N of the extended instance."""
    extended = periodic_extend(spec)
    return extended.segments[-1].b - extended.segments[0].a + spec.gap


def periodic_shadow(system, spec, covering=None, prune=True):
    """Find a periodic y of period P = b_{n+1} - a_1 + N shadowing the specification.

    The periodic point is searched in the closure of the last region of
    the extended instance; f^P(y) = y is verified exactly.

    Raises
    ------
    EmptyRefinement, NoPeriodicPointInRegion
    """
    extended = periodic_extend(spec)
    period = extension_period(spec)
    certificate = _refine(system, extended, covering, prune, requested=spec)
    a1 = spec.segments[0].a

    for y_start in system.periodic_candidates(certificate[-1], period):
        # f^(Pk - a1)(y_start) is mapped onto y_start by f^a1
        k = -(-a1 // period)
        y = system.iterate(y_start, period * k - a1)
        if system.iterate(y, period) != y:
            continue
        check = verify_shadowing(system, spec, y)
        if check.passed:
            return ShadowResult(certificate, y, check, extended, period)
        logging.info('periodic candidate {!r} deviates by {}'.format(y, check.deviation))

    raise NoPeriodicPointInRegion(period)


class SpecificationFailureWitness(object):
    """Two segments at gap N that no sequence of the graph shift can shadow.

    Attributes
    ----------
    n : int
        N + 2.
    spec : SpecificationInstance
        n^inf on [0, 0] and 1^inf on [N, N], eps = 1/4.
    layers : list of set
        Symbols reachable from n after 0, ..., N steps.
    first_hit : int
        Least j with 1 reachable from n in j steps (n - 1).
    """

    def __init__(self, n, spec, layers, first_hit):
        self.n = n
        self.spec = spec
        self.layers = layers
        self.first_hit = first_hit

    @property
    def gap(self):
        return self.spec.gap

    @property
    def reachable(self):
        return self.layers[-1]

    def __repr__(self):
        return 'SpecificationFailureWitness(n={}, N={}, reachable={})'.format(
            self.n, self.gap, sorted(self.reachable))

    def to_json(self):
        return {'n': self.n,
                'gap': self.gap,
                'eps': format_rational(self.spec.eps),
                'reachable': [sorted(layer) for layer in self.layers],
                'first_hit': self.first_hit}

    @classmethod
    def from_json(cls, data):
        n, N = int(data['n']), int(data['gap'])
        return cls(n, _witness_spec(n, N, parse_rational(data['eps'])),
                   [set(layer) for layer in data['reachable']],
                   int(data['first_hit']))


def _witness_spec(n, N, eps=Fraction(1, 4)):
    return SpecificationInstance([OrbitSegment(0, 0, SymbolSequence((), (n,))),
                                  OrbitSegment(N, N, SymbolSequence((), (1,)))],
                                 N, eps)


def spec_failure_witness(space, N):
    """Witness that the graph shift has no specification with gap N.

    Every sequence starting with n = N + 2 reads symbols >= n - N = 2 at
    index N, so no point is within 1/4 of both n^inf at time 0 and 1^inf
    at time N.

    Raises
    ------
    NotApplicable
        When `space` is not the graph shift of `sigma_graph`.
    TruncationTooSmall
        When the truncation is below N + 2.
    """
    if not is_sigma_graph(space):
        raise NotApplicable('{!r} is not the countable graph shift'.format(space))
    N = int(N)
    if N < 1:
        raise ValueError('N should be at least 1')
    n = N + 2
    if space.truncation < n:
        raise TruncationTooSmall(space.truncation, n)

    layers = space.reachable_layers(n, n - 1)
    first_hit = next(j for j, layer in enumerate(layers) if 1 in layer)
    layers = layers[:N + 1]
    assert 1 not in layers[N], 'symbol 1 reachable from {} in {} steps'.format(n, N)
    assert min(layers[N]) == n - N

    return SpecificationFailureWitness(n, _witness_spec(n, N), layers, first_hit)
