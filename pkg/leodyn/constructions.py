#!/usr/bin/env python
# encoding: utf-8
"""
constructions

Generators and verifiers for the worked examples:

* the replicated map built from f0 and the map with an invariant domain
  [1/3, 1);
* the Cantor set of the doubling map obtained by deleting balls around
  periodic points together with their preimages;
* the Rome-graph coding n -> (0, 1^n, 0) of the countable graph shift
  into the first-return map of the binary full shift;
* the zero-suppression map onto a minimal subshift (Thue-Morse by default).
"""

from collections import namedtuple
from fractions import Fraction
import logging

import numpy as np
import pandas as pd

from .exceptions import (ConsecutiveZeros,
                         EmptyRemainder,
                         MalformedWord,
                         NoReturnInPrefix,
                         SymbolOutOfAlphabet)
from .interval_dynamics import (CIRCLE,
                                INTERVAL,
                                IntervalSet,
                                PiecewiseAffineMap,
                                ball,
                                doubling_map,
                                fixed_points)
from .utils import as_fraction, format_rational, parse_rational

CONSISTENT = 'consistent'
REJECTED = 'rejected'


# Replicated and invariant-domain maps

F0_BRANCHES = [((0, Fraction(1, 6)), 3, 0),
               ((Fraction(1, 6), Fraction(1, 3)), -3, 1),
               ((Fraction(1, 3), Fraction(1, 2)), 3, -1)]


def example1_map(levels=1):
    """The replication of f0 on [1 - 2^-n, 1 - 2^-(n+1)) for n = 0, ..., levels.

    f(x) = 1 - 2^-n + 2^-n f0(2^n (x - 1 + 2^-n)) on each copy. The copies
    accumulate at 1; the remaining interval [1 - 2^-(levels+1), 1) carries
    the identity, which agrees with the untruncated map at its endpoints.
    """
    if levels < 0:
        raise ValueError('levels should be nonnegative')
    branches = []
    for n in range(levels + 1):
        s = Fraction(1, 2 ** n)
        c = 1 - s
        for (a, b), slope, intercept in F0_BRANCHES:
            branches.append(((c + s * a, c + s * b), slope, c + s * intercept - slope * c))
    tail = 1 - Fraction(1, 2 ** (levels + 1))
    branches.append(((tail, 1), 1, 0))

    if levels > 8:
        logging.warning('{} replication levels, copies below {} are '
                        'narrower than the default grid'.format(levels, tail))
    return PiecewiseAffineMap(branches, INTERVAL,
                              name='example1[levels={}]'.format(levels))


def f0_map():
    """f0 on [0, 1/2) extended by the identity on [1/2, 1)."""
    f = example1_map(0)
    f.name = 'f0'
    return f


def replicated_branches(f):
    """Branches of a replicated map other than the identity tail."""
    return [br for br in f.branches if not (br.slope == 1 and br.intercept == 0)]


def example2_map():
    """3x on [0,1/3), -2x + 5/3 on [1/3,2/3), 2x - 1 on [2/3,1).

    [1/3, 1) is invariant; the map attains the value 1 at 1/3 and as a
    limit at 1.
    """
    return PiecewiseAffineMap([((0, Fraction(1, 3)), 3, 0),
                               ((Fraction(1, 3), Fraction(2, 3)), -2, Fraction(5, 3)),
                               ((Fraction(2, 3), 1), 2, -1)],
                              INTERVAL, name='example2')


def example_maps(levels=1):
    return {'f0': f0_map(),
            'example1': example1_map(levels),
            'example2': example2_map()}


def example1_continuity_check(f=None, levels=1):
    """Joints x where the left and right branch values differ (empty when continuous).

    Checks `example1_map(levels)` unless a map is given.
    """
    f = example1_map(levels) if f is None else f
    jumps = []
    for left, right in zip(f.branches[:-1], f.branches[1:]):
        x = left.b
        if left.slope * x + left.intercept != right.slope * x + right.intercept:
            jumps.append(x)
    return jumps


# Periodic points and the Cantor set of the doubling map

def _least_period(f, x, p):
    for d in range(1, p + 1):
        if p % d == 0 and f.orbit(x, d)[-1] == x:
            return d
    return p


def periodic_points(p, f=None):
    """Fixed points of f^p, ordered by least period and then ascending.

    For the doubling map (the default) these are k / (2^p - 1).
    """
    if p < 1:
        raise ValueError('p should be at least 1')
    if f is None:
        f = doubling_map()
        points = [Fraction(k, 2 ** p - 1) for k in range(2 ** p - 1)]
    else:
        points = fixed_points(f, p)
    return sorted(points, key=lambda x: (_least_period(f, x, p), x))


def enumerate_periodic_points(max_period, f=None):
    """Periodic points with non-decreasing least period; ascending within a period.

    Yields
    ------
    (point, least period)
    """
    f = doubling_map() if f is None else f
    for d in range(1, max_period + 1):
        for x in periodic_points(d, f):
            if _least_period(f, x, d) == d:
                yield x, d


LedgerEntry = namedtuple('LedgerEntry', ['level', 'q', 'zeta', 'period', 'index',
                                         'generations'])


class CantorApprox(object):
    """Depth-k approximation of the level-l Cantor set.

    Attributes
    ----------
    level, depth : int
    remaining : IntervalSet
        The circle minus f^-j(B(q_i, zeta_i)) for i <= level, j <= depth.
    ledger : list of LedgerEntry
        The periodic points q_i (with their index in the enumeration),
        radii and the number of components of each preimage generation.
    """

    def __init__(self, level, depth, remaining, ledger, removals, f=None):
        self.level = level
        self.depth = depth
        self.remaining = remaining
        self.ledger = list(ledger)
        self._removals = removals
        self.f = doubling_map() if f is None else f

    def __repr__(self):
        return 'CantorApprox(level={}, depth={}, measure={})'.format(
            self.level, self.depth, float(self.remaining.measure))

    def generation(self, j):
        """Union over the ledger of the j-th preimage generation of the balls."""
        out = IntervalSet.empty(CIRCLE)
        for generations in self._removals:
            out = out | generations[j]
        return out

    def remaining_at_depth(self, j):
        assert 0 <= j <= self.depth, 'depth {} not computed'.format(j)
        removed = IntervalSet.empty(CIRCLE)
        for i in range(j + 1):
            removed = removed | self.generation(i)
        return removed.complement()

    def balls(self):
        return [generations[0] for generations in self._removals]

    def scope(self, max_period=None):
        """Enumerated periodic points up to the last ledger index."""
        last = self.ledger[-1].index
        max_period = self.ledger[-1].period if max_period is None else max_period
        out = []
        for index, (x, d) in enumerate(enumerate_periodic_points(max_period, self.f)):
            if index > last:
                break
            out.append(x)
        return out

    def ledger_frame(self):
        return pd.DataFrame([{'level': e.level,
                              'q': format_rational(e.q),
                              'zeta': format_rational(e.zeta),
                              'period': e.period,
                              'index': e.index,
                              'removed_intervals': sum(e.generations)}
                             for e in self.ledger])

    def to_json(self):
        return {'level': self.level,
                'depth': self.depth,
                'remaining': self.remaining.to_json(),
                'ledger': [{'level': e.level,
                            'q': format_rational(e.q),
                            'zeta': format_rational(e.zeta),
                            'period': e.period,
                            'index': e.index,
                            'generations': list(e.generations)}
                           for e in self.ledger]}

    @classmethod
    def from_json(cls, data):
        """Rebuild the approximation; the removed preimages are recomputed from the ledger."""
        f = doubling_map()
        depth = int(data['depth'])
        ledger, removals = [], []
        for item in data['ledger']:
            entry = LedgerEntry(int(item['level']), parse_rational(item['q']),
                                parse_rational(item['zeta']), int(item['period']),
                                int(item['index']), tuple(item['generations']))
            generations = [ball(entry.q, entry.zeta, CIRCLE)]
            for _ in range(depth):
                generations.append(f.preimage(generations[-1]))
            ledger.append(entry)
            removals.append(generations)
        return cls(int(data['level']), depth,
                   IntervalSet.from_json(data['remaining'], CIRCLE),
                   ledger, removals, f)


def _orbit_avoids(f, x, period, balls):
    return not any(y in B for y in f.orbit(x, period - 1) for B in balls)


def feliks_cantor(levels, depth, zeta0=Fraction(1, 8), ratio=Fraction(1, 4), max_period=16):
    """Remove balls around periodic points of the doubling map and their preimages.

    At level i the point q_i is the first enumerated periodic point whose
    orbit avoids the balls already chosen (such a point is never removed
    at any depth), zeta_i = zeta0 * ratio^i, and the ball B(q_i, zeta_i)
    is removed with its preimages up to `depth`.

    Raises
    ------
    EmptyRemainder
        When no periodic point of period <= max_period qualifies, or
        nothing remains.
    """
    zeta0, ratio = as_fraction(zeta0), as_fraction(ratio)
    if not 0 < ratio < 1:
        raise ValueError('ratio should lie in (0, 1)')
    if not 0 < zeta0 < Fraction(1, 3):
        raise ValueError('zeta0 should be positive and below the distance 1/3 '
                         'between the first two periodic points')

    f = doubling_map()
    ledger, removals, balls = [], [], []
    remaining = IntervalSet.full(CIRCLE)
    candidates = enumerate_periodic_points(max_period, f)
    index = -1

    for level in range(levels + 1):
        for q, period in candidates:
            index += 1
            if _orbit_avoids(f, q, period, balls):
                break
        else:
            raise EmptyRemainder('no periodic point of period <= {} avoids the '
                                 'removed balls'.format(max_period))

        zeta = zeta0 * ratio ** level
        generations = [ball(q, zeta, CIRCLE)]
        for _ in range(depth):
            generations.append(f.preimage(generations[-1]))
        for G in generations:
            remaining = remaining - G
        if not remaining:
            raise EmptyRemainder('nothing remains after level {}'.format(level))

        balls.append(generations[0])
        removals.append(generations)
        ledger.append(LedgerEntry(level, q, zeta, period, index,
                                  tuple(len(G.arcs()) for G in generations)))
        logging.info('level {}: removed q={} (period {}) with radius {}'.format(
            level, q, period, zeta))

    return CantorApprox(levels, depth, remaining, ledger, removals, f)


class CantorReport(object):
    """Outcome of `feliks_verify`.

    Attributes
    ----------
    survivors : list
        Periodic points of period <= max_period left in the approximation.
    in_scope_survivors : list
        Survivors among the enumerated points up to the last ledger index.
    invariance_defect : Fraction
        Measure of f(R) - R.
    slack : Fraction
        Measure of the depth-k preimage generation, which contains f(R) - R.
    hausdorff : Fraction
        Hausdorff distance between f(R) and R.
    covering : list of dict
        Per sampled x: whether f^N(B(x, 2^-N) & R_k) lies in R_{k-N}, and
        whether R_k minus that image lies in the forward images of the
        removed balls.
    """

    def __init__(self, survivors, in_scope_survivors, invariance_defect, slack,
                 defect_inside_slack, hausdorff, covering, n):
        self.survivors = survivors
        self.in_scope_survivors = in_scope_survivors
        self.invariance_defect = invariance_defect
        self.slack = slack
        self.defect_inside_slack = defect_inside_slack
        self.hausdorff = hausdorff
        self.covering = covering
        self.n = n

    @property
    def covering_passed(self):
        return all(c['image_inside'] and c['remainder_in_images'] for c in self.covering)

    @property
    def passed(self):
        return (not self.in_scope_survivors and self.defect_inside_slack and
                self.invariance_defect <= self.slack and self.covering_passed)

    def __repr__(self):
        return 'CantorReport({}, survivors={}, defect={})'.format(
            'pass' if self.passed else 'fail', len(self.survivors), self.invariance_defect)

    def to_frame(self):
        return pd.DataFrame([
            {'check': 'in_scope_survivors', 'value': len(self.in_scope_survivors),
             'passed': not self.in_scope_survivors},
            {'check': 'invariance_defect', 'value': float(self.invariance_defect),
             'passed': self.defect_inside_slack and self.invariance_defect <= self.slack},
            {'check': 'hausdorff', 'value': float(self.hausdorff), 'passed': True},
            {'check': 'covering', 'value': len(self.covering),
             'passed': self.covering_passed}])

    def to_json(self):
        return {'survivors': [format_rational(x) for x in self.survivors],
                'in_scope_survivors': [format_rational(x) for x in self.in_scope_survivors],
                'invariance_defect': format_rational(self.invariance_defect),
                'slack': format_rational(self.slack),
                'defect_inside_slack': self.defect_inside_slack,
                'hausdorff': format_rational(self.hausdorff),
                'n': self.n,
                'covering': [{'x': format_rational(c['x']),
                              'image_inside': c['image_inside'],
                              'remainder_in_images': c['remainder_in_images']}
                             for c in self.covering],
                'passed': self.passed}


def _sample_points(S, n, rng):
    out = []
    for _ in range(n):
        a, b = S.intervals[rng.randint(len(S))]
        out.append(a + (b - a) * Fraction(int(rng.randint(2 ** 16)), 2 ** 16))
    return out


def feliks_verify(approx, max_period=4, n=4, samples=20, seed=0):
    """Check an approximation for periodic points, invariance and covering.

    Parameters
    ----------
    max_period : int
        Periodic points up to this period are tested for membership.
    n : int
        The covering identity f^n(B(x, eps) & K) = K is tested at
        eps = 2^-n, which requires depth >= n.
    samples : int
        Number of sampled centers x in the approximation.
    seed : int
        Seed of the numpy RandomState drawing the centers.
    """
    f, R = approx.f, approx.remaining

    survivors = [x for x, _ in enumerate_periodic_points(max_period, f) if x in R]
    in_scope_survivors = [x for x in approx.scope() if x in R]

    image = f.image(R)
    defect = image - R
    last_generation = approx.generation(approx.depth)
    defect_inside = defect.issubset(last_generation)
    slack = sum((2 * e.zeta for e in approx.ledger), Fraction(0))

    covering = []
    if approx.depth < n:
        logging.warning('depth {} is below n={}, covering identity not '
                        'tested'.format(approx.depth, n))
    else:
        eps = Fraction(1, 2 ** n)
        shallow = approx.remaining_at_depth(approx.depth - n)
        images_of_balls = IntervalSet.empty(CIRCLE)
        for B in approx.balls():
            current = B
            for _ in range(n):
                current = f.image(current)
                images_of_balls = images_of_balls | current

        rng = np.random.RandomState(seed)
        for x in _sample_points(R, samples, rng):
            pushed = f.iterate_image(ball(x, eps, CIRCLE) & R, n)
            covering.append({'x': x,
                             'image_inside': pushed.issubset(shallow),
                             'remainder_in_images': (R - pushed).issubset(images_of_balls)})

    return CantorReport(survivors, in_scope_survivors, defect.measure, slack,
                        defect_inside, image.hausdorff_distance(R), covering, n)


# Rome graph coding

class RomeWord(tuple):
    """The binary word (0, 1^n, 0) coding the symbol n."""

    def __new__(cls, n):
        n = int(n)
        if n < 0:
            raise ValueError('n should be nonnegative')
        self = super(RomeWord, cls).__new__(cls, (0,) + (1,) * n + (0,))
        self.n = n
        return self


def rome_encode(n):
    return RomeWord(n)


def rome_decode(word):
    word = tuple(word)
    if len(word) < 2 or word[0] != 0 or word[-1] != 0 or \
            any(s != 1 for s in word[1:-1]):
        raise MalformedWord('{} is not of the form (0, 1, ..., 1, 0)'.format(word))
    return len(word) - 2


def rome_embed(prefix, space=None):
    """Concatenate the codes of a symbol word; consecutive codes share their 0."""
    prefix = tuple(prefix)
    if space is not None:
        prefix = space.check_word(prefix)
    if not prefix:
        return ()
    out = [0]
    for n in prefix:
        out.extend(RomeWord(n)[1:])
    return tuple(out)


def rome_unembed(binary):
    """Inverse of `rome_embed`."""
    binary = tuple(binary)
    if len(binary) < 2 or binary[0] != 0 or binary[-1] != 0:
        raise MalformedWord('{} should start and end with 0'.format(binary))
    if any(s not in (0, 1) for s in binary):
        raise MalformedWord('{} is not binary'.format(binary))
    zeros = [i for i, s in enumerate(binary) if s == 0]
    return tuple(j - i - 1 for i, j in zip(zeros[:-1], zeros[1:]))


def rome_return_time(word):
    """tau(x) = least k >= 1 with x_k = 0."""
    word = tuple(word)
    if not word or word[0] != 0:
        raise MalformedWord('{} should start with 0'.format(word))
    for k in range(1, len(word)):
        if word[k] == 0:
            return k
    raise NoReturnInPrefix(word)


def rome_first_return(word):
    """g(x) = sigma^tau(x)(x) on a finite prefix."""
    word = tuple(word)
    return word[rome_return_time(word):]


# Zero suppression and the Thue-Morse subshift

def pi_suppress(word):
    """Delete the 0's of a word over {0, 1, 2} without consecutive 0's."""
    word = tuple(word)
    for i, s in enumerate(word):
        if s not in (0, 1, 2):
            raise SymbolOutOfAlphabet(s)
        if s == 0 and i > 0 and word[i - 1] == 0:
            raise ConsecutiveZeros(word, i - 1)
    return tuple(s for s in word if s != 0)


def thue_morse(n):
    """The first n symbols 1 + (popcount(i) mod 2) of the Thue-Morse sequence over {1, 2}."""
    return tuple(1 + bin(i).count('1') % 2 for i in range(n))


def thue_morse_factors(length, depth=1024):
    """Factors of the given length occurring in the prefix of length `depth`."""
    t = thue_morse(depth)
    return {t[i:i + length] for i in range(depth - length + 1)}


def thue_morse_language(word, depth=1024):
    """Whether `word` occurs in a Thue-Morse prefix.

    The prefix has length max(depth, 64 (len(word) + 1)), long enough to
    contain every factor of that length.
    """
    word = tuple(word)
    if not word:
        return True
    n = max(depth, 64 * (len(word) + 1))
    haystack = ''.join(str(s) for s in thue_morse(n))
    return ''.join(str(s) for s in word) in haystack


def lindenstrauss_membership(word, oracle=thue_morse_language, depth=1024):
    """'consistent' when the word lies in the language of pi^-1(X), else 'rejected'.

    Parameters
    ----------
    oracle : callable
        oracle(word, depth) decides membership of a 0-free word in the
        language of the minimal subshift X.
    """
    try:
        suppressed = pi_suppress(word)
    except (ConsecutiveZeros, SymbolOutOfAlphabet):
        return REJECTED
    return CONSISTENT if oracle(suppressed, depth) else REJECTED
