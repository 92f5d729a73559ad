#!/usr/bin/env python
# encoding: utf-8
"""
beta_expansions

beta-transformations T(x) = beta x - floor(beta x) and expansions of 1 in
base beta. Rational beta is handled exactly; irrational beta (the golden
ratio, Parry numbers) is an mpmath number at a documented precision,
128 bits by default.
"""

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
import logging
import math

import mpmath
import numpy as np
import pandas as pd

from .interval_dynamics import PiecewiseAffineMap, IntervalSet, INTERVAL, leo_certify
from .utils import as_fraction, format_rational, parse_rational

GREEDY = 'greedy'
QUASI_GREEDY = 'quasi-greedy'
CONVENTIONS = (GREEDY, QUASI_GREEDY)

SPEC_CONSISTENT = 'spec-consistent'
SPEC_FAILS = 'spec-fails-at-depth'

# share of an atlas sweep whose verdict must survive doubling the depth
STABLE_FRACTION = .95

DEFAULT_PRECISION = 128


def golden_ratio(precision=DEFAULT_PRECISION):
    """The golden ratio as an mpmath number with `precision` bits."""
    with mpmath.workprec(precision):
        return +mpmath.phi


def parry_number(digits, precision=DEFAULT_PRECISION):
    """The beta > 1 whose greedy expansion of 1 is the finite word `digits`.

    This is the largest real root of
    x^n - d_1 x^(n-1) - ... - d_n.
    """
    digits = [int(d) for d in digits]
    if not digits or digits[0] < 1 or digits[-1] < 1 or min(digits) < 0:
        raise ValueError('digits should start and end with a positive digit, '
                         'got {}'.format(digits))

    with mpmath.workprec(2 * precision):
        roots = mpmath.polyroots([1] + [-d for d in digits],
                                 maxsteps=200, extraprec=2 * precision)
        tol = mpmath.ldexp(1, -precision)
        real = [mpmath.re(r) for r in roots if abs(mpmath.im(r)) < tol]
        beta = max(real)

    with mpmath.workprec(precision):
        beta = +beta

    check = beta_expansion_of_one(beta, len(digits), GREEDY, precision).digits
    if list(check) != digits:
        logging.warning('{} is not the greedy expansion of 1 for its root {} '
                        '(greedy digits are {})'.format(digits, mpmath.nstr(beta, 12), check))
    return beta


def parse_beta(value, precision=DEFAULT_PRECISION):
    """Read beta from a number or a string.

    Strings may be a rational ``'3/2'``, a decimal ``'1.5'``, ``'golden'``
    for the golden ratio, or ``'parry:1,0,0,1'`` for a Parry number.
    """
    if isinstance(value, mpmath.mpf):
        beta = value
    elif isinstance(value, str):
        text = value.strip().lower()
        if text in ('golden', 'phi', 'golden-ratio'):
            beta = golden_ratio(precision)
        elif text.startswith('parry:'):
            beta = parry_number([int(d) for d in text[len('parry:'):].split(',')],
                                precision)
        else:
            beta = parse_rational(text)
    else:
        beta = as_fraction(value)

    if beta <= 1:
        raise ValueError('beta should exceed 1, got {}'.format(value))
    return beta


def beta_map(beta, precision=DEFAULT_PRECISION, topology=INTERVAL):
    """The beta-transformation as a single reduced affine branch.

    An irrational beta is replaced by its exact binary value at `precision`
    bits, so the map itself stays exact.
    """
    beta = parse_beta(beta, precision)
    if isinstance(beta, mpmath.mpf):
        with mpmath.workprec(precision):
            slope = as_fraction(+beta)
        name = 'beta:{}'.format(mpmath.nstr(beta, 15))
    else:
        slope = beta
        name = 'beta:{}'.format(format_rational(beta))
    return PiecewiseAffineMap([((0, 1), slope, 0)], topology=topology,
                              reduce_mod_one=True, name=name)


class BetaExpansion(object):
    """First digits of an expansion of 1 in base beta.

    Attributes
    ----------
    beta : Fraction or mpmath.mpf
    digits : tuple of int
        Each digit lies in {0, ..., ceil(beta) - 1}.
    convention : {'greedy', 'quasi-greedy'}
    cycle : (int, int) or None
        (start, period) when the remainders x_i = T^i(1) were seen to repeat
        within the computed digits, so that the digits are eventually periodic
        from `start` on.
    """

    def __init__(self, beta, digits, convention, cycle=None):
        self.beta = beta
        self.digits = tuple(digits)
        self.convention = convention
        self.cycle = cycle

    def __repr__(self):
        return 'BetaExpansion({}, {}, {})'.format(
            self.convention, ''.join(str(d) for d in self.digits), self.beta)

    @property
    def eventually_periodic(self):
        return self.cycle is not None

    def partial_sums(self, precision=DEFAULT_PRECISION):
        """Partial sums of d_i beta^-i; exact for rational beta."""
        if isinstance(self.beta, Fraction):
            total, sums = Fraction(0), []
            for i, d in enumerate(self.digits, 1):
                total += d / self.beta ** i
                sums.append(total)
            return sums
        with mpmath.workprec(precision):
            total, sums = mpmath.mpf(0), []
            for i, d in enumerate(self.digits, 1):
                total += d * mpmath.power(self.beta, -i)
                sums.append(total)
            return sums

    def max_zero_run(self):
        return max_zero_run(self.digits)


def _snap(t, tol):
    nearest = mpmath.nint(t)
    if abs(t - nearest) <= tol * max(1, abs(nearest)):
        return nearest
    return t


def _find_cycle(remainders, x, same):
    for start, seen in enumerate(remainders):
        if same(seen, x):
            return start, len(remainders) - start
    return None


def beta_expansion_of_one(beta, k, convention=QUASI_GREEDY, precision=DEFAULT_PRECISION):
    """First k digits of the greedy or quasi-greedy expansion of 1.

    The greedy digits iterate x -> beta x - floor(beta x) from x = 1, with
    the digit capped at ceil(beta) - 1; for an integer beta the cap turns
    the expansion into (beta - 1, beta - 1, ...), the same as the
    quasi-greedy one. The quasi-greedy digits take the largest digit
    d < beta x instead, which turns a finite greedy expansion d_1...d_n
    into its periodic form (d_1...d_{n-1}(d_n - 1))^inf.

    For an mpmath beta the products beta x are snapped to an integer when
    they lie within 2^-(precision-16) of it; a Parry number then yields its
    exact periodic digits.

    A repeated remainder is recorded in `BetaExpansion.cycle`. Rational
    remainders are compared exactly, mpmath ones up to 2^-(precision/2).
    """
    if convention not in CONVENTIONS:
        raise ValueError('{} is not a valid convention, choose from {}'.format(
            convention, CONVENTIONS))
    if k < 1:
        raise ValueError('k should be at least 1')
    beta = parse_beta(beta, precision)

    digits, remainders, cycle = [], [], None
    if isinstance(beta, Fraction):
        top = math.ceil(beta) - 1
        x = Fraction(1)
        for _ in range(k):
            if cycle is None:
                cycle = _find_cycle(remainders, x, lambda a, b: a == b)
                remainders.append(x)
            t = beta * x
            d = min(math.floor(t), top) if convention == GREEDY else math.ceil(t) - 1
            digits.append(d)
            x = t - d
        return BetaExpansion(beta, digits, convention, cycle)

    with mpmath.workprec(precision):
        top = int(mpmath.ceil(beta)) - 1
        tol = mpmath.ldexp(1, -(precision - 16))
        same_tol = mpmath.ldexp(1, -(precision // 2))
        x = mpmath.mpf(1)
        for _ in range(k):
            if cycle is None:
                cycle = _find_cycle(remainders, x, lambda a, b: abs(a - b) <= same_tol)
                remainders.append(x)
            t = _snap(beta * x, tol)
            if convention == GREEDY:
                d = min(int(mpmath.floor(t)), top)
            else:
                d = int(mpmath.ceil(t)) - 1
            digits.append(d)
            x = t - d
    return BetaExpansion(beta, digits, convention, cycle)


def max_zero_run(digits):
    """Length of the longest block of consecutive zeros."""
    best = run = 0
    for d in digits:
        run = run + 1 if d == 0 else 0
        best = max(best, run)
    return best


class SpecificationClassification(object):
    """Finite-depth zero-run verdict for the beta-shift.

    The beta-shift has the specification property exactly when the zero
    runs of the quasi-greedy expansion of 1 are bounded. A finite prefix
    proves the runs bounded only when the expansion was seen to be
    eventually periodic (simple and non-simple Parry numbers, integers);
    then every run already occurs in the prefix. Otherwise the runs are
    unbounded for almost every beta and the verdict is
    'spec-fails-at-depth(r)' with r the longest run observed. The verdict
    therefore only changes with the depth when a cycle first shows up
    between the two depths.

    Attributes
    ----------
    max_zero_run : int
    cycle : (int, int) or None
    verdict : {'spec-consistent', 'spec-fails-at-depth'}
    """

    def __init__(self, beta, depth, max_zero_run, cycle=None):
        self.beta = beta
        self.depth = depth
        self.max_zero_run = max_zero_run
        self.cycle = cycle
        if cycle is None:
            self.verdict = SPEC_FAILS
            self.failing_run = max_zero_run
        else:
            self.verdict = SPEC_CONSISTENT
            self.failing_run = None

    @property
    def label(self):
        if self.verdict == SPEC_FAILS:
            return '{}({})'.format(SPEC_FAILS, self.failing_run)
        return SPEC_CONSISTENT

    def __repr__(self):
        return 'SpecificationClassification(max_zero_run={}, {})'.format(
            self.max_zero_run, self.label)


def classify_specification(beta, depth=64, precision=DEFAULT_PRECISION):
    """Zero-run classifier on the first `depth` quasi-greedy digits of 1."""
    expansion = beta_expansion_of_one(beta, depth, QUASI_GREEDY, precision)
    return SpecificationClassification(expansion.beta,
                                       depth,
                                       max_zero_run(expansion.digits),
                                       expansion.cycle)


def _atlas_row(args):
    beta, digits, interval, max_n, precision = args
    classification = classify_specification(beta, digits, precision)
    deeper = classify_specification(beta, 2 * digits, precision)
    expansion = beta_expansion_of_one(beta, digits, QUASI_GREEDY, precision)
    certificate = leo_certify(beta_map(beta, precision), interval, max_n=max_n)

    return {'beta': float(beta),
            'beta_exact': format_rational(beta) if isinstance(beta, Fraction)
            else mpmath.nstr(beta, 30),
            'digits': ''.join(str(d) for d in expansion.digits),
            'max_zero_run': classification.max_zero_run,
            'verdict': classification.label,
            'stable': classification.verdict == deeper.verdict,
            'covering_time': certificate.n if certificate else np.nan}


def beta_atlas(betas, digits=48, interval=(Fraction(1, 4), Fraction(5, 16)),
               max_n=64, precision=DEFAULT_PRECISION, n_jobs=1):
    """Per-beta table of expansions, zero-run verdicts and LEO covering times.

    Parameters
    ----------
    betas : iterable
        Values accepted by `parse_beta`.
    digits : int
        Number of quasi-greedy digits classified; the `stable` column
        repeats the classification at twice this depth.
    interval : (a, b)
        Reference interval J for `leo_certify`.
    n_jobs : int
        Rows are computed in a process pool when larger than 1; row order
        follows `betas` either way.

    Returns
    -------
    pandas.DataFrame
    """
    betas = [parse_beta(b, precision) for b in betas]
    interval = IntervalSet([interval])
    jobs = [(beta, digits, interval, max_n, precision) for beta in betas]

    if n_jobs > 1:
        with ProcessPoolExecutor(max_workers=n_jobs) as pool:
            rows = list(pool.map(_atlas_row, jobs))
    else:
        rows = []
        for job in jobs:
            rows.append(_atlas_row(job))
            logging.info('beta {beta:.6f}: {verdict}, N={covering_time}'.format(**rows[-1]))

    columns = ['beta', 'beta_exact', 'digits', 'max_zero_run', 'verdict',
               'stable', 'covering_time']
    return pd.DataFrame(rows, columns=columns)
