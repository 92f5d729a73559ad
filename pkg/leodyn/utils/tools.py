from fractions import Fraction
import math

import mpmath
import numpy as np


def as_fraction(x):
    """Exact rational value of `x`.

    Accepts Fractions, integers, strings such as ``'3/8'`` or ``'0.375'``,
    floats (taken at their exact binary value) and mpmath numbers (taken at
    their exact binary value at the current working precision).
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, mpmath.mpf):
        if not mpmath.isfinite(x):
            raise ValueError('{} has no rational value'.format(x))
        sign, man, exp, _ = x._mpf_
        man = -int(man) if sign else int(man)
        return Fraction(man) * Fraction(2) ** int(exp)
    if isinstance(x, (np.integer,)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def parse_rational(text):
    """Parse a ``'p/q'`` command-line rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError, AttributeError):
        raise ValueError('{!r} is not a rational of the form p/q'.format(text))


def format_rational(x):
    """Format a rational as ``'p/q'`` (integers included, e.g. ``'1/1'``)."""
    x = as_fraction(x)
    return '{}/{}'.format(x.numerator, x.denominator)


def parse_interval(text):
    """Parse ``'p/q:r/s'`` into a pair of Fractions."""
    parts = text.split(':')
    if len(parts) != 2:
        raise ValueError('{!r} is not an interval of the form p/q:r/s'.format(text))
    a, b = parse_rational(parts[0]), parse_rational(parts[1])
    if not a < b:
        raise ValueError('interval {!r} is empty'.format(text))
    return a, b


def simplest_between(lo, hi):
    """Smallest-denominator rational in the open interval (lo, hi)."""
    assert lo < hi, 'empty interval ({}, {})'.format(lo, hi)
    fl = math.floor(lo)
    if fl + 1 < hi:
        return Fraction(fl + 1)
    if lo == fl:
        return fl + Fraction(1, math.floor(1 / (hi - fl)) + 1)
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))


def simplest_in(a, b):
    """Smallest-denominator rational in the half-open interval [a, b).

    Ties are broken towards the smaller value.
    """
    a, b = as_fraction(a), as_fraction(b)
    inner = simplest_between(a, b)
    if a.denominator <= inner.denominator:
        return a
    return inner


def make_json_safe(obj):
    """Recursively convert leodyn values into JSON-serializable objects."""
    if hasattr(obj, 'to_json'):
        return obj.to_json()
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, mpmath.mpf):
        return mpmath.nstr(obj, 40)
    if isinstance(obj, dict):
        return {str(k): make_json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [make_json_safe(v) for v in items]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj
