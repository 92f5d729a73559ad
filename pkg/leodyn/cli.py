#!/usr/bin/env python
# encoding: utf-8
"""
cli

The ``leodyn`` command: LEO certification of interval maps, shadowing of
specifications, beta sweeps and the worked examples. Every command prints
a verdict table and exits with 0 when all checks pass, 1 when a check
fails and 2 on a usage or parse error.

Examples
--------
    leodyn leo --map doubling --interval 0/1:1/2
    leodyn shadow --system doubling --spec spec.json --periodic
    leodyn beta-atlas --beta-min 1.1 --beta-max 2.5 --steps 100 --csv atlas.csv
    leodyn example sigma-graph --gap 3
"""

import argparse
from fractions import Fraction
import json
import logging
import math
import sys

import numpy as np
import pandas as pd

from .beta_expansions import (DEFAULT_PRECISION,
                              STABLE_FRACTION,
                              beta_atlas,
                              beta_map,
                              parse_beta)
from .constructions import (CONSISTENT,
                            REJECTED,
                            example1_map,
                            example2_map,
                            f0_map,
                            feliks_cantor,
                            feliks_verify,
                            lindenstrauss_membership,
                            pi_suppress,
                            rome_decode,
                            rome_embed,
                            rome_encode,
                            rome_first_return,
                            rome_return_time,
                            rome_unembed,
                            thue_morse_factors)
from .exceptions import LeodynError
from .interval_dynamics import PiecewiseAffineMap, doubling_map, leo_certify
from .specification import (IntervalRegionSystem,
                            ShiftRegionSystem,
                            SpecificationInstance,
                            covering_time,
                            periodic_shadow,
                            shadow,
                            spec_failure_witness,
                            validate_spacing)
from .symbolic import (cylinder_covering_index,
                       entropy_estimate,
                       fixed_point_shift,
                       full_shift,
                       golden_mean_shift,
                       leo_entropy_bound_check,
                       primitivity_index,
                       shift_from_json,
                       sigma_graph,
                       spectral_entropy,
                       words)
from .utils import format_rational, make_json_safe, parse_interval, parse_rational
from .version import __version__

PASS = 'pass'
FAIL = 'fail'
VALUE = 'value'

EXIT_PASS = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

EXAMPLES = ('feliks', 'rome', 'sigma-graph', 'lindenstrauss', 'petersen')


class UsageError(Exception):
    """Bad flag values or unreadable input files."""
    pass


class Report(object):
    """Verdicts of one command run.

    Attributes
    ----------
    command : str
    inputs : dict
        The flag values the command ran with.
    verdicts : list of (name, status, value)
        status is one of 'pass', 'fail' or 'value'; names are unique.
    artifacts : list of str
        Files written by the command.
    details : dict
        JSON-ready payload (certificates, ledgers, witnesses).
    """

    def __init__(self, command, inputs):
        self.command = command
        self.inputs = dict(inputs)
        self.verdicts = []
        self.artifacts = []
        self.details = {}
        self.frame = None

    def __repr__(self):
        return 'Report({}, {})'.format(self.command, PASS if self.passed else FAIL)

    def add(self, name, status, value=None):
        assert status in (PASS, FAIL, VALUE), 'unknown status {}'.format(status)
        assert name not in self.names, 'verdict {} already reported'.format(name)
        self.verdicts.append((name, status, value))

    def check(self, name, passed, value=None):
        self.add(name, PASS if passed else FAIL, value)

    def value(self, name, value):
        self.add(name, VALUE, value)

    @property
    def names(self):
        return [name for name, _, _ in self.verdicts]

    @property
    def passed(self):
        return all(status != FAIL for _, status, _ in self.verdicts)

    def verdict(self, name):
        for n, status, value in self.verdicts:
            if n == name:
                return status, value
        raise KeyError(name)

    def to_frame(self):
        return pd.DataFrame([{'check': name, 'status': status, 'value': _format_value(value)}
                             for name, status, value in self.verdicts],
                            columns=['check', 'status', 'value'])

    def to_json(self):
        return {'command': self.command,
                'version': __version__,
                'inputs': make_json_safe(self.inputs),
                'passed': self.passed,
                'verdicts': [{'check': name, 'status': status, 'value': make_json_safe(value)}
                             for name, status, value in self.verdicts],
                'artifacts': list(self.artifacts),
                'details': make_json_safe(self.details)}

    @classmethod
    def from_json(cls, data):
        """A Report read back from `to_json`; values stay in their JSON form."""
        report = cls(data['command'], data.get('inputs', {}))
        for item in data['verdicts']:
            report.add(item['check'], item['status'], item.get('value'))
        report.artifacts = list(data.get('artifacts', []))
        report.details = dict(data.get('details', {}))
        return report

    def summary(self):
        header = '{}: {}'.format(self.command, 'PASS' if self.passed else 'FAIL')
        if not self.verdicts:
            return header
        return header + '\n' + self.to_frame().to_string(index=False)


def _format_value(value):
    if value is None:
        return ''
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float):
        return '{:.6g}'.format(value)
    return str(value)


def _write_json(path, obj):
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        json.dump(obj, f, indent=2, sort_keys=False)
        f.write('\n')


def _write_csv(path, frame):
    frame.to_csv(path, index=False, encoding='utf-8', lineterminator='\n')


def _write_plot_data(path, frame):
    """Whitespace-separated columns with a commented header line."""
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write('# ' + ' '.join(frame.columns) + '\n')
        frame.to_csv(f, sep=' ', index=False, header=False, na_rep='nan',
                     lineterminator='\n')


def _read_json(path):
    try:
        with open(path, encoding='utf-8') as f:
            return json.load(f)
    except (OSError, ValueError) as e:
        raise UsageError('cannot read {}: {}'.format(path, e))


def _rational(text, flag):
    try:
        return parse_rational(text)
    except ValueError as e:
        raise UsageError('{}: {}'.format(flag, e))


def load_map(name):
    """A builtin map or a map JSON file.

    Builtins are ``doubling``, ``beta:<value>``, ``f0``, ``example1[:levels]``
    and ``example2``.
    """
    try:
        if name == 'doubling':
            return doubling_map()
        if name == 'f0':
            return f0_map()
        if name.startswith('beta:'):
            return beta_map(name[len('beta:'):])
        if name == 'example1' or name.startswith('example1:'):
            levels = int(name.split(':', 1)[1]) if ':' in name else 1
            return example1_map(levels)
        if name == 'example2':
            return example2_map()
    except ValueError as e:
        raise UsageError('map {}: {}'.format(name, e))

    data = _read_json(name)
    try:
        return PiecewiseAffineMap.from_json(data)
    except (ValueError, AttributeError) as e:
        raise UsageError('map {}: {}'.format(name, e))


def load_shift(name):
    """A builtin shift space or None when `name` is not a shift.

    Builtins are ``full2``, ``full:<k>``, ``golden-mean``, ``fixed-point``
    and ``sigma-graph[:M]``.
    """
    try:
        if name == 'full2':
            return full_shift(2)
        if name.startswith('full:'):
            return full_shift(int(name[len('full:'):]))
        if name == 'golden-mean':
            return golden_mean_shift()
        if name == 'fixed-point':
            return fixed_point_shift()
        if name == 'sigma-graph' or name.startswith('sigma-graph:'):
            truncation = int(name.split(':', 1)[1]) if ':' in name else 8
            return sigma_graph(truncation)
    except ValueError as e:
        raise UsageError('shift {}: {}'.format(name, e))
    return None


def load_system(name):
    """A RegionSystem from a builtin map or shift name, or a JSON file."""
    space = load_shift(name)
    if space is not None:
        return ShiftRegionSystem(space)
    if name.endswith('.json'):
        data = _read_json(name)
        if isinstance(data, dict) and 'kind' in data:
            try:
                return ShiftRegionSystem(shift_from_json(data))
            except (ValueError, KeyError) as e:
                raise UsageError('shift {}: {}'.format(name, e))
    return IntervalRegionSystem(load_map(name))


# Commands

def cmd_leo(args):
    f = load_map(args.map)
    try:
        J = parse_interval(args.interval)
        target = parse_interval(args.target) if args.target else None
    except ValueError as e:
        raise UsageError(str(e))
    for flag, interval in [('--interval', J), ('--target', target)]:
        if interval is not None and not 0 <= interval[0] < interval[1] <= 1:
            raise UsageError('{} should lie in [0, 1], got {}:{}'.format(
                flag, format_rational(interval[0]), format_rational(interval[1])))

    report = Report('leo', {'map': args.map, 'interval': args.interval,
                            'target': args.target, 'max_n': args.max_n})
    certificate = leo_certify(f, J, max_n=args.max_n, target=target)
    report.check('leo', certificate.certified, certificate.n)
    if not certificate.certified:
        report.value('terminal', certificate.terminal)
        logging.warning(str(certificate.failure))
    report.details['map'] = f.to_json()
    report.details['terminal'] = certificate.terminal.to_json()
    return report


def cmd_shadow(args):
    system = load_system(args.system)
    data = _read_json(args.spec)
    try:
        spec = SpecificationInstance.from_json(data, system)
    except (ValueError, KeyError, TypeError) as e:
        raise UsageError('spec {}: {}'.format(args.spec, e))

    report = Report('shadow', {'system': args.system, 'spec': args.spec,
                               'periodic': args.periodic, 'prune': not args.no_prune})
    spacing = validate_spacing(spec)
    report.check('spacing', spacing.passed, spacing.index)

    covering = covering_time(system, spec.eps, max_n=args.max_n)
    report.value('covering_time', covering)

    if args.periodic:
        result = periodic_shadow(system, spec, covering, prune=not args.no_prune)
        report.check('periodic', system.iterate(result.representative, result.period) ==
                     result.representative, result.period)
    else:
        result = shadow(system, spec, covering, prune=not args.no_prune)
    report.check('shadowing', result.check.passed, result.deviation)
    report.value('representative', system.point_to_json(result.representative))

    certificate = result.to_json(system)
    report.details['result'] = certificate
    if args.certificate:
        _write_json(args.certificate, certificate)
        report.artifacts.append(args.certificate)
    return report


def _beta_grid(args):
    lo = _rational(args.beta_min, '--beta-min')
    hi = _rational(args.beta_max, '--beta-max')
    if not 1 < lo < hi:
        raise UsageError('need 1 < beta-min < beta-max, got {} and {}'.format(
            args.beta_min, args.beta_max))
    if args.steps < 1:
        raise UsageError('--steps should be at least 1')
    if args.digits < 1:
        raise UsageError('--digits should be at least 1')
    if args.steps == 1:
        betas = [lo]
    else:
        betas = [lo + (hi - lo) * Fraction(i, args.steps - 1) for i in range(args.steps)]
    try:
        betas += [parse_beta(b, args.precision) for b in args.beta]
    except ValueError as e:
        raise UsageError('--beta: {}'.format(e))
    return betas


def cmd_beta_atlas(args):
    betas = _beta_grid(args)
    try:
        interval = parse_interval(args.interval)
    except ValueError as e:
        raise UsageError(str(e))

    report = Report('beta-atlas', {'beta_min': args.beta_min, 'beta_max': args.beta_max,
                                   'steps': args.steps, 'beta': args.beta,
                                   'digits': args.digits, 'interval': args.interval,
                                   'max_n': args.max_n, 'precision': args.precision})
    frame = beta_atlas(betas, digits=args.digits, interval=interval, max_n=args.max_n,
                       precision=args.precision, n_jobs=args.jobs)
    frame = frame.sort_values('beta', kind='mergesort').reset_index(drop=True)

    report.value('rows', len(frame))
    stable = float(frame['stable'].mean())
    report.check('stable_fraction', stable >= STABLE_FRACTION, stable)
    report.value('spec_consistent', int((frame['verdict'] == 'spec-consistent').sum()))
    report.value('uncertified', int(frame['covering_time'].isnull().sum()))
    rows = frame.to_dict(orient='records')
    for row in rows:
        if isinstance(row['covering_time'], float) and math.isnan(row['covering_time']):
            row['covering_time'] = None
    report.details['atlas'] = rows
    report.frame = frame

    if args.plot_data:
        _write_plot_data(args.plot_data, frame[['beta', 'max_zero_run', 'covering_time']])
        report.artifacts.append(args.plot_data)
    return report


def _example_feliks(args, report):
    zeta0 = _rational(args.zeta0, '--zeta0')
    ratio = _rational(args.ratio, '--ratio')
    approx = feliks_cantor(args.levels, args.depth, zeta0, ratio)
    result = feliks_verify(approx, max_period=args.max_period, n=args.n,
                           samples=args.samples, seed=args.seed)

    for row in result.to_frame().itertuples(index=False):
        report.check(row.check, bool(row.passed), row.value)
    report.value('measure', float(approx.remaining.measure))
    report.details['approximation'] = approx.to_json()
    report.details['verification'] = result.to_json()

    if args.plot_data:
        arcs = pd.DataFrame([(float(a), float(b)) for a, b in approx.remaining],
                            columns=['a', 'b'])
        _write_plot_data(args.plot_data, arcs)
        report.artifacts.append(args.plot_data)


def _example_rome(args, report):
    if args.n < 0:
        raise UsageError('--n should be nonnegative, got {}'.format(args.n))
    round_trip = all(rome_decode(rome_encode(n)) == n for n in range(args.n + 1))
    report.check('encode_decode', round_trip, args.n + 1)

    space = sigma_graph(args.truncation)
    prefixes = words(space, 3)
    report.check('embed_unembed',
                 all(rome_unembed(rome_embed(w, space)) == w for w in prefixes),
                 len(prefixes))
    report.check('return_time',
                 all(rome_return_time(rome_embed(w)) == w[0] + 1 for w in prefixes))
    report.check('first_return',
                 all(rome_first_return(rome_embed(w)) == rome_embed(w[1:]) for w in prefixes))


def _example_sigma_graph(args, report):
    truncation = args.truncation if args.truncation else max(8, args.gap + 2)
    space = sigma_graph(truncation)
    witness = spec_failure_witness(space, args.gap)
    report.value('n', witness.n)
    report.check('unreachable', 1 not in witness.reachable, sorted(witness.reachable))
    report.value('first_hit', witness.first_hit)

    # sigma^k([w]) is the whole space from k = |w| + w[-1] on; the top
    # symbol M of the truncation covers one step early
    indices = [(w, cylinder_covering_index(space, w)) for n in range(1, 4)
               for w in words(space, n) if w[-1] < truncation]
    report.check('cylinder_covering_index',
                 all(k == len(w) + w[-1] for w, k in indices), len(indices))
    report.details['witness'] = witness.to_json()


def _example_lindenstrauss(args, report):
    rng = np.random.RandomState(args.seed)
    factors = sorted(thue_morse_factors(args.length, args.depth))

    padded = []
    for word in factors:
        out = []
        for s in word:
            if rng.rand() < .5:
                out.append(0)
            out.append(s)
        padded.append(tuple(out))
    report.check('thue_morse_consistent',
                 all(lindenstrauss_membership(w, depth=args.depth) == CONSISTENT
                     for w in padded), len(padded))
    report.check('consecutive_zeros_rejected',
                 lindenstrauss_membership((1, 0, 0, 2), depth=args.depth) == REJECTED)
    report.check('cube_rejected',
                 all(lindenstrauss_membership(w, depth=args.depth) == REJECTED
                     for w in [(1, 1, 1), (2, 0, 2, 0, 2), (1, 0, 1, 1, 2)]))
    report.check('suppression', pi_suppress((0, 1, 0, 2, 2, 0)) == (1, 2, 2))


def _example_petersen(args, report):
    spaces = [('full2', full_shift(2)), ('golden_mean', golden_mean_shift())]
    for label, space in spaces:
        exact = spectral_entropy(space)
        estimate = entropy_estimate(space, args.n, Fraction(1))
        error = abs(estimate - exact) / exact
        report.check('{}_entropy'.format(label), error <= args.tolerance, estimate)
        report.value('{}_spectral_entropy'.format(label), exact)

        N = primitivity_index(space)
        bound = leo_entropy_bound_check(space, N, Fraction(1, 2), args.k_max)
        report.check('{}_separated_bound'.format(label), bound.passed, N)
        report.details[label] = {'primitivity_index': N,
                                 'counts': bound.counts,
                                 'relative_error': error,
                                 'log2': math.log(2)}


def cmd_example(args):
    if args.name not in EXAMPLES:
        raise UsageError('unknown example {!r}, choose from {}'.format(args.name, EXAMPLES))
    inputs = {k: v for k, v in vars(args).items()
              if k not in ('func', 'json', 'csv', 'verbose', 'plot_data')}
    report = Report('example {}'.format(args.name), inputs)
    {'feliks': _example_feliks,
     'rome': _example_rome,
     'sigma-graph': _example_sigma_graph,
     'lindenstrauss': _example_lindenstrauss,
     'petersen': _example_petersen}[args.name](args, report)
    return report


# Parser

def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', type=str, default=None,
                        help='write the report as JSON to this path')
    common.add_argument('--csv', type=str, default=None,
                        help='write the verdict table (atlas rows for beta-atlas) as CSV')
    common.add_argument('--verbose', action='store_true',
                        help='log progress at INFO level')
    common.add_argument('--seed', type=int, default=0,
                        help='seed for randomized sampling')
    return common


def build_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog='leodyn',
        description='Locally eventually onto maps, specification and shadowing.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(__version__))
    sub = parser.add_subparsers(dest='command')

    p = sub.add_parser('leo', parents=[common],
                       help='certify that f^N(J) covers [0,1)')
    p.add_argument('--map', required=True,
                   help='doubling, beta:<value>, f0, example1[:levels], example2 '
                        'or a map JSON file')
    p.add_argument('--interval', required=True, help='J as p/q:r/s')
    p.add_argument('--target', default=None, help='covering target as p/q:r/s')
    p.add_argument('--max-n', type=int, default=64)
    p.set_defaults(func=cmd_leo)

    p = sub.add_parser('shadow', parents=[common],
                       help='shadow a specification JSON')
    p.add_argument('--system', required=True,
                   help='a map name, full2, full:<k>, golden-mean, fixed-point, '
                        'sigma-graph[:M] or a map/shift JSON file')
    p.add_argument('--spec', required=True, help='specification JSON file')
    p.add_argument('--periodic', action='store_true',
                   help='search a periodic shadowing point')
    p.add_argument('--certificate', default=None,
                   help='write the nested certificate JSON to this path')
    p.add_argument('--max-n', type=int, default=64,
                   help='bound for the covering time')
    p.add_argument('--no-prune', action='store_true',
                   help='refine the exact regions instead of one component')
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser('beta-atlas', parents=[common],
                       help='sweep beta and classify the expansions of 1')
    p.add_argument('--beta-min', required=True)
    p.add_argument('--beta-max', required=True)
    p.add_argument('--steps', type=int, default=100)
    p.add_argument('--beta', action='append', default=[],
                   help='extra beta values (golden, parry:1,0,1, p/q)')
    p.add_argument('--digits', type=int, default=48)
    p.add_argument('--interval', default='1/4:5/16',
                   help='reference interval for the covering time')
    p.add_argument('--max-n', type=int, default=64)
    p.add_argument('--precision', type=int, default=DEFAULT_PRECISION)
    p.add_argument('--jobs', type=int, default=1)
    p.add_argument('--plot-data', default=None,
                   help='write beta, max_zero_run, covering_time as whitespace columns')
    p.set_defaults(func=cmd_beta_atlas)

    p = sub.add_parser('example', parents=[common],
                       help='generate and verify a worked example')
    p.add_argument('name', help=', '.join(EXAMPLES))
    p.add_argument('--gap', type=int, default=3, help='sigma-graph: gap N')
    p.add_argument('--truncation', type=int, default=None,
                   help='sigma-graph, rome: largest symbol M')
    p.add_argument('--n', type=int, default=None,
                   help='petersen: word length (12); rome: largest code (10000); '
                        'feliks: covering iterate (4)')
    p.add_argument('--levels', type=int, default=3)
    p.add_argument('--depth', type=int, default=None,
                   help='feliks: preimage depth (6); lindenstrauss: prefix length (1024)')
    p.add_argument('--zeta0', default='1/8')
    p.add_argument('--ratio', default='1/4')
    p.add_argument('--max-period', type=int, default=4)
    p.add_argument('--samples', type=int, default=20)
    p.add_argument('--length', type=int, default=8,
                   help='lindenstrauss: factor length')
    p.add_argument('--k-max', type=int, default=8)
    p.add_argument('--tolerance', type=float, default=.06,
                   help='petersen: relative error allowed for the entropy estimate')
    p.add_argument('--plot-data', default=None,
                   help='feliks: write the remaining arcs as whitespace columns')
    p.set_defaults(func=cmd_example)
    return parser


_EXAMPLE_DEFAULTS = {'feliks': {'n': 4, 'depth': 6},
                     'rome': {'n': 10000, 'truncation': 4},
                     'sigma-graph': {},
                     'lindenstrauss': {'depth': 1024},
                     'petersen': {'n': 12}}


def _apply_example_defaults(args):
    for key, value in _EXAMPLE_DEFAULTS.get(args.name, {}).items():
        if getattr(args, key) is None:
            setattr(args, key, value)


def run(args):
    """Run a parsed command and write its outputs; returns the Report."""
    if args.command == 'example':
        _apply_example_defaults(args)
    report = args.func(args)

    if args.command == 'beta-atlas':
        if args.csv:
            _write_csv(args.csv, report.frame)
            report.artifacts.append(args.csv)
    elif args.csv:
        _write_csv(args.csv, report.to_frame())
        report.artifacts.append(args.csv)
    if args.json:
        report.artifacts.append(args.json)
        _write_json(args.json, report.to_json())
    return report


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PASS if e.code is None else e.code
    if args.command is None:
        parser.print_usage()
        return EXIT_USAGE

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format='%(levelname)s %(message)s')

    try:
        report = run(args)
    except UsageError as e:
        logging.error(str(e))
        return EXIT_USAGE
    except LeodynError as e:
        logging.error('{}: {}'.format(type(e).__name__, e))
        return EXIT_FAILED
    except ValueError as e:
        # argument checks of the library functions
        logging.error(str(e))
        return EXIT_USAGE

    if args.command == 'beta-atlas' and not args.csv:
        sys.stdout.write(report.frame.to_csv(index=False, lineterminator='\n'))
    else:
        print(report.summary())
    return EXIT_PASS if report.passed else EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
