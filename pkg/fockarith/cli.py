import argparse
import csv
import io
import math
import os
import re
import sys

from twisted.internet.defer import succeed
from twisted.internet.task import react
from twisted.logger import (
    FilteringLogObserver, LogLevel, LogLevelFilterPredicate, Logger,
    globalLogPublisher, textFileLogObserver)
from twisted.python.failure import Failure
from twisted.python.filepath import FilePath

from fockarith import __version__
from fockarith.arith import (
    EPSILON, MU, NU0, NU1, OMEGA, PHI, UNITARY_COUNT, ArithmeticFn,
    check_positive, m_count_fn, power_fn, ramanujan_sum, sigma_fn)
from fockarith.codec import loads, write_operator
from fockarith.convolution import ConvKind, convolved
from fockarith.hardy import (
    DiscPoint, RadialSchedule, berezin, berezin_zeta, minimal_dimension,
    radial_limit, schedule_csv_rows, zeta_value)
from fockarith.operators import (
    DIVISOR_RANGE, K_RANGES, MODES, NORMALIZED, identity,
    number_op, phase_down, phase_up, projector, projector_bar, ramanujan_c,
    ramanujan_t, rotated)
from fockarith.pool import run_tasks
from fockarith.report import Report, write_report, write_schedule_csv
from fockarith.suites import SUITE_NAMES, build_tasks


log = Logger()

EXIT_VIOLATIONS = 1

DEFAULT_TOLERANCE = 1e-12

_FUNCTIONS = {
    'mobius': MU,
    'mu': MU,
    'phi': PHI,
    'omega': OMEGA,
    'unitary-count': UNITARY_COUNT,
    'epsilon': EPSILON,
    'nu0': NU0,
    'nu1': NU1,
}

_FACTORIES = {
    'sigma': sigma_fn,
    'power': power_fn,
    'm': m_count_fn,
}

_PI_PHASE = re.compile(
    r'^(?P<coeff>[+-]?(\d+(\.\d*)?|\.\d+)?)\*?pi(/(?P<denom>\d+(\.\d*)?))?$')


def main(reactor, argv=sys.argv[1:], env=os.environ, stdout=None):
    """
    Build operators on a truncated Fock space, evaluate their Berezin
    symbols, and verify the identities of operator-valued arithmetic
    functions.
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    # Set up logging
    init_logging(args.log_level)

    try:
        config = RunConfig.from_args(args, env)
        log.info('Starting fockarith {version} {command} with: {config!r}',
                 version=__version__, command=args.command, config=config)
        d = args.handler(reactor, args, config)
    except ValueError as e:
        parser.error(str(e))

    return d.addCallback(_emit, config, stdout or sys.stdout)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--log-level',
                        help='The minimum severity level to log messages at '
                             '(default: %(default)s)',
                        choices=['debug', 'info', 'warn', 'error', 'critical'],
                        default='warn')
    common.add_argument('-o', '--out', metavar='PATH',
                        help='Write the output to PATH instead of stdout')
    common.add_argument('-j', '--jobs', type=int,
                        help='The number of worker threads (default: '
                             '$FOCKARITH_JOBS or 1)')
    common.add_argument('--tol', type=float,
                        help='Override the tolerance (default: '
                             '$FOCKARITH_TOL or the per-check default)')

    parser = argparse.ArgumentParser(
        description='Operator-valued arithmetic functions on a truncated '
                    'Fock space',
        epilog='Complex values are written a+bi or in polar form r@theta, '
               'where theta may be a multiple of pi such as pi/7.')
    parser.add_argument('--version', action='version', version=__version__)
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    arith = subparsers.add_parser(
        'arith', parents=[common],
        help='Tabulate an arithmetic function',
        description='Print n,value rows of an arithmetic function: mobius, '
                    'phi, omega, unitary-count, epsilon, nu0, nu1, sigma:S, '
                    'power:S, m:S, ramanujan:Q, or a product '
                    'dirichlet:A:B, lcm:A:B, unitary:A:B.')
    arith.add_argument('--fn', required=True, help='The function')
    group = arith.add_mutually_exclusive_group(required=True)
    group.add_argument('--n', dest='arg', type=int, help='A single argument')
    group.add_argument('--range', metavar='A..B', help='An argument range')
    arith.add_argument('--s', help='The exponent for sigma, power and m')
    arith.set_defaults(handler=cmd_arith)

    op = subparsers.add_parser(
        'op', parents=[common],
        help='Build or read a serialized operator',
        description='Operator specs: identity, up, down, pi:J:N[:MODE], '
                    'pibar:J:K, rotated:N, c:J:N, t:J:N, number:ALPHA[:J].')
    op.add_argument('spec', nargs='?', help='The operator spec')
    op.add_argument('--dim', type=int, help='The truncation dimension')
    op.add_argument('--k-range', choices=K_RANGES, default=DIVISOR_RANGE,
                    help='The range of k in T_j(n) (default: %(default)s)')
    op.add_argument('--read', metavar='FILE',
                    help='Read, validate and re-emit a serialized operator')
    op.set_defaults(handler=cmd_op)

    verify = subparsers.add_parser(
        'verify', parents=[common],
        help='Run a verification suite',
        description='Run a named suite and write its JSON report. Exits 1 '
                    'if any identity is violated.')
    verify.add_argument('--suite', required=True, choices=SUITE_NAMES)
    verify.add_argument('--nmax', type=int, help='The largest modulus')
    verify.add_argument('--n', help='Comma-separated moduli')
    verify.add_argument('--j', help='Comma-separated offsets')
    verify.add_argument('--dim', default='auto',
                        help='The truncation dimension, at least the '
                             'minimal sufficient one (default: %(default)s)')
    verify.add_argument('--seed', type=int, default=0,
                        help='The seed for random test data '
                             '(default: %(default)s)')
    verify.add_argument('--s', help='Comma-separated zeta exponents')
    verify.add_argument('--lambda', dest='lambdas',
                        help='Comma-separated disc points')
    _add_schedule_arguments(verify, default=None)
    verify.add_argument('--k-range', choices=K_RANGES, default=DIVISOR_RANGE,
                        help='The range of k in the printed identities '
                             '(default: %(default)s)')
    verify.set_defaults(handler=cmd_verify)

    berezin_parser = subparsers.add_parser(
        'berezin', parents=[common],
        help='Evaluate Berezin symbols at disc points')
    _add_operator_arguments(berezin_parser)
    berezin_parser.add_argument('--lambda', dest='lambdas', required=True,
                                help='Comma-separated disc points')
    berezin_parser.set_defaults(handler=cmd_berezin)

    radial = subparsers.add_parser(
        'radial', parents=[common],
        help='Evaluate a Berezin symbol along a radial schedule')
    _add_operator_arguments(radial)
    _add_schedule_arguments(radial, default='0.9,0.99,0.999')
    radial.set_defaults(handler=cmd_radial)

    zeta = subparsers.add_parser(
        'zeta', parents=[common],
        help='The Berezin symbol of the zeta operator along a schedule')
    zeta.add_argument('--s', default='2',
                      help='The exponent, Re(s) > 1 (default: %(default)s)')
    _add_schedule_arguments(zeta, default='0.99,0.999,0.9999')
    zeta.set_defaults(handler=cmd_zeta)

    return parser


def _add_operator_arguments(parser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--op', help='The operator spec')
    source.add_argument('--op-file', metavar='FILE',
                        help='A serialized operator')
    parser.add_argument('--dim', default='auto',
                        help='The truncation dimension for --op '
                             '(default: %(default)s)')
    parser.add_argument('--k-range', choices=K_RANGES, default=DIVISOR_RANGE,
                        help='The range of k in T_j(n) (default: '
                             '%(default)s)')


def _add_schedule_arguments(parser, default):
    parser.add_argument('--radii', default=default,
                        help='Comma-separated increasing radii in (0, 1) '
                             '(default: %(default)s)')
    parser.add_argument('--phase', default=None,
                        help='The direction of approach, e.g. pi/3 '
                             '(default: 0)')


def init_logging(log_level):
    """
    Initialise the logging by adding an observer to the global log publisher.
    Logs go to stderr; stdout carries the CSV and JSON output.

    :param str log_level: The minimum log level to log messages for.
    """
    log_level_filter = LogLevelFilterPredicate(
        LogLevel.levelWithName(log_level))
    log_observer = FilteringLogObserver(
        textFileLogObserver(sys.stderr), [log_level_filter])
    globalLogPublisher.addObserver(log_observer)


def _split(text):
    return [item.strip() for item in text.split(',') if item.strip()]


def parse_ints(text, name):
    """ Parse ``2,3,12`` into a tuple of ints. """
    try:
        return tuple(int(item) for item in _split(text))
    except ValueError:
        raise ValueError('%s must be comma-separated integers, got %r' % (
            name, text))


def parse_range(text):
    """ Parse ``A..B`` into an inclusive ``range``. """
    match = re.match(r'^\s*(\d+)\s*\.\.\s*(\d+)\s*$', text)
    if match is None:
        raise ValueError("'%s' is not a range of the form A..B" % (text,))
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo < 1 or hi < lo:
        raise ValueError('range %s must satisfy 1 <= A <= B' % (text,))
    return range(lo, hi + 1)


def parse_phase(text):
    """ Parse an angle in radians: ``0.3``, ``pi``, ``-pi/7``, ``2pi/5``. """
    text = text.strip().replace(' ', '')
    match = _PI_PHASE.match(text)
    if match is None:
        try:
            return float(text)
        except ValueError:
            raise ValueError("'%s' is not an angle" % (text,))
    coeff = match.group('coeff')
    if coeff in ('', '+'):
        coeff = 1.0
    elif coeff == '-':
        coeff = -1.0
    value = float(coeff) * math.pi
    if match.group('denom') is not None:
        value /= float(match.group('denom'))
    return value


def parse_complex(text):
    """
    Parse a complex number written ``a+bi`` (or with ``j``) or in polar
    form ``r@theta``.
    """
    text = text.strip().replace(' ', '')
    if '@' in text:
        radius, _, phase = text.partition('@')
        try:
            radius = float(radius)
        except ValueError:
            raise ValueError("'%s' has no valid modulus" % (text,))
        return radius * complex(math.cos(parse_phase(phase)),
                                math.sin(parse_phase(phase)))
    normalized = re.sub(r'(^|[+-])([ij])$', r'\g<1>1\2', text)
    normalized = normalized.replace('i', 'j')
    try:
        return complex(normalized)
    except ValueError:
        raise ValueError("'%s' is not a complex number" % (text,))


def parse_number(text):
    """ An int, float or complex, whichever reads the text exactly. """
    for convert in (int, float):
        try:
            return convert(text)
        except ValueError:
            pass
    return parse_complex(text)


def parse_points(text):
    """ Comma-separated disc points, as plain complex values. """
    return tuple(DiscPoint(parse_complex(item)).value
                 for item in _split(text))


def parse_radii(text):
    radii = tuple(float(item) for item in _split(text))
    RadialSchedule(radii)
    return radii


def parse_dim(text):
    """ ``auto`` is ``None``; anything else a dimension ``>= 1``. """
    if text is None or text == 'auto':
        return None
    try:
        dim = int(text)
    except ValueError:
        raise ValueError("dimension must be an integer or 'auto', got %r" % (
            text,))
    if dim < 1:
        raise ValueError('dimension must be >= 1, got %d' % (dim,))
    return dim


def parse_function(text, s=None):
    """
    Parse an arithmetic function name.

    :param s: The exponent for ``sigma``, ``power`` and ``m`` when the name
        does not carry one.
    """
    name, _, rest = text.partition(':')
    if name in _FUNCTIONS and not rest:
        return _FUNCTIONS[name]
    if name in _FACTORIES:
        param = rest or s
        if param is None:
            raise ValueError('%s needs an exponent: %s:S or --s S' % (
                name, name))
        param = parse_number(param)
        if name == 'm':
            param = check_positive(param, 's')
        return _FACTORIES[name](param)
    if name == 'ramanujan' and rest:
        q = check_positive(int(rest), 'q')
        return ArithmeticFn(lambda n: ramanujan_sum(q, n),
                            name='c_%d' % (q,))
    if name in ('dirichlet', 'lcm', 'unitary') and rest:
        tokens = rest.split(':')
        for split in range(1, len(tokens)):
            try:
                a = parse_function(':'.join(tokens[:split]), s)
                b = parse_function(':'.join(tokens[split:]), s)
            except ValueError:
                continue
            return convolved(ConvKind(name), a, b)
    raise ValueError('Unknown arithmetic function %r' % (text,))


def parse_operator(spec, dim, k_range=DIVISOR_RANGE):
    """
    Build an operator from a spec string such as ``pi:1:3:literal``.
    """
    name, _, rest = spec.partition(':')
    params = rest.split(':') if rest else []

    def ints(count, optional=0):
        if not count <= len(params) <= count + optional:
            raise ValueError('operator spec %r takes %d parameters' % (
                spec, count))
        try:
            return [int(p) for p in params[:count]]
        except ValueError:
            raise ValueError('operator spec %r has a non-integer '
                             'parameter' % (spec,))

    if name in ('identity', 'up', 'down'):
        ints(0)
        return {'identity': identity, 'up': phase_up,
                'down': phase_down}[name](dim)
    if name == 'pi':
        j, n = ints(2, optional=1)
        mode = params[2] if len(params) == 3 else NORMALIZED
        if mode not in MODES:
            raise ValueError('projector mode must be one of %s, got %r' % (
                ', '.join(MODES), mode))
        return projector(j, n, dim, mode)
    if name == 'pibar':
        j, k = ints(2)
        return projector_bar(j, k, dim)
    if name == 'rotated':
        n, = ints(1)
        return rotated(n, dim)
    if name == 'c':
        j, n = ints(2)
        return ramanujan_c(j, n, dim)
    if name == 't':
        j, n = ints(2)
        return ramanujan_t(j, n, dim, k_range)
    if name == 'number':
        if not params:
            raise ValueError('number needs a function: number:ALPHA[:J]')
        j = 0
        if len(params) > 1 and params[-1].isdigit() and (
                params[0] not in _FACTORIES or len(params) > 2):
            j = int(params[-1])
            params = params[:-1]
        return number_op(parse_function(':'.join(params)), j, dim)
    raise ValueError('Unknown operator %r' % (spec,))


class RunConfig(object):
    """
    The parameters of one command, from its flags and the environment.
    Flags win over ``FOCKARITH_JOBS`` and ``FOCKARITH_TOL``.
    """

    def __init__(self, jobs=1, tol=None, out=None, nmax=None, n=None, j=None,
                 dim=None, seed=0, s=None, lambdas=None, radii=None,
                 phase=None, k_range=DIVISOR_RANGE):
        if jobs < 1:
            raise ValueError('jobs must be >= 1, got %d' % (jobs,))
        if tol is not None and not tol > 0:
            raise ValueError('tolerance must be > 0, got %r' % (tol,))
        if dim is not None and dim < 1:
            raise ValueError('dimension must be >= 1, got %d' % (dim,))
        if nmax is not None and nmax < 1:
            raise ValueError('nmax must be >= 1, got %d' % (nmax,))
        if radii is not None:
            RadialSchedule(radii)
        self.jobs = jobs
        self.tol = tol
        self.out = out
        self.nmax = nmax
        self.n = n
        self.j = j
        self.dim = dim
        self.seed = seed
        self.s = s
        self.lambdas = lambdas
        self.radii = radii
        self.phase = phase
        self.k_range = k_range

    @classmethod
    def from_args(cls, args, env=os.environ):
        def arg(name, parse=None):
            value = getattr(args, name, None)
            if value is None or parse is None:
                return value
            return parse(value)

        jobs = args.jobs
        if jobs is None:
            jobs = int(env.get('FOCKARITH_JOBS', 1))
        tol = args.tol
        if tol is None and env.get('FOCKARITH_TOL'):
            tol = float(env['FOCKARITH_TOL'])

        return cls(
            jobs=jobs,
            tol=tol,
            out=args.out,
            nmax=arg('nmax'),
            n=arg('n', lambda v: parse_ints(v, 'n')),
            j=arg('j', lambda v: parse_ints(v, 'j')),
            dim=arg('dim', parse_dim),
            seed=arg('seed') or 0,
            s=arg('s', lambda v: tuple(parse_number(x) for x in _split(v))),
            lambdas=arg('lambdas', parse_points),
            radii=arg('radii', parse_radii),
            phase=arg('phase', parse_phase),
            k_range=arg('k_range') or DIVISOR_RANGE,
        )

    def __repr__(self):
        fields = ['jobs', 'tol', 'out', 'nmax', 'n', 'j', 'dim', 'seed', 's',
                  'lambdas', 'radii', 'phase', 'k_range']
        return ', '.join('{}={!r}'.format(k, getattr(self, k))
                         for k in fields if getattr(self, k) is not None)


def _emit(result, config, stdout):
    text, ok = result
    if config.out is None:
        stdout.write(text)
        stdout.flush()
    else:
        FilePath(config.out).setContent(text.encode('utf-8'))
        log.info('Wrote {path}', path=config.out)
    if not ok:
        return Failure(SystemExit(EXIT_VIOLATIONS))
    return 0


def _format_value(value):
    if isinstance(value, complex):
        return '%r+%rj' % (value.real, value.imag) if value.imag else (
            repr(value.real))
    return repr(value)


def cmd_arith(reactor, args, config):
    fn = parse_function(args.fn, args.s)
    ns = parse_range(args.range) if args.range else [
        check_positive(args.arg)]
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(['n', 'value'])
    for n in ns:
        writer.writerow([n, _format_value(fn(n))])
    return succeed((out.getvalue(), True))


def _read_operator_file(path):
    try:
        content = FilePath(path).getContent()
    except (IOError, OSError) as e:
        raise ValueError('cannot read operator file %s: %s' % (path, e))
    return loads(content.decode('utf-8'))


def cmd_op(reactor, args, config):
    if args.read is not None:
        if args.spec is not None:
            raise ValueError('give either an operator spec or --read')
        operator = _read_operator_file(args.read)
    else:
        if args.spec is None:
            raise ValueError('an operator spec or --read is required')
        if config.dim is None:
            raise ValueError('--dim is required to build an operator')
        operator = parse_operator(args.spec, config.dim, config.k_range)
    out = io.StringIO()
    write_operator(out, operator)
    return succeed((out.getvalue(), True))


def _operator_for(args, config, radius):
    """
    The operator named by ``--op`` (truncated to the minimal sufficient
    dimension for ``radius`` unless ``--dim`` is larger) or ``--op-file``.
    """
    tolerance = config.tol or DEFAULT_TOLERANCE
    auto = minimal_dimension(radius, tolerance)
    if args.op_file is not None:
        operator = _read_operator_file(args.op_file)
        if operator.dim < auto:
            log.warn('Operator of dimension {dim} is below the {auto} '
                     'needed for tolerance {tol} at radius {radius}',
                     dim=operator.dim, auto=auto, tol=tolerance,
                     radius=radius)
        return operator
    if config.dim is not None and config.dim < auto:
        raise ValueError(
            'dimension %d is below the minimal sufficient dimension %d' % (
                config.dim, auto))
    return parse_operator(args.op, config.dim or auto, config.k_range)


def cmd_berezin(reactor, args, config):
    points = config.lambdas
    operator = _operator_for(args, config, max(abs(p) for p in points))
    rows = []
    for point in points:
        estimate = berezin(operator, point)
        rows.append((abs(point), math.atan2(point.imag, point.real),
                     estimate.value, estimate.error))
    out = io.StringIO()
    write_schedule_csv(out, rows)
    return succeed((out.getvalue(), True))


def _schedule(config):
    return RadialSchedule.along(config.radii, config.phase or 0.0)


def cmd_radial(reactor, args, config):
    schedule = _schedule(config)
    operator = _operator_for(args, config, schedule.radii[-1])
    trend = radial_limit(lambda point: berezin(operator, point), schedule)
    log.info('Radial estimate {estimate} (advisory extrapolation '
             '{extrapolated})', estimate=trend.estimate,
             extrapolated=trend.extrapolated)
    out = io.StringIO()
    write_schedule_csv(out, schedule_csv_rows(trend))
    return succeed((out.getvalue(), True))


def cmd_zeta(reactor, args, config):
    if len(config.s) != 1:
        raise ValueError('zeta takes a single exponent, got %r' % (
            config.s,))
    s = config.s[0]
    schedule = _schedule(config)
    target = zeta_value(s + 1)
    trend = radial_limit(lambda point: berezin_zeta(s, point), schedule,
                         target=target)
    log.info('Zeta symbol at s={s} approaches {value}, zeta(s+1) = {target}',
             s=s, value=trend.estimate, target=target)
    out = io.StringIO()
    write_schedule_csv(out, schedule_csv_rows(trend))
    return succeed((out.getvalue(), True))


def cmd_verify(reactor, args, config):
    tasks = build_tasks(args.suite, config)
    log.info('Running suite {suite}: {count} tasks on {jobs} jobs',
             suite=args.suite, count=len(tasks), jobs=config.jobs)
    d = run_tasks(tasks, jobs=config.jobs, reactor=reactor)
    return d.addCallback(_check_report, args.suite)


def _check_report(task_results, suite):
    report = Report(r for results in task_results for r in results)
    out = io.StringIO()
    write_report(out, report)
    if report.ok:
        log.info('Suite {suite} passed: {checks} checks, {skipped} skipped',
                 suite=suite, **report.summary())
    for violation in report.violations:
        log.error('{identity} violated at {where}: deviation {deviation}',
                  identity=violation.identity, where=violation.where,
                  deviation=violation.deviation)
    return out.getvalue(), report.ok


def _main():  # pragma: no cover
    react(main)


if __name__ == '__main__':  # pragma: no cover
    _main()
