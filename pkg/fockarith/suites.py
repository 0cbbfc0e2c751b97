"""
Named verification suites.

A suite turns a run configuration into a list of independent tasks. Each
task returns a list of :class:`~fockarith.report.CheckResult` and can run on
any worker; the report keeps task order.
"""
import cmath
import math
from collections import namedtuple

import numpy as np

from twisted.logger import Logger

from fockarith.arith import (
    EPSILON, MU, NU0, PHI, ArithmeticFn, CongruenceSystem,
    check_lcm_mobius_identity, check_multiplicative, check_non_negative,
    check_positive, crt_solve, dirichlet_conv, euler_phi, lcm_conv,
    lcm_tuples_count, m_count, omega, power_fn, sigma, sigma_fn,
    unitary_conv)
from fockarith.convolution import (
    ConvKind, check_associativity, check_extended_multiplicative,
    check_ramanujan_operators, identity_seq, noncommutativity_witness,
    op_conv, projector_seq, proposition1_check, verify_b_identities)
from fockarith.hardy import (
    RadialSchedule, as_point, berezin, berezin_c_closed,
    berezin_number_closed, berezin_pi_closed, berezin_t_closed,
    berezin_zeta, check_asymptotic_multiplicative, check_half_plane,
    check_ref_identities, check_shift_representation, kernel_state,
    minimal_dimension, overlap, overlap_closed, radial_limit,
    two_route_check, zeta_norm_check, zeta_value,
    zeta_weighted_series_check)
from fockarith.operators import (
    LITERAL, NORMALIZED, RESIDUE_RANGE, FockOperator, OperatorSeq,
    basis_projector, check_divisor_product_law, identity, number_op,
    number_op_series, op_add, op_adjoint, op_mul, op_power, op_sub,
    phase_down, phase_up, progression_split, projector,
    projector_from_rotated, projector_prime_split, ramanujan_c,
    ramanujan_sum_diagonal, ramanujan_t, rotated, shift_conjugate,
    theorem1_product, zero)
from fockarith.report import CheckResult


log = Logger()

Suite = namedtuple('Suite', ['name', 'description', 'build'])

DEFAULT_RADII = (0.9, 0.99, 0.999)
DEFAULT_LAMBDA = cmath.rect(0.7, math.pi / 7)
BEREZIN_POINTS = (0.3, 0.6 + 0.2j, cmath.rect(0.85, math.pi / 5))
RAMANUJAN_MODULI = (2, 3, 4, 6, 12)


def resolve_dim(config, auto):
    """
    The truncation to use: ``auto`` unless the configuration names one,
    which must not be smaller.
    """
    if config.dim is None:
        return auto
    if config.dim < auto:
        raise ValueError(
            'dimension %d is below the minimal sufficient dimension %d' % (
                config.dim, auto))
    return config.dim


def _tol(config, default):
    return default if config.tol is None else config.tol


def _aggregate(identity, where, deviations, tolerance, note=None):
    """
    Fold ``{point: deviation}`` into one result carrying the worst point.
    """
    worst = max(deviations, key=lambda k: deviations[k])
    return CheckResult.compare(
        identity, where, deviations[worst], tolerance, note=note,
        detail={'worst': worst, 'points': len(deviations)})


def _blocks(lo, hi, size):
    return [(a, min(a + size - 1, hi)) for a in range(lo, hi + 1, size)]


def _random_int_fn(seed, tag, support=16, low=-4, high=5):
    values = np.random.default_rng([seed, tag]).integers(
        low, high, size=support)
    return ArithmeticFn(
        lambda n: int(values[n - 1]) if n <= support else 0,
        name='random_%d_%d' % (seed, tag))


def _random_diagonal_seq(seed, tag, dim):
    def generate(n):
        rng = np.random.default_rng([seed, tag, n])
        return FockOperator.diagonal(
            rng.standard_normal(dim) + 1j * rng.standard_normal(dim))
    return OperatorSeq(dim, generate, name='random_%d' % (tag,))


# scalar

def _scalar_block(lo, hi):
    identities = {
        'mobius-inversion': lambda n: dirichlet_conv(MU, NU0, n) - EPSILON(n),
        'euler-identity': lambda n: dirichlet_conv(NU0, PHI, n) - n,
        'lcm-count': lambda n: lcm_conv(NU0, NU0, n) - m_count(2, n),
        'unitary-count': lambda n: unitary_conv(NU0, NU0, n) - 2 ** omega(n),
    }
    return [
        _aggregate(name, (lo, hi),
                   {n: abs(f(n)) for n in range(lo, hi + 1)}, 0)
        for name, f in sorted(identities.items())]


def _scalar_tuples(n_max):
    return [_aggregate(
        'lcm-triple-count', (1, n_max),
        {n: abs(lcm_tuples_count(3, n) - m_count(3, n))
         for n in range(1, n_max + 1)}, 0)]


def _scalar_algebra(seed, n_max):
    a, b, c = (_random_int_fn(seed, tag) for tag in range(3))
    results = []
    for kind in ConvKind:
        ab = ArithmeticFn(lambda n, kind=kind: kind.scalar(a, b, n))
        bc = ArithmeticFn(lambda n, kind=kind: kind.scalar(b, c, n))
        comm, assoc = {}, {}
        for n in range(1, n_max + 1):
            comm[n] = abs(kind.scalar(a, b, n) - kind.scalar(b, a, n))
            assoc[n] = abs(kind.scalar(ab, c, n) - kind.scalar(a, bc, n))
        results.append(_aggregate(
            'scalar-commutative-' + kind.value, (1, n_max), comm, 0))
        results.append(_aggregate(
            'scalar-associative-' + kind.value, (1, n_max), assoc, 0))
    lcm_mobius = check_lcm_mobius_identity(a, b, n_max)
    results.append(_aggregate(
        'lcm-mobius', (1, n_max), {r.where: r.deviation for r in lcm_mobius},
        1e-12))
    return results


def _scalar_multiplicative(n_max):
    results = []
    for fn in (MU, PHI, sigma_fn(1), sigma_fn(2), EPSILON):
        violations = check_multiplicative(fn, n_max)
        results.extend(violations or [CheckResult.compare(
            'multiplicative', fn.name, 0, 0)])
    return results


def build_scalar(config):
    n_max = config.nmax or 10 ** 4
    tasks = [lambda lo=lo, hi=hi: _scalar_block(lo, hi)
             for lo, hi in _blocks(1, n_max, 2500)]
    tasks.append(lambda: _scalar_tuples(min(n_max, 500)))
    tasks.append(lambda: _scalar_algebra(config.seed, min(n_max, 200)))
    tasks.append(lambda: _scalar_multiplicative(min(n_max, 1000)))
    return tasks


# crt

def _crt_pair(n, m):
    first = {}
    for x in range(math.lcm(n, m)):
        first.setdefault((x % n, x % m), x)
    deviations = {}
    for a in range(n):
        for b in range(m):
            solution = crt_solve(CongruenceSystem([(a, n), (b, m)]))
            expected = first.get((a, b))
            if solution is None:
                deviations[(a, b)] = 0 if expected is None else 1
            else:
                deviations[(a, b)] = 0 if (
                    solution.residue == expected
                    and solution.modulus == math.lcm(n, m)) else 1
    return _aggregate('crt-scan', (n, m), deviations, 0)


def build_crt(config):
    n_max = config.nmax or 30
    return [lambda n=n: [_crt_pair(n, m) for m in range(1, n_max + 1)]
            for n in range(1, n_max + 1)]


# completeness

def _completeness(n, dim):
    total = zero(dim)
    for j in range(n):
        total = op_add(total, projector(j, n, dim, NORMALIZED))
    results = [CheckResult.compare(
        'completeness', n, total.max_deviation(identity(dim)), 0)]
    if n <= 32:
        deviations = {}
        for i in range(n):
            for j in range(n):
                product = op_mul(projector(i, n, dim, NORMALIZED),
                                 projector(j, n, dim, NORMALIZED))
                expected = (projector(j, n, dim, NORMALIZED) if i == j
                            else zero(dim))
                deviations[(i, j)] = product.max_deviation(expected)
        results.append(_aggregate('orthogonality', n, deviations, 0))
    return results


def build_completeness(config):
    n_max = config.nmax or 64
    dim = resolve_dim(config, 512)
    return [lambda n=n: _completeness(n, dim) for n in range(1, n_max + 1)]


# rotated

def _rotated(n, dim, tolerance):
    s = rotated(n, dim)
    one = identity(dim)
    results = [
        CheckResult.compare(
            'rotated-period', n, op_power(s, n).max_deviation(one), tolerance),
        CheckResult.compare(
            'rotated-unitary', n,
            op_mul(s, op_adjoint(s)).max_deviation(one), tolerance),
    ]
    results.append(_aggregate('rotated-inversion', n, {
        j: projector_from_rotated(j, n, dim).max_deviation(
            projector(j, n, dim, NORMALIZED))
        for j in range(n)}, tolerance))
    return results


def build_rotated(config):
    n_max = config.nmax or 64
    dim = resolve_dim(config, 2 * n_max)
    tolerance = _tol(config, 1e-12)
    return [lambda n=n: _rotated(n, dim, tolerance)
            for n in range(1, n_max + 1)]


# progression

def build_progression(config):
    n_max = config.nmax or 12
    r_max = 4
    dim = resolve_dim(config, 2 * n_max * r_max)

    def task(n):
        return [progression_split(j, n, r, dim, start=start)
                for j in range(n) for r in range(1, r_max + 1)
                for start in (0, 1)]
    return [lambda n=n: task(n) for n in range(1, n_max + 1)]


# theorem1

def _theorem1_pair(n, m, dim):
    dim = dim or 4 * math.lcm(n, m)
    deviations = {}
    for k in range(n):
        for i in range(m):
            deviations[(k, i)] = theorem1_product(k, n, i, m, dim).deviation
    return _aggregate('theorem1', (n, m), deviations, 0)


def build_theorem1(config):
    n_max = config.nmax or 24
    if config.dim is not None:
        resolve_dim(config, max(4 * math.lcm(n, m)
                                for n in range(1, n_max + 1)
                                for m in range(1, n_max + 1)))
    return [lambda n=n: [_theorem1_pair(n, m, config.dim)
                         for m in range(1, n_max + 1)]
            for n in range(1, n_max + 1)]


# factorization

def build_factorization(config):
    n_max = config.nmax or 360

    def split(lo, hi):
        deviations = {}
        for n in range(lo, hi + 1):
            dim = 2 * n
            for j in range(n):
                deviations[(n, j)] = projector_prime_split(
                    j, n, dim).max_deviation(projector(j, n, dim, NORMALIZED))
        return [_aggregate('prime-split', (lo, hi), deviations, 0)]

    def divisor_law():
        results = []
        for m in range(1, 37):
            for n in [d for d in range(1, m + 1) if m % d == 0]:
                for j in range(n):
                    for k in range(m):
                        results.append(
                            check_divisor_product_law(j, n, k, m, 2 * m))
        return [_aggregate('divisor-product', (1, 36), {
            r.where: r.deviation for r in results}, 0)]

    tasks = [lambda lo=lo, hi=hi: split(lo, hi)
             for lo, hi in _blocks(1, n_max, 60)]
    tasks.append(divisor_law)
    return tasks


# bb2

def _bb2(n, j_values):
    deviations = {}
    for m in range(n, 25):
        if math.gcd(n, m) != 1:
            continue
        dim = 4 * n * m
        for j in j_values:
            product = op_mul(projector(j, n, dim, NORMALIZED),
                             projector(j, m, dim, NORMALIZED))
            deviations[(m, j)] = product.max_deviation(
                projector(j, n * m, dim, NORMALIZED))
    return deviations


def build_bb2(config):
    j_values = config.j or (0, 1, 2, 5)

    def task(n):
        deviations = _bb2(n, j_values)
        return [_aggregate('bb2', n, deviations, 0)] if deviations else []

    def literal():
        results = []
        for j in j_values:
            seq = projector_seq(j, 256, LITERAL)
            violations = check_extended_multiplicative(seq, 120)
            results.extend(violations or [CheckResult.compare(
                'extended-multiplicative', (j, 120), 0, 0)])
        return results

    return [lambda n=n: task(n) for n in range(1, 25)] + [literal]


# b identities

def build_b(config):
    n_max = config.nmax or 24
    j_values = config.j or (0, 1, 3)
    dim = resolve_dim(config, max(j_values) + 2 * n_max)
    pairs = [(NU0, NU0), (MU, NU0), (PHI, MU)]
    pairs += [(_random_int_fn(config.seed, 2 * i),
               _random_int_fn(config.seed, 2 * i + 1)) for i in range(3)]
    return [lambda a=a, b=b, j=j: verify_b_identities(a, b, j, n_max, dim)
            for a, b in pairs for j in j_values]


# associativity / commutativity

def build_associativity(config):
    n_max = config.nmax or 60
    dim = resolve_dim(config, 16)
    tolerance = _tol(config, 1e-10)
    a, b, c = (_random_diagonal_seq(config.seed, tag, dim) for tag in range(3))

    def shadow(kind):
        # Diagonal sequences reduce to scalar products entrywise
        f, g = _random_int_fn(config.seed, 10), _random_int_fn(config.seed, 11)
        fs, gs = identity_seq(f, dim), identity_seq(g, dim)
        deviations = {
            n: op_conv(kind, fs, gs, n)
            .max_deviation(FockOperator.diagonal(
                np.full(dim, kind.scalar(f, g, n), dtype=complex)))
            for n in range(1, 201)}
        return [_aggregate('scalar-shadow-' + kind.value, (1, 200),
                           deviations, 0)]

    tasks = []
    for kind in ConvKind:
        tasks.append(lambda kind=kind: check_associativity(
            kind, a, b, c, n_max, tolerance))
        tasks.append(lambda kind=kind: shadow(kind))
    return tasks


def build_commutativity(config):
    dim = resolve_dim(config, 3)
    return [lambda: [noncommutativity_witness(dim)]]


# prop1

def build_prop1(config):
    dim = resolve_dim(config, 256)
    j_values = config.j or (0, 1, 3)
    pairs = [(_random_int_fn(config.seed, 2 * i),
              _random_int_fn(config.seed, 2 * i + 1)) for i in range(10)]
    pairs.append((PHI, EPSILON))
    pairs.append((NU0, NU0))
    return [lambda a=a, b=b: [r for j in j_values
                              for r in proposition1_check(a, b, j, dim)]
            for a, b in pairs]


# number

def build_number(config):
    dim = resolve_dim(config, 1024)
    tolerance = _tol(config, 1e-12)

    def euler():
        number = number_op(PHI, 0, dim)
        expected = FockOperator.diagonal(np.arange(dim))
        return [
            CheckResult.compare(
                'number-operator', dim, number.max_deviation(expected), 0),
            CheckResult.compare(
                'number-operator-shifted', dim,
                number_op(PHI, 1, dim).max_deviation(
                    shift_conjugate(number, 1)), 0),
            CheckResult.skipped(
                'number-operator-reversed', dim,
                'N_{phi,1} is E_+ N E_-, with eigenvalue m - 1 on |m> for '
                'm >= 1; the reversed ladder product would be N + 1'),
        ]

    def zeta(s):
        diagonal = number_op(power_fn(s), 0, 1001).diag()
        deviations = {
            m: abs(diagonal[m] - sigma(s, m) / m ** s) / (sigma(s, m) / m ** s)
            for m in range(1, 1001)}
        return [_aggregate('zeta-eigenvalues', s, deviations, tolerance),
                zeta_norm_check(s + 1, 256)]

    def series(alpha, j):
        return [CheckResult.compare(
            'number-series', (alpha.name, j),
            number_op(alpha, j, 256).max_deviation(
                number_op_series(alpha, j, 256)), 0)]

    tasks = [euler, lambda: zeta(1), lambda: zeta(2)]
    tasks += [lambda alpha=alpha, j=j: series(alpha, j)
              for alpha in (PHI, NU0, MU) for j in (0, 1, 2)]
    return tasks


# ramanujan

def build_ramanujan(config):
    moduli = config.n or (1,) + RAMANUJAN_MODULI
    j_values = config.j or (0, 1, 2)
    dim = resolve_dim(config, 48)
    tolerance = _tol(config, 1e-10)

    def task(n):
        results = []
        for j in j_values:
            results.extend(check_ramanujan_operators(
                n, j, dim, config.k_range, tolerance))
        results.append(CheckResult.compare(
            'ramanujan-sum', n, ramanujan_c(0, n, dim).max_deviation(
                FockOperator.diagonal(ramanujan_sum_diagonal(n, dim))),
            tolerance))
        return results
    return [lambda n=n: task(n) for n in moduli]


# ref

def build_ref(config):
    moduli = config.n or RAMANUJAN_MODULI
    j_values = config.j or (0, 1)
    points = config.lambdas or (DEFAULT_LAMBDA,)
    tolerance = _tol(config, 1e-10)
    return [lambda n=n: [r for j in j_values for point in points
                         for r in check_ref_identities(
                             n, j, point, config.k_range, tolerance)]
            for n in moduli]


# berezin

def _berezin_projectors(n, points, dim, tolerance):
    results = []
    for point in points:
        deviations = {}
        for j in range(n):
            estimate = berezin(projector(j, n, dim, NORMALIZED), point)
            deviations[j] = max(
                0.0, abs(estimate.value - berezin_pi_closed(j, n, point))
                - estimate.error)
        results.append(_aggregate(
            'berezin-projector', (n, point), deviations, tolerance))
    return results


def _berezin_ramanujan(n, points, dim, tolerance):
    results = []
    for point in points:
        results.append(two_route_check(
            ramanujan_c(0, n, dim), berezin_c_closed(0, n, point), point,
            tolerance, name='berezin-c'))
        results.append(two_route_check(
            ramanujan_t(0, n, dim, RESIDUE_RANGE),
            berezin_t_closed(0, n, point), point, tolerance,
            name='berezin-t'))
    return results


def _berezin_general(points, dim, tolerance):
    results = []
    one = identity(dim)
    zeta_op = number_op(power_fn(2), 0, dim)
    number = number_op(PHI, 0, dim)
    for point in points:
        value = berezin(one, point).value
        results.append(CheckResult.compare(
            'berezin-normalization', point, abs(value - 1), 1e-14))
        results.append(CheckResult.compare(
            'berezin-bounded', point,
            max(0.0, abs(berezin(zeta_op, point).value)
                - zeta_op.norm_bound()), 0))
        closed = berezin_zeta(2, point)
        results.append(two_route_check(
            zeta_op, closed.value, point, tolerance + closed.error,
            name='berezin-zeta'))
        results.append(two_route_check(
            number, berezin_number_closed(PHI, 0, point, dim), point,
            tolerance, name='berezin-number'))
        results.append(CheckResult.compare(
            'berezin-phase-shift', point,
            abs(berezin(phase_up(dim), point).value - as_point(point).value),
            1e-12 + as_point(point).modulus ** (2 * dim - 2)))
    return results


def build_berezin(config):
    n_max = config.nmax or 20
    dim = resolve_dim(config, 500)
    tolerance = _tol(config, 1e-10)
    points = config.lambdas or BEREZIN_POINTS
    tasks = [lambda n=n: _berezin_projectors(n, points, dim, tolerance)
             for n in range(1, n_max + 1)]
    tasks += [lambda n=n: _berezin_ramanujan(n, points, dim, tolerance)
              for n in (1,) + RAMANUJAN_MODULI]
    tasks.append(lambda: _berezin_general(points, dim, tolerance))
    return tasks


# radial

def _schedules(config):
    radii = config.radii or DEFAULT_RADII
    phases = (config.phase,) if config.phase is not None else (
        0.0, math.pi / 3)
    return [RadialSchedule.along(radii, phase) for phase in phases]


def _radial_dim(config, schedules):
    r_max = max(max(s.radii) for s in schedules)
    return resolve_dim(config, minimal_dimension(r_max, 1e-12, 1.0))


def _radial_check(identity_name, where, operator, schedule, target,
                  tolerance):
    trend = radial_limit(
        lambda point: berezin(operator, point), schedule, target=target)
    final = trend.defects[-1] if trend.settled else math.nan
    monotone = trend.converging
    return CheckResult.compare(
        identity_name, where + (round(schedule.phase, 12),), final, tolerance,
        note=None if monotone else 'defect is not monotone along the schedule',
        detail={'defects': trend.defects,
                'extrapolated': trend.extrapolated})


def build_radial(config):
    schedules = _schedules(config)
    dim = _radial_dim(config, schedules)
    n_max = config.nmax or 10

    def projectors(n, schedule):
        tolerance = _tol(config, 0.01)
        return [_radial_check(
            'radial-projector', (n, j), projector(j, n, dim, LITERAL),
            schedule, 1.0 / n, tolerance)
            for j in range(n)]

    def ramanujan(n, schedule):
        tolerance = _tol(config, 0.02)
        return [
            _radial_check('radial-c', (n,), ramanujan_c(0, n, dim), schedule,
                          float(n == 1), tolerance),
            _radial_check('radial-t', (n,),
                          ramanujan_t(0, n, dim, RESIDUE_RANGE), schedule,
                          euler_phi(n) / n, tolerance),
        ]

    def zeta(schedule):
        tolerance = _tol(config, 0.02)
        trend = radial_limit(lambda point: berezin_zeta(2, point), schedule,
                             target=zeta_value(3))
        return [CheckResult.compare(
            'radial-zeta', (2, round(schedule.phase, 12)),
            trend.defects[-1] if trend.converging else math.nan, tolerance,
            detail={'defects': trend.defects})]

    tasks = []
    for schedule in schedules:
        tasks += [lambda n=n, s=schedule: projectors(n, s)
                  for n in range(1, n_max + 1)]
        tasks += [lambda n=n, s=schedule: ramanujan(n, s)
                  for n in RAMANUJAN_MODULI]
        tasks.append(lambda s=schedule: zeta(s))
    return tasks


# asymptotic

def build_asymptotic(config):
    schedule = _schedules(config)[0]
    dim = _radial_dim(config, [schedule])
    tolerance = _tol(config, 0.02)
    pairs = [(2, 3), (3, 4), (2, 5)]

    def projectors(j):
        seq = projector_seq(j, dim, LITERAL)
        return check_asymptotic_multiplicative(seq, pairs, schedule, tolerance)

    def exact_defect():
        point = 0.9
        operators = {n: projector(0, n, 500, NORMALIZED) for n in (2, 3, 6)}
        numeric = abs(berezin(operators[6], point).value
                      - berezin(operators[2], point).value
                      * berezin(operators[3], point).value)
        closed = abs(berezin_pi_closed(0, 6, point)
                     - berezin_pi_closed(0, 2, point)
                     * berezin_pi_closed(0, 3, point))
        return [CheckResult.compare(
            'asymptotic-defect-closed', (2, 3, point),
            abs(numeric - closed), 1e-10)]

    return [lambda: projectors(0), lambda: projectors(1), exact_defect]


# lambert

def _direct_zeta(s, terms=10 ** 6):
    k = np.arange(1, terms + 1, dtype=float)
    return float(np.sum(k ** -s))


def build_lambert(config):
    tolerance = _tol(config, 0.01)
    radii = config.radii or (0.99, 0.999, math.sqrt(0.9999))

    def convergence():
        oracle = _direct_zeta(3)
        schedule = RadialSchedule(radii)
        trend = radial_limit(lambda point: berezin_zeta(2, point), schedule,
                             target=oracle)
        increasing = all(b.real >= a.real
                         for a, b in zip(trend.values, trend.values[1:]))
        return [
            CheckResult.compare(
                'lambert-zeta', (2, radii[-1]), trend.defects[-1], tolerance,
                detail={'values': [v.real for v in trend.values],
                        'oracle': oracle}),
            CheckResult.compare(
                'lambert-increasing', 2, 0.0 if increasing else math.nan, 0),
        ]

    def bound():
        limit = zeta_value(2).real
        deviations = {r: max(0.0, berezin_zeta(2, r).value.real - limit)
                      for r in radii}
        return [_aggregate('zeta-symbol-bound', 2, deviations, 0)]

    return [convergence, bound]


# zeta-series

def build_zeta_series(config):
    dim = resolve_dim(config, 256)
    tolerance = _tol(config, 1e-6)
    exponents = config.s or (2, 3)
    for s in exponents:
        check_half_plane(s)
    point = (config.lambdas or (0.5,))[0]
    return [lambda s=s: zeta_weighted_series_check(s, point, dim, tolerance)
            for s in exponents]


# truncation

def build_truncation(config):
    dim = resolve_dim(config, 400)

    def shifts():
        up, down = phase_up(dim), phase_down(dim)
        top = basis_projector(dim - 1, dim)
        bottom = basis_projector(0, dim)
        one = identity(dim)
        vector = np.random.default_rng([config.seed, 99]).standard_normal(dim)
        return [
            CheckResult.compare(
                'down-up', dim,
                op_mul(down, up).max_deviation(op_sub(one, top)), 0),
            CheckResult.compare(
                'up-down', dim,
                op_mul(up, down).max_deviation(op_sub(one, bottom)), 0),
            CheckResult.compare(
                'shift-adjoint', dim,
                op_adjoint(up).max_deviation(down), 0),
        ] + check_shift_representation(vector[:32], 0.4 + 0.3j)

    def overlaps():
        grid = [cmath.rect(r, phase) for r in (0.0, 0.3, 0.8)
                for phase in (0.0, 2.0, 4.0)]
        deviations = {}
        for z in grid:
            for w in grid:
                estimate = overlap(z, w, dim)
                deviations[(z, w)] = max(
                    0.0, abs(estimate.value - overlap_closed(z, w))
                    - estimate.error)
        norms = {z: abs(kernel_state(z, dim).norm_squared
                        - (1 - kernel_state(z, dim).tail_bound))
                 for z in grid}
        return [_aggregate('overlap-closed', dim, deviations, 0),
                _aggregate('kernel-norm', dim, norms, 1e-12)]

    return [shifts, overlaps]


SUITES = [
    Suite('scalar', 'Scalar convolution identities and M_s counts',
          build_scalar),
    Suite('crt', 'CRT solver against exhaustive scans', build_crt),
    Suite('completeness', 'Projector completeness and orthogonality',
          build_completeness),
    Suite('rotated', 'Rotated operators: period, unitarity, inversion',
          build_rotated),
    Suite('progression', 'Splitting projectors along progressions',
          build_progression),
    Suite('theorem1', 'Products of projectors against CRT predictions',
          build_theorem1),
    Suite('factorization', 'Prime-power splitting of projectors',
          build_factorization),
    Suite('bb2', 'Multiplicativity of projector sequences', build_bb2),
    Suite('b', 'lcm, unitary and Dirichlet laws of weighted projectors',
          build_b),
    Suite('associativity', 'Associativity of operator convolutions',
          build_associativity),
    Suite('commutativity', 'A non-commuting Dirichlet product',
          build_commutativity),
    Suite('prop1', 'Product laws of truncated number operators',
          build_prop1),
    Suite('number', 'Number and zeta operator diagonals', build_number),
    Suite('ramanujan', 'Ramanujan-type operators', build_ramanujan),
    Suite('ref', 'Symbol identities of Ramanujan-type operators', build_ref),
    Suite('berezin', 'Numeric against closed-form Berezin symbols',
          build_berezin),
    Suite('radial', 'Radial limits of Berezin symbols', build_radial),
    Suite('asymptotic', 'Asymptotic multiplicativity of symbols',
          build_asymptotic),
    Suite('lambert', 'Lambert convergence of the zeta symbol',
          build_lambert),
    Suite('zeta-series', 'Zeta-weighted series of Ramanujan operators',
          build_zeta_series),
    Suite('truncation', 'Truncation contracts of shifts and phase states',
          build_truncation),
]

SUITES_BY_NAME = {suite.name: suite for suite in SUITES}
SUITE_NAMES = [suite.name for suite in SUITES] + ['all']


def _check_parameters(config):
    """
    Reject moduli and offsets that no suite accepts before any task runs.
    """
    for n in config.n or ():
        check_positive(n, 'n')
    for j in config.j or ():
        check_non_negative(j, 'j')


def build_tasks(name, config):
    """
    The tasks of the named suite, or of every suite for ``all``.
    """
    if name == 'all':
        suites = SUITES
    else:
        try:
            suites = [SUITES_BY_NAME[name]]
        except KeyError:
            raise ValueError('Unknown suite %r' % (name,))

    _check_parameters(config)
    tasks = []
    for suite in suites:
        suite_tasks = suite.build(config)
        log.debug('Suite {suite} has {count} tasks', suite=suite.name,
                  count=len(suite_tasks))
        tasks.extend(suite_tasks)
    return tasks
