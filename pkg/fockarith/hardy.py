"""
The Hardy-space picture of the truncated Fock space: phase (kernel) states
on the unit disc, Berezin symbols of operators, their closed forms and the
radial limits that recover classical arithmetic quantities.
"""
import cmath
import math
from collections import namedtuple

import mpmath

import numpy as np

from twisted.logger import Logger

from fockarith.arith import (
    check_non_negative, check_positive, divisors, mobius, mobius_sieve,
    power_fn, totient_sieve)
from fockarith.operators import (
    DIVISOR_RANGE, RESIDUE_RANGE, coprime_residues, number_op, op_apply,
    phase_down, phase_up, ramanujan_c_domain, ramanujan_t_domain,
    roots_of_unity)
from fockarith.report import SKIP, CheckResult


log = Logger()

# Points must keep at least this distance from the unit circle
EDGE = 1e-12

_EPS = np.finfo(float).eps

Estimate = namedtuple('Estimate', ['value', 'error'])


class TruncationError(ValueError):
    """
    The truncation is too small for a kernel state at the requested point.

    :ivar int minimal_dim: The smallest dimension that would do.
    """

    def __init__(self, message, minimal_dim):
        super(TruncationError, self).__init__(message)
        self.minimal_dim = minimal_dim


class DiscPoint(object):
    """ A point of the open unit disc, at least ``EDGE`` inside the circle. """

    def __init__(self, value):
        value = complex(value)
        if not abs(value) <= 1 - EDGE:
            raise ValueError(
                '%r is not strictly inside the unit disc (|lambda| must be '
                '<= 1 - %g)' % (value, EDGE))
        self.value = value

    @classmethod
    def polar(cls, radius, phase):
        return cls(cmath.rect(radius, phase))

    @property
    def modulus(self):
        return abs(self.value)

    @property
    def phase(self):
        return cmath.phase(self.value)

    def conjugate(self):
        return DiscPoint(self.value.conjugate())

    def __eq__(self, other):
        return isinstance(other, DiscPoint) and self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return 'DiscPoint(%r)' % (self.value,)


def as_point(point):
    if isinstance(point, DiscPoint):
        return point
    return DiscPoint(point)


def _q(point):
    return as_point(point).modulus ** 2


def _one_minus_power(q, n):
    """ ``1 - q**n`` without cancellation near ``q = 1``. """
    if q == 0:
        return 1.0
    return -math.expm1(n * math.log(q))


def minimal_dimension(point, tolerance, max_diagonal=0.0):
    """
    The smallest ``D`` with
    ``|lambda|**(2D) <= tolerance / (1 + max_diagonal)``.
    """
    if tolerance <= 0:
        raise ValueError('tolerance must be > 0, got %r' % (tolerance,))
    r = as_point(point).modulus
    target = tolerance / (1.0 + max_diagonal)
    if r == 0 or target >= 1:
        return 1
    dim = max(1, int(math.ceil(math.log(target) / (2 * math.log(r)))))
    while r ** (2 * dim) > target:
        dim += 1
    return dim


class KernelState(object):
    """
    The phase state ``sqrt(1 - |lambda|^2) sum_m lambda^m |m>`` truncated to
    ``dim`` coefficients. ``tail_bound`` is the exact missing mass
    ``|lambda|^(2 dim)``.
    """

    def __init__(self, point, dim, coeffs, tail_bound):
        self.point = point
        self.dim = dim
        self.coeffs = coeffs
        self.tail_bound = tail_bound

    @property
    def norm_squared(self):
        return float(np.sum(np.abs(self.coeffs) ** 2))

    def __repr__(self):
        return '<KernelState at %r dim=%d tail=%g>' % (
            self.point.value, self.dim, self.tail_bound)


def kernel_state(point, dim, tolerance=None):
    """
    :param tolerance:
        If given, raise :class:`TruncationError` when the tail mass exceeds
        it.
    """
    point = as_point(point)
    dim = check_positive(dim, 'dimension')
    r = point.modulus
    tail = r ** (2 * dim)
    if tolerance is not None and tail > tolerance:
        minimal = minimal_dimension(point, tolerance)
        raise TruncationError(
            'dimension %d leaves tail mass %g at |lambda|=%r, above %g; '
            'need at least %d' % (dim, tail, r, tolerance, minimal), minimal)

    powers = np.ones(dim, dtype=complex)
    if dim > 1:
        powers[1:] = np.cumprod(np.full(dim - 1, point.value, dtype=complex))
    coeffs = math.sqrt(1 - r * r) * powers
    coeffs.flags.writeable = False
    return KernelState(point, dim, coeffs, tail)


def overlap_closed(z, w):
    z, w = as_point(z).value, as_point(w).value
    return (math.sqrt(1 - abs(z) ** 2) * math.sqrt(1 - abs(w) ** 2)
            / (1 - z.conjugate() * w))


def overlap(z, w, dim):
    """
    The truncated inner product of two phase states.

    :return: an :class:`Estimate` whose error bounds the distance to the
        untruncated overlap, floating-point summation included.
    """
    zs = kernel_state(z, dim)
    ws = kernel_state(w, dim)
    value = complex(np.vdot(zs.coeffs, ws.coeffs))
    x = abs(zs.point.value.conjugate() * ws.point.value)
    prefactor = (math.sqrt(1 - zs.point.modulus ** 2)
                 * math.sqrt(1 - ws.point.modulus ** 2))
    error = prefactor * (x ** dim + dim * _EPS) / (1 - x)
    return Estimate(value, error)


def hardy_function(vector, z):
    """
    Evaluate the analytic function ``sum_m f_m z^m`` that a state vector
    represents in the Hardy space.
    """
    return complex(np.polynomial.polynomial.polyval(
        complex(z), np.asarray(vector, dtype=complex)))


def check_shift_representation(vector, z, tolerance=1e-12):
    """
    Check that ``E_+`` acts as multiplication by ``z`` and ``E_-`` as the
    backward shift ``(f(z) - f(0)) / z``. ``E_+`` drops the top coefficient,
    which is allowed for.
    """
    vector = np.asarray(vector, dtype=complex)
    shift_up, shift_down = phase_up(len(vector)), phase_down(len(vector))
    z = as_point(z).value
    f = hardy_function(vector, z)
    dropped = abs(vector[-1]) * abs(z) ** len(vector)
    results = [CheckResult.compare(
        'hardy-multiplication', z,
        abs(hardy_function(op_apply(shift_up, vector), z) - z * f),
        tolerance + dropped)]
    if z != 0:
        backward = (f - vector[0]) / z
        results.append(CheckResult.compare(
            'hardy-backward-shift', z,
            abs(hardy_function(op_apply(shift_down, vector), z) - backward),
            tolerance))
    return results


def berezin(operator, point):
    """
    The Berezin symbol ``<A k, k> / <k, k>`` against the truncated
    reproducing kernel at ``lambda``, which is the phase state at
    ``conj(lambda)``.

    :return: an :class:`Estimate`; the error estimates the effect of the
        truncation.
    """
    point = as_point(point)
    kernel = kernel_state(point.conjugate(), operator.dim)
    weights = np.abs(kernel.coeffs) ** 2
    total = np.sum(weights)
    if operator.is_diagonal:
        d = operator.diag()
        value = complex(np.sum(weights * d.real),
                        np.sum(weights * d.imag)) / total
    else:
        k = kernel.coeffs
        value = complex(np.vdot(k, op_apply(operator, k))) / total
    bound = operator.norm_bound()
    tail = kernel.tail_bound
    error = bound * (tail / (1 - tail) + operator.dim * _EPS)
    return Estimate(value, error)


def berezin_pi_closed(j, n, point):
    """ The symbol of the literal projector ``Pi_j(n)`` on the whole space. """
    j = check_non_negative(j)
    n = check_positive(n)
    q = _q(point)
    return _one_minus_power(q, 1) * q ** j / _one_minus_power(q, n)


def berezin_c_closed(j, n, point):
    """
    The symbol of ``(mu * nu_1 Pi_j)(n)``:
    ``sum_{d|n} mu(d) (n/d) (1 - q) q^j / (1 - q^(n/d))``, ``q = |lambda|^2``.
    """
    return sum(mobius(d) * (n // d) * berezin_pi_closed(j, n // d, point)
               for d in divisors(n))


def berezin_t_closed(j, n, point):
    """ The symbol of ``(nu_0 * mu Pi_j)(n)``. """
    return sum(mobius(d) * berezin_pi_closed(j, d, point)
               for d in divisors(n))


def berezin_dirichlet_closed(alpha, beta, j, n, point):
    """ The symbol of ``(alpha I * beta Pi_j)(n)``. """
    return sum(alpha(n // d) * beta(d) * berezin_pi_closed(j, d, point)
               for d in divisors(n))


def berezin_number_closed(alpha, j, point, terms):
    """
    The symbol of ``N_{alpha,j}`` on the whole space, from the series
    ``sum_k alpha(k) (1 - q) q^(j+k) / (1 - q^k)`` cut off after ``terms``.
    """
    q = _q(point)
    if q == 0:
        return 0j
    return complex(sum(
        alpha(k) * berezin_pi_closed(j + k, k, point)
        for k in range(1, check_positive(terms, 'terms') + 1)))


def _zeta_tail_bound(sigma, q, last):
    """
    Bound the terms after ``last`` of the zeta symbol series: each is at
    most ``min(k^(-sigma-1), k^(-sigma) q^k)``.
    """
    power = last ** -sigma
    geometric = q ** (last + 1) / (1 - q) if q < 1 else math.inf
    return power * min(1.0 / sigma, geometric)


def check_half_plane(s):
    s = complex(s)
    if not s.real > 1:
        raise ValueError(
            'the zeta operator is bounded only for Re(s) > 1, got s=%r' % (s,))
    return s


def berezin_zeta(s, point, cutoff=1e-15, max_terms=10 ** 7, chunk=1 << 16):
    """
    The symbol of the generalized zeta operator ``N_{n^-s,0}``:
    ``sum_n n^-s (1 - q) q^n / (1 - q^n)``, a Lambert-type series.

    :return: an :class:`Estimate` whose error is the bound on the unsummed
        tail.
    """
    s = check_half_plane(s)
    sigma = s.real
    q = _q(point)
    if q == 0:
        return Estimate(0j, 0.0)

    log_q = math.log(q)
    one_minus_q = -math.expm1(log_q)
    total = 0j
    start = 1
    while True:
        k = np.arange(start, start + chunk, dtype=float)
        terms = np.power(k, -s) * one_minus_q * np.exp(k * log_q) / (
            -np.expm1(k * log_q))
        total += complex(np.sum(terms))
        last = start + chunk - 1
        tail = _zeta_tail_bound(sigma, q, last)
        if tail <= cutoff or last >= max_terms:
            break
        start += chunk
    if tail > cutoff:
        log.warn('Zeta symbol series at s={s} stopped after {terms} terms '
                 'with tail bound {tail}', s=s, terms=last, tail=tail)
    return Estimate(total, tail)


def zeta_value(s):
    return complex(mpmath.zeta(s))


def zeta_norm_check(s, dim):
    """
    The largest diagonal entry of ``N_{n^-s,0}``, ``sigma_{-s}(m)`` in
    modulus, never exceeds ``zeta(Re s)``.
    """
    s = check_half_plane(s)
    norm = number_op(power_fn(s), 0, dim).norm_bound()
    bound = zeta_value(s.real).real
    return CheckResult.compare(
        'zeta-norm-bound', (s.real, s.imag, dim), max(0.0, norm - bound), 0.0,
        detail={'norm': norm, 'bound': bound})


class RadialSchedule(object):
    """
    Radii increasing strictly inside ``(0, 1)``, approached along the ray
    with the unit-modulus ``direction``.
    """

    def __init__(self, radii, direction=1.0):
        radii = tuple(float(r) for r in radii)
        if not radii:
            raise ValueError('radial schedule is empty')
        for r in radii:
            if not 0 < r <= 1 - EDGE:
                raise ValueError('radius %r is not in (0, 1)' % (r,))
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise ValueError('radii must be strictly increasing, got %r' % (
                list(radii),))
        direction = complex(direction)
        if abs(abs(direction) - 1) > 1e-12:
            raise ValueError('direction must have modulus 1, got %r' % (
                direction,))
        self.radii = radii
        self.direction = direction

    @classmethod
    def along(cls, radii, phase=0.0):
        return cls(radii, cmath.exp(1j * phase))

    @property
    def phase(self):
        return cmath.phase(self.direction)

    def points(self):
        return [DiscPoint(r * self.direction) for r in self.radii]

    def __repr__(self):
        return 'RadialSchedule(%r, phase=%r)' % (list(self.radii), self.phase)


def _monotone(values):
    steps = np.diff(np.asarray(values, dtype=float))
    return bool(np.all(steps >= 0) or np.all(steps <= 0))


def _settled(signed, defects, errors):
    start = 0
    for i in range(1, len(signed)):
        if signed[i - 1] * signed[i] < 0:
            start = i
    slack = 1e-12 + (max(errors) if errors else 0.0)
    tail = defects[start:]
    return all(b <= a + slack for a, b in zip(tail, tail[1:]))


class RadialTrend(object):
    """
    The values of a disc function along a radial schedule.

    ``estimate`` is the value at the largest radius. ``extrapolated`` is an
    advisory linear-in-``(1 - r)`` extrapolation of the last two points and
    is never used as the estimate.

    With a target, ``converging`` says the defect never grows along the
    schedule and ``settled`` says it never grows once the real part has
    stopped crossing the target. A symbol may cross its limit once at small
    radii; past the last crossing the defect must shrink up to the
    evaluation errors.
    """

    def __init__(self, schedule, values, errors, target=None):
        self.schedule = schedule
        self.values = [complex(v) for v in values]
        self.errors = [float(e) for e in errors]
        self.target = target
        self.monotone = (_monotone([v.real for v in self.values])
                         and _monotone([v.imag for v in self.values]))
        if target is None:
            self.defects = None
            self.converging = None
            self.settled = None
        else:
            self.defects = [abs(v - target) for v in self.values]
            self.converging = all(
                b <= a for a, b in zip(self.defects, self.defects[1:]))
            self.settled = _settled(
                [v.real - complex(target).real for v in self.values],
                self.defects, self.errors)

    @property
    def estimate(self):
        return self.values[-1]

    @property
    def error(self):
        return self.errors[-1]

    @property
    def extrapolated(self):
        if len(self.values) < 2:
            return None
        r1, r2 = self.schedule.radii[-2:]
        v1, v2 = self.values[-2:]
        return (v2 * (1 - r1) - v1 * (1 - r2)) / (r2 - r1)

    def rows(self):
        """ ``(radius, phase, value, error)`` rows for CSV output. """
        return schedule_csv_rows(self)


def schedule_csv_rows(trend):
    """
    The ``(radius, direction-phase, value, error-bound)`` rows of a radial
    trend, in schedule order.
    """
    phase = trend.schedule.phase
    return [(r, phase, v, e) for r, v, e in zip(
        trend.schedule.radii, trend.values, trend.errors)]


def radial_limit(f, schedule, target=None):
    """
    Evaluate ``f`` along ``schedule``. ``f`` may return a plain number or an
    :class:`Estimate`.
    """
    values, errors = [], []
    for point in schedule.points():
        result = f(point)
        if isinstance(result, Estimate):
            values.append(result.value)
            errors.append(result.error)
        else:
            values.append(result)
            errors.append(0.0)
    trend = RadialTrend(schedule, values, errors, target=target)
    if not trend.monotone:
        log.warn('Radial trend along {schedule!r} is not monotone: {values}',
                 schedule=schedule, values=trend.values)
    elif trend.converging is False:
        log.warn('Radial trend along {schedule!r} does not approach '
                 '{target} monotonically', schedule=schedule, target=target)
    return trend


def check_asymptotic_multiplicative(phi, pairs, schedule, tolerance=0.02):
    """
    Check that ``|B(phi(nm)) - B(phi(n)) B(phi(m))|`` decreases along the
    schedule and ends below ``tolerance`` for each coprime pair.
    """
    results = []
    for n, m in pairs:
        if math.gcd(n, m) != 1:
            raise ValueError('pair (%d, %d) is not coprime' % (n, m))

        def defect(point):
            return abs(berezin(phi(n * m), point).value
                       - berezin(phi(n), point).value
                       * berezin(phi(m), point).value)

        trend = radial_limit(defect, schedule, target=0.0)
        final = trend.defects[-1]
        results.append(CheckResult.compare(
            'asymptotic-multiplicative', (n, m),
            final if trend.converging else math.nan, tolerance,
            note=None if trend.converging else 'defect is not decreasing',
            detail={'defects': trend.defects}))
    return results


def check_ref_identities(n, j, point, k_range=DIVISOR_RANGE, tolerance=1e-10):
    """
    Compare the symbol identities for the Ramanujan-type operators:

      * ``ref1``: ``sum_{d|n} mu(d) (n/d) q^j / (1 - q^(n/d))`` against
        ``sum_k eps^(-kj) / (1 - eps^k q)``;
      * ``ref2``: ``sum_{d|n} mu(d) q^j / (1 - q^d)`` against
        ``sum_k eps^(kj) q^(k+j) / (1 - q^n)``,

    with ``q = |lambda|^2``, ``eps = exp(2 pi i / n)`` and ``k`` over the
    units mod ``n`` in ``k_range``. Each holds only on part of ``(n, j)``
    and is skipped elsewhere; their shifted forms hold everywhere and use
    the residue range.
    """
    n = check_positive(n)
    j = check_non_negative(j)
    q = _q(point)
    roots = roots_of_unity(n)
    ks = coprime_residues(n, k_range)
    units = coprime_residues(n, RESIDUE_RANGE)
    divs = divisors(n)

    ref1_lhs = sum(mobius(d) * (n // d) * q ** j / _one_minus_power(q, n // d)
                   for d in divs)
    ref2_lhs = sum(mobius(d) * q ** j / _one_minus_power(q, d) for d in divs)
    ref1_rhs = sum(roots[(-k * j) % n] / (1 - roots[k % n] * q) for k in ks)
    ref2_rhs = sum(roots[(k * j) % n] * q ** (k + j) for k in ks) / (
        _one_minus_power(q, n))
    ref1_shifted = q ** j * sum(1 / (1 - roots[k % n] * q) for k in units)
    ref2_shifted = sum(q ** (k + j) for k in units) / _one_minus_power(q, n)

    where = (n, j, as_point(point).value)
    results = []
    if ramanujan_c_domain(n, j):
        results.append(CheckResult.compare(
            'ref1', where, abs(ref1_lhs - ref1_rhs), tolerance))
    else:
        results.append(CheckResult.skipped(
            'ref1', where,
            'holds only when the Ramanujan sums c_n(1..j) vanish'))
    results.append(CheckResult.compare(
        'ref1-shifted', where, abs(ref1_lhs - ref1_shifted), tolerance))

    if ramanujan_t_domain(n, j, k_range):
        results.append(CheckResult.compare(
            'ref2', where, abs(ref2_lhs - ref2_rhs), tolerance))
    else:
        results.append(CheckResult.skipped(
            'ref2', where,
            'holds only when n divides j; n = 1 needs k over residues 0..n-1 '
            '(k range is %r)' % (k_range,)))
    results.append(CheckResult.compare(
        'ref2-shifted', where, abs(ref2_lhs - ref2_shifted), tolerance))
    for result in results:
        if result.status == SKIP:
            log.debug('Skipped {identity} at {where}: {note}',
                      identity=result.identity, where=result.where,
                      note=result.note)
    return results


class ZetaSeries(object):
    """
    Truncated operator sums ``sum_{n<=K} n^-s T_0(n)`` and
    ``sum_{n<=K} n^-(s+1) C_0(n)`` on the diagonal, next to their
    zeta-weighted counterparts.

    The sums are regrouped over the divisors of each index ``m``, which is
    exact for finite ``K``: ``T_0(n)`` is the indicator of ``gcd(m, n) = 1``
    and ``C_0(n)`` carries the Ramanujan sum ``c_n(m)``.
    """

    def __init__(self, s, dim, terms):
        self.s = s
        self.dim = dim
        self.terms = terms
        w = s + 1
        sigma = s.real

        k = np.arange(1, terms + 1, dtype=float)
        mu = mobius_sieve(terms)[1:]
        harmonic = np.concatenate([[0], np.cumsum(np.power(k, -s))])
        mertens = np.concatenate([[0], np.cumsum(mu * np.power(k, -w))])
        phi = totient_sieve(terms)[1:]

        self.t_sum = np.zeros(dim, dtype=complex)
        self.c_sum = np.zeros(dim, dtype=complex)
        # T_0(1) = Pi_1(1) vanishes on |0>; T_0(n >= 2) does too
        self.c_sum[0] = np.sum(phi * np.power(k, -w))
        for m in range(1, dim):
            for d in divisors(m):
                self.t_sum[m] += mobius(d) * d ** -s * harmonic[terms // d]
                self.c_sum[m] += d ** (1 - w) * mertens[terms // d]

        zeta_s = zeta_value(s)
        zeta_w = zeta_value(w)
        self.t_mobius = np.zeros(dim, dtype=complex)
        self.t_printed = np.zeros(dim, dtype=complex)
        self.c_expected = np.zeros(dim, dtype=complex)
        self.c_expected[0] = zeta_s / zeta_w
        for m in range(1, dim):
            divs = divisors(m)
            self.t_mobius[m] = zeta_s * sum(mobius(d) * d ** -s for d in divs)
            self.t_printed[m] = zeta_s * sum(d ** -s for d in divs)
            self.c_expected[m] = sum(d ** -s for d in divs) / zeta_w

        # |c_n(m)| <= gcd(n, m) <= m for m >= 1, phi(n) <= n at m = 0
        self.t_tail = terms ** (1 - sigma) / (sigma - 1)
        self.c_tail = (dim - 1) * terms ** -sigma / sigma
        self.c_vacuum_tail = terms ** (1 - sigma) / (sigma - 1)


def series_terms(s, dim, tolerance, max_terms=10 ** 7):
    """
    The smallest cutoff ``K`` at which the tail bounds of both zeta-weighted
    series are below half of ``tolerance``, capped at ``max_terms``.
    """
    sigma = check_half_plane(s).real
    target = tolerance / 2
    t_terms = (target * (sigma - 1)) ** (1 / (1 - sigma))
    c_terms = ((dim - 1) / (sigma * target)) ** (1 / sigma)
    terms = int(math.ceil(max(t_terms, c_terms, 1)))
    if terms > max_terms:
        log.warn('Zeta-weighted series at s={s} needs {terms} terms, capped '
                 'at {cap}', s=s, terms=terms, cap=max_terms)
        terms = max_terms
    return terms


def zeta_weighted_series_check(s, point, dim, tolerance=1e-6,
                               max_terms=10 ** 7):
    """
    Compare ``sum n^-s T_0(n)`` with ``zeta(s) N_{mu n^-s,0}`` and
    ``sum n^-(s+1) C_0(n)`` with ``N_{n^-s,0} / zeta(s+1)`` on the
    diagonal and through their Berezin symbols at ``point``.

    ``zeta(s) N_{n^-s,0}`` agrees with the ``T_0`` series on ``|0>`` and
    ``|1>`` only and is reported there, skipped elsewhere. The ``C_0``
    series is ``zeta(s) / zeta(s+1)`` on ``|0>``.
    """
    s = check_half_plane(s)
    terms = series_terms(s, dim, tolerance, max_terms)
    series = ZetaSeries(s, dim, terms)
    where = (s.real, s.imag, dim)
    detail = {'terms': terms}

    kernel = kernel_state(as_point(point).conjugate(), dim)
    weights = np.abs(kernel.coeffs) ** 2
    weights /= np.sum(weights)

    def symbol_deviation(a, b):
        return abs(complex(np.sum(weights * (a - b))))

    results = [
        CheckResult.compare(
            'zeta-t-series', where,
            np.max(np.abs(series.t_sum - series.t_mobius)),
            tolerance + series.t_tail, detail=detail),
        CheckResult.compare(
            'zeta-t-printed', where + ((0, 1),),
            np.max(np.abs(series.t_sum[:2] - series.t_printed[:2])),
            tolerance + series.t_tail, detail=detail),
        CheckResult.compare(
            'zeta-c-series', where,
            np.max(np.abs(series.c_sum[1:] - series.c_expected[1:]),
                   initial=0.0),
            tolerance + series.c_tail, detail=detail),
        CheckResult.compare(
            'zeta-c-vacuum', where,
            abs(series.c_sum[0] - series.c_expected[0]),
            tolerance + series.c_vacuum_tail, detail=detail),
        CheckResult.compare(
            'zeta-t-berezin', where,
            symbol_deviation(series.t_sum, series.t_mobius),
            tolerance + series.t_tail, detail=detail),
        CheckResult.compare(
            'zeta-c-berezin', where,
            symbol_deviation(series.c_sum, series.c_expected),
            tolerance + series.c_tail + series.c_vacuum_tail, detail=detail),
    ]
    if dim > 2:
        results.append(CheckResult.skipped(
            'zeta-t-printed', where + ((2, dim - 1),),
            'zeta(s) N_{n^-s,0} matches the T_0 series only on |0> and |1>; '
            'the Mobius-weighted form is checked instead'))
    return results


def two_route_check(operator, closed, point, tolerance=1e-10, name=None):
    """
    Compare the numeric Berezin symbol of ``operator`` with a closed form
    value, allowing for the truncation estimate.
    """
    estimate = berezin(operator, point)
    return CheckResult.compare(
        name or 'berezin-two-route', as_point(point).value,
        abs(estimate.value - closed), tolerance + estimate.error)

