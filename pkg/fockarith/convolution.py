"""
Dirichlet, lcm and unitary products of operator-valued arithmetic
functions, and the identities they satisfy.
"""
import math
from enum import Enum

from twisted.logger import Logger

from fockarith.arith import (
    MU, NU0, NU1, ArithmeticFn, dirichlet_pairs, lcm_pairs, pointwise,
    unitary_pairs)
from fockarith.operators import (
    LITERAL, NORMALIZED, RESIDUE_RANGE, DimensionMismatch, OperatorSeq,
    identity, number_op, op_add, op_mul, op_scale, phase_up, projector,
    projector_bar, ramanujan_c, ramanujan_c_domain, ramanujan_t,
    ramanujan_t_domain, shift_conjugate, zero)
from fockarith.report import FAIL, PASS, CheckResult


log = Logger()


class ConvKind(Enum):
    DIRICHLET = 'dirichlet'
    LCM = 'lcm'
    UNITARY = 'unitary'

    def pairs(self, n):
        """ The ordered ``(k, l)`` pairs summed over at ``n``. """
        return _PAIRS[self](n)

    def scalar(self, a, b, n):
        return sum((a(d) * b(e) for d, e in self.pairs(n)), 0)


_PAIRS = {
    ConvKind.DIRICHLET: dirichlet_pairs,
    ConvKind.LCM: lcm_pairs,
    ConvKind.UNITARY: unitary_pairs,
}


def convolved(kind, a, b):
    """ The arithmetic function ``n -> (a kind b)(n)``. """
    kind = ConvKind(kind)
    return ArithmeticFn(
        lambda n: kind.scalar(a, b, n),
        multiplicative=a.multiplicative and b.multiplicative,
        name='(%s %s %s)' % (a.name, kind.value, b.name))


def _check_seq_dims(a, b):
    if a.dim != b.dim:
        raise DimensionMismatch(
            'Operator sequence dimensions differ: %d, %d' % (a.dim, b.dim))


def op_conv(kind, a, b, n):
    """
    The operator-valued product ``(a kind b)(n)``: the sum of ``a(k) b(l)``
    over the pairs of ``kind``, keeping the operand order.
    """
    kind = ConvKind(kind)
    _check_seq_dims(a, b)
    total = zero(a.dim)
    for d, e in kind.pairs(n):
        total = op_add(total, op_mul(a(d), b(e)))
    return total


def convolved_seq(kind, a, b):
    kind = ConvKind(kind)
    _check_seq_dims(a, b)
    return OperatorSeq(
        a.dim, lambda n: op_conv(kind, a, b, n),
        name='(%s %s %s)' % (a.name, kind.value, b.name))


def scalar_weighted_seq(alpha, seq):
    """ ``n -> alpha(n) seq(n)``. """
    return OperatorSeq(
        seq.dim, lambda n: op_scale(alpha(n), seq(n)),
        name='%s %s' % (alpha.name, seq.name))


def identity_seq(alpha, dim):
    """ ``n -> alpha(n) I``. """
    one = identity(dim)
    return OperatorSeq(dim, lambda n: op_scale(alpha(n), one),
                       name='%s I' % (alpha.name,))


def projector_seq(j, dim, mode):
    return OperatorSeq(dim, lambda n: projector(j, n, dim, mode),
                       name='Pi_%d' % (j,))


def projector_bar_seq(j, dim):
    return OperatorSeq(dim, lambda k: projector_bar(j, k, dim),
                       name='Pibar_%d' % (j,))


def _tolerance_for(fns, n_max, tolerance):
    """ Integer data is compared exactly. """
    if all(fn.integer_valued(n_max) for fn in fns):
        return 0.0
    return tolerance


def verify_b_identities(alpha, beta, j, n_max, dim, tolerance=1e-10):
    """
    Check, for every ``n <= n_max``, the lcm and unitary product laws of
    weighted literal projectors and the Dirichlet factorization with both
    ``Pi_j`` and ``Pibar_j``.

    The truncation must hold two full periods of the largest modulus past
    ``j``, otherwise the products see too few indices to be meaningful.
    """
    required = j + 2 * n_max
    if dim < required:
        raise ValueError(
            'dimension %d is too small for n_max=%d, j=%d: need at least %d'
            % (dim, n_max, j, required))
    tol = _tolerance_for((alpha, beta), n_max, tolerance)

    lcm_ab = convolved(ConvKind.LCM, alpha, beta)
    unitary_ab = convolved(ConvKind.UNITARY, alpha, beta)
    nu0 = identity_seq(NU0, dim)
    results = []
    for label, seq in (('', projector_seq(j, dim, LITERAL)),
                       ('-bar', projector_bar_seq(j, dim))):
        a_seq = scalar_weighted_seq(alpha, seq)
        b_seq = scalar_weighted_seq(beta, seq)
        lcm_seq = scalar_weighted_seq(lcm_ab, seq)
        left = convolved_seq(ConvKind.DIRICHLET, nu0, a_seq)
        right = convolved_seq(ConvKind.DIRICHLET, nu0, b_seq)
        for n in range(1, n_max + 1):
            results.append(CheckResult.compare(
                'b1' + label, (j, n),
                op_conv(ConvKind.LCM, a_seq, b_seq, n).max_deviation(
                    op_scale(lcm_ab(n), seq(n))),
                tol))
            results.append(CheckResult.compare(
                'b2' + label, (j, n),
                op_conv(ConvKind.UNITARY, a_seq, b_seq, n).max_deviation(
                    op_scale(unitary_ab(n), seq(n))),
                tol))
            results.append(CheckResult.compare(
                'b3' + label, (j, n),
                op_conv(ConvKind.DIRICHLET, nu0, lcm_seq, n).max_deviation(
                    op_mul(left(n), right(n))),
                tol))
    return results


def check_extended_multiplicative(phi, n_max, tolerance=1e-12):
    """
    Check ``phi(nm) == phi(n) phi(m)`` for coprime ``n <= m``, ``nm <= n_max``.

    :return: the failing :class:`CheckResult` records.
    """
    violations = []
    for n in range(1, n_max + 1):
        for m in range(n, n_max // n + 1):
            if math.gcd(n, m) != 1:
                continue
            deviation = phi(n * m).max_deviation(op_mul(phi(n), phi(m)))
            if deviation > tolerance:
                violations.append(CheckResult.compare(
                    'extended-multiplicative', (n, m), deviation, tolerance))
    return violations


def proposition1_check(alpha, beta, j, dim, tolerance=1e-10):
    """
    Check both product laws of truncated number operators:
    ``N_a N_b = N_{a lcm b}`` and ``N_{mu*a} N_{mu*b} = N_{mu*(ab)}``.
    """
    tol = _tolerance_for((alpha, beta), dim, tolerance)
    lcm_ab = convolved(ConvKind.LCM, alpha, beta)
    product = op_mul(number_op(alpha, j, dim), number_op(beta, j, dim))
    part1 = CheckResult.compare(
        'proposition1-lcm', (j, dim),
        product.max_deviation(number_op(lcm_ab, j, dim)), tol)

    mu_a = convolved(ConvKind.DIRICHLET, MU, alpha)
    mu_b = convolved(ConvKind.DIRICHLET, MU, beta)
    mu_ab = convolved(ConvKind.DIRICHLET, MU, pointwise(alpha, beta))
    product = op_mul(number_op(mu_a, j, dim), number_op(mu_b, j, dim))
    part2 = CheckResult.compare(
        'proposition1-mobius', (j, dim),
        product.max_deviation(number_op(mu_ab, j, dim)), tolerance)
    return [part1, part2]


def check_associativity(kind, a, b, c, n_max, tolerance=1e-10):
    kind = ConvKind(kind)
    left = convolved_seq(kind, convolved_seq(kind, a, b), c)
    right = convolved_seq(kind, a, convolved_seq(kind, b, c))
    return [
        CheckResult.compare(
            'associativity-' + kind.value, n,
            left(n).max_deviation(right(n)), tolerance)
        for n in range(1, n_max + 1)]


def noncommutativity_witness(dim):
    """
    Exhibit a Dirichlet product that depends on operand order: a constant
    ``E_+`` sequence against normalized ``Pi_0`` at ``n = 2``.
    """
    if dim < 3:
        raise ValueError('the witness needs dimension >= 3, got %d' % (dim,))
    shifts = OperatorSeq(dim, lambda n: phase_up(dim), name='E+')
    projectors = projector_seq(0, dim, NORMALIZED)
    forward = op_conv(ConvKind.DIRICHLET, shifts, projectors, 2)
    backward = op_conv(ConvKind.DIRICHLET, projectors, shifts, 2)
    deviation = forward.max_deviation(backward)
    return CheckResult(
        'noncommutativity-witness', ('dirichlet', 2), deviation,
        PASS if deviation > 0 else FAIL,
        note='(E+ * Pi_0)(2) differs from (Pi_0 * E+)(2)')


def check_ramanujan_operators(n, j, dim, k_range=RESIDUE_RANGE,
                              tolerance=1e-10):
    """
    Compare ``C_j(n)`` with ``(mu * nu_1 Pi_j)(n)`` and ``T_j(n)`` with
    ``(nu_0 * mu Pi_j)(n)`` (literal projectors). Outside the domain where
    these hold the comparison is skipped; the shift-covariant forms
    ``E_+^j C_0(n) E_-^j`` and ``E_+^j T_0(n) E_-^j`` are always checked.
    """
    literal = projector_seq(j, dim, LITERAL)
    c_rhs = op_conv(ConvKind.DIRICHLET, identity_seq(MU, dim),
                    scalar_weighted_seq(NU1, literal), n)
    t_rhs = op_conv(ConvKind.DIRICHLET, identity_seq(NU0, dim),
                    scalar_weighted_seq(MU, literal), n)
    where = (n, j)
    results = []

    if ramanujan_c_domain(n, j):
        results.append(CheckResult.compare(
            'c-operator', where,
            ramanujan_c(j, n, dim).max_deviation(c_rhs), tolerance))
    else:
        results.append(CheckResult.skipped(
            'c-operator', where,
            'holds only when the Ramanujan sums c_n(1..j) vanish'))
    results.append(CheckResult.compare(
        'c-operator-shifted', where,
        shift_conjugate(ramanujan_c(0, n, dim), j).max_deviation(c_rhs),
        tolerance))

    if ramanujan_t_domain(n, j, k_range):
        results.append(CheckResult.compare(
            't-operator', where,
            ramanujan_t(j, n, dim, k_range).max_deviation(t_rhs), tolerance))
    else:
        results.append(CheckResult.skipped(
            't-operator', where,
            'holds only when n divides j (n = 1 needs k over residues '
            '0..n-1), k range is %r' % (k_range,)))
    results.append(CheckResult.compare(
        't-operator-shifted', where,
        shift_conjugate(ramanujan_t(0, n, dim, RESIDUE_RANGE), j)
        .max_deviation(t_rhs),
        tolerance))
    return results
