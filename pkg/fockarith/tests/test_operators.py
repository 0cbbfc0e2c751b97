import numpy as np

import pytest

from testtools import ExpectedException
from testtools.assertions import assert_that
from testtools.matchers import Equals, Is, MatchesStructure

from fockarith.arith import MU, NU0, PHI, power_fn, sigma
from fockarith.operators import (
    DIAGONAL, DIVISOR_RANGE, DOWN_SHIFT, LITERAL, NORMALIZED, RESIDUE_RANGE,
    SPARSE, UP_SHIFT, DimensionMismatch, FockOperator, OperatorSeq,
    basis_projector, basis_vector, check_divisor_product_law,
    coprime_residues, identity, number_op, number_op_series, op_add,
    op_adjoint, op_apply, op_mul, op_power, op_scale, op_sub, phase_down,
    phase_up, progression_split, projector, projector_bar,
    projector_from_rotated, projector_prime_split, ramanujan_c,
    ramanujan_c_domain, ramanujan_sum_diagonal, ramanujan_t,
    ramanujan_t_domain, roots_of_unity, rotated, shift_conjugate,
    theorem1_product, zero)
from fockarith.tests.helpers import dense_projector
from fockarith.tests.matchers import IsDiagonal, OperatorEquals


class TestFockOperator(object):

    def test_diagonal_read_only(self):
        """
        The diagonal of an operator cannot be changed in place.
        """
        op = FockOperator.diagonal([1, 2, 3])
        with ExpectedException(ValueError):
            op.diag()[0] = 5

    def test_wrong_shape(self):
        """
        A diagonal of the wrong length is a dimension mismatch.
        """
        with ExpectedException(
                DimensionMismatch, r'diagonal has shape \(3,\), expected'):
            FockOperator(4, DIAGONAL, [1, 2, 3])

    def test_unknown_kind(self):
        """
        Only the known kinds can be built.
        """
        with ExpectedException(ValueError, r"Unknown operator kind 'dense'"):
            FockOperator(2, 'dense')

    def test_from_entries_collapses_to_diagonal(self):
        """
        Entries on the diagonal only give a diagonal operator.
        """
        op = FockOperator.from_entries(3, [(0, 0, 2), (2, 2, 1j)])
        assert_that(op, IsDiagonal([2, 0, 1j]))

    def test_from_entries_sparse(self):
        """
        Off-diagonal entries give a sparse operator.
        """
        op = FockOperator.from_entries(3, [(0, 1, 2), (2, 2, 1)])
        assert_that(op.kind, Equals(SPARSE))
        assert_that(op.entries(), Equals([(0, 1, 2 + 0j), (2, 2, 1 + 0j)]))

    def test_from_entries_out_of_range(self):
        """
        Entries outside the dimension are rejected.
        """
        with ExpectedException(ValueError, r'entry \(3, 0\) outside'):
            FockOperator.from_entries(3, [(3, 0, 1)])

    def test_norm_bound(self):
        """
        The norm bound is the largest entry modulus.
        """
        assert_that(FockOperator.diagonal([1, -3, 2j]).norm_bound(),
                    Equals(3.0))
        assert_that(phase_up(1).norm_bound(), Equals(0.0))
        assert_that(phase_up(4).norm_bound(), Equals(1.0))

    def test_dims_must_match(self):
        """
        Operators of different dimension cannot be combined.
        """
        with ExpectedException(DimensionMismatch,
                               r'Operator dimensions differ: 2, 3'):
            op_add(identity(2), identity(3))

    def test_equals(self):
        """
        equals() compares within a tolerance.
        """
        a = FockOperator.diagonal([1, 2])
        b = FockOperator.diagonal([1, 2 + 1e-9])
        assert not a.equals(b)
        assert a.equals(b, tolerance=1e-8)


class TestAlgebra(object):

    def test_shift_products(self):
        """
        E_- E_+ is the identity off the top state and E_+ E_- the identity
        off the vacuum.
        """
        dim = 5
        up, down = phase_up(dim), phase_down(dim)
        assert_that(op_mul(down, up), IsDiagonal([1, 1, 1, 1, 0]))
        assert_that(op_mul(up, down), IsDiagonal([0, 1, 1, 1, 1]))

    def test_adjoint_swaps_shifts(self):
        """
        The adjoint of E_+ is E_-.
        """
        assert_that(op_adjoint(phase_up(3)).kind, Equals(DOWN_SHIFT))
        assert_that(op_adjoint(phase_down(3)).kind, Equals(UP_SHIFT))

    def test_adjoint_sparse(self):
        """
        The adjoint conjugates and transposes.
        """
        op = FockOperator.from_entries(2, [(0, 1, 1j)])
        assert_that(op_adjoint(op).entries(), Equals([(1, 0, -1j)]))

    def test_apply(self):
        """
        Operators act on state vectors.
        """
        vector = [1, 2, 3]
        assert_that(op_apply(phase_up(3), vector).tolist(),
                    Equals([0, 1, 2]))
        assert_that(op_apply(phase_down(3), vector).tolist(),
                    Equals([2, 3, 0]))
        assert_that(op_apply(FockOperator.diagonal([1, 0, 2]),
                             vector).tolist(), Equals([1, 0, 6]))

    def test_apply_wrong_length(self):
        """
        A vector of the wrong length is rejected.
        """
        with ExpectedException(DimensionMismatch):
            op_apply(identity(3), [1, 2])

    def test_scale_sub(self):
        """
        Scaling and subtraction act entrywise.
        """
        a = FockOperator.diagonal([1, 2])
        assert_that(op_sub(op_scale(3, a), a), IsDiagonal([2, 4]))

    def test_power(self):
        """
        The zeroth power is the identity and E_+^2 shifts by two.
        """
        assert_that(op_power(phase_up(3), 0), OperatorEquals(identity(3)))
        assert_that(op_apply(op_power(phase_up(4), 2), [1, 2, 3, 4]).tolist(),
                    Equals([0, 0, 1, 2]))

    def test_shift_conjugate(self):
        """
        E_+^j A E_-^j moves a diagonal up by j and clears the bottom j.
        """
        a = FockOperator.diagonal([1, 2, 3, 4])
        assert_that(shift_conjugate(a, 1), IsDiagonal([0, 1, 2, 3]))
        assert_that(shift_conjugate(a, 0), IsDiagonal([1, 2, 3, 4]))

    def test_basis(self):
        """
        Basis vectors and rank-one projectors.
        """
        assert_that(basis_vector(1, 3).tolist(), Equals([0, 1, 0]))
        assert_that(basis_projector(2, 3), IsDiagonal([0, 0, 1]))
        with ExpectedException(ValueError, r'index 3 outside dimension 3'):
            basis_vector(3, 3)


class TestProjectors(object):

    def test_pi_normalized(self):
        """
        Pi_1(2) at D = 4 is (0, 1, 0, 1).
        """
        assert_that(projector(1, 2, 4, NORMALIZED), IsDiagonal([0, 1, 0, 1]))

    def test_pi_literal_and_normalized_differ_above_n(self):
        """
        For j >= n the literal projector starts at j, the normalized one
        uses the residue class.
        """
        assert_that(projector(3, 2, 6, LITERAL),
                    IsDiagonal([0, 0, 0, 1, 0, 1]))
        assert_that(projector(3, 2, 6, NORMALIZED),
                    IsDiagonal([0, 1, 0, 1, 0, 1]))

    def test_pi_modes_agree_below_n(self):
        """
        For j < n the two conventions agree.
        """
        for n in range(1, 8):
            for j in range(n):
                assert_that(projector(j, n, 20, LITERAL),
                            OperatorEquals(projector(j, n, 20, NORMALIZED)))

    def test_dense_oracle(self):
        """
        The normalized projector matches a dense construction.
        """
        assert np.array_equal(projector(2, 5, 17, NORMALIZED).to_dense(),
                              dense_projector(2, 5, 17))

    def test_unknown_mode(self):
        """
        Only the two modes exist.
        """
        with ExpectedException(ValueError, r'projector mode must be one of'):
            projector(0, 2, 4, 'shifted')

    def test_bar(self):
        """
        Pibar_j(k) drops the rank-one term at j.
        """
        assert_that(projector_bar(1, 2, 6), IsDiagonal([0, 0, 0, 1, 0, 1]))

    def test_completeness(self):
        """
        The projectors of one modulus sum to the identity.
        """
        for n in range(1, 20):
            total = zero(50)
            for j in range(n):
                total = op_add(total, projector(j, n, 50, NORMALIZED))
            assert_that(total, OperatorEquals(identity(50)))

    def test_prime_split(self):
        """
        Pi_j(n) is the product over the prime powers of n.
        """
        for n in range(1, 80):
            for j in range(n):
                assert_that(projector_prime_split(j, n, 2 * n),
                            OperatorEquals(projector(j, n, 2 * n, NORMALIZED)))

    def test_divisor_product_law(self):
        """
        Pi_j(n) Pi_k(m) for n | m is Pi_k(m) or zero.
        """
        for j in range(2):
            for k in range(6):
                result = check_divisor_product_law(j, 2, k, 6, 24)
                assert result.passed

    def test_divisor_product_law_requires_divisor(self):
        """
        The law only applies when n divides m.
        """
        with ExpectedException(ValueError, r'4 does not divide 6'):
            check_divisor_product_law(0, 4, 0, 6, 24)


class TestRotated(object):

    def test_roots_exact_quarter_turns(self):
        """
        Quarter-turn roots of unity are exact.
        """
        assert_that(roots_of_unity(4).tolist(), Equals([1, 1j, -1, -1j]))
        assert_that(roots_of_unity(2).tolist(), Equals([1, -1]))

    def test_rotated_one_is_identity(self):
        """
        S_1 is the identity.
        """
        assert_that(rotated(1, 3), OperatorEquals(identity(3)))

    @pytest.mark.parametrize('n', [1, 2, 3, 7, 12, 64])
    def test_period(self, n):
        """
        S_n^n = I within 1e-12.
        """
        dim = 2 * n
        assert_that(op_power(rotated(n, dim), n),
                    OperatorEquals(identity(dim), tolerance=1e-12))

    def test_inversion(self):
        """
        Pi_j(n) is recovered from the powers of S_n.
        """
        for n in range(1, 25):
            for j in range(n):
                assert_that(
                    projector_from_rotated(j, n, 3 * n),
                    OperatorEquals(projector(j, n, 3 * n, NORMALIZED),
                                   tolerance=1e-12))

    def test_inversion_requires_reduced_j(self):
        """
        The inversion formula needs j < n.
        """
        with ExpectedException(ValueError, r'j must be < n'):
            projector_from_rotated(3, 3, 6)


class TestTheorem1(object):

    def test_coprime(self):
        """
        Pi_1(2) Pi_2(3) = Pi_5(6).
        """
        result = theorem1_product(1, 2, 2, 3, 24)
        assert result.agrees
        assert_that(result.solution, MatchesStructure(
            residue=Equals(5), modulus=Equals(6)))

    def test_incompatible(self):
        """
        Pi_0(2) Pi_1(4) = 0 since the congruences are incompatible.
        """
        result = theorem1_product(0, 2, 1, 4, 16)
        assert result.agrees
        assert_that(result.solution, Is(None))
        assert_that(result.product, OperatorEquals(zero(16)))

    def test_exhaustive_small(self):
        """
        Every residue pair for moduli up to 10 agrees exactly.
        """
        for n in range(1, 11):
            for m in range(1, 11):
                for k in range(n):
                    for i in range(m):
                        dim = 4 * n * m
                        assert theorem1_product(k, n, i, m, dim).agrees

    def test_ranges(self):
        """
        Residues must be reduced.
        """
        with ExpectedException(ValueError, r'k must satisfy 0 <= k < n'):
            theorem1_product(2, 2, 0, 3, 12)

    def test_progression_split(self):
        """
        Pi_j(n) splits into r projectors modulo nr, from either start.
        """
        for n in range(1, 7):
            for r in range(1, 4):
                for j in range(n):
                    for start in (0, 1):
                        assert progression_split(
                            j, n, r, 2 * n * r, start=start).passed


class TestRamanujanOperators(object):

    def test_coprime_residues(self):
        """
        The two k ranges differ only for n = 1.
        """
        assert_that(coprime_residues(6, DIVISOR_RANGE), Equals([1, 5]))
        assert_that(coprime_residues(6, RESIDUE_RANGE), Equals([1, 5]))
        assert_that(coprime_residues(1, DIVISOR_RANGE), Equals([1]))
        assert_that(coprime_residues(1, RESIDUE_RANGE), Equals([0]))

    def test_c_diagonal_is_ramanujan_sum(self):
        """
        C_0(n) carries c_n(m) at |m>.
        """
        for n in range(1, 16):
            expected = FockOperator.diagonal(ramanujan_sum_diagonal(n, 40))
            assert_that(ramanujan_c(0, n, 40),
                        OperatorEquals(expected, tolerance=1e-10))

    def test_ramanujan_sum_diagonal(self):
        """
        c_4(m) for m = 0..7.
        """
        assert_that(ramanujan_sum_diagonal(4, 8).tolist(),
                    Equals([2, 0, -2, 0, 2, 0, -2, 0]))

    def test_t_zero(self):
        """
        T_0(n) for n >= 2 is the indicator of gcd(m, n) = 1.
        """
        assert_that(ramanujan_t(0, 4, 8), IsDiagonal([0, 1, 0, 1, 0, 1, 0, 1]))

    def test_t_one_depends_on_range(self):
        """
        T_0(1) is Pi_1(1) with the divisor range and Pi_0(1) with the residue
        range.
        """
        assert_that(ramanujan_t(0, 1, 3, DIVISOR_RANGE), IsDiagonal([0, 1, 1]))
        assert_that(ramanujan_t(0, 1, 3, RESIDUE_RANGE), IsDiagonal([1, 1, 1]))

    def test_domains(self):
        """
        C_j(n) is in its domain for j = 0 always, for j = 1 iff mu(n) = 0.
        T_j(n) is in its domain iff n | j, and n = 1 needs the residue range.
        """
        assert ramanujan_c_domain(6, 0)
        assert not ramanujan_c_domain(6, 1)
        assert ramanujan_c_domain(4, 1)
        assert ramanujan_t_domain(3, 3)
        assert not ramanujan_t_domain(3, 1)
        assert not ramanujan_t_domain(1, 0)
        assert ramanujan_t_domain(1, 0, RESIDUE_RANGE)


class TestNumberOperators(object):

    def test_phi(self):
        """
        N_{phi,0} = diag(0, 1, ..., D-1) exactly.
        """
        assert_that(number_op(PHI, 0, 1024),
                    OperatorEquals(FockOperator.diagonal(np.arange(1024))))

    def test_example(self):
        """
        number alpha=phi j=0 dim=5.
        """
        assert_that(number_op(PHI, 0, 5), IsDiagonal([0, 1, 2, 3, 4]))

    def test_phi_shifted(self):
        """
        N_{phi,1} is the number operator conjugated by one shift: m - 1 on
        |m> for m >= 1, not the N + 1 of the reversed ladder product.
        """
        shifted = number_op(PHI, 1, 8)
        assert_that(shifted, IsDiagonal([0, 0, 1, 2, 3, 4, 5, 6]))
        assert_that(shifted, OperatorEquals(
            shift_conjugate(number_op(PHI, 0, 8), 1)))
        assert shifted.max_deviation(
            FockOperator.diagonal(np.arange(1, 9))) > 0

    @pytest.mark.parametrize('s', [1, 2])
    def test_zeta_eigenvalues(self, s):
        """
        The zeta operator carries sigma_s(m) / m^s at |m>.
        """
        diagonal = number_op(power_fn(s), 0, 1001).diag()
        for m in range(1, 1001):
            expected = sigma(s, m) / m ** s
            assert abs(diagonal[m] - expected) <= 1e-12 * expected

    @pytest.mark.parametrize('alpha', [PHI, NU0, MU])
    @pytest.mark.parametrize('j', [0, 1, 3])
    def test_series(self, alpha, j):
        """
        The divisor-sum form agrees with the defining series.
        """
        assert_that(number_op(alpha, j, 96),
                    OperatorEquals(number_op_series(alpha, j, 96)))

    def test_offset_beyond_dimension(self):
        """
        With j >= D the operator is zero.
        """
        assert_that(number_op(PHI, 10, 5), OperatorEquals(zero(5)))


class TestOperatorSeq(object):

    def test_memoized(self):
        """
        The generator runs once per n.
        """
        calls = []

        def generate(n):
            calls.append(n)
            return identity(3)

        seq = OperatorSeq(3, generate)
        seq(2)
        seq(2)
        assert_that(calls, Equals([2]))

    def test_wrong_dimension(self):
        """
        A generator returning the wrong dimension is an error.
        """
        seq = OperatorSeq(3, lambda n: identity(4), name='bad')
        with ExpectedException(DimensionMismatch,
                               r'bad\(1\) has dimension 4, expected 3'):
            seq(1)

    def test_positive(self):
        """
        Sequences are indexed by positive integers.
        """
        seq = OperatorSeq(3, lambda n: identity(3))
        with ExpectedException(ValueError, r'n must be >= 1'):
            seq(0)
