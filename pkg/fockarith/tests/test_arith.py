import math

import numpy as np

import pytest

from testtools import ExpectedException
from testtools.assertions import assert_that
from testtools.matchers import Equals, HasLength, Is, MatchesStructure

from fockarith.arith import (
    EPSILON, MU, NU0, NU1, OMEGA, PHI, UNITARY_COUNT, ArithmeticFn,
    CongruenceSystem, CrtSolution, check_lcm_mobius_identity,
    check_multiplicative, check_positive, crt_solve, dirichlet_conv,
    dirichlet_pairs, divisors, euler_phi, factorize, is_squarefree, lcm_conv,
    lcm_pairs, lcm_tuples_count, m_count, m_count_fn, mobius, mobius_sieve,
    omega, pointwise, power_fn, prime_sieve, ramanujan_sum, sigma, sigma_fn,
    totient_sieve, unitary_conv, unitary_pairs)
from fockarith.tests.helpers import (
    brute_crt, brute_divisors, brute_lcm_count, brute_phi,
    exponential_ramanujan_sum, sympy_crt, sympy_factorization, sympy_values)


class TestCheckPositive(object):

    def test_zero(self):
        """
        Zero is not a positive integer.
        """
        with ExpectedException(ValueError, r'n must be >= 1, got 0'):
            check_positive(0)

    def test_too_large(self):
        """
        Inputs above 2**63 - 1 are rejected.
        """
        with ExpectedException(ValueError, r'n must be <= 2\*\*63 - 1'):
            check_positive(2 ** 63)

    def test_not_integer(self):
        """
        Floats and bools are rejected even when they look like integers.
        """
        with ExpectedException(ValueError, r'n must be an integer'):
            check_positive(2.0)
        with ExpectedException(ValueError, r'n must be an integer'):
            check_positive(True)

    def test_numpy_integer(self):
        """
        numpy integers are accepted and returned as Python ints.
        """
        value = check_positive(np.int64(7))
        assert_that(value, Equals(7))
        assert type(value) is int


class TestFactorize(object):

    def test_one(self):
        """
        1 has no prime factors.
        """
        assert_that(factorize(1), Equals(()))

    def test_small_against_sympy(self):
        """
        The factorization matches sympy for every n up to 2000.
        """
        for n in range(1, 2001):
            assert_that(list(factorize(n)), Equals(sympy_factorization(n)))

    def test_large_semiprime(self):
        """
        A product of two large primes is factorized.
        """
        assert_that(factorize(1000003 * 999983),
                    Equals(((999983, 1), (1000003, 1))))

    def test_largest_input(self):
        """
        2**63 - 1 = 7^2 * 73 * 127 * 337 * 92737 * 649657.
        """
        assert_that(factorize(2 ** 63 - 1), Equals(
            ((7, 2), (73, 1), (127, 1), (337, 1), (92737, 1), (649657, 1))))


class TestDivisors(object):

    def test_against_brute_force(self):
        """
        The divisors are exactly those found by trial, in increasing order.
        """
        for n in range(1, 500):
            assert_that(list(divisors(n)), Equals(brute_divisors(n)))

    def test_twelve(self):
        """
        The divisors of 12.
        """
        assert_that(divisors(12), Equals((1, 2, 3, 4, 6, 12)))


class TestClassicalFunctions(object):

    def test_against_sympy(self):
        """
        mu, phi, sigma_1 and omega agree with sympy up to 3000.
        """
        for n in range(1, 3001):
            assert_that((mobius(n), euler_phi(n), sigma(1, n), omega(n)),
                        Equals(sympy_values(n)))

    def test_phi_brute_force(self):
        """
        phi(n) counts the residues coprime to n.
        """
        for n in range(1, 200):
            assert_that(euler_phi(n), Equals(brute_phi(n)))

    def test_mobius_values(self):
        """
        mu(1) = 1, mu(p) = -1, mu(p^2 q) = 0, mu(pq) = 1.
        """
        assert_that([mobius(n) for n in (1, 2, 12, 6, 30)],
                    Equals([1, -1, 0, 1, -1]))

    def test_is_squarefree(self):
        """
        Squarefree numbers are exactly those where mu is non-zero.
        """
        for n in range(1, 300):
            assert_that(is_squarefree(n), Equals(mobius(n) != 0))

    def test_sigma_six(self):
        """
        sigma_1(6) = 12 and sigma_0(6) = 4.
        """
        assert_that(sigma(1, 6), Equals(12))
        assert_that(sigma(0, 6), Equals(4))

    def test_m_count(self):
        """
        M_s(n) counts the ordered s-tuples with lcm n.
        """
        for s in (1, 2, 3):
            for n in range(1, 61):
                assert_that(m_count(s, n), Equals(brute_lcm_count(s, n)))

    def test_m_count_prime_power(self):
        """
        M_2(p^a) = 2a + 1.
        """
        assert_that(m_count(2, 2 ** 5), Equals(11))

    def test_ramanujan_sum(self):
        """
        The exact Ramanujan sum matches the exponential sum.
        """
        for n in range(1, 25):
            for m in range(0, 30):
                assert abs(ramanujan_sum(n, m)
                           - exponential_ramanujan_sum(n, m)) < 1e-9

    def test_ramanujan_sum_zero(self):
        """
        c_n(0) = phi(n).
        """
        for n in range(1, 50):
            assert_that(ramanujan_sum(n, 0), Equals(euler_phi(n)))


class TestArithmeticFn(object):

    def test_memo(self):
        """
        The underlying callable is evaluated once per argument.
        """
        calls = []

        def evaluate(n):
            calls.append(n)
            return n * n

        fn = ArithmeticFn(evaluate)
        assert_that([fn(3), fn(3), fn(4)], Equals([9, 9, 16]))
        assert_that(calls, Equals([3, 4]))

    def test_rejects_non_positive(self):
        """
        Arithmetic functions are defined on the positive integers only.
        """
        with ExpectedException(ValueError, r'n must be >= 1, got 0'):
            PHI(0)

    def test_multiplicative_needs_one_at_one(self):
        """
        A function claimed multiplicative must be 1 at 1.
        """
        with ExpectedException(ValueError,
                               r'two is claimed multiplicative'):
            ArithmeticFn(lambda n: 2, multiplicative=True, name='two')

    def test_standard_values(self):
        """
        The standard functions take their textbook values.
        """
        assert_that(NU0.values(4), Equals([1, 1, 1, 1]))
        assert_that(NU1.values(4), Equals([1, 2, 3, 4]))
        assert_that(EPSILON.values(4), Equals([1, 0, 0, 0]))
        assert_that(OMEGA(30), Equals(3))
        assert_that(UNITARY_COUNT(30), Equals(8))

    def test_factories(self):
        """
        sigma_fn, power_fn and m_count_fn wrap their scalar functions.
        """
        assert_that(sigma_fn(2)(6), Equals(50))
        assert_that(power_fn(2)(4), Equals(1 / 16))
        assert_that(m_count_fn(2)(12), Equals(15))

    def test_pointwise(self):
        """
        The pointwise product multiplies values.
        """
        fn = pointwise(PHI, NU1)
        assert_that(fn.values(5), Equals([1, 2, 6, 8, 20]))
        assert fn.multiplicative

    def test_integer_valued(self):
        """
        Integer valued functions are detected for exact comparisons.
        """
        assert PHI.integer_valued(20)
        assert not power_fn(1).integer_valued(20)


class TestConvolutions(object):

    def test_pairs(self):
        """
        The index sets of the three products.
        """
        assert_that(dirichlet_pairs(6),
                    Equals([(1, 6), (2, 3), (3, 2), (6, 1)]))
        assert_that(unitary_pairs(12), Equals([(1, 12), (3, 4), (4, 3),
                                               (12, 1)]))
        assert_that(lcm_pairs(2), Equals([(1, 2), (2, 1), (2, 2)]))

    def test_mobius_inversion(self):
        """
        mu * nu0 = epsilon exactly.
        """
        for n in range(1, 2000):
            assert_that(dirichlet_conv(MU, NU0, n), Equals(EPSILON(n)))

    def test_euler_identity(self):
        """
        nu0 * phi = nu1.
        """
        for n in range(1, 2000):
            assert_that(dirichlet_conv(NU0, PHI, n), Equals(n))

    def test_lcm_count(self):
        """
        nu0 lcm nu0 = M_2.
        """
        for n in range(1, 2000):
            assert_that(lcm_conv(NU0, NU0, n), Equals(m_count(2, n)))

    def test_unitary_count(self):
        """
        nu0 unitary nu0 = 2^omega.
        """
        for n in range(1, 2000):
            assert_that(unitary_conv(NU0, NU0, n), Equals(2 ** omega(n)))

    def test_lcm_tuples(self):
        """
        The brute-force triple count agrees with M_3.
        """
        for n in range(1, 200):
            assert_that(lcm_tuples_count(3, n), Equals(m_count(3, n)))

    def test_lcm_mobius_identity(self):
        """
        (mu * a) lcm (mu * b) = mu * (ab) for arbitrary a and b.
        """
        a = ArithmeticFn(lambda n: (n * 7) % 5 - 2)
        b = ArithmeticFn(lambda n: (n * n) % 3)
        results = check_lcm_mobius_identity(a, b, 120)
        assert_that(results, HasLength(120))
        assert not [r for r in results if r.failed]


class TestMultiplicative(object):

    @pytest.mark.parametrize('fn', [MU, PHI, NU0, NU1, EPSILON, UNITARY_COUNT,
                                    sigma_fn(1), m_count_fn(2)])
    def test_multiplicative(self, fn):
        """
        The standard multiplicative functions pass.
        """
        assert_that(check_multiplicative(fn, 500), Equals([]))

    def test_omega_not_multiplicative(self):
        """
        omega is additive: every coprime pair with a prime factor is reported.
        """
        violations = check_multiplicative(OMEGA, 6)
        assert_that([v.where for v in violations], Equals(
            [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3)]))

    def test_float_tolerance(self):
        """
        Float values are compared within the tolerance.
        """
        assert_that(check_multiplicative(power_fn(0.5), 300), Equals([]))


class TestCrt(object):

    def test_coprime(self):
        """
        x = 2 mod 3, x = 3 mod 5 has the solution 8 mod 15.
        """
        solution = crt_solve(CongruenceSystem([(2, 3), (3, 5)]))
        assert_that(solution, Equals(CrtSolution(8, 15)))

    def test_non_coprime_solvable(self):
        """
        x = 1 mod 4, x = 3 mod 6 is solved modulo lcm 12.
        """
        solution = crt_solve(CongruenceSystem([(1, 4), (3, 6)]))
        assert_that(solution, MatchesStructure(
            residue=Equals(9), modulus=Equals(12)))

    def test_unsolvable(self):
        """
        x = 0 mod 2, x = 1 mod 4 has no solution.
        """
        assert_that(crt_solve(CongruenceSystem([(0, 2), (1, 4)])), Is(None))

    def test_empty(self):
        """
        An empty system is an error.
        """
        with ExpectedException(ValueError,
                               r'Cannot solve an empty system'):
            crt_solve(CongruenceSystem([]))

    def test_unreduced_residue(self):
        """
        Residues must be reduced unless built with ``reduced``.
        """
        with ExpectedException(ValueError, r'residue 7 is not reduced'):
            CongruenceSystem([(7, 5)])
        system = CongruenceSystem.reduced([(7, 5), (-1, 3)])
        assert_that(system.entries, Equals(((2, 5), (2, 3))))

    def test_many_congruences(self):
        """
        Three or more congruences are solved together.
        """
        solution = crt_solve(CongruenceSystem([(1, 2), (2, 3), (3, 5),
                                               (5, 7)]))
        assert_that(solution, Equals(CrtSolution(173, 210)))
        assert_that(sympy_crt([2, 3, 5, 7], [1, 2, 3, 5]),
                    Equals((173, 210)))

    def test_exhaustive(self):
        """
        Every residue pair for moduli up to 12 agrees with a scan.
        """
        for n in range(1, 13):
            for m in range(1, 13):
                for a in range(n):
                    for b in range(m):
                        solution = crt_solve(
                            CongruenceSystem([(a, n), (b, m)]))
                        expected = brute_crt(a, n, b, m)
                        if expected is None:
                            assert_that(solution, Is(None))
                        else:
                            assert_that(solution, Equals(
                                CrtSolution(expected, math.lcm(n, m))))


class TestSieves(object):

    def test_prime_sieve(self):
        """
        The primes below 30.
        """
        assert_that(np.flatnonzero(prime_sieve(30)).tolist(),
                    Equals([2, 3, 5, 7, 11, 13, 17, 19, 23, 29]))

    def test_mobius_sieve(self):
        """
        The sieve agrees with the factorizing mu.
        """
        sieve = mobius_sieve(1000)
        assert_that(sieve[0], Equals(0))
        assert_that(sieve[1:].tolist(),
                    Equals([mobius(n) for n in range(1, 1001)]))

    def test_totient_sieve(self):
        """
        The sieve agrees with the factorizing phi.
        """
        sieve = totient_sieve(1000)
        assert_that(sieve[1:].tolist(),
                    Equals([euler_phi(n) for n in range(1, 1001)]))
