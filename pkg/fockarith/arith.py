"""
Classical arithmetic functions: divisor machinery, the Chinese remainder
theorem and scalar Dirichlet, lcm and unitary products.

Everything here is exact integer arithmetic wherever the inputs are
integers, so the module doubles as the ground truth for the operator code.
"""
import itertools
import math
import numbers
from collections import namedtuple
from functools import lru_cache, reduce

import numpy as np

from twisted.logger import Logger

from fockarith.report import CheckResult


log = Logger()

MAX_INPUT = 2 ** 63 - 1

# Increments of the 2*3*5 wheel, starting from 7
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


def check_positive(n, name='n'):
    """
    Validate that ``n`` is an integer in ``[1, 2**63 - 1]`` and return it as
    a Python int.
    """
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise ValueError('%s must be an integer, got %r' % (name, n))
    if n < 1:
        raise ValueError('%s must be >= 1, got %d' % (name, n))
    if n > MAX_INPUT:
        raise ValueError('%s must be <= 2**63 - 1, got %d' % (name, n))
    return int(n)


def check_non_negative(j, name='j'):
    if isinstance(j, bool) or not isinstance(j, numbers.Integral):
        raise ValueError('%s must be an integer, got %r' % (name, j))
    if j < 0:
        raise ValueError('%s must be >= 0, got %d' % (name, j))
    return int(j)


def _strip(n, p):
    exponent = 0
    while n % p == 0:
        n //= p
        exponent += 1
    return n, exponent


@lru_cache(maxsize=65536)
def factorize(n):
    """
    Factorize ``n`` by trial division with a 2*3*5 wheel.

    :return: a tuple of ``(prime, exponent)`` pairs, primes increasing.
    """
    n = check_positive(n)
    factors = []
    for p in (2, 3, 5):
        n, exponent = _strip(n, p)
        if exponent:
            factors.append((p, exponent))

    p, i = 7, 0
    while p * p <= n:
        n, exponent = _strip(n, p)
        if exponent:
            factors.append((p, exponent))
        p += _WHEEL[i]
        i = (i + 1) % len(_WHEEL)
    if n > 1:
        factors.append((n, 1))
    return tuple(factors)


@lru_cache(maxsize=65536)
def divisors(n):
    """ The divisors of ``n`` in increasing order, as a tuple. """
    divs = [1]
    for p, a in factorize(n):
        divs = [d * p ** e for d in divs for e in range(a + 1)]
    return tuple(sorted(divs))


def is_squarefree(n):
    return all(a == 1 for _, a in factorize(n))


def mobius(n):
    factors = factorize(n)
    if any(a > 1 for _, a in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def euler_phi(n):
    result = check_positive(n)
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def sigma(s, n):
    """
    The divisor function: the sum of the ``s``-th powers of the divisors of
    ``n``. Integer ``s >= 0`` gives an exact integer.
    """
    return sum(d ** s for d in divisors(n))


def omega(n):
    """ The number of distinct primes dividing ``n``. """
    return len(factorize(n))


def m_count(s, n):
    """
    The number of ordered ``s``-tuples of positive integers whose lcm is
    ``n``: the product of ``(a + 1)**s - a**s`` over the exponents ``a`` of
    ``n``.
    """
    s = check_positive(s, 's')
    result = 1
    for _, a in factorize(n):
        result *= (a + 1) ** s - a ** s
    return result


def ramanujan_sum(n, m):
    """
    The Ramanujan sum ``c_n(m)`` as an exact integer, summed over the
    divisors of ``gcd(n, m)``.
    """
    n = check_positive(n)
    g = math.gcd(n, int(m))
    return sum(mobius(n // d) * d for d in divisors(g))


class ArithmeticFn(object):
    """
    An arithmetic function ``n -> value`` on the positive integers with a
    memo table.

    :param evaluate: The callable computing the value at ``n``.
    :param bool multiplicative:
        Whether the function is claimed to be multiplicative. A claimed
        multiplicative function must take the value 1 at 1.
    :param str name: A short name used in reports and reprs.
    """

    def __init__(self, evaluate, multiplicative=False, name=None):
        self._evaluate = evaluate
        self._memo = {}
        self.multiplicative = multiplicative
        self.name = name or getattr(evaluate, '__name__', 'alpha')
        if multiplicative and self(1) != 1:
            raise ValueError(
                '%s is claimed multiplicative but takes the value %r at 1' % (
                    self.name, self(1)))

    def __call__(self, n):
        try:
            return self._memo[n]
        except KeyError:
            pass
        n = check_positive(n)
        # setdefault keeps the first value if two threads race
        return self._memo.setdefault(n, self._evaluate(n))

    def values(self, n_max):
        return [self(n) for n in range(1, n_max + 1)]

    def integer_valued(self, n_max):
        return all(isinstance(v, numbers.Integral) for v in self.values(n_max))

    def __repr__(self):
        return '<ArithmeticFn %s>' % (self.name,)


NU0 = ArithmeticFn(lambda n: 1, multiplicative=True, name='nu0')
NU1 = ArithmeticFn(lambda n: n, multiplicative=True, name='nu1')
EPSILON = ArithmeticFn(lambda n: int(n == 1), multiplicative=True,
                       name='epsilon')
MU = ArithmeticFn(mobius, multiplicative=True, name='mu')
PHI = ArithmeticFn(euler_phi, multiplicative=True, name='phi')
OMEGA = ArithmeticFn(omega, name='omega')
UNITARY_COUNT = ArithmeticFn(lambda n: 2 ** omega(n), multiplicative=True,
                             name='2^omega')


def sigma_fn(s):
    return ArithmeticFn(lambda n: sigma(s, n), multiplicative=True,
                        name='sigma_%s' % (s,))


def power_fn(s):
    """ The function ``n -> n**-s``. """
    return ArithmeticFn(lambda n: n ** -s, multiplicative=True,
                        name='power_%s' % (s,))


def m_count_fn(s):
    return ArithmeticFn(lambda n: m_count(s, n), multiplicative=True,
                        name='M_%s' % (s,))


def pointwise(a, b):
    return ArithmeticFn(
        lambda n: a(n) * b(n),
        multiplicative=a.multiplicative and b.multiplicative,
        name='(%s*%s)' % (a.name, b.name))


def dirichlet_pairs(n):
    """ Ordered pairs ``(k, l)`` with ``k * l == n``. """
    return [(d, n // d) for d in divisors(n)]


def lcm_pairs(n):
    """ Ordered pairs of divisors ``(k, l)`` with ``lcm(k, l) == n``. """
    divs = divisors(n)
    return [(d, e) for d in divs for e in divs if math.lcm(d, e) == n]


def unitary_pairs(n):
    """ Coprime ordered pairs ``(k, l)`` with ``k * l == n``. """
    return [(d, n // d) for d in divisors(n) if math.gcd(d, n // d) == 1]


def _convolve(pairs, a, b, n):
    return sum((a(d) * b(e) for d, e in pairs(check_positive(n))), 0)


def dirichlet_conv(a, b, n):
    return _convolve(dirichlet_pairs, a, b, n)


def lcm_conv(a, b, n):
    return _convolve(lcm_pairs, a, b, n)


def unitary_conv(a, b, n):
    return _convolve(unitary_pairs, a, b, n)


def lcm_tuples_count(s, n):
    """
    Count ordered ``s``-tuples of divisors of ``n`` whose lcm is ``n`` by
    enumerating them all.
    """
    s = check_positive(s, 's')
    divs = divisors(n)
    return sum(1 for t in itertools.product(divs, repeat=s)
               if reduce(math.lcm, t) == n)


CrtSolution = namedtuple('CrtSolution', ['residue', 'modulus'])


class CongruenceSystem(object):
    """
    A system of congruences ``x = residue (mod modulus)``.

    :param entries: An iterable of ``(residue, modulus)`` pairs. Residues
        must already be reduced; see :meth:`reduced` otherwise.
    """

    def __init__(self, entries):
        entries = tuple((int(r), int(m)) for r, m in entries)
        for residue, modulus in entries:
            if modulus < 1:
                raise ValueError('modulus must be >= 1, got %d' % (modulus,))
            if not 0 <= residue < modulus:
                raise ValueError('residue %d is not reduced modulo %d' % (
                    residue, modulus))
        self.entries = entries

    @classmethod
    def reduced(cls, entries):
        reduced = []
        for residue, modulus in entries:
            if modulus < 1:
                raise ValueError('modulus must be >= 1, got %d' % (modulus,))
            reduced.append((residue % modulus, modulus))
        return cls(reduced)

    def __repr__(self):
        return 'CongruenceSystem(%r)' % (list(self.entries),)


def crt_solve(system):
    """
    Solve a system of congruences.

    :return:
        A :class:`CrtSolution` ``(residue, modulus)`` with ``modulus`` the
        lcm of the moduli and ``0 <= residue < modulus``, or ``None`` when
        the system has no solution.
    """
    if not system.entries:
        raise ValueError('Cannot solve an empty system of congruences')

    residue, modulus = 0, 1
    for r, m in system.entries:
        g = math.gcd(modulus, m)
        if (r - residue) % g:
            return None
        step = ((r - residue) // g) * pow(modulus // g, -1, m // g)
        lcm = modulus // g * m
        residue = (residue + modulus * (step % (m // g))) % lcm
        modulus = lcm
    return CrtSolution(residue, modulus)


def _values_match(actual, expected, tolerance):
    if isinstance(actual, numbers.Integral) and isinstance(
            expected, numbers.Integral):
        return actual == expected, abs(actual - expected)
    deviation = abs(complex(actual) - complex(expected))
    return deviation <= tolerance, deviation


def check_multiplicative(a, n_max, tolerance=1e-12):
    """
    Check ``a(nm) == a(n) a(m)`` for every coprime pair ``n <= m`` with
    ``nm <= n_max``. Integer values are compared exactly.

    :return: a list of failing :class:`CheckResult`, empty if ``a`` passes.
    """
    violations = []
    for n in range(1, n_max + 1):
        for m in range(n, n_max // n + 1):
            if math.gcd(n, m) != 1:
                continue
            ok, deviation = _values_match(a(n * m), a(n) * a(m), tolerance)
            if not ok:
                violations.append(CheckResult.compare(
                    'multiplicative', (n, m), deviation, tolerance,
                    note='%s(%d) != %s(%d) %s(%d)' % (
                        a.name, n * m, a.name, n, a.name, m)))
    return violations


def check_lcm_mobius_identity(a, b, n_max, tolerance=1e-12):
    """
    Check ``(mu * a) lcm (mu * b) == mu * (ab)`` up to ``n_max``, the scalar
    shadow of the Möbius form of the number-operator product law.
    """
    mu_a = ArithmeticFn(lambda n: dirichlet_conv(MU, a, n))
    mu_b = ArithmeticFn(lambda n: dirichlet_conv(MU, b, n))
    ab = pointwise(a, b)
    results = []
    for n in range(1, n_max + 1):
        _, deviation = _values_match(
            lcm_conv(mu_a, mu_b, n), dirichlet_conv(MU, ab, n), tolerance)
        results.append(CheckResult.compare(
            'lcm-mobius', n, deviation, tolerance))
    return results


def prime_sieve(limit):
    """ A boolean numpy array marking the primes in ``[0, limit]``. """
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    return is_prime


def mobius_sieve(limit):
    """ ``mu(n)`` for ``0 <= n <= limit`` as int64, with ``mu(0) = 0``. """
    mu = np.ones(limit + 1, dtype=np.int64)
    mu[0] = 0
    for p in np.flatnonzero(prime_sieve(limit)):
        mu[p::p] *= -1
        mu[p * p::p * p] = 0
    return mu


def totient_sieve(limit):
    """ ``phi(n)`` for ``0 <= n <= limit`` as an int64 array. """
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in np.flatnonzero(prime_sieve(limit)):
        phi[p::p] -= phi[p::p] // p
    return phi
