import cmath
import itertools
import math

import numpy as np

from sympy import divisor_sigma, factorint, primenu, totient
from sympy.ntheory import mobius as sympy_mobius
from sympy.ntheory.modular import crt


def brute_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_phi(n):
    """ Count the residues coprime to ``n``. """
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def brute_lcm_count(s, n):
    """ Count ordered ``s``-tuples of divisors of ``n`` with lcm ``n``. """
    divs = brute_divisors(n)
    count = 0
    for combo in itertools.product(divs, repeat=s):
        lcm = 1
        for d in combo:
            lcm = lcm * d // math.gcd(lcm, d)
        count += lcm == n
    return count


def brute_crt(a, n, b, m):
    """ The smallest ``x >= 0`` with ``x = a mod n``, ``x = b mod m``. """
    for x in range(n * m):
        if x % n == a and x % m == b:
            return x
    return None


def exponential_ramanujan_sum(n, m):
    """ ``c_n(m)`` as a direct sum of roots of unity. """
    total = sum(cmath.exp(2j * math.pi * k * m / n)
                for k in range(1, n + 1) if math.gcd(k, n) == 1)
    return total


def direct_zeta(s, terms=10 ** 6):
    k = np.arange(1, terms + 1, dtype=float)
    return float(np.sum(k ** -s))


def dense_projector(j, n, dim):
    """ The normalized congruence projector as a dense matrix. """
    return np.diag([1.0 if m % n == j % n else 0.0 for m in range(dim)])


def sympy_values(n):
    """
    Reference values from sympy: ``(mobius, phi, sigma_1, omega)``.
    """
    return (int(sympy_mobius(n)), int(totient(n)), int(divisor_sigma(n, 1)),
            int(primenu(n)))


def sympy_factorization(n):
    return sorted(factorint(n).items())


def sympy_crt(moduli, residues):
    """
    sympy's CRT as ``(residue, modulus)``, or ``None`` if unsolvable.
    """
    result = crt(moduli, residues, check=True)
    if result is None:
        return None
    return int(result[0]), int(result[1])
