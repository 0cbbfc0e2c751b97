"""
Operators on the truncated Fock space spanned by ``|0>, ..., |D-1>``.

Most operators here are diagonal in the number basis and are stored as a
numpy vector. The phase shifts have their own kinds and anything else
falls back to a scipy CSR matrix.
"""
import math

import numpy as np

from scipy import sparse

from twisted.logger import Logger

from fockarith.arith import (
    NU0, CongruenceSystem, check_non_negative, check_positive, crt_solve,
    dirichlet_conv, divisors, factorize, mobius, ramanujan_sum)
from fockarith.report import CheckResult


log = Logger()

DIAGONAL = 'diagonal'
UP_SHIFT = 'up-shift'
DOWN_SHIFT = 'down-shift'
SPARSE = 'sparse'
KINDS = (DIAGONAL, UP_SHIFT, DOWN_SHIFT, SPARSE)

# Projector conventions: residue classes versus offset progressions
NORMALIZED = 'normalized'
LITERAL = 'literal'
MODES = (NORMALIZED, LITERAL)

# Ranges of k in the Ramanujan-type operators: 1 <= k <= n or 0 <= k < n
DIVISOR_RANGE = 'divisor'
RESIDUE_RANGE = 'residue'
K_RANGES = (DIVISOR_RANGE, RESIDUE_RANGE)


class DimensionMismatch(ValueError):
    """ Operators of different truncation dimensions were combined. """


def check_dim(dim):
    return check_positive(dim, 'dimension')


class FockOperator(object):
    """
    An immutable operator on the ``dim``-dimensional truncation.

    :param int dim: The truncation dimension ``D``.
    :param str kind: One of :data:`KINDS`.
    :param data:
        The diagonal vector for ``diagonal`` operators, a sparse matrix (or
        anything scipy accepts) for ``sparse`` ones, nothing for shifts.
    """

    def __init__(self, dim, kind, data=None):
        self.dim = check_dim(dim)
        if kind == DIAGONAL:
            data = np.array(data, dtype=complex)
            if data.shape != (self.dim,):
                raise DimensionMismatch(
                    'diagonal has shape %r, expected (%d,)' % (
                        data.shape, self.dim))
            data.flags.writeable = False
        elif kind in (UP_SHIFT, DOWN_SHIFT):
            data = None
        elif kind == SPARSE:
            data = sparse.csr_matrix(data, dtype=complex)
            if data.shape != (self.dim, self.dim):
                raise DimensionMismatch(
                    'matrix has shape %r, expected (%d, %d)' % (
                        data.shape, self.dim, self.dim))
        else:
            raise ValueError('Unknown operator kind %r' % (kind,))
        self.kind = kind
        self._data = data

    @classmethod
    def diagonal(cls, values):
        values = np.asarray(values, dtype=complex)
        return cls(len(values), DIAGONAL, values)

    @classmethod
    def from_entries(cls, dim, entries):
        """
        Build an operator from ``(row, col, value)`` triples. The result is
        diagonal if no off-diagonal entry is non-zero.
        """
        dim = check_dim(dim)
        rows, cols, values = [], [], []
        for row, col, value in entries:
            if not (0 <= row < dim and 0 <= col < dim):
                raise ValueError('entry (%d, %d) outside dimension %d' % (
                    row, col, dim))
            rows.append(row)
            cols.append(col)
            values.append(value)
        matrix = sparse.coo_matrix(
            (np.array(values, dtype=complex), (rows, cols)),
            shape=(dim, dim))
        return _from_sparse(matrix)

    @property
    def is_diagonal(self):
        return self.kind == DIAGONAL

    def diag(self):
        """ The main diagonal as a (read-only for diagonal kinds) vector. """
        if self.kind == DIAGONAL:
            return self._data
        if self.kind == SPARSE:
            return self._data.diagonal()
        return np.zeros(self.dim, dtype=complex)

    def to_sparse(self):
        if self.kind == DIAGONAL:
            return sparse.diags(np.array(self._data), format='csr')
        if self.kind == UP_SHIFT:
            return sparse.eye(self.dim, k=-1, dtype=complex, format='csr')
        if self.kind == DOWN_SHIFT:
            return sparse.eye(self.dim, k=1, dtype=complex, format='csr')
        return self._data

    def to_dense(self):
        return self.to_sparse().toarray()

    def entries(self):
        """ The non-zero entries as sorted ``(row, col, value)`` triples. """
        matrix = self.to_sparse().tocoo()
        triples = [
            (int(r), int(c), complex(v))
            for r, c, v in zip(matrix.row, matrix.col, matrix.data) if v != 0]
        return sorted(triples, key=lambda t: (t[0], t[1]))

    def norm_bound(self):
        """ The largest absolute entry of the matrix. """
        if self.kind == DIAGONAL:
            return float(np.max(np.abs(self._data)))
        if self.kind in (UP_SHIFT, DOWN_SHIFT):
            return 1.0 if self.dim > 1 else 0.0
        if self._data.nnz == 0:
            return 0.0
        return float(np.max(np.abs(self._data.data)))

    def max_deviation(self, other):
        """ The largest absolute entrywise difference from ``other``. """
        _check_dims(self, other)
        if self.is_diagonal and other.is_diagonal:
            return float(np.max(np.abs(self._data - other._data)))
        difference = (self.to_sparse() - other.to_sparse()).tocsr()
        if difference.nnz == 0:
            return 0.0
        return float(np.max(np.abs(difference.data)))

    def equals(self, other, tolerance=0.0):
        return self.max_deviation(other) <= tolerance

    def __repr__(self):
        if self.kind == DIAGONAL and self.dim <= 8:
            return '<FockOperator dim=%d diagonal %r>' % (
                self.dim, self._data.tolist())
        return '<FockOperator dim=%d %s>' % (self.dim, self.kind)


def _from_sparse(matrix):
    matrix = sparse.csr_matrix(matrix, dtype=complex)
    matrix.eliminate_zeros()
    coo = matrix.tocoo()
    if np.all(coo.row == coo.col):
        return FockOperator(matrix.shape[0], DIAGONAL, matrix.diagonal())
    return FockOperator(matrix.shape[0], SPARSE, matrix)


def _check_dims(*operators):
    dims = sorted(set(op.dim for op in operators))
    if len(dims) > 1:
        raise DimensionMismatch(
            'Operator dimensions differ: %s' % (', '.join(map(str, dims)),))


def op_mul(a, b):
    """ The operator product ``a b``. """
    _check_dims(a, b)
    if a.is_diagonal and b.is_diagonal:
        return FockOperator(a.dim, DIAGONAL, a.diag() * b.diag())
    return _from_sparse(a.to_sparse() @ b.to_sparse())


def op_add(a, b):
    _check_dims(a, b)
    if a.is_diagonal and b.is_diagonal:
        return FockOperator(a.dim, DIAGONAL, a.diag() + b.diag())
    return _from_sparse(a.to_sparse() + b.to_sparse())


def op_scale(c, a):
    if a.is_diagonal:
        return FockOperator(a.dim, DIAGONAL, c * a.diag())
    return _from_sparse(c * a.to_sparse())


def op_sub(a, b):
    return op_add(a, op_scale(-1, b))


def op_adjoint(a):
    if a.kind == DIAGONAL:
        return FockOperator(a.dim, DIAGONAL, np.conj(a.diag()))
    if a.kind == UP_SHIFT:
        return FockOperator(a.dim, DOWN_SHIFT)
    if a.kind == DOWN_SHIFT:
        return FockOperator(a.dim, UP_SHIFT)
    return _from_sparse(a.to_sparse().conj().T)


def op_apply(a, vector):
    """ Apply ``a`` to a state vector of length ``a.dim``. """
    vector = np.asarray(vector, dtype=complex)
    if vector.shape != (a.dim,):
        raise DimensionMismatch('vector has shape %r, expected (%d,)' % (
            vector.shape, a.dim))
    if a.kind == DIAGONAL:
        return a.diag() * vector
    out = np.zeros(a.dim, dtype=complex)
    if a.kind == UP_SHIFT:
        out[1:] = vector[:-1]
    elif a.kind == DOWN_SHIFT:
        out[:-1] = vector[1:]
    else:
        out = a.to_sparse() @ vector
    return out


def op_power(a, k):
    k = check_non_negative(k, 'k')
    result = identity(a.dim)
    for _ in range(k):
        result = op_mul(result, a)
    return result


def identity(dim):
    return FockOperator(dim, DIAGONAL, np.ones(check_dim(dim)))


def zero(dim):
    return FockOperator(dim, DIAGONAL, np.zeros(check_dim(dim)))


def basis_vector(i, dim):
    dim = check_dim(dim)
    i = check_non_negative(i, 'i')
    if i >= dim:
        raise ValueError('index %d outside dimension %d' % (i, dim))
    vector = np.zeros(dim, dtype=complex)
    vector[i] = 1
    return vector


def basis_projector(i, dim):
    """ The rank-one projector ``|i><i|``. """
    return FockOperator(dim, DIAGONAL, basis_vector(i, dim))


def phase_up(dim):
    """ ``E_+``: ``|m> -> |m+1>``, the top state is dropped. """
    return FockOperator(dim, UP_SHIFT)


def phase_down(dim):
    """ ``E_-``: ``|m+1> -> |m>`` and ``|0> -> 0``. """
    return FockOperator(dim, DOWN_SHIFT)


def shift_conjugate(a, j):
    """ ``E_+^j a E_-^j``. """
    j = check_non_negative(j)
    up = op_power(phase_up(a.dim), j)
    down = op_power(phase_down(a.dim), j)
    return op_mul(op_mul(up, a), down)


def roots_of_unity(n):
    """
    ``exp(2 pi i s / n)`` for ``s = 0..n-1``. Quarter turns are exact.
    """
    n = check_positive(n)
    s = np.arange(n)
    roots = np.exp(2j * np.pi * s / n)
    quarter = (4 * s) % n == 0
    roots[quarter] = np.array([1, 1j, -1, -1j])[(4 * s[quarter]) // n]
    return roots


def _check_mode(mode):
    if mode not in MODES:
        raise ValueError('projector mode must be one of %s, got %r' % (
            ', '.join(MODES), mode))


def projector(j, n, dim, mode):
    """
    The congruence projector ``Pi_j(n)``.

    :param str mode:
        ``normalized`` projects onto every index congruent to ``j`` mod
        ``n``; ``literal`` onto ``j, j + n, j + 2n, ...`` only. They agree
        for ``j < n``.
    """
    j = check_non_negative(j)
    n = check_positive(n)
    _check_mode(mode)
    m = np.arange(check_dim(dim))
    if mode == NORMALIZED:
        mask = m % n == j % n
    else:
        mask = (m >= j) & ((m - j) % n == 0)
    return FockOperator(dim, DIAGONAL, mask)


def projector_bar(j, k, dim):
    """ The literal projector with the rank-one term at ``j`` removed. """
    j = check_non_negative(j)
    k = check_positive(k, 'k')
    m = np.arange(check_dim(dim))
    return FockOperator(dim, DIAGONAL, (m > j) & ((m - j) % k == 0))


def rotated(n, dim):
    """ ``S_n``, with eigenvalue ``exp(2 pi i (m mod n) / n)`` on ``|m>``. """
    roots = roots_of_unity(n)
    return FockOperator(dim, DIAGONAL, roots[np.arange(check_dim(dim)) % n])


def projector_from_rotated(j, n, dim):
    """ ``(1/n) sum_k exp(-2 pi i k j / n) S_n^k``. """
    n = check_positive(n)
    j = check_non_negative(j)
    if j >= n:
        raise ValueError('j must be < n, got j=%d, n=%d' % (j, n))
    roots = roots_of_unity(n)
    s = rotated(n, dim)
    total = zero(dim)
    power = identity(dim)
    for k in range(n):
        total = op_add(total, op_scale(roots[(-k * j) % n], power))
        power = op_mul(power, s)
    return op_scale(1.0 / n, total)


def projector_prime_split(j, n, dim):
    """
    The product of ``Pi_{j mod p^a}(p^a)`` over the prime powers exactly
    dividing ``n``.
    """
    result = identity(dim)
    for p, a in factorize(n):
        q = p ** a
        result = op_mul(result, projector(j % q, q, dim, NORMALIZED))
    return result


class Theorem1Result(object):
    """
    The product of two normalized projectors next to the projector
    predicted from solving the congruences.
    """

    def __init__(self, product, predicted, solution):
        self.product = product
        self.predicted = predicted
        self.solution = solution
        self.deviation = product.max_deviation(predicted)

    @property
    def agrees(self):
        return self.deviation == 0


def theorem1_product(k, n, i, m, dim):
    n = check_positive(n)
    m = check_positive(m, 'm')
    if not 0 <= k < n:
        raise ValueError('k must satisfy 0 <= k < n, got k=%d, n=%d' % (k, n))
    if not 0 <= i < m:
        raise ValueError('i must satisfy 0 <= i < m, got i=%d, m=%d' % (i, m))

    product = op_mul(projector(k, n, dim, NORMALIZED),
                     projector(i, m, dim, NORMALIZED))
    solution = crt_solve(CongruenceSystem([(k, n), (i, m)]))
    if solution is None:
        predicted = zero(dim)
    else:
        predicted = projector(
            solution.residue, solution.modulus, dim, NORMALIZED)
    return Theorem1Result(product, predicted, solution)


def progression_split(j, n, r, dim, start=0):
    """
    Check that ``Pi_j(n)`` is the sum of ``Pi_{j + kn}(nr)`` over ``r``
    consecutive ``k`` beginning at ``start`` (0 or 1).
    """
    n = check_positive(n)
    r = check_positive(r, 'r')
    if not 0 <= j < n:
        raise ValueError('j must satisfy 0 <= j < n, got j=%d, n=%d' % (j, n))
    if start not in (0, 1):
        raise ValueError('start must be 0 or 1, got %r' % (start,))
    total = zero(dim)
    for k in range(start, start + r):
        total = op_add(
            total, projector((j + k * n) % (n * r), n * r, dim, NORMALIZED))
    deviation = projector(j, n, dim, NORMALIZED).max_deviation(total)
    return CheckResult.compare(
        'progression-split', (j, n, r, start), deviation, 0.0)


def check_divisor_product_law(j, n, k, m, dim):
    """
    For ``n | m``: ``Pi_j(n) Pi_k(m)`` is ``Pi_k(m)`` when ``k = j mod n``
    and zero otherwise.
    """
    if m % n:
        raise ValueError('%d does not divide %d' % (n, m))
    product = op_mul(projector(j, n, dim, NORMALIZED),
                     projector(k, m, dim, NORMALIZED))
    if (k - j) % n == 0:
        expected = projector(k, m, dim, NORMALIZED)
    else:
        expected = zero(dim)
    return CheckResult.compare(
        'divisor-product', (j, n, k, m), product.max_deviation(expected), 0.0)


def coprime_residues(n, k_range=DIVISOR_RANGE):
    n = check_positive(n)
    if k_range == DIVISOR_RANGE:
        ks = range(1, n + 1)
    elif k_range == RESIDUE_RANGE:
        ks = range(n)
    else:
        raise ValueError('k_range must be one of %s, got %r' % (
            ', '.join(K_RANGES), k_range))
    return [k for k in ks if math.gcd(k, n) == 1]


def ramanujan_c(j, n, dim):
    """
    ``C_j(n) = sum_k exp(-2 pi i k j / n) S_n^k`` over ``k`` coprime to
    ``n``. Evaluated entrywise: at ``|m>`` the summand is the root of
    unity ``exp(2 pi i k (m - j) / n)``.
    """
    j = check_non_negative(j)
    n = check_positive(n)
    roots = roots_of_unity(n)
    shifted = np.arange(check_dim(dim)) % n - j
    values = np.zeros(dim, dtype=complex)
    for k in coprime_residues(n):
        values += roots[(k * shifted) % n]
    return FockOperator(dim, DIAGONAL, values)


def ramanujan_t(j, n, dim, k_range=DIVISOR_RANGE):
    """
    ``T_j(n) = sum_k exp(2 pi i k j / n) Pi_{j+k}(n)`` over ``k`` coprime
    to ``n``, with literal projectors.
    """
    j = check_non_negative(j)
    n = check_positive(n)
    roots = roots_of_unity(n)
    values = np.zeros(check_dim(dim), dtype=complex)
    for k in coprime_residues(n, k_range):
        values += roots[(k * j) % n] * projector(j + k, n, dim, LITERAL).diag()
    return FockOperator(dim, DIAGONAL, values)


def ramanujan_sum_diagonal(n, dim):
    """ The exact integer diagonal of ``C_0(n)``: ``c_n(m)`` at ``|m>``. """
    n = check_positive(n)
    values = np.zeros(check_dim(dim), dtype=np.int64)
    for d in divisors(n):
        mu = mobius(n // d)
        if mu:
            values[::d] += mu * d
    return values


def ramanujan_c_domain(n, j):
    """
    Whether ``C_j(n)`` equals the Dirichlet product ``(mu * nu_1 Pi_j)(n)``
    of literal projectors: iff ``c_n(i) == 0`` for ``1 <= i <= j``.
    """
    return all(ramanujan_sum(n, i) == 0 for i in range(1, j + 1))


def ramanujan_t_domain(n, j, k_range=DIVISOR_RANGE):
    """
    Whether ``T_j(n)`` equals ``(nu_0 * mu Pi_j)(n)`` of literal projectors:
    iff ``n | j``, and for ``n == 1`` only with the residue range of ``k``.
    """
    if n == 1:
        return k_range == RESIDUE_RANGE
    return j % n == 0


def number_op(alpha, j, dim):
    """
    The truncated operator ``N_{alpha,j}``: zero on ``|m>`` for ``m <= j``
    and the divisor sum of ``alpha`` over ``m - j`` above.
    """
    j = check_non_negative(j)
    values = np.zeros(check_dim(dim), dtype=complex)
    for m in range(j + 1, dim):
        values[m] = dirichlet_conv(NU0, alpha, m - j)
    return FockOperator(dim, DIAGONAL, values)


def number_op_series(alpha, j, dim):
    """ ``N_{alpha,j}`` from its series ``sum_k alpha(k) Pibar_j(k)``. """
    total = zero(dim)
    for k in range(1, dim + 1):
        total = op_add(total, op_scale(alpha(k), projector_bar(j, k, dim)))
    return total


class OperatorSeq(object):
    """
    An operator-valued arithmetic function ``n -> A(n)`` at a fixed
    truncation, evaluated lazily and memoized.
    """

    def __init__(self, dim, generator, name=None):
        self.dim = check_dim(dim)
        self._generator = generator
        self._memo = {}
        self.name = name or getattr(generator, '__name__', 'A')

    def __call__(self, n):
        try:
            return self._memo[n]
        except KeyError:
            pass
        n = check_positive(n)
        operator = self._generator(n)
        if operator.dim != self.dim:
            raise DimensionMismatch(
                '%s(%d) has dimension %d, expected %d' % (
                    self.name, n, operator.dim, self.dim))
        return self._memo.setdefault(n, operator)

    def __repr__(self):
        return '<OperatorSeq %s dim=%d>' % (self.name, self.dim)
