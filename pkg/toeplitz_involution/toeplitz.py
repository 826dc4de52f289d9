# SPDX-License-Identifier: GPL-3.0-or-later
# vim: et:ts=4
"""
The lower Hessenberg Toeplitz matrices T(k) and their principal minors.

T(k) is the k x k matrix with entry x_{i-j+1} at row i, column j (1-based),
where x_0 stands for 1 and x_m for 0 when m <= -1. Its determinant m_k is a
polynomial in x1..xk. Expanding along the first column gives

    m_k = sum_{i=1}^{k} (-1)^(i-1) x_i m_{k-i},   m_0 = 1,

which is how minor_table computes every m_k. The two determinant routines
never feed the rest of the package; they exist to check the recursion.
Everything here is division-free and works over any supported ring.
"""

import itertools
from typing import List, Sequence

import logging
msg = logging.getLogger(__name__)
from toeplitz_involution import RangeError, SizeTooLarge, SpecMismatch, TableError
from toeplitz_involution.poly import (Polynomial, poly_add, poly_format, poly_mul,
                                      poly_neg, poly_sub)
from toeplitz_involution.ring import RingSpec
from toeplitz_involution.util import _

# factorial cost guard of det_leibniz
LEIBNIZ_MAX_SIZE = 8


class PolyMatrix:
    """
    A square matrix of polynomials sharing one ring and one variable count.
    Indices of the public methods are 1-based.
    """

    def __init__(self, ring: RingSpec, nvars: int, entries: Sequence[Sequence[Polynomial]]):
        rows = tuple(tuple(row) for row in entries)
        size = len(rows)
        for row in rows:
            if len(row) != size:
                raise RangeError(_("matrix rows must have %d entries") % size)
            for entry in row:
                if entry.ring != ring or entry.nvars != nvars:
                    raise SpecMismatch(_("entry %s does not live in %s[x1..x%d]")
                                       % (poly_format(entry), ring, nvars))
        self.ring = ring
        self.nvars = nvars
        self.size = size
        self.entries = rows

    def entry(self, i, j):
        if not (1 <= i <= self.size and 1 <= j <= self.size):
            raise RangeError(_("no entry (%d, %d) in a %d x %d matrix") % (i, j, self.size, self.size))
        return self.entries[i - 1][j - 1]

    def rows(self):
        return [list(row) for row in self.entries]

    def principal_submatrix(self, k):
        """The top-left k x k block."""
        if not 0 <= k <= self.size:
            raise RangeError(_("no %d x %d principal submatrix in size %d") % (k, k, self.size))
        return PolyMatrix(self.ring, self.nvars, [row[:k] for row in self.entries[:k]])

    def replace_column(self, j, column: Sequence[Polynomial]):
        if not 1 <= j <= self.size:
            raise RangeError(_("no column %d in size %d") % (j, self.size))
        if len(column) != self.size:
            raise RangeError(_("column of length %d for size %d") % (len(column), self.size))
        rows = []
        for row, value in zip(self.entries, column):
            row = list(row)
            row[j - 1] = value
            rows.append(row)
        return PolyMatrix(self.ring, self.nvars, rows)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.ring, self.nvars, self.entries) == (other.ring, other.nvars, other.entries)

    def __hash__(self):
        return hash((self.ring, self.nvars, self.entries))

    def __str__(self):
        return "\n".join("[" + ", ".join(poly_format(e) for e in row) + "]" for row in self.entries)


def _check_order(n, k, low=1):
    if n < 0:
        raise RangeError(_("negative variable count %d") % n)
    if not low <= k <= n:
        raise RangeError(_("order %d outside %d..%d") % (k, low, n))


def build_toeplitz(ring: RingSpec, n: int, k: int) -> PolyMatrix:
    _check_order(n, k)
    zero = Polynomial.zero(ring, n)
    one = Polynomial.one(ring, n)
    rows = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            d = i - j + 1
            if d >= 1:
                row.append(Polynomial.generator(ring, n, d))
            elif d == 0:
                row.append(one)
            else:
                row.append(zero)
        rows.append(row)
    return PolyMatrix(ring, n, rows)


def first_column_matrix(ring: RingSpec, n: int, a: Sequence[Polynomial]) -> PolyMatrix:
    """T(k) with its first column replaced by a_1..a_k, k = len(a)."""
    _check_order(n, len(a))
    return build_toeplitz(ring, n, len(a)).replace_column(1, a)


#-- Minors by recursion --{{{1


class MinorTable:
    """
    m_0 .. m_n over one ring. m_0 is the constant 1 and m_k may only involve
    x1..xk.
    """

    def __init__(self, ring: RingSpec, nvars: int, minors: Sequence[Polynomial]):
        minors = tuple(minors)
        if len(minors) != nvars + 1:
            raise TableError(_("a table for n = %d holds %d minors, not %d")
                             % (nvars, nvars + 1, len(minors)))
        for k, m in enumerate(minors):
            if m.ring != ring or m.nvars != nvars:
                raise SpecMismatch(_("m%d does not live in %s[x1..x%d]") % (k, ring, nvars))
            if any(j > k for j in m.support()):
                raise TableError(_("m%d = %s involves variables beyond x%d")
                                 % (k, poly_format(m), k))
        if minors[0] != Polynomial.one(ring, nvars):
            raise TableError(_("m0 must be 1, not %s") % poly_format(minors[0]))
        self.ring = ring
        self.nvars = nvars
        self.minors = minors

    def __getitem__(self, k):
        return self.minors[k]

    def __len__(self):
        return len(self.minors)

    def replace(self, k, p: Polynomial):
        """A copy with m_k replaced by p, for feeding inconsistent tables."""
        _check_order(self.nvars, k)
        minors = list(self.minors)
        minors[k] = p
        return MinorTable(self.ring, self.nvars, minors)

    def __eq__(self, other):
        if not isinstance(other, MinorTable):
            return NotImplemented
        return (self.ring, self.nvars, self.minors) == (other.ring, other.nvars, other.minors)

    def __hash__(self):
        return hash((self.ring, self.nvars, self.minors))


def _alternating_sum(first: Sequence[Polynomial], second: Sequence[Polynomial], ring, n):
    """sum_{i=1}^{k} (-1)^(i-1) first[i-1] * second[k-i], k = len(first)."""
    total = Polynomial.zero(ring, n)
    k = len(first)
    for i in range(1, k + 1):
        term = poly_mul(first[i - 1], second[k - i])
        total = poly_add(total, term) if i % 2 else poly_sub(total, term)
    return total


def _minors_upto(ring, n, k):
    minors = [Polynomial.one(ring, n)]
    generators = [Polynomial.generator(ring, n, i) for i in range(1, k + 1)]
    for j in range(1, k + 1):
        minors.append(_alternating_sum(generators[:j], minors, ring, n))
    return minors


def minor_table(ring: RingSpec, n: int) -> MinorTable:
    msg.debug(_("computing m0..m%d over %s"), n, ring)
    if n < 0:
        raise RangeError(_("negative variable count %d") % n)
    return MinorTable(ring, n, _minors_upto(ring, n, n))


def minor_recursive(ring: RingSpec, n: int, k: int) -> Polynomial:
    _check_order(n, k, low=0)
    return _minors_upto(ring, n, k)[k]


def first_column_det(ring: RingSpec, n: int, a: Sequence[Polynomial]) -> Polynomial:
    """
    Determinant of T(k) with first column a_1..a_k, obtained as
    sum_{i=1}^{k} (-1)^(i-1) a_i m_{k-i} without forming the matrix.
    """
    k = len(a)
    _check_order(n, k)
    for i, entry in enumerate(a, 1):
        if entry.ring != ring or entry.nvars != n:
            raise SpecMismatch(_("a%d does not live in %s[x1..x%d]") % (i, ring, n))
    minors = _minors_upto(ring, n, k - 1)
    return _alternating_sum(list(a), minors, ring, n)


def recover_generator(ring: RingSpec, n: int, k: int, minors: MinorTable) -> Polynomial:
    """
    Run r_0 = 1, r_j = sum_{i=1}^{j} (-1)^(i-1) minors[i] r_{j-i} up to j = k.
    With the true table r_k is the generator x_k.
    """
    _check_order(n, k)
    if minors.ring != ring or minors.nvars != n:
        raise SpecMismatch(_("table over %s[x1..x%d] used in %s[x1..x%d]")
                           % (minors.ring, minors.nvars, ring, n))
    recovered = [Polynomial.one(ring, n)]
    for j in range(1, k + 1):
        recovered.append(_alternating_sum(minors.minors[1:j + 1], recovered, ring, n))
    return recovered[k]


#-- Determinant oracles --{{{1


def _permutation_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_leibniz(M: PolyMatrix, max_size=LEIBNIZ_MAX_SIZE) -> Polynomial:
    """Sum over all permutations; refuses matrices above max_size."""
    if M.size > max_size:
        raise SizeTooLarge(_("Leibniz determinant limited to size %d, got %d") % (max_size, M.size))
    msg.debug(_("Leibniz determinant of size %d"), M.size)
    total = Polynomial.zero(M.ring, M.nvars)
    one = Polynomial.one(M.ring, M.nvars)
    for perm in itertools.permutations(range(M.size)):
        product = one
        for i, j in enumerate(perm):
            entry = M.entries[i][j]
            if entry.is_zero():
                break
            product = poly_mul(product, entry)
        else:
            if _permutation_sign(perm) > 0:
                total = poly_add(total, product)
            else:
                total = poly_sub(total, product)
    return total


def _dot(row: Sequence[Polynomial], column: Sequence[Polynomial], zero: Polynomial):
    total = zero
    for a, b in zip(row, column):
        if not a.is_zero() and not b.is_zero():
            total = poly_add(total, poly_mul(a, b))
    return total


def det_berkowitz(M: PolyMatrix) -> Polynomial:
    """
    Berkowitz's algorithm: the characteristic polynomial of each leading
    block is the previous one multiplied by a lower triangular Toeplitz
    matrix built from the new row and column. Only ring operations are used.
    """
    msg.debug(_("Berkowitz determinant of size %d"), M.size)
    ring, n, size = M.ring, M.nvars, M.size
    zero = Polynomial.zero(ring, n)
    one = Polynomial.one(ring, n)
    if size == 0:
        return one
    A = M.entries
    # coefficients of det(t I - A_r), highest degree first
    coeffs: List[Polynomial] = [one, poly_neg(A[0][0])]
    for r in range(1, size):
        row = A[r][:r]
        column = [A[i][r] for i in range(r)]
        toeplitz = [one, poly_neg(A[r][r])]
        vector = column
        for _step in range(r):
            toeplitz.append(poly_neg(_dot(row, vector, zero)))
            vector = [_dot(A[i][:r], vector, zero) for i in range(r)]
        new = []
        for i in range(r + 2):
            total = zero
            for j in range(max(0, i - len(toeplitz) + 1), min(i, r) + 1):
                q, c = toeplitz[i - j], coeffs[j]
                if not q.is_zero() and not c.is_zero():
                    total = poly_add(total, poly_mul(q, c))
            new.append(total)
        coeffs = new
    constant = coeffs[size]
    return constant if size % 2 == 0 else poly_neg(constant)


DETERMINANT_METHODS = {
    "leibniz": det_leibniz,
    "berkowitz": det_berkowitz,
}


def determinant(M: PolyMatrix, method="berkowitz", max_size=LEIBNIZ_MAX_SIZE) -> Polynomial:
    """det M by one of DETERMINANT_METHODS; max_size only bounds leibniz."""
    try:
        routine = DETERMINANT_METHODS[method]
    except KeyError:
        raise RangeError(_("unknown determinant method '%s'") % method)
    if routine is det_leibniz:
        return routine(M, max_size=max_size)
    return routine(M)
