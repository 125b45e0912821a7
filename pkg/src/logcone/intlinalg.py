"""Exact integer and rational linear algebra.

Everything here works on plain ``list[list[int]]`` matrices with Python's
arbitrary-precision integers; no floating point enters any computation.
These routines back the lattice invariants (kernels, cokernel torsion,
lattice indices) used by the rest of the package.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def copy_matrix(M: Matrix) -> Matrix:
    return [row[:] for row in M]


def transpose(M: Matrix) -> Matrix:
    if not M:
        return []
    return [list(col) for col in zip(*M)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A or not B:
        return [[0] * (len(B[0]) if B else 0) for _ in A]
    bt = transpose(B)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in A]


def mat_vec(M: Matrix, v: list) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in M]


def dims(M: Matrix) -> tuple[int, int]:
    return len(M), len(M[0]) if M else 0


def _swap_rows(M: Matrix, i: int, j: int) -> None:
    M[i], M[j] = M[j], M[i]


def _swap_cols(M: Matrix, i: int, j: int) -> None:
    for row in M:
        row[i], row[j] = row[j], row[i]


def _add_row(M: Matrix, dst: int, src: int, c: int) -> None:
    M[dst] = [a + c * b for a, b in zip(M[dst], M[src])]


def _add_col(M: Matrix, dst: int, src: int, c: int) -> None:
    for row in M:
        row[dst] += c * row[src]


def _negate_row(M: Matrix, i: int) -> None:
    M[i] = [-a for a in M[i]]


def smith_normal_form(M: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U*M*V = D, U and V unimodular, D diagonal.

    The diagonal entries are non-negative and satisfy d1 | d2 | ... .
    Pivots are chosen by minimal absolute value to limit coefficient growth.
    """
    m, n = dims(M)
    A = copy_matrix(M)
    U = identity(m)
    V = identity(n)
    t = 0
    while t < m and t < n:
        # locate a nonzero pivot of minimal absolute value in A[t:, t:]
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0 and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            _swap_rows(A, t, pi)
            _swap_rows(U, t, pi)
        if pj != t:
            _swap_cols(A, t, pj)
            _swap_cols(V, t, pj)
        while True:
            # clear column t below the pivot
            done = True
            for i in range(t + 1, m):
                if A[i][t] != 0:
                    q = A[i][t] // A[t][t]
                    _add_row(A, i, t, -q)
                    _add_row(U, i, t, -q)
                    if A[i][t] != 0:
                        _swap_rows(A, t, i)
                        _swap_rows(U, t, i)
                        done = False
            if not done:
                continue
            # clear row t to the right of the pivot
            for j in range(t + 1, n):
                if A[t][j] != 0:
                    q = A[t][j] // A[t][t]
                    _add_col(A, j, t, -q)
                    _add_col(V, j, t, -q)
                    if A[t][j] != 0:
                        _swap_cols(A, t, j)
                        _swap_cols(V, t, j)
                        done = False
            if not done:
                continue
            # force the pivot to divide every remaining entry
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % A[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _add_row(A, t, offender, 1)
            _add_row(U, t, offender, 1)
        if A[t][t] < 0:
            _negate_row(A, t)
            _negate_row(U, t)
        t += 1
    return U, A, V


def elementary_divisors(M: Matrix) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form of M."""
    _, D, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(dims(D))) if D[i][i] != 0]


def rank(M: Matrix) -> int:
    return len(elementary_divisors(M))


def kernel_basis(M: Matrix) -> list[list[int]]:
    """Integer basis of {x : M x = 0}; rows of the result are the basis."""
    m, n = dims(M)
    _, D, V = smith_normal_form(M)
    r = len([1 for i in range(min(m, n)) if D[i][i] != 0])
    cols = transpose(V)
    return [cols[j] for j in range(r, n)]


def left_kernel_basis(M: Matrix) -> list[list[int]]:
    """Integer basis of {y : y M = 0}."""
    return kernel_basis(transpose(M))


def hermite_row_basis(M: Matrix) -> list[list[int]]:
    """Canonical (row-style) Hermite normal form basis of the row lattice.

    The result is the unique HNF basis: positive pivots with entries above
    each pivot reduced into [0, pivot).  Two integer matrices span the same
    row lattice iff their Hermite bases are equal, which is how lattice
    equality is decided throughout the package.
    """
    A = copy_matrix(M)
    if not A:
        return []
    m, n = dims(A)
    r = 0
    for c in range(n):
        # gcd-reduce column c over rows >= r into a single entry at row r
        while True:
            rows = [i for i in range(r, m) if A[i][c] != 0]
            if not rows:
                break
            i0 = min(rows, key=lambda i: abs(A[i][c]))
            if i0 != r:
                _swap_rows(A, r, i0)
            nonzero_left = False
            for i in range(r + 1, m):
                if A[i][c] != 0:
                    q = A[i][c] // A[r][c]
                    _add_row(A, i, r, -q)
                    if A[i][c] != 0:
                        nonzero_left = True
            if not nonzero_left:
                break
        if r < m and A[r][c] != 0:
            if A[r][c] < 0:
                _negate_row(A, r)
            for i in range(r):
                q = A[i][c] // A[r][c]
                if q:
                    _add_row(A, i, r, -q)
            r += 1
            if r == m:
                break
    return [row for row in A[:r]]


def det(M: Matrix) -> int:
    """Determinant via fraction-free Bareiss elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = copy_matrix(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    _swap_rows(A, k, i)
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def solve_rational(A: Matrix, b: list) -> list[Fraction] | None:
    """One exact solution of A x = b over the rationals, or None."""
    m, n = dims(A)
    aug = [[Fraction(x) for x in row] + [Fraction(bv)] for row, bv in zip(A, b)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    return x


def express_in_basis(basis: list[list[int]], v: list[int]) -> list[Fraction] | None:
    """Coefficients c with sum(c_i * basis_i) = v, or None if v is outside the span."""
    if not basis:
        return [] if all(x == 0 for x in v) else None
    return solve_rational(transpose(basis), v)


def lattice_index(sub: list[list[int]], sup: list[list[int]]) -> int:
    """Index of the lattice spanned by ``sub`` inside the one spanned by ``sup``.

    Both are given as row lists and must span lattices of equal rank, with
    sub contained in sup; raises ValueError otherwise.
    """
    sub_h = hermite_row_basis(sub)
    sup_h = hermite_row_basis(sup)
    if len(sub_h) != len(sup_h):
        raise ValueError("lattices have different ranks")
    coeffs = []
    for v in sub_h:
        c = express_in_basis(sup_h, v)
        if c is None or any(x.denominator != 1 for x in c):
            raise ValueError("first lattice is not a sublattice of the second")
        coeffs.append([int(x) for x in c])
    return abs(det(coeffs))


def primitive(v: list[int]) -> list[int]:
    """Scale an integer vector by 1/gcd; direction (sign) is preserved."""
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g == 0:
        return list(v)
    w = [x // g for x in v]
    return w


def saturate(rows: list[list[int]], ambient_dim: int) -> list[list[int]]:
    """Basis of the saturation of the row lattice inside Z^ambient_dim.

    Computed as the integer kernel of the kernel: the saturation of L is
    (L^perp)^perp, and kernels of integer matrices are always saturated.
    """
    if not rows:
        return []
    perp = kernel_basis(rows)
    if not perp:
        # full-rank lattice: saturation is all of Z^n
        return identity(ambient_dim)
    return kernel_basis(perp)
