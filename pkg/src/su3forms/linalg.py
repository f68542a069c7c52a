"""Exact dense linear algebra over the scalar tower (and tolerant float mode)."""

from fractions import Fraction

from .errors import SingularMetric
from .scalars import BigFloat, ZERO_TOL, scalar_div, scalar_is_zero, scalar_sign

Q0 = Fraction(0)
Q1 = Fraction(1)


def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return [[_dot(a[i], [b[k][j] for k in range(m)]) for j in range(p)] for i in range(n)]


def mat_vec(a, v):
    return [_dot(row, v) for row in a]


def _dot(row, col):
    total = Q0
    for x, y in zip(row, col):
        total = total + x * y
    return total


def identity(n):
    return [[Q1 if i == j else Q0 for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def _pivot_zero(x, tol):
    if isinstance(x, BigFloat):
        return scalar_is_zero(x, tol)
    return scalar_is_zero(x)


def solve(a, rhs_cols, tol=ZERO_TOL):
    """Solve a X = B for possibly many right-hand columns; exact Gauss-Jordan.

    a: n x n, rhs_cols: n x m.  Raises SingularMetric when the matrix is singular.
    """
    n = len(a)
    m = len(rhs_cols[0])
    aug = [list(a[i]) + list(rhs_cols[i]) for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not _pivot_zero(aug[r][col], tol):
                piv = r
                break
        if piv is None:
            raise SingularMetric("singular matrix in solve")
        aug[col], aug[piv] = aug[piv], aug[col]
        d = aug[col][col]
        aug[col] = [scalar_div(x, d) for x in aug[col]]
        for r in range(n):
            if r == col:
                continue
            f = aug[r][col]
            if _pivot_zero(f, tol):
                continue
            aug[r] = [xr - f * xc for xr, xc in zip(aug[r], aug[col])]
    return [row[n : n + m] for row in aug]


def invert(a, tol=ZERO_TOL):
    return solve(a, identity(len(a)), tol)


def det(a, tol=ZERO_TOL):
    """Determinant by fraction-producing Gaussian elimination."""
    n = len(a)
    rows = [list(r) for r in a]
    sign_flips = 0
    result = Q1
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not _pivot_zero(rows[r][col], tol):
                piv = r
                break
        if piv is None:
            return Q0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            sign_flips += 1
        d = rows[col][col]
        result = result * d
        for r in range(col + 1, n):
            f = scalar_div(rows[r][col], d)
            if _pivot_zero(f, tol):
                continue
            rows[r] = [xr - f * xc for xr, xc in zip(rows[r], rows[col])]
    return -result if sign_flips % 2 else result


def kernel_basis(a, tol=ZERO_TOL):
    """Basis of the nullspace of a (rows x cols) as a list of column vectors."""
    if not a:
        return []
    nrows, ncols = len(a), len(a[0])
    rows = [list(r) for r in a]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for rr in range(r, nrows):
            if not _pivot_zero(rows[rr][c], tol):
                piv = rr
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        d = rows[r][c]
        rows[r] = [scalar_div(x, d) for x in rows[r]]
        for rr in range(nrows):
            if rr != r and not _pivot_zero(rows[rr][c], tol):
                f = rows[rr][c]
                rows[rr] = [xr - f * xc for xr, xc in zip(rows[rr], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Q0] * ncols
        v[fc] = Q1
        for ri, pc in enumerate(pivots):
            v[pc] = -rows[ri][fc]
        basis.append(v)
    return basis


def is_positive_definite(a, tol=ZERO_TOL):
    """Sylvester criterion with exact signs (or toleranced for floats)."""
    n = len(a)
    for k in range(1, n + 1):
        minor = [row[:k] for row in a[:k]]
        d = det(minor, tol)
        if isinstance(d, BigFloat):
            if scalar_is_zero(d, tol):
                return False
            if d.sign() <= 0:
                return False
        else:
            if scalar_sign(d) <= 0:
                return False
    return True


def is_symmetric(a, tol=ZERO_TOL):
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            diff = a[i][j] - a[j][i]
            if isinstance(diff, BigFloat):
                if not scalar_is_zero(diff, tol):
                    return False
            elif not scalar_is_zero(diff):
                return False
    return True
