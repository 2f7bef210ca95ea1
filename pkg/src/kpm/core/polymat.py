"""Unimodular reductions of matrices over the Euclidean ring ``Q[t]``.

Entries are :class:`LaurentPoly` values of nonnegative valuation. Every
routine tracks the transformation and its inverse, both with polynomial
entries and constant determinant.
"""
from ..errors import DegenerateDataError, MalformedInputError
from .laurent import LaurentPoly
from .matrix import LAURENT, Matrix

_ONE = LaurentPoly(1)
_ZERO = LaurentPoly()


def _ident(n):
    return [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]


def _check_poly(m):
    for r in m.rows():
        for x in r:
            if not x.is_zero() and not x.is_polynomial():
                raise MalformedInputError("expected polynomial entries (valuation >= 0)")


def column_hermite(b: Matrix):
    """Column operations bringing ``b`` (full row rank) to ``[H | 0]``.

    Returns ``(H, V, Vinv)`` with ``b @ V == [H | 0]``, ``H`` lower
    triangular. The last ``ncols - nrows`` columns of ``V`` are a
    ``Q[t]``-basis of the polynomial right kernel of ``b``.
    """
    _check_poly(b)
    m, n = b.nrows, b.ncols
    a = [list(r) for r in b.rows()]
    v = _ident(n)
    vinv = _ident(n)

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def sub_col(j, i, q):
        # col_j -= q * col_i
        for row in a:
            if row[i] != 0:
                row[j] = row[j] - q * row[i]
        for row in v:
            if row[i] != 0:
                row[j] = row[j] - q * row[i]
        vinv[i] = [x + q * y for x, y in zip(vinv[i], vinv[j])]

    for i in range(m):
        while True:
            nz = [j for j in range(i, n) if a[i][j] != 0]
            if not nz:
                raise DegenerateDataError(f"row {i} is dependent on the previous rows")
            p = min(nz, key=lambda j: (a[i][j].degree, j))
            if p != i:
                swap_cols(i, p)
            clean = True
            for j in range(i + 1, n):
                if a[i][j] != 0:
                    q, r = a[i][j].poly_divmod(a[i][i])
                    if q != 0:
                        sub_col(j, i, q)
                    if r != 0:
                        clean = False
            if clean:
                break
    h = Matrix([row[:m] for row in a], m, LAURENT)
    return h, Matrix(v, n, LAURENT), Matrix(vinv, n, LAURENT)


def row_hermite(c: Matrix):
    """Row operations bringing ``c`` (full column rank) to ``[H; 0]``.

    Returns ``(H, U, Uinv)`` with ``U @ c == [H; 0]``.
    """
    h, v, vinv = column_hermite(c.T)
    return h.T, v.T, vinv.T


def _col_degree(a, j):
    return max(row[j].degree for row in a)


def column_reduce_2x2(p: Matrix):
    """Column-reduce a nonsingular 2x2 polynomial matrix.

    Returns ``(G, V, Vinv, degrees)`` with ``p @ V == G`` and the leading
    column coefficient matrix of ``G`` nonsingular.
    """
    _check_poly(p)
    a = [list(r) for r in p.rows()]
    v = _ident(2)
    vinv = _ident(2)
    while True:
        degs = [_col_degree(a, j) for j in range(2)]
        if any(d == float("-inf") for d in degs):
            raise MalformedInputError("column reduction of a singular matrix")
        lc = [[a[i][j].coeff(degs[j]) for i in range(2)] for j in range(2)]
        if lc[0][0] * lc[1][1] - lc[0][1] * lc[1][0] != 0:
            break
        i, k = (0, 1) if degs[0] >= degs[1] else (1, 0)
        comp = 0 if lc[k][0] != 0 else 1
        gamma = lc[i][comp] / lc[k][comp]
        q = LaurentPoly.monomial(degs[i] - degs[k], gamma)
        for row in a:
            row[i] = row[i] - q * row[k]
        for row in v:
            row[i] = row[i] - q * row[k]
        vinv[k] = [x + q * y for x, y in zip(vinv[k], vinv[i])]
    degs = tuple(_col_degree(a, j) for j in range(2))
    return Matrix(a, 2, LAURENT), Matrix(v, 2, LAURENT), Matrix(vinv, 2, LAURENT), degs


def smith_2x2(p: Matrix):
    """Smith normal form over ``Q[t]`` of a nonsingular 2x2 polynomial matrix.

    Returns ``(U, D, V)`` with ``U @ p @ V == D`` diagonal, ``D[0,0]`` dividing
    ``D[1,1]``, and ``U``, ``V`` of constant nonzero determinant.
    """
    _check_poly(p)
    a = [list(r) for r in p.rows()]
    u = _ident(2)
    v = _ident(2)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    while True:
        nz = [(i, j) for i in range(2) for j in range(2) if a[i][j] != 0]
        if not nz:
            raise MalformedInputError("Smith form of the zero matrix")
        i, j = min(nz, key=lambda ij: (a[ij[0]][ij[1]].degree, ij))
        if i:
            swap_rows(0, 1)
        if j:
            swap_cols(0, 1)
        if a[1][0] != 0:
            q, _ = a[1][0].poly_divmod(a[0][0])
            a[1] = [x - q * y for x, y in zip(a[1], a[0])]
            u[1] = [x - q * y for x, y in zip(u[1], u[0])]
        if a[0][1] != 0:
            q, _ = a[0][1].poly_divmod(a[0][0])
            for row in a:
                row[1] = row[1] - q * row[0]
            for row in v:
                row[1] = row[1] - q * row[0]
        if a[1][0] != 0 or a[0][1] != 0:
            continue
        if a[1][1] == 0 or a[1][1].poly_divmod(a[0][0])[1] == 0:
            break
        a[0] = [x + y for x, y in zip(a[0], a[1])]
        u[0] = [x + y for x, y in zip(u[0], u[1])]
    return Matrix(u, 2, LAURENT), Matrix(a, 2, LAURENT), Matrix(v, 2, LAURENT)
