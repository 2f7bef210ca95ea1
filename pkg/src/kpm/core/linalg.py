"""Exact linear algebra over the rationals and over number fields."""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import sympy

from ..errors import ConsistencyError, MalformedInputError
from . import upoly
from .matrix import QQ, Matrix, coerce, is_field
from .numberfield import FieldElement, SimpleExtension


@dataclass(frozen=True)
class RankKernelImage:
    rank: int
    kernel: tuple  # basis vectors of the right kernel, as tuples
    image: tuple  # basis vectors of the column space (original columns)
    pivots: tuple


def _lcm(a, b):
    return a * b // math.gcd(a, b)


def _echelon_integer(rows, ncols):
    """Fraction-free (Bareiss) row echelon form of a rational matrix.

    Rows are first scaled to integers. Among the candidate pivots of a column
    the one of least absolute value is chosen, which keeps entries small.
    """
    a = []
    for r in rows:
        den = 1
        for x in r:
            den = _lcm(den, x.denominator)
        a.append([int(x * den) for x in r])
    m = len(a)
    prev = 1
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        cands = [i for i in range(r, m) if a[i][c] != 0]
        if not cands:
            continue
        p = min(cands, key=lambda i: (abs(a[i][c]), i))
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, m):
            lead = a[i][c]
            for j in range(c + 1, ncols):
                q, rem = divmod(piv * a[i][j] - lead * a[r][j], prev)
                if rem:
                    raise ConsistencyError("inexact fraction-free division")
                a[i][j] = q
            a[i][c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rref(rows, ncols, ring=QQ):
    """Reduced row echelon form over a field. Returns (nonzero rows, pivots)."""
    zero = coerce(0, ring)
    a = [[coerce(x, ring) for x in r] for r in rows]
    m = len(a)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv if x != 0 else zero for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _kernel_from_echelon(ech, pivots, ncols, ring):
    zero, one = coerce(0, ring), coerce(1, ring)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        x = [zero] * ncols
        x[f] = one
        for k in range(len(pivots) - 1, -1, -1):
            pc = pivots[k]
            s = zero
            for j in range(pc + 1, ncols):
                if ech[k][j] != 0 and x[j] != 0:
                    s = s + ech[k][j] * x[j]
            x[pc] = -s / ech[k][pc] if s != 0 else zero
        basis.append(tuple(x))
    return basis


def rank_kernel_image(m: Matrix) -> RankKernelImage:
    """Rank, right-kernel basis and column-space basis of a matrix over a field."""
    if not is_field(m.ring):
        raise MalformedInputError("rank_kernel_image needs entries in a field")
    if m.ring == QQ:
        ech, pivots = _echelon_integer(m.rows(), m.ncols)
        ech = [[Fraction(x) for x in r] for r in ech]
    else:
        ech, pivots = rref(m.rows(), m.ncols, m.ring)
    kernel = _kernel_from_echelon(ech, pivots, m.ncols, m.ring)
    for v in kernel:
        if any(x != 0 for x in m.apply(v)):
            raise ConsistencyError("kernel vector fails verification")
    image = tuple(m.col(j) for j in pivots)
    return RankKernelImage(len(pivots), tuple(kernel), image, tuple(pivots))


def rank(m: Matrix) -> int:
    if m.nrows == 0 or m.ncols == 0:
        return 0
    return rank_kernel_image(m).rank


def kernel(m: Matrix):
    return rank_kernel_image(m).kernel


def span_rank(vectors, dim, ring=QQ):
    vectors = list(vectors)
    if not vectors:
        return 0
    return len(rref(vectors, dim, ring)[1])


def span_contains(big, small, dim, ring=QQ):
    """True when every vector of ``small`` lies in the span of ``big``."""
    r = span_rank(big, dim, ring)
    return span_rank(list(big) + list(small), dim, ring) == r


def span_equal(vs, ws, dim, ring=QQ):
    r1, r2 = span_rank(vs, dim, ring), span_rank(ws, dim, ring)
    return r1 == r2 and span_rank(list(vs) + list(ws), dim, ring) == r1


def solve_affine(m: Matrix, rhs):
    """All solutions of ``m x = rhs``: ``(particular, kernel_basis)`` or ``None``."""
    aug = m.hstack(Matrix.from_columns([rhs], m.nrows, m.ring))
    if m.ring == QQ:
        ech, pivots = _echelon_integer(aug.rows(), aug.ncols)
        ech = [[Fraction(x) for x in r] for r in ech]
    else:
        ech, pivots = rref(aug.rows(), aug.ncols, aug.ring)
    if m.ncols in pivots:
        return None
    zero = coerce(0, m.ring)
    x = [zero] * m.ncols
    for k in range(len(pivots) - 1, -1, -1):
        pc = pivots[k]
        s = ech[k][m.ncols]
        for j in range(pc + 1, m.ncols):
            if ech[k][j] != 0:
                s = s - ech[k][j] * x[j]
        x[pc] = s / ech[k][pc]
    if tuple(m.apply(x)) != tuple(coerce(v, m.ring) for v in rhs):
        raise ConsistencyError("particular solution fails verification")
    return tuple(x), rank_kernel_image(m).kernel


# characteristic polynomials ---------------------------------------------------------

def charpoly(m: Matrix):
    """Characteristic polynomial ``det(x I - m)``, coefficients lowest first.

    Faddeev-LeVerrier recursion; exact over any field of characteristic zero.
    """
    if m.nrows != m.ncols:
        raise MalformedInputError("charpoly of a non-square matrix")
    n = m.nrows
    one = coerce(1, m.ring)
    coeffs = [None] * (n + 1)
    coeffs[n] = one
    ident = Matrix.identity(n, m.ring)
    mk = Matrix.zeros(n, n, m.ring)
    for k in range(1, n + 1):
        mk = m @ mk + ident.scale(coeffs[n - k + 1])
        am = m @ mk
        tr = sum((am[i, i] for i in range(n)), coerce(0, m.ring))
        coeffs[n - k] = -tr / k
    return tuple(coeffs)


def _sympy_to_fraction(c):
    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))


def factor_rational(p):
    """Factor a rational polynomial into monic irreducibles over the rationals.

    Returns ``(leading_coefficient, [(factor, multiplicity), ...])`` with each
    factor a coefficient tuple, lowest degree first.
    """
    p = upoly.trim(tuple(Fraction(c) for c in p))
    if not p:
        raise MalformedInputError("cannot factor the zero polynomial")
    x = sympy.Symbol("x")
    expr = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p)], x,
                      domain=sympy.QQ)
    lead, facs = expr.factor_list()
    out = []
    for f, mult in facs:
        coeffs = tuple(_sympy_to_fraction(c) for c in reversed(f.all_coeffs()))
        lc = coeffs[-1]
        out.append((tuple(c / lc for c in coeffs), int(mult)))
    out.sort(key=lambda fm: (len(fm[0]), fm[0]))
    check = (p[-1],)
    for f, mult in out:
        check = upoly.mul(check, upoly.pow_(f, mult))
    if check != p:
        raise ConsistencyError("factorization does not multiply back")
    return p[-1], out


@dataclass(frozen=True)
class Eigenvalue:
    """One root of an irreducible factor of a characteristic polynomial.

    Rational roots are plain fractions. For a factor of degree k > 1 the value
    is the generator of ``Q[r]/(factor)``; it stands for all k conjugate roots.
    """

    value: Union[Fraction, FieldElement]
    multiplicity: int
    minpoly: tuple

    @property
    def degree(self):
        return len(self.minpoly) - 1

    @property
    def conjugates(self):
        return self.degree

    def is_rational(self):
        return self.degree == 1


def root_of(f, var="r"):
    """A root of the monic irreducible rational polynomial ``f``."""
    if len(f) == 2:
        return -f[0] / f[1]
    return SimpleExtension(f, var=var).gen


def charpoly_eigenvalues(m: Matrix, var="r"):
    if m.ring != QQ:
        raise MalformedInputError("charpoly_eigenvalues needs a rational matrix")
    cp = charpoly(m)
    _, factors = factor_rational(cp)
    out = [Eigenvalue(root_of(f, var), mult, f) for f, mult in factors]
    for ev in out:
        if upoly.evaluate(ev.minpoly, ev.value) != 0:
            raise ConsistencyError("eigenvalue does not satisfy its minimal polynomial")
    out.sort(key=lambda e: (e.degree, e.value if e.degree == 1 else 0, e.minpoly))
    return out
