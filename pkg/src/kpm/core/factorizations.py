"""Smith form over the valuation ring at ``t = 0`` and Birkhoff factorization
for 2x2 matrices over Laurent polynomials."""
from dataclasses import dataclass

from ..errors import ConsistencyError, MalformedInputError, SingularInputError, TruncationTooSmallError
from .laurent import LaurentPoly
from .matrix import LAURENT, Matrix
from .polymat import column_reduce_2x2, smith_2x2

_T = LaurentPoly.monomial(1)


def _as_laurent_2x2(m):
    if m.shape != (2, 2):
        raise MalformedInputError(f"expected a 2x2 matrix, got {m.shape}")
    if m.ring != LAURENT:
        m = Matrix(m.rows(), 2, LAURENT)
    return m


def min_valuation(m: Matrix):
    return min(x.valuation for r in m.rows() for x in r)


def max_degree(m: Matrix):
    return max(x.degree for r in m.rows() for x in r)


def exponent_spread(m: Matrix):
    """Largest minus smallest exponent over all entries (0 for the zero matrix)."""
    lo, hi = min_valuation(m), max_degree(m)
    return 0 if lo == float("inf") else int(hi - lo)


def shift(m: Matrix, k):
    return m.map(lambda x: x.shift(k), LAURENT)


@dataclass(frozen=True)
class SmithDVR:
    U: Matrix
    D: Matrix
    V: Matrix
    exponents: tuple  # (k1, k2) with k1 <= k2


def smith_dvr(m: Matrix) -> SmithDVR:
    """Elementary divisors of a 2x2 Laurent matrix over the valuation ring.

    The determinant must be a unit of the Laurent ring, i.e. ``c t^v``. The
    transforms ``U``, ``V`` have polynomial entries and constant determinant,
    so they are invertible over the valuation ring, and ``U m V`` equals
    ``diag(t^k1, t^k2)`` exactly.
    """
    m = _as_laurent_2x2(m)
    det = m.det()
    if det == 0:
        raise SingularInputError("smith_dvr of a singular matrix")
    if not det.is_monomial():
        raise MalformedInputError(f"determinant {det} is not a unit times a power of t")
    n = max(0, -min_valuation(m))
    p = shift(m, n)
    u, d, v = smith_2x2(p)
    ks = []
    rows = []
    for i in range(2):
        e = d[i, i]
        if not e.is_monomial():
            raise ConsistencyError(f"non-monomial invariant factor {e}")
        ks.append(e.valuation - n)
        rows.append([x / e.lowest() for x in u.row(i)])
    u = Matrix(rows, 2, LAURENT)
    dmat = Matrix.diag([_T ** ks[0], _T ** ks[1]], LAURENT)
    if u @ m @ v != dmat:
        raise ConsistencyError("smith_dvr round trip failed")
    if ks[0] + ks[1] != det.valuation:
        raise ConsistencyError("invariant factors do not add up to the determinant valuation")
    return SmithDVR(u, dmat, v, (ks[0], ks[1]))


@dataclass(frozen=True)
class Birkhoff:
    g_minus: Matrix  # entries polynomial in t^-1, det 1
    D: Matrix  # diag(t^n, t^-n)
    g_plus: Matrix  # entries polynomial in t, det 1
    n: int


def birkhoff(m: Matrix, truncation: int) -> Birkhoff:
    """Factor ``m = g_minus @ diag(t^n, t^-n) @ g_plus`` with ``n >= 0``.

    For Laurent-polynomial loops the factorization exists with polynomial
    factors, so it is computed exactly by column reduction; the identity
    holds exactly, hence also modulo ``t^truncation``. The truncation order
    is checked against the exponent spread of ``m``.
    """
    m = _as_laurent_2x2(m)
    if m.det() != 1:
        raise MalformedInputError("birkhoff needs determinant exactly 1")
    spread = exponent_spread(m)
    if truncation <= spread:
        raise TruncationTooSmallError(f"truncation {truncation} must exceed exponent spread {spread}")
    shift_by = max(0, -min_valuation(m))
    g, v, vinv, degs = column_reduce_2x2(shift(m, shift_by))
    exps = [degs[0] - shift_by, degs[1] - shift_by]
    if exps[0] + exps[1] != 0:
        raise ConsistencyError("column degrees do not balance")
    gm = Matrix([[g[i, j].shift(-degs[j]) for j in range(2)] for i in range(2)], 2, LAURENT)
    gp = vinv
    if exps[0] < exps[1]:
        gm = Matrix([[gm[i, 1], gm[i, 0]] for i in range(2)], 2, LAURENT)
        gp = Matrix([gp.row(1), gp.row(0)], 2, LAURENT)
        exps.reverse()
    c = gm.det()
    if not c.is_constant() or c == 0:
        raise ConsistencyError("negative factor is not invertible")
    c = c.coeff(0)
    gm = Matrix([[gm[i, 0] / c, gm[i, 1]] for i in range(2)], 2, LAURENT)
    gp = Matrix([[x * c for x in gp.row(0)], list(gp.row(1))], 2, LAURENT)
    n = exps[0]
    dmat = Matrix.diag([_T ** n, _T ** (-n)], LAURENT)
    if gm @ dmat @ gp != m:
        raise ConsistencyError("Birkhoff round trip failed")
    if any(x.degree > 0 for r in gm.rows() for x in r) or any(
            x.valuation < 0 for r in gp.rows() for x in r):
        raise ConsistencyError("Birkhoff factors have the wrong shape")
    return Birkhoff(gm, dmat, gp, n)
