"""The GL(d) and C* actions on ADHM data, orbit equivalence, and the map pi.

``g`` in GL(d) acts by ``(g alpha g^-1, g beta g^-1, (g^-1)^t a, g b)``;
``z`` in C* acts by ``(z alpha, beta, z a, b)`` on data and by
``[lam, mu, nu] -> [lam / z, mu, nu]`` on P^2.
"""
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core.linalg import solve_affine, span_equal
from .core.matrix import QQ, Matrix
from .errors import ConsistencyError, InvalidDataError, MalformedInputError, SingularInputError
from .monad import ADHMData, _point, assemble, fiber, validate


def _as_group_element(g, d):
    if not isinstance(g, Matrix):
        g = Matrix(g, d, QQ)
    if g.shape != (d, d):
        raise MalformedInputError(f"group element has shape {g.shape}, expected {(d, d)}")
    if d and g.det() == 0:
        raise SingularInputError("group element is singular")
    return g


def _scalar(z):
    z = Fraction(z)
    if z == 0:
        raise SingularInputError("z must be nonzero")
    return z


def gl_act(g, data: ADHMData) -> ADHMData:
    if not validate(data):
        raise InvalidDataError("ADHM relation fails")
    d = data.d
    g = _as_group_element(g, d)
    if d == 0:
        return data
    ginv = g.inverse()
    out = ADHMData(d, g @ data.alpha @ ginv, g @ data.beta @ ginv, ginv.T @ data.a, g @ data.b)
    # g [a, b] g^-1 + (g b)((g^-1)^t a)^t = g ([a, b] + b a^t) g^-1
    if not validate(out):
        raise ConsistencyError("GL(d) action broke the ADHM relation")
    return out


def cstar_act(z, data: ADHMData) -> ADHMData:
    z = _scalar(z)
    if not validate(data):
        raise InvalidDataError("ADHM relation fails")
    out = ADHMData(data.d, data.alpha.scale(z), data.beta, data.a.scale(z), data.b)
    if not validate(out):
        raise ConsistencyError("C* action broke the ADHM relation")
    return out


def cstar_p2(z, point) -> tuple:
    z = _scalar(z)
    lam, mu, nu = _point(point)
    return (lam / z, mu, nu)


def projective_equal(p, q) -> bool:
    p, q = tuple(Fraction(x) for x in p), tuple(Fraction(x) for x in q)
    if len(p) != len(q):
        return False
    return all(p[i] * q[j] == p[j] * q[i] for i in range(len(p)) for j in range(len(p)))


def normalize_point(p) -> tuple:
    """Representative with first nonzero coordinate 1."""
    p = tuple(Fraction(x) for x in p)
    lead = next((x for x in p if x), None)
    if lead is None:
        raise MalformedInputError("the zero vector is not a projective point")
    return tuple(x / lead for x in p)


def pi_map(x, lm) -> tuple:
    """``(x, [lam : mu]) -> [lam x : mu]`` in P^3, normalized."""
    x = tuple(Fraction(c) for c in x)
    lam, mu = (Fraction(c) for c in lm)
    if len(x) != 3 or not any(x):
        raise MalformedInputError("x must be a nonzero triple")
    if lam == 0 and mu == 0:
        raise MalformedInputError("[lam : mu] must be a point of P^1")
    return normalize_point(tuple(lam * c for c in x) + (mu,))


# orbit equivalence -----------------------------------------------------------------------

@dataclass(frozen=True)
class Equivalence:
    """Outcome of an orbit search: ``found`` with ``g``, or ``none``, or ``inconclusive``."""

    status: str
    g: Optional[Matrix] = None
    solution_dim: int = 0
    trials: int = 0

    def __bool__(self):
        return self.status == "found"


def _equivalence_system(x: ADHMData, y: ADHMData):
    """Linear equations in the row-major entries of ``g``.

    ``g alpha_x = alpha_y g``, ``g beta_x = beta_y g``, ``g^t a_y = a_x``,
    ``g b_x = b_y``.
    """
    d = x.d
    rows, rhs = [], []

    def unit():
        return [Fraction(0)] * (d * d)

    for mx, my in ((x.alpha, y.alpha), (x.beta, y.beta)):
        for i in range(d):
            for j in range(d):
                row = unit()
                for k in range(d):
                    row[i * d + k] += mx[k, j]
                    row[k * d + j] -= my[i, k]
                rows.append(row)
                rhs.append(Fraction(0))
    for i in range(d):  # (g^t a_y)[i, c] = sum_k g[k, i] a_y[k, c]
        for c in range(2):
            row = unit()
            for k in range(d):
                row[k * d + i] += y.a[k, c]
            rows.append(row)
            rhs.append(x.a[i, c])
    for i in range(d):
        for c in range(2):
            row = unit()
            for k in range(d):
                row[i * d + k] += x.b[k, c]
            rows.append(row)
            rhs.append(y.b[i, c])
    return Matrix(rows, d * d, QQ), rhs


def _coefficient_vectors(n, values=(0, 1, -1, 2, -2)):
    return itertools.product(values, repeat=n)


def gl_equivalent(x: ADHMData, y: ADHMData, trials: int = 200) -> Equivalence:
    """Search for ``g`` in GL(d) with ``gl_act(g, x) == y``.

    The conditions are affine-linear in ``g``. An inconsistent system is a
    conclusive negative; otherwise the particular solution plus small integer
    combinations of the homogeneous solutions are tested for invertibility.
    """
    if x.d != y.d:
        raise MalformedInputError(f"dimension mismatch: {x.d} vs {y.d}")
    for data in (x, y):
        if not validate(data):
            raise InvalidDataError("ADHM relation fails")
    d = x.d
    if d == 0:
        return Equivalence("found", Matrix.zeros(0, 0), 0, 0)
    system, rhs = _equivalence_system(x, y)
    sol = solve_affine(system, rhs)
    if sol is None:
        return Equivalence("none")
    particular, kern = sol
    tried = 0
    for coeffs in _coefficient_vectors(len(kern)):
        if tried >= trials:
            break
        tried += 1
        flat = list(particular)
        for c, v in zip(coeffs, kern):
            if c:
                flat = [p + c * q for p, q in zip(flat, v)]
        g = Matrix([flat[i * d:(i + 1) * d] for i in range(d)], d, QQ)
        if g.det() == 0:
            continue
        if gl_act(g, x) != y:
            raise ConsistencyError("solution of the linear system fails the round trip")
        return Equivalence("found", g, len(kern), tried)
    if not kern:
        return Equivalence("none", None, 0, tried)  # unique solution, singular
    return Equivalence("inconclusive", None, len(kern), tried)


# C*-equivariance of the monad construction ------------------------------------------------

def basis_change(d: int, z) -> Matrix:
    """``diag(I_d, z^-1 I_d, I_2)`` on ``C^(2d+2)``: rescale the second factor's basis by z."""
    z = _scalar(z)
    return Matrix.diag([Fraction(1)] * d + [1 / z] * d + [Fraction(1)] * 2, QQ)


@dataclass(frozen=True)
class EquivarianceCheck:
    ok: bool
    symbolic: bool  # map relations on the coefficient matrices
    kernel: bool
    image: bool
    fiber_dims: tuple

    def __bool__(self):
        return self.ok


def _symbolic_relations(x, zx, z, m):
    """``m A^x_Z' = A^zx_Z / z`` and ``B^zx_Z m = B^x_Z'`` coefficientwise in (lam, mu, nu)."""
    ax, bx = assemble(x), assemble(zx)
    a_src, a_dst = ax.A_parts, bx.A_parts
    b_src, b_dst = ax.B_parts, bx.B_parts
    weights = (1 / z, Fraction(1), Fraction(1))  # Z' = (lam / z, mu, nu)
    ok = True
    for w, asrc, adst, bsrc, bdst in zip(weights, a_src, a_dst, b_src, b_dst):
        ok = ok and (m @ asrc).scale(w) == adst.scale(1 / z)
        ok = ok and bdst @ m == bsrc.scale(w)
    return ok


def verify_cstar_equivariance(data: ADHMData, z, point) -> EquivarianceCheck:
    """Check that the basis change identifies the fiber of ``data`` at
    ``cstar_p2(z, Z)`` with the fiber of ``cstar_act(z, data)`` at ``Z``.

    Both the kernel of ``B`` and the image of ``A`` must be carried onto each
    other exactly, and both fibers must be two-dimensional.
    """
    z = _scalar(z)
    point = _point(point)
    zx = cstar_act(z, data)
    moved = cstar_p2(z, point)
    m = basis_change(data.d, z)
    src = fiber(data, moved)
    dst = fiber(zx, point)
    n = 2 * data.d + 2
    kernel = span_equal([m.apply(v) for v in src.kernel], dst.kernel, n)
    image = span_equal([m.apply(v) for v in src.image], dst.image, n)
    symbolic = _symbolic_relations(data, zx, z, m)
    dims = (src.dim, dst.dim)
    return EquivarianceCheck(symbolic and kernel and image and dims == (2, 2), symbolic, kernel,
                             image, dims)


def literal_diag_check(data: ADHMData, z, point) -> bool:
    """Same comparison with ``diag(z I_d, I_d, I_2)`` in place of the basis change."""
    z = _scalar(z)
    d = data.d
    m = Matrix.diag([z] * d + [Fraction(1)] * (d + 2), QQ)
    src = fiber(data, cstar_p2(z, point))
    dst = fiber(cstar_act(z, data), _point(point))
    n = 2 * d + 2
    return (span_equal([m.apply(v) for v in src.kernel], dst.kernel, n)
            and span_equal([m.apply(v) for v in src.image], dst.image, n))


def random_group_element(rng, d, lo=-2, hi=2) -> Matrix:
    while True:
        g = Matrix([[Fraction(rng.randint(lo, hi)) for _ in range(d)] for _ in range(d)], d, QQ)
        if d == 0 or g.det() != 0:
            return g


__all__ = [
    "EquivarianceCheck", "Equivalence", "basis_change", "cstar_act", "cstar_p2", "gl_act",
    "gl_equivalent", "literal_diag_check", "normalize_point", "pi_map", "projective_equal",
    "random_group_element", "verify_cstar_equivariance",
]
