"""Lattice model of the SL(2) affine Grassmannian.

A coset ``g SL(2, R)`` with ``g`` in ``SL(2, K)`` corresponds to the
``R``-lattice ``g L0`` in ``K^2`` where ``L0 = R^2`` and ``R = C[[t]]``. Here
``g`` is a loop matrix: a 2x2 matrix of Laurent polynomials with determinant
exactly 1. The same ``g`` also glues the rank-2 sheaf ``V_g`` on the
projective line whose sections near ``t = 0`` are the vectors of ``g L0``.
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .core.factorizations import birkhoff, exponent_spread, max_degree, min_valuation, smith_dvr
from .core.laurent import LaurentPoly
from .core.linalg import rank
from .core.matrix import LAURENT, Matrix
from .errors import ConsistencyError, MalformedInputError, TruncationTooSmallError

T = LaurentPoly.monomial(1)


def as_loop_matrix(m) -> Matrix:
    """Validate (and coerce) a loop matrix: 2x2, Laurent entries, det == 1."""
    if not isinstance(m, Matrix):
        m = Matrix(m, ring=LAURENT)
    if m.shape != (2, 2):
        raise MalformedInputError(f"loop matrices are 2x2, got {m.shape}")
    if m.ring != LAURENT:
        m = Matrix(m.rows(), 2, LAURENT)
    if m.det() != 1:
        raise MalformedInputError(f"loop matrix determinant is {m.det()}, not 1")
    return m


def loop_inverse(g: Matrix) -> Matrix:
    (a, b), (c, d) = g.rows()
    return Matrix([[d, -b], [-c, a]], 2, LAURENT)


def is_integral(m: Matrix) -> bool:
    """All entries have valuation >= 0, i.e. lie in ``R``."""
    return min_valuation(m) >= 0


@dataclass(frozen=True, eq=False)
class Lattice:
    """The ``R``-lattice spanned by the columns of a loop matrix."""

    g: Matrix
    invariant_factors: tuple = field(default=None)

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return lattice_equal(self, other)

    __hash__ = None

    @property
    def index(self):
        return self.invariant_factors[1]


def lattice_from_group(g) -> Lattice:
    g = as_loop_matrix(g)
    return Lattice(g, smith_dvr(g).exponents)


def lattice_equal(x: Lattice, y: Lattice) -> bool:
    """``g L0 == g' L0`` iff ``g^-1 g'`` lies in ``SL(2, R)``."""
    return is_integral(loop_inverse(x.g) @ y.g)


def lattice_index(lat: Lattice) -> int:
    """Least ``d`` with the lattice in ``L_d``; the top invariant factor."""
    return lat.invariant_factors[1]


@dataclass(frozen=True)
class InclusionReport:
    d: int
    lower: bool  # t^d L0 inside L
    upper: bool  # L inside t^-d L0
    dimension: int  # dim L / t^d L0 when both inclusions hold, else -1

    @property
    def member(self):
        return self.lower and self.upper and self.dimension == 2 * self.d


def inclusion_report(lat: Lattice, d: int) -> InclusionReport:
    """Decide ``L`` in ``L_d`` from first principles, without invariant factors."""
    if d < 0:
        raise MalformedInputError("d must be nonnegative")
    g = lat.g
    lower = min_valuation(loop_inverse(g)) + d >= 0
    upper = min_valuation(g) >= -d
    if not (lower and upper):
        return InclusionReport(d, lower, upper, -1)
    # coordinates of t^j g e_i modulo t^d L0, in the basis t^e e_r, -d <= e < d
    vectors = []
    for j in range(2 * d):
        for i in range(2):
            vec = []
            for r in range(2):
                entry = g[r, i].shift(j)
                vec.extend(entry.coeff(e) for e in range(-d, d))
            vectors.append(vec)
    dim = rank(Matrix(vectors, 4 * d)) if vectors else 0
    return InclusionReport(d, lower, upper, dim)


def in_Ld(lat: Lattice, d: int) -> bool:
    if d < 0:
        raise MalformedInputError("d must be nonnegative")
    by_index = lattice_index(lat) <= d
    direct = inclusion_report(lat, d).member
    if by_index != direct:
        raise ConsistencyError(f"L_{d} membership: invariant factors say {by_index}, "
                               f"direct inclusion check says {direct}")
    return by_index


# sections of V_g on the projective line ------------------------------------------------

def _h0_with_pole_bound(g: Matrix, k: int, pole: int) -> int:
    """Dimension of sections ``sigma`` with exponents in ``[-pole, k]`` and
    ``g^-1 sigma`` integral."""
    if k < -pole:
        return 0
    ginv = loop_inverse(g)
    unknowns = [(e, i) for e in range(-pole, k + 1) for i in range(2)]
    columns = []
    rows_index = {}
    for e, i in unknowns:
        col = {}
        for r in range(2):
            for ex, c in ginv[r, i].shift(e).items():
                if ex < 0:
                    col[(r, ex)] = c
                    rows_index.setdefault((r, ex), len(rows_index))
        columns.append(col)
    if not rows_index:
        return len(unknowns)
    mat = [[Fraction(0)] * len(unknowns) for _ in rows_index]
    for j, col in enumerate(columns):
        for key, c in col.items():
            mat[rows_index[key]][j] = c
    return len(unknowns) - rank(Matrix(mat, len(unknowns)))


def vg_h0(g, k: int, truncation: int) -> int:
    """``h^0(P^1, V_g(k))``.

    Sections are Laurent vectors with exponents at most ``k`` (the twist at
    ``t = infinity``) whose germ at ``t = 0`` lies in ``g L0``. Pole orders at
    ``t = 0`` are searched up to ``truncation`` and the answer is certified by
    repeating with ``truncation + 2``.
    """
    g = as_loop_matrix(g)
    need = exponent_spread(g) + abs(k) + 2
    if truncation <= need:
        raise TruncationTooSmallError(f"truncation {truncation} must exceed {need}")
    first = _h0_with_pole_bound(g, k, truncation)
    second = _h0_with_pole_bound(g, k, truncation + 2)
    if first != second:
        raise TruncationTooSmallError(f"section count not stable at truncation {truncation}")
    return first


def default_truncation(g, k=1):
    return exponent_spread(as_loop_matrix(g)) + abs(k) + 3


def splitting_type_p1(g, truncation: int = None) -> int:
    """The ``n`` with ``V_g`` isomorphic to ``O(n) + O(-n)``.

    Computed by Birkhoff factorization and cross-checked against section
    counts: ``h^0(V_g) = max(2, n + 1)`` and ``h^0(V_g(-1)) = n``.
    """
    g = as_loop_matrix(g)
    if truncation is None:
        truncation = default_truncation(g)
    n = birkhoff(g, truncation).n
    h0 = vg_h0(g, 0, truncation)
    h0m = vg_h0(g, -1, truncation)
    if h0 != max(2, n + 1) or h0m != n:
        raise ConsistencyError(f"Birkhoff gives n={n} but h0(V_g)={h0}, h0(V_g(-1))={h0m}")
    return n


# random test data ----------------------------------------------------------------------

def _random_laurent(rng, lo, hi, coeffs=(-2, -1, 1, 2), density=0.6):
    terms = {}
    for e in range(lo, hi + 1):
        if rng.random() < density:
            terms[e] = rng.choice(coeffs)
    return LaurentPoly(terms)


def _upper(f):
    return Matrix([[1, f], [0, 1]], 2, LAURENT)


def _lower(f):
    return Matrix([[1, 0], [f, 1]], 2, LAURENT)


def random_loop_matrix(rng: random.Random, steps=3, max_exp=1, max_shift=1) -> Matrix:
    """Product of elementary loop matrices and a diagonal ``diag(t^k, t^-k)``."""
    k = rng.randint(-max_shift, max_shift)
    g = Matrix.diag([T ** k, T ** (-k)], LAURENT)
    for s in range(steps):
        f = _random_laurent(rng, -max_exp, max_exp)
        g = g @ (_upper(f) if (s + rng.randint(0, 1)) % 2 else _lower(f))
    return as_loop_matrix(g)


def random_positive_loop(rng: random.Random, steps=2, max_exp=2) -> Matrix:
    """Random element of ``SL(2)`` over polynomials in ``t`` (a right coset factor)."""
    c = Fraction(rng.choice([1, 2, 3]), rng.choice([1, 2]))
    p = Matrix.diag([c, 1 / c], LAURENT)
    for s in range(steps):
        f = _random_laurent(rng, 0, max_exp)
        p = p @ (_upper(f) if s % 2 else _lower(f))
    return as_loop_matrix(p)


__all__ = [
    "InclusionReport", "Lattice", "as_loop_matrix", "default_truncation", "in_Ld",
    "inclusion_report", "is_integral", "lattice_equal", "lattice_from_group", "lattice_index",
    "loop_inverse", "max_degree", "random_loop_matrix", "random_positive_loop",
    "splitting_type_p1", "vg_h0",
]
