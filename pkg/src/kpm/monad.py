"""ADHM data and the monad construction of framed rank-2 bundles on P^2.

A quadruple ``(alpha, beta, a, b)`` with ``alpha, beta`` of size ``d x d``
and ``a, b`` of size ``d x 2`` satisfying ``[alpha, beta] + b a^t = 0``
defines linear maps, depending linearly on ``Z = (lam, mu, nu)``::

    A_Z = lam A_lam + mu A_mu + nu A_nu : C^d -> C^(2d+2)
    B_Z = lam B_lam + mu B_mu + nu B_nu : C^(2d+2) -> C^d

with ``B_Z A_Z = 0``. When ``A_Z`` is injective and ``B_Z`` surjective for
every ``Z != 0`` the fibers ``Ker B_Z / Im A_Z`` form a rank-2 bundle, trivial
with a standard frame on the line ``nu = 0``.
"""
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import upoly
from .core.factorizations import birkhoff, exponent_spread
from .core.laurent import LaurentPoly
from .core.linalg import (
    charpoly,
    charpoly_eigenvalues,
    factor_rational,
    rank,
    rank_kernel_image,
    solve_affine,
    span_equal,
    span_rank,
)
from .core.matrix import LAURENT, QQ, Matrix
from .core.mpoly import MPoly
from .core.numberfield import FieldElement, SimpleExtension, SplittingFound
from .core.polymat import column_hermite, row_hermite
from .errors import (
    ConsistencyError,
    DegenerateDataError,
    GeneratorExhaustedError,
    InvalidDataError,
    MalformedInputError,
)


def _qq(rows, ncols):
    return Matrix(rows, ncols, QQ)


@dataclass(frozen=True)
class ADHMData:
    d: int
    alpha: Matrix
    beta: Matrix
    a: Matrix
    b: Matrix

    def __post_init__(self):
        d = self.d
        if not isinstance(d, int) or d < 0:
            raise MalformedInputError("d must be a nonnegative integer")
        for name, shape in (("alpha", (d, d)), ("beta", (d, d)), ("a", (d, 2)), ("b", (d, 2))):
            m = getattr(self, name)
            if not isinstance(m, Matrix):
                m = _qq(m, shape[1])
                object.__setattr__(self, name, m)
            if m.shape != shape:
                raise MalformedInputError(f"{name} has shape {m.shape}, expected {shape}")
            if m.ring != QQ:
                raise MalformedInputError(f"{name} must have rational entries")

    @classmethod
    def empty(cls):
        return cls(0, Matrix.zeros(0, 0), Matrix.zeros(0, 0), Matrix.zeros(0, 2), Matrix.zeros(0, 2))

    def relation(self) -> Matrix:
        """``[alpha, beta] + b a^t``; zero exactly for valid data."""
        al, be = self.alpha, self.beta
        return al @ be - be @ al + self.b @ self.a.T

    def __eq__(self, other):
        if not isinstance(other, ADHMData):
            return NotImplemented
        return (self.d, self.alpha, self.beta, self.a, self.b) == (
            other.d, other.alpha, other.beta, other.a, other.b)

    def __hash__(self):
        return hash((self.d, self.alpha, self.beta, self.a, self.b))


def validate(data: ADHMData) -> bool:
    return data.relation().is_zero()


def _require_valid(data):
    if not validate(data):
        raise InvalidDataError("ADHM relation [alpha, beta] + b a^t = 0 fails")


# monad maps -------------------------------------------------------------------------------

@dataclass(frozen=True)
class MonadMaps:
    d: int
    A_parts: tuple  # (A_lam, A_mu, A_nu), each (2d+2) x d
    B_parts: tuple  # (B_lam, B_mu, B_nu), each d x (2d+2)
    A: Matrix  # entries linear in (lam, mu, nu)
    B: Matrix

    def A_at(self, z) -> Matrix:
        return _combine(self.A_parts, z)

    def B_at(self, z) -> Matrix:
        return _combine(self.B_parts, z)


def _combine(parts, z):
    out = None
    for m, c in zip(parts, z):
        term = m.scale(Fraction(c)) if not isinstance(c, LaurentPoly) else m.scale(c)
        out = term if out is None else out + term
    return out


def _symbolic(parts):
    gens = MPoly.gens(3)
    m0 = parts[0]
    rows = [[sum((g * p[i, j] for g, p in zip(gens, parts)), MPoly(3))
             for j in range(m0.ncols)] for i in range(m0.nrows)]
    return Matrix(rows, m0.ncols, ("mpoly", 3))


def _stack(blocks, ncols):
    rows = []
    for blk in blocks:
        rows.extend(list(r) for r in blk.rows())
    return _qq(rows, ncols)


def _side(blocks, nrows):
    return _qq([[x for blk in blocks for x in blk.row(i)] for i in range(nrows)],
               sum(blk.ncols for blk in blocks))


def assemble(data: ADHMData) -> MonadMaps:
    _require_valid(data)
    d = data.d
    eye, zero = Matrix.identity(d), Matrix.zeros(d, d)
    z2 = Matrix.zeros(2, d)
    zd2 = Matrix.zeros(d, 2)
    a_lam = _stack([eye, zero, z2], d)
    a_mu = _stack([zero, eye, z2], d)
    a_nu = _stack([data.alpha, data.beta, data.a.T], d)
    b_lam = _side([zero, eye, zd2], d)
    b_mu = _side([-eye, zero, zd2], d)
    b_nu = _side([-data.beta, data.alpha, data.b], d)
    a_parts, b_parts = (a_lam, a_mu, a_nu), (b_lam, b_mu, b_nu)
    maps = MonadMaps(d, a_parts, b_parts, _symbolic(a_parts), _symbolic(b_parts))
    if not (maps.B @ maps.A).is_zero():
        raise ConsistencyError("B A does not vanish identically")
    return maps


def monad_identities(maps: MonadMaps) -> dict:
    """Coefficient-level checks of ``B A = 0`` and the framing ``B_lam A_mu = I``."""
    (al, am, an), (bl, bm, bn) = maps.A_parts, maps.B_parts
    d = maps.d
    eye = Matrix.identity(d)
    return {
        "lam^2": (bl @ al).is_zero(),
        "mu^2": (bm @ am).is_zero(),
        "lam*mu": (bl @ am + bm @ al).is_zero(),
        "lam*nu": (bl @ an + bn @ al).is_zero(),
        "mu*nu": (bm @ an + bn @ am).is_zero(),
        "nu^2": (bn @ an).is_zero(),
        "B_lam A_mu = I": bl @ am == eye,
        "B_mu A_lam = -I": bm @ al == -eye,
        "symbolic B A = 0": (maps.B @ maps.A).is_zero(),
    }


# nondegeneracy --------------------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    """``alpha v = -lam v``, ``beta v = -mu v``, ``c^t v = 0`` with ``v != 0``."""

    lam: object
    mu: object
    v: tuple


def _basis_matrix(vectors, nrows):
    return Matrix.from_columns(vectors, nrows, QQ)


def _largest_invariant_subspace(alpha, beta, basis, d):
    """Largest subspace of span(basis) invariant under alpha and beta."""
    while basis:
        w = _basis_matrix(basis, d)
        ann = rank_kernel_image(w.T).kernel  # row vectors killing span(basis)
        if not ann:
            return basis
        n = _qq(ann, d)
        cond = (n @ alpha @ w).vstack(n @ beta @ w)
        coords = rank_kernel_image(cond).kernel
        if len(coords) == len(basis):
            return basis
        basis = [w.apply(x) for x in coords]
    return []


def _restrict(m, w):
    """Matrix of ``m`` on the invariant subspace with basis the columns of ``w``."""
    cols = []
    for j in range(w.ncols):
        sol = solve_affine(w, (m @ w).col(j))
        if sol is None:
            raise ConsistencyError("subspace is not invariant")
        cols.append(sol[0])
    return Matrix.from_columns(cols, w.ncols, QQ)


def _shift(m, c):
    n = m.nrows
    return Matrix([[m[i, j] + c if i == j else m[i, j] for j in range(n)] for i in range(n)], n)


def _kernel_over(m):
    return rank_kernel_image(m).kernel


def _find_mu(alpha_w, beta_w, lam, q):
    """Search for ``mu`` a root of ``q`` and a common kernel vector; handles towers."""
    base = lam.ring if isinstance(lam, FieldElement) else None
    if len(q) == 2:
        mu = -q[0] / q[1]
        ker = _kernel_over(_shift(alpha_w, lam).vstack(_shift(beta_w, mu)))
        return (mu, ker[0]) if ker else None
    pending = [q]
    while pending:
        modulus = pending.pop(0)
        if base is not None and len(modulus) == 2:
            mu = -modulus[0] / modulus[1]
            ring = None
        else:
            ring = SimpleExtension(modulus, base=base, var="s")
            mu = ring.gen
        try:
            ker = _kernel_over(_shift(alpha_w, lam).vstack(_shift(beta_w, mu)))
        except SplittingFound as split:
            if ring is None or split.ring is not ring:
                raise
            lifted = tuple(ring.base.coerce(c) if ring.base else c for c in modulus)
            cofactor, rem = upoly.divmod_(lifted, split.factor)
            if rem:
                raise ConsistencyError("split factor does not divide the modulus")
            pending[:0] = [upoly.monic(split.factor), upoly.monic(cofactor)]
            continue
        if ker:
            return mu, ker[0]
    return None


def common_eigenvector_in_kernel(alpha: Matrix, beta: Matrix, c: Matrix) -> Optional[Witness]:
    """A common eigenvector of ``alpha`` and ``beta`` killed by ``c^t``, if any.

    Every such vector spans a line invariant under both matrices inside
    ``ker c^t``, so it lies in the largest such invariant subspace ``W``. The
    search enumerates eigenvalues of ``-alpha`` on ``W`` (one root per
    rational irreducible factor, conjugates being equivalent) and, for each,
    the roots of the rational factors of the characteristic polynomial of
    ``-beta`` on ``W`` over that field.
    """
    d = alpha.nrows
    if d == 0:
        return None
    start = list(rank_kernel_image(c.T).kernel) if c.ncols else [
        tuple(Fraction(int(i == j)) for i in range(d)) for j in range(d)]
    basis = _largest_invariant_subspace(alpha, beta, start, d)
    if not basis:
        return None
    w = _basis_matrix(basis, d)
    alpha_w, beta_w = _restrict(alpha, w), _restrict(beta, w)
    mu_factors = [f for f, _ in factor_rational(charpoly(-beta_w))[1]]
    for ev in charpoly_eigenvalues(-alpha_w, var="r"):
        lam = ev.value
        for q in mu_factors:
            found = _find_mu(alpha_w, beta_w, lam, q)
            if found is None:
                continue
            mu, x = found
            v = tuple(sum((w[i, j] * x[j] for j in range(w.ncols)), Fraction(0))
                      for i in range(d))
            _verify_witness(alpha, beta, c, lam, mu, v)
            return Witness(lam, mu, v)
    return None


def _mat_vec(m, v):
    return tuple(sum((m[i, j] * v[j] for j in range(m.ncols)), Fraction(0)) for i in range(m.nrows))


def _verify_witness(alpha, beta, c, lam, mu, v):
    ok = all(x == 0 for x in (p + lam * q for p, q in zip(_mat_vec(alpha, v), v)))
    ok = ok and all(x == 0 for x in (p + mu * q for p, q in zip(_mat_vec(beta, v), v)))
    ok = ok and all(x == 0 for x in _mat_vec(c.T, v))
    ok = ok and any(x != 0 for x in v)
    if not ok:
        raise ConsistencyError("eigenvector witness fails verification")


@dataclass(frozen=True)
class NondegeneracyReport:
    injective: bool
    surjective: bool
    injectivity_witness: Optional[Witness] = None
    surjectivity_witness: Optional[Witness] = None

    def __bool__(self):
        return self.injective and self.surjective


def nondegeneracy_report(data: ADHMData) -> NondegeneracyReport:
    _require_valid(data)
    if data.d == 0:
        return NondegeneracyReport(True, True)
    inj = common_eigenvector_in_kernel(data.alpha, data.beta, data.a)
    surj = common_eigenvector_in_kernel(data.alpha.T, data.beta.T, data.b)
    return NondegeneracyReport(inj is None, surj is None, inj, surj)


def nondegenerate(data: ADHMData) -> bool:
    """``A_Z`` injective and ``B_Z`` surjective for every ``Z != 0``.

    On ``nu = 0`` both hold automatically; for ``nu = 1`` failure of
    injectivity is a common eigenvector of ``alpha, beta`` in ``ker a^t`` and
    failure of surjectivity a common left eigenvector in the left kernel of
    ``b``.
    """
    return bool(nondegeneracy_report(data))


# fibers ------------------------------------------------------------------------------------

def _point(z):
    z = tuple(Fraction(x) for x in z)
    if len(z) != 3:
        raise MalformedInputError("points of P^2 have three homogeneous coordinates")
    if not any(z):
        raise MalformedInputError("the zero vector is not a point of P^2")
    return z


@dataclass(frozen=True)
class Fiber:
    point: tuple
    kernel: tuple  # basis of Ker B_Z, dimension d + 2
    image: tuple  # basis of Im A_Z, dimension d
    reps: tuple  # two coset representatives spanning the quotient

    @property
    def dim(self):
        return len(self.kernel) - len(self.image)


def fiber(data: ADHMData, z, maps: MonadMaps = None) -> Fiber:
    z = _point(z)
    maps = maps or assemble(data)
    d, n = data.d, 2 * data.d + 2
    bz, az = maps.B_at(z), maps.A_at(z)
    rb = rank_kernel_image(bz) if d else None
    kernel = rb.kernel if d else tuple(
        tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n))
    image = rank_kernel_image(az).image if d else ()
    if d and (rb.rank != d or len(image) != d):
        raise DegenerateDataError(
            f"rank defect at Z={_fmt_point(z)}: rank B_Z={rb.rank}, rank A_Z={len(image)}, d={d}",
            point=z)
    if not (bz @ az).is_zero():
        raise ConsistencyError("B_Z A_Z != 0")
    reps = []
    span = list(image)
    r = span_rank(span, n)
    for v in kernel:
        if span_rank(span + [v], n) > r:
            span.append(v)
            reps.append(v)
            r += 1
        if len(reps) == 2:
            break
    if len(reps) != 2:
        raise ConsistencyError("fiber is not two-dimensional")
    return Fiber(z, tuple(kernel), tuple(image), tuple(reps))


def same_fiber(f: Fiber, g: Fiber) -> bool:
    """Equality of ``Ker / Im`` as subquotients of ``C^(2d+2)``."""
    n = len(f.reps[0])
    return span_equal(f.kernel, g.kernel, n) and span_equal(f.image, g.image, n)


def _fmt_point(z):
    return "(" + ", ".join(str(x) for x in z) + ")"


FRAME_SAMPLE_POINTS = ((1, 0, 0), (0, 1, 0), (1, 1, 0), (1, -1, 0), (2, 3, 0), (-3, 5, 0),
                       (1, Fraction(1, 2), 0), (7, -2, 0))


@dataclass(frozen=True)
class FrameCheck:
    ok: bool
    failing_point: Optional[tuple] = None

    def __bool__(self):
        return self.ok


def standard_frame_check(data: ADHMData, points=FRAME_SAMPLE_POINTS) -> FrameCheck:
    """The last two basis vectors of ``C^(2d+2)`` frame the fibers over ``nu = 0``."""
    maps = assemble(data)
    d, n = data.d, 2 * data.d + 2
    frame = [tuple(Fraction(int(i == j)) for i in range(n)) for j in (n - 2, n - 1)]
    for z in points:
        z = _point(z)
        if z[2] != 0:
            raise MalformedInputError("standard frame points must lie on nu = 0")
        fib = fiber(data, z, maps)
        in_kernel = all(x == 0 for v in frame for x in maps.B_at(z).apply(v)) if d else True
        spans = span_rank(list(fib.image) + frame, n) == d + 2
        if not (in_kernel and spans):
            return FrameCheck(False, z)
    return FrameCheck(True)


# restriction to lines ------------------------------------------------------------------

def _line_points(p, q):
    p, q = _point(p), _point(q)
    if rank(_qq([p, q], 3)) != 2:
        raise MalformedInputError("P and Q must be distinct points of P^2")
    return p, q


def _laurent_matrix(parts, p, q, var_on):
    """``var * M_p + M_q`` (var_on='p') or ``M_p + var * M_q`` as Laurent matrices."""
    s = LaurentPoly.monomial(1)
    mp = _combine(parts, p)
    mq = _combine(parts, q)
    if var_on == "p":
        return mp.map(lambda x: s * x, LAURENT) + mq.map(LaurentPoly, LAURENT)
    return mp.map(LaurentPoly, LAURENT) + mq.map(lambda x: s * x, LAURENT)


def _constant_unit_diagonal(h):
    return all(h[i, i].is_constant() and h[i, i] != 0 for i in range(h.nrows))


@dataclass(frozen=True)
class _ChartFrame:
    frame: Matrix  # (2d+2) x 2 polynomial frame of Ker B / Im A
    coords: Matrix  # 2 x (2d+2): frame coordinates of vectors in Ker B
    k_basis: Matrix
    k_coords: Matrix
    u_inv: Matrix
    u: Matrix


def _chart_frame(maps, p, q, var_on):
    d = maps.d
    bs = _laurent_matrix(maps.B_parts, p, q, var_on)
    as_ = _laurent_matrix(maps.A_parts, p, q, var_on)
    n = 2 * d + 2
    if d:
        h, v, vinv = column_hermite(bs)
        if not _constant_unit_diagonal(h):
            raise DegenerateDataError("B_Z drops rank along the line", point=(p, q))
        k_basis = v.submatrix(range(n), range(d, n))
        k_coords = vinv.submatrix(range(d, n), range(n))
    else:
        k_basis = Matrix.identity(n, LAURENT)
        k_coords = Matrix.identity(n, LAURENT)
    c = k_coords @ as_
    if d:
        h2, u, uinv = row_hermite(c)
        if not _constant_unit_diagonal(h2):
            raise DegenerateDataError("A_Z drops rank along the line", point=(p, q))
    else:
        u = uinv = Matrix.identity(n, LAURENT)
    frame = k_basis @ uinv.submatrix(range(d + 2), range(d, d + 2))
    coords = u.submatrix(range(d, d + 2), range(d + 2)) @ k_coords
    return _ChartFrame(frame, coords, k_basis, k_coords, uinv, u), bs


def transition_on_line(data: ADHMData, p, q) -> Matrix:
    """Clutching matrix of the bundle restricted to the line through ``P`` and ``Q``.

    The line is ``[s:u] -> s P + u Q``. ``F0`` is a polynomial frame in ``s``
    over the chart ``u != 0`` and ``Finf`` a polynomial frame in ``1/s`` over
    ``s != 0``. The returned ``g`` (determinant 1) satisfies ``F0 = Finf g``
    modulo ``Im A`` on the overlap, so the restricted bundle is ``V_g``.
    """
    p, q = _line_points(p, q)
    maps = assemble(data)
    zero_chart, b0 = _chart_frame(maps, p, q, "p")
    inf_chart, _ = _chart_frame(maps, q, p, "p")  # s' P' + Q' with P'=Q, Q'=P, s' = 1/s
    h = inf_chart.frame.map(lambda x: x.substitute_inverse(), LAURENT)
    if data.d and not (b0 @ h).is_zero():
        raise ConsistencyError("infinity-chart frame is not in Ker B on the overlap")
    t_h = zero_chart.coords @ h
    # h must equal F0 t_h modulo Im A: check via the kernel basis decomposition
    kc = zero_chart.k_coords @ h
    if zero_chart.k_basis @ kc != h:
        raise ConsistencyError("frame decomposition failed")
    det = t_h.det()
    if not det.is_constant() or det == 0:
        raise ConsistencyError(f"transition determinant {det} is not a nonzero constant")
    c = det.coeff(0)
    t_h = Matrix([[t_h[0, 0] / c, t_h[0, 1]], [t_h[1, 0] / c, t_h[1, 1]]], 2, LAURENT)
    (x, y), (z, w) = t_h.rows()
    return Matrix([[w, -y], [-z, x]], 2, LAURENT)


def splitting_on_line(data: ADHMData, p, q) -> int:
    g = transition_on_line(data, p, q)
    return birkhoff(g, exponent_spread(g) + 1).n


def line_corank(data: ADHMData, p, q) -> int:
    """``d - rank(B_P A_Q)``: the splitting type read off ``h^0(E|_line(-1))``."""
    p, q = _line_points(p, q)
    if data.d == 0:
        return 0
    maps = assemble(data)
    return data.d - rank(maps.B_at(p) @ maps.A_at(q))


def line_points(dual):
    """Two points spanning the line ``p lam + q mu + r nu = 0``."""
    dual = tuple(Fraction(x) for x in dual)
    if not any(dual):
        raise MalformedInputError("the zero vector is not a line")
    ker = rank_kernel_image(_qq([dual], 3)).kernel
    return ker[0], ker[1]


def dual_grid(size: int):
    """``size x size`` lines ``p lam + mu + q nu = 0`` with integer ``p, q`` around 0."""
    values = range(-(size // 2), size - size // 2)
    return [(p, 1, q) for p in values for q in values]


@dataclass(frozen=True)
class ScanEntry:
    line: tuple
    n: Optional[int]
    error: Optional[str] = None


@dataclass(frozen=True)
class ScanReport:
    entries: tuple
    histogram: dict = field(default_factory=dict)

    @property
    def jumping(self):
        return [e for e in self.entries if e.n]


def _scan_one(data, line):
    try:
        p, q = line_points(line)
        n = splitting_on_line(data, p, q)
        m = line_corank(data, p, q)
        if n != m:
            return ScanEntry(line, None, f"Birkhoff n={n} disagrees with corank {m}")
        return ScanEntry(line, n)
    except (DegenerateDataError, ConsistencyError, MalformedInputError) as exc:
        return ScanEntry(line, None, str(exc))


def jumping_line_scan(data: ADHMData, grid) -> ScanReport:
    _require_valid(data)
    entries = tuple(_scan_one(data, tuple(Fraction(x) for x in line)) for line in grid)
    hist = Counter(e.n for e in entries if e.n is not None)
    return ScanReport(entries, dict(sorted(hist.items())))


# random data ---------------------------------------------------------------------------------

def _draw(rng):
    return Fraction(rng.randint(-3, 3), rng.choice((1, 1, 1, 2)))


def _ad_matrix(alpha):
    """Matrix of ``X -> alpha X - X alpha`` on row-major flattened ``X``."""
    d = alpha.nrows
    rows = []
    for i in range(d):
        for j in range(d):
            row = [Fraction(0)] * (d * d)
            for k in range(d):
                row[k * d + j] += alpha[i, k]
                row[i * d + k] -= alpha[k, j]
            rows.append(row)
    return _qq(rows, d * d)


def _random_combo(rng, basis, length):
    out = [Fraction(0)] * length
    for v in basis:
        c = rng.choice((-2, -1, 1, 2, 3))
        out = [x + c * y for x, y in zip(out, v)]
    return out


def _draw_adhm(rng, d):
    alpha = _qq([[_draw(rng) for _ in range(d)] for _ in range(d)], d)
    a = _qq([[_draw(rng) for _ in range(2)] for _ in range(d)], 2)
    ad = _ad_matrix(alpha)
    centralizer = rank_kernel_image(ad).kernel
    # b a^t must be trace-orthogonal to the centralizer of alpha (= coker of ad)
    cons = []
    for cvec in centralizer:
        row = []
        for i in range(d):
            for k in range(2):
                row.append(sum((cvec[j * d + i] * a[j, k] for j in range(d)), Fraction(0)))
        cons.append(row)
    b_space = rank_kernel_image(_qq(cons, 2 * d)).kernel if cons else [
        tuple(Fraction(int(i == j)) for i in range(2 * d)) for j in range(2 * d)]
    bvec = _random_combo(rng, b_space, 2 * d)
    b = _qq([bvec[2 * i:2 * i + 2] for i in range(d)], 2)
    rhs = [-x for row in (b @ a.T).rows() for x in row]
    sol = solve_affine(ad, rhs)
    if sol is None:
        return None
    particular, kern = sol
    bflat = [x + y for x, y in zip(particular, _random_combo(rng, kern, d * d))]
    beta = _qq([bflat[i * d:(i + 1) * d] for i in range(d)], d)
    return ADHMData(d, alpha, beta, a, b)


def random_adhm(d: int, seed, nondegenerate_only=False, max_tries=50) -> ADHMData:
    """Seeded random point of the ADHM variety with small rational entries.

    ``alpha`` and ``a`` are drawn freely, ``b`` from the linear space making
    the relation solvable, and ``beta`` by solving the linear equation
    ``[alpha, beta] = -b a^t`` plus a random centralizer element.
    """
    if d < 0:
        raise MalformedInputError("d must be nonnegative")
    if d == 0:
        return ADHMData.empty()
    rng = random.Random(seed)
    for _ in range(max_tries):
        data = _draw_adhm(rng, d)
        if data is None or not validate(data):
            continue
        if not nondegenerate_only or nondegenerate(data):
            return data
    raise GeneratorExhaustedError(f"no suitable ADHM data for d={d} after {max_tries} draws")


def random_point(rng, lo=-5, hi=5):
    while True:
        z = tuple(Fraction(rng.randint(lo, hi), rng.choice((1, 2, 3))) for _ in range(3))
        if any(z):
            return z


__all__ = [
    "ADHMData", "Fiber", "FrameCheck", "MonadMaps", "NondegeneracyReport", "ScanEntry",
    "ScanReport", "Witness", "assemble", "common_eigenvector_in_kernel", "dual_grid", "fiber",
    "jumping_line_scan", "line_corank", "line_points", "monad_identities", "nondegenerate",
    "nondegeneracy_report", "random_adhm", "random_point", "same_fiber", "splitting_on_line",
    "standard_frame_check", "transition_on_line", "validate",
]
