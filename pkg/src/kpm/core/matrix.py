"""Immutable dense matrices over one exact scalar ring.

Entries may be rationals, number-field elements, Laurent polynomials or
multivariate polynomials, but a single matrix never mixes two of those rings;
plain rational constants are embedded into the ring of the other entries.
"""
from fractions import Fraction

from ..errors import MalformedInputError, SingularInputError
from .laurent import LaurentPoly
from .mpoly import MPoly
from .numberfield import FieldElement

QQ = "QQ"
LAURENT = "laurent"

_RATIONAL = (int, Fraction)


def ring_of(x):
    if isinstance(x, _RATIONAL):
        return QQ
    if isinstance(x, FieldElement):
        return x.ring
    if isinstance(x, LaurentPoly):
        return LAURENT
    if isinstance(x, MPoly):
        return ("mpoly", x.nvars)
    raise MalformedInputError(f"unsupported matrix entry {x!r}")


def is_field(ring):
    return ring == QQ or not isinstance(ring, (str, tuple))


def unify_rings(rings):
    """Smallest ring among ``rings`` containing all the others."""
    rings = [r for r in rings if r != QQ]
    if not rings:
        return QQ
    kinds = {r if isinstance(r, (str, tuple)) else "field" for r in rings}
    if len(kinds) > 1:
        raise MalformedInputError(f"mixed scalar rings: {sorted(map(str, kinds))}")
    kind = kinds.pop()
    if kind != "field":
        return rings[0]
    top = rings[0]
    for r in rings[1:]:
        if top.contains(r):
            continue
        if r.contains(top):
            top = r
        else:
            raise MalformedInputError("mixed, unrelated number fields")
    return top


def coerce(x, ring):
    if ring == QQ:
        return Fraction(x)
    if ring == LAURENT:
        return x if isinstance(x, LaurentPoly) else LaurentPoly(x)
    if isinstance(ring, tuple):
        return x if isinstance(x, MPoly) else MPoly.const(ring[1], x)
    return ring.coerce(x)


class Matrix:
    __slots__ = ("_rows", "nrows", "ncols", "ring")

    def __init__(self, rows, ncols=None, ring=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise MalformedInputError("empty matrix needs an explicit column count")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise MalformedInputError("matrix rows have unequal lengths")
        if ring is None:
            ring = unify_rings({ring_of(x) for r in rows for x in r} or {QQ})
        self._rows = tuple(tuple(coerce(x, ring) for x in r) for r in rows)
        self.nrows = len(rows)
        self.ncols = ncols
        self.ring = ring

    # construction helpers -------------------------------------------------
    @classmethod
    def zeros(cls, nrows, ncols, ring=QQ):
        return cls([[0] * ncols for _ in range(nrows)], ncols, ring)

    @classmethod
    def identity(cls, n, ring=QQ):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, ring)

    @classmethod
    def diag(cls, entries, ring=None):
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], n, ring)

    @classmethod
    def from_columns(cls, cols, nrows=None, ring=None):
        cols = [list(c) for c in cols]
        if not cols:
            if nrows is None:
                raise MalformedInputError("need nrows for an empty column list")
            return cls([[] for _ in range(nrows)], 0, ring or QQ)
        n = len(cols[0])
        return cls([[c[i] for c in cols] for i in range(n)], len(cols), ring)

    @classmethod
    def block(cls, blocks):
        """Assemble from a 2-D list of matrices with compatible shapes."""
        rows = []
        ring = unify_rings({b.ring for brow in blocks for b in brow})
        ncols = sum(b.ncols for b in blocks[0])
        for brow in blocks:
            h = brow[0].nrows
            if any(b.nrows != h for b in brow) or sum(b.ncols for b in brow) != ncols:
                raise MalformedInputError("incompatible block shapes")
            for i in range(h):
                rows.append([x for b in brow for x in b._rows[i]])
        return cls(rows, ncols, ring)

    def hstack(self, *others):
        return Matrix.block([[self, *others]])

    def vstack(self, *others):
        return Matrix.block([[m] for m in (self, *others)])

    # access ------------------------------------------------------------------
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row(self, i):
        return self._rows[i]

    def col(self, j):
        return tuple(r[j] for r in self._rows)

    def rows(self):
        return self._rows

    def columns(self):
        return [self.col(j) for j in range(self.ncols)]

    def tolist(self):
        return [list(r) for r in self._rows]

    def submatrix(self, rows, cols):
        return Matrix([[self._rows[i][j] for j in cols] for i in rows], len(cols), self.ring)

    def map(self, f, ring=None):
        return Matrix([[f(x) for x in r] for r in self._rows], self.ncols, ring)

    @property
    def T(self):
        return Matrix([list(self.col(j)) for j in range(self.ncols)], self.nrows, self.ring)

    # arithmetic ----------------------------------------------------------------
    def _check_same(self, other):
        if self.shape != other.shape:
            raise MalformedInputError(f"shape mismatch {self.shape} vs {other.shape}")
        return unify_rings([self.ring, other.ring])

    def __add__(self, other):
        ring = self._check_same(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)],
                      self.ncols, ring)

    def __sub__(self, other):
        ring = self._check_same(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)],
                      self.ncols, ring)

    def __neg__(self):
        return self.map(lambda x: -x, self.ring)

    def scale(self, c):
        ring = unify_rings([self.ring, ring_of(c)])
        return Matrix([[c * x for x in r] for r in self._rows], self.ncols, ring)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise MalformedInputError(f"cannot multiply {self.shape} by {other.shape}")
        ring = unify_rings([self.ring, other.ring])
        zero = coerce(0, ring)
        cols = other.columns()
        out = []
        for r in self._rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a == 0 or b == 0:
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out, other.ncols, ring)

    def apply(self, vec):
        """Matrix times a column vector given as a sequence."""
        return (self @ Matrix.from_columns([vec], self.ncols)).col(0)

    def is_zero(self):
        return all(x == 0 for r in self._rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self._rows, other._rows) for a, b in zip(r, s)
        )

    def __hash__(self):
        return hash((self.shape, self._rows))

    # determinants and inverses ---------------------------------------------------
    def det(self):
        if self.nrows != self.ncols:
            raise MalformedInputError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return coerce(1, self.ring)
        if is_field(self.ring):
            return _det_field(self)
        return _det_expand(self._rows)

    def inverse(self):
        """Inverse over a field by Gauss-Jordan elimination."""
        if self.nrows != self.ncols:
            raise MalformedInputError("inverse of a non-square matrix")
        if not is_field(self.ring):
            if self.nrows == 2:
                d = self.det()
                if d == 0:
                    raise SingularInputError("singular matrix")
                a, b = self._rows[0]
                c, e = self._rows[1]
                return Matrix([[e / d, -b / d], [-c / d, a / d]], 2, self.ring)
            raise MalformedInputError("inverse only implemented over fields and for 2x2")
        n = self.nrows
        one, zero = coerce(1, self.ring), coerce(0, self.ring)
        aug = [list(r) + [one if i == j else zero for j in range(n)]
               for i, r in enumerate(self._rows)]
        for c in range(n):
            p = next((r for r in range(c, n) if aug[r][c] != 0), None)
            if p is None:
                raise SingularInputError("singular matrix")
            aug[c], aug[p] = aug[p], aug[c]
            inv = 1 / aug[c][c]
            aug[c] = [x * inv for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c] != 0:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return Matrix([r[n:] for r in aug], n, self.ring)

    def __repr__(self):
        if self.nrows == 0:
            return f"Matrix(0x{self.ncols})"
        body = "; ".join(", ".join(str(x) for x in r) for r in self._rows)
        return f"Matrix([{body}])"

    def pretty(self):
        cells = [[str(x) for x in r] for r in self._rows]
        if not cells or not cells[0]:
            return f"[{self.nrows}x{self.ncols} empty]"
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(w) for c in r) + " ]" for r in cells)


def _det_field(m):
    n = m.nrows
    a = [list(r) for r in m.rows()]
    det = coerce(1, m.ring)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return coerce(0, m.ring)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det = det * a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            if a[r][c] != 0:
                f = a[r][c] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def _det_expand(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _det_expand(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else rows[0][0] * 0
