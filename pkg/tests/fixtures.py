"""Hand-built test data and independent oracles shared across test modules."""
import random
from fractions import Fraction

import sympy

from kpm.core.laurent import LaurentPoly
from kpm.core.matrix import LAURENT, QQ, Matrix
from kpm.monad import ADHMData, assemble

T = LaurentPoly.monomial(1)
TINV = LaurentPoly.monomial(-1)


def adhm(d, alpha, beta, a, b):
    return ADHMData(d, Matrix(alpha, d, QQ), Matrix(beta, d, QQ), Matrix(a, 2, QQ), Matrix(b, 2, QQ))


# the basic d=1 example: alpha = beta = 0, a = (1, 0), b = (0, 1)
X1 = adhm(1, [[0]], [[0]], [[1, 0]], [[0, 1]])

# rational spectra; answers derived by hand from common (left) eigenvectors
NONDEGENERATE = {
    "N1": X1,
    "N2": adhm(1, [[2]], [[-1]], [[1, 0]], [[0, 3]]),
    "N3": adhm(1, [[Fraction(1, 2)]], [[3]], [[1, 1]], [[1, -1]]),
    "N4": adhm(2, [[1, 0], [0, 2]], [[3, 0], [0, 4]], [[1, 0], [1, 0]], [[0, 1], [0, 1]]),
    "N5": adhm(2, [[0, 1], [0, 0]], [[0, 0], [1, 0]], [[1, 0], [0, 1]], [[-1, 0], [0, 1]]),
    "N6": adhm(2, [[1, 0], [0, 2]], [[3, 0], [0, 3]], [[1, 0], [1, 0]], [[0, 1], [0, 1]]),
    "N7": adhm(2, [[1, 0], [0, 1]], [[1, 0], [0, 2]], [[1, 0], [1, 0]], [[0, 1], [0, 1]]),
    "N8": adhm(3, [[1, 0, 0], [0, 2, 0], [0, 0, 3]], [[0] * 3] * 3,
               [[1, 0]] * 3, [[0, 1]] * 3),
    "N9": adhm(2, [[0, 1], [0, 0]], [[0, 0], [0, 0]], [[1, 0], [0, 0]], [[0, 1], [0, 1]]),
    # N5 conjugated by [[1, 1], [0, 1]]
    "N10": adhm(2, [[0, 1], [0, 0]], [[1, -1], [1, -1]], [[1, 0], [-1, 1]],
                [[-1, 1], [0, 1]]),
}

DEGENERATE = {
    "D1": adhm(1, [[0]], [[0]], [[1, 0]], [[0, 0]]),
    "D2": adhm(1, [[0]], [[0]], [[0, 0]], [[0, 1]]),
    "D3": adhm(1, [[1]], [[2]], [[0, 0]], [[0, 0]]),
    "D4": adhm(2, [[1, 0], [0, 2]], [[3, 0], [0, 4]], [[1, 0], [0, 0]], [[0, 1], [0, 1]]),
    "D5": adhm(2, [[1, 0], [0, 2]], [[3, 0], [0, 4]], [[1, 0], [1, 0]], [[0, 1], [0, 0]]),
    "D6": adhm(2, [[1, 1], [0, 2]], [[0, 0], [0, 1]], [[0, 0], [-1, 0]], [[1, 0], [0, 0]]),
    "D7": adhm(3, [[1, 0, 0], [0, 2, 0], [0, 0, 3]], [[0] * 3] * 3,
               [[1, 0], [1, 0], [0, 0]], [[0, 1]] * 3),
    "D8": adhm(2, [[0, 1], [0, 0]], [[0, 0], [0, 0]], [[0, 0], [1, 0]], [[0, 1], [0, 1]]),
    "D9": adhm(2, [[1, 0], [0, 1]], [[1, 0], [0, 1]], [[1, 0], [0, 1]], [[0, 0], [0, 0]]),
    "D10": adhm(2, [[1, 0], [0, 1]], [[0, 1], [0, 0]], [[1, 0], [0, 0]], [[0, 1], [0, 0]]),
}


def loop(rows):
    return Matrix(rows, 2, LAURENT)


PINNED_LOOPS = {
    "identity": (loop([[1, 0], [0, 1]]), 0),
    "diag(t, 1/t)": (loop([[T, 0], [0, TINV]]), 1),
    "[[1, 0], [1/t, 1]]": (loop([[1, 0], [TINV, 1]]), 0),
}


# oracles ----------------------------------------------------------------------------------

def sympy_rank(m: Matrix) -> int:
    if m.nrows == 0 or m.ncols == 0:
        return 0
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r]
                         for r in m.rows()]).rank()


def full_rank_by_gram(a: Matrix, columns: bool) -> bool:
    """Full column (or row) rank over Q iff the Gram matrix is nonsingular."""
    gram = a.T @ a if columns else a @ a.T
    return gram.nrows == 0 or gram.det() != 0


def grid_detects_degeneracy(data: ADHMData, size=30, extra=()):
    """Rank drop of ``A_Z`` or ``B_Z`` at some sampled ``Z = (lam, mu, 1)``.

    Can only confirm degeneracy; used against the exact eigenvalue test.
    """
    maps = assemble(data)
    values = range(-(size // 2), size - size // 2)
    pairs = [(l, m) for l in values for m in values] + list(extra)
    for lam, mu in pairs:
        z = (Fraction(lam), Fraction(mu), Fraction(1))
        if not (full_rank_by_gram(maps.A_at(z), True) and full_rank_by_gram(maps.B_at(z), False)):
            return True
    return False


def eigen_pairs(data: ADHMData):
    """Rational ``(lam, mu)`` with ``-lam`` and ``-mu`` eigenvalues of alpha and beta."""
    def rational_eigs(m):
        sm = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r]
                           for r in m.rows()])
        return [Fraction(int(e.p), int(e.q)) for e in sm.eigenvals() if e.is_rational]
    return [(-l, -m) for l in rational_eigs(data.alpha) for m in rational_eigs(data.beta)]


def random_rational(rng, lo=-4, hi=4):
    return Fraction(rng.randint(lo, hi), rng.choice((1, 1, 2, 3)))


def random_line(rng):
    from kpm.core.linalg import rank
    while True:
        p = tuple(random_rational(rng) for _ in range(3))
        q = tuple(random_rational(rng) for _ in range(3))
        if rank(Matrix([p, q], 3, QQ)) == 2:
            return p, q


def seeded(seed):
    return random.Random(seed)
