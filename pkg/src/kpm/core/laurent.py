"""Finite Laurent polynomials in one variable with rational coefficients."""
import math
from fractions import Fraction

VAL_ZERO = math.inf  # valuation of the zero polynomial

_RATIONAL = (int, Fraction)


def _sup(e):
    return str(e) if e >= 0 else f"({e})"


class LaurentPoly:
    """Sparse ``sum c_e t^e`` with finitely many nonzero rational ``c_e``.

    Immutable. Zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_val")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, _RATIONAL):
            terms = {0: terms}
        clean = {}
        for e, c in dict(terms).items():
            if not isinstance(e, int):
                raise TypeError(f"exponent {e!r} is not an integer")
            c = Fraction(c)
            if c:
                clean[e] = c
        self._terms = clean
        self._val = min(clean) if clean else VAL_ZERO

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls({exponent: coeff})

    @classmethod
    def from_list(cls, coeffs, start=0):
        """Polynomial ``sum coeffs[i] t^(start+i)``."""
        return cls({start + i: c for i, c in enumerate(coeffs)})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    @property
    def valuation(self):
        return self._val

    @property
    def degree(self):
        """Largest exponent; ``-inf`` for zero."""
        return max(self._terms) if self._terms else -math.inf

    def coeff(self, e):
        return self._terms.get(e, Fraction(0))

    def is_zero(self):
        return not self._terms

    def is_monomial(self):
        return len(self._terms) == 1

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def is_polynomial(self):
        """True when no negative powers occur (valuation >= 0)."""
        return self._val >= 0

    def leading(self):
        d = self.degree
        return self._terms[d]

    def lowest(self):
        return self._terms[self._val]

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, _RATIONAL):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # only division by rationals and by monomials is exact in this ring
        if isinstance(other, _RATIONAL):
            return LaurentPoly({e: c / other for e, c in self._terms.items()})
        if isinstance(other, LaurentPoly) and other.is_monomial():
            (e0, c0), = other._terms.items()
            return LaurentPoly({e - e0: c / c0 for e, c in self._terms.items()})
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            if not self.is_monomial():
                raise ZeroDivisionError("only monomials are units in the Laurent ring")
            (e0, c0), = self._terms.items()
            return LaurentPoly({e0 * n: Fraction(c0) ** n})
        out = LaurentPoly(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k):
        """Multiply by ``t^k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def truncate(self, n):
        """Drop every term of exponent ``>= n``."""
        return LaurentPoly({e: c for e, c in self._terms.items() if e < n})

    def substitute_inverse(self):
        """The image under ``t -> t^-1``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def __call__(self, x):
        return sum((c * Fraction(x) ** e for e, c in self._terms.items()), Fraction(0))

    def poly_divmod(self, other):
        """Euclidean division in ``Q[t]``; both operands must be polynomials."""
        if not (self.is_polynomial() or self.is_zero()) or not other.is_polynomial():
            raise ValueError("poly_divmod needs polynomials (valuation >= 0)")
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        r = dict(self._terms)
        q = {}
        dq = other.degree
        lc = other.leading()
        while r:
            dr = max(r)
            if dr < dq:
                break
            c = r[dr] / lc
            k = dr - dq
            q[k] = c
            for e, b in other._terms.items():
                r[e + k] = r.get(e + k, 0) - c * b
                if r[e + k] == 0:
                    del r[e + k]
        return LaurentPoly(q), LaurentPoly(r)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self.is_constant():
            return hash(self._terms.get(0, 0))
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            if e == 0:
                parts.append(str(c))
                continue
            mono = "t" if e == 1 else f"t^{_sup(e)}"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


T = LaurentPoly.monomial(1)
ONE = LaurentPoly(1)
ZERO = LaurentPoly()
