"""Simple algebraic extensions ``base[x]/(m(x))`` of the rationals.

A :class:`SimpleExtension` over ``QQ`` with an irreducible modulus is a number
field. Extensions may be stacked once more (two generators in total); the
second modulus is irreducible over the rationals but may factor over the first
field, in which case the ring is a product of fields. Inverting a zero divisor
in such a ring raises :class:`SplittingFound`, carrying a proper factor of the
modulus, so callers can split and retry (dynamic evaluation).
"""
from fractions import Fraction

from . import upoly

_RATIONAL = (int, Fraction)


class SplittingFound(ZeroDivisionError):
    """A nonzero non-invertible element exposed a factorization of the modulus."""

    def __init__(self, ring, factor):
        super().__init__(f"modulus of {ring!r} has proper factor {upoly.to_str(factor, ring.var)}")
        self.ring = ring
        self.factor = factor


class SimpleExtension:
    """The quotient ring ``base[var]/(modulus)`` with ``modulus`` monic."""

    def __init__(self, modulus, base=None, var="r"):
        modulus = upoly.monic(tuple(modulus))
        if upoly.degree(modulus) < 1:
            raise ValueError("modulus must have positive degree")
        self.base = base
        self.var = var
        self.modulus = tuple(self._lift(c) for c in modulus)
        self.degree = len(self.modulus) - 1
        self.depth = 1 if base is None else base.depth + 1
        if self.depth > 2:
            raise ValueError("extension towers are limited to two generators")

    def _lift(self, c):
        if self.base is None:
            if isinstance(c, _RATIONAL):
                return Fraction(c)
            raise TypeError(f"cannot use {c!r} as a rational coefficient")
        return self.base.coerce(c)

    def __repr__(self):
        inner = "QQ" if self.base is None else repr(self.base)
        return f"{inner}[{self.var}]/({upoly.to_str(self.modulus, self.var)})"

    def contains(self, other):
        f = self
        while f is not None:
            if f is other:
                return True
            f = f.base
        return False

    def coerce(self, x):
        if isinstance(x, FieldElement):
            if x.ring is self:
                return x
            if self.base is not None and self.base.contains(x.ring):
                return FieldElement(self, (self.base.coerce(x),))
            raise TypeError(f"cannot coerce element of {x.ring!r} into {self!r}")
        if isinstance(x, _RATIONAL):
            return FieldElement(self, (self._lift(x),))
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    @property
    def gen(self):
        return FieldElement(self, (self._lift(0), self._lift(1)))

    def __call__(self, coeffs):
        return FieldElement(self, tuple(self._lift(c) for c in coeffs))


def _common_ring(a, b):
    if a.contains(b):
        return a
    if b.contains(a):
        return b
    raise TypeError(f"incompatible extensions {a!r} and {b!r}")


class FieldElement:
    """An element of a :class:`SimpleExtension`, reduced modulo its modulus."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        coeffs = upoly.trim(coeffs)
        if len(coeffs) > ring.degree:
            coeffs = upoly.divmod_(coeffs, ring.modulus)[1]
        self.ring = ring
        self.coeffs = coeffs

    def _pair(self, other):
        if isinstance(other, FieldElement):
            ring = _common_ring(self.ring, other.ring)
            return ring.coerce(self), ring.coerce(other)
        if isinstance(other, _RATIONAL):
            return self, self.ring.coerce(other)
        return NotImplemented, NotImplemented

    def __add__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return FieldElement(a.ring, upoly.add(a.coeffs, b.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.ring, upoly.neg(self.coeffs))

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return FieldElement(a.ring, upoly.sub(a.coeffs, b.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return FieldElement(a.ring, upoly.mul(a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = upoly.xgcd(self.coeffs, self.ring.modulus)
        if upoly.degree(g) > 0:
            raise SplittingFound(self.ring, g)
        return FieldElement(self.ring, s)

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.ring.coerce(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            try:
                a, b = self._pair(other)
            except TypeError:
                return False
            return a.coeffs == b.coeffs
        if isinstance(other, _RATIONAL):
            if other == 0:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash((id(self.ring), self.coeffs))

    def is_rational(self):
        if len(self.coeffs) > 1:
            return False
        if not self.coeffs:
            return True
        c = self.coeffs[0]
        return not isinstance(c, FieldElement) or c.is_rational()

    def __repr__(self):
        return f"({upoly.to_str(self.coeffs, self.ring.var)} mod {upoly.to_str(self.ring.modulus, self.ring.var)})"

    __str__ = __repr__
