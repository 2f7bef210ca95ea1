"""Integral cohomology of the SL(2) affine Grassmannian and of P^3.

``H^{2i}`` of the affine Grassmannian is free of rank one on the Schubert
class ``eps_i``, with ``eps_i * eps_j = C(i+j, i) eps_{i+j}`` (a divided power
algebra). A morphism ``P^3 -> Gr`` of degree ``d`` pulls ``eps_1`` back to
``d*h``; ring compatibility then forces ``eps_i -> d^i/i! h^i``, which is
integral for ``i <= 3`` exactly when ``6 | d``.
"""
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Dict, Optional

from .errors import MalformedInputError


@dataclass(frozen=True)
class SchubertClass:
    """Finite integer combination ``sum c_i eps_i``."""

    coeffs: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for i, c in self.coeffs.items():
            if not isinstance(i, int) or i < 0:
                raise MalformedInputError(f"bad Schubert index {i!r}")
            if not isinstance(c, int):
                raise MalformedInputError(f"Schubert coefficients are integers, got {c!r}")
            if c:
                clean[i] = c
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def eps(cls, i, c=1):
        return cls({i: c})

    def __add__(self, other):
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, 0) + c
        return SchubertClass(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return SchubertClass({i: c * other for i, c in self.coeffs.items()})
        return class_product(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, SchubertClass) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self):
        return not self.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in sorted(self.coeffs):
            c = self.coeffs[i]
            parts.append(f"eps_{i}" if c == 1 else f"{c}*eps_{i}")
        return " + ".join(parts).replace("+ -", "- ")


def eps_product(i: int, j: int) -> SchubertClass:
    if i < 0 or j < 0:
        raise MalformedInputError("Schubert indices are nonnegative")
    return SchubertClass({i + j: comb(i + j, i)})


def class_product(x: SchubertClass, y: SchubertClass) -> SchubertClass:
    out: Dict[int, int] = {}
    for i, a in x.coeffs.items():
        for j, b in y.coeffs.items():
            out[i + j] = out.get(i + j, 0) + a * b * comb(i + j, i)
    return SchubertClass(out)


@dataclass(frozen=True)
class P3Class:
    """``c0 + c1 h + c2 h^2 + c3 h^3`` in ``H*(P^3, Z)``; ``h^4 = 0``."""

    coeffs: tuple = (0, 0, 0, 0)

    def __post_init__(self):
        if len(self.coeffs) != 4 or not all(isinstance(c, int) for c in self.coeffs):
            raise MalformedInputError("P3Class needs four integer coefficients")

    @classmethod
    def h(cls, k=1, c=1):
        out = [0, 0, 0, 0]
        if k <= 3:
            out[k] = c
        return cls(tuple(out))

    def __add__(self, other):
        return P3Class(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, int):
            return P3Class(tuple(c * other for c in self.coeffs))
        out = [0, 0, 0, 0]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                if i + j <= 3:
                    out[i + j] += a * b
        return P3Class(tuple(out))

    __rmul__ = __mul__

    def __str__(self):
        names = ["1", "h", "h^2", "h^3"]
        parts = [f"{c}*{names[i]}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Pullback:
    """Images of ``eps_1..eps_3``; higher classes go to zero."""

    d: int
    images: tuple  # P3Class for eps_1, eps_2, eps_3

    def __call__(self, x: SchubertClass) -> P3Class:
        total = P3Class()
        for i, c in x.coeffs.items():
            total = total + self.image(i) * c
        return total

    def image(self, i):
        if i == 0:
            return P3Class((1, 0, 0, 0))
        if i <= 3:
            return self.images[i - 1]
        return P3Class()


@dataclass(frozen=True)
class Obstruction:
    d: int
    index: int  # first i with d^i/i! not an integer
    numerator: int
    denominator: int

    def __str__(self):
        return f"obstruction at eps_{self.index}"


def p3_pullback(d: int):
    """Candidate ring map ``H*(Gr) -> H*(P^3)`` sending ``eps_1`` to ``d h``.

    Returns a :class:`Pullback` or the first failing integrality constraint as
    an :class:`Obstruction`.
    """
    if not isinstance(d, int) or d < 0:
        raise MalformedInputError("degree must be a nonnegative integer")
    images = []
    for i in (1, 2, 3):
        num, den = d ** i, factorial(i)
        if num % den:
            return Obstruction(d, i, num, den)
        images.append(P3Class.h(i, num // den))
    return Pullback(d, tuple(images))


def admissible_degree(d: int) -> bool:
    return isinstance(p3_pullback(d), Pullback)


def multiplicativity_defect(pb: Pullback, max_total=3) -> Optional[tuple]:
    """First pair ``(i, j)`` with ``i + j <= max_total`` breaking multiplicativity."""
    for i in range(max_total + 1):
        for j in range(max_total + 1 - i):
            lhs = pb(eps_product(i, j))
            rhs = pb.image(i) * pb.image(j)
            if lhs != rhs:
                return (i, j)
    return None
