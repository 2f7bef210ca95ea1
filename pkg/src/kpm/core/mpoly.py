"""Sparse multivariate polynomials with rational coefficients.

Used for the line parameters of monad maps, e.g. entries linear in
``(lam, mu, nu)``.
"""
from fractions import Fraction

_RATIONAL = (int, Fraction)


class MPoly:
    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise ValueError(f"bad monomial {mono!r} for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i):
        mono = [0] * nvars
        mono[i] = 1
        return cls(nvars, {tuple(mono): 1})

    @classmethod
    def gens(cls, nvars):
        return tuple(cls.var(nvars, i) for i in range(nvars))

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, mono):
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self):
        return not self._terms

    def total_degree(self):
        return max((sum(m) for m in self._terms), default=-1)

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise TypeError("polynomials in different numbers of variables")
            return other
        if isinstance(other, _RATIONAL):
            return MPoly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {m: -c for m, c in self._terms.items()})

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
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __call__(self, *values):
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for v, e in zip(values, m):
                term = term * v ** e
            total = total + term
        return total

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "0"
        names = "xyz" if self.nvars <= 3 else [f"x{i}" for i in range(self.nvars)]
        parts = []
        for m, c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)
