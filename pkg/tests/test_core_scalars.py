from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kpm.core import upoly
from kpm.core.laurent import LaurentPoly
from kpm.core.mpoly import MPoly
from kpm.core.numberfield import SimpleExtension, SplittingFound

T = LaurentPoly.monomial(1)

laurents = st.dictionaries(st.integers(-4, 4), st.fractions(max_denominator=5).filter(bool),
                           max_size=4).map(LaurentPoly)


@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)
    assert p - p == LaurentPoly()


@given(laurents, laurents)
def test_laurent_valuation_and_degree_of_product(p, q):
    if p.is_zero() or q.is_zero():
        assert (p * q).is_zero()
    else:
        assert (p * q).valuation == p.valuation + q.valuation
        assert (p * q).degree == p.degree + q.degree


def test_laurent_monomial_inverse_and_substitution():
    p = T ** 2 * 3 + LaurentPoly.monomial(-1, Fraction(1, 2))
    assert T ** -2 * T ** 2 == LaurentPoly(1)
    assert p.substitute_inverse().coeff(-2) == 3
    assert p.substitute_inverse().coeff(1) == Fraction(1, 2)
    assert p(Fraction(2)) == 12 + Fraction(1, 4)


def test_laurent_poly_divmod():
    num = T ** 3 + T + 1
    den = T + 1
    q, r = num.poly_divmod(den)
    assert q * den + r == num
    assert r.degree < den.degree


def test_upoly_xgcd():
    p = (Fraction(-1), Fraction(0), Fraction(1))  # x^2 - 1
    q = (Fraction(1), Fraction(1))  # x + 1
    g, s, t = upoly.xgcd(p, q)
    assert upoly.add(upoly.mul(s, p), upoly.mul(t, q)) == g
    assert upoly.monic(g) == q


def test_number_field_arithmetic():
    k = SimpleExtension((2, 0, 1))  # r^2 + 2 ... i.e. sqrt(-2)
    r = k.gen
    assert r * r == -2
    assert (1 + r) * (1 / (1 + r)) == 1
    assert (r ** 4) == 4
    assert not r.is_rational()


def test_tower_splitting_is_reported():
    k = SimpleExtension((-2, 0, 1))  # sqrt 2
    s = SimpleExtension((-8, 0, 1), base=k, var="s")  # x^2 - 8 = (x - 2r)(x + 2r) over k
    y = s.gen
    with pytest.raises(SplittingFound) as info:
        (y - 2 * k.gen).inverse()
    assert info.value.ring is s


def test_mpoly_evaluation_and_product():
    lam, mu, nu = MPoly.gens(3)
    p = (lam + 2 * mu) * (nu - lam)
    assert p(1, 2, 3) == (1 + 4) * (3 - 1)
    assert p.total_degree() == 2
    assert p.coeff((1, 0, 1)) == 1
