from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from kpm.errors import MalformedInputError
from kpm.schubert import (
    Obstruction,
    P3Class,
    Pullback,
    SchubertClass,
    admissible_degree,
    eps_product,
    multiplicativity_defect,
    p3_pullback,
)

eps = SchubertClass.eps


def test_small_products():
    assert eps(1) * eps(1) == eps(2, 2)
    assert eps(1) * eps(1) * eps(1) == eps(3, 6)
    assert eps_product(2, 3) == eps(5, 10)
    assert str(eps_product(2, 3)) == "10*eps_5"


def test_powers_of_eps1():
    # eps_1^k = k! eps_k, i.e. eps_k behaves like x^k / k!
    x = eps(0)
    for k in range(1, 9):
        x = x * eps(1)
        assert x == eps(k, factorial(k))


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_associative_and_commutative(i, j, k):
    assert (eps(i) * eps(j)) * eps(k) == eps(i) * (eps(j) * eps(k))
    assert eps(i) * eps(j) == eps(j) * eps(i)


def test_negative_index_rejected():
    with pytest.raises(MalformedInputError):
        eps_product(-1, 2)


@pytest.mark.parametrize("d,ok", [(0, True), (1, False), (2, False), (3, False), (6, True),
                                  (12, True), (18, True), (9, False)])
def test_admissible_small(d, ok):
    assert admissible_degree(d) is ok


def test_degree_six_images():
    pb = p3_pullback(6)
    assert isinstance(pb, Pullback)
    assert pb.images == (P3Class.h(1, 6), P3Class.h(2, 18), P3Class.h(3, 36))
    assert multiplicativity_defect(pb) is None


def test_obstruction_index():
    ob = p3_pullback(2)
    assert isinstance(ob, Obstruction)
    assert (ob.index, str(ob)) == (3, "obstruction at eps_3")
    ob = p3_pullback(3)
    assert ob.index == 2


def test_naive_map_is_not_multiplicative():
    # eps_i -> d^i h^i breaks eps_1^2 = 2 eps_2 unless d = 0
    naive = Pullback(6, (P3Class.h(1, 6), P3Class.h(2, 36), P3Class.h(3, 216)))
    assert multiplicativity_defect(naive) == (1, 1)


@given(st.integers(0, 1000))
def test_admissible_iff_divisible_by_six(d):
    direct = all(Fraction(d ** i, factorial(i)).denominator == 1 for i in (1, 2, 3))
    assert admissible_degree(d) == direct == (d % 6 == 0)
