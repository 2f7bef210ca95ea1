import random

import pytest
from hypothesis import given, settings, strategies as st

from fixtures import PINNED_LOOPS, T, TINV, loop
from kpm.core.factorizations import birkhoff, exponent_spread, min_valuation, smith_dvr
from kpm.core.laurent import LaurentPoly
from kpm.core.matrix import LAURENT, Matrix
from kpm.errors import MalformedInputError, TruncationTooSmallError
from kpm.lattice import random_loop_matrix


def test_smith_examples():
    assert smith_dvr(loop([[1, 0], [TINV, 1]])).exponents == (-1, 1)
    assert smith_dvr(loop([[T, 0], [0, TINV]])).exponents == (-1, 1)
    assert smith_dvr(loop([[T ** 2, 0], [0, T]])).exponents == (1, 2)


def test_smith_rejects_non_unit_determinant():
    with pytest.raises(MalformedInputError):
        smith_dvr(loop([[T + 1, 0], [0, 1]]))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_smith_oracle(seed):
    # k1 = least valuation of the entries, k1 + k2 = valuation of det
    g = random_loop_matrix(random.Random(seed), steps=3, max_exp=2, max_shift=2)
    res = smith_dvr(g)
    k1, k2 = res.exponents
    assert k1 == min_valuation(g)
    assert k1 + k2 == 0
    assert res.U @ g @ res.V == res.D
    for m in (res.U, res.V):
        assert min_valuation(m) >= 0
        d = m.det()
        assert d.is_constant() and d != 0


@pytest.mark.parametrize("name", sorted(PINNED_LOOPS))
def test_birkhoff_pinned(name):
    g, n = PINNED_LOOPS[name]
    assert birkhoff(g, 8).n == n


def _planted(rng, n):
    def elem(lo, hi):
        return LaurentPoly({e: rng.choice((-2, -1, 1, 2)) for e in range(lo, hi + 1)
                            if rng.random() < 0.6})
    gm = Matrix.identity(2, LAURENT)
    gp = Matrix.identity(2, LAURENT)
    for s in range(2):
        f, h = elem(-2, 0), elem(0, 2)
        up = s % 2 == 0
        gm = gm @ Matrix([[1, f], [0, 1]] if up else [[1, 0], [f, 1]], 2, LAURENT)
        gp = gp @ Matrix([[1, 0], [h, 1]] if up else [[1, h], [0, 1]], 2, LAURENT)
    return gm @ Matrix.diag([T ** n, T ** -n], LAURENT) @ gp


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(0, 3))
def test_birkhoff_recovers_planted_type(seed, n):
    g = _planted(random.Random(seed), n)
    res = birkhoff(g, exponent_spread(g) + 1)
    assert res.n == n
    assert res.g_minus @ res.D @ res.g_plus == g
    assert res.g_minus.det() == 1 and res.g_plus.det() == 1


def test_birkhoff_truncation_guard():
    g = loop([[T ** 3, 0], [0, T ** -3]])
    with pytest.raises(TruncationTooSmallError):
        birkhoff(g, 6)
    assert birkhoff(g, 7).n == 3


def test_birkhoff_needs_det_one():
    with pytest.raises(MalformedInputError):
        birkhoff(loop([[2, 0], [0, 1]]), 8)
