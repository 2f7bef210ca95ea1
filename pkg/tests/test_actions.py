import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fixtures import X1, adhm
from kpm.actions import (
    basis_change,
    cstar_act,
    cstar_p2,
    gl_act,
    gl_equivalent,
    literal_diag_check,
    pi_map,
    projective_equal,
    random_group_element,
    verify_cstar_equivariance,
)
from kpm.core.matrix import Matrix
from kpm.errors import MalformedInputError, SingularInputError
from kpm.monad import nondegenerate, random_adhm, random_point, splitting_on_line

ZS = (2, 3, -1, Fraction(1, 2))


def test_gl_identity_and_scalar():
    assert gl_act(Matrix.identity(1), X1) == X1
    assert gl_act([[2]], X1) == adhm(1, [[0]], [[0]], [[Fraction(1, 2), 0]], [[0, 2]])


def test_gl_singular():
    with pytest.raises(SingularInputError):
        gl_act([[0]], X1)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_gl_action_axiom(seed, d):
    rng = random.Random(seed)
    x = random_adhm(d, seed)
    g, h = random_group_element(rng, d), random_group_element(rng, d)
    assert gl_act(g, gl_act(h, x)) == gl_act(g @ h, x)


def test_cstar_examples():
    assert cstar_act(1, X1) == X1
    assert cstar_act(2, X1) == adhm(1, [[0]], [[0]], [[2, 0]], [[0, 1]])
    with pytest.raises(SingularInputError):
        cstar_act(0, X1)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_cstar_axiom_and_commutation(seed, d):
    rng = random.Random(seed)
    x = random_adhm(d, seed)
    z, w = rng.choice(ZS), rng.choice(ZS)
    assert cstar_act(z, cstar_act(w, x)) == cstar_act(z * w, x)
    g = random_group_element(rng, d)
    assert cstar_act(z, gl_act(g, x)) == gl_act(g, cstar_act(z, x))


def test_cstar_preserves_nondegeneracy():
    for seed in range(5):
        x = random_adhm(2, seed, nondegenerate_only=True)
        for z in ZS:
            assert nondegenerate(cstar_act(z, x))


def test_cstar_p2():
    assert cstar_p2(2, (0, 5, 7)) == (0, 5, 7)
    assert projective_equal(cstar_p2(2, (1, 0, 1)), (1, 0, 2))
    assert cstar_p2(3, (1, 2, 0))[2] == 0


def test_equivalence_reflexive():
    res = gl_equivalent(X1, X1)
    assert res.status == "found" and res.g == Matrix.identity(1)


def test_cstar_orbit_is_nontrivial_for_basic_example():
    res = gl_equivalent(cstar_act(2, X1), X1)
    assert res.status == "none" and res.g is None


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_equivalence_planted_and_symmetric(seed, d):
    rng = random.Random(seed)
    x = random_adhm(d, seed, nondegenerate_only=True)
    y = gl_act(random_group_element(rng, d), x)
    fwd = gl_equivalent(x, y)
    assert fwd.status == "found" and gl_act(fwd.g, x) == y
    back = gl_equivalent(y, x)
    assert back.status == "found" and gl_act(back.g, y) == x


def test_equivalence_dimension_mismatch():
    with pytest.raises(MalformedInputError):
        gl_equivalent(X1, random_adhm(2, 0))


def test_equivalence_inconclusive_with_no_trials():
    # degenerate data with a large stabilizer: solution space of positive dimension
    zero = adhm(1, [[0]], [[0]], [[0, 0]], [[0, 0]])
    assert gl_equivalent(zero, zero, trials=1).status == "inconclusive"
    assert gl_equivalent(zero, zero, trials=5).status == "found"


def test_gl_preserves_splitting_types():
    rng = random.Random(11)
    for seed in range(4):
        x = random_adhm(2, seed, nondegenerate_only=True)
        y = gl_act(random_group_element(rng, 2), x)
        for p, q in [((1, 0, 0), (0, 1, 0)), ((1, 0, 0), (0, 0, 1)), ((1, 2, 3), (0, 1, -1))]:
            assert splitting_on_line(x, p, q) == splitting_on_line(y, p, q)


def test_equivariance_basic_example():
    chk = verify_cstar_equivariance(X1, 2, (0, 0, 1))
    assert chk and chk.fiber_dims == (2, 2)
    assert verify_cstar_equivariance(X1, 1, (3, 1, 2))
    assert basis_change(1, 2) == Matrix.diag([1, Fraction(1, 2), 1, 1])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 3), st.sampled_from(ZS))
def test_equivariance_random(seed, d, z):
    rng = random.Random(seed)
    x = random_adhm(d, seed, nondegenerate_only=True)
    assert verify_cstar_equivariance(x, z, random_point(rng))


def test_literal_diagonal_fails_somewhere():
    # diag(z I, I, I_2) does not carry image onto image in general
    x = random_adhm(2, 0, nondegenerate_only=True)
    assert not literal_diag_check(x, 2, (1, 1, 1))
    assert verify_cstar_equivariance(x, 2, (1, 1, 1))


def test_pi_map():
    assert pi_map((1, 0, 0), (1, 1)) == (1, 0, 0, 1)
    assert pi_map((3, -1, 2), (0, 1)) == (0, 0, 0, 1)
    with pytest.raises(MalformedInputError):
        pi_map((0, 0, 0), (1, 1))


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3).filter(any),
       st.integers(-5, 5), st.integers(-5, 5).filter(bool), st.sampled_from(ZS))
def test_pi_factors_through_cstar(x, lam, mu, z):
    zx = tuple(z * c for c in x)
    assert pi_map(zx, (Fraction(lam) / z, mu)) == pi_map(x, (lam, mu))
