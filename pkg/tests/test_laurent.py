from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semizn.laurent import NEG_INF, LaurentPoly, as_direction

from conftest import mono


X = mono((1,))
Xinv = mono((-1,))
ONE1 = LaurentPoly.one(1)


def test_multiply_hand_examples():
    # (X - 1)(X^-1 - 1) = 2 - X - X^-1
    left = X - ONE1
    right = Xinv - ONE1
    assert left * right == LaurentPoly(1, {(0,): 2, (1,): -1, (-1,): -1})
    # absorbing zero
    assert (X - ONE1) * LaurentPoly.zero(1) == LaurentPoly.zero(1)
    # (1 + X1^2 X2^-1) * X1^-2 X2^3 = X1^-2 X2^3 + X2^2
    f1 = LaurentPoly(2, {(0, 0): 1, (2, -1): 1})
    f2 = mono((-2, 3))
    assert f1 * f2 == LaurentPoly(2, {(-2, 3): 1, (0, 2): 1})


def test_weighted_degree_examples():
    f1 = LaurentPoly(2, {(0, 0): 1, (2, -1): 1})
    f2 = mono((-2, 3))
    assert f1.weighted_degree((0, 1)) == 0
    assert f2.weighted_degree((0, 1)) == 3
    assert LaurentPoly.zero(2).weighted_degree((0, 1)) == NEG_INF


def test_initial_examples():
    f3 = LaurentPoly(2, {(2, 3): 1, (3, 1): 1})
    assert f3.initial((0, 1)) == mono((2, 3))
    m = mono((5, -7), 3)
    assert m.initial((2, 9)) == m
    f1 = LaurentPoly(2, {(0, 0): 1, (2, -1): 1})
    assert f1.initial((1, 0)) == mono((2, -1))


def test_evaluate_positive_examples():
    assert (X - ONE1).evaluate_positive((1,)) == 0
    assert mono((-2, 3)).evaluate_positive((2, 1)) == Fraction(1, 4)
    assert LaurentPoly.zero(3).evaluate_positive((1, 2, 3)) == 0
    with pytest.raises(ValueError):
        X.evaluate_positive((0,))
    with pytest.raises(ValueError):
        X.evaluate_positive((-2,))


def test_variable_count_mismatch():
    with pytest.raises(ValueError):
        X * LaurentPoly.one(2)
    with pytest.raises(ValueError):
        as_direction((0, 0), 2)


def test_json_style_invariants():
    p = LaurentPoly(2, {(1, 0): Fraction(6, 3), (0, 1): Fraction(1, 2)})
    assert p.coefficient((1, 0)) == 2
    assert isinstance(p.coefficient((1, 0)), int)  # normalized integral coeff
    assert p.coefficient((0, 1)) == Fraction(1, 2)
    assert not p.is_integral()


# -- property tests ------------------------------------------------------------

small_polys = st.builds(
    lambda items: LaurentPoly(2, dict(items)),
    st.lists(
        st.tuples(
            st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
            st.integers(-5, 5),
        ),
        max_size=4,
    ),
)

directions = st.tuples(st.integers(-4, 4), st.integers(-4, 4)).filter(lambda v: any(v))


@given(small_polys, small_polys, small_polys)
@settings(max_examples=60, deadline=None)
def test_ring_laws(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p
    assert p - p == LaurentPoly.zero(2)


@given(small_polys, small_polys, directions)
@settings(max_examples=60, deadline=None)
def test_degree_and_initial_multiplicativity(p, q, v):
    prod = p * q
    if p.is_zero() or q.is_zero():
        assert prod.is_zero()
        return
    assert prod.weighted_degree(v) == p.weighted_degree(v) + q.weighted_degree(v)
    assert prod.initial(v) == p.initial(v) * q.initial(v)


@given(small_polys, directions, st.integers(1, 9), st.integers(1, 9))
@settings(max_examples=60, deadline=None)
def test_positive_scaling_invariance(p, v, num, den):
    c = Fraction(num, den)
    w = tuple(c * x for x in v)
    if p.is_zero():
        assert p.weighted_degree(v) == NEG_INF
        return
    assert p.initial(v) == p.initial(w)
    assert p.weighted_degree(w) == c * p.weighted_degree(v)


@given(small_polys, small_polys)
@settings(max_examples=40, deadline=None)
def test_evaluation_is_multiplicative(p, q):
    r = (Fraction(2, 3), Fraction(5, 1))
    assert (p * q).evaluate_positive(r) == p.evaluate_positive(r) * q.evaluate_positive(r)
