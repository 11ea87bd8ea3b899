from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gradedwander.polycore import (DimensionError, Grading, Polynomial, add, homogeneous_components,
                                   monomial_basis, multiply, multiply_monomial, scale, weighted_degree)
from oracles import count_exponents, exponents


@pytest.mark.parametrize("alpha, weights, expected", [
    ((0, 0), (1, 1), 0),
    ((2, 1), (1, 2), 4),
    ((3, 0), (2, 5), 6),
])
def test_weighted_degree(alpha, weights, expected):
    assert weighted_degree(alpha, Grading(weights)) == expected


def test_weighted_degree_length_mismatch():
    with pytest.raises(DimensionError):
        weighted_degree((1, 2, 3), Grading([1, 1]))


def test_grading_rejects_nonpositive_weights():
    with pytest.raises(ValueError):
        Grading([1, 0])


def test_homogeneous_components_examples():
    assert homogeneous_components(Polynomial.zero(2), Grading([1, 1])) == {}
    f = Polynomial(2, {(1, 0): 1, (0, 2): 1})
    assert homogeneous_components(f, Grading([1, 1])) == {
        1: Polynomial(2, {(1, 0): 1}), 2: Polynomial(2, {(0, 2): 1})}
    g = Polynomial(2, {(1, 0): 1, (0, 1): 1})
    assert homogeneous_components(g, Grading([1, 2])) == {
        1: Polynomial(2, {(1, 0): 1}), 2: Polynomial(2, {(0, 1): 1})}


def test_monomial_basis_examples():
    assert monomial_basis(Grading([1, 1]), 0) == [(0, 0)]
    assert monomial_basis(Grading([1, 2]), 2) == [(2, 0), (0, 1)]
    assert monomial_basis(Grading([1, 1]), 2) == [(2, 0), (1, 1), (0, 2)]
    assert monomial_basis(Grading([1, 1]), -1) == []


def test_ring_ops_examples():
    z1, z2 = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    assert multiply(z1, z2) == Polynomial(2, {(1, 1): 1})
    zero = add(z1, scale(-1, z1))
    assert zero.is_zero() and zero.terms == {}
    assert multiply(z1 + z2, z1 - z2) == Polynomial(2, {(2, 0): 1, (0, 2): -1})
    assert multiply_monomial((1, 2), z1) == Polynomial(2, {(2, 2): 1})


def test_variable_count_mismatch():
    with pytest.raises(DimensionError):
        add(Polynomial.variable(2, 0), Polynomial.variable(3, 0))


def test_zero_has_no_degree():
    assert Polynomial.zero(2).degree(Grading([1, 1])) is None
    assert Polynomial(2, {(1, 0): 1, (0, 2): 1}).degree(Grading([1, 1])) is None
    assert Polynomial(2, {(1, 0): 1, (0, 2): 1}).degree(Grading([2, 1])) == 2


def test_immutable():
    f = Polynomial.variable(2, 0)
    with pytest.raises(AttributeError):
        f.nvars = 3
    f.terms[(5, 5)] = 1
    assert (5, 5) not in f.terms


weights_st = st.lists(st.integers(1, 3), min_size=1, max_size=3)
coeff_st = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polynomials(draw, n=None, max_deg=4):
    n = n or draw(st.integers(1, 3))
    terms = draw(st.dictionaries(st.tuples(*[st.integers(0, max_deg)] * n), coeff_st, max_size=6))
    return Polynomial(n, terms)


@given(weights_st, st.integers(0, 9))
def test_monomial_basis_matches_enumeration(weights, k):
    g = Grading(weights)
    basis = monomial_basis(g, k)
    assert sorted(basis) == sorted(exponents(weights, k))
    assert len(basis) == count_exponents(weights, k)
    assert basis == sorted(basis, reverse=True)


@given(st.data())
def test_components_resum(data):
    f = data.draw(polynomials())
    g = Grading(data.draw(st.lists(st.integers(1, 3), min_size=f.nvars, max_size=f.nvars)))
    parts = homogeneous_components(f, g)
    total = Polynomial.zero(f.nvars)
    for k, p in parts.items():
        assert not p.is_zero() and p.degree(g) == k
        total = total + p
    assert total == f


@settings(max_examples=60)
@given(st.data())
def test_product_of_homogeneous_is_homogeneous(data):
    n = data.draw(st.integers(1, 3))
    g = Grading(data.draw(st.lists(st.integers(1, 3), min_size=n, max_size=n)))
    p, q = data.draw(st.integers(0, 4)), data.draw(st.integers(0, 4))
    f = Polynomial(n, {a: data.draw(coeff_st) for a in monomial_basis(g, p)})
    h = Polynomial(n, {a: data.draw(coeff_st) for a in monomial_basis(g, q)})
    prod = multiply(f, h)
    assert prod.is_zero() or prod.degree(g) == p + q


@settings(max_examples=60)
@given(st.data())
def test_ring_axioms(data):
    n = data.draw(st.integers(1, 3))
    f, g, h = (data.draw(polynomials(n=n, max_deg=2)) for _ in range(3))
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f - f).is_zero()
    assert scale(Fraction(1, 2), f) * 2 == f
