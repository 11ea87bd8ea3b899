from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gradedwander import (DA_KERNEL, HARDY_KERNEL, FreeModuleSpec, Grading, InnerKernel,
                          ModuleVector, Polynomial, gram_schmidt, inner_product, monomial_weight,
                          monomial_basis)
from gradedwander.exactla import sparse_rank
from gradedwander.polycore import DimensionError
from helpers import V


def test_monomial_weight_examples():
    assert monomial_weight(HARDY_KERNEL, (5, 7)) == 1
    assert monomial_weight(DA_KERNEL, (1, 1)) == Fraction(1, 2)
    assert monomial_weight(DA_KERNEL, (2, 0)) == 1


def test_drury_arveson_weights_invert_kernel_coefficients():
    # 1/(1 - <z,w>) = sum_j (z1 w1 + z2 w2 + z3 w3)^j: the coefficient of z^a w^a is the multinomial |a|!/a!
    for alpha in monomial_basis(Grading([1, 1, 1]), 4):
        coeff = (Polynomial(3, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1}) ** 4).coefficient(alpha)
        assert monomial_weight(DA_KERNEL, alpha) == 1 / coeff


def test_inner_product_examples():
    assert inner_product(V("x"), V("y"), HARDY_KERNEL) == 0
    assert inner_product(V("x+y"), V("x-y"), HARDY_KERNEL) == 0
    assert inner_product(V("x*y"), V("x*y"), DA_KERNEL) == Fraction(1, 2)


def test_custom_kernel_and_validation():
    k = InnerKernel.custom(lambda a: 1 + sum(a))
    assert inner_product(V("x^2"), V("3*x^2"), k) == 9
    with pytest.raises(ValueError):
        inner_product(V("x"), V("x"), InnerKernel.custom(lambda a: 0))
    with pytest.raises(ValueError):
        InnerKernel("bergman")


def test_module_mismatch():
    spec = FreeModuleSpec([1, 1], (0, 1))
    with pytest.raises(DimensionError):
        inner_product(V("x"), spec.basis_vector(0), HARDY_KERNEL)


def test_components_are_orthogonal():
    spec = FreeModuleSpec([1, 1], (0, 0))
    e1, e2 = spec.basis_vector(0), spec.basis_vector(1)
    assert inner_product(e1, e2, DA_KERNEL) == 0
    assert inner_product(e1 + e2, e1 + e2, HARDY_KERNEL) == 2


def test_gram_schmidt_examples():
    assert gram_schmidt([V("x"), V("2*x")], HARDY_KERNEL) == ([V("x")], [0])
    assert gram_schmidt([V("x"), V("x+y")], HARDY_KERNEL) == ([V("x"), V("y")], [0, 1])
    assert gram_schmidt([], HARDY_KERNEL) == ([], [])


@st.composite
def vector_lists(draw):
    g = Grading([1, 1, 1])
    k = draw(st.integers(0, 3))
    basis = monomial_basis(g, k)
    coeff = st.fractions(min_value=-2, max_value=2, max_denominator=2)
    vecs = []
    for _ in range(draw(st.integers(0, 6))):
        f = Polynomial(3, {a: draw(coeff) for a in draw(st.lists(st.sampled_from(basis), max_size=4))})
        vecs.append(ModuleVector.from_polynomial(f, g))
    return vecs


@settings(max_examples=80)
@given(vector_lists(), st.sampled_from([HARDY_KERNEL, DA_KERNEL]))
def test_gram_schmidt_properties(vecs, kernel):
    out, idx = gram_schmidt(vecs, kernel)
    for i in range(len(out)):
        for j in range(i):
            assert inner_product(out[i], out[j], kernel) == 0
    r = sparse_rank([v.coords() for v in vecs])
    assert len(out) == r == len(idx)
    gram = [[inner_product(u, v, kernel) for v in vecs] for u in vecs]
    from oracles import brute_rank
    assert brute_rank(gram) == r
    assert sparse_rank([v.coords() for v in vecs + out]) == r


@settings(max_examples=50)
@given(st.integers(0, 3), st.integers(0, 3), st.sampled_from([HARDY_KERNEL, DA_KERNEL]))
def test_distinct_degrees_are_orthogonal(p, q, kernel):
    g = Grading([1, 2])
    if p == q:
        return
    u = ModuleVector.from_polynomial(Polynomial(2, {a: 1 for a in monomial_basis(g, p)}), g)
    v = ModuleVector.from_polynomial(Polynomial(2, {a: 1 for a in monomial_basis(g, q)}), g)
    assert inner_product(u, v, kernel) == 0
