import pytest

from gradedwander import (DA_KERNEL, HARDY_KERNEL, ORTHOGONAL, SUBSET, FreeModuleSpec,
                          HomogeneityError, MinimalGenerators, ModuleVector, PresentedModule,
                          betti_counts, cyclicity, hilbert_function, inner_product,
                          minimize_generators, verify_minimal_orthogonality, wandering_slice)
from gradedwander.polycore import DimensionError
from helpers import P, STD2, V, ideal
from oracles import ideal_betti


def test_wandering_slice_examples():
    m = ideal("x", "y")
    w = wandering_slice(m, 1, HARDY_KERNEL)
    assert len(w) == 2 and inner_product(w[0], w[1], HARDY_KERNEL) == 0
    assert wandering_slice(m, 2) == []
    zero = PresentedModule(FreeModuleSpec(STD2, (0,)), [])
    assert wandering_slice(zero, 0) == [] and wandering_slice(zero, 3) == []


def test_wandering_slice_is_orthogonal_to_multiples():
    m = ideal("x^2", "x*y+y^2", "x^3-y^3")
    for k in range(5):
        w = wandering_slice(m, k, DA_KERNEL)
        mult = [ModuleVector.from_coords(m.spec, v) for v in m.multiples_slice(k)]
        assert all(inner_product(a, b, DA_KERNEL) == 0 for a in w for b in mult)
        assert len(w) == betti_counts(m, k).get(k, 0)


def test_betti_counts_examples():
    assert betti_counts(ideal("x^2", "x*y", "y^2")) == {2: 3}
    assert betti_counts(ideal("x", "x*y")) == {1: 1}
    assert betti_counts(ideal("x^2", "y", weights=(1, 2))) == {2: 2}
    # the same rows from the brute-force oracle
    assert ideal_betti([{(2, 0): 1}, {(1, 1): 1}, {(0, 2): 1}], (1, 1), 4) == {2: 3}
    assert ideal_betti([{(1, 0): 1}, {(1, 1): 1}], (1, 1), 3) == {1: 1}
    assert ideal_betti([{(2, 0): 1}, {(0, 1): 1}], (1, 2), 3) == {2: 2}


def test_minimize_examples():
    gens = [V("x"), V("x+y"), V("y^2")]
    orth = minimize_generators(gens, ORTHOGONAL, HARDY_KERNEL)
    assert list(orth.vectors) == [V("x"), V("y")] and orth.counts() == {1: 2}
    sub = minimize_generators(gens, SUBSET, HARDY_KERNEL)
    assert list(sub.vectors) == [V("x"), V("x+y")] and sub.sources == (0, 1)
    three = [V("x^2"), V("x*y"), V("y^2")]
    assert list(minimize_generators(three).vectors) == three
    assert minimize_generators([]) == MinimalGenerators((), (), ORTHOGONAL, HARDY_KERNEL, ())


def test_minimize_errors_and_zero_generators():
    with pytest.raises(HomogeneityError):
        minimize_generators([V("x"), ModuleVector.from_polynomial(P("x+y^2"), STD2)])
    other = ModuleVector(FreeModuleSpec(STD2, (0, 0)), [P("x"), P("y")])
    with pytest.raises(DimensionError):
        minimize_generators([V("x"), other])
    with pytest.warns(UserWarning):
        out = minimize_generators([V("0"), V("x")])
    assert list(out.vectors) == [V("x")] and out.sources == (1,)
    with pytest.raises(ValueError):
        minimize_generators([V("x")], mode="greedy")


def test_stable_order_within_degree():
    out = minimize_generators([V("y"), V("x"), V("x+y")], SUBSET)
    assert list(out.vectors) == [V("y"), V("x")]


def test_verify_orthogonality_examples():
    result = minimize_generators([V("x"), V("x+y"), V("y^2")])
    assert verify_minimal_orthogonality(result).ok
    fake = MinimalGenerators((V("x"), V("x*y")), (1, 2), ORTHOGONAL, HARDY_KERNEL)
    rep = verify_minimal_orthogonality(fake)
    assert not rep.ok
    v = rep.violation
    assert (v["q"], v["p"], v["alpha"], v["value"]) == (2, 1, (0, 1), 1)
    single = MinimalGenerators((V("x^2+y^2"),), (2,), ORTHOGONAL, HARDY_KERNEL)
    assert verify_minimal_orthogonality(single).ok


def test_cyclicity_examples():
    assert cyclicity(ideal("x", "y")) == 2
    assert cyclicity(PresentedModule.free(FreeModuleSpec(STD2, (0,)))) == 1
    assert cyclicity(ideal("x^2", "x*y", "y^2")) == 3


def test_minimize_in_quotient():
    spec = FreeModuleSpec(STD2, (0,))
    m = PresentedModule(spec, [ModuleVector(spec, [P(t)]) for t in ("x", "y", "x*y+y^2")],
                        [ModuleVector(spec, [P("x^2")])])
    assert betti_counts(m) == {1: 2}
    for mode in (ORTHOGONAL, SUBSET):
        out = minimize_generators(m.generators, mode, DA_KERNEL, m.relations)
        assert out.counts() == {1: 2}
    free = PresentedModule.quotient(spec, [ModuleVector(spec, [P("x")]), ModuleVector(spec, [P("y")])])
    out = minimize_generators(free.generators, ORTHOGONAL, HARDY_KERNEL, free.relations)
    assert out.degrees == (0,)


def test_idempotence_and_bijection():
    gens = [V("x^2+x*y"), V("x*y-y^2"), V("x^3"), V("x^2*y+y^3"), V("y^3")]
    once = minimize_generators(gens, ORTHOGONAL, DA_KERNEL)
    twice = minimize_generators(list(once.vectors), ORTHOGONAL, DA_KERNEL)
    assert once.counts() == twice.counts()
    for a, b in zip(once.vectors, twice.vectors):
        ratio = {t: b.components[0].coefficient(t) / c for t, c in a.components[0].items()}
        assert len(set(ratio.values())) == 1 and set(b.components[0].terms) == set(ratio)
    m = PresentedModule(once.vectors[0].spec, once.vectors)
    for k in range(6):
        assert len(wandering_slice(m, k, DA_KERNEL)) == once.degrees.count(k)


def test_generation_preserved_with_weights():
    g = (2, 1)
    gens = [V(t, grading=ideal("x", weights=g).grading) for t in ("x", "y^2", "x+y^2", "x*y", "y^3")]
    src = PresentedModule(gens[0].spec, gens)
    for mode in (ORTHOGONAL, SUBSET):
        out = minimize_generators(gens, mode)
        dst = PresentedModule(gens[0].spec, out.vectors)
        assert all(hilbert_function(src, k) == hilbert_function(dst, k) for k in range(9))
        assert out.counts() == betti_counts(src)
