"""Wandering subspaces, graded Betti counts and minimal homogeneous generating sets."""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Sequence

from .exactla import EchelonBasis
from .gradedmod import (NOT_HOMOGENEOUS, ZERO, HomogeneityError, ModuleVector,
                        PresentedModule, SubmoduleSlices, hilbert_function,
                        shift_coords, vector_degree)
from .innerprod import HARDY_KERNEL, InnerKernel, sparse_gram_schmidt, sparse_inner
from .polycore import DimensionError, monomial_basis, to_fraction

ORTHOGONAL = "orthogonal"
SUBSET = "subset"


@dataclass(frozen=True)
class MinimalGenerators:
    vectors: tuple
    degrees: tuple
    mode: str
    kernel: InnerKernel
    sources: tuple = ()  # input index each vector came from (or was orthogonalized from)

    def counts(self) -> dict:
        out: dict = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))

    def __len__(self):
        return len(self.vectors)


def wandering_slice(m: PresentedModule, k: int, kernel: InnerKernel = HARDY_KERNEL) -> list:
    """Orthogonal basis of ``M_k`` minus ``sum_i z_i M_{k-w_i}`` (modulo relations)."""
    head = m.relation_slice(k).basis() + m.multiples_slice(k)
    basis: list = []
    sparse_gram_schmidt(head, kernel, basis)
    out, _ = sparse_gram_schmidt(m.coset_representatives(k), kernel, basis)
    return [ModuleVector.from_coords(m.spec, u) for u in out]


def betti_counts(m: PresentedModule, up_to: int | None = None) -> dict:
    """``beta_k = dim M_k - dim (sum z_i M)_k`` for ``k <= up_to``; rank computations only."""
    if up_to is None:
        up_to = m.max_generator_degree()
        if up_to is None:
            return {}
    row = {}
    for k in range(up_to + 1):
        b = hilbert_function(m, k) - len(m.multiples_slice(k))
        if b:
            row[k] = b
    return row


def cyclicity(m: PresentedModule) -> int:
    return sum(betti_counts(m).values())


def minimize_generators(gens: Sequence[ModuleVector], mode: str = ORTHOGONAL,
                        kernel: InnerKernel = HARDY_KERNEL,
                        relations: Sequence[ModuleVector] = ()) -> MinimalGenerators:
    """Reduce homogeneous generators to a minimal homogeneous generating set.

    Generators are processed by degree (stable in input order).  At each degree
    the candidates are tested against the span of monomial multiples of the
    generators already kept (plus the relation slice, when working in a
    quotient); if they are not all redundant, Gram-Schmidt on multiples followed
    by candidates yields the new generators (``orthogonal`` mode) or picks the
    surviving candidates themselves (``subset`` mode).
    """
    if mode not in (ORTHOGONAL, SUBSET):
        raise ValueError(f"unknown mode {mode!r}")
    gens = list(gens)
    if not gens:
        return MinimalGenerators((), (), mode, kernel, ())
    spec = gens[0].spec
    for v in list(gens) + list(relations):
        if v.spec != spec:
            raise DimensionError("generators live in different free modules")
    staged = []
    for i, g in enumerate(gens):
        d = vector_degree(g)
        if d == NOT_HOMOGENEOUS:
            raise HomogeneityError(f"generator {i} is not homogeneous")
        if d == ZERO:
            warnings.warn(f"dropping zero generator at index {i}", stacklevel=2)
            continue
        staged.append((d, i, g.coords()))
    staged.sort(key=lambda t: (t[0], t[1]))
    rel = SubmoduleSlices(spec, [r.coords() for r in relations])

    kept: list = []  # (degree, coords, source index)
    groups: dict = {}
    for d, i, c in staged:
        groups.setdefault(d, []).append((i, c))
    for k, group in sorted(groups.items()):
        ys = list(rel.basis(k))
        for d, v, _ in kept:
            for alpha in monomial_basis(spec.grading, k - d):
                ys.append(shift_coords(v, alpha))
        span = EchelonBasis()
        for y in ys:
            span.add(y)
        if all(span.contains(c) for _, c in group):
            continue
        basis: list = []
        sparse_gram_schmidt(ys, kernel, basis)
        new, idx = sparse_gram_schmidt([c for _, c in group], kernel, basis)
        for u, j in zip(new, idx):
            src, c = group[j]
            kept.append((k, u if mode == ORTHOGONAL else c, src))
    return MinimalGenerators(
        tuple(ModuleVector.from_coords(spec, v) for _, v, _ in kept),
        tuple(d for d, _, _ in kept), mode, kernel, tuple(s for _, _, s in kept))


@dataclass
class OrthogonalityReport:
    ok: bool
    checked: int
    violation: dict | None = None
    details: list = field(default_factory=list)


def verify_minimal_orthogonality(result: MinimalGenerators, kernel: InnerKernel | None = None) -> OrthogonalityReport:
    """Check ``<x^q_i, z^a x^p_j> = 0`` for stages ``p <= q`` and ``deg z^a = k_q - k_p``.

    Stages are numbered from 1 in increasing degree order; the pairing of a
    vector with itself (``p = q``, ``i = j``) is skipped.
    """
    kernel = kernel or result.kernel
    if not result.vectors:
        return OrthogonalityReport(True, 0)
    spec = result.vectors[0].spec
    stages: dict = {}
    for v, d in zip(result.vectors, result.degrees):
        stages.setdefault(d, []).append(v.coords())
    levels = sorted(stages)
    checked = 0
    for q, kq in enumerate(levels, 1):
        for p, kp in enumerate(levels[:q], 1):
            for alpha in monomial_basis(spec.grading, kq - kp):
                for i, x in enumerate(stages[kq], 1):
                    for j, y in enumerate(stages[kp], 1):
                        if p == q and i == j:
                            continue
                        val = sparse_inner(x, shift_coords(y, alpha), kernel)
                        checked += 1
                        if val != 0:
                            return OrthogonalityReport(False, checked, {
                                "q": q, "p": p, "i": i, "j": j, "alpha": alpha, "value": to_fraction(val)})
    return OrthogonalityReport(True, checked)
