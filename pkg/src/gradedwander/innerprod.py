"""Diagonal monomial inner products and exact unnormalized Gram-Schmidt.

Distinct monomials are orthogonal under every kernel here and free-module
components are mutually orthogonal with unit weight, so an inner product is
a weighted sum over shared ``(component, exponent)`` keys.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Sequence

from gmpy2 import mpq

from .exactla import add_scaled, to_mpq
from .gradedmod import ModuleVector
from .polycore import DimensionError, to_fraction

HARDY = "hardy"
DRURY_ARVESON = "drury-arveson"
CUSTOM = "custom"


@dataclass(frozen=True)
class InnerKernel:
    kind: str
    weight: Callable | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in (HARDY, DRURY_ARVESON, CUSTOM):
            raise ValueError(f"unknown kernel kind {self.kind!r}")
        if self.kind == CUSTOM and self.weight is None:
            raise ValueError("a custom kernel needs a weight function")

    @classmethod
    def custom(cls, weight: Callable) -> "InnerKernel":
        return cls(CUSTOM, weight)

    @classmethod
    def from_name(cls, name: str) -> "InnerKernel":
        aliases = {"hardy": HARDY, "da": DRURY_ARVESON, "drury-arveson": DRURY_ARVESON}
        try:
            return cls(aliases[name.lower()])
        except KeyError:
            raise ValueError(f"unknown kernel {name!r}; expected one of {sorted(aliases)}") from None

    def __str__(self):
        return {HARDY: "hardy", DRURY_ARVESON: "da"}.get(self.kind, "custom")


HARDY_KERNEL = InnerKernel(HARDY)
DA_KERNEL = InnerKernel(DRURY_ARVESON)


@lru_cache(maxsize=None)
def _da_weight(alpha: tuple) -> Fraction:
    num = 1
    for a in alpha:
        num *= factorial(a)
    return Fraction(num, factorial(sum(alpha)))


def monomial_weight(kernel: InnerKernel, alpha) -> Fraction:
    alpha = tuple(alpha)
    if kernel.kind == HARDY:
        return Fraction(1)
    if kernel.kind == DRURY_ARVESON:
        return _da_weight(alpha)
    w = to_fraction(kernel.weight(alpha))
    if w <= 0:
        raise ValueError(f"custom kernel weight must be positive, got {w} at {alpha}")
    return w


def sparse_inner(u: dict, v: dict, kernel: InnerKernel) -> Fraction:
    if len(v) < len(u):
        u, v = v, u
    total = 0
    if kernel.kind == HARDY:
        for key, x in u.items():
            y = v.get(key)
            if y:
                total += x * y
        return total
    for key, x in u.items():
        y = v.get(key)
        if y:
            total += x * y * _weight_q(kernel, key[1])
    return total


def _weight_q(kernel: InnerKernel, alpha):
    if kernel.kind == DRURY_ARVESON:
        return _da_weight_q(alpha)
    return mpq(monomial_weight(kernel, alpha))


@lru_cache(maxsize=None)
def _da_weight_q(alpha: tuple):
    return mpq(_da_weight(alpha))


def inner_product(u: ModuleVector, v: ModuleVector, kernel: InnerKernel) -> Fraction:
    if u.spec != v.spec:
        raise DimensionError("inner product of vectors from different free modules")
    return to_fraction(sparse_inner(u.coords(), v.coords(), kernel))


def sparse_gram_schmidt(vectors: Sequence[dict], kernel: InnerKernel, basis: list | None = None):
    """Orthogonalize ``vectors`` in order against ``basis`` (extended in place).

    Returns the new nonzero orthogonal vectors and the input indices that produced them.
    """
    basis = [] if basis is None else basis
    norms = [sparse_inner(b, b, kernel) for b in basis]
    out, idx = [], []
    for i, x in enumerate(vectors):
        x = to_mpq(x)
        u = dict(x)
        for b, nb in zip(basis, norms):
            c = sparse_inner(x, b, kernel)
            if c:
                add_scaled(u, -c / nb, b)
        if u:
            basis.append(u)
            norms.append(sparse_inner(u, u, kernel))
            out.append(u)
            idx.append(i)
    return out, idx


def gram_schmidt(vectors: Sequence[ModuleVector], kernel: InnerKernel):
    """Unnormalized Gram-Schmidt in input order; zero results are dropped.

    Returns ``(orthogonal vectors, indices of the inputs that survived)``.
    """
    if not vectors:
        return [], []
    spec = vectors[0].spec
    if any(v.spec != spec for v in vectors):
        raise DimensionError("Gram-Schmidt over vectors from different free modules")
    out, idx = sparse_gram_schmidt([v.coords() for v in vectors], kernel)
    return [ModuleVector.from_coords(spec, u) for u in out], idx
