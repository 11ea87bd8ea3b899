"""Graded free modules with degree shifts, presented modules and their degree slices."""
from __future__ import annotations

import threading
from fractions import Fraction
from typing import Sequence

from .exactla import EchelonBasis
from .polycore import (DimensionError, Grading, Polynomial, add_exponents, to_fraction,
                       monomial_basis, weighted_degree)

ZERO = "zero"
NOT_HOMOGENEOUS = "not homogeneous"


class HomogeneityError(ValueError):
    pass


class FreeModuleSpec:
    """Free module ``C[z]^rank`` whose j-th basis vector sits in degree ``shifts[j]``."""

    __slots__ = ("grading", "shifts")

    def __init__(self, grading: Grading | Sequence[int], shifts: Sequence[int] = (0,)):
        if not isinstance(grading, Grading):
            grading = Grading(grading)
        shifts = tuple(int(s) for s in shifts)
        if not shifts:
            raise ValueError("a free module needs rank >= 1")
        if any(s < 0 for s in shifts):
            raise ValueError(f"shifts must be non-negative, got {shifts}")
        object.__setattr__(self, "grading", grading)
        object.__setattr__(self, "shifts", shifts)

    def __setattr__(self, name, value):
        raise AttributeError("FreeModuleSpec is immutable")

    @property
    def n(self) -> int:
        return self.grading.nvars

    @property
    def rank(self) -> int:
        return len(self.shifts)

    def key_degree(self, key) -> int:
        j, alpha = key
        return self.shifts[j] + weighted_degree(alpha, self.grading)

    def slice_keys(self, k: int) -> list:
        """Monomial basis ``z^a e_j`` of the degree-k slice, component-major."""
        return [(j, a) for j, s in enumerate(self.shifts) for a in monomial_basis(self.grading, k - s)]

    def slice_dim(self, k: int) -> int:
        return sum(len(monomial_basis(self.grading, k - s)) for s in self.shifts)

    def basis_vector(self, j: int) -> "ModuleVector":
        comps = [Polynomial.zero(self.n) for _ in self.shifts]
        comps[j] = Polynomial.constant(self.n, 1)
        return ModuleVector(self, comps)

    def __eq__(self, other):
        return (isinstance(other, FreeModuleSpec) and self.grading == other.grading
                and self.shifts == other.shifts)

    def __hash__(self):
        return hash((self.grading, self.shifts))

    def __repr__(self):
        return f"FreeModuleSpec({list(self.grading.weights)}, shifts={list(self.shifts)})"


class ModuleVector:
    """Element of a graded free module, stored as one polynomial per component."""

    __slots__ = ("spec", "components")

    def __init__(self, spec: FreeModuleSpec, components: Sequence[Polynomial]):
        components = tuple(components)
        if len(components) != spec.rank:
            raise DimensionError(f"{len(components)} components for a rank-{spec.rank} module")
        for c in components:
            if c.nvars != spec.n:
                raise DimensionError(f"component in {c.nvars} variables, module has {spec.n}")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):
        raise AttributeError("ModuleVector is immutable")

    @classmethod
    def from_polynomial(cls, f: Polynomial, grading: Grading) -> "ModuleVector":
        return cls(FreeModuleSpec(grading, (0,)), (f,))

    @classmethod
    def from_coords(cls, spec: FreeModuleSpec, coords: dict) -> "ModuleVector":
        parts = [dict() for _ in spec.shifts]
        for (j, a), c in coords.items():
            parts[j][a] = c
        return cls(spec, [Polynomial(spec.n, p) for p in parts])

    @classmethod
    def zero(cls, spec: FreeModuleSpec) -> "ModuleVector":
        return cls(spec, [Polynomial.zero(spec.n) for _ in spec.shifts])

    def coords(self) -> dict:
        return {(j, a): c for j, p in enumerate(self.components) for a, c in p.items()}

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components)

    def _same(self, other: "ModuleVector"):
        if not isinstance(other, ModuleVector) or other.spec != self.spec:
            raise DimensionError("vectors live in different free modules")

    def __add__(self, other):
        self._same(other)
        return ModuleVector(self.spec, [a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        self._same(other)
        return ModuleVector(self.spec, [a - b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return ModuleVector(self.spec, [-a for a in self.components])

    def scale(self, c) -> "ModuleVector":
        return ModuleVector(self.spec, [a * to_fraction(c) for a in self.components])

    def times(self, f: Polynomial) -> "ModuleVector":
        return ModuleVector(self.spec, [f * a for a in self.components])

    def times_monomial(self, alpha) -> "ModuleVector":
        return ModuleVector.from_coords(self.spec, shift_coords(self.coords(), alpha))

    def __eq__(self, other):
        return (isinstance(other, ModuleVector) and self.spec == other.spec
                and self.components == other.components)

    def __hash__(self):
        return hash((self.spec, self.components))

    def __repr__(self):
        return f"ModuleVector({list(self.components)!r})"


def shift_coords(coords: dict, alpha) -> dict:
    return {(j, add_exponents(a, alpha)): c for (j, a), c in coords.items()}


def coords_degree(spec: FreeModuleSpec, coords: dict):
    degs = {spec.key_degree(key) for key in coords}
    if not degs:
        return ZERO
    return degs.pop() if len(degs) == 1 else NOT_HOMOGENEOUS


def vector_degree(v: ModuleVector):
    """Degree of a homogeneous vector, ``ZERO`` for 0, else ``NOT_HOMOGENEOUS``."""
    return coords_degree(v.spec, v.coords())


class SubmoduleSlices:
    """Lazily computed degree slices of the submodule generated by ``vectors``.

    The slice in degree k is spanned by the generators of degree k together
    with ``z_i`` times the slice in degree ``k - w_i``.
    """

    def __init__(self, spec: FreeModuleSpec, vectors: Sequence[dict]):
        self.spec = spec
        self.by_degree: dict = {}
        for v in vectors:
            if v:
                self.by_degree.setdefault(coords_degree(spec, v), []).append(v)
        self.min_degree = min(self.by_degree, default=None)
        self._cache: dict = {}
        self._lock = threading.RLock()

    def echelon(self, k: int) -> EchelonBasis:
        with self._lock:
            if k in self._cache:
                return self._cache[k]
            e = EchelonBasis()
            if self.min_degree is not None and k >= self.min_degree:
                for v in self.by_degree.get(k, ()):
                    e.add(v)
                g = self.spec.grading
                for i, w in enumerate(g.weights):
                    if k - w < self.min_degree:
                        continue
                    unit = tuple(int(t == i) for t in range(g.nvars))
                    for b in self.echelon(k - w).basis():
                        e.add(shift_coords(b, unit))
            self._cache[k] = e
            return e

    def basis(self, k: int) -> list:
        return self.echelon(k).basis()

    def dim(self, k: int) -> int:
        return len(self.echelon(k))


class PresentedModule:
    """The graded module ``(<generators> + <relations>) / <relations>`` inside a free module.

    A plain submodule has no relations; the quotient ``F/N`` lists the basis
    vectors ``e_j`` as generators and generators of ``N`` as relations.
    """

    def __init__(self, spec: FreeModuleSpec, generators: Sequence[ModuleVector],
                 relations: Sequence[ModuleVector] = ()):
        self.spec = spec
        self.generators = tuple(generators)
        self.relations = tuple(relations)
        for kind, vecs in (("generator", self.generators), ("relation", self.relations)):
            for i, v in enumerate(vecs):
                if v.spec != spec:
                    raise DimensionError(f"{kind} {i} lives in a different free module")
                if vector_degree(v) == NOT_HOMOGENEOUS:
                    raise HomogeneityError(f"{kind} {i} is not homogeneous: {v!r}")
        rel = [r.coords() for r in self.relations]
        self._rel = SubmoduleSlices(spec, rel)
        self._all = SubmoduleSlices(spec, [g.coords() for g in self.generators] + rel)

    @classmethod
    def ideal(cls, polys: Sequence[Polynomial], grading: Grading | Sequence[int]) -> "PresentedModule":
        spec = FreeModuleSpec(grading, (0,))
        return cls(spec, [ModuleVector(spec, (p,)) for p in polys])

    @classmethod
    def submodule(cls, spec: FreeModuleSpec, generators: Sequence[ModuleVector]) -> "PresentedModule":
        return cls(spec, generators)

    @classmethod
    def quotient(cls, spec: FreeModuleSpec, relations: Sequence[ModuleVector]) -> "PresentedModule":
        return cls(spec, [spec.basis_vector(j) for j in range(spec.rank)], relations)

    @classmethod
    def free(cls, spec: FreeModuleSpec) -> "PresentedModule":
        return cls.quotient(spec, ())

    @property
    def grading(self) -> Grading:
        return self.spec.grading

    @property
    def n(self) -> int:
        return self.spec.n

    def generator_degrees(self) -> list:
        return [d for d in (vector_degree(g) for g in self.generators) if d != ZERO]

    def max_generator_degree(self):
        return max(self.generator_degrees(), default=None)

    # sparse-level slice access, shared by wander / resolve / koszul
    def total_slice(self, k: int) -> EchelonBasis:
        """Echelon basis of ``(<G> + <R>)_k``."""
        return self._all.echelon(k)

    def relation_slice(self, k: int) -> EchelonBasis:
        return self._rel.echelon(k)

    def coset_representatives(self, k: int) -> list:
        """Sparse vectors of ``(<G>+<R>)_k`` forming a basis modulo ``<R>_k``."""
        e = EchelonBasis()
        for r in self._rel.basis(k):
            e.add(r)
        reps = []
        for v in self._all.basis(k):
            if e.add(v) is None:
                reps.append(v)
        return reps

    def quotient_coordinates(self, k: int):
        """Return ``(reps, coord)`` where ``coord(v)`` gives coordinates of ``v`` mod ``<R>_k`` on reps."""
        reps = self.coset_representatives(k)
        e = EchelonBasis(track=True)
        for i, r in enumerate(self._rel.basis(k)):
            e.add(r, ("rel", i))
        for i, v in enumerate(reps):
            e.add(v, ("rep", i))

        def coord(v: dict) -> dict:
            c = e.coordinates(v)
            if c is None:
                raise ValueError(f"vector is not in the degree-{k} slice")
            return {t[1]: x for t, x in c.items() if t[0] == "rep"}

        return reps, coord

    def multiples_slice(self, k: int) -> list:
        """Sparse basis of ``sum_i z_i M_{k-w_i}`` modulo ``<R>_k``."""
        g = self.grading
        e = EchelonBasis()
        for r in self._rel.basis(k):
            e.add(r)
        out = []
        for i, w in enumerate(g.weights):
            if k - w < 0:
                continue
            unit = tuple(int(t == i) for t in range(g.nvars))
            for b in self._all.basis(k - w):
                v = shift_coords(b, unit)
                if e.add(v) is None:
                    out.append(v)
        return out

    def is_monomial(self) -> bool:
        return all(len(v.coords()) <= 1 for v in self.generators + self.relations)

    def monomial_degree_bound(self):
        """Largest degree of an lcm of monomial generators/relations within one component.

        For monomial input every graded Betti number of the module vanishes above
        this degree (Taylor complex support).  ``None`` for non-monomial input.
        """
        if not self.is_monomial():
            return None
        lcms: dict = {}
        for v in self.generators + self.relations:
            for (j, a) in v.coords():
                cur = lcms.get(j)
                lcms[j] = a if cur is None else tuple(max(x, y) for x, y in zip(cur, a))
        return max((self.spec.key_degree((j, a)) for j, a in lcms.items()), default=0)

    def default_max_degree(self) -> int:
        bound = self.monomial_degree_bound()
        if bound is not None:
            return bound
        top = self.max_generator_degree() or 0
        top = max([top] + list(self.spec.shifts))
        return top * (self.n + 1) + sum(self.grading.weights)

    def __repr__(self):
        return (f"PresentedModule({self.spec!r}, {len(self.generators)} generators, "
                f"{len(self.relations)} relations)")


def _vectors(spec: FreeModuleSpec, sparse: list) -> list:
    return [ModuleVector.from_coords(spec, v) for v in sparse]


def slice_basis(m: PresentedModule, k: int):
    """``(coset representatives, relation-slice basis)`` for the degree-k slice."""
    return (_vectors(m.spec, m.coset_representatives(k)),
            _vectors(m.spec, m.relation_slice(k).basis()))


def hilbert_function(m: PresentedModule, k: int) -> int:
    if k < 0:
        return 0
    return len(m.total_slice(k)) - len(m.relation_slice(k))


def times_maximal_ideal_slice(m: PresentedModule, k: int) -> list:
    return _vectors(m.spec, m.multiples_slice(k))
