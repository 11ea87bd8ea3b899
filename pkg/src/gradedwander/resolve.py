"""Minimal graded free resolutions by degree-wise syzygy extraction.

Each step is found by scanning degrees ``k = 0..D``: the kernel of the
degree-k slice of the current map is computed exactly, and the part of it not
spanned by monomial multiples of syzygies already found (taken as an
orthogonal complement under the chosen kernel) contributes new generators.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactla import EchelonBasis, sparse_kernel, sparse_rank, rank as matrix_rank, RatMatrix
from .gradedmod import (FreeModuleSpec, ModuleVector, PresentedModule, hilbert_function,
                        shift_coords)
from .innerprod import HARDY_KERNEL, InnerKernel, sparse_gram_schmidt, sparse_inner
from .polycore import Polynomial, monomial_basis, to_fraction
from .wander import ORTHOGONAL, minimize_generators


class UncertifiedResolutionError(RuntimeError):
    """Raised when an operation needs a resolution known to be complete."""


@dataclass(frozen=True)
class ResolutionStep:
    generator_degrees: tuple
    columns: tuple  # syzygies as vectors in the previous free module

    @property
    def rank(self) -> int:
        return len(self.generator_degrees)

    @property
    def phi(self) -> list:
        """Polynomial matrix: rows index the previous basis, columns this step's basis."""
        if not self.columns:
            return []
        rows = self.columns[0].spec.rank
        return [[c.components[i] for c in self.columns] for i in range(rows)]


@dataclass
class Resolution:
    target: PresentedModule
    pi0: tuple
    pi0_degrees: tuple
    steps: list
    truncation_degree: int
    certified_complete: bool = False
    certification: str | None = None  # "monomial", "user", "heuristic" or "trivial"
    diagnostics: list = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.steps)

    def dims(self) -> tuple:
        return (len(self.pi0),) + tuple(s.rank for s in self.steps)

    def degree_lists(self) -> list:
        return [list(self.pi0_degrees)] + [list(s.generator_degrees) for s in self.steps]

    def free_spec(self, p: int) -> FreeModuleSpec | None:
        degs = self.degree_lists()[p]
        return FreeModuleSpec(self.target.grading, degs) if degs else None


def presentation(m: PresentedModule, kernel: InnerKernel = HARDY_KERNEL):
    mg = minimize_generators(m.generators, ORTHOGONAL, kernel, m.relations)
    return list(mg.degrees), list(mg.vectors)


def _complement(basis_vectors: list, sub: EchelonBasis, kernel: InnerKernel) -> list:
    """Orthogonal basis of the complement of ``sub`` inside ``span(basis_vectors)``."""
    ys = sub.basis()
    cols = []
    for v in basis_vectors:
        cols.append({i: x for i, x in enumerate(sparse_inner(y, v, kernel) for y in ys) if x})
    reps = []
    for dep in sparse_kernel(cols):
        u: dict = {}
        for l, c in dep.items():
            for key, x in basis_vectors[l].items():
                s = u.get(key, 0) + c * x
                if s:
                    u[key] = s
                else:
                    u.pop(key, None)
        reps.append(u)
    out, _ = sparse_gram_schmidt(reps, kernel)
    return out


def _slice_kernel(domain: FreeModuleSpec, images: list, relations, k: int) -> list:
    keys = domain.slice_keys(k)
    rel = relations(k).basis() if relations is not None else []
    cols = rel + [shift_coords(images[j], a) for j, a in keys]
    offset = len(rel)
    return [{keys[t - offset]: c for t, c in dep.items() if t >= offset}
            for dep in sparse_kernel(cols)]


def _scan(domain: FreeModuleSpec, images: list, relations, top: int, kernel: InnerKernel,
          image_rank=None):
    """Minimal generators ``[(degree, coords)]`` of the kernel of ``e_j -> images[j]`` up to ``top``.

    ``image_rank(k)``, when given, is the known rank of the degree-k slice of
    the map; the kernel is then only computed explicitly in degrees where the
    multiples of earlier syzygies fall short of its dimension.
    Also returns the kernel dimension in each scanned degree.
    """
    found: list = []
    dims: dict = {}
    for k in range(top + 1):
        size = domain.slice_dim(k)
        if not size:
            dims[k] = 0
            continue
        ker = None
        if image_rank is None:
            ker = _slice_kernel(domain, images, relations, k)
            dims[k] = len(ker)
        else:
            dims[k] = size - image_rank(k)
        if not dims[k]:
            continue
        mult = EchelonBasis()
        for d, s in found:
            if d < k:
                for a in monomial_basis(domain.grading, k - d):
                    mult.add(shift_coords(s, a))
        if len(mult) == dims[k]:
            continue
        if len(mult) > dims[k]:
            raise ArithmeticError(f"syzygy multiples exceed kernel dimension in degree {k}")
        if ker is None:
            ker = _slice_kernel(domain, images, relations, k)
            if len(ker) != dims[k]:
                raise ArithmeticError(f"kernel dimension {len(ker)} in degree {k}, expected {dims[k]}")
        for u in _complement(ker, mult, kernel):
            found.append((k, u))
    return found, dims


def syzygies(domain: FreeModuleSpec, images: Sequence[ModuleVector], max_degree: int,
             kernel: InnerKernel = HARDY_KERNEL, relations: PresentedModule | None = None) -> ResolutionStep:
    """Next resolution step for the map ``e_j -> images[j]`` (optionally into ``F/<relations>``)."""
    rel = relations.relation_slice if relations is not None else None
    found, _ = _scan(domain, [v.coords() for v in images], rel, max_degree, kernel)
    return ResolutionStep(tuple(d for d, _ in found),
                          tuple(ModuleVector.from_coords(domain, u) for _, u in found))


def minimal_resolution(m: PresentedModule, max_degree: int | None = None,
                       kernel: InnerKernel = HARDY_KERNEL, degree_bound: int | None = None) -> Resolution:
    """Minimal graded free resolution of ``m`` truncated at ``max_degree``.

    Completeness is certified when every Betti number is known to live at or
    below the truncation degree: through ``degree_bound`` if the caller supplies
    one, through the lcm bound for monomial input, and otherwise heuristically
    when no generator of any step appears in the top window of the scan.
    """
    top = m.default_max_degree() if max_degree is None else int(max_degree)
    degs, pi0 = presentation(m, kernel)
    res = Resolution(m, tuple(pi0), tuple(degs), [], top)
    if not pi0:
        res.certified_complete, res.certification = True, "trivial"
        return res
    domain = FreeModuleSpec(m.grading, degs)
    images = [v.coords() for v in pi0]
    relations = m.relation_slice if m.relations else None
    n = m.n
    final_zero = True
    image_rank = lambda k: hilbert_function(m, k)  # noqa: E731  (presentation is onto)
    while True:
        found, kdims = _scan(domain, images, relations, top, kernel, image_rank)
        if not found:
            break
        if len(res.steps) >= n:
            final_zero = False
            res.diagnostics.append(
                f"kernel of step {len(res.steps)} is nonzero up to degree {top}; "
                f"more than {n} steps cannot occur in a complete resolution")
            break
        step = ResolutionStep(tuple(d for d, _ in found),
                              tuple(ModuleVector.from_coords(domain, u) for _, u in found))
        res.steps.append(step)
        domain = FreeModuleSpec(m.grading, step.generator_degrees)
        images = [u for _, u in found]
        relations = None
        # the new map is onto the kernel just scanned, degree by degree
        image_rank = kdims.__getitem__

    bound = degree_bound if degree_bound is not None else m.monomial_degree_bound()
    source = "user" if degree_bound is not None else ("monomial" if bound is not None else "heuristic")
    if bound is not None:
        enough = top >= bound
        if not enough:
            res.diagnostics.append(f"truncation degree {top} is below the completeness bound {bound}")
    else:
        window = max(m.grading.weights) + (m.max_generator_degree() or 0)
        latest = max((d for s in res.steps for d in s.generator_degrees), default=-1)
        enough = latest <= top - window
        if not enough:
            res.diagnostics.append(
                f"syzygy generators found in degree {latest}, inside the top window "
                f"({top - window}, {top}]; raise the truncation degree")
    res.certified_complete = enough and final_zero
    res.certification = source if res.certified_complete else None
    if res.certified_complete:
        assert res.length <= n, f"certified resolution of length {res.length} > {n}"
    return res


@dataclass
class CheckReport:
    ok: bool
    checked: int = 0
    failures: list = field(default_factory=list)

    def fail(self, **info):
        self.ok = False
        self.failures.append(info)


def check_minimality(r: Resolution) -> CheckReport:
    rep = CheckReport(True)
    for p, step in enumerate(r.steps, 1):
        for i, row in enumerate(step.phi):
            for j, entry in enumerate(row):
                rep.checked += 1
                if entry.constant_term() != 0:
                    rep.fail(p=p, row=i, col=j, constant=entry.constant_term())
    return rep


def _slice_rank(domain: FreeModuleSpec | None, images: list, k: int, extra: list = ()) -> int:
    cols = list(extra)
    if domain is not None:
        cols += [shift_coords(images[j], a) for j, a in domain.slice_keys(k)]
    return sparse_rank(cols)


def check_exactness(r: Resolution, k_max: int | None = None) -> CheckReport:
    """Degree-wise exactness, vanishing compositions and the Euler identity up to ``k_max``."""
    k_max = r.truncation_degree if k_max is None else k_max
    if k_max > r.truncation_degree:
        raise ValueError(f"k_max={k_max} exceeds the truncation degree {r.truncation_degree}")
    m = r.target
    rep = CheckReport(True)
    specs = [r.free_spec(p) for p in range(r.length + 1)]
    images = [[v.coords() for v in r.pi0]] + [[v.coords() for v in s.columns] for s in r.steps]

    for p, step in enumerate(r.steps, 1):
        if p == 1:
            for j, col in enumerate(step.columns):
                image = {}
                for (i, a), c in col.coords().items():
                    for key, x in shift_coords(images[0][i], a).items():
                        image[key] = image.get(key, 0) + c * x
                image = {key: x for key, x in image.items() if x}
                rep.checked += 1
                if image and not m.relation_slice(step.generator_degrees[j]).contains(image):
                    rep.fail(kind="composition", p=1, col=j)
        if p < r.length:
            nxt = r.steps[p]
            for j, col in enumerate(nxt.columns):
                comp = {}
                for (i, a), c in col.coords().items():
                    for key, x in shift_coords(images[p][i], a).items():
                        comp[key] = comp.get(key, 0) + c * x
                rep.checked += 1
                if any(comp.values()):
                    rep.fail(kind="composition", p=p + 1, col=j)

    for k in range(k_max + 1):
        dims = [s.slice_dim(k) if s is not None else 0 for s in specs]
        rel = m.relation_slice(k).basis()
        ranks = [_slice_rank(specs[0], images[0], k, rel) - len(rel)]
        ranks += [_slice_rank(specs[p], images[p], k) for p in range(1, r.length + 1)]
        ranks.append(0)
        h = hilbert_function(m, k)
        rep.checked += 1
        if ranks[0] != h:
            rep.fail(kind="surjectivity", k=k, image=ranks[0], hilbert=h)
        for p in range(r.length + 1):
            rep.checked += 1
            if dims[p] - ranks[p] != ranks[p + 1]:
                rep.fail(kind="exactness", p=p, k=k, kernel=dims[p] - ranks[p], image=ranks[p + 1])
        euler = sum((-1) ** p * d for p, d in enumerate(dims))
        rep.checked += 1
        if euler != h:
            rep.fail(kind="euler", k=k, alternating_sum=euler, hilbert=h)
    return rep


def _require_certified(r: Resolution):
    if not r.certified_complete:
        raise UncertifiedResolutionError(
            "resolution is not certified complete: " + "; ".join(r.diagnostics or ["no certificate"]))


def evaluate_phi(step: ResolutionStep, point) -> RatMatrix:
    rows = step.phi
    return RatMatrix.from_rows([[f.evaluate(point) for f in row] for row in rows],
                               len(step.generator_degrees))


def fiber_homology(r: Resolution, point) -> list:
    """Homology dimensions of the constant complex obtained by evaluating every map at ``point``."""
    _require_certified(r)
    point = [to_fraction(x) for x in point]
    dims = list(r.dims())
    ranks = [0] + [matrix_rank(evaluate_phi(s, point)) for s in r.steps] + [0]
    return [dims[p] - ranks[p] - ranks[p + 1] for p in range(len(dims))]


def fredholm_index(r: Resolution) -> int:
    _require_certified(r)
    return sum((-1) ** p * d for p, d in enumerate(r.dims()))
