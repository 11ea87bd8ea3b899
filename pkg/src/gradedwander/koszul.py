"""Degree-sliced Koszul complex of ``(z_1, ..., z_n)`` acting on a presented module.

The basis element ``e_S`` of the p-th exterior power carries internal degree
``sum(w_i for i in S)``, so the slice ``K_{p,k}`` is the direct sum of
``M_{k - w_S}`` over p-subsets ``S``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .exactla import RatMatrix, sparse_rank
from .gradedmod import PresentedModule, shift_coords
from .resolve import Resolution, _require_certified


@dataclass(frozen=True)
class KoszulSlice:
    p: int
    k: int
    boundary_in: RatMatrix   # slice of delta_{p+1}: K_{p+1,k} -> K_{p,k}
    boundary_out: RatMatrix  # slice of delta_p:     K_{p,k}   -> K_{p-1,k}


class _Slices:
    """Coset bases of the module slices, with coordinate maps, computed once per degree."""

    def __init__(self, m: PresentedModule):
        self.m = m
        self._cache: dict = {}

    def get(self, j: int):
        if j < 0:
            return [], None
        if j not in self._cache:
            self._cache[j] = self.m.quotient_coordinates(j)
        return self._cache[j]


def _subset_weight(m: PresentedModule, S) -> int:
    return sum(m.grading.weights[i] for i in S)


def _chain_basis(m, slices, p, k):
    """List of ``(S, rep_index)`` spanning ``K_{p,k}``."""
    if p < 0 or p > m.n:
        return []
    out = []
    for S in combinations(range(m.n), p):
        reps, _ = slices.get(k - _subset_weight(m, S))
        out.extend((S, i) for i in range(len(reps)))
    return out


def _boundary_columns(m, slices, p, k):
    """Sparse columns of ``delta_p`` on ``K_{p,k}``, keyed by ``(S', rep_index)``."""
    cols = []
    for S, i in _chain_basis(m, slices, p, k):
        reps, _ = slices.get(k - _subset_weight(m, S))
        b = reps[i]
        col: dict = {}
        for t, s in enumerate(S):
            T = S[:t] + S[t + 1:]
            unit = tuple(int(x == s) for x in range(m.n))
            _, coord = slices.get(k - _subset_weight(m, T))
            sign = -1 if t % 2 else 1
            for idx, c in coord(shift_coords(b, unit)).items():
                key = (T, idx)
                v = col.get(key, 0) + sign * c
                if v:
                    col[key] = v
                else:
                    col.pop(key, None)
        cols.append(col)
    return cols


def _boundary_rank(m, slices, p, k) -> int:
    if p < 1 or p > m.n:
        return 0
    return sparse_rank(_boundary_columns(m, slices, p, k))


def koszul_slice(m: PresentedModule, p: int, k: int) -> KoszulSlice:
    slices = _Slices(m)

    def dense(q):
        if q < 1 or q > m.n:
            rows = len(_chain_basis(m, slices, q - 1, k))
            cols = len(_chain_basis(m, slices, q, k))
            return RatMatrix.zeros(rows, cols)
        index = {key: r for r, key in enumerate(_chain_basis(m, slices, q - 1, k))}
        cols = _boundary_columns(m, slices, q, k)
        return RatMatrix.from_columns(
            [[c.get(key, 0) for key in index] for c in cols], len(index))

    return KoszulSlice(p, k, dense(p + 1), dense(p))


def koszul_homology_dim(m: PresentedModule, p: int, k: int, _slices=None) -> int:
    if p < 0 or p > m.n:
        return 0
    slices = _slices or _Slices(m)
    dim = len(_chain_basis(m, slices, p, k))
    return dim - _boundary_rank(m, slices, p, k) - _boundary_rank(m, slices, p + 1, k)


def koszul_homology_table(m: PresentedModule, k_max: int | None = None) -> dict:
    """``{p: {k: dim}}`` of nonzero homology for ``k <= k_max``."""
    k_max = m.default_max_degree() if k_max is None else k_max
    slices = _Slices(m)
    table = {}
    for p in range(m.n + 1):
        row = {}
        for k in range(k_max + 1):
            d = koszul_homology_dim(m, p, k, slices)
            if d:
                row[k] = d
        table[p] = row
    return table


def koszul_totals(m: PresentedModule, k_max: int | None = None) -> list:
    return [sum(row.values()) for _, row in sorted(koszul_homology_table(m, k_max).items())]


@dataclass
class BettiCheckReport:
    ok: bool
    scanned_up_to: int
    homology: dict
    resolution_degrees: dict
    mismatches: list = field(default_factory=list)


def koszul_betti_check(m: PresentedModule, r: Resolution) -> BettiCheckReport:
    """Compare graded Koszul homology with the generator degrees of each resolution step."""
    _require_certified(r)
    table = koszul_homology_table(m, r.truncation_degree)
    degrees = {}
    for p, degs in enumerate(r.degree_lists()):
        row: dict = {}
        for d in degs:
            row[d] = row.get(d, 0) + 1
        degrees[p] = dict(sorted(row.items()))
    rep = BettiCheckReport(True, r.truncation_degree, table, degrees)
    for p in range(m.n + 1):
        h, d = table.get(p, {}), degrees.get(p, {})
        for k in sorted(set(h) | set(d)):
            if h.get(k, 0) != d.get(k, 0):
                rep.ok = False
                rep.mismatches.append({"p": p, "k": k, "homology": h.get(k, 0), "resolution": d.get(k, 0)})
    return rep


def euler_index(m: PresentedModule, k_max: int | None = None) -> int:
    """Alternating sum of total Koszul homology dimensions over degrees ``<= k_max``."""
    return sum((-1) ** p * t for p, t in enumerate(koszul_totals(m, k_max)))
