"""Brute-force reference computations, deliberately independent of the package internals.

Everything here works on dense lists of Fractions with textbook elimination
and explicit enumeration of exponents via ``itertools.product``.
"""
from fractions import Fraction
from itertools import product


def brute_rank(rows):
    rows = [[Fraction(x) for x in r] for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def exponents(weights, k):
    """All exponents of weighted degree k, by exhaustive search over a box."""
    if k < 0:
        return []
    box = [range(k // w + 1) for w in weights]
    return [a for a in product(*box) if sum(x * w for x, w in zip(a, weights)) == k]


def count_exponents(weights, k):
    """Stars-and-bars style recursion over the variables."""
    if k < 0:
        return 0
    if not weights:
        return int(k == 0)
    return sum(count_exponents(weights[1:], k - a * weights[0]) for a in range(k // weights[0] + 1))


def poly_mul_monomial(poly, alpha):
    return {tuple(a + b for a, b in zip(e, alpha)): c for e, c in poly.items()}


def _degree(alpha, weights):
    return sum(a * w for a, w in zip(alpha, weights))


def _poly_degree(poly, weights):
    return _degree(next(iter(poly)), weights)


def ideal_multiples(polys, weights, k, proper=False):
    """All z^a * g of degree k (a != 0 when proper), as dicts."""
    out = []
    for g in polys:
        if not g:
            continue
        d = _poly_degree(g, weights)
        for a in exponents(weights, k - d):
            if proper and not any(a):
                continue
            out.append(poly_mul_monomial(g, a))
    return out


def span_dim(polys, weights, k):
    basis = sorted(exponents(weights, k))
    return brute_rank([[p.get(e, 0) for e in basis] for p in polys])


def ideal_hilbert(polys, weights, k):
    return span_dim(ideal_multiples(polys, weights, k), weights, k)


def ideal_betti(polys, weights, up_to):
    out = {}
    for k in range(up_to + 1):
        b = (span_dim(ideal_multiples(polys, weights, k), weights, k)
             - span_dim(ideal_multiples(polys, weights, k, proper=True), weights, k))
        if b:
            out[k] = b
    return out


def syzygy_kernel_dim(polys, weights, k):
    """dim of {(c_j) : sum c_j g_j = 0, c_j homogeneous of degree k - deg g_j}."""
    cols = ideal_multiples(polys, weights, k)
    basis = sorted(exponents(weights, k))
    mat = [[c.get(e, 0) for c in cols] for e in basis]
    return len(cols) - brute_rank(mat) if cols else 0
