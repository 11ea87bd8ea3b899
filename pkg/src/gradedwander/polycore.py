"""Sparse multivariate polynomials with rational coefficients and weighted gradings."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

Exponent = tuple


def to_fraction(c) -> Fraction:
    """Exact ``Fraction`` with plain ``int`` parts (also for gmpy2 inputs)."""
    if type(c) is Fraction and type(c.numerator) is int:
        return c
    if hasattr(c, "numerator") and hasattr(c, "denominator"):
        return Fraction(int(c.numerator), int(c.denominator))
    return Fraction(c)


class DimensionError(ValueError):
    """Raised when variable counts or vector lengths disagree."""


class Grading:
    """Weight tuple assigning ``sum(a_i * w_i)`` to the monomial ``z^a``."""

    __slots__ = ("weights",)

    def __init__(self, weights: Iterable[int]):
        weights = tuple(int(w) for w in weights)
        if any(w < 1 for w in weights):
            raise ValueError(f"grading weights must be positive integers, got {weights}")
        object.__setattr__(self, "weights", weights)

    def __setattr__(self, name, value):
        raise AttributeError("Grading is immutable")

    @classmethod
    def standard(cls, n: int) -> "Grading":
        return cls((1,) * n)

    @property
    def nvars(self) -> int:
        return len(self.weights)

    def __eq__(self, other):
        return isinstance(other, Grading) and self.weights == other.weights

    def __hash__(self):
        return hash(("Grading", self.weights))

    def __repr__(self):
        return f"Grading({list(self.weights)})"


def weighted_degree(alpha: Exponent, g: Grading) -> int:
    if len(alpha) != len(g.weights):
        raise DimensionError(f"exponent {alpha} has length {len(alpha)}, grading has {len(g.weights)}")
    return sum(a * w for a, w in zip(alpha, g.weights))


@lru_cache(maxsize=None)
def _monomials(weights: tuple, k: int) -> tuple:
    if not weights:
        return ((),) if k == 0 else ()
    w, rest = weights[0], weights[1:]
    out = []
    for a in range(k // w, -1, -1):
        for tail in _monomials(rest, k - a * w):
            out.append((a,) + tail)
    return tuple(out)


def monomial_basis(g: Grading, k: int) -> list:
    """All exponents of weighted degree ``k``, lexicographically descending."""
    if k < 0:
        return []
    return list(_monomials(g.weights, k))


def add_exponents(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial: a map exponent -> nonzero Fraction."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for alpha, c in items:
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != nvars:
                raise DimensionError(f"exponent {alpha} does not have {nvars} entries")
            if any(a < 0 for a in alpha):
                raise ValueError(f"negative exponent {alpha}")
            acc[alpha] = acc.get(alpha, 0) + to_fraction(c)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", {a: c for a, c in acc.items() if c != 0})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Polynomial":
        # terms already pruned and normalized
        p = object.__new__(cls)
        object.__setattr__(p, "nvars", nvars)
        object.__setattr__(p, "_terms", terms)
        object.__setattr__(p, "_hash", None)
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c=1) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, alpha: Exponent, c=1) -> "Polynomial":
        return cls(len(alpha), {tuple(alpha): c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        alpha = [0] * nvars
        alpha[i] = 1
        return cls(nvars, {tuple(alpha): 1})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, alpha: Exponent) -> Fraction:
        return self._terms.get(tuple(alpha), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.nvars, frozenset(self._terms.items()))))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self._terms!r})"

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise DimensionError(f"variable counts differ: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other):
        return add(self, self._coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return scale(-1, self)

    def __sub__(self, other):
        return add(self, scale(-1, self._coerce(other)))

    def __rsub__(self, other):
        return add(self._coerce(other), scale(-1, self))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        return multiply(self, self._coerce(other))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.nvars, 1)
        for _ in range(e):
            out = multiply(out, self)
        return out

    def evaluate(self, point) -> Fraction:
        if len(point) != self.nvars:
            raise DimensionError(f"point has {len(point)} coordinates, expected {self.nvars}")
        point = [to_fraction(x) for x in point]
        total = Fraction(0)
        for alpha, c in self._terms.items():
            t = c
            for x, a in zip(point, alpha):
                if a:
                    t *= x ** a
            total += t
        return total

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def degrees(self, g: Grading) -> set:
        return {weighted_degree(a, g) for a in self._terms}

    def is_homogeneous(self, g: Grading) -> bool:
        return len(self.degrees(g)) <= 1

    def degree(self, g: Grading):
        """Weighted degree of a nonzero homogeneous polynomial; ``None`` otherwise."""
        ds = self.degrees(g)
        return next(iter(ds)) if len(ds) == 1 else None


def _check_same(f: Polynomial, h: Polynomial):
    if f.nvars != h.nvars:
        raise DimensionError(f"variable counts differ: {f.nvars} vs {h.nvars}")


def add(f: Polynomial, h: Polynomial) -> Polynomial:
    _check_same(f, h)
    terms = dict(f._terms)
    for a, c in h._terms.items():
        s = terms.get(a, 0) + c
        if s:
            terms[a] = s
        else:
            terms.pop(a, None)
    return Polynomial._raw(f.nvars, terms)


def scale(c, f: Polynomial) -> Polynomial:
    c = to_fraction(c)
    if c == 0:
        return Polynomial.zero(f.nvars)
    return Polynomial._raw(f.nvars, {a: c * v for a, v in f._terms.items()})


def multiply(f: Polynomial, h: Polynomial) -> Polynomial:
    _check_same(f, h)
    terms: dict = {}
    for a, c in f._terms.items():
        for b, d in h._terms.items():
            key = add_exponents(a, b)
            terms[key] = terms.get(key, 0) + c * d
    return Polynomial._raw(f.nvars, {a: c for a, c in terms.items() if c})


def multiply_monomial(alpha: Exponent, f: Polynomial) -> Polynomial:
    if len(alpha) != f.nvars:
        raise DimensionError(f"exponent {alpha} does not match {f.nvars} variables")
    return Polynomial._raw(f.nvars, {add_exponents(alpha, a): c for a, c in f._terms.items()})


def homogeneous_components(f: Polynomial, g: Grading) -> dict:
    if f.nvars != g.nvars:
        raise DimensionError(f"polynomial has {f.nvars} variables, grading has {g.nvars}")
    parts: dict = {}
    for a, c in f._terms.items():
        parts.setdefault(weighted_degree(a, g), {})[a] = c
    return {k: Polynomial._raw(f.nvars, t) for k, t in sorted(parts.items())}


def term_order_key(alpha: Exponent):
    """Sort key for graded-lex descending order (total degree, then lex)."""
    return (-sum(alpha), tuple(-a for a in alpha))
