"""Exact rational linear algebra: RREF, rank, kernels and span membership.

Dense :class:`RatMatrix` (Fraction entries) is the public value type.
Elimination runs on sparse rows (``dict`` key -> ``gmpy2.mpq``) through
:class:`EchelonBasis`, which the graded-module code also uses directly with
``(component, exponent)`` keys.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from bisect import bisect_left, insort
from typing import Hashable, Iterable, Sequence

from gmpy2 import mpq

from .polycore import DimensionError, to_fraction


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", tuple(to_fraction(x) for x in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "RatMatrix":
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        for c in columns:
            if len(c) != rows:
                raise DimensionError("ragged columns")
        return cls(rows, len(columns), tuple(columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def sparse_rows(self) -> list:
        return [{j: x for j, x in enumerate(self.row(i)) if x} for i in range(self.rows)]

    def sparse_columns(self) -> list:
        cols = [{} for _ in range(self.cols)]
        for idx, x in enumerate(self.entries):
            if x:
                cols[idx % self.cols][idx // self.cols] = x
        return cols

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)

    def matvec(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for {self.cols} columns")
        return [sum((self.entries[i * self.cols + j] * v[j] for j in range(self.cols) if v[j]), Fraction(0))
                for i in range(self.rows)]

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = [other.column(j) for j in range(other.cols)]
        return RatMatrix.from_rows([[sum((a * b for a, b in zip(self.row(i), c) if a and b), Fraction(0))
                                     for c in cols] for i in range(self.rows)], other.cols)

    def is_zero(self) -> bool:
        return not any(self.entries)


def add_scaled(v: dict, c, w: dict) -> None:
    """In place ``v += c * w`` on sparse vectors, pruning zeros."""
    for k, x in w.items():
        s = v.get(k, 0) + c * x
        if s:
            v[k] = s
        else:
            v.pop(k, None)


def to_mpq(v: dict) -> dict:
    return {k: mpq(x) for k, x in v.items() if x}


def to_fractions(v: dict) -> dict:
    return {k: to_fraction(x) for k, x in v.items()}


class EchelonBasis:
    """Incrementally maintained echelon basis of sparse vectors.

    Each stored row has coefficient 1 at its pivot (its smallest key) and no
    entries at smaller keys.  With ``track=True`` every stored row remembers
    its expression in terms of the tagged vectors passed to :meth:`add`.
    Arithmetic runs on ``gmpy2.mpq``; keys must be mutually comparable.
    """

    def __init__(self, track: bool = False):
        self.track = track
        self.rows: dict = {}
        self.combos: dict = {}
        self._order: list = []

    def __len__(self):
        return len(self.rows)

    @property
    def pivots(self) -> list:
        return list(self._order)

    def reduce(self, v: dict):
        """Return ``(residual, combo)`` with ``v = residual + sum(combo[t] * tagged[t])``."""
        r = to_mpq(v)
        combo: dict = {}
        if not r:
            return r, combo
        lo = min(r)
        for p in self._order[bisect_left(self._order, lo):]:
            c = r.get(p)
            if not c:
                continue
            add_scaled(r, -c, self.rows[p])
            if self.track:
                add_scaled(combo, c, self.combos[p])
            if not r:
                break
        return r, combo

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)[0]

    def add(self, v: dict, tag: Hashable = None):
        """Insert ``v``.  Returns ``None`` if it was new, else the dependency.

        The dependency is a dict ``tag -> coefficient`` whose combination of
        tagged vectors (including ``tag`` itself with coefficient 1) vanishes.
        """
        r, combo = self.reduce(v)
        if self.track:
            own = {tag: mpq(1)}
            add_scaled(own, -1, combo)
            combo = own
        if not r:
            return combo if self.track else {}
        p = min(r)
        inv = 1 / r[p]
        self.rows[p] = {k: x * inv for k, x in r.items()}
        if self.track:
            self.combos[p] = {k: x * inv for k, x in combo.items()}
        insort(self._order, p)
        return None

    def coordinates(self, v: dict):
        """Coefficients on the tagged vectors expressing ``v``, or ``None``."""
        r, combo = self.reduce(v)
        return None if r else combo

    def basis(self) -> list:
        return [self.rows[p] for p in self._order]

    def reduced_rows(self) -> list:
        """Rows after back substitution (reduced row echelon form), in pivot order."""
        rows = {p: dict(self.rows[p]) for p in self._order}
        for i in range(len(self._order) - 1, -1, -1):
            p = self._order[i]
            for q in self._order[:i]:
                c = rows[q].get(p)
                if c:
                    add_scaled(rows[q], -c, rows[p])
        return [rows[p] for p in self._order]


def sparse_rank(vectors: Iterable[dict]) -> int:
    e = EchelonBasis()
    for v in vectors:
        e.add(v)
    return len(e)


def sparse_kernel(columns: Sequence[dict]) -> list:
    """Basis of ``{c : sum c_j columns[j] = 0}`` as sparse dicts over column indices."""
    e = EchelonBasis(track=True)
    out = []
    for j, col in enumerate(columns):
        dep = e.add(col, j)
        if dep is not None:
            out.append(dep)
    return out


def rref(m: RatMatrix):
    e = EchelonBasis()
    for row in m.sparse_rows():
        e.add(row)
    pivots = e.pivots
    rows = [[to_fraction(r.get(j, 0)) for j in range(m.cols)] for r in e.reduced_rows()]
    rows += [[Fraction(0)] * m.cols for _ in range(m.rows - len(pivots))]
    return RatMatrix.from_rows(rows, m.cols), pivots


def rank(m: RatMatrix) -> int:
    return sparse_rank(m.sparse_rows())


def kernel_basis(m: RatMatrix) -> list:
    reduced, pivots = rref(m)
    pivset = set(pivots)
    out = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, f]
        out.append(v)
    return out


def in_span(v: Sequence, m: RatMatrix):
    """Coordinates ``c`` with ``m @ c == v`` (columns of ``m`` span), else ``None``."""
    if len(v) != m.rows:
        raise DimensionError(f"vector of length {len(v)} against {m.rows} rows")
    e = EchelonBasis(track=True)
    for j, col in enumerate(m.sparse_columns()):
        e.add(col, j)
    coords = e.coordinates({i: to_fraction(x) for i, x in enumerate(v) if x})
    if coords is None:
        return None
    return [to_fraction(coords.get(j, 0)) for j in range(m.cols)]
