"""Exact linear algebra over Q on sparse rows.

Rows are dicts ``{column: Fraction}``.  Elimination is ordinary Gaussian
elimination with exact rationals; rank, nullspace and determinants built on it
are used for every certified dimension in the package.
"""

from __future__ import annotations

import hashlib
import heapq
from fractions import Fraction
from typing import Iterable, Sequence

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    _mpq = None


def to_field(v):
    """Coefficient in the fast elimination field (gmpy2 rationals when available)."""
    if _mpq is None:
        return Fraction(v)
    if isinstance(v, Fraction):
        return _mpq(v.numerator, v.denominator)
    return _mpq(v)


def from_field(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    return Fraction(int(v.numerator), int(v.denominator))


class RationalMatrix:
    """Dense matrix of Fractions, stored row-major as lists."""

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [[Fraction(v) for v in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, n: int, m: int) -> "RationalMatrix":
        return cls([[0] * m for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            nz = [(k, v) for k, v in enumerate(row) if v]
            out.append([sum((v * col[k] for k, v in nz), Fraction(0)) for col in cols])
        return RationalMatrix(out)

    def apply(self, vec: Sequence) -> list:
        """Matrix times column vector."""
        return [sum((a * b for a, b in zip(row, vec) if a and b), Fraction(0)) for row in self.rows]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([list(c) for c in zip(*self.rows)])

    def column(self, j: int) -> list:
        return [row[j] for row in self.rows]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def sparse_rows(self) -> list[dict]:
        return [{j: v for j, v in enumerate(r) if v} for r in self.rows]

    def rank(self) -> int:
        return rank(self.sparse_rows())

    def det(self) -> Fraction:
        return determinant(self.rows)

    def to_strings(self) -> list[list[str]]:
        return [[fraction_str(v) for v in r] for r in self.rows]

    def fingerprint(self) -> str:
        return matrix_fingerprint(self.rows)

    def __repr__(self):
        return f"RationalMatrix({self.nrows}x{self.ncols})"


def fraction_str(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_fraction(text) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    return Fraction(str(text).strip())


def matrix_fingerprint(rows: Iterable[Sequence]) -> str:
    h = hashlib.sha256()
    for row in rows:
        h.update((",".join(fraction_str(v) for v in row) + "\n").encode())
    return h.hexdigest()


def _axpy(target: dict, c: Fraction, row: dict) -> None:
    """target -= c * row, in place, dropping zeros."""
    for j, v in row.items():
        s = target.get(j, 0) - c * v
        if s:
            target[j] = s
        else:
            target.pop(j, None)


def _reduce_by(row: dict, pivots: dict) -> dict:
    """Eliminate pivot columns from ``row`` in increasing column order."""
    todo = [j for j in row if j in pivots]
    heapq.heapify(todo)
    while todo:
        j = heapq.heappop(todo)
        c = row.get(j)
        if not c:
            continue
        for k, v in pivots[j].items():
            s = row.get(k, 0) - c * v
            if s:
                if k not in row and k in pivots:
                    heapq.heappush(todo, k)
                row[k] = s
            else:
                row.pop(k, None)
    return row


class Echelon:
    """Incremental row echelon form.

    Each stored row is monic with pivot equal to its minimal column index;
    ``add`` reduces a new row by the existing pivots and keeps it if nonzero.
    Column indices double as priorities, so callers choose the pivot order by
    choosing the column numbering.
    """

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    def __len__(self):
        return len(self.pivots)

    def reduce_head(self, row: dict) -> dict:
        row = dict(row)
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                break
            _axpy(row, row[lead], piv)
        return row

    def add(self, row: dict) -> bool:
        row = self.reduce_head(row)
        if not row:
            return False
        lead = min(row)
        c = row[lead]
        if c != 1:
            row = {j: v / c for j, v in row.items()}
        self.pivots[lead] = row
        return True

    def reduce_full(self, row: dict) -> dict:
        """Remove every pivot column from ``row``; the result is canonical."""
        return _reduce_by(dict(row), self.pivots)

    def reduced_rows(self) -> list[dict]:
        """Fully reduced echelon rows sorted by pivot."""
        out: dict[int, dict] = {}
        for lead in sorted(self.pivots, reverse=True):
            rest = {j: v for j, v in self.pivots[lead].items() if j != lead}
            rest = _reduce_by(rest, out)
            rest[lead] = Fraction(1)
            out[lead] = rest
        return [out[k] for k in sorted(out)]


def rank(rows: Iterable[dict]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return len(ech)


def row_space_basis(rows: Iterable[dict]) -> list[dict]:
    """Reduced row echelon basis of the span of ``rows``."""
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.reduced_rows()


def determinant(rows: Sequence[Sequence]) -> Fraction:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    a = [[Fraction(v) for v in r] for r in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            f = a[r][col]
            if f:
                f /= p
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {v : A v = 0}."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    reduced = row_space_basis({j: Fraction(v) for j, v in enumerate(r) if v} for r in rows)
    pivots = {min(r): r for r in reduced}
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for p, r in pivots.items():
            v[p] = -r.get(free, Fraction(0))
        basis.append(v)
    return basis
