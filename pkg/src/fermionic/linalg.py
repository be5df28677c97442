"""Dense exact-rational matrices.

Elimination is fraction-free: rows are scaled to primitive integer vectors and combined
with integer multipliers, so no intermediate denominators appear.  Rationals only come
back at the end, when the reduced echelon form is normalized.
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from math import gcd, lcm


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _primitive_int_row(row) -> list[int]:
    den = 1
    for x in row:
        if x.denominator != 1:
            den = lcm(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = gcd(*ints) if ints else 0
    if g > 1:
        ints = [v // g for v in ints]
    return ints


class ExactMatrix:
    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows, ncols=None):
        data = tuple(tuple(_frac(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        self._data = data
        self.rows = len(data)
        self.cols = ncols

    @classmethod
    def identity(cls, k):
        return cls([[1 if a == b else 0 for b in range(k)] for a in range(k)], ncols=k)

    @classmethod
    def zeros(cls, r, c):
        return cls([[0] * c for _ in range(r)], ncols=c)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        r, c = idx
        return self._data[r][c]

    def row(self, r):
        return self._data[r]

    def tolist(self):
        return [list(r) for r in self._data]

    def transpose(self):
        return ExactMatrix([[self._data[r][c] for r in range(self.rows)] for c in range(self.cols)],
                           ncols=self.rows)

    T = property(transpose)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ot = other.transpose()._data
        return ExactMatrix([[sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in ot]
                            for r in self._data], ncols=other.cols)

    def scale(self, c):
        c = _frac(c)
        return ExactMatrix([[c * x for x in r] for r in self._data], ncols=self.cols)

    def vstack(self, other):
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return ExactMatrix(self._data + other._data, ncols=self.cols)

    def submatrix(self, rows, cols):
        return ExactMatrix([[self._data[r][c] for c in cols] for r in rows], ncols=len(cols))

    def is_square(self):
        return self.rows == self.cols

    def __repr__(self):
        return f"ExactMatrix({self.tolist()!r})"

    def __str__(self):
        cells = [[str(x) for x in r] for r in self._data]
        w = max((len(s) for r in cells for s in r), default=1)
        return "\n".join(" ".join(s.rjust(w) for s in r) for r in cells)

    # ------------------------------------------------------------------ CSV

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for r in self._data:
            w.writerow([str(x) for x in r])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str):
        rows = [[Fraction(cell.strip()) for cell in r] for r in csv.reader(io.StringIO(text)) if r]
        return cls(rows)


def _echelon(int_rows, ncols, order):
    """Forward elimination on primitive integer rows, scanning columns in ``order``.

    Returns (rows, pivots): the echelon rows (each primitive, positive pivot) and the pivot
    column of each, in scan order.
    """
    pending = [r for r in int_rows if any(r)]
    basis = []
    pivots = []
    for c in order:
        if not pending:
            break
        k = next((p for p, r in enumerate(pending) if r[c]), None)
        if k is None:
            continue
        prow = pending.pop(k)
        if prow[c] < 0:
            prow = [-v for v in prow]
        pv = prow[c]
        nxt = []
        for r in pending:
            f = r[c]
            if f:
                g = gcd(pv, f)
                a, b = pv // g, f // g
                r = [a * x - b * y for x, y in zip(r, prow)]
                if not any(r):
                    continue
                g = gcd(*r)
                if g > 1:
                    r = [v // g for v in r]
            nxt.append(r)
        pending = nxt
        basis.append(prow)
        pivots.append(c)
    return basis, pivots


def _check_order(order, ncols):
    order = list(order)
    if sorted(order) != list(range(ncols)):
        raise ValueError("column order must be a permutation of 0..cols-1")
    return order


def rank(M: ExactMatrix) -> int:
    rows = [_primitive_int_row(r) for r in M._data]
    return len(_echelon(rows, M.cols, range(M.cols))[1])


def rank_of_rows(rows, ncols) -> int:
    """Rank of a list of integer/rational row vectors without building an ExactMatrix."""
    ints = [_primitive_int_row([_frac(x) for x in r]) for r in rows]
    return len(_echelon(ints, ncols, range(ncols))[1])


def pivot_columns(M: ExactMatrix, column_order=None) -> list[int]:
    order = range(M.cols) if column_order is None else _check_order(column_order, M.cols)
    rows = [_primitive_int_row(r) for r in M._data]
    return _echelon(rows, M.cols, order)[1]


def rref(M: ExactMatrix, column_order=None):
    """Reduced row echelon form with columns scanned in ``column_order``.

    Returns (R, pivots), with ``pivots`` in original column indexing and listed in scan
    order; row k of R has a leading 1 in column pivots[k] and zeros in every other pivot
    column.  Zero rows are dropped from R's bottom but R keeps M's row count.
    """
    order = list(range(M.cols)) if column_order is None else _check_order(column_order, M.cols)
    rows = [_primitive_int_row(r) for r in M._data]
    basis, pivots = _echelon(rows, M.cols, order)
    # back-substitution, still fraction free
    for k in range(len(basis) - 1, -1, -1):
        c = pivots[k]
        pk = basis[k]
        for m in range(k):
            f = basis[m][c]
            if f:
                pv = pk[c]
                g = gcd(pv, f)
                a, b = pv // g, f // g
                r = [a * x - b * y for x, y in zip(basis[m], pk)]
                g = gcd(*r)
                if g > 1:
                    r = [v // g for v in r]
                if r[pivots[m]] < 0:
                    r = [-v for v in r]
                basis[m] = r
    out = []
    for r, c in zip(basis, pivots):
        pv = r[c]
        out.append([Fraction(v, pv) for v in r])
    out += [[Fraction(0)] * M.cols for _ in range(M.rows - len(out))]
    return ExactMatrix(out, ncols=M.cols), pivots


def determinant(M: ExactMatrix) -> Fraction:
    """Bareiss determinant on the integer matrix obtained by clearing all denominators."""
    if not M.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return Fraction(1)
    den = 1
    for r in M._data:
        for x in r:
            den = lcm(den, x.denominator)
    a = [[int(x * den) for x in r] for r in M._data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((p for p in range(k + 1, n) if a[p][k]), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (pk * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return Fraction(sign * a[n - 1][n - 1], den ** n)


def is_invertible(M: ExactMatrix) -> bool:
    return M.is_square() and rank(M) == M.rows
