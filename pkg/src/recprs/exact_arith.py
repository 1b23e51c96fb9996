"""Exact rationals and dense rational matrices.

Scalars are :class:`fractions.Fraction`, which already keeps every value in
lowest terms with a positive denominator (zero is ``0/1``).  Matrices are
immutable, row-major and dense.
"""

from fractions import Fraction
from itertools import pairwise
from math import lcm

from . import _kernel
from .errors import IndexOutOfRange, NonSquare, SingularMatrix

Rational = Fraction

__all__ = [
    "RatMatrix",
    "Rational",
    "RowSolver",
    "as_rational",
    "det",
    "solve_row_system",
    "submatrix",
]


def as_rational(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact scalars")
    return Fraction(value)


class RatMatrix:
    """Immutable dense matrix of exact rationals."""

    __slots__ = ("cols", "entries", "rows")

    def __init__(self, rows, cols, entries):
        entries = tuple(as_rational(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError(f"{len(entries)} entries do not fill a {rows}x{cols} matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, index):
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexOutOfRange(f"entry {index} outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i):
        if not 0 <= i < self.rows:
            raise IndexOutOfRange(f"row {i} outside {self.rows} rows")
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        if not 0 <= j < self.cols:
            raise IndexOutOfRange(f"column {j} outside {self.cols} columns")
        return self.entries[j::self.cols] if self.cols else ()

    def tolist(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return RatMatrix(self.cols, self.rows,
                         [self.entries[i * self.cols + j]
                          for j in range(self.cols) for i in range(self.rows)])

    def scale(self, c):
        c = as_rational(c)
        return RatMatrix(self.rows, self.cols, [c * e for e in self.entries])

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(e) for e in self.row(i)) + "]"
                         for i in range(self.rows))
        return f"RatMatrix({self.rows}x{self.cols}, [{body}])"


def _check_selection(sel, bound, what):
    sel = list(sel)
    for a, b in pairwise(sel):
        if b <= a:
            raise IndexOutOfRange(f"{what} selection must be strictly increasing: {sel}")
    if sel and (sel[0] < 0 or sel[-1] >= bound):
        raise IndexOutOfRange(f"{what} selection {sel} outside 0..{bound - 1}")
    return sel


def submatrix(m, row_selection, col_selection):
    rsel = _check_selection(row_selection, m.rows, "row")
    csel = _check_selection(col_selection, m.cols, "column")
    e, w = m.entries, m.cols
    return RatMatrix(len(rsel), len(csel), [e[i * w + j] for i in rsel for j in csel])


def det_rows(rows, kernel=None):
    """Determinant of a square list-of-rows of Fractions.

    Each row is scaled to integers by the lcm of its denominators so the
    elimination runs on integers; the scale is divided out at the end.
    """
    scale = 1
    int_rows = []
    for r in rows:
        den = 1
        for e in r:
            d = e.denominator
            if d != 1:
                den = lcm(den, d)
        scale *= den
        if den == 1:
            int_rows.append([e.numerator for e in r])
        else:
            int_rows.append([e.numerator * (den // e.denominator) for e in r])
    det_int = _kernel.det_int if kernel is None else _kernel.KERNELS[kernel]
    return Fraction(det_int(int_rows), scale)


def det(m, kernel=None):
    """Exact determinant by fraction-free Bareiss elimination.

    ``kernel`` selects ``"python"`` or ``"compiled"`` explicitly; by default
    the import-time choice in :mod:`recprs._kernel` is used.
    """
    if m.rows != m.cols:
        raise NonSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    return det_rows([list(m.row(i)) for i in range(m.rows)], kernel)


class RowSolver:
    """Solves ``x @ u = -b`` for many right-hand sides ``b``.

    ``u`` is factored once (PLU of its transpose, exact); each
    :meth:`solve` is then two triangular sweeps.
    """

    def __init__(self, u):
        if u.rows != u.cols:
            raise NonSquare(f"row system with a {u.rows}x{u.cols} matrix")
        n = self.order = u.rows
        a = [list(u.column(i)) for i in range(n)]  # rows of u^T
        perm = list(range(n))
        sign = 1
        for k in range(n):
            p = next((i for i in range(k, n) if a[i][k] != 0), None)
            if p is None:
                raise SingularMatrix(f"matrix of order {n} is singular")
            if p != k:
                a[k], a[p] = a[p], a[k]
                perm[k], perm[p] = perm[p], perm[k]
                sign = -sign
            piv = a[k][k]
            for i in range(k + 1, n):
                if a[i][k]:
                    f = a[i][k] / piv
                    a[i][k] = f
                    ai, ak = a[i], a[k]
                    for c in range(k + 1, n):
                        ai[c] -= f * ak[c]
        self._lu = a
        self._perm = perm
        d = Fraction(sign)
        for k in range(n):
            d *= a[k][k]
        self.det = d

    def solve(self, b):
        n = self.order
        if len(b) != n:
            raise ValueError(f"right-hand side of length {len(b)} for order {n}")
        a = self._lu
        y = [-as_rational(b[p]) for p in self._perm]
        for i in range(n):
            ai = a[i]
            y[i] -= sum((ai[c] * y[c] for c in range(i)), Fraction(0))
        for i in range(n - 1, -1, -1):
            ai = a[i]
            s = y[i] - sum((ai[c] * y[c] for c in range(i + 1, n)), Fraction(0))
            y[i] = s / ai[i]
        return tuple(y)


def solve_row_system(u, b):
    """Return the row vector ``x`` with ``x @ u == -b``."""
    return RowSolver(u).solve(b)
