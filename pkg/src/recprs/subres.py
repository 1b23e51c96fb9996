"""Sylvester and subresultant matrices, subresultants, and the fundamental
theorem of subresultants.

Index mapping: the ``N_tau`` minor of a subresultant-type matrix with
``rows = cols + j`` keeps the top ``cols - 1`` rows and the row with
0-based index ``cols - 1 + j - tau`` (1-based ``cols + j - tau``).
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeOrder, IndexOutOfRange, JOutOfRange, ZeroInput
from .exact_arith import RatMatrix, det_rows
from .poly import Poly

__all__ = [
    "SubresMatrix",
    "determinant_polynomial",
    "fundamental_theorem_factor",
    "subres_matrix",
    "subres_poly",
    "sylvester_block",
    "sylvester_matrix",
]


def sylvester_block(fdesc, gdesc, j):
    """``N^{(j)}`` from coefficient vectors given highest power first.

    The formal degrees are ``len(fdesc) - 1`` and ``len(gdesc) - 1``; leading
    zeros are kept.  ``j`` may equal the second degree, giving a matrix with
    no columns of the first polynomial.
    """
    m, n = len(fdesc) - 1, len(gdesc) - 1
    if not 0 <= j <= n:
        raise JOutOfRange(f"j={j} outside 0..{n}")
    rows, fcols, gcols = m + n - j, n - j, m - j
    cols = fcols + gcols
    grid = [[Fraction(0)] * cols for _ in range(rows)]
    for c in range(fcols):
        for r, a in enumerate(fdesc):
            grid[c + r][c] = a
    for c in range(gcols):
        for r, b in enumerate(gdesc):
            grid[c + r][fcols + c] = b
    return RatMatrix(rows, cols, [e for row in grid for e in row])


def minor_rows(matrix, j, tau):
    """Rows (as lists) of the square minor ``N_tau`` of ``matrix``."""
    cols = matrix.cols
    if matrix.rows != cols + j:
        raise IndexOutOfRange(f"{matrix.rows}x{cols} matrix does not have degree {j} shape")
    if not 0 <= tau <= j:
        raise IndexOutOfRange(f"tau={tau} outside 0..{j}")
    out = [list(matrix.row(r)) for r in range(cols - 1)]
    out.append(list(matrix.row(cols - 1 + j - tau)))
    return out


def determinant_coefficients(matrix, j):
    """``(|N_j|, ..., |N_0|)``: coefficients highest power first."""
    if matrix.cols == 0:
        raise IndexOutOfRange("determinant polynomial of a matrix without columns")
    return tuple(det_rows(minor_rows(matrix, j, tau)) for tau in range(j, -1, -1))


def determinant_polynomial(matrix, j):
    """``|N_j| x^j + ... + |N_0|`` for a matrix with ``rows = cols + j``."""
    return Poly.from_desc(determinant_coefficients(matrix, j))


@dataclass(frozen=True)
class SubresMatrix:
    matrix: RatMatrix
    j: int
    m: int
    n: int


def _degrees(f, g):
    if f.is_zero() or g.is_zero():
        raise ZeroInput("subresultants of a zero polynomial")
    m, n = f.degree, g.degree
    if n < 1 or m < n:
        raise DegreeOrder(f"subresultants need deg f >= deg g > 0, got ({m}, {n})")
    return m, n


def sylvester_matrix(f, g):
    _degrees(f, g)  # validates the pair
    return sylvester_block(f.desc(), g.desc(), 0)


def subres_matrix(f, g, j):
    m, n = _degrees(f, g)
    if not 0 <= j < n:
        raise JOutOfRange(f"j={j} outside 0..{n - 1}")
    return SubresMatrix(sylvester_block(f.desc(), g.desc(), j), j, m, n)


def _subres_ext(f, g, j):
    """``S_j(f, g)`` for ``0 <= j <= deg g``; ``j = deg g`` yields
    ``lc(g)^(m-n-1) g``."""
    return determinant_polynomial(sylvester_block(f.desc(), g.desc(), j), j)


def subres_poly(f, g, j):
    return determinant_polynomial(subres_matrix(f, g, j).matrix, j)


def fundamental_theorem_factor(prs, i, mode="n_i"):
    """Scalar ``s`` with ``S_j(F, G) = s * P_i`` from the PRS metadata.

    ``mode="n_i"`` gives ``j = n_i``; ``mode="n_{i-1}-1"`` gives
    ``j = n_{i-1} - 1``.
    """
    if not 3 <= i <= len(prs):
        raise IndexOutOfRange(f"step i={i} outside 3..{len(prs)}")
    n, c, d = prs.n, prs.c, prs.d
    if mode == "n_i":
        target = n(i)
        s = c(i) ** (d(i - 1) - 1)
    elif mode == "n_{i-1}-1":
        target = n(i - 1) - 1
        s = c(i - 1) ** (1 - d(i - 1))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    s = Fraction(s)
    for l in range(3, i + 1):
        e1 = n(l - 1) - target
        e2 = n(l - 2) - target
        s *= (prs.beta(l) / prs.alpha(l)) ** e1
        s *= c(l - 1) ** (d(l - 2) + d(l - 1))
        if (e2 * e1) % 2:
            s = -s
    return s


def theorem_degrees(prs):
    """Map each degree ``j < n_2`` to the fundamental-theorem claim about
    ``S_j``: ``("zero", None)`` or ``(mode, i)``."""
    out = {}
    last = len(prs)
    for j in range(prs.n(last)):
        out[j] = ("zero", None)
    for i in range(3, last + 1):
        out[prs.n(i)] = ("n_i", i)
        for j in range(prs.n(i) + 1, prs.n(i - 1) - 1):
            out[j] = ("zero", None)
        if prs.n(i - 1) - 1 > prs.n(i):
            out[prs.n(i - 1) - 1] = ("n_{i-1}-1", i)
    return out
