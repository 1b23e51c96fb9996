"""Reduced nested subresultant matrices.

Every nonzero entry of ``H^{(k,j)} = N^{(j)}(A, A')`` (``A`` the previous
level's reduced subresultant at degree ``j_{k-1}``) is a bordered
determinant

    | U  v |
    | b  g | = |U| * (g + x.v),   where x U = -b,

sharing the border ``(U | v)``: the top rows of the previous reduced
matrix.  ``U`` is factored once per level; each distinct bottom row
``(b | g)`` costs one pair of triangular solves.  Scaled entries
``tau * A_tau`` reuse the solve for ``A_tau``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexOutOfRange, SingularMatrix, SingularU
from .exact_arith import RatMatrix, RowSolver, submatrix
from .nested import desc_derivative
from .recsubres import _cache, _check_ext, check_kj
from .subres import determinant_coefficients, determinant_polynomial, sylvester_block

__all__ = [
    "ReducedLevel",
    "ReducedNestedMatrix",
    "h_matrix",
    "reduced_from_k0",
    "reduced_level",
    "reduced_nested_matrix",
    "reduced_nested_poly",
    "u_determinant",
]


@dataclass(frozen=True)
class ReducedLevel:
    """Level-``k`` data shared by every ``(k, j)`` reduced matrix."""

    k: int
    u: RatMatrix
    v: tuple
    bottom_rows: tuple  # (b_tau | g_tau) for tau = j_{k-1} .. 0
    solutions: tuple  # x_tau, same order
    h: tuple  # h_tau = g_tau + x_tau . v, highest power first
    u_det: Fraction


@dataclass(frozen=True)
class ReducedNestedMatrix:
    matrix: RatMatrix
    k: int
    j: int
    u_det: Fraction  # |U^{(k)}|; 1 at level 1


def _matrix_ext(rprs, k, j):
    cache = _cache(rprs, "reduced_mat")
    if (k, j) not in cache:
        if k == 1:
            mat = sylvester_block(rprs.f.desc(), rprs.g.desc(), j)
        else:
            h = reduced_level(rprs, k).h
            mat = sylvester_block(h, desc_derivative(h), j)
        cache[(k, j)] = mat
    return cache[(k, j)]


def reduced_level(rprs, k):
    """Factor ``U^{(k)}`` and solve for every ``h_tau`` at level ``k >= 2``."""
    cache = _cache(rprs, "reduced_level")
    if k in cache:
        return cache[k]
    if not 2 <= k <= rprs.t:
        raise IndexOutOfRange(f"reduced level k={k} outside 2..{rprs.t}")
    _check_ext(rprs, k - 1, rprs.j(k - 1))
    jp = rprs.j(k - 1)
    prev = _matrix_ext(rprs, k - 1, jp)
    width = prev.cols
    border = width - 1
    u = submatrix(prev, range(border), range(border))
    v = prev.column(width - 1)[:border]
    try:
        solver = RowSolver(u)
    except SingularMatrix:
        raise SingularU(k) from None
    rows, sols, h = [], [], []
    for tau in range(jp, -1, -1):
        row = prev.row(border + jp - tau)
        b, g = row[:border], row[border]
        x = solver.solve(b)
        rows.append(row)
        sols.append(x)
        h.append(g + sum((xi * vi for xi, vi in zip(x, v)), Fraction(0)))
    level = ReducedLevel(k, u, tuple(v), tuple(rows), tuple(sols), tuple(h), solver.det)
    cache[k] = level
    return level


def u_determinant(rprs, k):
    """``|U^{(k)}|``; raises :class:`SingularU` when it vanishes."""
    return reduced_level(rprs, k).u_det


def reduced_nested_matrix(rprs, k, j):
    """The ``(k, j)``-th reduced nested subresultant matrix (``I x J``)."""
    check_kj(rprs, k, j)
    u_det = Fraction(1) if k == 1 else reduced_level(rprs, k).u_det
    return ReducedNestedMatrix(_matrix_ext(rprs, k, j), k, j, u_det)


def reduced_nested_poly(rprs, k, j):
    """``Shat_{k,j}(F, G)``."""
    check_kj(rprs, k, j)
    return determinant_polynomial(_matrix_ext(rprs, k, j), j)


def _input_degrees(rprs, k):
    if k == 1:
        return rprs.m, rprs.n
    return rprs.j(k - 1), rprs.j(k - 1) - 1


def reduced_from_k0(rprs, k, j):
    """``Nhat^{(k, j)}`` cut out of ``Nhat^{(k, 0)}``: the left ``n_2 - j``
    columns of the first block, the left ``n_1 - j`` columns of the second
    block, and the top ``n_1 + n_2 - j`` rows."""
    check_kj(rprs, k, j)
    n1, n2 = _input_degrees(rprs, k)
    full = _matrix_ext(rprs, k, 0)
    cols = list(range(n2 - j)) + list(range(n2, n2 + n1 - j))
    mat = submatrix(full, range(n1 + n2 - j), cols)
    u_det = Fraction(1) if k == 1 else reduced_level(rprs, k).u_det
    return ReducedNestedMatrix(mat, k, j, u_det)


def h_matrix(rprs, k, j):
    """``H^{(k,j)}`` with entries evaluated as determinants of the previous
    reduced matrix (no elimination); ``H == |U^{(k)}| * Nhat^{(k,j)}``."""
    check_kj(rprs, k, j)
    if k == 1:
        return _matrix_ext(rprs, 1, j)
    jp = rprs.j(k - 1)
    a = determinant_coefficients(_matrix_ext(rprs, k - 1, jp), jp)
    return sylvester_block(a, desc_derivative(a), j)
