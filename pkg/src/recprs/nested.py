"""Nested subresultant matrices and polynomials.

``Ntilde^{(k, j)}`` is the ``j``-th subresultant matrix of the previous
level's nested subresultant ``Stilde_{k-1, j_{k-1}}`` and its derivative.
Entries are evaluated to exact rationals level by level; the matrix keeps a
symbolic label per entry recording which previous-level determinant (and
which integer multiple of it) sits there.
"""

from dataclasses import dataclass

from .exact_arith import RatMatrix
from .recsubres import _cache, _check_ext, check_kj
from .subres import determinant_coefficients, determinant_polynomial, sylvester_block

__all__ = ["NestedSubresMatrix", "nested_matrix", "nested_subres_poly"]


@dataclass(frozen=True)
class NestedSubresMatrix:
    matrix: RatMatrix
    k: int
    j: int
    provenance: tuple = ()  # row-major labels such as "4*A[4]"; empty for k = 1


def desc_derivative(desc):
    """Derivative of a coefficient vector given highest power first, keeping
    the formal degree (one less)."""
    d = len(desc) - 1
    return tuple((d - i) * a for i, a in enumerate(desc[:-1]))


def _labels(jp, j):
    """Entry labels of ``N^{(j)}(A, A')`` for ``A`` of formal degree ``jp``."""
    a = [f"A[{jp - i}]" for i in range(jp + 1)]
    da = [f"{jp - i}*A[{jp - i}]" if jp - i != 1 else "A[1]" for i in range(jp)]
    rows, fcols, gcols = 2 * jp - 1 - j, jp - 1 - j, jp - j
    grid = [["0"] * (fcols + gcols) for _ in range(rows)]
    for c in range(fcols):
        for r, s in enumerate(a):
            grid[c + r][c] = s
    for c in range(gcols):
        for r, s in enumerate(da):
            grid[c + r][fcols + c] = s
    return tuple(s for row in grid for s in row)


def _top(rprs, k):
    """Coefficients of ``Stilde_{k, j_k}`` (formal degree ``j_k``), highest first."""
    cache = _cache(rprs, "nested_top")
    if k not in cache:
        jk = rprs.j(k)
        cache[k] = determinant_coefficients(_matrix_ext(rprs, k, jk), jk)
    return cache[k]


def _matrix_ext(rprs, k, j):
    cache = _cache(rprs, "nested_mat")
    if (k, j) not in cache:
        if k == 1:
            mat = sylvester_block(rprs.f.desc(), rprs.g.desc(), j)
        else:
            top = _top(rprs, k - 1)
            mat = sylvester_block(top, desc_derivative(top), j)
        cache[(k, j)] = mat
    return cache[(k, j)]


def nested_matrix(rprs, k, j):
    """The ``(k, j)``-th nested subresultant matrix."""
    check_kj(rprs, k, j)
    labels = _labels(rprs.j(k - 1), j) if k > 1 else ()
    return NestedSubresMatrix(_matrix_ext(rprs, k, j), k, j, labels)


def _nested_ext(rprs, k, j):
    _check_ext(rprs, k, j)
    return determinant_polynomial(_matrix_ext(rprs, k, j), j)


def nested_subres_poly(rprs, k, j):
    """``Stilde_{k,j}(F, G)``."""
    check_kj(rprs, k, j)
    return determinant_polynomial(_matrix_ext(rprs, k, j), j)
