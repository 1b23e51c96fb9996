"""Recursive subresultant matrices, their closed-form sizes, and the scale
constants relating every subresultant family to the recursive PRS.

For level ``k > 1`` the matrix is assembled from the previous level's
matrix ``A = Nbar^{(k-1, j_{k-1})}``:

* ``b = 2 j_{k-1} - 2 j - 1`` column blocks, each as wide as ``A``;
* the upper part is ``b`` diagonal copies of ``A_U`` (``A`` without its
  bottom ``j_{k-1} + 1`` rows);
* the lower part holds ``j_{k-1} - j - 1`` copies of ``A_L`` (the bottom
  ``j_{k-1} + 1`` rows) then ``j_{k-1} - j`` copies of ``A_L'`` (``A_L``
  with 1-based row ``i`` scaled by ``j_{k-1} + 1 - i`` and the last row
  dropped), each copy one row lower than its left neighbour, restarting at
  the top for the first ``A_L'``.

This is the Sylvester layout of ``(P_1^{(k)}, P_2^{(k)})`` with every
coefficient replaced by a block.
"""

import weakref
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import IncompletePrs, IndexOutOfRange, SingularU
from .exact_arith import RatMatrix
from .subres import determinant_polynomial, fundamental_theorem_factor, sylvester_block

__all__ = [
    "RecSubresMatrix",
    "ScaleLedger",
    "build_recsubres_matrix",
    "prop1_size",
    "recsubres_poly",
    "recursive_theorem_factor",
    "scale_ledger",
    "valid_degrees",
]

_CACHE = weakref.WeakKeyDictionary()


def _cache(rprs, name):
    return _CACHE.setdefault(rprs, {}).setdefault(name, {})


def clear_caches():
    _CACHE.clear()


def _require_complete(rprs):
    if not rprs.complete:
        raise IncompletePrs("recursive PRS does not end in a nonzero constant")
    if rprs.n < 1:
        raise IndexOutOfRange("subresultant constructions need deg G >= 1")


def valid_degrees(rprs, k):
    """Degrees ``j`` for which the ``(k, j)`` constructions are defined."""
    if not 1 <= k <= rprs.t:
        raise IndexOutOfRange(f"level k={k} outside 1..{rprs.t}")
    top = rprs.n - 1 if k == 1 else rprs.j(k - 1) - 2
    return list(range(top, -1, -1))


def check_kj(rprs, k, j):
    _require_complete(rprs)
    if j not in valid_degrees(rprs, k):
        raise IndexOutOfRange(f"(k, j) = ({k}, {j}) is not a valid index pair")


def _check_ext(rprs, k, j):
    """Like :func:`check_kj` but also admits ``j = n_2^{(k)}``, the degree
    at which the next level's input is read off."""
    _require_complete(rprs)
    if not 1 <= k <= rprs.t:
        raise IndexOutOfRange(f"level k={k} outside 1..{rprs.t}")
    top = rprs.n if k == 1 else rprs.j(k - 1) - 1
    if not 0 <= j <= top:
        raise IndexOutOfRange(f"(k, j) = ({k}, {j}) is not a valid index pair")


@dataclass(frozen=True)
class RecSubresMatrix:
    matrix: RatMatrix
    k: int
    j: int
    column_blocks: int = 1
    block_width: int = 0
    upper_block_rows: int = 0
    lower_blocks: int = 0
    lower_prime_blocks: int = 0
    lower_offset: int = 0  # first row of the lower part


def _level_one_width(rprs, j):
    return rprs.m + rprs.n - 2 * j


def _build(rprs, k, j):
    cache = _cache(rprs, "recmat")
    key = (k, j)
    if key in cache:
        return cache[key]
    if k == 1:
        mat = sylvester_block(rprs.f.desc(), rprs.g.desc(), j)
        out = RecSubresMatrix(mat, 1, j, 1, mat.cols)
        cache[key] = out
        return out
    jp = rprs.j(k - 1)
    prev = _build(rprs, k - 1, jp).matrix
    width = prev.cols
    up_rows = prev.rows - (jp + 1)
    a_u = [list(prev.row(r)) for r in range(up_rows)]
    a_l = [list(prev.row(r)) for r in range(up_rows, prev.rows)]
    a_lp = [[(jp - i) * e for e in a_l[i]] for i in range(jp)]
    b = 2 * jp - 2 * j - 1
    n_l, n_lp = jp - j - 1, jp - j
    rows = b * up_rows + (2 * jp - j - 1)
    cols = b * width
    grid = [[Fraction(0)] * cols for _ in range(rows)]
    for blk in range(b):
        c0 = blk * width
        for r, src in enumerate(a_u):
            grid[blk * up_rows + r][c0:c0 + width] = src
    low = b * up_rows
    for blk in range(n_l):
        c0 = blk * width
        for r, src in enumerate(a_l):
            grid[low + blk + r][c0:c0 + width] = src
    for s in range(n_lp):
        c0 = (n_l + s) * width
        for r, src in enumerate(a_lp):
            grid[low + s + r][c0:c0 + width] = src
    mat = RatMatrix(rows, cols, [e for row in grid for e in row])
    out = RecSubresMatrix(mat, k, j, b, width, up_rows, n_l, n_lp, low)
    cache[key] = out
    return out


def build_recsubres_matrix(rprs, k, j):
    """The ``(k, j)``-th recursive subresultant matrix."""
    check_kj(rprs, k, j)
    return _build(rprs, k, j)


def _u(rprs, k, j):
    """Column count of ``Nbar^{(k, j)}`` from the closed form."""
    if k == 1:
        return rprs.m + rprs.n - 2 * j
    js = rprs.j_indices
    u = rprs.m + rprs.n - 2 * js[1]
    for l in range(2, k):
        u *= 2 * js[l - 1] - 2 * js[l] - 1
    return u * (2 * js[k - 1] - 2 * j - 1)


def prop1_size(rprs, k, j):
    """``(rows, cols)`` of ``Nbar^{(k, j)}`` from the closed-form sizes."""
    _check_ext(rprs, k, j)
    u = _u(rprs, k, j)
    return (u + j, u)


def _recsubres_ext(rprs, k, j):
    cache = _cache(rprs, "recpoly")
    if (k, j) not in cache:
        cache[(k, j)] = determinant_polynomial(_build(rprs, k, j).matrix, j)
    return cache[(k, j)]


def recsubres_poly(rprs, k, j):
    """``Sbar_{k,j}(F, G)``."""
    check_kj(rprs, k, j)
    return _recsubres_ext(rprs, k, j)


@dataclass(frozen=True)
class ScaleLedger:
    """Exact constants relating the subresultant families.

    Level-indexed dicts: ``B`` (``k = 1..t-1``), ``Rbar``, ``Rtilde``,
    ``Rprime`` (``k = 0..t-1``), ``Bhat_level`` and ``Rhat``
    (``k = 1..t-1``), ``u_level`` (``k = 1..t``) and ``U_det``
    (``|U^{(k)}|`` for ``k = 2..t``, ``None`` where ``U^{(k)}`` is singular).
    """

    m: int
    n: int
    j_indices: tuple
    B: dict
    u_level: dict
    Rbar: dict
    Rtilde: dict
    Rprime: dict
    U_det: dict = field(default_factory=dict)
    Bhat_level: dict = field(default_factory=dict)
    Rhat: dict = field(default_factory=dict)

    def u(self, k, j):
        if k == 1:
            return self.m + self.n - 2 * j
        js = self.j_indices
        return self.u_level[k - 1] * (2 * js[k - 1] - 2 * j - 1)

    def b(self, k, j):
        return 1 if k == 1 else 2 * self.j_indices[k - 1] - 2 * j - 1

    def r(self, k, j):
        if k == 1:
            return 1
        b = self.b(k, j)
        return -1 if ((self.u_level[k - 1] - 1) * (b * (b - 1) // 2)) % 2 else 1

    def J(self, k, j):
        if k == 1:
            return self.m + self.n - 2 * j
        return 2 * self.j_indices[k - 1] - 2 * j - 1

    def I(self, k, j):
        return self.J(k, j) + j

    def Bhat(self, k, j):
        if k == 1:
            return Fraction(1)
        ud = self.U_det.get(k)
        if ud is None:
            raise SingularU(k)
        return ud ** self.J(k, j)

    def lemma1_factor(self, k, j):
        """``Sbar_{k,j} = factor * S_j(P_1^{(k)}, P_2^{(k)})``."""
        return self.Rbar[k - 1] ** self.b(k, j) * self.r(k, j)

    def nested_factor(self, k, j):
        """``Stilde_{k,j} = factor * S_j(P_1^{(k)}, P_2^{(k)})``."""
        return self.Rtilde[k - 1] ** self.b(k, j)

    def sign_factor(self, k, j):
        """``Sbar_{k,j} = factor * Stilde_{k,j}``; always +1 or -1."""
        return self.Rprime[k - 1] ** self.b(k, j) * self.r(k, j)

    def reduction_factor(self, k, j):
        """``Stilde_{k,j} = factor * Shat_{k,j}``."""
        if k == 1:
            return Fraction(1)
        if self.Bhat_level.get(k - 1) is None:
            raise SingularU(k - 1)
        base = self.Rhat[k - 1] * self.Bhat_level[k - 1]
        return base ** self.J(k, j) * self.Bhat(k, j)

    def as_dict(self):
        return {
            "B": self.B, "u": self.u_level, "Rbar": self.Rbar, "Rtilde": self.Rtilde,
            "Rprime": self.Rprime, "U_det": self.U_det, "Bhat": self.Bhat_level,
            "Rhat": self.Rhat,
        }


def level_B(prs):
    """``B`` with ``S_{n_l}(P_1, P_2) = B * P_l`` for the last element ``P_l``."""
    if len(prs) == 2:
        return Fraction(prs.c(2)) ** (prs.d(1) - 1)
    return fundamental_theorem_factor(prs, len(prs), "n_i")


def scale_ledger(rprs):
    """All scale constants of ``rprs``, computed from its metadata.

    ``R~_k`` and ``B^_k`` follow their recurrences from ``k = 1``
    (``R~_1 = B_1``, ``B^_2 = |U^{(2)}|^{J_{2,j_2}}``).
    """
    _require_complete(rprs)
    cache = _cache(rprs, "ledger")
    if "ledger" in cache:
        return cache["ledger"]
    from .reduced import u_determinant

    t, js = rprs.t, rprs.j_indices
    B = {k: level_B(rprs.level(k)) for k in range(1, t)}
    u_level = {1: rprs.m + rprs.n - 2 * js[1]}
    for k in range(2, t + 1):
        u_level[k] = u_level[k - 1] * (2 * js[k - 1] - 2 * js[k] - 1)
    ledger = ScaleLedger(rprs.m, rprs.n, js, B, u_level, {0: Fraction(1)},
                         {0: Fraction(1)}, {0: 1})
    for k in range(1, t):
        bk, rk = ledger.b(k, js[k]), ledger.r(k, js[k])
        ledger.Rbar[k] = ledger.Rbar[k - 1] ** bk * rk * B[k]
        ledger.Rtilde[k] = ledger.Rtilde[k - 1] ** bk * B[k]
        ledger.Rprime[k] = ledger.Rprime[k - 1] ** bk * rk
    for k in range(2, t + 1):
        try:
            ledger.U_det[k] = u_determinant(rprs, k)
        except SingularU:
            ledger.U_det[k] = None
    if t > 1:
        ledger.Bhat_level[1] = Fraction(1)
        ledger.Rhat[1] = Fraction(1)
    for k in range(2, t):
        prev = ledger.Bhat_level.get(k - 1)
        ud = ledger.U_det.get(k)
        if prev is None or ud is None:
            ledger.Bhat_level[k] = None
            ledger.Rhat[k] = None
            continue
        ledger.Rhat[k] = (ledger.Rhat[k - 1] * prev) ** ledger.J(k, js[k])
        ledger.Bhat_level[k] = ud ** ledger.J(k, js[k])
    cache["ledger"] = ledger
    return ledger


def recursive_theorem_factor(rprs, k, i, mode="n_i", ledger=None):
    """Scalar ``s`` with ``Sbar_{k,j}(F, G) = s * P_i^{(k)}`` at ``j = n_i^{(k)}``
    (``mode="n_i"``) or ``j = n_{i-1}^{(k)} - 1``."""
    ledger = ledger or scale_ledger(rprs)
    prs = rprs.level(k)
    j = prs.n(i) if mode == "n_i" else prs.n(i - 1) - 1
    return ledger.lemma1_factor(k, j) * fundamental_theorem_factor(prs, i, mode)
