"""Independent reference computations used as test oracles.

Nothing here calls into the code under test except plain data types
(``Poly`` only as a container for coefficient tuples).
"""

from fractions import Fraction
from itertools import pairwise, permutations

import sympy


def leibniz_det(rows):
    """Determinant by the permutation expansion; fine for order <= 6."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = Fraction(-1 if inv % 2 else 1)
        for i, p in enumerate(perm):
            term *= rows[i][p]
            if not term:
                break
        total += term
    return total


def sympy_det(rows):
    if not rows:
        return Fraction(1)
    m = sympy.Matrix([[sympy.Rational(e.numerator, e.denominator) for e in r] for r in rows])
    d = m.det(method="berkowitz")
    return Fraction(int(d.p), int(d.q))


X = sympy.Symbol("x")


def to_sympy(p):
    """Poly (ascending Fractions) -> sympy Poly over QQ."""
    coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)] or [0]
    return sympy.Poly(coeffs, X, domain="QQ")


def from_sympy(sp):
    return [Fraction(int(c.p), int(c.q)) for c in sp.all_coeffs()]  # highest first


def sylvester_by_definition(fdesc, gdesc, j):
    """N^(j) written out directly: n-j shifted columns of f, m-j of g."""
    m, n = len(fdesc) - 1, len(gdesc) - 1
    rows = m + n - j
    cols = (n - j) + (m - j)
    mat = [[Fraction(0)] * cols for _ in range(rows)]
    for c in range(n - j):
        for r in range(m + 1):
            mat[c + r][c] = Fraction(fdesc[r])
    for c in range(m - j):
        for r in range(n + 1):
            mat[c + r][n - j + c] = Fraction(gdesc[r])
    return mat


def subres_by_definition(fdesc, gdesc, j, det=sympy_det):
    """Coefficients (highest first) of S_j from the row-selection rule."""
    mat = sylvester_by_definition(fdesc, gdesc, j)
    rows, cols = len(mat), len(mat[0])
    out = []
    for tau in range(j, -1, -1):
        sel = mat[: cols - 1] + [mat[rows - 1 - tau]]
        out.append(det(sel))
    return out


def theorem1(n, c, alpha, beta, i, target_kind):
    """Scalar s with S_j = s * P_i from the product formulas, 1-based lists.

    ``n``, ``c``: degrees and leading coefficients of P_1..P_l (index 0 unused);
    ``alpha``, ``beta``: step factors (indices 3..l).
    """
    d = {q: n[q] - n[q + 1] for q in range(1, len(n) - 1)}
    if target_kind == "n_i":
        t = n[i]
        s = Fraction(c[i]) ** (d[i - 1] - 1)
    else:
        t = n[i - 1] - 1
        s = Fraction(c[i - 1]) ** (1 - d[i - 1])
    for l in range(3, i + 1):
        s *= (Fraction(beta[l]) / alpha[l]) ** (n[l - 1] - t)
        s *= Fraction(c[l - 1]) ** (d[l - 2] + d[l - 1])
        s *= (-1) ** ((n[l - 2] - t) * (n[l - 1] - t))
    return s


def sign_changes(values):
    """Sign variations by explicit pairwise product test."""
    signs = [1 if v > 0 else -1 for v in values]
    return sum(1 for a, b in pairwise(signs) if a * b < 0)


def recursive_matrix_by_blocks(level1_matrix, js, k, j):
    """Recursive subresultant matrix rebuilt from the block description.

    ``level1_matrix``: N^(j_1)(F, G) as a list of rows for k >= 2 (or the
    N^(j)(F, G) itself when k == 1); ``js``: (j_0, j_1, ...).
    Each level stacks a block diagonal of copies of the previous matrix
    minus its bottom j'+1 rows over a staircase of the bottom rows, the
    second run of steps using the bottom rows weighted j', j'-1, ..., 1.
    """
    if k == 1:
        return [r[:] for r in level1_matrix]
    prev = level1_matrix if k == 2 else recursive_matrix_by_blocks(level1_matrix, js, k - 1, js[k - 1])
    jp = js[k - 1]
    w = len(prev[0])
    top, bottom = prev[: len(prev) - jp - 1], prev[len(prev) - jp - 1:]
    weighted = [[(jp - i) * e for e in bottom[i]] for i in range(jp)]
    nblocks = 2 * jp - 2 * j - 1
    height = nblocks * len(top) + 2 * jp - j - 1
    out = [[Fraction(0)] * (nblocks * w) for _ in range(height)]

    def place(block, r0, c0):
        for dr, row in enumerate(block):
            for dc, e in enumerate(row):
                out[r0 + dr][c0 + dc] = e

    for b in range(nblocks):
        place(top, b * len(top), b * w)
    base = nblocks * len(top)
    first_run = jp - j - 1
    for s in range(first_run):
        place(bottom, base + s, s * w)
    for s in range(jp - j):
        place(weighted, base + s, (first_run + s) * w)
    return out


def ledger_by_recurrence(levels, m, n, js, theorem_factor_last):
    """R-bar, R-tilde, R-prime and u per level from the recurrences.

    ``theorem_factor_last(k)``: B_k, the scalar with
    S_{j_k}(P_1^(k), P_2^(k)) = B_k * P_{l_k}^(k).
    """
    t = len(js) - 1
    u = {1: m + n - 2 * js[1]}
    for k in range(2, t + 1):
        u[k] = u[k - 1] * (2 * js[k - 1] - 2 * js[k] - 1)

    def b(k, jj):
        return 1 if k == 1 else 2 * js[k - 1] - 2 * jj - 1

    def r(k, jj):
        if k == 1:
            return 1
        bb = b(k, jj)
        return (-1) ** ((u[k - 1] - 1) * sum(range(bb)))

    rbar, rtil, rprime = {0: Fraction(1)}, {0: Fraction(1)}, {0: 1}
    for k in range(1, t):
        bk, rk, Bk = b(k, js[k]), r(k, js[k]), theorem_factor_last(k)
        rbar[k] = rbar[k - 1] ** bk * rk * Bk
        rtil[k] = rtil[k - 1] ** bk * Bk
        rprime[k] = rprime[k - 1] ** bk * rk
    return {"u": u, "b": b, "r": r, "Rbar": rbar, "Rtilde": rtil, "Rprime": rprime}
