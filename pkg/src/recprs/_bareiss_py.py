"""Pure-Python fraction-free determinant kernel.

Mirrors ``_bareiss_ext.pyx`` line for line; used when the compiled
extension is unavailable or ``RECPRS_PURE_PYTHON`` is set.
"""


def det_int(rows, check=False):
    """Determinant of an integer matrix by single-step Bareiss elimination.

    ``rows`` is a list of lists of ints and is overwritten.  With
    ``check=True`` every division by the previous pivot is verified to be
    exact and ``ArithmeticError`` is raised otherwise.
    """
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        row_k = rows[k]
        if row_k[k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    row_k = rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = row_k[k]
        for i in range(k + 1, n):
            row_i = rows[i]
            lead = row_i[k]
            if lead == 0:
                if pivot == prev:
                    continue
                for c in range(k + 1, n):
                    v = row_i[c]
                    if v:
                        if check:
                            q, r = divmod(v * pivot, prev)
                            if r:
                                raise ArithmeticError("inexact Bareiss division")
                            row_i[c] = q
                        else:
                            row_i[c] = v * pivot // prev
                continue
            for c in range(k + 1, n):
                num = row_i[c] * pivot - lead * row_k[c]
                if check:
                    q, r = divmod(num, prev)
                    if r:
                        raise ArithmeticError("inexact Bareiss division")
                    row_i[c] = q
                else:
                    row_i[c] = num // prev
        prev = pivot
    return sign * rows[n - 1][n - 1]
