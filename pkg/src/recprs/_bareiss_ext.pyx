# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled fraction-free determinant kernel (same algorithm as _bareiss_py)."""


def det_int(list rows, bint check=False):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t k, i, c
    cdef int sign = 1
    cdef list row_k, row_i
    cdef object prev, pivot, lead, num, v, q, r
    if n == 0:
        return 1
    prev = 1
    for k in range(n - 1):
        row_k = <list>rows[k]
        if row_k[k] == 0:
            for i in range(k + 1, n):
                if (<list>rows[i])[k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    row_k = <list>rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = row_k[k]
        for i in range(k + 1, n):
            row_i = <list>rows[i]
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
    return sign * (<list>rows[n - 1])[n - 1]
