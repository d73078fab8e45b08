# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for the grid oracle.

Matrices handed to ``int_rank`` have at most two nonzero entries per row, each
of absolute value 1, so every minor is bounded by 2**(rank/2).  The int64 path
is used only when that bound keeps all intermediate products below 2**62;
otherwise the caller's rows go through Python integers.
"""

from libc.stdlib cimport malloc, free

from ._pykernels import int_rank as _py_int_rank


def int_rank(rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    if min(nrows, ncols) > 60:
        return _py_int_rank(rows, ncols)
    cdef long long *m = <long long *> malloc(nrows * ncols * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t r, c, col, piv, rank = 0
    cdef long long p, f, prev = 1, tmp
    try:
        for r in range(nrows):
            row = rows[r]
            for c in range(ncols):
                m[r * ncols + c] = row[c]
        for col in range(ncols):
            if rank == nrows:
                break
            piv = -1
            for r in range(rank, nrows):
                if m[r * ncols + col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for c in range(ncols):
                    tmp = m[piv * ncols + c]
                    m[piv * ncols + c] = m[rank * ncols + c]
                    m[rank * ncols + c] = tmp
            p = m[rank * ncols + col]
            for r in range(rank + 1, nrows):
                f = m[r * ncols + col]
                if f == 0:
                    if p != prev:
                        for c in range(col + 1, ncols):
                            m[r * ncols + c] = (p * m[r * ncols + c]) // prev
                    continue
                for c in range(col + 1, ncols):
                    m[r * ncols + c] = (p * m[r * ncols + c] - f * m[rank * ncols + c]) // prev
                m[r * ncols + col] = 0
            prev = p
            rank += 1
        return rank
    finally:
        free(m)


def euler_form(w, v, arrows):
    cdef long long total = 0
    cdef Py_ssize_t i, n = len(w)
    for i in range(n):
        total += <long long> w[i] * <long long> v[i]
    for i in range(n - 1):
        if arrows[i] > 0:
            total -= <long long> w[i] * <long long> v[i + 1]
        else:
            total -= <long long> w[i + 1] * <long long> v[i]
    return total
