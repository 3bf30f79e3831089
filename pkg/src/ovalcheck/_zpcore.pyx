# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for small linear algebra over Z_p.

Must match ovalcheck._zpcore_py exactly: same pivoting, same canonical
solution (free variables zero), same mask order in the sign search.
"""

from libc.stdlib cimport free, malloc

IMPLEMENTATION = "compiled"


cdef long _inv_mod(long a, long p):
    cdef long result = 1
    cdef long base = a % p
    cdef long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


cdef int _eliminate(long* a, int n, int m, long p, long* marks):
    """Gauss-Jordan on the n x (m+1) augmented row-major matrix ``a``.

    ``marks[c]`` receives (pivot row + 1) for each pivot column c.
    Returns 1 when consistent, 0 otherwise.  ``a`` is destroyed.
    """
    cdef int r = 0, c, i, j, pivot
    cdef long inv, f, v
    cdef int w = m + 1
    for c in range(m):
        pivot = -1
        for i in range(r, n):
            if a[i * w + c] != 0:
                pivot = i
                break
        if pivot < 0:
            continue
        if pivot != r:
            for j in range(w):
                v = a[r * w + j]
                a[r * w + j] = a[pivot * w + j]
                a[pivot * w + j] = v
        inv = _inv_mod(a[r * w + c], p)
        for j in range(w):
            a[r * w + j] = (a[r * w + j] * inv) % p
        for i in range(n):
            if i != r and a[i * w + c] != 0:
                f = a[i * w + c]
                for j in range(w):
                    v = (a[i * w + j] - f * a[r * w + j]) % p
                    if v < 0:
                        v += p
                    a[i * w + j] = v
        marks[c] = r + 1
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if a[i * w + m] != 0:
            return 0
    return 1


def solve_mod_p(rows, rhs, p):
    """One solution of rows @ x = rhs over Z_p, or None."""
    cdef int n = len(rows)
    cdef int m = len(rows[0]) if n > 0 else 0
    cdef int i, j
    cdef long pp = p
    cdef long* a = <long*> malloc((n * (m + 1) + 1) * sizeof(long))
    cdef long* marks = <long*> malloc((m + 1) * sizeof(long))
    if a == NULL or marks == NULL:
        free(a)
        free(marks)
        raise MemoryError()
    try:
        for i in range(n):
            row = rows[i]
            for j in range(m):
                a[i * (m + 1) + j] = row[j] % pp
            a[i * (m + 1) + m] = rhs[i] % pp
        for j in range(m):
            marks[j] = 0
        if not _eliminate(a, n, m, pp, marks):
            return None
        result = [0] * m
        for j in range(m):
            if marks[j] > 0:
                result[j] = a[(marks[j] - 1) * (m + 1) + m]
        return result
    finally:
        free(a)
        free(marks)


def search_sign_assignment(rows, p):
    """First eps in {+1,-1}^n (eps[0]=+1, ascending mask order) such
    that rows @ x = eps is solvable over Z_p; returns (eps, x) or None."""
    cdef int n = len(rows)
    if n == 0:
        return None
    cdef int m = len(rows[0])
    cdef long pp = p
    cdef long minus = pp - 1
    cdef int w = m + 1
    cdef long long mask, total = 1
    total <<= (n - 1)
    cdef int i, j
    cdef long* base = <long*> malloc(n * w * sizeof(long))
    cdef long* work = <long*> malloc(n * w * sizeof(long))
    cdef long* marks = <long*> malloc((m + 1) * sizeof(long))
    if base == NULL or work == NULL or marks == NULL:
        free(base)
        free(work)
        free(marks)
        raise MemoryError()
    try:
        for i in range(n):
            row = rows[i]
            for j in range(m):
                base[i * w + j] = row[j] % pp
            base[i * w + m] = 1
        for mask in range(total):
            for i in range(n * w):
                work[i] = base[i]
            for i in range(1, n):
                if (mask >> (i - 1)) & 1:
                    work[i * w + m] = minus
            for j in range(m):
                marks[j] = 0
            if _eliminate(work, n, m, pp, marks):
                x = [0] * m
                for j in range(m):
                    if marks[j] > 0:
                        x[j] = work[(marks[j] - 1) * w + m]
                eps = [1] + [
                    -1 if (mask >> (i - 1)) & 1 else 1 for i in range(1, n)
                ]
                return eps, x
        return None
    finally:
        free(base)
        free(work)
        free(marks)
