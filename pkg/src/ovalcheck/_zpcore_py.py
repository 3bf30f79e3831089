"""Pure-Python kernels for small linear algebra over Z_p.

Reference implementation of the hot loops; the compiled module
``_zpcore`` mirrors this behaviour bit for bit.  Both must return the
same solutions: elimination picks the first nonzero pivot, free
variables are set to zero, and the sign search walks masks in
ascending order with the first circle pinned to +1.
"""

from __future__ import annotations

IMPLEMENTATION = "pure"


def solve_mod_p(rows, rhs, p):
    """One solution of rows @ x = rhs over Z_p, or None (Gauss-Jordan)."""
    n = len(rows)
    m = len(rows[0]) if n else 0
    a = [[v % p for v in rows[i]] + [rhs[i] % p] for i in range(n)]
    pivot_cols = []
    r = 0
    for c in range(m):
        pivot = None
        for i in range(r, n):
            if a[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [(v * inv) % p for v in a[r]]
        for i in range(n):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(vi - f * vr) % p for vi, vr in zip(a[i], a[r])]
        pivot_cols.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if a[i][m]:
            return None
    x = [0] * m
    for i, c in enumerate(pivot_cols):
        x[c] = a[i][m]
    return x


def search_sign_assignment(rows, p):
    """First sign vector eps in {+1,-1}^n with rows @ x = eps solvable.

    Runs an exact elimination for every candidate eps.  The global sign
    symmetry (negating eps negates x) pins eps[0] = +1.  Returns
    (eps, x) with eps entries +-1, or None when no assignment works.
    """
    n = len(rows)
    if n == 0:
        return None
    minus = p - 1
    for mask in range(1 << (n - 1)):
        eps_mod = [1] + [minus if (mask >> i) & 1 else 1 for i in range(n - 1)]
        x = solve_mod_p(rows, eps_mod, p)
        if x is not None:
            eps = [1] + [-1 if (mask >> i) & 1 else 1 for i in range(n - 1)]
            return eps, x
    return None
