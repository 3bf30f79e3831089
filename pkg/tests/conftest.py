"""Shared helpers: random scheme generation and independent oracles.

The oracles here deliberately do not reuse the library's algorithms:
ordered-forest generation with canonicalization counts forests, a
column-insertion rank computation decides solvability over Z_p, and
the sign search enumerates all 2^n assignments without the symmetry
shortcut used in production.
"""

from __future__ import annotations

from itertools import product

from ovalcheck.schemes import (
    RealScheme,
    orientable_component,
    projective_plane_component,
    sphere_component,
    torus_component,
)

EULER = {"sphere": 2, "torus": 0, "projective_plane": 1}


def random_forest(rng, n):
    """Random attachment forest with n nodes, as nested tuples."""
    kids = [[] for _ in range(n)]
    roots = []
    for i in range(n):
        p = rng.randrange(-1, i)
        (roots if p < 0 else kids[p]).append(i)

    def build(i):
        return tuple(build(c) for c in kids[i])

    return tuple(build(r) for r in roots)


def random_component(rng, max_ovals=8):
    kind = rng.choice(["sphere", "torus0", "torusl", "rp2", "rp2j", "genus"])
    n = rng.randrange(0, max_ovals + 1)
    forest = random_forest(rng, n)
    if kind == "sphere":
        return sphere_component(forest) if n else None
    if kind == "torus0":
        return torus_component(0, ovals=forest) if n else None
    if kind == "torusl":
        ell = rng.randrange(1, 4)
        splits = [[] for _ in range(ell)]
        for tree in forest:
            splits[rng.randrange(ell)].append(tree)
        return torus_component(ell, annuli=[tuple(s) for s in splits])
    if kind == "rp2":
        return projective_plane_component(forest) if n else None
    if kind == "rp2j":
        return projective_plane_component(forest, odd_branch=True)
    g = rng.randrange(0, 4)
    return orientable_component(g, forest) if n else None


def random_scheme(rng, max_ovals=8) -> RealScheme:
    while True:
        comps = []
        for _ in range(rng.randrange(1, 3)):
            comp = random_component(rng, max_ovals)
            if comp is not None:
                comps.append(comp)
        if comps:
            return RealScheme(tuple(comps), rng.choice(["I", "II", "unknown"]))


def ordered_forests(n):
    """All ordered rooted forests with n nodes (Catalan many)."""
    if n == 0:
        yield ()
        return
    for k in range(1, n + 1):
        for first_children in ordered_forests(k - 1):
            for rest in ordered_forests(n - k):
                yield (first_children,) + rest


def zp_rank(vectors, p):
    """Rank over Z_p by inserting vectors into an echelon basis."""
    basis = []
    for vec in vectors:
        v = [x % p for x in vec]
        for b in basis:
            lead = next(i for i, x in enumerate(b) if x)
            if v[lead]:
                f = (v[lead] * pow(b[lead], p - 2, p)) % p
                v = [(x - f * y) % p for x, y in zip(v, b)]
        if any(v):
            basis.append(v)
    return len(basis)


def oracle_solvable(matrix, target, p):
    """rows @ x = target solvable over Z_p, decided by rank comparison."""
    cols = [[row[j] for row in matrix] for j in range(len(matrix[0]) if matrix else 0)]
    return zp_rank(cols, p) == zp_rank(cols + [list(target)], p)


def oracle_sign_feasible(matrix, p):
    """Exhaustive sign enumeration (no symmetry shortcut)."""
    n = len(matrix)
    for eps in product((1, p - 1), repeat=n):
        if oracle_solvable(matrix, eps, p):
            return True
    return False
