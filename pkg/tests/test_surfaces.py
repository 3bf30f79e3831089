import random

import pytest

from ovalcheck.errors import InputError
from ovalcheck.surfaces import (
    CurveClass,
    IntersectionLattice,
    custom,
    del_pezzo,
    divisibility,
    genus,
    hirzebruch,
    pairing,
    plane,
    quadric,
    self_intersection,
)


def test_catalog_values():
    p = plane()
    assert (p.b2, p.sigma) == (1, 1)
    assert p.lattice.gram == ((1,),)
    assert p.canonical == (-3,)

    q = quadric()
    assert (q.b2, q.sigma) == (2, 0)
    assert q.lattice.gram == ((0, 1), (1, 0))
    assert q.canonical == (-2, -2)

    h = hirzebruch(3)
    assert (h.b2, h.sigma) == (2, 0)
    assert h.lattice.gram == ((3, 1), (1, 0))
    assert h.canonical == (-2, 1)

    for d in range(1, 10):
        dp = del_pezzo(d)
        assert (dp.b2, dp.sigma) == (10 - d, d - 8)


def test_catalog_lattices_unimodular():
    for surface in (plane(), quadric(), hirzebruch(0), hirzebruch(5)):
        assert surface.lattice.is_unimodular()


def test_self_intersection_examples():
    assert self_intersection(plane(), CurveClass((5,))) == 25
    # hyperbolic pairing: direct matrix product gives 2ab
    assert self_intersection(quadric(), CurveClass((3, 3))) == 18
    assert self_intersection(del_pezzo(2), CurveClass((3,))) == 18


def test_del_pezzo_pairing_against_blowup_lattice():
    # degree 2 = plane blown up in 7 points: basis (l, e1..e7),
    # anticanonical class 3l - e1 - ... - e7
    gram = [[0] * 8 for _ in range(8)]
    gram[0][0] = 1
    for i in range(1, 8):
        gram[i][i] = -1
    lattice = IntersectionLattice(8, tuple(tuple(r) for r in gram),
                                  tuple("l e1 e2 e3 e4 e5 e6 e7".split()))
    c1 = (3, -1, -1, -1, -1, -1, -1, -1)
    n = 3
    xi = tuple(n * v for v in c1)
    assert lattice.pair(xi, xi) == self_intersection(del_pezzo(2), CurveClass((n,)))
    k = tuple(-v for v in c1)
    assert lattice.pair(xi, k) == -n * 2


def test_genus_examples():
    assert genus(plane(), CurveClass((1,))) == 0
    assert genus(quadric(), CurveClass((3, 3))) == 4
    assert genus(del_pezzo(2), CurveClass((3,))) == 7


def test_genus_closed_forms_full_sweeps():
    for m in range(1, 50):
        assert genus(plane(), CurveClass((m,))) == (m - 1) * (m - 2) // 2
    q = quadric()
    for a in range(1, 21):
        for b in range(1, 21):
            assert genus(q, CurveClass((a, b))) == (a - 1) * (b - 1)
    for e in range(6):
        s = hirzebruch(e)
        for a in range(1, 13):
            for b in range(1, 13):
                assert genus(s, CurveClass((a, b))) == (a - 1) * (a * e + 2 * b) // 2 - a + 1
    for d in range(1, 10):
        s = del_pezzo(d)
        for n in range(1, 11):
            assert genus(s, CurveClass((n,))) == n * d * (n - 1) // 2 + 1


def test_genus_rejects_bad_classes():
    with pytest.raises(InputError):
        genus(plane(), CurveClass((-2,)))
    # custom surface where adjunction is not an integer
    s = custom([[1]], [0], sigma=1)
    with pytest.raises(InputError):
        genus(s, CurveClass((1,)))


def test_divisibility_examples():
    d = divisibility(CurveClass((45,)))
    assert (d.n, d.m) == (45, 45)
    assert set(d.candidates) == {(3, 2, 9), (5, 1, 5)}
    assert not d.harnack_only

    d = divisibility(CurveClass((6, 9)))
    assert (d.n, d.m, d.candidates) == (3, 3, ((3, 1, 3),))

    d = divisibility(CurveClass((4, 6)))
    assert (d.n, d.m, d.candidates) == (2, 1, ())
    assert d.harnack_only


def test_divisibility_del_pezzo_entry_points():
    # n*c1 on the degree-9 surface is the degree-3n plane curve
    assert divisibility(CurveClass((1,)), del_pezzo(9)).m == 3
    assert divisibility(CurveClass((2,)), del_pezzo(9)).n == 6
    # degree 8: c1 is twice a primitive class
    assert divisibility(CurveClass((3,)), del_pezzo(8)).n == 6
    assert divisibility(CurveClass((3,)), del_pezzo(8)).m == 3
    # degrees <= 7: c1 primitive
    assert divisibility(CurveClass((3,)), del_pezzo(2)).n == 3


def test_pairing_bilinear_symmetric():
    rng = random.Random(7)
    q = quadric()
    for _ in range(50):
        x = CurveClass((rng.randrange(1, 9), rng.randrange(1, 9)))
        y = CurveClass((rng.randrange(1, 9), rng.randrange(1, 9)))
        assert pairing(q, x, y) == pairing(q, y, x)
        z = CurveClass(tuple(a + b for a, b in zip(x.coords, y.coords)))
        assert self_intersection(q, z) == (
            self_intersection(q, x) + 2 * pairing(q, x, y) + self_intersection(q, y)
        )


def _random_unimodular(rng, rank):
    mat = [[int(i == j) for j in range(rank)] for i in range(rank)]
    for _ in range(12):
        i, j = rng.randrange(rank), rng.randrange(rank)
        if i == j:
            continue
        c = rng.choice([-2, -1, 1, 2])
        for k in range(rank):
            mat[i][k] += c * mat[j][k]
    if rng.random() < 0.5:
        mat[0] = [-v for v in mat[0]]
    return mat


def test_divisibility_invariant_under_unimodular_change():
    from math import gcd

    rng = random.Random(2024)
    for _ in range(100):
        rank = rng.randrange(1, 5)
        coords = [rng.randrange(-9, 10) for _ in range(rank)]
        if all(c == 0 for c in coords):
            coords[0] = rng.randrange(1, 10)
        u = _random_unimodular(rng, rank)
        image = [sum(u[i][j] * coords[j] for j in range(rank)) for i in range(rank)]
        g1 = 0
        for c in coords:
            g1 = gcd(g1, abs(c))
        g2 = 0
        for c in image:
            g2 = gcd(g2, abs(c))
        assert g1 == g2


def test_zero_class_rejected():
    with pytest.raises(InputError):
        CurveClass((0, 0))


def test_dimension_mismatch_rejected():
    with pytest.raises(InputError):
        self_intersection(quadric(), CurveClass((1, 2, 3)))
