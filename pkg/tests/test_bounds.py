from fractions import Fraction

import pytest

from ovalcheck.bounds import (
    best_bounds,
    bound_base,
    closed_form_delpezzo,
    closed_form_hirzebruch,
    closed_form_plane,
    closed_form_quadric,
    covering_invariants,
    rhs_hyperbolic,
    rhs_non_elliptic,
)
from ovalcheck.errors import InputError
from ovalcheck.surfaces import CurveClass, del_pezzo, divisibility, hirzebruch, plane, quadric


def test_covering_invariants_examples():
    inv = covering_invariants(plane(), CurveClass((5,)), 5)
    assert (inv.dim_m, inv.sign_q) == (13, Fraction(-11))
    inv = covering_invariants(quadric(), CurveClass((3, 3)), 3)
    assert (inv.dim_m, inv.sign_q) == (10, Fraction(-8))
    # one sheet: the form is the surface's own
    inv = covering_invariants(del_pezzo(2), CurveClass((3,)), 1)
    assert (inv.dim_m, inv.sign_q) == (8 + 14, Fraction(-6))


def test_sign_bounded_by_dimension_on_catalog_sweeps():
    cases = []
    for m in range(1, 30, 2):
        cases.append((plane(), CurveClass((m,)), m))
    for a in range(1, 10):
        cases.append((quadric(), CurveClass((a, a)), a | 1))
    for surface, xi, q in cases:
        inv = covering_invariants(surface, xi, max(q, 3))
        assert abs(inv.sign_q) <= inv.dim_m


def test_rhs_hyperbolic_examples():
    assert rhs_hyperbolic(plane(), CurveClass((5,)), 5) == 1
    assert rhs_hyperbolic(plane(), CurveClass((3,)), 3) == 0
    assert rhs_hyperbolic(quadric(), CurveClass((3, 3)), 3) == 1


def test_rhs_hyperbolic_rejects_even_m():
    with pytest.raises(InputError):
        rhs_hyperbolic(plane(), CurveClass((5,)), 4)


def test_rhs_non_elliptic_examples():
    assert rhs_non_elliptic(plane(), CurveClass((5,)), 5, 0, 0) == 1
    assert rhs_non_elliptic(del_pezzo(2), CurveClass((3,)), 3, 0, 0) == 4
    assert rhs_non_elliptic(del_pezzo(2), CurveClass((3,)), 3, 1, 1) == 6


def test_rhs_non_elliptic_rejects_non_candidate():
    with pytest.raises(InputError):
        rhs_non_elliptic(plane(), CurveClass((45,)), 3, 0, 0)  # 3 divides 45 but 9 does
    with pytest.raises(InputError):
        rhs_non_elliptic(plane(), CurveClass((5,)), 7, 0, 0)


def test_best_bounds_binding_candidate():
    report = best_bounds(plane(), CurveClass((45,)), delta=0)
    hs = sorted({row.h for row in report.per_h})
    assert hs == [5, 9]
    binding = {row.h for row in report.per_h if row.binding}
    assert binding == {9}  # the larger prime power gives the smaller bound
    assert report.assumption_flags.pi1_abelian_required


def test_best_bounds_degree_three():
    report = best_bounds(plane(), CurveClass((3,)), delta=0)
    assert report.rhs_i1 == 0
    assert len(report.per_h) == 1 and report.per_h[0].h == 3


def test_best_bounds_even_divisibility_is_harnack_only():
    report = best_bounds(quadric(), CurveClass((4, 6)))
    assert report.assumption_flags.harnack_only
    assert report.per_h == ()
    assert not report.assumption_flags.pi1_abelian_required


def test_best_bounds_unknown_delta_doubles_rows():
    report = best_bounds(plane(), CurveClass((15,)))
    assert report.delta_used == "both"
    assert {(r.h, r.delta) for r in report.per_h} == {
        (3, 0), (3, 1), (5, 0), (5, 1)
    }


def test_monotone_in_h_and_dominates_i1():
    surface = plane()
    xi = CurveClass((45,))
    d = divisibility(xi)
    values = [rhs_non_elliptic(surface, xi, h, 0, 0) for h in d.candidate_hs()]
    ordered = sorted(zip(d.candidate_hs(), values))
    for (h1, v1), (h2, v2) in zip(ordered, ordered[1:]):
        assert v2 < v1  # strictly decreasing in h for positive self-intersection
    i1 = rhs_hyperbolic(surface, xi, d.m)
    for h, v in zip(d.candidate_hs(), values):
        assert v - i1 == Fraction(
            (d.m**2 - h**2) * 45 * 45, 4 * d.m**2 * h**2
        )
        assert v >= i1


def test_closed_form_values_from_worked_examples():
    assert closed_form_plane(5, 5, 0) == (1, 1)
    assert closed_form_plane(3, 3, 0) == (0, 0)
    assert closed_form_quadric(3, 3, 3, 3, 1) == (1, 3)
    i1, i2 = closed_form_delpezzo(2, 3, 3, 3, 0, 0)
    assert i2 == 4
    _, i2 = closed_form_delpezzo(2, 3, 3, 3, 1, 1)
    assert i2 == 6


def test_closed_forms_validate_divisibility():
    with pytest.raises(InputError):
        closed_form_plane(6, 3, 0)  # even degree
    with pytest.raises(InputError):
        closed_form_quadric(3, 4, 3, 3, 0)  # m does not divide b
    with pytest.raises(InputError):
        closed_form_plane(45, 3, 0)  # 3 is not the exact power dividing 45
    with pytest.raises(InputError):
        closed_form_delpezzo(2, 3, 3, 3, 0, 2)  # delta out of range


def test_hirzebruch_closed_form_matches_general():
    for e in range(4):
        surface = hirzebruch(e)
        for a in (3, 6, 9):
            for b in (3, 6, 9):
                xi = CurveClass((a, b))
                for rho in (0, 2):
                    for delta in (0, 1):
                        ci1, ci2 = closed_form_hirzebruch(e, a, b, 3, 3, rho, delta)
                        assert ci1 == bound_base(surface, xi, 3)
                        assert ci2 == bound_base(surface, xi, 3) + rho + delta
