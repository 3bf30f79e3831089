import random

import pytest

from conftest import oracle_sign_feasible, random_scheme
from ovalcheck.errors import InputError
from ovalcheck.schemes import (
    RealScheme,
    boundary_matrix,
    membranes,
    projective_plane_component,
    sphere_component,
    torus_component,
)
from ovalcheck.surfaces import CurveClass, del_pezzo, plane, quadric
from ovalcheck.verdict import (
    check,
    extremality_type_I,
    extremality_type_II,
    harnack_check,
)

NEST2 = (((),),)
NEST3 = ((((),),),)


def flat(n):
    return tuple(() for _ in range(n))


def rp2_scheme(forest, curve_type="unknown"):
    return RealScheme(
        (projective_plane_component(forest, odd_branch=True),), curve_type
    )


def test_harnack_examples():
    assert harnack_check(rp2_scheme(flat(6)), 6)  # J + 6 ovals = 7 <= 7
    assert not harnack_check(rp2_scheme(flat(7)), 6)  # 8 circles
    nest4_plus3 = ((((((), (), ()),),),),)
    scheme = RealScheme((sphere_component(nest4_plus3),), "II")
    assert harnack_check(scheme, 7)  # 7 ovals, one less than maximal


def test_extremality_quintic_nest_infeasible_with_oracle():
    scheme = rp2_scheme(NEST3)
    record = extremality_type_I(scheme, 5)
    assert record.status == "infeasible"
    bm = boundary_matrix(scheme, 5)
    cols = [j for j, para in enumerate(bm.parabolic) if para]
    rows = [[bm.entries[i][j] for j in cols] for i in range(len(bm.circles))]
    assert not oracle_sign_feasible(rows, 5)


def test_extremality_three_essential_circles_feasible():
    scheme = RealScheme((torus_component(3, annuli=[(), (), ()]),), "I")
    record = extremality_type_I(scheme, 3)
    assert record.status == "feasible"
    # the witness really solves the system
    bm = boundary_matrix(scheme, 3)
    eps = dict(record.witness_eps)
    x = dict(record.witness_x)
    for i, circle in enumerate(bm.circles):
        lhs = 0
        for j, label in enumerate(bm.membranes):
            lhs += bm.entries[i][j] * x.get(label, 0)
        assert lhs % 3 == eps[circle] % 3


def test_extremality_sphere_nest_alone_feasible():
    scheme = RealScheme((sphere_component(NEST2),), "unknown")
    record = extremality_type_I(scheme, 3)
    assert record.status == "feasible"


def test_extremality_undecided_above_circle_cap():
    scheme = rp2_scheme(flat(12))  # 13 circles
    record = extremality_type_I(scheme, 3)
    assert record.status == "undecided"


def test_extremality_type_II_examples():
    torus = membranes(RealScheme((torus_component(1, annuli=[((),)]),), "II"))
    assert extremality_type_II(torus, 3, 1).status == "consistent"
    sphere = membranes(RealScheme((sphere_component(((),)),), "II"))
    assert extremality_type_II(sphere, 3, 1).status == "inconsistent"
    both = membranes(
        RealScheme(
            (sphere_component(((),)), torus_component(1, annuli=[((),)])), "II"
        )
    )
    assert extremality_type_II(both, 3, 1).status == "consistent"
    with pytest.raises(InputError):
        extremality_type_II(torus, 3, 0)


def test_check_quintic_nest_two_admissible_at_equality():
    v = check(plane(), CurveClass((5,)), rp2_scheme(NEST2, "II"))
    assert v.final == "admissible"
    row = next(r for r in v.i2_rows if not r.informational)
    assert (row.h, row.delta, row.lhs) == (5, 0, 1)
    assert row.equality


def test_check_quintic_nest_three_prohibited_both_branches():
    v = check(plane(), CurveClass((5,)), rp2_scheme(NEST3, "unknown"))
    assert v.final == "prohibited"
    d0 = next(r for r in v.i2_rows if r.delta == 0 and not r.informational)
    assert (d0.lhs, d0.satisfied) == (2, False)
    d1 = next(r for r in v.i2_rows if r.delta == 1 and not r.informational)
    assert d1.equality
    assert any(e.case == "I" and e.status == "infeasible" for e in v.extremality)
    # soundness: prohibited under unknown type means prohibited under both
    assert check(plane(), CurveClass((5,)), rp2_scheme(NEST3, "I")).final == "prohibited"
    assert check(plane(), CurveClass((5,)), rp2_scheme(NEST3, "II")).final == "prohibited"


def test_check_del_pezzo_sharp_scheme():
    nest4_plus3 = ((((((), (), ()),),),),)
    scheme = RealScheme((sphere_component(nest4_plus3),), "II")
    v = check(del_pezzo(2), CurveClass((3,)), scheme, rho=0)
    assert v.final == "admissible"
    row = next(r for r in v.i2_rows if not r.informational)
    assert (row.h, row.lhs) == (3, 4)
    assert row.equality
    assert v.harnack_ok


def test_check_harnack_violation_prohibits():
    v = check(plane(), CurveClass((3,)), rp2_scheme(flat(2)))
    # cubic has genus 1: J + 2 ovals = 3 circles > 2
    assert not v.harnack_ok
    assert v.final == "prohibited"


def test_check_harnack_only_when_odd_part_trivial():
    scheme = RealScheme((torus_component(0, ovals=((),)),), "unknown")
    v = check(quadric(), CurveClass((4, 6)), scheme)
    assert v.harnack_only
    assert v.i2_rows == ()
    assert v.final == "admissible"
    assert v.i1.informational


def test_check_rho_override_validated_against_bound():
    scheme = rp2_scheme(NEST2, "II")
    with pytest.raises(InputError):
        check(plane(), CurveClass((5,)), scheme, rho=1)  # RP2 carries no rho


def test_check_pi1_flag_gates_second_bound():
    v = check(plane(), CurveClass((5,)), rp2_scheme(NEST3), pi1_abelian=False)
    assert v.i2_rows == ()
    assert v.final == "admissible"
    assert any("abelian" in note for note in v.notes)


def test_check_conditional_when_branches_disagree():
    # two nonempty ovals side by side in the quintic: k-+k0 = 2 fails at
    # delta=0 but stays feasible at delta=1 (two parabolic columns reach
    # independent circles), so the unknown-type verdict is conditional
    scheme = rp2_scheme((((),), ((),)), "unknown")
    v = check(plane(), CurveClass((5,)), scheme)
    assert v.final == "conditionally-admissible"
    assert check(plane(), CurveClass((5,)), scheme.with_type("II")).final == "prohibited"
    assert check(plane(), CurveClass((5,)), scheme.with_type("I")).final == "admissible"


def test_verdict_invariant_under_relabeling():
    def mirror(forest):
        return tuple(mirror(t) for t in reversed(forest))

    rng = random.Random(12)
    surface = quadric()
    xi = CurveClass((3, 3))
    for _ in range(40):
        scheme = random_scheme(rng, max_ovals=5)
        mirrored = RealScheme(
            tuple(
                type(c)(
                    c.topology,
                    mirror(c.ovals),
                    tuple(mirror(f) for f in reversed(c.annuli)),
                    c.essential_circles,
                    c.odd_branch,
                    c.genus,
                    c.circles,
                    c.regions,
                    c.orientable,
                    c.chi,
                )
                for c in reversed(scheme.components)
            ),
            scheme.curve_type,
        )
        assert check(surface, xi, scheme) == check(surface, xi, mirrored)


def test_census_prohibited_requires_both_branches():
    surface = plane()
    xi = CurveClass((5,))
    rng = random.Random(3)
    for _ in range(60):
        scheme = random_scheme(rng, max_ovals=6)
        if any(c.topology != "projective_plane" for c in scheme.components):
            continue
        v = check(surface, xi, RealScheme(scheme.components, "unknown"))
        if v.final == "prohibited":
            assert check(surface, xi, RealScheme(scheme.components, "I")).final == "prohibited"
            assert check(surface, xi, RealScheme(scheme.components, "II")).final == "prohibited"
