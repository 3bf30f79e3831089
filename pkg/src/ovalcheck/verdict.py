"""Prohibition verdicts: bounds vs. membrane counts, plus equality-case
refutation over Z_p.

A scheme is *prohibited* when an applicable inequality fails outright,
or when the non-elliptic bound is attained exactly with delta = 1 and
no complex orientation can exist: the boundary matrix restricted to
parabolic membranes must hit the curve's fundamental class for some
choice of circle signs, and when it cannot (for the binding prime),
the equality case is impossible.  The sign search is exhaustive and
exact, so this refutation direction is sound; the checker never tries
to *prove* a curve is of type I.

With the curve type unknown, both delta branches are evaluated and the
verdict is the conjunction: prohibited only if both branches are,
admissible only if both are, conditional otherwise.  When rho is not
declared it defaults to its upper bound (orientable components with
Euler characteristic divisible by p); a row that would fail at rho = 0
is then reported as conditional rather than prohibited, since the true
kernel dimension is not derivable from scheme data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

from .bounds import bound_base, rhs_hyperbolic
from .errors import InputError
from .schemes import MembraneSummary, RealScheme, boundary_matrix, membranes
from .surfaces import CurveClass, SurfaceModel, divisibility, genus
from .zplinalg import search_sign_assignment

FINAL_ADMISSIBLE = "admissible"
FINAL_PROHIBITED = "prohibited"
FINAL_CONDITIONAL = "conditionally-admissible"

EPS_SEARCH_MAX_CIRCLES = 12


def harnack_check(scheme: RealScheme, g: int) -> bool:
    """Component-count bound: a genus-g curve has at most g+1 circles."""
    return scheme.circle_count() <= g + 1


@dataclass(frozen=True)
class ExtremalityRecord:
    case: str  # "I" | "II"
    p: int
    status: str  # I: feasible|infeasible|undecided; II: consistent|inconsistent
    witness_eps: tuple[tuple[str, int], ...] | None = None
    witness_x: tuple[tuple[str, int], ...] | None = None

    @property
    def feasible(self) -> bool:
        return self.status in ("feasible", "consistent")


def extremality_type_I(
    scheme: RealScheme, p: int, max_circles: int = EPS_SEARCH_MAX_CIRCLES
) -> ExtremalityRecord:
    """Can some signed sum of circles be a boundary of parabolic membranes?

    Searches all sign assignments (exact elimination over Z_p for each)
    for a combination of parabolic-membrane columns whose boundary is
    the signed fundamental class of the curve.  Above ``max_circles``
    the answer is reported as undecided, never silently passed.
    """
    matrix = boundary_matrix(scheme, p)
    n = len(matrix.circles)
    if n > max_circles:
        return ExtremalityRecord("I", p, "undecided")
    cols = [j for j, para in enumerate(matrix.parabolic) if para]
    rows = [[matrix.entries[i][j] for j in cols] for i in range(n)]
    found = search_sign_assignment(rows, p)
    if found is None:
        return ExtremalityRecord("I", p, "infeasible")
    eps, x = found
    labels = [matrix.membranes[j] for j in cols]
    witness_x = tuple(
        (labels[k], int(v) % p) for k, v in enumerate(x) if v % p != 0
    )
    witness_eps = tuple(zip(matrix.circles, (int(e) for e in eps)))
    return ExtremalityRecord("I", p, "feasible", witness_eps, witness_x)


def extremality_type_II(summary: MembraneSummary, p: int, rho: int) -> ExtremalityRecord:
    """Necessary condition at equality with delta = 0 and declared rho > 0:
    some orientable component must have Euler characteristic zero."""
    if rho < 1:
        raise InputError("verdict.rho", "the type-II condition assumes rho > 0")
    consistent = any(y.orientable and y.chi == 0 for y in summary.components_Y)
    return ExtremalityRecord("II", p, "consistent" if consistent else "inconsistent")


@dataclass(frozen=True)
class IneqRow:
    name: str  # "i1" | "i2"
    h: int | None
    p: int | None
    rho: int | None
    delta: int | None
    lhs: int
    rhs: Fraction
    floor_rhs: int
    satisfied: bool
    equality: bool
    binding: bool = False
    informational: bool = False


def _make_row(name, h, p, rho, delta, lhs, rhs, informational=False) -> IneqRow:
    return IneqRow(
        name=name,
        h=h,
        p=p,
        rho=rho,
        delta=delta,
        lhs=lhs,
        rhs=rhs,
        floor_rhs=math.floor(rhs),
        satisfied=lhs <= rhs,
        equality=lhs == rhs,
        informational=informational,
    )


@dataclass(frozen=True)
class Verdict:
    harnack_ok: bool
    circle_count: int
    harnack_bound: int
    i1: IneqRow
    i2_rows: tuple[IneqRow, ...]
    extremality: tuple[ExtremalityRecord, ...]
    final: str
    notes: tuple[str, ...]
    pi1_abelian_assumed: bool
    harnack_only: bool


def _combine(statuses) -> str:
    statuses = list(statuses)
    if all(s == FINAL_PROHIBITED for s in statuses):
        return FINAL_PROHIBITED
    if all(s == FINAL_ADMISSIBLE for s in statuses):
        return FINAL_ADMISSIBLE
    return FINAL_CONDITIONAL


def check(
    surface: SurfaceModel,
    xi: CurveClass,
    scheme: RealScheme,
    rho: int | None = None,
    pi1_abelian: bool | None = None,
) -> Verdict:
    """Full prohibition check of one scheme for one curve class."""
    div = divisibility(xi, surface)
    g = genus(surface, xi)
    summary = membranes(scheme)
    notes: list[str] = []

    harnack_ok = harnack_check(scheme, g)
    if not harnack_ok:
        notes.append(
            f"component count {scheme.circle_count()} exceeds the Harnack "
            f"bound g+1 = {g + 1}"
        )

    lhs_i1 = summary.k_minus
    i1 = _make_row(
        "i1",
        None,
        None,
        None,
        None,
        lhs_i1,
        rhs_hyperbolic(surface, xi, div.m),
        informational=div.harnack_only,
    )

    if pi1_abelian is None:
        pi1_abelian = surface.pi1_abelian_default
    if not pi1_abelian:
        notes.append(
            "fundamental group of the complement not asserted abelian; "
            "the non-elliptic bound is skipped"
        )

    if div.harnack_only:
        notes.append(
            "class divisibility has trivial odd part (m = 1): the covering "
            "bounds do not apply; only the Harnack count is checked"
        )
        final = FINAL_ADMISSIBLE if harnack_ok else FINAL_PROHIBITED
        return Verdict(
            harnack_ok,
            scheme.circle_count(),
            g + 1,
            i1,
            (),
            (),
            final,
            tuple(notes),
            pi1_abelian,
            True,
        )

    # rho per candidate prime: declared override or its upper bound
    rho_used: dict[int, int] = {}
    defaulted = rho is None
    for p, _alpha, _h in div.candidates:
        bound = summary.rho_bound(p)
        if rho is None:
            rho_used[p] = bound
        else:
            if rho < 0:
                raise InputError("verdict.rho", "rho must be >= 0", "overrides.rho")
            if rho > bound:
                raise InputError(
                    "verdict.rho",
                    f"declared rho={rho} exceeds its upper bound {bound} at p={p}",
                    "overrides.rho",
                )
            rho_used[p] = rho

    lhs_i2 = summary.k_minus + summary.k_zero
    deltas = (0, 1) if scheme.delta() is None else (scheme.delta(),)

    i2_rows: list[IneqRow] = []
    extremality: list[ExtremalityRecord] = []
    branch_statuses: list[str] = []

    for delta in deltas:
        branch_rows: list[IneqRow] = []
        if pi1_abelian:
            for p, _alpha, h in div.candidates:
                rhs = bound_base(surface, xi, h) + rho_used[p] + delta
                branch_rows.append(
                    _make_row("i2", h, p, rho_used[p], delta, lhs_i2, rhs)
                )
                if defaulted and rho_used[p] > 0:
                    rhs0 = bound_base(surface, xi, h) + delta
                    branch_rows.append(
                        _make_row(
                            "i2", h, p, 0, delta, lhs_i2, rhs0, informational=True
                        )
                    )
        live = [r for r in branch_rows if not r.informational]
        if live:
            minimum = min(r.rhs for r in live)
            branch_rows = [
                r if r.informational else replace(r, binding=(r.rhs == minimum))
                for r in branch_rows
            ]
        i2_rows.extend(branch_rows)
        live = [r for r in branch_rows if not r.informational]

        status = FINAL_ADMISSIBLE
        if any(not r.satisfied for r in live):
            status = FINAL_PROHIBITED
        else:
            equalities = [r for r in live if r.equality]
            if delta == 1 and equalities:
                for p in sorted({r.p for r in equalities}):
                    record = extremality_type_I(scheme, p)
                    extremality.append(record)
                    if record.status == "infeasible":
                        status = FINAL_PROHIBITED
                        notes.append(
                            f"equality with delta=1 at p={p} admits no complex "
                            "orientation: no signed circle class bounds a "
                            "parabolic combination"
                        )
                    elif record.status == "undecided" and status != FINAL_PROHIBITED:
                        status = FINAL_CONDITIONAL
                        notes.append(
                            f"equality case at p={p} undecided: circle count "
                            f"above the sign-search cap ({EPS_SEARCH_MAX_CIRCLES})"
                        )
            elif delta == 0 and equalities:
                for row in equalities:
                    if row.rho and row.rho > 0:
                        record = extremality_type_II(summary, row.p, row.rho)
                        extremality.append(record)
                        if record.status == "inconsistent":
                            if status == FINAL_ADMISSIBLE:
                                status = FINAL_CONDITIONAL
                            notes.append(
                                f"equality with delta=0 and rho={row.rho} at "
                                f"p={row.p} needs an orientable component of "
                                "zero Euler characteristic, and there is none"
                            )
            if status == FINAL_ADMISSIBLE and defaulted:
                shadows = [
                    r
                    for r in branch_rows
                    if r.informational and not r.satisfied
                ]
                if shadows:
                    status = FINAL_CONDITIONAL
                    notes.append(
                        "admissibility relies on the defaulted rho upper "
                        "bound; the same row fails at rho=0"
                    )
        branch_statuses.append(status)

    if len(deltas) == 2 and len(set(branch_statuses)) > 1:
        notes.append(
            "curve type unknown: delta=0 branch is "
            f"{branch_statuses[0]}, delta=1 branch is {branch_statuses[1]}"
        )

    final = _combine(branch_statuses) if branch_statuses else FINAL_ADMISSIBLE
    if not i1.satisfied:
        final = FINAL_PROHIBITED
        notes.append("hyperbolic-membrane count exceeds its bound")
    if not harnack_ok:
        final = FINAL_PROHIBITED

    return Verdict(
        harnack_ok,
        scheme.circle_count(),
        g + 1,
        i1,
        tuple(i2_rows),
        tuple(extremality),
        final,
        tuple(notes),
        pi1_abelian,
        False,
    )
