"""Covering-form invariants and the right-hand sides of the two bounds.

For a class of divisibility with maximal odd divisor m, the q-sheeted
cyclic cover branched over the curve has a distinguished eigenspace of
its intersection form with

    dim M  = b2 + 2g
    sign Q = sigma - xi^2 (q^2 - 1) / (2 q^2)

and (dim M + sign Q)/2 is the common core of both bounds:

    hyperbolic membranes  k-        <=  core(q=m)
    non-elliptic membranes k- + k0  <=  core(q=h) + rho + delta

where h = p^alpha runs over the exact odd prime-power divisors of m,
rho bounds the kernel of inclusion on second homology of the real
part, and delta is 1 for dividing (type I) curves and 0 otherwise.
The second bound additionally assumes the complement of the curve in
the surface has abelian fundamental group.

All arithmetic is exact rational; floors are reported alongside.
Every family in the catalog also has a documented closed form of both
bounds, kept here verbatim as an independent cross-check of the
general formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .surfaces import CurveClass, SurfaceModel, divisibility, genus, self_intersection

DELTA_VALUES = (0, 1)


@dataclass(frozen=True)
class CoveringInvariants:
    q: int
    dim_m: int
    sign_q: Fraction


def covering_invariants(surface: SurfaceModel, xi: CurveClass, q: int) -> CoveringInvariants:
    """Eigenspace dimension and signature for the q-sheeted cyclic cover."""
    if q < 1:
        raise InputError("bounds.sheets", "sheet count q must be >= 1")
    g = genus(surface, xi)
    xi2 = self_intersection(surface, xi)
    dim_m = surface.b2 + 2 * g
    sign_q = Fraction(surface.sigma) - Fraction(xi2 * (q * q - 1), 2 * q * q)
    return CoveringInvariants(q, dim_m, sign_q)


def bound_base(surface: SurfaceModel, xi: CurveClass, q: int) -> Fraction:
    """(dim M + sign Q)/2 at sheet count q; the core of both bounds."""
    inv = covering_invariants(surface, xi, q)
    return Fraction(inv.dim_m + inv.sign_q, 2)


def rhs_hyperbolic(surface: SurfaceModel, xi: CurveClass, m: int) -> Fraction:
    """Bound on the number of hyperbolic membranes, at odd divisor m."""
    if m < 1 or m % 2 == 0:
        raise InputError("bounds.odd", "m must be an odd positive integer")
    return bound_base(surface, xi, m)


def rhs_non_elliptic(
    surface: SurfaceModel,
    xi: CurveClass,
    h: int,
    rho: int,
    delta: int,
) -> Fraction:
    """Bound on the number of non-elliptic membranes, at candidate h."""
    div = divisibility(xi, surface)
    if h not in div.candidate_hs():
        raise InputError(
            "bounds.candidate",
            f"h={h} is not an exact odd prime-power divisor of m={div.m}",
        )
    if rho < 0:
        raise InputError("bounds.rho", "rho must be >= 0")
    if delta not in DELTA_VALUES:
        raise InputError("bounds.delta", "delta must be 0 or 1")
    return bound_base(surface, xi, h) + rho + delta


@dataclass(frozen=True)
class PerCandidateBound:
    p: int
    alpha: int
    h: int
    rho: int
    delta: int
    rhs_i2: Fraction
    floor_i2: int
    binding: bool


@dataclass(frozen=True)
class AssumptionFlags:
    pi1_abelian_required: bool
    harnack_only: bool


@dataclass(frozen=True)
class BoundReport:
    m: int
    rhs_i1: Fraction
    floor_i1: int
    per_h: tuple[PerCandidateBound, ...]
    rho_used: int
    delta_used: object  # 0, 1, or "both"
    assumption_flags: AssumptionFlags


def best_bounds(
    surface: SurfaceModel,
    xi: CurveClass,
    rho: int = 0,
    delta: object = "unknown",
) -> BoundReport:
    """Evaluate both bounds over all candidates; mark the binding rows.

    With ``delta="unknown"`` each candidate h contributes a row for
    delta=0 and one for delta=1.  The minimum right-hand side within
    each delta branch is the binding constraint.
    """
    if rho < 0:
        raise InputError("bounds.rho", "rho must be >= 0")
    div = divisibility(xi, surface)
    rhs_i1 = rhs_hyperbolic(surface, xi, div.m)
    deltas: tuple[int, ...]
    if delta == "unknown":
        deltas = DELTA_VALUES
        delta_used: object = "both"
    elif delta in DELTA_VALUES:
        deltas = (delta,)
        delta_used = delta
    else:
        raise InputError("bounds.delta", "delta must be 0, 1, or 'unknown'")

    rows = []
    for d in deltas:
        values = [
            (p, alpha, h, bound_base(surface, xi, h) + rho + d)
            for (p, alpha, h) in div.candidates
        ]
        minimum = min((v for *_, v in values), default=None)
        for p, alpha, h, v in values:
            rows.append(
                PerCandidateBound(
                    p, alpha, h, rho, d, v, math.floor(v), binding=(v == minimum)
                )
            )
    return BoundReport(
        m=div.m,
        rhs_i1=rhs_i1,
        floor_i1=math.floor(rhs_i1),
        per_h=tuple(rows),
        rho_used=rho,
        delta_used=delta_used,
        assumption_flags=AssumptionFlags(
            pi1_abelian_required=bool(rows), harnack_only=div.harnack_only
        ),
    )


def _check_candidate(m: int, h: int) -> None:
    if m < 1 or m % 2 == 0:
        raise InputError("bounds.odd", "m must be an odd positive integer")
    factors = {}
    rest = h
    p = 3
    while p * p <= rest:
        while rest % p == 0:
            factors[p] = factors.get(p, 0) + 1
            rest //= p
        p += 2
    if rest > 1:
        factors[rest] = factors.get(rest, 0) + 1
    if h < 3 or h % 2 == 0 or len(factors) != 1:
        raise InputError("bounds.candidate", f"h={h} is not an odd prime power")
    if m % h != 0 or (m // h) % next(iter(factors)) == 0:
        raise InputError(
            "bounds.candidate", f"h={h} is not an exact prime-power divisor of m={m}"
        )


def _check_delta(delta: int) -> None:
    if delta not in DELTA_VALUES:
        raise InputError("bounds.delta", "delta must be 0 or 1")


def closed_form_plane(m: int, h: int, delta: int) -> tuple[Fraction, Fraction]:
    """Documented bounds for a plane curve of odd degree m."""
    _check_candidate(m, h)
    _check_delta(delta)
    i1 = Fraction((m - 3) ** 2, 4)
    i2 = i1 + Fraction(m * m - h * h, 4 * h * h) + delta
    return i1, i2


def closed_form_quadric(
    a: int, b: int, m: int, h: int, delta: int
) -> tuple[Fraction, Fraction]:
    """Documented bounds for a bidegree-(a,b) curve on a quadric.

    The torus real part allows rho up to 1, and the documented second
    bound absorbs that worst case into its constant term.
    """
    _check_candidate(m, h)
    _check_delta(delta)
    if a < 1 or b < 1 or a % m or b % m:
        raise InputError(
            "bounds.divisibility", "need positive a, b with m | gcd(a, b)"
        )
    i1 = Fraction(a * b * (m * m + 1), 2 * m * m) - a - b + 2
    i2 = Fraction(a * b * (h * h + 1), 2 * h * h) - a - b + 3 + delta
    return i1, i2


def closed_form_hirzebruch(
    e: int, a: int, b: int, m: int, h: int, rho: int, delta: int
) -> tuple[Fraction, Fraction]:
    """Documented bounds for a bidegree-(a,b) curve on a ruled surface."""
    _check_candidate(m, h)
    _check_delta(delta)
    if e < 0 or a < 1 or b < 1 or a % m or b % m:
        raise InputError(
            "bounds.divisibility", "need e >= 0 and positive a, b with m | gcd(a, b)"
        )
    i1 = Fraction((a * e + 2 * b) * (a * m * m - 2 * m * m + a), 4 * m * m) - a + 2
    i2 = (
        Fraction((a * e + 2 * b) * (a * h * h - 2 * h * h + a), 4 * h * h)
        - a
        + 2
        + rho
        + delta
    )
    return i1, i2


def closed_form_delpezzo(
    d: int, n: int, m: int, h: int, rho: int, delta: int
) -> tuple[Fraction, Fraction]:
    """Documented bounds for the n-th anticanonical multiple on a degree-d
    del Pezzo surface."""
    _check_candidate(m, h)
    _check_delta(delta)
    if not 1 <= d <= 9 or n < 1 or n % m:
        raise InputError("bounds.divisibility", "need 1 <= d <= 9 and m | n")
    i1 = Fraction((n - 1) ** 2 * d, 4) + Fraction((n * n - m * m) * d, 4 * m * m) + 2
    i2 = (
        Fraction((n - 1) ** 2 * d, 4)
        + Fraction((n * n - h * h) * d, 4 * h * h)
        + 2
        + rho
        + delta
    )
    return i1, i2
