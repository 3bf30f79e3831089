"""Reports: structured (JSON) and text renderings of a full check.

Structured output is deterministic (sorted keys, stable number
formatting) and round-trips: ``report_from_obj(report_to_obj(r))``
rebuilds an equal report.  Exact rationals serialize as
``{"num": ..., "den": ..., "decimal": "..."}`` where the decimal
rendering is informational (truncated after six fractional digits);
num/den are authoritative.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .bounds import AssumptionFlags, BoundReport, PerCandidateBound
from .schemes import (
    ExplicitRegion,
    Membrane,
    MembraneSummary,
    RealScheme,
    Region,
    SchemeComponent,
    YComponent,
    render_forest,
)
from .surfaces import DivisibilityData
from .verdict import ExtremalityRecord, IneqRow, Verdict


def decimal_string(fr: Fraction) -> str:
    sign = "-" if fr < 0 else ""
    fr = abs(fr)
    whole, rem = divmod(fr.numerator, fr.denominator)
    if rem == 0:
        return f"{sign}{whole}"
    digits = []
    for _ in range(6):
        rem *= 10
        digits.append(str(rem // fr.denominator))
        rem %= fr.denominator
        if rem == 0:
            break
    return f"{sign}{whole}." + "".join(digits)


def fraction_to_obj(fr: Fraction) -> dict:
    return {"num": fr.numerator, "den": fr.denominator, "decimal": decimal_string(fr)}


def fraction_from_obj(obj) -> Fraction:
    return Fraction(obj["num"], obj["den"])


def divisibility_to_obj(d: DivisibilityData) -> dict:
    return {
        "n": d.n,
        "m": d.m,
        "candidates": [{"p": p, "alpha": a, "h": h} for p, a, h in d.candidates],
        "harnack_only": d.harnack_only,
    }


def divisibility_from_obj(obj) -> DivisibilityData:
    return DivisibilityData(
        obj["n"],
        obj["m"],
        tuple((c["p"], c["alpha"], c["h"]) for c in obj["candidates"]),
        obj["harnack_only"],
    )


def bound_report_to_obj(r: BoundReport) -> dict:
    return {
        "m": r.m,
        "rhs_i1": fraction_to_obj(r.rhs_i1),
        "floor_i1": r.floor_i1,
        "per_h": [
            {
                "p": row.p,
                "alpha": row.alpha,
                "h": row.h,
                "rho": row.rho,
                "delta": row.delta,
                "rhs_i2": fraction_to_obj(row.rhs_i2),
                "floor_i2": row.floor_i2,
                "binding": row.binding,
            }
            for row in r.per_h
        ],
        "rho_used": r.rho_used,
        "delta_used": r.delta_used,
        "assumption_flags": {
            "pi1_abelian_required": r.assumption_flags.pi1_abelian_required,
            "harnack_only": r.assumption_flags.harnack_only,
        },
    }


def bound_report_from_obj(obj) -> BoundReport:
    return BoundReport(
        m=obj["m"],
        rhs_i1=fraction_from_obj(obj["rhs_i1"]),
        floor_i1=obj["floor_i1"],
        per_h=tuple(
            PerCandidateBound(
                row["p"],
                row["alpha"],
                row["h"],
                row["rho"],
                row["delta"],
                fraction_from_obj(row["rhs_i2"]),
                row["floor_i2"],
                row["binding"],
            )
            for row in obj["per_h"]
        ),
        rho_used=obj["rho_used"],
        delta_used=obj["delta_used"],
        assumption_flags=AssumptionFlags(
            obj["assumption_flags"]["pi1_abelian_required"],
            obj["assumption_flags"]["harnack_only"],
        ),
    )


def _boundary_to_obj(boundary) -> list:
    return [[cid, sign] for cid, sign in boundary]


def _boundary_from_obj(obj):
    return tuple((cid, sign) for cid, sign in obj)


def summary_to_obj(s: MembraneSummary, primes=()) -> dict:
    return {
        "regions": [
            {
                "label": r.label,
                "chi": r.chi,
                "orientable": r.orientable,
                "boundary": _boundary_to_obj(r.boundary),
                "component": r.component_index,
            }
            for r in s.regions
        ],
        "membranes": [
            {
                "label": m.label,
                "chi": m.chi,
                "kind": m.kind,
                "boundary": _boundary_to_obj(m.boundary),
                "component": m.component_index,
            }
            for m in s.membranes
        ],
        "excluded_nonorientable": s.excluded_nonorientable,
        "k_plus": s.k_plus,
        "k_zero": s.k_zero,
        "k_minus": s.k_minus,
        "components_Y": [
            {"orientable": y.orientable, "chi": y.chi} for y in s.components_Y
        ],
        "circles": list(s.circles),
        "rho_bound_per_p": {str(p): s.rho_bound(p) for p in primes},
    }


def summary_from_obj(obj) -> MembraneSummary:
    return MembraneSummary(
        regions=tuple(
            Region(
                r["label"],
                r["chi"],
                r["orientable"],
                _boundary_from_obj(r["boundary"]),
                r["component"],
            )
            for r in obj["regions"]
        ),
        membranes=tuple(
            Membrane(
                m["label"],
                m["chi"],
                m["kind"],
                _boundary_from_obj(m["boundary"]),
                m["component"],
            )
            for m in obj["membranes"]
        ),
        excluded_nonorientable=obj["excluded_nonorientable"],
        k_plus=obj["k_plus"],
        k_zero=obj["k_zero"],
        k_minus=obj["k_minus"],
        components_Y=tuple(
            YComponent(y["orientable"], y["chi"]) for y in obj["components_Y"]
        ),
        circles=tuple(obj["circles"]),
    )


def _row_to_obj(row: IneqRow) -> dict:
    return {
        "name": row.name,
        "h": row.h,
        "p": row.p,
        "rho": row.rho,
        "delta": row.delta,
        "lhs": row.lhs,
        "rhs": fraction_to_obj(row.rhs),
        "floor_rhs": row.floor_rhs,
        "satisfied": row.satisfied,
        "equality": row.equality,
        "binding": row.binding,
        "informational": row.informational,
    }


def _row_from_obj(obj) -> IneqRow:
    return IneqRow(
        obj["name"],
        obj["h"],
        obj["p"],
        obj["rho"],
        obj["delta"],
        obj["lhs"],
        fraction_from_obj(obj["rhs"]),
        obj["floor_rhs"],
        obj["satisfied"],
        obj["equality"],
        obj["binding"],
        obj["informational"],
    )


def _extremality_to_obj(e: ExtremalityRecord) -> dict:
    return {
        "case": e.case,
        "p": e.p,
        "status": e.status,
        "witness_eps": None
        if e.witness_eps is None
        else [[c, s] for c, s in e.witness_eps],
        "witness_x": None
        if e.witness_x is None
        else [[label, v] for label, v in e.witness_x],
    }


def _extremality_from_obj(obj) -> ExtremalityRecord:
    return ExtremalityRecord(
        obj["case"],
        obj["p"],
        obj["status"],
        None
        if obj["witness_eps"] is None
        else tuple((c, s) for c, s in obj["witness_eps"]),
        None
        if obj["witness_x"] is None
        else tuple((label, v) for label, v in obj["witness_x"]),
    )


def verdict_to_obj(v: Verdict) -> dict:
    return {
        "harnack_ok": v.harnack_ok,
        "circle_count": v.circle_count,
        "harnack_bound": v.harnack_bound,
        "i1": _row_to_obj(v.i1),
        "i2_rows": [_row_to_obj(r) for r in v.i2_rows],
        "extremality": [_extremality_to_obj(e) for e in v.extremality],
        "final": v.final,
        "notes": list(v.notes),
        "pi1_abelian_assumed": v.pi1_abelian_assumed,
        "harnack_only": v.harnack_only,
    }


def verdict_from_obj(obj) -> Verdict:
    return Verdict(
        obj["harnack_ok"],
        obj["circle_count"],
        obj["harnack_bound"],
        _row_from_obj(obj["i1"]),
        tuple(_row_from_obj(r) for r in obj["i2_rows"]),
        tuple(_extremality_from_obj(e) for e in obj["extremality"]),
        obj["final"],
        tuple(obj["notes"]),
        obj["pi1_abelian_assumed"],
        obj["harnack_only"],
    )


@dataclass(frozen=True)
class Report:
    input_echo: dict
    divisibility: DivisibilityData
    bounds: BoundReport
    membranes: MembraneSummary | None = None
    verdict: Verdict | None = None


def report_to_obj(r: Report) -> dict:
    primes = tuple(p for p, _a, _h in r.divisibility.candidates)
    obj = {
        "schema": 1,
        "input": r.input_echo,
        "divisibility": divisibility_to_obj(r.divisibility),
        "bounds": bound_report_to_obj(r.bounds),
    }
    if r.membranes is not None:
        obj["membranes"] = summary_to_obj(r.membranes, primes)
    if r.verdict is not None:
        obj["verdict"] = verdict_to_obj(r.verdict)
    return obj


def report_from_obj(obj) -> Report:
    return Report(
        input_echo=obj["input"],
        divisibility=divisibility_from_obj(obj["divisibility"]),
        bounds=bound_report_from_obj(obj["bounds"]),
        membranes=summary_from_obj(obj["membranes"]) if "membranes" in obj else None,
        verdict=verdict_from_obj(obj["verdict"]) if "verdict" in obj else None,
    )


def emit_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def render_component(comp: SchemeComponent) -> str:
    if comp.topology == "sphere":
        return f"S({render_forest(comp.ovals)})"
    if comp.topology == "torus":
        if comp.essential_circles == 0:
            return f"T(l=0; {render_forest(comp.ovals)})"
        annuli = ", ".join(render_forest(f) for f in comp.annuli)
        return f"T(l={comp.essential_circles}; {annuli})"
    if comp.topology == "projective_plane":
        inner = render_forest(comp.ovals)
        return f"RP2(J; {inner})" if comp.odd_branch else f"RP2({inner})"
    if comp.topology == "orientable_genus":
        return f"S_{comp.genus}({render_forest(comp.ovals)})"
    return f"explicit({len(comp.circles)} circles, {len(comp.regions)} regions)"


def render_scheme(scheme: RealScheme) -> str:
    body = " | ".join(render_component(c) for c in scheme.components)
    return f"[{body}] type={scheme.curve_type}"


def _fmt(fr: Fraction) -> str:
    if fr.denominator == 1:
        return str(fr.numerator)
    return f"{fr} ({decimal_string(fr)})"


def render_report_text(r: Report) -> str:
    lines = []
    d = r.divisibility
    lines.append(
        f"class divisibility: n={d.n}, odd part m={d.m}, candidates "
        + (
            ", ".join(f"h={h} (p={p}^{a})" for p, a, h in d.candidates)
            if d.candidates
            else "none"
        )
    )
    if d.harnack_only:
        lines.append("m = 1: covering bounds not applicable (Harnack only)")
    lines.append(f"hyperbolic bound (i1):    k- <= {_fmt(r.bounds.rhs_i1)}")
    for row in r.bounds.per_h:
        mark = "  [binding]" if row.binding else ""
        lines.append(
            f"non-elliptic bound (i2):  k- + k0 <= {_fmt(row.rhs_i2)}"
            f"  at h={row.h}, rho={row.rho}, delta={row.delta}{mark}"
        )
    if r.membranes is not None:
        s = r.membranes
        lines.append(
            f"membranes: k+={s.k_plus}, k0={s.k_zero}, k-={s.k_minus} "
            f"({s.excluded_nonorientable} nonorientable region(s) excluded)"
        )
    if r.verdict is not None:
        v = r.verdict
        lines.append(
            f"Harnack: {v.circle_count} circle(s) vs bound {v.harnack_bound}: "
            + ("ok" if v.harnack_ok else "VIOLATED")
        )
        i1 = v.i1
        lines.append(
            f"(i1) {i1.lhs} <= {_fmt(i1.rhs)}: "
            + ("equality" if i1.equality else ("ok" if i1.satisfied else "VIOLATED"))
        )
        for row in v.i2_rows:
            tag = "equality" if row.equality else ("ok" if row.satisfied else "VIOLATED")
            info = " [info: rho=0]" if row.informational else ""
            lines.append(
                f"(i2) h={row.h} rho={row.rho} delta={row.delta}: "
                f"{row.lhs} <= {_fmt(row.rhs)}: {tag}{info}"
            )
        for e in v.extremality:
            lines.append(f"extremality case {e.case} at p={e.p}: {e.status}")
        for note in v.notes:
            lines.append(f"note: {note}")
        lines.append(f"FINAL: {v.final}")
    return "\n".join(lines) + "\n"
