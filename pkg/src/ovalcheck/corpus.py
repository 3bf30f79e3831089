"""Bundled corpus of worked examples with their expected verdicts.

Each entry is a JSON document shipped with the package plus a set of
assertions: the final status, membrane counts, which inequality is
attained with equality, and (where relevant) the outcome of the
equality-case search.  ``run_corpus`` re-checks every entry and
reports mismatches; the CLI ``examples --run`` command exits nonzero
if any expectation fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .bounds import best_bounds, rhs_non_elliptic
from .documents import parse_document
from .schemes import membranes
from .verdict import check


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    filename: str
    description: str
    kind: str = "check"  # "check" | "bounds"
    expect: dict = field(default_factory=dict)


CORPUS: tuple[CorpusEntry, ...] = (
    CorpusEntry(
        "plane-cubic-oval",
        "plane-cubic-oval.json",
        "degree-3 plane curve with one oval: hyperbolic bound attained (0 = 0)",
        expect={
            "final": "admissible",
            "k_minus": 0,
            "i1_equality": True,
        },
    ),
    CorpusEntry(
        "plane-quintic-nest2",
        "plane-quintic-nest2.json",
        "degree-5 plane curve, nest of two ovals, type II: "
        "non-elliptic bound attained (1 = 1)",
        expect={
            "final": "admissible",
            "k_nonelliptic": 1,
            "i2_equality_at": {"h": 5, "delta": 0},
        },
    ),
    CorpusEntry(
        "plane-quintic-nest3",
        "plane-quintic-nest3.json",
        "degree-5 plane curve, nest of three: prohibited (type II branch "
        "fails the bound; type I branch reaches equality but no sign "
        "assignment bounds a parabolic combination at p=5)",
        expect={
            "final": "prohibited",
            "extremality": {"case": "I", "p": 5, "status": "infeasible"},
        },
    ),
    *(
        CorpusEntry(
            f"quadric33-circle-l{l}",
            f"quadric33-circle-l{l}.json",
            f"bidegree-(3,3) curve on a hyperboloid: one essential circle "
            f"and {l} oval(s): hyperbolic bound attained (1 = 1)",
            expect={
                "final": "admissible",
                "k_minus": 1,
                "i1_equality": True,
            },
        )
        for l in (1, 2, 3, 4)
    ),
    CorpusEntry(
        "quadric33-three-planes",
        "quadric33-three-planes.json",
        "bidegree-(3,3) curve traced by three parallel planes: three "
        "essential circles, type I, rho=1: non-elliptic bound attained "
        "(3 = 3) and the equality case is realizable at p=3",
        expect={
            "final": "admissible",
            "k_zero": 3,
            "i2_equality_at": {"h": 3, "delta": 1},
            "extremality": {"case": "I", "p": 3, "status": "feasible"},
        },
    ),
    CorpusEntry(
        "delpezzo2-nest4-plus3",
        "delpezzo2-nest4-plus3.json",
        "triple anticanonical curve on the degree-2 del Pezzo surface: "
        "nest of four with three ovals inside, type II, rho=0: "
        "non-elliptic bound attained (4 = 4)",
        expect={
            "final": "admissible",
            "k_nonelliptic": 4,
            "i2_equality_at": {"h": 3, "delta": 0},
            "harnack_ok": True,
        },
    ),
    CorpusEntry(
        "delpezzo2-bound6",
        "delpezzo2-bound6.json",
        "triple anticanonical class on the degree-2 del Pezzo surface "
        "with rho=1, delta=1: the non-elliptic bound evaluates to 6",
        kind="bounds",
        expect={"rhs_i2_at": {"h": 3, "rho": 1, "delta": 1, "value": 6}},
    ),
)


def corpus_path(filename: str):
    return resources.files("ovalcheck.data").joinpath(filename)


def load_entry(entry: CorpusEntry):
    return parse_document(corpus_path(entry.filename).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class CorpusResult:
    entry: CorpusEntry
    ok: bool
    failures: tuple[str, ...]


def _check_entry(entry: CorpusEntry) -> CorpusResult:
    doc = load_entry(entry)
    failures: list[str] = []
    expect = entry.expect

    if entry.kind == "bounds":
        spec = expect["rhs_i2_at"]
        value = rhs_non_elliptic(
            doc.surface, doc.curve_class, spec["h"], spec["rho"], spec["delta"]
        )
        if value != Fraction(spec["value"]):
            failures.append(f"rhs_i2 = {value}, expected {spec['value']}")
        best_bounds(doc.surface, doc.curve_class, rho=doc.overrides.rho or 0)
        return CorpusResult(entry, not failures, tuple(failures))

    verdict = check(
        doc.surface,
        doc.curve_class,
        doc.scheme,
        rho=doc.overrides.rho,
        pi1_abelian=doc.overrides.pi1_abelian,
    )
    summary = membranes(doc.scheme)

    if "final" in expect and verdict.final != expect["final"]:
        failures.append(f"final = {verdict.final}, expected {expect['final']}")
    if "k_minus" in expect and summary.k_minus != expect["k_minus"]:
        failures.append(f"k- = {summary.k_minus}, expected {expect['k_minus']}")
    if "k_zero" in expect and summary.k_zero != expect["k_zero"]:
        failures.append(f"k0 = {summary.k_zero}, expected {expect['k_zero']}")
    if "k_nonelliptic" in expect:
        got = summary.k_minus + summary.k_zero
        if got != expect["k_nonelliptic"]:
            failures.append(
                f"k- + k0 = {got}, expected {expect['k_nonelliptic']}"
            )
    if "harnack_ok" in expect and verdict.harnack_ok != expect["harnack_ok"]:
        failures.append(f"harnack_ok = {verdict.harnack_ok}")
    if expect.get("i1_equality") and not verdict.i1.equality:
        failures.append("expected equality in the hyperbolic bound")
    if "i2_equality_at" in expect:
        spec = expect["i2_equality_at"]
        hit = any(
            row.equality
            and not row.informational
            and row.h == spec["h"]
            and row.delta == spec["delta"]
            for row in verdict.i2_rows
        )
        if not hit:
            failures.append(
                f"expected equality in the non-elliptic bound at h={spec['h']}, "
                f"delta={spec['delta']}"
            )
    if "extremality" in expect:
        spec = expect["extremality"]
        hit = any(
            e.case == spec["case"] and e.p == spec["p"] and e.status == spec["status"]
            for e in verdict.extremality
        )
        if not hit:
            failures.append(
                f"expected extremality case {spec['case']} at p={spec['p']} "
                f"to be {spec['status']}; got "
                f"{[(e.case, e.p, e.status) for e in verdict.extremality]}"
            )
    return CorpusResult(entry, not failures, tuple(failures))


def run_corpus() -> list[CorpusResult]:
    return [_check_entry(entry) for entry in CORPUS]
