"""Command-line interface.

Subcommands:

* ``check <file> [--json]``      full report for one input document
* ``bounds <file> [--json]``     divisibility and bound data only
* ``table --family ... [--json]`` closed forms next to the general bounds
* ``enumerate <file> --max-ovals N [--json]`` admissibility census
* ``examples [--run] [--json]``  list or execute the bundled corpus

Exit codes: 0 success, 1 prohibited scheme or failed corpus assertion,
2 invalid input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import corpus as corpus_mod
from .bounds import (
    best_bounds,
    bound_base,
    closed_form_delpezzo,
    closed_form_hirzebruch,
    closed_form_plane,
    closed_form_quadric,
)
from .documents import InputDocument, parse_document
from .enumeration import EnumerationLimits, census
from .errors import InputError
from .report import (
    Report,
    decimal_string,
    emit_json,
    render_report_text,
    render_scheme,
    report_to_obj,
    verdict_to_obj,
)
from .schemes import membranes
from .surfaces import CurveClass, divisibility, del_pezzo, hirzebruch, plane, quadric
from .verdict import check

EXIT_OK = 0
EXIT_PROHIBITED = 1
EXIT_INPUT = 2


def _read_document(path: str) -> InputDocument:
    try:
        with open(path, "rb") as fh:
            payload = fh.read()
    except OSError as exc:
        raise InputError("io.read", f"cannot read {path}: {exc}")
    return parse_document(payload)


def _build_report(doc: InputDocument, with_scheme: bool) -> Report:
    div = divisibility(doc.curve_class, doc.surface)
    delta: object = "unknown"
    if doc.scheme is not None and doc.scheme.delta() is not None:
        delta = doc.scheme.delta()
    bounds = best_bounds(
        doc.surface, doc.curve_class, rho=doc.overrides.rho or 0, delta=delta
    )
    if not with_scheme:
        return Report(doc.obj, div, bounds)
    if doc.scheme is None:
        raise InputError("schema.missing-field", "this command needs a scheme", "scheme")
    verdict = check(
        doc.surface,
        doc.curve_class,
        doc.scheme,
        rho=doc.overrides.rho,
        pi1_abelian=doc.overrides.pi1_abelian,
    )
    return Report(doc.obj, div, bounds, membranes(doc.scheme), verdict)


def _cmd_check(args) -> int:
    doc = _read_document(args.file)
    report = _build_report(doc, with_scheme=True)
    if args.json:
        sys.stdout.write(emit_json(report_to_obj(report)))
    else:
        sys.stdout.write(render_scheme(doc.scheme) + "\n")
        sys.stdout.write(render_report_text(report))
    return EXIT_PROHIBITED if report.verdict.final == "prohibited" else EXIT_OK


def _cmd_bounds(args) -> int:
    doc = _read_document(args.file)
    report = _build_report(doc, with_scheme=False)
    if args.json:
        sys.stdout.write(emit_json(report_to_obj(report)))
    else:
        sys.stdout.write(render_report_text(report))
    return EXIT_OK


def _parse_range(text: str, name: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        value = int(text)
        return range(value, value + 1)
    except ValueError:
        raise InputError("cli.range", f"--{name} expects N or LO..HI")


def _table_rows(args):
    rows = []

    def add(params: dict, xi_surface, xi, rho: int, closed):
        div = divisibility(xi, xi_surface)
        for p, _alpha, h in div.candidates:
            for delta in (0, 1):
                ci1, ci2 = closed(div.m, h, delta)
                gi1 = bound_base(xi_surface, xi, div.m)
                gi2 = bound_base(xi_surface, xi, h) + rho + delta
                rows.append(
                    {
                        **params,
                        "m": div.m,
                        "h": h,
                        "p": p,
                        "rho": rho,
                        "delta": delta,
                        "i1_closed": ci1,
                        "i1_general": gi1,
                        "i2_closed": ci2,
                        "i2_general": gi2,
                        "match": ci1 == gi1 and ci2 == gi2,
                    }
                )

    if args.family == "plane":
        surface = plane()
        for m in _parse_range(args.m, "m"):
            if m < 1 or m % 2 == 0:
                continue
            add(
                {"degree": m},
                surface,
                CurveClass((m,)),
                0,
                lambda mm, h, delta: closed_form_plane(mm, h, delta),
            )
    elif args.family == "quadric":
        surface = quadric()
        for a in _parse_range(args.a, "a"):
            for b in _parse_range(args.b, "b"):
                if a < 1 or b < 1:
                    continue
                add(
                    {"a": a, "b": b},
                    surface,
                    CurveClass((a, b)),
                    1,  # torus real part: the documented form absorbs rho=1
                    lambda m, h, delta, a=a, b=b: closed_form_quadric(a, b, m, h, delta),
                )
    elif args.family == "hirzebruch":
        for e in _parse_range(args.e, "e"):
            surface = hirzebruch(e)
            for a in _parse_range(args.a, "a"):
                for b in _parse_range(args.b, "b"):
                    if a < 1 or b < 1:
                        continue
                    add(
                        {"e": e, "a": a, "b": b},
                        surface,
                        CurveClass((a, b)),
                        args.rho,
                        lambda m, h, delta, e=e, a=a, b=b: closed_form_hirzebruch(
                            e, a, b, m, h, args.rho, delta
                        ),
                    )
    elif args.family == "del_pezzo":
        for d in _parse_range(args.d, "d"):
            surface = del_pezzo(d)
            for n in _parse_range(args.n, "n"):
                if n < 1:
                    continue
                div = divisibility(CurveClass((n,)), surface)
                add(
                    {"d": d, "n": n},
                    surface,
                    CurveClass((n,)),
                    args.rho,
                    lambda m, h, delta, d=d, n=n: closed_form_delpezzo(
                        d, n, m, h, args.rho, delta
                    ),
                )
    return rows


def _cmd_table(args) -> int:
    rows = _table_rows(args)
    if args.json:
        payload = [
            {
                k: (
                    {"num": v.numerator, "den": v.denominator, "decimal": decimal_string(v)}
                    if isinstance(v, Fraction)
                    else v
                )
                for k, v in row.items()
            }
            for row in rows
        ]
        sys.stdout.write(emit_json(payload))
        return EXIT_OK
    if not rows:
        sys.stdout.write("no parameters with odd divisibility m > 1 in range\n")
        return EXIT_OK
    params = [k for k in rows[0] if k not in (
        "m", "h", "p", "rho", "delta",
        "i1_closed", "i1_general", "i2_closed", "i2_general", "match",
    )]
    header = params + ["m", "h", "rho", "delta", "i1", "i2", "match"]
    sys.stdout.write("  ".join(f"{h:>8}" for h in header) + "\n")
    for row in rows:
        cells = [str(row[k]) for k in params]
        cells += [str(row["m"]), str(row["h"]), str(row["rho"]), str(row["delta"])]
        cells.append(decimal_string(row["i1_general"]))
        cells.append(decimal_string(row["i2_general"]))
        cells.append("ok" if row["match"] else "MISMATCH")
        sys.stdout.write("  ".join(f"{c:>8}" for c in cells) + "\n")
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    doc = _read_document(args.file)
    limits = EnumerationLimits(
        max_ovals=args.max_ovals, max_essential_circles=args.max_essential
    )
    rows = []
    counts = {"admissible": 0, "prohibited": 0, "conditionally-admissible": 0}
    for row in census(
        doc.surface,
        doc.curve_class,
        limits,
        rho=doc.overrides.rho,
        pi1_abelian=doc.overrides.pi1_abelian,
    ):
        counts[row.verdict.final] += 1
        if args.json:
            rows.append(
                {
                    "scheme": render_scheme(row.scheme),
                    "verdict": verdict_to_obj(row.verdict),
                }
            )
        else:
            sys.stdout.write(
                f"{row.verdict.final:>26}  {render_scheme(row.scheme)}\n"
            )
    if args.json:
        sys.stdout.write(emit_json({"census": rows, "summary": counts}))
    else:
        sys.stdout.write(
            f"total {sum(counts.values())}: "
            f"{counts['admissible']} admissible, "
            f"{counts['prohibited']} prohibited, "
            f"{counts['conditionally-admissible']} conditional\n"
        )
    return EXIT_OK


def _cmd_examples(args) -> int:
    if not args.run:
        if args.json:
            payload = [
                {"name": e.name, "file": e.filename, "kind": e.kind, "about": e.description}
                for e in corpus_mod.CORPUS
            ]
            sys.stdout.write(emit_json(payload))
        else:
            for e in corpus_mod.CORPUS:
                sys.stdout.write(f"{e.name:>24}  {e.description}\n")
        return EXIT_OK
    results = corpus_mod.run_corpus()
    failed = 0
    for res in results:
        status = "pass" if res.ok else "FAIL"
        sys.stdout.write(f"{status}  {res.entry.name}\n")
        for failure in res.failures:
            failed += 1
            sys.stdout.write(f"      {failure}\n")
    sys.stdout.write(
        f"{len(results) - sum(1 for r in results if not r.ok)}/{len(results)} "
        "corpus entries verified\n"
    )
    return EXIT_OK if failed == 0 else EXIT_PROHIBITED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ovalcheck",
        description="prohibition checks for real schemes of curves on surfaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="full report for one input document")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("bounds", help="divisibility and bound data (no scheme needed)")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("table", help="closed forms next to the general bounds")
    p.add_argument("--family", required=True,
                   choices=["plane", "quadric", "hirzebruch", "del_pezzo"])
    p.add_argument("--m", default="3..21", help="plane degree range, e.g. 3..21")
    p.add_argument("--a", default="1..6")
    p.add_argument("--b", default="1..6")
    p.add_argument("--e", default="0..3")
    p.add_argument("--d", default="1..9")
    p.add_argument("--n", default="1..6")
    p.add_argument("--rho", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("enumerate", help="admissibility census up to caps")
    p.add_argument("file")
    p.add_argument("--max-ovals", type=int, default=8)
    p.add_argument("--max-essential", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("examples", help="list or run the bundled corpus")
    p.add_argument("--run", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_examples)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"error {exc}\n")
        return EXIT_INPUT


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
