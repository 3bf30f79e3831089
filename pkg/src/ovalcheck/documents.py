"""Declarative JSON input documents.

Schema (version 1):

    {
      "schema": 1,
      "surface": {"family": "plane" | "quadric"
                            | "hirzebruch" (+ "e")
                            | "del_pezzo"  (+ "d")
                            | "custom"     (+ "gram", "canonical", "sigma"),
                  "real_part": [{"topology": "...", "genus": int?}, ...]?},
      "curve_class": {"coords": [int, ...]} or {"n": int},
      "scheme": {"type": "I" | "II" | "unknown",
                 "components": [<component>, ...]}?,
      "overrides": {"rho": int?, "pi1_abelian": bool?}?
    }

A component is one of

    {"topology": "sphere",            "ovals": <forest>}
    {"topology": "torus",             "essential_circles": 0, "ovals": <forest>}
    {"topology": "torus",             "essential_circles": l, "annuli": [<forest> x l]}
    {"topology": "projective_plane",  "odd_branch": bool, "ovals": <forest>}
    {"topology": "orientable_genus",  "genus": int, "ovals": <forest>}
    {"topology": "explicit",          "orientable": bool, "circles": [id, ...],
                                      "regions": [{"chi": int, "orientable": bool,
                                                   "boundary": [id | [id, +-1], ...]}, ...]}

where a forest is an array of ovals and an oval is the array of its
children: ``[]`` is an empty oval, ``[[ [] ]]`` is a nest of two.
Unknown fields are rejected, all integers are bounds-checked, and every
error carries the dotted path of the offending field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import schemes, surfaces
from .errors import InputError

SCHEMA_VERSION = 1

MAX_COORD = 10**9
MAX_FOREST_NODES = 4096
MAX_ESSENTIAL = 1024
MAX_RHO = 1024


@dataclass(frozen=True)
class Overrides:
    rho: int | None = None
    pi1_abelian: bool | None = None


@dataclass(frozen=True)
class InputDocument:
    surface: surfaces.SurfaceModel
    curve_class: surfaces.CurveClass
    scheme: schemes.RealScheme | None
    overrides: Overrides
    obj: dict  # normalized echo of the parsed document


def _require_mapping(obj, path):
    if not isinstance(obj, dict):
        raise InputError("schema.type", "expected an object", path)
    return obj


def _require_keys(obj, path, required, optional=()):
    for key in obj:
        if key not in required and key not in optional:
            raise InputError("schema.unknown-field", f"unknown field {key!r}", f"{path}.{key}" if path else key)
    for key in required:
        if key not in obj:
            raise InputError("schema.missing-field", f"missing field {key!r}", path)


def _require_int(value, path, lo=None, hi=None):
    if not isinstance(value, int) or isinstance(value, bool):
        raise InputError("schema.type", "expected an integer", path)
    if lo is not None and value < lo:
        raise InputError("schema.range", f"value must be >= {lo}", path)
    if hi is not None and value > hi:
        raise InputError("schema.range", f"value must be <= {hi}", path)
    return value


def _require_bool(value, path):
    if not isinstance(value, bool):
        raise InputError("schema.type", "expected a boolean", path)
    return value


def _require_list(value, path):
    if not isinstance(value, list):
        raise InputError("schema.type", "expected an array", path)
    return value


def parse_forest(obj, path) -> schemes.Forest:
    _require_list(obj, path)
    forest = tuple(parse_forest(child, f"{path}[{i}]") for i, child in enumerate(obj))
    if schemes.forest_size(forest) > MAX_FOREST_NODES:
        raise InputError("schema.range", "too many ovals", path)
    return forest


def _parse_real_part(obj, path):
    _require_list(obj, path)
    parts = []
    for i, item in enumerate(obj):
        ipath = f"{path}[{i}]"
        _require_mapping(item, ipath)
        _require_keys(item, ipath, ("topology",), ("genus",))
        genus = _require_int(item.get("genus", 0), f"{ipath}.genus", 0, 64)
        try:
            parts.append(surfaces.real_part_component(item["topology"], genus))
        except InputError as exc:
            raise InputError(exc.code, str(exc.args[0]) if exc.args else "bad real part", ipath)
    return tuple(parts)


def _parse_surface(obj, path) -> surfaces.SurfaceModel:
    _require_mapping(obj, path)
    family = obj.get("family")
    if family == "plane":
        _require_keys(obj, path, ("family",), ("real_part",))
        rp = _parse_real_part(obj["real_part"], f"{path}.real_part") if "real_part" in obj else None
        return surfaces.plane(rp) if rp else surfaces.plane()
    if family == "quadric":
        _require_keys(obj, path, ("family",), ("real_part",))
        rp = _parse_real_part(obj["real_part"], f"{path}.real_part") if "real_part" in obj else None
        return surfaces.quadric(rp)
    if family == "hirzebruch":
        _require_keys(obj, path, ("family", "e"), ("real_part",))
        e = _require_int(obj["e"], f"{path}.e", 0, 64)
        rp = _parse_real_part(obj["real_part"], f"{path}.real_part") if "real_part" in obj else None
        return surfaces.hirzebruch(e, rp)
    if family == "del_pezzo":
        _require_keys(obj, path, ("family", "d"), ("real_part",))
        d = _require_int(obj["d"], f"{path}.d", 1, 9)
        rp = _parse_real_part(obj["real_part"], f"{path}.real_part") if "real_part" in obj else None
        return surfaces.del_pezzo(d, rp)
    if family == "custom":
        _require_keys(
            obj,
            path,
            ("family", "gram", "canonical", "sigma"),
            ("basis_labels", "real_part", "pi1_abelian"),
        )
        gram = _require_list(obj["gram"], f"{path}.gram")
        for i, row in enumerate(gram):
            _require_list(row, f"{path}.gram[{i}]")
            for j, v in enumerate(row):
                _require_int(v, f"{path}.gram[{i}][{j}]", -MAX_COORD, MAX_COORD)
        canonical = _require_list(obj["canonical"], f"{path}.canonical")
        for i, v in enumerate(canonical):
            _require_int(v, f"{path}.canonical[{i}]", -MAX_COORD, MAX_COORD)
        sigma = _require_int(obj["sigma"], f"{path}.sigma", -1024, 1024)
        labels = obj.get("basis_labels")
        rp = _parse_real_part(obj["real_part"], f"{path}.real_part") if "real_part" in obj else None
        pi1 = _require_bool(obj.get("pi1_abelian", False), f"{path}.pi1_abelian")
        try:
            return surfaces.custom(gram, canonical, sigma, labels, rp, pi1)
        except InputError as exc:
            raise InputError(exc.code, exc.args[0] if exc.args else "bad surface", path)
    raise InputError(
        "schema.enum",
        "family must be one of plane, quadric, hirzebruch, del_pezzo, custom",
        f"{path}.family",
    )


def _parse_curve_class(obj, path, surface) -> surfaces.CurveClass:
    _require_mapping(obj, path)
    if "n" in obj:
        _require_keys(obj, path, ("n",))
        n = _require_int(obj["n"], f"{path}.n", 1, MAX_COORD)
        if surface.family != "del_pezzo":
            raise InputError(
                "schema.type",
                "the single multiple n is only for del Pezzo surfaces; use coords",
                f"{path}.n",
            )
        return surfaces.CurveClass((n,))
    _require_keys(obj, path, ("coords",))
    coords = _require_list(obj["coords"], f"{path}.coords")
    for i, v in enumerate(coords):
        _require_int(v, f"{path}.coords[{i}]", -MAX_COORD, MAX_COORD)
    if surface.family == "del_pezzo" and len(coords) != 1:
        raise InputError(
            "schema.type", "del Pezzo classes take a single multiple", f"{path}.coords"
        )
    try:
        xi = surfaces.CurveClass(tuple(coords))
    except InputError as exc:
        raise InputError(exc.code, exc.args[0] if exc.args else "bad class", f"{path}.coords")
    if surface.lattice is not None and len(coords) != surface.lattice.rank:
        raise InputError(
            "class.dimension",
            f"expected {surface.lattice.rank} coordinates",
            f"{path}.coords",
        )
    return xi


def _parse_component(obj, path) -> schemes.SchemeComponent:
    _require_mapping(obj, path)
    topology = obj.get("topology")
    try:
        if topology == "sphere":
            _require_keys(obj, path, ("topology",), ("ovals",))
            return schemes.sphere_component(parse_forest(obj.get("ovals", []), f"{path}.ovals"))
        if topology == "torus":
            _require_keys(
                obj, path, ("topology",), ("essential_circles", "ovals", "annuli")
            )
            ell = _require_int(
                obj.get("essential_circles", 0), f"{path}.essential_circles", 0, MAX_ESSENTIAL
            )
            if ell == 0:
                if "annuli" in obj:
                    raise InputError(
                        "schema.type",
                        "annuli need essential_circles > 0",
                        f"{path}.annuli",
                    )
                return schemes.torus_component(
                    0, ovals=parse_forest(obj.get("ovals", []), f"{path}.ovals")
                )
            if "ovals" in obj:
                raise InputError(
                    "schema.type",
                    "with essential circles, use per-annulus forests in 'annuli'",
                    f"{path}.ovals",
                )
            annuli_obj = _require_list(obj.get("annuli", []), f"{path}.annuli")
            annuli = tuple(
                parse_forest(f, f"{path}.annuli[{i}]") for i, f in enumerate(annuli_obj)
            )
            return schemes.torus_component(ell, annuli=annuli)
        if topology == "projective_plane":
            _require_keys(obj, path, ("topology",), ("odd_branch", "ovals"))
            odd = _require_bool(obj.get("odd_branch", False), f"{path}.odd_branch")
            return schemes.projective_plane_component(
                parse_forest(obj.get("ovals", []), f"{path}.ovals"), odd
            )
        if topology == "orientable_genus":
            _require_keys(obj, path, ("topology", "genus"), ("ovals",))
            g = _require_int(obj["genus"], f"{path}.genus", 0, 64)
            return schemes.orientable_component(
                g, parse_forest(obj.get("ovals", []), f"{path}.ovals")
            )
        if topology == "explicit":
            _require_keys(obj, path, ("topology", "orientable", "circles", "regions"))
            orientable = _require_bool(obj["orientable"], f"{path}.orientable")
            circles = _require_list(obj["circles"], f"{path}.circles")
            for i, c in enumerate(circles):
                if not isinstance(c, str):
                    raise InputError("schema.type", "circle ids are strings", f"{path}.circles[{i}]")
            regions = []
            for i, robj in enumerate(_require_list(obj["regions"], f"{path}.regions")):
                rpath = f"{path}.regions[{i}]"
                _require_mapping(robj, rpath)
                _require_keys(robj, rpath, ("chi", "orientable", "boundary"))
                chi = _require_int(robj["chi"], f"{rpath}.chi", -MAX_FOREST_NODES, 2)
                r_orient = _require_bool(robj["orientable"], f"{rpath}.orientable")
                raw = _require_list(robj["boundary"], f"{rpath}.boundary")
                seen_count: dict[str, int] = {}
                boundary = []
                for k, entry in enumerate(raw):
                    epath = f"{rpath}.boundary[{k}]"
                    if isinstance(entry, str):
                        cid, sign = entry, None
                    elif (
                        isinstance(entry, list)
                        and len(entry) == 2
                        and isinstance(entry[0], str)
                    ):
                        cid = entry[0]
                        sign = _require_int(entry[1], epath, -1, 1)
                        if sign == 0:
                            raise InputError("schema.range", "sign must be +1 or -1", epath)
                    else:
                        raise InputError(
                            "schema.type", "boundary entries are 'id' or ['id', sign]", epath
                        )
                    if sign is None:
                        # default orientation: alternate signs per circle
                        sign = 1 if seen_count.get(cid, 0) == 0 else -1
                    seen_count[cid] = seen_count.get(cid, 0) + 1
                    boundary.append((cid, sign))
                regions.append(schemes.ExplicitRegion(chi, r_orient, tuple(boundary)))
            return schemes.explicit_component(circles, regions, orientable)
    except InputError as exc:
        if exc.path:
            raise
        raise InputError(exc.code, exc.args[0] if exc.args else "bad component", path)
    raise InputError(
        "schema.enum",
        "topology must be sphere, torus, projective_plane, orientable_genus, or explicit",
        f"{path}.topology",
    )


def _parse_scheme(obj, path) -> schemes.RealScheme:
    _require_mapping(obj, path)
    _require_keys(obj, path, ("type", "components"))
    ctype = obj["type"]
    if ctype not in ("I", "II", "unknown"):
        raise InputError("schema.enum", "type must be I, II, or unknown", f"{path}.type")
    comp_list = _require_list(obj["components"], f"{path}.components")
    if not comp_list:
        raise InputError("schema.range", "components must be nonempty", f"{path}.components")
    comps = tuple(
        _parse_component(c, f"{path}.components[{i}]") for i, c in enumerate(comp_list)
    )
    try:
        return schemes.RealScheme(comps, ctype)
    except InputError as exc:
        raise InputError(exc.code, exc.args[0] if exc.args else "bad scheme", path)


def _parse_overrides(obj, path) -> Overrides:
    _require_mapping(obj, path)
    _require_keys(obj, path, (), ("rho", "pi1_abelian"))
    rho = None
    if "rho" in obj:
        rho = _require_int(obj["rho"], f"{path}.rho", 0, MAX_RHO)
    pi1 = None
    if "pi1_abelian" in obj:
        pi1 = _require_bool(obj["pi1_abelian"], f"{path}.pi1_abelian")
    return Overrides(rho, pi1)


def parse_document_obj(obj) -> InputDocument:
    _require_mapping(obj, "")
    _require_keys(obj, "", ("schema", "surface", "curve_class"), ("scheme", "overrides"))
    version = _require_int(obj["schema"], "schema")
    if version != SCHEMA_VERSION:
        raise InputError("schema.version", f"unsupported schema version {version}", "schema")
    surface = _parse_surface(obj["surface"], "surface")
    xi = _parse_curve_class(obj["curve_class"], "curve_class", surface)
    scheme = _parse_scheme(obj["scheme"], "scheme") if "scheme" in obj else None
    overrides = (
        _parse_overrides(obj["overrides"], "overrides")
        if "overrides" in obj
        else Overrides()
    )
    return InputDocument(surface, xi, scheme, overrides, obj)


def parse_document(text: str | bytes) -> InputDocument:
    """Parse and validate one JSON input document."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            "syntax.json", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        )
    return parse_document_obj(obj)
