"""Canonical enumeration of oval forests and candidate schemes.

Forests are generated directly in canonical form (multisets of
canonical trees, a tree being the sorted tuple of its children), so
the stream is duplicate-free by construction and the per-size counts
follow the unlabeled-rooted-forest sequence 1, 1, 2, 4, 9, 20, 48, ...

Scheme enumeration fills each real-part component with forests (and,
on tori, parallel essential-circle families whose annulus sequence is
canonicalized under rotation and reflection), drops empty components,
and streams every scheme through the verdict engine for a census.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from .errors import InputError
from .schemes import (
    Forest,
    RealScheme,
    SchemeComponent,
    forest_size,
    projective_plane_component,
    orientable_component,
    sphere_component,
    torus_component,
)
from .surfaces import CurveClass, SurfaceModel
from .verdict import Verdict, check

MAX_OVALS = 12
MAX_ESSENTIAL = 8


def _partitions(n: int, largest: int):
    """Nonincreasing partitions of n with parts <= largest."""
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


@lru_cache(maxsize=None)
def trees_exact(n: int) -> tuple[Forest, ...]:
    """Canonical rooted trees with n nodes, encoded as children forests."""
    if n < 1:
        return ()
    return forests_exact(n - 1)


@lru_cache(maxsize=None)
def forests_exact(n: int) -> tuple[Forest, ...]:
    """Canonical unordered forests with exactly n nodes, sorted."""
    if n == 0:
        return ((),)
    out = set()
    for partition in _partitions(n, n):
        sizes: dict[int, int] = {}
        for s in partition:
            sizes[s] = sizes.get(s, 0) + 1
        choices = [
            combinations_with_replacement(trees_exact(s), k)
            for s, k in sorted(sizes.items())
        ]

        def build(level: int, acc: tuple):
            if level == len(choices):
                out.add(tuple(sorted(acc)))
                return
            for combo in choices[level]:
                build(level + 1, acc + tuple(combo))

        build(0, ())
    return tuple(sorted(out))


def enumerate_forests(n_max: int):
    """All canonical forests with 0..n_max ovals, duplicate-free."""
    if n_max > MAX_OVALS:
        raise InputError(
            "enumerate.cap", f"forest enumeration is capped at {MAX_OVALS} ovals"
        )
    if n_max < 0:
        raise InputError("enumerate.cap", "n_max must be >= 0")
    for n in range(n_max + 1):
        yield from forests_exact(n)


@dataclass(frozen=True)
class ComponentTemplate:
    topology: str  # sphere | torus | projective_plane | orientable_genus
    odd_branch: bool = False
    genus: int = 0


@dataclass(frozen=True)
class EnumerationLimits:
    max_ovals: int = 8
    max_essential_circles: int = 4
    component_templates: tuple[ComponentTemplate, ...] = ()

    def __post_init__(self):
        if not 1 <= self.max_ovals <= MAX_OVALS:
            raise InputError(
                "enumerate.cap", f"max_ovals must be in 1..{MAX_OVALS}"
            )
        if not 0 <= self.max_essential_circles <= MAX_ESSENTIAL:
            raise InputError(
                "enumerate.cap",
                f"max_essential_circles must be in 0..{MAX_ESSENTIAL}",
            )


def _templates_for(surface: SurfaceModel, xi: CurveClass) -> tuple[ComponentTemplate, ...]:
    if surface.real_part is None:
        raise InputError(
            "enumerate.real_part",
            "surface carries no real-part descriptor",
            "surface.real_part",
        )
    templates = []
    for part in surface.real_part:
        odd = False
        if part.topology == "projective_plane" and surface.family == "plane":
            odd = xi.coords[0] % 2 == 1  # odd degree forces the one-sided branch
        templates.append(ComponentTemplate(part.topology, odd, part.genus))
    return tuple(templates)


def _component_fillings(
    template: ComponentTemplate, limits: EnumerationLimits
) -> list[SchemeComponent | None]:
    """Every way to fill one template with at most max_ovals ovals.

    ``None`` stands for the empty filling (component does not meet the
    curve and is omitted from the scheme).
    """
    n = limits.max_ovals
    out: list[SchemeComponent | None] = []
    if template.topology == "torus":
        for forest in enumerate_forests(n):
            out.append(torus_component(0, ovals=forest) if forest else None)
        for ell in range(1, limits.max_essential_circles + 1):
            seen = set()
            for total in range(0, n + 1):
                for split in _annulus_splits(total, ell):
                    comp = torus_component(ell, annuli=split)
                    if comp.annuli in seen:
                        continue
                    seen.add(comp.annuli)
                    out.append(comp)
        return out
    for forest in enumerate_forests(n):
        if not forest and not (
            template.topology == "projective_plane" and template.odd_branch
        ):
            out.append(None)
            continue
        if template.topology == "sphere":
            out.append(sphere_component(forest))
        elif template.topology == "projective_plane":
            out.append(projective_plane_component(forest, template.odd_branch))
        elif template.topology == "orientable_genus":
            out.append(orientable_component(template.genus, forest))
        else:
            raise InputError(
                "enumerate.topology", f"cannot enumerate on {template.topology!r}"
            )
    return out


def _annulus_splits(total: int, ell: int):
    """All ell-tuples of forests with ``total`` ovals altogether."""
    if ell == 1:
        for forest in forests_exact(total):
            yield (forest,)
        return
    for first in range(total + 1):
        for forest in forests_exact(first):
            for rest in _annulus_splits(total - first, ell - 1):
                yield (forest,) + rest


def enumerate_schemes(
    surface: SurfaceModel, xi: CurveClass, limits: EnumerationLimits | None = None
):
    """Stream all candidate schemes (curve type unknown), canonical and
    duplicate-free, for the surface's real-part templates."""
    limits = limits or EnumerationLimits()
    templates = (
        limits.component_templates
        if limits.component_templates
        else _templates_for(surface, xi)
    )
    per_template = [_component_fillings(t, limits) for t in templates]

    seen = set()

    def assemble(level: int, chosen: tuple[SchemeComponent, ...], ovals: int):
        if level == len(per_template):
            if not chosen:
                return
            scheme = RealScheme(chosen, "unknown")
            key = scheme.canonical_key()
            if key in seen:
                return
            seen.add(key)
            yield scheme
            return
        for filling in per_template[level]:
            if filling is None:
                yield from assemble(level + 1, chosen, ovals)
                continue
            extra = sum(
                forest_size(f) for f in (filling.ovals,) + filling.annuli
            )
            if ovals + extra > limits.max_ovals:
                continue
            yield from assemble(level + 1, chosen + (filling,), ovals + extra)

    yield from assemble(0, (), 0)


@dataclass(frozen=True)
class CensusRow:
    scheme: RealScheme
    verdict: Verdict


@dataclass
class CensusSummary:
    admissible: int = 0
    prohibited: int = 0
    conditional: int = 0

    def add(self, verdict: Verdict):
        if verdict.final == "admissible":
            self.admissible += 1
        elif verdict.final == "prohibited":
            self.prohibited += 1
        else:
            self.conditional += 1

    @property
    def total(self) -> int:
        return self.admissible + self.prohibited + self.conditional


def census(
    surface: SurfaceModel,
    xi: CurveClass,
    limits: EnumerationLimits | None = None,
    rho: int | None = None,
    pi1_abelian: bool | None = None,
):
    """Pair every enumerated scheme with its verdict (a generator)."""
    for scheme in enumerate_schemes(surface, xi, limits):
        yield CensusRow(scheme, check(surface, xi, scheme, rho, pi1_abelian))
