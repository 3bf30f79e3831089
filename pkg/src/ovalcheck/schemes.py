"""Real schemes and their expansion into membranes.

A scheme lists the components of the real part that meet the curve,
each with the combinatorics of the curve's circles on it: a forest of
nested ovals, optionally a family of parallel essential circles (torus
only), optionally the one-sided branch (projective plane only).  An
escape hatch accepts an explicit region list for anything the
combinatorial catalog cannot express.

Expanding a component cuts it along the circles into regions.  Each
region carries an Euler characteristic, an orientability bit, and its
oriented boundary incidences.  Orientability is judged on the closure
of the region in the component: the region around the one-sided branch
closes up to a Moebius-like subsurface and is therefore nonorientable
even though the open region is planar.  Nonorientable regions carry no
class over Z_p for odd p, so they are excluded from the membrane list
(but kept for the Euler bookkeeping); in particular the row of the
one-sided branch is zero in every column of the boundary matrix.

Region rules (r = number of forest roots, c = children of an oval):

* sphere               -- outer region chi = 2 - r; oval regions chi = 1 - c
* torus, no essentials -- outer chi = -r; oval regions as above
* torus, l essentials  -- l annulus regions, chi = -r_j each
* projective plane     -- region at the one-sided branch (or the outer
                          region if there is none) is nonorientable,
                          chi = 1 - r
* orientable genus g   -- outer chi = 2 - 2g - r
* explicit             -- caller-supplied regions, validated

Every circle ends up with exactly two side incidences; the Euler
characteristics of the regions of a component always sum to the Euler
characteristic of the component.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError

Forest = tuple  # nested tuples: a forest is a tuple of ovals, an oval
#                 is the tuple of its children


def canonical_forest(forest) -> Forest:
    """Recursively sorted encoding; equal encodings = same nesting."""
    return tuple(sorted(canonical_forest(child) for child in forest))


def forest_size(forest) -> int:
    return sum(1 + forest_size(child) for child in forest)


def render_forest(forest) -> str:
    """Compact text form: empty ovals are counted, nests spelled out."""
    if not forest:
        return "-"
    parts = []
    empties = sum(1 for t in forest if not t)
    if empties:
        parts.append(str(empties))
    for tree in forest:
        if tree:
            parts.append(f"1<{render_forest(tree)}>")
    return " ".join(parts)


TOPOLOGIES = ("sphere", "torus", "projective_plane", "orientable_genus", "explicit")


@dataclass(frozen=True, order=True)
class ExplicitRegion:
    chi: int
    orientable: bool
    boundary: tuple[tuple[str, int], ...]  # (circle id, +1/-1) incidences


@dataclass(frozen=True)
class SchemeComponent:
    topology: str
    ovals: Forest = ()
    annuli: tuple[Forest, ...] = ()
    essential_circles: int = 0
    odd_branch: bool = False
    genus: int = 0
    circles: tuple[str, ...] = ()  # explicit only
    regions: tuple[ExplicitRegion, ...] = ()  # explicit only
    orientable: bool = True  # explicit only: orientability of the component
    chi: int = 0  # explicit only: Euler characteristic of the component

    def __post_init__(self):
        # construction always canonicalizes, so equal nestings compare equal
        object.__setattr__(self, "ovals", canonical_forest(self.ovals))
        if self.annuli:
            annuli = tuple(canonical_forest(f) for f in self.annuli)
            object.__setattr__(self, "annuli", _necklace_min(annuli))

    def circle_count(self) -> int:
        if self.topology == "explicit":
            return len(self.circles)
        count = forest_size(self.ovals) + sum(forest_size(f) for f in self.annuli)
        count += self.essential_circles
        if self.odd_branch:
            count += 1
        return count

    def canonical_key(self):
        if self.topology == "torus" and self.essential_circles > 0:
            return ("torus", self.essential_circles, _necklace_min(self.annuli))
        if self.topology == "explicit":
            return ("explicit", self.circles, self.regions)
        return (self.topology, self.genus, self.odd_branch, self.ovals)


def _necklace_min(annuli: tuple[Forest, ...]) -> tuple[Forest, ...]:
    """Minimal representative under rotation and reflection."""
    seqs = [annuli[i:] + annuli[:i] for i in range(len(annuli))]
    rev = tuple(reversed(annuli))
    seqs += [rev[i:] + rev[:i] for i in range(len(annuli))]
    return min(seqs)


def sphere_component(ovals) -> SchemeComponent:
    return SchemeComponent("sphere", ovals=canonical_forest(ovals))


def torus_component(essential_circles: int = 0, ovals=(), annuli=None) -> SchemeComponent:
    if essential_circles < 0:
        raise InputError("scheme.essential", "essential circle count must be >= 0")
    if essential_circles == 0:
        if annuli:
            raise InputError(
                "scheme.essential", "annulus forests need essential circles"
            )
        return SchemeComponent("torus", ovals=canonical_forest(ovals))
    if ovals:
        raise InputError(
            "scheme.essential",
            "with essential circles the ovals go into per-annulus forests",
        )
    annuli = tuple(canonical_forest(f) for f in (annuli or ()))
    if len(annuli) != essential_circles:
        raise InputError(
            "scheme.essential",
            f"{essential_circles} essential circles cut the torus into "
            f"{essential_circles} annuli; got {len(annuli)} forests",
        )
    return SchemeComponent(
        "torus", annuli=_necklace_min(annuli), essential_circles=essential_circles
    )


def projective_plane_component(ovals=(), odd_branch: bool = False) -> SchemeComponent:
    return SchemeComponent(
        "projective_plane", ovals=canonical_forest(ovals), odd_branch=odd_branch
    )


def orientable_component(genus: int, ovals=()) -> SchemeComponent:
    if genus < 0:
        raise InputError("scheme.genus", "genus must be >= 0")
    return SchemeComponent("orientable_genus", ovals=canonical_forest(ovals), genus=genus)


def explicit_component(circles, regions, orientable: bool) -> SchemeComponent:
    circles = tuple(circles)
    if len(set(circles)) != len(circles):
        raise InputError("scheme.explicit", "duplicate circle ids")
    regs = tuple(regions)
    if not regs:
        raise InputError("scheme.explicit", "explicit component needs regions")
    incidence: dict[str, int] = {c: 0 for c in circles}
    total_chi = 0
    for r in regs:
        if not r.boundary:
            raise InputError(
                "scheme.explicit", "every region must border at least one circle"
            )
        total_chi += r.chi
        for cid, sign in r.boundary:
            if cid not in incidence:
                raise InputError(
                    "scheme.explicit", f"boundary uses unknown circle id {cid!r}"
                )
            if sign not in (1, -1):
                raise InputError("scheme.explicit", "incidence signs must be +1/-1")
            incidence[cid] += 1
    bad = [c for c, k in incidence.items() if k != 2]
    if bad:
        raise InputError(
            "scheme.explicit",
            f"each circle needs exactly two side incidences; bad: {bad}",
        )
    if total_chi > 2:
        raise InputError(
            "scheme.explicit", "region Euler characteristics sum above 2"
        )
    return SchemeComponent(
        "explicit",
        circles=circles,
        regions=regs,
        orientable=orientable,
        chi=total_chi,
    )


@dataclass(frozen=True)
class RealScheme:
    components: tuple[SchemeComponent, ...]
    curve_type: str = "unknown"  # "I" | "II" | "unknown"

    def __post_init__(self):
        if self.curve_type not in ("I", "II", "unknown"):
            raise InputError("scheme.type", "curve type must be I, II, or unknown")
        if not self.components:
            raise InputError("scheme.components", "scheme needs at least one component")
        # canonical component order makes verdicts independent of input order
        object.__setattr__(
            self,
            "components",
            tuple(sorted(self.components, key=lambda c: c.canonical_key())),
        )
        if all(c.circle_count() == 0 for c in self.components):
            raise InputError("scheme.empty", "scheme must contain at least one circle")
        for i, c in enumerate(self.components):
            if c.circle_count() == 0:
                raise InputError(
                    "scheme.empty",
                    f"component {i} carries no circle; components not meeting "
                    "the curve are simply omitted",
                )

    def circle_count(self) -> int:
        return sum(c.circle_count() for c in self.components)

    def delta(self) -> int | None:
        if self.curve_type == "I":
            return 1
        if self.curve_type == "II":
            return 0
        return None

    def canonical_key(self):
        return tuple(sorted(c.canonical_key() for c in self.components))

    def with_type(self, curve_type: str) -> "RealScheme":
        return RealScheme(self.components, curve_type)


def component_euler(comp: SchemeComponent) -> int:
    if comp.topology == "sphere":
        return 2
    if comp.topology == "torus":
        return 0
    if comp.topology == "projective_plane":
        return 1
    if comp.topology == "orientable_genus":
        return 2 - 2 * comp.genus
    return comp.chi


def component_orientable(comp: SchemeComponent) -> bool:
    if comp.topology == "projective_plane":
        return False
    if comp.topology == "explicit":
        return comp.orientable
    return True


@dataclass(frozen=True)
class Region:
    label: str
    chi: int
    orientable: bool
    boundary: tuple[tuple[str, int], ...]
    component_index: int


def _forest_regions(forest, prefix: str, counter: list) -> tuple[list[Region], list[str]]:
    """Regions inside the ovals of a canonical forest, plus root ids."""
    regions: list[Region] = []
    roots: list[str] = []

    def walk(tree) -> str:
        name = f"{prefix}o{counter[0]}"
        counter[0] += 1
        child_names = [walk(child) for child in tree]
        boundary = [(name, 1)] + [(c, -1) for c in child_names]
        regions.append(
            Region(f"in({name})", 1 - len(tree), True, tuple(boundary), counter[1])
        )
        return name

    for tree in forest:
        roots.append(walk(tree))
    return regions, roots


def expand_component(comp: SchemeComponent, component_index: int = 0) -> tuple[Region, ...]:
    """Cut one component along its circles into regions."""
    prefix = f"{component_index}:"
    counter = [0, component_index]

    if comp.topology == "explicit":
        return tuple(
            Region(
                f"{prefix}R{i}",
                r.chi,
                r.orientable,
                tuple((f"{prefix}{cid}", sign) for cid, sign in r.boundary),
                component_index,
            )
            for i, r in enumerate(comp.regions)
        )

    if comp.topology == "torus" and comp.essential_circles > 0:
        ell = comp.essential_circles
        essentials = [f"{prefix}s{j}" for j in range(ell)]
        regions: list[Region] = []
        for j, forest in enumerate(comp.annuli):
            inner, roots = _forest_regions(forest, prefix, counter)
            regions.extend(inner)
            boundary = [(essentials[j], 1), (essentials[(j + 1) % ell], -1)]
            boundary += [(r, -1) for r in roots]
            regions.append(
                Region(
                    f"{prefix}annulus{j}",
                    -len(roots),
                    True,
                    tuple(boundary),
                    component_index,
                )
            )
        return tuple(regions)

    regions, roots = _forest_regions(comp.ovals, prefix, counter)
    outer_boundary = [(r, -1) for r in roots]
    nroots = len(roots)
    outer_label = f"{prefix}outer"
    if comp.topology == "sphere":
        outer = Region(outer_label, 2 - nroots, True, tuple(outer_boundary), component_index)
    elif comp.topology == "torus":
        outer = Region(outer_label, -nroots, True, tuple(outer_boundary), component_index)
    elif comp.topology == "orientable_genus":
        outer = Region(
            outer_label,
            2 - 2 * comp.genus - nroots,
            True,
            tuple(outer_boundary),
            component_index,
        )
    elif comp.topology == "projective_plane":
        if comp.odd_branch:
            j_circle = f"{prefix}J"
            outer_boundary = [(j_circle, 1), (j_circle, -1)] + outer_boundary
        outer = Region(
            f"{prefix}moebius" if comp.odd_branch else outer_label,
            1 - nroots,
            False,
            tuple(outer_boundary),
            component_index,
        )
    else:
        raise InputError("scheme.topology", f"unknown topology {comp.topology!r}")
    return tuple(regions) + (outer,)


@dataclass(frozen=True)
class Membrane:
    label: str
    chi: int
    kind: str  # elliptic | parabolic | hyperbolic
    boundary: tuple[tuple[str, int], ...]
    component_index: int


@dataclass(frozen=True)
class YComponent:
    orientable: bool
    chi: int


@dataclass(frozen=True)
class MembraneSummary:
    regions: tuple[Region, ...]
    membranes: tuple[Membrane, ...]
    excluded_nonorientable: int
    k_plus: int
    k_zero: int
    k_minus: int
    components_Y: tuple[YComponent, ...]
    circles: tuple[str, ...]

    @property
    def circle_count(self) -> int:
        return len(self.circles)

    def rho_bound(self, p: int) -> int:
        """Orientable components with Euler characteristic divisible by p;
        an upper bound for the inclusion-kernel dimension rho."""
        return sum(
            1 for y in self.components_Y if y.orientable and y.chi % p == 0
        )

    def rho_bound_per_p(self, primes) -> dict[int, int]:
        return {p: self.rho_bound(p) for p in primes}


def _kind(chi: int) -> str:
    if chi > 0:
        return "elliptic"
    if chi == 0:
        return "parabolic"
    return "hyperbolic"


def _circle_order(regions) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for region in regions:
        for cid, _ in region.boundary:
            seen.setdefault(cid)
    return tuple(seen)


def membranes(scheme: RealScheme) -> MembraneSummary:
    """Expand every component and classify the orientable regions."""
    all_regions: list[Region] = []
    components_y: list[YComponent] = []
    for idx, comp in enumerate(scheme.components):
        regions = expand_component(comp, idx)
        total = sum(r.chi for r in regions)
        expected = component_euler(comp)
        if total != expected:
            raise InputError(
                "scheme.euler",
                f"component {idx}: region Euler sum {total} != {expected}",
            )
        incidence: dict[str, int] = {}
        for r in regions:
            for cid, _ in r.boundary:
                incidence[cid] = incidence.get(cid, 0) + 1
        bad = [c for c, k in incidence.items() if k != 2]
        if bad:
            raise InputError(
                "scheme.incidence",
                f"component {idx}: circles without two side incidences: {bad}",
            )
        all_regions.extend(regions)
        components_y.append(YComponent(component_orientable(comp), expected))

    membrane_list = []
    excluded = 0
    for r in all_regions:
        if r.orientable:
            membrane_list.append(
                Membrane(r.label, r.chi, _kind(r.chi), r.boundary, r.component_index)
            )
        else:
            excluded += 1
    return MembraneSummary(
        regions=tuple(all_regions),
        membranes=tuple(membrane_list),
        excluded_nonorientable=excluded,
        k_plus=sum(1 for m in membrane_list if m.kind == "elliptic"),
        k_zero=sum(1 for m in membrane_list if m.kind == "parabolic"),
        k_minus=sum(1 for m in membrane_list if m.kind == "hyperbolic"),
        components_Y=tuple(components_y),
        circles=_circle_order(all_regions),
    )


@dataclass(frozen=True)
class BoundaryMatrix:
    """Oriented circle/membrane incidences reduced mod p.

    Rows follow ``circles``, columns follow ``membranes`` (orientable
    regions only).  A circle meeting the same membrane on both sides
    contributes +1-1 = 0.  Orientations are arbitrary but fixed; any
    reorientation only flips rows or columns, which the downstream
    feasibility search absorbs.
    """

    entries: tuple[tuple[int, ...], ...]
    circles: tuple[str, ...]
    membranes: tuple[str, ...]
    parabolic: tuple[bool, ...]
    p: int


def boundary_matrix(scheme: RealScheme, p: int) -> BoundaryMatrix:
    if p < 3 or p % 2 == 0:
        raise InputError("scheme.prime", "p must be an odd prime")
    summary = membranes(scheme)
    index = {cid: i for i, cid in enumerate(summary.circles)}
    rows = [[0] * len(summary.membranes) for _ in summary.circles]
    for j, mem in enumerate(summary.membranes):
        for cid, sign in mem.boundary:
            rows[index[cid]][j] = (rows[index[cid]][j] + sign) % p
    return BoundaryMatrix(
        entries=tuple(tuple(r) for r in rows),
        circles=summary.circles,
        membranes=tuple(m.label for m in summary.membranes),
        parabolic=tuple(m.kind == "parabolic" for m in summary.membranes),
        p=p,
    )
