"""Catalogued surface families and curve-class arithmetic.

A surface is described by its second Betti number, signature, and an
integer intersection lattice with a distinguished canonical class; a
curve class is an integer vector in the lattice basis.  Four families
are built in:

* ``plane``          -- b2=1, sigma=1, Gram [[1]], K=(-3)
* ``quadric``        -- b2=2, sigma=0, hyperbolic Gram, K=(-2,-2)
* ``hirzebruch(e)``  -- b2=2, sigma=0, basis (Y,F), Gram [[e,1],[1,0]],
                        K=(-2, e-2)
* ``del_pezzo(d)``   -- b2=10-d, sigma=d-8; classes are multiples n of
                        the anticanonical class and all pairings go
                        through the rules xi^2 = n^2 d, xi.K = -n d,
                        so no blowup basis is ever fixed.

On the degree-9 del Pezzo (the plane) the anticanonical class is three
times the line class, and on the degree-8 one (the product of two
lines) it is twice a primitive class, so the divisibility of n*c1 is
3n and 2n respectively; for degrees <= 7 the anticanonical class is
primitive.  A degree-3n plane curve can therefore be entered either as
``plane`` with coords (3n) or as ``del_pezzo(9)`` with multiple n, and
both report the same divisibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InputError

CATALOG_FAMILIES = ("plane", "quadric", "hirzebruch", "del_pezzo", "custom")


def _det_int(rows):
    """Determinant of a small integer matrix (fraction-free Bareiss)."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class IntersectionLattice:
    rank: int
    gram: tuple[tuple[int, ...], ...]
    basis_labels: tuple[str, ...]

    def __post_init__(self):
        if self.rank < 1 or len(self.gram) != self.rank:
            raise InputError("lattice.rank", "gram must be rank x rank")
        for row in self.gram:
            if len(row) != self.rank:
                raise InputError("lattice.shape", "gram must be square")
        for i in range(self.rank):
            for j in range(self.rank):
                if self.gram[i][j] != self.gram[j][i]:
                    raise InputError("lattice.symmetry", "gram must be symmetric")
        if len(self.basis_labels) != self.rank:
            raise InputError("lattice.labels", "one label per basis vector")

    def pair(self, x: tuple[int, ...], y: tuple[int, ...]) -> int:
        if len(x) != self.rank or len(y) != self.rank:
            raise InputError(
                "class.dimension",
                f"coordinate vector length must be {self.rank}",
            )
        return sum(
            x[i] * self.gram[i][j] * y[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def determinant(self) -> int:
        return _det_int(self.gram)

    def is_unimodular(self) -> bool:
        return abs(self.determinant()) == 1


@dataclass(frozen=True)
class RealPartComponent:
    """Closed-surface descriptor for one component of the real part."""

    topology: str  # sphere | torus | projective_plane | orientable_genus
    orientable: bool
    euler_characteristic: int
    genus: int = 0  # orientable_genus only


def real_part_component(topology: str, genus: int = 0) -> RealPartComponent:
    if topology == "sphere":
        return RealPartComponent("sphere", True, 2)
    if topology == "torus":
        return RealPartComponent("torus", True, 0)
    if topology == "projective_plane":
        return RealPartComponent("projective_plane", False, 1)
    if topology == "orientable_genus":
        if genus < 0:
            raise InputError("real_part.genus", "genus must be >= 0")
        return RealPartComponent("orientable_genus", True, 2 - 2 * genus, genus)
    raise InputError("real_part.topology", f"unknown real-part topology {topology!r}")


@dataclass(frozen=True)
class SurfaceModel:
    family: str
    b2: int
    sigma: int
    lattice: IntersectionLattice | None
    canonical: tuple[int, ...] | None
    degree: int | None = None  # del_pezzo d
    e: int | None = None  # hirzebruch parameter
    real_part: tuple[RealPartComponent, ...] | None = None
    pi1_abelian_default: bool = True

    def __post_init__(self):
        if abs(self.sigma) > self.b2:
            raise InputError("surface.signature", "|sigma| must not exceed b2")
        if self.lattice is not None and self.lattice.rank != self.b2:
            raise InputError("surface.b2", "b2 must equal the lattice rank")

    def describe(self) -> str:
        if self.family == "hirzebruch":
            return f"hirzebruch(e={self.e})"
        if self.family == "del_pezzo":
            return f"del_pezzo(d={self.degree})"
        return self.family


def plane(real_part=None) -> SurfaceModel:
    lattice = IntersectionLattice(1, ((1,),), ("H",))
    if real_part is None:
        real_part = (real_part_component("projective_plane"),)
    return SurfaceModel("plane", 1, 1, lattice, (-3,), real_part=tuple(real_part))


def quadric(real_part=None) -> SurfaceModel:
    lattice = IntersectionLattice(2, ((0, 1), (1, 0)), ("E", "F"))
    if real_part is not None:
        real_part = tuple(real_part)
    return SurfaceModel("quadric", 2, 0, lattice, (-2, -2), real_part=real_part)


def hirzebruch(e: int, real_part=None) -> SurfaceModel:
    if e < 0:
        raise InputError("surface.e", "hirzebruch parameter e must be >= 0")
    lattice = IntersectionLattice(2, ((e, 1), (1, 0)), ("Y", "F"))
    if real_part is not None:
        real_part = tuple(real_part)
    return SurfaceModel(
        "hirzebruch", 2, 0, lattice, (-2, e - 2), e=e, real_part=real_part
    )


def del_pezzo(d: int, real_part=None) -> SurfaceModel:
    if not 1 <= d <= 9:
        raise InputError("surface.d", "del Pezzo degree d must be in 1..9")
    if real_part is not None:
        real_part = tuple(real_part)
    return SurfaceModel(
        "del_pezzo", 10 - d, d - 8, None, None, degree=d, real_part=real_part
    )


def custom(
    gram,
    canonical,
    sigma: int,
    basis_labels=None,
    real_part=None,
    pi1_abelian: bool = False,
) -> SurfaceModel:
    rows = tuple(tuple(int(v) for v in row) for row in gram)
    rank = len(rows)
    if basis_labels is None:
        basis_labels = tuple(f"e{i}" for i in range(rank))
    lattice = IntersectionLattice(rank, rows, tuple(basis_labels))
    if real_part is not None:
        real_part = tuple(real_part)
    return SurfaceModel(
        "custom",
        rank,
        sigma,
        lattice,
        tuple(int(v) for v in canonical),
        real_part=real_part,
        pi1_abelian_default=pi1_abelian,
    )


@dataclass(frozen=True)
class CurveClass:
    """Integer homology class of the curve; for del Pezzo surfaces the
    single coordinate is the multiple n of the anticanonical class."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if not self.coords or all(v == 0 for v in self.coords):
            raise InputError("class.zero", "curve class must be nonzero")

    @property
    def n_multiple(self) -> int:
        return self.coords[0]


def anticanonical_content(d: int) -> int:
    """Divisibility of the anticanonical class on the degree-d del Pezzo."""
    if d == 9:
        return 3
    if d == 8:
        return 2
    return 1


def pairing(surface: SurfaceModel, x: CurveClass, y: CurveClass) -> int:
    """Intersection pairing of two classes on the surface."""
    if surface.family == "del_pezzo":
        if len(x.coords) != 1 or len(y.coords) != 1:
            raise InputError(
                "class.dimension", "del Pezzo classes are a single multiple n"
            )
        return x.coords[0] * y.coords[0] * surface.degree
    return surface.lattice.pair(x.coords, y.coords)


def self_intersection(surface: SurfaceModel, xi: CurveClass) -> int:
    return pairing(surface, xi, xi)


def canonical_pairing(surface: SurfaceModel, xi: CurveClass) -> int:
    """Pairing of the class with the canonical class."""
    if surface.family == "del_pezzo":
        return -xi.coords[0] * surface.degree
    if surface.canonical is None:
        raise InputError(
            "surface.canonical", "surface carries no canonical-class data"
        )
    return surface.lattice.pair(xi.coords, surface.canonical)


def genus(surface: SurfaceModel, xi: CurveClass) -> int:
    """Genus of a nonsingular curve in the class, by adjunction."""
    if surface.family == "del_pezzo":
        if xi.coords[0] < 1:
            raise InputError("class.range", "del Pezzo multiple n must be >= 1")
    elif surface.family in ("plane", "quadric", "hirzebruch"):
        if any(v < 1 for v in xi.coords):
            raise InputError(
                "class.range",
                f"{surface.family} curve classes need positive coordinates",
            )
    twice = self_intersection(surface, xi) + canonical_pairing(surface, xi)
    if twice % 2 != 0:
        raise InputError(
            "class.adjunction", "adjunction value is not an integer"
        )
    g = twice // 2 + 1
    if g < 0:
        raise InputError(
            "class.adjunction",
            "negative adjunction genus: class is not a nonsingular-curve class",
        )
    return g


def odd_prime_power_factors(m: int) -> tuple[tuple[int, int, int], ...]:
    """Exact odd prime-power divisors (p, alpha, p^alpha) of odd m."""
    out = []
    rest = m
    p = 3
    while p * p <= rest:
        if rest % p == 0:
            alpha = 0
            while rest % p == 0:
                rest //= p
                alpha += 1
            out.append((p, alpha, p**alpha))
        p += 2
    if rest > 1:
        out.append((rest, 1, rest))
    return tuple(out)


@dataclass(frozen=True)
class DivisibilityData:
    n: int  # largest integer dividing the class
    m: int  # maximal odd divisor of n
    candidates: tuple[tuple[int, int, int], ...]  # (p, alpha, h=p^alpha)
    harnack_only: bool  # m == 1: the covering bounds do not apply

    def candidate_hs(self) -> tuple[int, ...]:
        return tuple(h for _, _, h in self.candidates)


def divisibility(xi: CurveClass, surface: SurfaceModel | None = None) -> DivisibilityData:
    """Divisibility of the class: gcd of coordinates (basis invariant).

    For del Pezzo surfaces the stored coordinate is the anticanonical
    multiple n, so the true divisibility is n times the divisibility of
    the anticanonical class itself.
    """
    n = 0
    for v in xi.coords:
        n = gcd(n, abs(v))
    if surface is not None and surface.family == "del_pezzo":
        n *= anticanonical_content(surface.degree)
    m = n
    while m % 2 == 0:
        m //= 2
    return DivisibilityData(n, m, odd_prime_power_factors(m), harnack_only=(m == 1))
