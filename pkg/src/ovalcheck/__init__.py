"""Exact checks for real schemes of curves on surfaces.

The package bounds the number of hyperbolic (k-) and non-elliptic
(k- + k0) membranes of a real scheme through the signature of a
distinguished eigenspace of a cyclic branched covering, refutes
equality cases by an exhaustive sign search over Z_p, and enumerates
all admissible schemes up to a size cap.  All arithmetic is exact.
"""

from .bounds import (
    BoundReport,
    CoveringInvariants,
    best_bounds,
    bound_base,
    closed_form_delpezzo,
    closed_form_hirzebruch,
    closed_form_plane,
    closed_form_quadric,
    covering_invariants,
    rhs_hyperbolic,
    rhs_non_elliptic,
)
from .enumeration import (
    EnumerationLimits,
    census,
    enumerate_forests,
    enumerate_schemes,
)
from .errors import InputError, OvalcheckError
from .schemes import (
    MembraneSummary,
    RealScheme,
    SchemeComponent,
    boundary_matrix,
    canonical_forest,
    expand_component,
    explicit_component,
    membranes,
    orientable_component,
    projective_plane_component,
    sphere_component,
    torus_component,
)
from .surfaces import (
    CurveClass,
    DivisibilityData,
    IntersectionLattice,
    SurfaceModel,
    custom,
    del_pezzo,
    divisibility,
    genus,
    hirzebruch,
    pairing,
    plane,
    quadric,
    self_intersection,
)
from .verdict import (
    Verdict,
    check,
    extremality_type_I,
    extremality_type_II,
    harnack_check,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CoveringInvariants",
    "CurveClass",
    "DivisibilityData",
    "EnumerationLimits",
    "InputError",
    "IntersectionLattice",
    "MembraneSummary",
    "OvalcheckError",
    "RealScheme",
    "SchemeComponent",
    "SurfaceModel",
    "Verdict",
    "best_bounds",
    "bound_base",
    "boundary_matrix",
    "canonical_forest",
    "census",
    "check",
    "closed_form_delpezzo",
    "closed_form_hirzebruch",
    "closed_form_plane",
    "closed_form_quadric",
    "covering_invariants",
    "custom",
    "del_pezzo",
    "divisibility",
    "enumerate_forests",
    "enumerate_schemes",
    "expand_component",
    "explicit_component",
    "extremality_type_I",
    "extremality_type_II",
    "genus",
    "harnack_check",
    "hirzebruch",
    "membranes",
    "orientable_component",
    "pairing",
    "plane",
    "projective_plane_component",
    "quadric",
    "rhs_hyperbolic",
    "rhs_non_elliptic",
    "self_intersection",
    "sphere_component",
    "torus_component",
]
