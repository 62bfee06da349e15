"""Visual angle metric of the unit disk, with hyperbolic-geometry helpers,
quasiregular distortion bounds and a brute-force verification oracle."""

from .errors import (
    DiskMetricsError,
    DegenerateAngle,
    ParallelLines,
    CollinearPoints,
    DegenerateLine,
    EqualModulus,
    CollinearWithOrigin,
    PoleInput,
    OutsideDisk,
    CoincidentPoints,
    DegenerateQuadruple,
    NotCollinear,
    NotEqualModulus,
    DegenerateLeadingCoefficient,
    DomainError,
    ConvergenceFailure,
    ChordExhausted,
    ParseError,
)
from .geom_core import (
    DEFAULT_TOL,
    Circle,
    ToleranceConfig,
    angle_at,
    apply_inversion,
    circumcenter,
    inversion_center,
    line_intersection,
    orthocircle_boundary_points,
    reflect_in_line,
)
from .hyperbolic import (
    DiskAutomorphism,
    ahlfors_bracket,
    apply_automorphism,
    chord_midpoint,
    cross_ratio,
    geodesic_endpoints,
    hyperbolic_midpoint,
    mobius_Ta,
    rho,
)
from .vam import (
    VamResult,
    vam,
    vam_bounds,
    vam_equal_modulus,
    vam_hmid,
    vam_orthocircle,
    vam_quadratic,
    vam_radial,
    vam_sin,
    vam_via_rho,
)
from .distortion import DistortionContext, elliptic_K, main3_bound, mu, mu_inverse, phi_K, schwarz_rho_bound
from .oracle import OracleReport, evenly_separated_sequence, random_pair, vam_bruteforce

__version__ = "0.1.0"

__all__ = [
    "DiskMetricsError",
    "DegenerateAngle",
    "ParallelLines",
    "CollinearPoints",
    "DegenerateLine",
    "EqualModulus",
    "CollinearWithOrigin",
    "PoleInput",
    "OutsideDisk",
    "CoincidentPoints",
    "DegenerateQuadruple",
    "NotCollinear",
    "NotEqualModulus",
    "DegenerateLeadingCoefficient",
    "DomainError",
    "ConvergenceFailure",
    "ChordExhausted",
    "ParseError",
    "DEFAULT_TOL",
    "Circle",
    "ToleranceConfig",
    "angle_at",
    "apply_inversion",
    "circumcenter",
    "inversion_center",
    "line_intersection",
    "orthocircle_boundary_points",
    "reflect_in_line",
    "DiskAutomorphism",
    "ahlfors_bracket",
    "apply_automorphism",
    "chord_midpoint",
    "cross_ratio",
    "geodesic_endpoints",
    "hyperbolic_midpoint",
    "mobius_Ta",
    "rho",
    "VamResult",
    "vam",
    "vam_bounds",
    "vam_equal_modulus",
    "vam_hmid",
    "vam_orthocircle",
    "vam_quadratic",
    "vam_radial",
    "vam_sin",
    "vam_via_rho",
    "DistortionContext",
    "elliptic_K",
    "main3_bound",
    "mu",
    "mu_inverse",
    "phi_K",
    "schwarz_rho_bound",
    "OracleReport",
    "evenly_separated_sequence",
    "random_pair",
    "vam_bruteforce",
]
