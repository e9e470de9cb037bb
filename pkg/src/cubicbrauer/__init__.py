"""Exact arithmetic for the transcendental Brauer group of Kummer surfaces
attached to diagonal cubic curves a x^3 + b y^3 + c z^3 = 0 over Q.

The package computes the classification (trivial, Z/2, or Z/3) together
with everything it rests on: cube classes in Q*/(Q*)^3, residue symbols in
Z[omega], Hecke character values and the m(3) = 0 witness scan, the
Neron-Severi lattice action and its cyclic cohomology, p-adic local
solubility, and the 2-adic evaluation of the order-2 Brauer class.
"""

from .classify import (
    BrauerGroup,
    ClassificationReport,
    CurveSquareResult,
    Verdict,
    brauer_of_curve_square,
    brauer_of_jacobian_square,
    brauer_of_kummer_surface,
    cube_case_consistency,
    full_report,
    solubility_places,
)
from .cubeclass import (
    CubeClass,
    LambdaChoice,
    PrimitiveTriple,
    choose_lambda,
    cube_class,
    is_cube,
    normalize_triple,
)
from .eisenstein import (
    EisensteinInt,
    PrimaryPrime,
    SexticUnit,
    Splitting,
    cubic_symbol,
    primary_above,
    primary_associate,
    sextic_symbol,
    split_prime,
)
from .errors import DomainError
from .hecke import (
    CurveModel,
    HeckeValue,
    M3Certificate,
    OrderMembership,
    find_m3_witness,
    frobenius_trace,
    hecke_at_split_prime,
    in_order,
    jacobian_coefficient,
)
from .localarith import (
    CurvePointApprox,
    PadicApprox,
    beta_image,
    beta_surjective_at_2,
    diagonal_cubic_soluble,
    enumerate_curve_points,
    evaluate_beta,
    hilbert_symbol,
    is_cube_in_zp,
)
from .nslattice import (
    CMOrder,
    CohomologyResult,
    DivisorClass,
    EndElement,
    LatticeAction,
    cyclic_h1,
    intersection_pairing,
    inverse_graph,
    rho_action,
    rho_action_from_rosati,
    torsion_surjectivity_det,
    verify_a2_invariants,
)

__version__ = "0.1.0"

__all__ = [
    "BrauerGroup",
    "ClassificationReport",
    "CurveSquareResult",
    "Verdict",
    "brauer_of_curve_square",
    "brauer_of_jacobian_square",
    "brauer_of_kummer_surface",
    "cube_case_consistency",
    "full_report",
    "solubility_places",
    "CubeClass",
    "LambdaChoice",
    "PrimitiveTriple",
    "choose_lambda",
    "cube_class",
    "is_cube",
    "normalize_triple",
    "EisensteinInt",
    "PrimaryPrime",
    "SexticUnit",
    "Splitting",
    "cubic_symbol",
    "primary_above",
    "primary_associate",
    "sextic_symbol",
    "split_prime",
    "DomainError",
    "CurveModel",
    "HeckeValue",
    "M3Certificate",
    "OrderMembership",
    "find_m3_witness",
    "frobenius_trace",
    "hecke_at_split_prime",
    "in_order",
    "jacobian_coefficient",
    "CurvePointApprox",
    "PadicApprox",
    "beta_image",
    "beta_surjective_at_2",
    "diagonal_cubic_soluble",
    "enumerate_curve_points",
    "evaluate_beta",
    "hilbert_symbol",
    "is_cube_in_zp",
    "CMOrder",
    "CohomologyResult",
    "DivisorClass",
    "EndElement",
    "LatticeAction",
    "cyclic_h1",
    "intersection_pairing",
    "inverse_graph",
    "rho_action",
    "rho_action_from_rosati",
    "torsion_surjectivity_det",
    "verify_a2_invariants",
    "__version__",
]
