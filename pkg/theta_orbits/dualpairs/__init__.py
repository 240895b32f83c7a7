from theta_orbits.dualpairs.normalization import (
    NormalizationResult,
    NormalizationStatus,
    Twist,
    normalize_outside_range,
)
from theta_orbits.dualpairs.params import (
    BoundaryCodim,
    Case,
    DualPairParams,
    PairFamily,
    boundary_codim_ok,
    build_params,
    classify_case,
    in_stable_range,
)

__all__ = [
    "BoundaryCodim",
    "Case",
    "DualPairParams",
    "NormalizationResult",
    "NormalizationStatus",
    "PairFamily",
    "Twist",
    "boundary_codim_ok",
    "build_params",
    "classify_case",
    "in_stable_range",
    "normalize_outside_range",
]
