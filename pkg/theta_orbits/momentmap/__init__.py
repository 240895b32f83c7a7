from theta_orbits.momentmap.frames import (
    MomentImages,
    NullConePoint,
    adapted_basis,
    isotropic_frame,
    moment_images,
    reference_point,
    rng_for,
)
from theta_orbits.momentmap.ranks import RankProfile, numeric_rank, rank_profile
from theta_orbits.momentmap.nullcone import Stratum, boundary_point, sample_null_cone
from theta_orbits.momentmap.stabilizers import (
    KElement,
    OrbitGroup,
    StabilizerCodim,
    beta_map,
    case1_reference,
    levi_pair,
    null_cone_dim,
    numeric_orbit_dim,
    stabilizer_codim_check,
    stabilizer_samples,
)
from theta_orbits.momentmap.fibration import Case2Projection, case2_projection, fiber_point, projection, q_element
from theta_orbits.momentmap.verify import Check, VerificationReport, verify_image_closure, verify_pair
