from theta_orbits.orbitlifts.compact_type import GenuineCompactType
from theta_orbits.orbitlifts.lifts import (
    Provenance,
    add_column_lift,
    generic_rank_profile,
    lift_Od,
    lift_orbit,
    lift_zero,
    lowest_weight_orbit,
    orbit_from_ranks,
)
from theta_orbits.orbitlifts.cycles import (
    AssociatedCycle,
    CycleTerm,
    OrbitCycle,
    assoc_cycle_theta_L,
    assoc_cycle_theta_sigma,
    lift_cycle,
)
