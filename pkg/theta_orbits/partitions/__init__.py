from theta_orbits.partitions.partition import (
    LieType,
    Level,
    Partition,
    collapse,
    dominance_leq,
    is_valid_for,
    orbit_dim,
    partitions_of,
    transpose,
    valid_partitions,
)
from theta_orbits.partitions.signed_partition import (
    Family,
    Sign,
    SignedPartition,
    SignedRow,
    orbit_from_ranks,
    require_valid,
    signature,
    validate_signed,
)

__all__ = [
    "Family",
    "LieType",
    "Level",
    "Partition",
    "Sign",
    "SignedPartition",
    "SignedRow",
    "collapse",
    "dominance_leq",
    "is_valid_for",
    "orbit_dim",
    "orbit_from_ranks",
    "partitions_of",
    "require_valid",
    "signature",
    "transpose",
    "valid_partitions",
    "validate_signed",
]
