import logging

from theta_orbits.errors import ParameterError
from theta_orbits.partitions.partition import LieType, Partition, collapse, is_valid_for, transpose

logger = logging.getLogger(__name__)


def dual_type(lie_type: LieType) -> LieType:
    """so(2m) is self-dual; so(2m+1) and sp(2m) are exchanged."""
    if lie_type.letter == "D":
        return lie_type
    if lie_type.letter == "B":
        return LieType.symplectic(lie_type.m - 1)
    return LieType.orthogonal(lie_type.m + 1)


def bv_dual(p: Partition, from_type: LieType) -> Partition:
    """
    Order-reversing duality on nilpotent orbits: transpose, fix the total, collapse.

    Type B drops a box from the smallest row before the C-collapse; type C
    adds a box to the largest row before the B-collapse.
    """
    if not is_valid_for(p, from_type):
        raise ParameterError(f"{p} is not a nilpotent orbit of {from_type}")
    target = dual_type(from_type)
    rows = list(transpose(p).rows)
    if from_type.letter == "B":
        rows[-1] -= 1
    elif from_type.letter == "C":
        if rows:
            rows[0] += 1
        else:
            rows = [1]
    result = collapse(Partition.of(*rows), target)
    logger.debug("d(%s in %s) = %s in %s", p, from_type, result, target)
    return result
