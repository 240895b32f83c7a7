import logging
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict

from theta_orbits.dualpairs.params import DualPairParams, in_stable_range
from theta_orbits.errors import ParameterError

logger = logging.getLogger(__name__)


class Twist(str, Enum):
    NONE = "none"
    DELTA = "delta"


class NormalizationStatus(str, Enum):
    REMAPPED = "remapped"
    TWISTED = "twisted"
    FINITE_DIM = "finite_dim"
    UNHANDLED = "unhandled"


class NormalizationResult(BaseModel):
    """
    Outcome of moving an out-of-range lift back into the stable range.

    `params` holds the remapped parameters for REMAPPED/TWISTED and the input
    otherwise.
    """

    model_config = ConfigDict(frozen=True)

    status: NormalizationStatus
    params: DualPairParams
    n_effective: Optional[int] = None
    twist: Twist = Twist.NONE
    finite_dim: bool = False
    note: str = ""


def normalize_outside_range(p: int, q: int, t: int, n: int) -> NormalizationResult:
    """
    Rewrite theta lifts of sigma' outside the stable range.

    (A) p = q + t <= 2n: n <= p - 1 maps to n' = p - 1 - n; n >= p gives a
        finite dimensional lift with zero associated variety.
    (B) n <= p <= 2n - 1 and q + t = p + 2: delta twist of n' = p - n.
    Everything else comes back UNHANDLED.
    """
    given = DualPairParams.osp(p, q, t, n)
    if in_stable_range(given):
        raise ParameterError(f"{given.label()} is already in the stable range")
    big = q + t
    if p == big and p <= 2 * n:
        if n <= p - 1:
            remapped = DualPairParams.osp(p, q, t, p - 1 - n)
            logger.debug("case A remap %s -> n=%d", given.label(), p - 1 - n)
            return NormalizationResult(
                status=NormalizationStatus.REMAPPED, params=remapped, n_effective=p - 1 - n
            )
        return NormalizationResult(
            status=NormalizationStatus.FINITE_DIM,
            params=given,
            finite_dim=True,
            note="finite dimensional; associated variety is the zero orbit",
        )
    if n <= p <= 2 * n - 1 and big == p + 2:
        remapped = DualPairParams.osp(p, q, t, p - n)
        logger.debug("case B remap %s -> n=%d with delta twist", given.label(), p - n)
        return NormalizationResult(
            status=NormalizationStatus.TWISTED, params=remapped, n_effective=p - n, twist=Twist.DELTA
        )
    logger.info("no normalization rule for %s", given.label())
    return NormalizationResult(
        status=NormalizationStatus.UNHANDLED,
        params=given,
        note="unhandled: the lift is zero or needs an analysis outside rules (A) and (B)",
    )
