import logging
from enum import Enum
from typing import List, Tuple

import numpy as np

from theta_orbits.config import load_settings
from theta_orbits.dualpairs.params import DualPairParams
from theta_orbits.errors import ParameterError, RankAmbiguityError, VerificationError
from theta_orbits.momentmap.frames import NullConePoint, random_gl, random_orthogonal, reference_point, rng_for
from theta_orbits.momentmap.ranks import rank_profile

logger = logging.getLogger(__name__)


class Stratum(str, Enum):
    GENERIC = "generic"
    BOUNDARY = "boundary"


GroupSample = Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]


def random_group_element(rng: np.random.Generator, pp: DualPairParams) -> GroupSample:
    """(o_p, o_q, o_t, g, g^-1) in O(p) x O(q) x O(t) x GL(n)."""
    g, g_inv = random_gl(rng, pp.n)
    return random_orthogonal(rng, pp.p), random_orthogonal(rng, pp.q), random_orthogonal(rng, pp.t), g, g_inv


def boundary_point(pp: DualPairParams) -> NullConePoint:
    """z0 with its first column removed from every block; w1 loses one rank."""
    if min(pp.q, pp.n) == 0:
        raise ParameterError(f"{pp.label()} has no boundary stratum: rank w1 is already 0")
    z0 = reference_point(pp)
    blocks = [block.copy() for block in (z0.wplus, z0.w1, z0.w2)]
    for block in blocks:
        block[:, 0] = 0
    return NullConePoint.of(*blocks)


def sample_null_cone(
    pp: DualPairParams,
    seed: int,
    count: int,
    stratum: Stratum = Stratum.GENERIC,
    start: int = 0,
) -> List[NullConePoint]:
    """
    Random group motions of the reference point, one generator per sample index.

    Indices start at `start`, so disjoint ranges can be drawn independently and
    merged. A draw whose residual exceeds the construction tolerance or whose
    ranks are ambiguous is redrawn.
    """
    if count < 1:
        raise ParameterError(f"count must be >= 1, got {count}")
    settings = load_settings()
    base = reference_point(pp) if stratum is Stratum.GENERIC else boundary_point(pp)
    op = f"sample_null_cone:{stratum.value}"
    points = []
    for index in range(start, start + count):
        for attempt in range(settings.max_redraws):
            rng = rng_for(seed, op, index, attempt)
            pt = base.act(*random_group_element(rng, pp))
            residual = pt.residual()
            if residual >= settings.residual_tol:
                logger.debug("redraw %d/%d: residual %.2e", index, attempt, residual)
                continue
            try:
                rank_profile(pt)
            except RankAmbiguityError as exc:
                logger.debug("redraw %d/%d: %s", index, attempt, exc)
                continue
            points.append(pt)
            break
        else:
            raise VerificationError(
                f"no acceptable sample for index {index} after {settings.max_redraws} draws",
                data={"pair": pp.label(), "index": index},
            )
    logger.info("sampled %d %s points for %s", len(points), stratum.value, pp.label())
    return points
