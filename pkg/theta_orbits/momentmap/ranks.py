import logging
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.linalg import svdvals

from theta_orbits.config import load_settings
from theta_orbits.errors import RankAmbiguityError
from theta_orbits.momentmap.frames import NullConePoint, moment_images
from theta_orbits.partitions.signed_partition import SignedPartition, orbit_from_ranks

logger = logging.getLogger(__name__)


def numeric_rank(
    matrix: np.ndarray,
    rtol: Optional[float] = None,
    gap: Optional[float] = None,
    reference: Optional[float] = None,
) -> int:
    """
    Count singular values above rtol * max(s_0, reference).

    `reference` sets the scale for matrices that should vanish, such as a Gram
    matrix of an isotropic frame. A singular value within a factor `gap` of the
    threshold raises RankAmbiguityError.
    """
    settings = load_settings()
    rtol = settings.rank_rtol if rtol is None else rtol
    gap = settings.rank_gap if gap is None else gap
    if matrix.size == 0:
        return 0
    values = svdvals(matrix)
    threshold = rtol * max(float(values[0]), reference or 0.0)
    if threshold == 0.0:
        return 0
    near = values[(values > threshold / gap) & (values < threshold * gap)]
    if near.size:
        logger.debug("rank gap rejection: %s around %.3e", near, threshold)
        raise RankAmbiguityError(values, threshold, gap)
    return int(np.count_nonzero(values > threshold))


class RankProfile(BaseModel):
    model_config = ConfigDict(frozen=True)

    rank_wplus: int
    rank_w1: int
    rank_w1tw1: int
    rank_x: int
    rank_xxt: int
    rank_xtx: int
    tolerance: float
    in_D: bool

    def image_orbit(self, p: int, q: int) -> SignedPartition:
        """Signed partition of the K-orbit through x."""
        return orbit_from_ranks(p, q, self.rank_x, self.rank_xxt, self.rank_xtx)


def _norm(matrix: np.ndarray) -> float:
    return float(np.linalg.norm(matrix, 2)) if matrix.size else 0.0


def rank_profile(pt: NullConePoint, tol: Optional[float] = None, gap: Optional[float] = None) -> RankProfile:
    """
    Ranks of w+, w1, w1^T w1 and of x, x x^T, x^T x for an on-cone point.

    Products are thresholded against the product of the factor norms, so an
    exactly isotropic Gram matrix reads as rank 0.
    """
    p, q, t, n = pt.shape
    tol = load_settings().rank_rtol if tol is None else tol
    images = moment_images(pt)
    scale = pt.scale()
    x_norm = _norm(pt.wplus) * _norm(pt.w1)
    rank_wplus = numeric_rank(pt.wplus, tol, gap, reference=scale)
    rank_w1 = numeric_rank(pt.w1, tol, gap, reference=scale)
    rank_w1tw1 = numeric_rank(images.psi_minus, tol, gap, reference=scale**2)
    rank_x = numeric_rank(images.x, tol, gap, reference=scale**2)
    rank_xxt = numeric_rank(images.x @ images.x.T, tol, gap, reference=max(x_norm**2, scale**4))
    rank_xtx = numeric_rank(images.x.T @ images.x, tol, gap, reference=max(x_norm**2, scale**4))
    in_D = rank_wplus == n and rank_w1 == min(q, n) and rank_w1tw1 == min(q, n, t)
    if n == 0:
        in_D = True
    return RankProfile(
        rank_wplus=rank_wplus,
        rank_w1=rank_w1,
        rank_w1tw1=rank_w1tw1,
        rank_x=rank_x,
        rank_xxt=rank_xxt,
        rank_xtx=rank_xtx,
        tolerance=tol,
        in_D=in_D,
    )
