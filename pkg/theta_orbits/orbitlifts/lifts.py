import logging
from enum import Enum
from typing import Tuple

from theta_orbits.dualpairs.params import DualPairParams, PairFamily, in_stable_range
from theta_orbits.errors import ParameterError
from theta_orbits.partitions.signed_partition import (
    Family,
    SignedPartition,
    SignedRow,
    orbit_from_ranks,
    require_valid,
    signature,
)

logger = logging.getLogger(__name__)


class Provenance(str, Enum):
    EQ7 = "eq7"
    EQ6 = "eq6"
    SOLVER = "solver"


def lowest_weight_orbit(n: int, t: int) -> SignedPartition:
    """
    Orbit of Sp(2n, R) attached to the lowest weight lift from O(t).

    Returns 2-^d 1+^(n-d) 1-^(n-d) with d = min(t, n).
    """
    if n < 1 or t < 0:
        raise ParameterError(f"need n >= 1 and t >= 0, got n={n}, t={t}")
    d = min(t, n)
    return SignedPartition.build(Family.SYMPLECTIC, (2, "-", d), (1, "+", n - d), (1, "-", n - d))


def lift_zero(p: int, q: int, n: int) -> SignedPartition:
    """Theta lift of the zero orbit of Sp(2n, R) to O(p, q): 2+^n 2-^n 1+^(p-2n) 1-^(q-2n)."""
    pp = DualPairParams.osp(p, q, 0, n)
    if n > 0 and not in_stable_range(pp):
        raise ParameterError(f"{pp.label()} is not in the stable range")
    return SignedPartition.build(
        Family.ORTHOGONAL, (2, "+", n), (2, "-", n), (1, "+", p - 2 * n), (1, "-", q - 2 * n)
    )


def lift_Od(p: int, q: int, t: int, n: int) -> SignedPartition:
    """
    Closed-form lift 3+^d 2+^(n-d) 2-^(n-d) 1+^(p-2n) 1-^(q+d-2n), d = min(t, n).

    A negative last exponent is rejected; `lift_orbit` falls back to the rank
    solver for those parameters.
    """
    if 2 * n > min(p, q + t):
        raise ParameterError(f"need 2n <= min(p, q+t), got p={p}, q={q}, t={t}, n={n}")
    d = min(t, n)
    minus_ones = q + d - 2 * n
    if minus_ones < 0:
        raise ParameterError(
            f"closed form gives exponent q+d-2n = {minus_ones} < 0 for (p,q,t,n)=({p},{q},{t},{n})"
        )
    return SignedPartition.build(
        Family.ORTHOGONAL,
        (3, "+", d),
        (2, "+", n - d),
        (2, "-", n - d),
        (1, "+", p - 2 * n),
        (1, "-", minus_ones),
    )


def add_column_lift(sp: SignedPartition, p: int, q: int) -> SignedPartition:
    """
    Lift a symplectic orbit to O(p, q) by adding a column to the left of its diagram.

    Every row gains a leading box of the opposite sign; the remaining
    signature is filled with rows of length one.
    """
    if sp.family is not Family.SYMPLECTIC:
        raise ParameterError(f"expected a symplectic orbit, got {sp.family.value}")
    require_valid(sp)
    grown = [SignedRow(len=r.len + 1, sign=r.sign.flip(), mult=r.mult) for r in sp.rows]
    lifted = SignedPartition(rows=tuple(grown), family=Family.ORTHOGONAL)
    plus, minus = signature(lifted)
    if plus > p or minus > q:
        raise ParameterError(
            f"no sign assignment lifts {sp} to signature ({p},{q}); the column alone needs ({plus},{minus})"
        )
    padded = SignedPartition(
        rows=tuple(grown)
        + tuple(
            SignedRow(len=1, sign=s, mult=k) for s, k in (("+", p - plus), ("-", q - minus)) if k > 0
        ),
        family=Family.ORTHOGONAL,
    )
    return require_valid(padded)


def generic_rank_profile(pp: DualPairParams) -> Tuple[int, int, int]:
    """(rank x, rank x x^T, rank x^T x) of the moment-map image of the reference point."""
    # momentmap imports this module through verify
    from theta_orbits.momentmap.frames import reference_point
    from theta_orbits.momentmap.ranks import rank_profile

    profile = rank_profile(reference_point(pp))
    logger.debug("reference profile of %s: %s", pp.label(), profile)
    return profile.rank_x, profile.rank_xxt, profile.rank_xtx


def lift_orbit(pp: DualPairParams) -> Tuple[SignedPartition, Provenance]:
    """
    Lifted orbit for pp together with the rule that produced it.

    eq7 is the t = 0 formula, eq6 the closed form for t > 0 and solver the
    orbit read off the moment-map image of the reference point, used when
    the closed form has a negative exponent.
    """
    if pp.family is not PairFamily.OSP:
        raise ParameterError(f"orbit lifts are implemented for OSp pairs, got {pp.family.value}")
    if not in_stable_range(pp):
        raise ParameterError(f"{pp.label()} is not in the stable range")
    if pp.t == 0:
        return lift_zero(pp.p, pp.q, pp.n), Provenance.EQ7
    try:
        return lift_Od(pp.p, pp.q, pp.t, pp.n), Provenance.EQ6
    except ParameterError as exc:
        logger.info("%s; using the rank solver", exc)
    orbit = require_valid(orbit_from_ranks(pp.p, pp.q, *generic_rank_profile(pp)))
    return orbit, Provenance.SOLVER
