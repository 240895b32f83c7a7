import logging
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from theta_orbits.dualpairs.params import DualPairParams, in_stable_range
from theta_orbits.errors import ParameterError
from theta_orbits.orbitlifts.lifts import lift_Od
from theta_orbits.partitions.partition import LieType, Partition
from theta_orbits.unipotent.duality import bv_dual, dual_type
from theta_orbits.unipotent.infchar import half_h_dual, inf_char_theta_L

logger = logging.getLogger(__name__)


class UnipotentCertificate(BaseModel):
    """Clause-by-clause record of the special unipotent check for one parameter set."""

    model_config = ConfigDict(frozen=True)

    p: int
    q: int
    t: int
    n: int
    dim_mu: int
    hypotheses_met: bool
    hypotheses_failed: Tuple[str, ...] = ()
    lie_type: Optional[str] = None
    orbit: Optional[Tuple[int, ...]] = None
    dual_orbit: Optional[Tuple[int, ...]] = None
    expected_dual: Optional[Tuple[int, ...]] = None
    d_matches: Optional[bool] = None
    special: Optional[bool] = None
    inf_char: Optional[Tuple[str, ...]] = None
    half_h_dual: Optional[Tuple[str, ...]] = None
    multiset_equal: Optional[bool] = None
    zero_check: Optional[bool] = None
    passed: bool = False
    note: str = ""


def expected_dual_orbit(p: int, q: int, t: int, n: int) -> Partition:
    """(p+q-2n-1, 2n-t+1, t-1, eps) with eps = 0 for t odd and 1 for t even."""
    if t == 0:
        # the -1 and the eps = 1 cancel
        return Partition.of(p + q - 2 * n - 1, 2 * n + 1)
    eps = 0 if t % 2 else 1
    return Partition.of(p + q - 2 * n - 1, 2 * n - t + 1, t - 1, eps)


def _hypotheses(p: int, q: int, t: int, n: int, dim_mu: int) -> List[str]:
    failed = []
    if q + t < 2 * n:
        failed.append("q + t >= 2n")
    if not q >= n >= t:
        failed.append("q >= n >= t")
    if dim_mu != 1:
        failed.append("dim mu = 1")
    if not in_stable_range(DualPairParams.osp(p, q, t, n)):
        failed.append("stable range")
    return failed


def _text(entries) -> Tuple[str, ...]:
    return tuple(entries.to_json())


def check_special_unipotent(p: int, q: int, t: int, n: int, dim_mu: int = 1) -> UnipotentCertificate:
    """
    Certify that the lifted orbit is special and that the infinitesimal character
    of the lift equals one half of the neutral element of the dual orbit.

    Hypothesis failures are recorded rather than raised.
    """
    failed = _hypotheses(p, q, t, n, dim_mu)
    base = dict(p=p, q=q, t=t, n=n, dim_mu=dim_mu, hypotheses_met=not failed, hypotheses_failed=tuple(failed))
    if failed:
        logger.warning("hypotheses not met for (%d,%d,%d,%d): %s", p, q, t, n, ", ".join(failed))
    try:
        orbit = lift_Od(p, q, t, n).unsigned()
        lie_type = LieType.orthogonal(p + q)
        dual = bv_dual(orbit, lie_type)
        back = bv_dual(dual, dual_type(lie_type))
        expected = expected_dual_orbit(p, q, t, n)
        lam = inf_char_theta_L(p, q, t, n)
        half = half_h_dual(dual, lam.rank)
    except ParameterError as exc:
        return UnipotentCertificate(**base, note=f"hypotheses not met: {exc}")
    multiset_equal = lam.multiset() == half.multiset()
    zero_check = lam.has_zero() if (p + q) % 2 == 0 else None
    d_matches = dual == expected
    special = back == orbit
    passed = not failed and d_matches and special and multiset_equal and zero_check is not False
    return UnipotentCertificate(
        **base,
        lie_type=str(lie_type),
        orbit=orbit.rows,
        dual_orbit=dual.rows,
        expected_dual=expected.rows,
        d_matches=d_matches,
        special=special,
        inf_char=_text(lam),
        half_h_dual=_text(half),
        multiset_equal=multiset_equal,
        zero_check=zero_check,
        passed=passed,
        note="" if not failed else "hypotheses not met",
    )
