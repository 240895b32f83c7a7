import logging
from typing import Any, Callable, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from theta_orbits.config import load_settings
from theta_orbits.dualpairs.params import Case, DualPairParams, PairFamily, classify_case
from theta_orbits.errors import ParameterError, VerificationError
from theta_orbits.momentmap.fibration import (
    case2_projection,
    equivariance_residual,
    fiber_point,
    project_generic,
    q_element,
)
from theta_orbits.momentmap.frames import NullConePoint, moment_images, random_gl, reference_point, rng_for
from theta_orbits.momentmap.nullcone import Stratum, sample_null_cone
from theta_orbits.momentmap.ranks import rank_profile
from theta_orbits.momentmap.stabilizers import (
    KElement,
    OrbitGroup,
    beta_map,
    case1_reference,
    fiber_dim,
    levi_pair,
    null_cone_dim,
    numeric_orbit_dim,
    stabilizer_codim_check,
    stabilizer_samples,
)
from theta_orbits.orbitlifts.lifts import lift_orbit
from theta_orbits.partitions.partition import Level, LieType, orbit_dim

logger = logging.getLogger(__name__)


class Check(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    name: str
    passed: bool = Field(alias="pass")
    data: Dict[str, Any] = Field(default_factory=dict)


class VerificationReport(BaseModel):
    pair: str
    seed: int
    count: int
    stratum: Stratum
    checks: List[Check]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_json(self) -> dict:
        return self.model_dump(mode="json", by_alias=True)


def _run(name: str, body: Callable[[], Dict[str, Any]]) -> Check:
    """Run one check; its body returns data with a boolean under "pass"."""
    try:
        data = body()
    except VerificationError as exc:
        logger.warning("check %s failed: %s", name, exc)
        return Check(name=name, passed=False, data={"error": str(exc), **exc.data})
    passed = bool(data.pop("pass"))
    if not passed:
        logger.warning("check %s failed: %s", name, data)
    return Check(name=name, passed=passed, data=data)


def _closure_counts(points: List[NullConePoint], d: int, tol: Optional[float]) -> int:
    contained = 0
    settings = load_settings()
    for pt in points:
        profile = rank_profile(pt, tol)
        images = moment_images(pt)
        isotropic = np.abs(images.psi_plus).max(initial=0.0) < settings.residual_tol
        contained += int(isotropic and profile.rank_w1tw1 <= d)
    return contained


def verify_image_closure(pp: DualPairParams, seed: int, count: int, tol: Optional[float] = None) -> Check:
    """
    psi(pr(w)) stays in the closure of O' (rank psi- <= d) on generic, boundary
    and zero points, and generic points reach the lifted orbit.
    """
    classify_case(pp)
    d = min(pp.q, pp.n, pp.t)
    orbit, provenance = lift_orbit(pp)

    def body() -> Dict[str, Any]:
        generic = sample_null_cone(pp, seed, count, Stratum.GENERIC)
        attained = sum(
            1 for pt in generic if rank_profile(pt, tol).image_orbit(pp.p, pp.q) == orbit
        )
        contained = _closure_counts(generic, d, tol)
        data = {"samples": count, "contained": contained, "attained": attained, "orbit": orbit.to_text()}
        boundary_ok = True
        if min(pp.q, pp.n) > 0:
            boundary = sample_null_cone(pp, seed, count, Stratum.BOUNDARY)
            data["boundary_contained"] = _closure_counts(boundary, d, tol)
            boundary_ok = data["boundary_contained"] == count
        zero = NullConePoint.zero(pp.p, pp.q, pp.t, pp.n)
        data["zero_contained"] = bool(_closure_counts([zero], d, tol))
        data["provenance"] = provenance.value
        data["pass"] = contained == count and attained == count and boundary_ok and data["zero_contained"]
        return data

    return _run("image_closure", body)


def _residual_check(points: List[NullConePoint]) -> Check:
    worst = max(pt.residual() for pt in points)
    return Check(
        name="on_cone_residuals",
        passed=worst < load_settings().residual_tol,
        data={"max_residual": worst, "samples": len(points)},
    )


def _profile_check(pp: DualPairParams, points: List[NullConePoint], stratum: Stratum, tol) -> Check:
    def body():
        profiles = [rank_profile(pt, tol) for pt in points]
        in_d = sum(profile.in_D for profile in profiles)
        distinct = {profile.model_dump_json(exclude={"in_D"}) for profile in profiles}
        expected = len(points) if stratum is Stratum.GENERIC else 0
        return {"in_D": in_d, "distinct_profiles": len(distinct), "pass": in_d == expected and len(distinct) == 1}

    return _run("rank_profile", body)


def _k_orbit_check(pp: DualPairParams, points: List[NullConePoint], stratum: Stratum, tol) -> Check:
    lie_type = LieType.orthogonal(pp.p + pp.q)
    lifted, _ = lift_orbit(pp)

    def body():
        mismatches = 0
        dims = set()
        for pt in points:
            image = rank_profile(pt, tol).image_orbit(pp.p, pp.q)
            numeric = numeric_orbit_dim(moment_images(pt).x, OrbitGroup.K, tol)
            dims.add(numeric)
            expected = orbit_dim(image, lie_type, Level.K)
            if numeric != expected or (stratum is Stratum.GENERIC and image != lifted):
                mismatches += 1
        return {"numeric_dims": sorted(dims), "mismatches": mismatches, "pass": mismatches == 0}

    return _run("k_orbit_dim", body)


def _null_cone_check(pp: DualPairParams, points: List[NullConePoint], tol) -> Check:
    expected = null_cone_dim(pp)
    lifted, _ = lift_orbit(pp)
    k_dim = orbit_dim(lifted, LieType.orthogonal(pp.p + pp.q), Level.K)

    def body():
        z0_dim = numeric_orbit_dim(reference_point(pp), OrbitGroup.K_X_KPRIME, tol)
        orbit, fiber = fiber_dim(points[0], tol)
        return {
            "expected": expected,
            "reference_orbit_dim": z0_dim,
            "sample_orbit_dim": orbit,
            "fiber_dim": fiber,
            "k_orbit_dim": k_dim,
            "pass": z0_dim == expected and orbit == expected and expected - fiber == k_dim,
        }

    return _run("null_cone_dim", body)


def _beta_check(pp: DualPairParams, seed: int, count: int) -> Check:
    reference = case1_reference(pp)
    x = reference[0] @ reference[1].T

    def body():
        rng = rng_for(seed, "beta_map", 0)
        samples = stabilizer_samples(x, rng, max(count, 2))
        images = [beta_map(k, reference) for k in samples]
        worst = max(image.residual for image in images)
        multiplicative = 0.0
        for (a, image_a), (b, image_b) in zip(zip(samples, images), zip(samples[1:], images[1:])):
            product = beta_map(KElement(a.kp @ b.kp, a.kq @ b.kq), reference).beta
            multiplicative = max(multiplicative, float(np.abs(product - image_a.beta @ image_b.beta).max()))
        data = {
            "samples": len(samples),
            "pairs": len(samples) - 1,
            "max_residual": worst,
            "multiplicativity": multiplicative,
        }
        levi_ok = True
        if pp.t == 0:
            g, g_inv = random_gl(rng, pp.n)
            levi = beta_map(levi_pair(pp, g, g_inv), reference)
            data["levi_error"] = float(np.abs(levi.beta - g).max())
            levi_ok = data["levi_error"] < 1e-8
        data["pass"] = multiplicative < 1e-8 and levi_ok
        return data

    return _run("beta_map", body)


def _projection_check(pp: DualPairParams, seed: int, points: List[NullConePoint], stratum: Stratum) -> Check:
    def body():
        reference = case2_projection(reference_point(pp))
        worst_equivariance = 0.0
        worst_fiber = reference.residual
        worst_generic = 0.0
        for index, pt in enumerate(points):
            rng = rng_for(seed, "case2_projection", index)
            worst_equivariance = max(worst_equivariance, equivariance_residual(pt, q_element(pp, rng)))
            worst_fiber = max(worst_fiber, case2_projection(fiber_point(pp, rng)).residual)
            if stratum is Stratum.GENERIC:
                worst_generic = max(worst_generic, project_generic(pt)[1].residual)
        tol = load_settings().certify_tol
        return {
            "equivariance_residual": worst_equivariance,
            "fiber_residual": worst_fiber,
            "moved_sample_residual": worst_generic,
            "samples": len(points),
            "pass": max(worst_equivariance, worst_fiber, worst_generic) < tol,
        }

    return _run("case2_projection", body)


def _codim_check(pp: DualPairParams) -> Check:
    def body():
        result = stabilizer_codim_check(pp.q, pp.t, pp.n)
        return {**result.model_dump(), "pass": result.codim >= 2}

    return _run("stabilizer_codim", body)


def verify_pair(
    pp: DualPairParams,
    seed: Optional[int] = None,
    count: int = 50,
    tol: Optional[float] = None,
    stratum: Stratum = Stratum.GENERIC,
) -> VerificationReport:
    """Run every numerical cross-check that applies to pp and collect the results."""
    seed = load_settings().seed if seed is None else seed
    stratum = Stratum(stratum)
    case = classify_case(require_osp(pp))
    if pp.n == 0:
        raise ParameterError("numerical checks need n >= 1")
    points = sample_null_cone(pp, seed, count, stratum)
    checks = [
        _residual_check(points),
        _profile_check(pp, points, stratum, tol),
        _k_orbit_check(pp, points, stratum, tol),
    ]
    if stratum is Stratum.GENERIC:
        checks.append(_null_cone_check(pp, points, tol))
    checks.append(verify_image_closure(pp, seed, count, tol))
    if case is Case.I:
        checks.append(_beta_check(pp, seed, count))
    else:
        checks.append(_projection_check(pp, seed, points, stratum))
    if pp.q > pp.n > pp.t:
        checks.append(_codim_check(pp))
    report = VerificationReport(pair=pp.label(), seed=seed, count=count, stratum=stratum, checks=checks)
    logger.info("verify %s: %s", pp.label(), "pass" if report.passed else "fail")
    return report


def require_osp(pp: DualPairParams) -> DualPairParams:
    if pp.family is not PairFamily.OSP:
        raise ParameterError(f"numerical checks are implemented for OSp pairs, got {pp.family.value}")
    return pp
