import numpy as np
import pytest
from pydantic import ValidationError

from theta_orbits.dualpairs.params import DualPairParams, PairFamily, build_params
from theta_orbits.errors import ParameterError, RankAmbiguityError, VerificationError
from theta_orbits.momentmap.fibration import (
    case2_projection,
    equivariance_residual,
    fiber_point,
    motion_over_m,
    project_generic,
    q_element,
    reference_image,
)
from theta_orbits.momentmap.frames import (
    NullConePoint,
    adapted_basis,
    isotropic_frame,
    moment_images,
    random_gl,
    reference_point,
    rng_for,
)
from theta_orbits.momentmap.nullcone import Stratum, boundary_point, sample_null_cone
from theta_orbits.momentmap.ranks import numeric_rank, rank_profile
from theta_orbits.momentmap.stabilizers import (
    KElement,
    OrbitGroup,
    beta_map,
    case1_reference,
    levi_pair,
    null_cone_dim,
    numeric_orbit_dim,
    stabilizer_codim_check,
    stabilizer_samples,
)
from theta_orbits.momentmap.verify import verify_image_closure, verify_pair
from theta_orbits.orbitlifts.lifts import lift_orbit


def test_isotropic_frame_and_adapted_basis():
    frame = isotropic_frame(7, 3)
    assert np.array_equal(frame.T @ frame, np.zeros((3, 3)))
    basis, gram = adapted_basis(7, 3)
    assert np.allclose(basis.T @ basis, gram)
    assert np.array_equal(basis[:, :3], frame)
    with pytest.raises(ParameterError):
        isotropic_frame(5, 3)


@pytest.mark.parametrize("pair", [(6, 4, 0, 2), (8, 4, 2, 3), (10, 2, 6, 4), (4, 1, 5, 2)])
def test_reference_point_is_exactly_on_the_cone(pair):
    pt = reference_point(DualPairParams.osp(*pair))
    assert pt.shape == pair
    assert pt.residual() == 0.0
    assert rank_profile(pt).in_D


def test_numeric_rank_gap_guard():
    assert numeric_rank(np.diag([1.0, 1e-3, 0.0])) == 2
    assert numeric_rank(np.zeros((3, 3)), reference=1.0) == 0
    with pytest.raises(RankAmbiguityError):
        numeric_rank(np.diag([1.0, 2e-8]))


@pytest.mark.parametrize("pair, k_dim", [((6, 4, 0, 2), 10), ((8, 4, 2, 3), 20)])
def test_generic_samples_realize_the_lifted_orbit(pair, k_dim):
    pp = DualPairParams.osp(*pair)
    orbit, _ = lift_orbit(pp)
    points = sample_null_cone(pp, seed=0, count=50)
    assert len(points) == 50
    for pt in points:
        assert pt.residual() < 1e-12
        profile = rank_profile(pt)
        assert profile.in_D
        assert profile.image_orbit(pp.p, pp.q) == orbit
        assert numeric_orbit_dim(moment_images(pt).x, OrbitGroup.K) == k_dim


def test_sampling_is_deterministic_and_splittable(pair_8423):
    first = sample_null_cone(pair_8423, seed=7, count=5)
    again = sample_null_cone(pair_8423, seed=7, count=5)
    split = sample_null_cone(pair_8423, seed=7, count=3) + sample_null_cone(pair_8423, seed=7, count=2, start=3)
    for a, b, c in zip(first, again, split):
        assert np.array_equal(a.vector(), b.vector())
        assert np.array_equal(a.vector(), c.vector())
    other = sample_null_cone(pair_8423, seed=8, count=1)
    assert not np.array_equal(first[0].vector(), other[0].vector())


def test_sample_count_must_be_positive(pair_6402):
    with pytest.raises(ParameterError):
        sample_null_cone(pair_6402, seed=0, count=0)


def test_boundary_and_zero_points_leave_the_open_stratum(pair_8423):
    for pt in sample_null_cone(pair_8423, seed=0, count=10, stratum=Stratum.BOUNDARY):
        profile = rank_profile(pt)
        assert profile.rank_w1 < min(pair_8423.q, pair_8423.n)
        assert not profile.in_D
    zero = NullConePoint.zero(8, 4, 2, 3)
    assert not rank_profile(zero).in_D
    assert rank_profile(zero).rank_x == 0


def test_boundary_needs_rank_to_drop():
    with pytest.raises(ParameterError):
        boundary_point(DualPairParams.osp(6, 0, 6, 2))


@pytest.mark.parametrize("pair, expected", [((8, 4, 2, 3), 30), ((6, 4, 0, 2), 14), ((10, 2, 6, 4), 52)])
def test_null_cone_dimension(pair, expected):
    pp = DualPairParams.osp(*pair)
    assert null_cone_dim(pp) == expected
    assert numeric_orbit_dim(reference_point(pp), OrbitGroup.K_X_KPRIME) == expected


def test_orbit_group_argument_checks(pair_6402):
    pt = reference_point(pair_6402)
    with pytest.raises(ParameterError):
        numeric_orbit_dim(pt, OrbitGroup.K)
    with pytest.raises(ParameterError):
        numeric_orbit_dim(moment_images(pt).x, OrbitGroup.K_X_KPRIME)
    assert numeric_orbit_dim(np.eye(2), OrbitGroup.KPRIME) == 3


@pytest.mark.parametrize("q, t, n, dim_s0, codim", [(5, 1, 3, 7, 3), (4, 1, 2, 3, 2)])
def test_stabilizer_codimension(q, t, n, dim_s0, codim):
    result = stabilizer_codim_check(q, t, n)
    assert result.dim_s0 == dim_s0
    assert result.numeric_dim_s0 == dim_s0
    assert result.codim == codim


def test_stabilizer_codimension_range():
    with pytest.raises(ParameterError):
        stabilizer_codim_check(3, 1, 3)


def test_beta_map_fixes_the_reference(pair_8423):
    reference = case1_reference(pair_8423)
    x = reference[0] @ reference[1].T
    samples = stabilizer_samples(x, rng_for(0, "test_beta", 0), 20)
    for k in samples:
        assert np.abs(k.kp @ x @ k.kq.T - x).max() < 1e-10
        image = beta_map(k, reference)
        assert image.residual < 1e-10
        assert image.beta.shape == (3, 3)


def test_beta_of_levi_element_is_g(pair_6402):
    reference = case1_reference(pair_6402)
    g, g_inv = random_gl(rng_for(0, "test_levi", 0), 2)
    image = beta_map(levi_pair(pair_6402, g, g_inv), reference)
    assert np.allclose(image.beta, g, atol=1e-8)


def test_beta_map_rejects_non_stabilizer(pair_8423):
    reference = case1_reference(pair_8423)
    kp = np.eye(8, dtype=complex)
    kp[[0, 1]] = kp[[1, 0]]
    with pytest.raises(VerificationError):
        beta_map(KElement(kp, np.eye(4)), reference)


def test_case2_reference_projects_to_m(pair_case2):
    result = case2_projection(reference_point(pair_case2))
    for got, want in zip(result.m, reference_image(10, 2, 6, 4)):
        np.testing.assert_array_equal(got, want)
    assert result.residual == 0.0
    assert result.a_small.shape == (6, 2)
    assert result.b_small.shape == (4, 2)


def test_case2_fibers_land_on_the_smaller_cone(pair_case2):
    for index in range(20):
        rng = rng_for(0, "test_fiber", index)
        pt = fiber_point(pair_case2, rng)
        assert pt.residual() < 1e-10
        assert case2_projection(pt).residual < 1e-10
        assert equivariance_residual(pt, q_element(pair_case2, rng)) < 1e-10


def test_case2_projection_rejects_points_off_m(pair_case2):
    pt = sample_null_cone(pair_case2, seed=0, count=1)[0]
    with pytest.raises(VerificationError):
        case2_projection(pt)


@pytest.mark.parametrize("pair", [(10, 2, 6, 4), (4, 1, 5, 2), (8, 1, 5, 3)])
def test_sampled_points_move_over_m(pair):
    pp = DualPairParams.osp(*pair)
    p, q, t, n = pair
    for pt in sample_null_cone(pp, seed=3, count=20):
        moved, result = project_generic(pt)
        assert moved.residual() < 1e-10
        assert result.residual < 1e-10
        for got, want in zip(result.m, reference_image(p, q, t, n)):
            np.testing.assert_allclose(got, want, atol=1e-10)
        assert rank_profile(moved).model_dump(exclude={"tolerance"}) == rank_profile(pt).model_dump(
            exclude={"tolerance"}
        )


def test_motion_over_m_is_a_group_element(pair_case2):
    pt = sample_null_cone(pair_case2, seed=1, count=1)[0]
    motion = motion_over_m(pt)
    np.testing.assert_allclose(motion.kp.T @ motion.kp, np.eye(10), atol=1e-10)
    np.testing.assert_allclose(motion.kt.T @ motion.kt, np.eye(6), atol=1e-10)
    np.testing.assert_allclose(motion.g @ motion.g_inv, np.eye(4), atol=1e-10)


def test_motion_over_m_needs_the_open_stratum(pair_case2):
    with pytest.raises(VerificationError):
        motion_over_m(NullConePoint.zero(10, 2, 6, 4))


def test_image_closure(pair_8423):
    check = verify_image_closure(pair_8423, seed=0, count=50)
    assert check.passed
    assert check.data["contained"] == 50
    assert check.data["attained"] == 50
    assert check.data["boundary_contained"] == 50
    assert check.data["zero_contained"]


@pytest.mark.parametrize("pair", ["osp:6,4,0,2", "osp:8,4,2,3", "osp:10,2,6,4"])
def test_verify_pair_passes(pair):
    report = verify_pair(DualPairParams.parse(pair), seed=0, count=5)
    assert report.passed, report.to_json()
    names = [check.name for check in report.checks]
    assert names[:4] == ["on_cone_residuals", "rank_profile", "k_orbit_dim", "null_cone_dim"]
    assert "image_closure" in names


def test_verify_pair_boundary_stratum(pair_8423):
    report = verify_pair(pair_8423, seed=0, count=5, stratum=Stratum.BOUNDARY)
    assert report.passed, report.to_json()
    assert "null_cone_dim" not in [check.name for check in report.checks]


def test_verify_pair_json_is_reproducible(pair_6402):
    first = verify_pair(pair_6402, seed=3, count=4).to_json()
    second = verify_pair(pair_6402, seed=3, count=4).to_json()
    assert first == second
    assert first["checks"][0]["pass"] is True


def test_verify_pair_rejects():
    with pytest.raises(ParameterError):
        verify_pair(DualPairParams.osp(6, 4, 0, 0))
    with pytest.raises(ParameterError):
        verify_pair(build_params(family=PairFamily.SPOSTAR, p=4, q=2, t=0, n=2))


def test_verify_uses_every_requested_sample(pair_8423, pair_case2):
    checks = {check.name: check for check in verify_pair(pair_8423, seed=0, count=12).checks}
    assert checks["beta_map"].data["samples"] == 12
    assert checks["beta_map"].data["pairs"] == 11
    checks = {check.name: check for check in verify_pair(pair_case2, seed=0, count=12).checks}
    assert checks["case2_projection"].passed
    assert checks["case2_projection"].data["samples"] == 12
    assert checks["case2_projection"].data["moved_sample_residual"] < 1e-10


def test_points_check_their_blocks():
    with pytest.raises(ParameterError):
        NullConePoint.of(np.zeros((4, 2)), np.zeros((2, 3)), np.zeros((0, 2)))
    with pytest.raises(ParameterError):
        NullConePoint.of(np.zeros(4), np.zeros((2, 1)), np.zeros((0, 1)))
    pt = reference_point(DualPairParams.osp(8, 4, 2, 3))
    with pytest.raises(ValidationError):
        pt.w1 = np.zeros((4, 3))
