import pytest

from theta_orbits.dualpairs.normalization import NormalizationStatus, Twist, normalize_outside_range
from theta_orbits.dualpairs.params import (
    Case,
    DualPairParams,
    PairFamily,
    boundary_codim_ok,
    build_params,
    classify_case,
    in_stable_range,
)
from theta_orbits.errors import ParameterError


def test_parse_and_label():
    pp = DualPairParams.parse("osp:6,4,0,2")
    assert (pp.family, pp.p, pp.q, pp.t, pp.n) == (PairFamily.OSP, 6, 4, 0, 2)
    assert pp.label() == "osp:6,4,0,2"
    assert DualPairParams.parse(" uu: 4,4,1,2,1").label() == "uu:4,4,1,2,1"
    assert DualPairParams.parse("spostar:3,2,0,2").family is PairFamily.SPOSTAR


@pytest.mark.parametrize("text", ["osp:6,4,0", "foo:1,2,3,4", "osp 6 4 0 2", "osp:6,4,-1,2"])
def test_parse_rejects(text):
    with pytest.raises(ParameterError):
        DualPairParams.parse(text)


def test_build_params_wraps_validation():
    with pytest.raises(ParameterError):
        build_params(family=PairFamily.UU, p=2, q=2, t=0, n1=1)
    with pytest.raises(ParameterError):
        build_params(p=-1, q=2, t=0, n=1)


@pytest.mark.parametrize(
    "p, q, t, n, stable",
    [
        (6, 4, 0, 2, True),
        (4, 4, 0, 2, False),
        (5, 4, 0, 2, False),
        (8, 4, 2, 3, True),
        (10, 2, 6, 4, True),
        (3, 3, 0, 1, True),
        (4, 2, 0, 2, False),
    ],
)
def test_stable_range(p, q, t, n, stable):
    assert in_stable_range(DualPairParams.osp(p, q, t, n)) is stable


def test_classify_case():
    assert classify_case(DualPairParams.osp(8, 4, 2, 3)) is Case.I
    assert classify_case(DualPairParams.osp(10, 2, 6, 4)) is Case.II
    with pytest.raises(ParameterError):
        classify_case(DualPairParams.osp(4, 4, 0, 2))


def test_classify_other_families():
    assert classify_case(build_params(family=PairFamily.UU, p=4, q=2, t=2, n1=2, n2=2)) is Case.I
    assert classify_case(build_params(family=PairFamily.UU, p=4, q=1, t=3, n1=2, n2=2)) is Case.II
    assert classify_case(build_params(family=PairFamily.SPOSTAR, p=4, q=1, t=3, n=3)) is Case.II


@pytest.mark.parametrize(
    "pp, ok, codim",
    [
        (DualPairParams.osp(10, 5, 1, 3), True, 3),
        (DualPairParams.osp(8, 4, 3, 4), True, 2),
        (DualPairParams.osp(10, 2, 6, 4), True, 3),
        (DualPairParams.osp(8, 2, 3, 3), True, 2),
    ],
)
def test_boundary_codim(pp, ok, codim):
    result = boundary_codim_ok(pp)
    assert (result.ok, result.codim) == (ok, codim)


def test_boundary_codim_needs_n_above_min():
    with pytest.raises(ParameterError):
        boundary_codim_ok(DualPairParams.osp(8, 4, 2, 2))


def test_normalize_rule_a_remaps():
    result = normalize_outside_range(4, 4, 0, 2)
    assert result.status is NormalizationStatus.REMAPPED
    assert result.n_effective == 1
    assert result.params == DualPairParams.osp(4, 4, 0, 1)
    assert in_stable_range(result.params)


def test_normalize_rule_a_finite_dimensional():
    result = normalize_outside_range(2, 2, 0, 2)
    assert result.status is NormalizationStatus.FINITE_DIM
    assert result.finite_dim


def test_normalize_rule_b_twists():
    result = normalize_outside_range(3, 5, 0, 2)
    assert result.status is NormalizationStatus.TWISTED
    assert result.twist is Twist.DELTA
    assert result.n_effective == 1


def test_normalize_leaves_other_cases():
    assert normalize_outside_range(4, 2, 0, 2).status is NormalizationStatus.UNHANDLED


def test_normalize_rejects_stable_input():
    with pytest.raises(ParameterError):
        normalize_outside_range(6, 4, 0, 2)
