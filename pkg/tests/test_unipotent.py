from itertools import product

import pytest
from sympy import Rational

from theta_orbits.errors import ParameterError
from theta_orbits.partitions.partition import LieType, Partition, valid_partitions
from theta_orbits.unipotent.certificate import check_special_unipotent, expected_dual_orbit
from theta_orbits.unipotent.duality import bv_dual, dual_type
from theta_orbits.unipotent.infchar import delta_vector, inf_char_theta_L, normalize


def test_delta_vector():
    assert delta_vector(6) == (2, 1, 0)
    assert delta_vector(5) == (Rational(3, 2), Rational(1, 2))
    assert delta_vector(1) == ()
    with pytest.raises(ParameterError):
        delta_vector(-1)


def test_normalize_pads_and_trims_zeros():
    assert normalize([1, 0, 0], 2).multiset() == normalize([1, 0], 2).multiset()
    assert normalize([1], 3).entries == (1, 0, 0)
    assert all(isinstance(e, Rational) for e in normalize([1], 3).entries)
    with pytest.raises(ParameterError):
        normalize([1, 2], 1)


def test_dual_types():
    assert dual_type(LieType.orthogonal(8)) == LieType.orthogonal(8)
    assert dual_type(LieType.orthogonal(7)) == LieType.symplectic(6)
    assert dual_type(LieType.symplectic(6)) == LieType.orthogonal(7)


@pytest.mark.parametrize("lie_type", [LieType.orthogonal(8), LieType.orthogonal(9), LieType.symplectic(8)], ids=str)
def test_duality_reverses_order_and_is_idempotent_on_images(lie_type):
    dual = dual_type(lie_type)
    orbits = list(valid_partitions(lie_type))
    regular, zero = orbits[0], orbits[-1]
    assert bv_dual(regular, lie_type) == Partition.of(*[1] * dual.m)
    assert bv_dual(zero, lie_type) == next(valid_partitions(dual))
    for orbit in orbits:
        image = bv_dual(orbit, lie_type)
        assert bv_dual(bv_dual(image, dual), lie_type) == image


def test_certificate_anchor():
    cert = check_special_unipotent(8, 4, 2, 3)
    assert cert.hypotheses_met
    assert cert.passed
    assert cert.dual_orbit == (5, 5, 1, 1)
    assert sorted(cert.inf_char) == sorted(["2", "2", "1", "1", "0", "0"])
    assert cert.zero_check is True


@pytest.mark.parametrize(
    "p, q, t, n, expected",
    [(4, 4, 0, 1, (5, 3)), (5, 3, 2, 2, (3, 3, 1, 1)), (8, 4, 2, 3, (5, 5, 1, 1)), (5, 2, 1, 1, (4, 2))],
)
def test_expected_dual_orbit(p, q, t, n, expected):
    assert expected_dual_orbit(p, q, t, n).rows == expected


def test_certificates_on_the_grid():
    checked = 0
    for p, q, t, n in product(range(13), range(13), range(5), range(5)):
        if q + t < 2 * n or not q >= n >= t:
            continue
        cert = check_special_unipotent(p, q, t, n)
        if not cert.hypotheses_met:
            continue
        assert cert.d_matches, (p, q, t, n)
        assert cert.special, (p, q, t, n)
        assert cert.multiset_equal, (p, q, t, n)
        assert cert.passed, (p, q, t, n)
        checked += 1
    assert checked > 100


def test_infchar_of_the_anchor():
    lam = inf_char_theta_L(8, 4, 2, 3)
    assert lam.rank == 6
    assert lam.to_json() == ["2", "2", "1", "1", "0", "0"]


def test_failed_hypotheses_are_recorded():
    cert = check_special_unipotent(8, 4, 2, 3, dim_mu=2)
    assert not cert.hypotheses_met
    assert "dim mu = 1" in cert.hypotheses_failed
    assert not cert.passed
    outside = check_special_unipotent(4, 4, 0, 3)
    assert not outside.passed
    assert outside.note.startswith("hypotheses not met")
