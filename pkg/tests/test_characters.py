from collections import Counter
from itertools import product

import pytest
from pydantic import ValidationError

from theta_orbits.characters.decompose import branch_O, branch_one, decompose, multiplicity
from theta_orbits.characters.formal import FormalCharacter, O, ProductGroup, U
from theta_orbits.characters.graded import fock_graded_character, nullcone_graded_character
from theta_orbits.characters.ideal_oracle import quotient_dims
from theta_orbits.characters.irreps import irrep_character, o_dim, product_irrep_character, u_dim
from theta_orbits.characters.labels import (
    OLabel,
    det_o,
    from_partition,
    make_o_label,
    tensor_det,
    to_partition,
    trivial_o,
)
from theta_orbits.dualpairs.params import DualPairParams
from theta_orbits.errors import ParameterError


def _o_labels(b, largest=2):
    labels = set()
    for nu in product(range(largest + 1), repeat=b // 2):
        if any(x < y for x, y in zip(nu, nu[1:])):
            continue
        for eps in (1, -1):
            labels.add(make_o_label(b, nu, eps))
    return sorted(labels)


def test_dimensions():
    assert u_dim(2, (1, 0)) == 2
    assert u_dim(3, (2, 1, 0)) == 8
    assert o_dim(3, OLabel((2,), 1)) == 5
    assert o_dim(2, OLabel((1,), 1)) == 2
    assert o_dim(4, OLabel((1, 0), 1)) == 4
    assert o_dim(4, OLabel((1, 1), 1)) == 6
    assert o_dim(5, det_o(5)) == 1


@pytest.mark.parametrize("b", range(1, 6))
def test_character_dims_match_weyl(b):
    for label in _o_labels(b):
        assert irrep_character(O(b), label).dim() == o_dim(b, label)


def test_partition_labels():
    assert from_partition(3, (1, 1)) == OLabel((1,), -1)
    assert to_partition(3, OLabel((1,), -1)) == (1, 1)
    assert from_partition(2, (), det_twist=1) == det_o(2)
    assert tensor_det(4, OLabel((1, 1), 1)) == OLabel((1, 1), 1)
    with pytest.raises(ParameterError):
        from_partition(2, (1, 1, 1))


def test_decompose_tensor_square_of_standard_o3():
    standard = irrep_character(O(3), OLabel((1,), 1))
    square = standard.tensor(standard)
    assert decompose(square) == {
        (OLabel((2,), 1),): 1,
        (OLabel((1,), -1),): 1,
        (OLabel((0,), 1),): 1,
    }


def test_decompose_product_group():
    group = ProductGroup.of(O(2), U(2))
    labels = (OLabel((1,), 1), (1, 0))
    ch = product_irrep_character(group, labels).scaled(3)
    assert decompose(ch) == {labels: 3}
    assert multiplicity(ch + FormalCharacter.trivial(group), (trivial_o(2), (0, 0))) == 1


def test_characters_reject_sectors_of_another_group():
    group = ProductGroup.of(O(2), U(2))
    FormalCharacter(group=group, sectors={(1,): {(0, 1, -1): 2}})
    with pytest.raises(ValidationError):
        FormalCharacter(group=group, sectors={(0, 0): {(0, 0, 0): 1}})
    with pytest.raises(ValidationError):
        FormalCharacter(group=group, sectors={(0,): {(0, 0): 1}})
    with pytest.raises(ParameterError):
        ProductGroup.of(O(2), ("Sp", 4))
    with pytest.raises(ValidationError):
        FormalCharacter.trivial(group).group = ProductGroup.of(U(1))


def test_shift_u_tensors_with_det():
    group = ProductGroup.of(U(2))
    ch = product_irrep_character(group, ((1, 0),)).shift_U(0, -1)
    assert decompose(ch) == {((0, -1),): 1}


def test_branch_o3_to_o2():
    assert Counter(branch_one(3, OLabel((2,), 1))) == Counter(
        {OLabel((2,), 1): 1, OLabel((1,), 1): 1, OLabel((0,), 1): 1}
    )


@pytest.mark.parametrize("b", range(1, 6))
def test_branching_matches_character_restriction(b):
    for label in _o_labels(b):
        restricted = irrep_character(O(b), label).restrict_orthogonal(0)
        expected = {(lower,): mult for lower, mult in Counter(branch_one(b, label)).items()}
        assert decompose(restricted) == expected, label


def test_branch_o_steps():
    branched = branch_O(OLabel((1, 0), 1), 4, 2)
    assert branched[trivial_o(2)] == 2
    assert branched[OLabel((1,), 1)] == 1
    with pytest.raises(ParameterError):
        branch_O(trivial_o(2), 2, 3)


def test_fock_dims():
    fock = fock_graded_character(DualPairParams.osp(3, 3, 0, 1), 3)
    assert fock.dims() == [1, 6, 21, 56]
    with pytest.raises(ParameterError):
        fock_graded_character(DualPairParams.osp(3, 3, 0, 1), 3, max_terms=10)


@pytest.mark.parametrize(
    "pair, expected",
    [
        ((3, 3, 0, 1), [1, 6, 19, 44, 85, 146, 231]),
        ((4, 4, 0, 1), [1, 8, 34, 104, 259, 560, 1092]),
        ((4, 2, 0, 1), [1, 6, 19, 44, 85, 146, 231]),
    ],
)
def test_null_cone_character_matches_ideal_quotient(pair, expected):
    pp = DualPairParams.osp(*pair)
    graded = nullcone_graded_character(pp, 6)
    assert graded.dims() == expected
    assert quotient_dims(pp, 6) == expected


def test_null_cone_needs_stable_range():
    with pytest.raises(ParameterError):
        nullcone_graded_character(DualPairParams.osp(2, 2, 0, 1), 2)


def test_charge_filter_needs_rank_one():
    with pytest.raises(ParameterError):
        quotient_dims(DualPairParams.osp(6, 4, 0, 2), 2, charge=0)
