import pytest

from theta_orbits.errors import ParameterError
from theta_orbits.partitions.signed_partition import (
    Family,
    SignedPartition,
    require_valid,
    signature,
    validate_signed,
)


def test_parse_and_text():
    sp = SignedPartition.parse("2+^2 2-^2 1+^2", Family.ORTHOGONAL)
    assert sp.to_text() == "2+^2 2-^2 1+^2"
    assert sp.to_superscript() == "2₊²2₋²1₊²"
    assert sp.unsigned().rows == (2, 2, 2, 2, 1, 1)
    assert signature(sp) == (6, 4)


def test_rows_merge_into_canonical_order():
    sp = SignedPartition.build(Family.ORTHOGONAL, (1, "-", 1), (3, "+", 1), (1, "-", 2), (3, "-", 0))
    assert sp.to_text() == "3+ 1-^3"
    assert sp == SignedPartition.parse("1-^3 3+", Family.ORTHOGONAL)


def test_empty_diagram():
    sp = SignedPartition(family=Family.SYMPLECTIC)
    assert sp.to_superscript() == "∅"
    assert signature(sp) == (0, 0)


def test_parse_rejects_garbage():
    with pytest.raises(ParameterError):
        SignedPartition.parse("2+^x", Family.ORTHOGONAL)


def test_orthogonal_pairing_rule():
    ok, violations = validate_signed(SignedPartition.parse("2+ 1-", Family.ORTHOGONAL))
    assert not ok
    assert "length 2" in violations[0]
    assert validate_signed(SignedPartition.parse("2+ 2- 3+ 1-", Family.ORTHOGONAL))[0]


def test_symplectic_pairing_rule():
    assert validate_signed(SignedPartition.parse("2-^2 1+ 1-", Family.SYMPLECTIC))[0]
    with pytest.raises(ParameterError):
        require_valid(SignedPartition.parse("1+^2", Family.SYMPLECTIC))


def test_signature_of_odd_rows():
    sp = SignedPartition.parse("3+^2 3- 1-", Family.ORTHOGONAL)
    assert signature(sp) == (2 * 2 + 1, 2 * 1 + 2 + 1)


def test_to_json():
    sp = SignedPartition.parse("3+ 1-", Family.ORTHOGONAL)
    assert sp.to_json() == {
        "family": "orthogonal",
        "rows": [{"len": 3, "sign": "+", "mult": 1}, {"len": 1, "sign": "-", "mult": 1}],
    }
