from quasifiliform_tp.catalog import (
    Family,
    FamilyError,
    FamilyId,
    list_families,
    make_algebra,
    parse_family,
    valid_dimensions,
)
from quasifiliform_tp.lie import jacobi_check, nilindex

import pytest

from dotenv import find_dotenv, load_dotenv

from fractions import Fraction


load_dotenv(find_dotenv())


def test_g1n1_5_brackets():
    alg = make_algebra(FamilyId.of("g1n1", 5))
    assert alg.brackets == {
        (1, 2): {3: Fraction(1)},
        (1, 3): {4: Fraction(1)},
        (2, 3): {5: Fraction(1)},
    }


def test_g2_9_brackets():
    alg = make_algebra(FamilyId.of(Family.G2_9))
    assert alg.structure(2, 5) == {7: Fraction(3)}
    assert alg.structure(3, 4) == {7: Fraction(-2)}


@pytest.mark.parametrize(
    "family, n, message",
    [
        ("g1n1", 6, "n must be odd"),
        ("g1n1", 3, "n must be >= 5"),
        ("g3n1", 6, "n must be >= 7"),
        ("g1_7", 8, "fixed dimension 7"),
        ("g4n1", 7, "Unknown family"),
    ],
)
def test_invalid_family_ids(family: str, n: int, message: str):
    with pytest.raises(FamilyError, match=message):
        FamilyId.of(family, n)


def test_fixed_dimension_defaults():
    assert FamilyId.of("G3_11").n == 11
    assert FamilyId.of("g3_11").label == "g3_11"
    assert FamilyId.of("g2n1", 8).label == "g2n1(n=8)"
    with pytest.raises(FamilyError):
        FamilyId.of("g2n1")


def test_list_families():
    families = list_families()
    assert len(families) == 6
    constraints = {info.family: info.constraint for info in families}
    assert constraints[Family.G3N1] == "n >= 7"
    assert all(info.constraint for info in families)


def test_valid_dimensions():
    assert valid_dimensions("g1n1", 11) == [5, 7, 9, 11]
    assert valid_dimensions("g3n1", 9) == [7, 8, 9]
    assert valid_dimensions("g2_9", 8) == []
    assert parse_family(" G2N1 ") == Family.G2N1


def test_filiform_rows_agree():
    """g1n1 and g2n1 share the rows [e1, ei] = e(i+1); only rows involving e_n differ."""
    for n in (5, 7, 9):
        g1 = make_algebra(FamilyId.of("g1n1", n)).brackets
        g2 = make_algebra(FamilyId.of("g2n1", n)).brackets
        filiform = {(1, i): {i + 1: Fraction(1)} for i in range(2, n - 1)}
        assert {pair: v for pair, v in g1.items() if pair[0] == 1} == filiform
        assert {pair: v for pair, v in g2.items() if pair[0] == 1} == filiform


@pytest.mark.parametrize("family", list(Family))
def test_catalog_is_quasi_filiform(family: Family):
    for n in valid_dimensions(family, 13):
        alg = make_algebra(FamilyId.of(family, n))
        assert jacobi_check(alg).passed
        assert nilindex(alg) == n - 1


@pytest.mark.slow
@pytest.mark.parametrize("family", list(Family))
def test_catalog_is_quasi_filiform_up_to_25(family: Family):
    for n in valid_dimensions(family, 25):
        alg = make_algebra(FamilyId.of(family, n))
        assert jacobi_check(alg).passed
        assert nilindex(alg) == n - 1
