from quasifiliform_tp.catalog import FamilyId, make_algebra
from quasifiliform_tp.exact_linalg import DimensionMismatchError, Subspace
from quasifiliform_tp.lie import (
    LieAlgebra,
    basis_vector,
    bracket,
    center,
    derived_subalgebra,
    jacobi_check,
    lower_central_series,
    nilindex,
)

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dotenv import find_dotenv, load_dotenv

from fractions import Fraction

from fixtures import abelian_3, g1n1_5, g2n1_7, non_jacobi_algebra


load_dotenv(find_dotenv())

coordinates = st.lists(
    st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=5, max_size=5
)


def e(n: int, i: int) -> tuple[Fraction, ...]:
    return basis_vector(n, i)


def test_bracket_examples(g1n1_5: LieAlgebra):
    assert bracket(g1n1_5, e(5, 1), e(5, 2)) == e(5, 3)
    assert bracket(g1n1_5, e(5, 2), e(5, 3)) == e(5, 5)
    assert bracket(g1n1_5, e(5, 3), e(5, 2)) == tuple(-x for x in e(5, 5))
    assert bracket(g1n1_5, e(5, 1), e(5, 1)) == (0,) * 5


def test_bracket_dimension_mismatch(g1n1_5: LieAlgebra):
    with pytest.raises(DimensionMismatchError):
        bracket(g1n1_5, (1, 0), e(5, 2))


@given(coordinates, coordinates)
@settings(max_examples=50, deadline=None)
def test_bracket_is_antisymmetric(x, y):
    alg = make_algebra(FamilyId.of("g1n1", 5))
    assert bracket(alg, x, y) == tuple(-c for c in bracket(alg, y, x))
    assert all(c == 0 for c in bracket(alg, x, x))


def test_invalid_bracket_table():
    with pytest.raises(ValueError):
        LieAlgebra(3, {(2, 2): {1: 1}})
    with pytest.raises(ValueError):
        LieAlgebra(3, {(1, 2): {4: 1}})


def test_jacobi(g1n1_5: LieAlgebra, non_jacobi_algebra: LieAlgebra):
    report = jacobi_check(g1n1_5)
    assert report.passed
    assert report.checked == 10

    assert jacobi_check(make_algebra(FamilyId.of("g3n1", 9))).passed

    two_dim = LieAlgebra(2, {(1, 2): {1: 1, 2: 1}})
    assert jacobi_check(two_dim).passed
    assert jacobi_check(two_dim).checked == 0

    report = jacobi_check(non_jacobi_algebra)
    assert not report.passed
    assert report.witness.indices == [1, 2, 3]


def test_lower_central_series(g1n1_5: LieAlgebra, g2n1_7: LieAlgebra, abelian_3: LieAlgebra):
    assert lower_central_series(g1n1_5) == [5, 3, 2, 0]
    assert nilindex(g1n1_5) == 4
    assert lower_central_series(abelian_3) == [3, 0]
    assert nilindex(abelian_3) == 2
    assert nilindex(g2n1_7) == 6


def test_non_nilpotent_has_no_nilindex():
    # [e1, e2] = e2 has a stable derived series span{e2}
    alg = LieAlgebra(2, {(1, 2): {2: 1}})
    assert lower_central_series(alg) == [2, 1, 1]
    assert nilindex(alg) is None


def test_center(g1n1_5: LieAlgebra, g2n1_7: LieAlgebra, abelian_3: LieAlgebra):
    assert center(g1n1_5) == Subspace.span([e(5, 4), e(5, 5)], 5)
    assert center(abelian_3) == Subspace.full(3)
    assert center(g2n1_7).contains(e(7, 6))


def test_derived_subalgebra(g1n1_5: LieAlgebra):
    assert derived_subalgebra(g1n1_5) == Subspace.span([e(5, 3), e(5, 4), e(5, 5)], 5)


def test_equality_ignores_metadata(g1n1_5: LieAlgebra):
    copy = LieAlgebra(5, g1n1_5.brackets, name=g1n1_5.name, metadata={"jacobi_passed": True})
    assert copy == g1n1_5
    assert hash(copy) == hash(g1n1_5)
