from quasifiliform_tp.exact_linalg import (
    DimensionMismatchError,
    Matrix,
    Subspace,
    axpy,
    equal_span,
    nullspace,
    rank,
    rref,
    to_rational,
)

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dotenv import find_dotenv, load_dotenv

from fractions import Fraction


load_dotenv(find_dotenv())

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_rows: int = 5, max_cols: int = 5):
    rows = draw(st.integers(min_value=0, max_value=max_rows))
    cols = draw(st.integers(min_value=1, max_value=max_cols))
    # Mostly zeros, like the constraint matrices
    entry = st.one_of(st.just(Fraction(0)), st.just(Fraction(0)), rationals)
    entries = draw(st.lists(entry, min_size=rows * cols, max_size=rows * cols))
    return Matrix(rows, cols, entries)


def test_rref_identity():
    reduced, pivots = rref(Matrix.identity(3))
    assert reduced == Matrix.identity(3)
    assert pivots == [0, 1, 2]


def test_rref_zero():
    reduced, pivots = rref(Matrix.zeros(2, 3))
    assert reduced == Matrix.zeros(2, 3)
    assert pivots == []


def test_rref_rank_one():
    reduced, pivots = rref(Matrix.from_rows([[2, 4], [1, 2]]))
    assert reduced == Matrix.from_rows([[1, 2], [0, 0]])
    assert pivots == [0]


def test_nullspace_examples():
    assert nullspace(Matrix.identity(2)).dim == 0

    kernel = nullspace(Matrix.zeros(2, 3))
    assert kernel.dim == 3
    assert kernel == Subspace.full(3)

    kernel = nullspace(Matrix.from_rows([[1, 2], [2, 4]]))
    assert kernel.basis == ((Fraction(1), Fraction(-1, 2)),)


def test_equal_span_examples():
    assert equal_span(Subspace.span([(1, 0)], 2), Subspace.span([(2, 0)], 2))
    assert not equal_span(Subspace.span([(1, 0)], 2), Subspace.span([(0, 1)], 2))
    assert equal_span(Subspace.span([(1, 1), (1, -1)], 2), Subspace.full(2))

    with pytest.raises(DimensionMismatchError):
        equal_span(Subspace.zero(2), Subspace.zero(3))


def test_subspace_membership():
    plane = Subspace.span([(1, 1, 0), (0, 1, 1)], 3)
    assert plane.dim == 2
    assert (1, 2, 1) in plane
    assert not plane.contains((1, 0, 0))
    assert plane.contains({0: Fraction(1), 2: Fraction(-1)})


def test_to_rational_rejects_floats():
    assert to_rational("3/6") == Fraction(1, 2)
    with pytest.raises(ValueError):
        to_rational(0.5)


def test_axpy_drops_cancelled_entries():
    target = {0: Fraction(1), 1: Fraction(2)}
    axpy(target, {0: Fraction(1)}, Fraction(-1))
    assert target == {1: Fraction(2)}


def test_matrix_operations():
    m = Matrix.from_rows([[1, 2], [3, 4]])
    assert m.apply((1, 1)) == (Fraction(3), Fraction(7))
    assert m @ Matrix.identity(2) == m
    assert m.transpose() == Matrix.from_rows([[1, 3], [2, 4]])

    with pytest.raises(DimensionMismatchError):
        Matrix.from_rows([[1, 2], [3]])
    with pytest.raises(DimensionMismatchError):
        m @ Matrix.identity(3)


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_nullspace_vectors_are_annihilated(m: Matrix):
    for v in nullspace(m).basis:
        assert all(x == 0 for x in m.apply(v))


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_rank_nullity(m: Matrix):
    assert rank(m) + nullspace(m).dim == m.cols


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_rref_is_idempotent(m: Matrix):
    reduced, pivots = rref(m)
    again, again_pivots = rref(reduced)
    assert again == reduced
    assert again_pivots == pivots


@given(matrices(), rationals.filter(lambda c: c != 0))
@settings(max_examples=40, deadline=None)
def test_row_space_is_invariant_under_scaling(m: Matrix, c: Fraction):
    scaled = Matrix(m.rows, m.cols, [c * x for x in m.entries])
    assert equal_span(Subspace.span(m.tolist(), m.cols), Subspace.span(scaled.tolist(), m.cols))
