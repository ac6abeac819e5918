import pytest

from quasifiliform_tp.catalog import FamilyId, make_algebra
from quasifiliform_tp.lie import LieAlgebra
from quasifiliform_tp.tpa.base import CommutativeProduct, instantiate
from quasifiliform_tp.tpa.registry import get_variant

from fractions import Fraction


# Grid used by the default (fast) run; the slow suite goes up to n = 21
FAST_GRID = [5, 6, 7, 8, 9, 10, 11]
FAST_SAMPLES = 3

HALF_DERIVATION_DIMENSIONS = {
    ("g1n1", 5): 10,
    ("g1n1", 7): 10,
    ("g1n1", 9): 12,
    ("g1n1", 11): 14,
    ("g2n1", 5): 10,
    ("g2n1", 6): 9,
    ("g2n1", 7): 9,
    ("g2n1", 8): 10,
    ("g2n1", 11): 13,
    ("g3n1", 7): 9,
    ("g3n1", 8): 9,
    ("g3n1", 9): 10,
    ("g3n1", 10): 11,
    ("g1_7", 7): 9,
    ("g2_9", 9): 9,
    ("g3_11", 11): 10,
}


@pytest.fixture
def g1n1_5() -> LieAlgebra:
    return make_algebra(FamilyId.of("g1n1", 5))


@pytest.fixture
def g2n1_7() -> LieAlgebra:
    return make_algebra(FamilyId.of("g2n1", 7))


@pytest.fixture
def g1n1_7() -> LieAlgebra:
    return make_algebra(FamilyId.of("g1n1", 7))


@pytest.fixture
def abelian_3() -> LieAlgebra:
    return LieAlgebra(3, {}, name="abelian")


@pytest.fixture
def non_jacobi_algebra() -> LieAlgebra:
    # [e1,e2]=e3, [e2,e3]=e1, [e1,e3]=e1 breaks Jacobi at (1, 2, 3)
    return LieAlgebra(3, {(1, 2): {3: 1}, (2, 3): {1: 1}, (1, 3): {1: 1}}, name="broken")


@pytest.fixture
def non_associative_product() -> CommutativeProduct:
    return CommutativeProduct(2, {(1, 2): {1: Fraction(1)}}, name="e1e2=e1")


@pytest.fixture
def tp2_g1n1_7_at_zero() -> CommutativeProduct:
    """TP2 on g1n1(n=7) with every parameter 0: a transposed Poisson but not Poisson table."""
    v = get_variant(FamilyId.of("g1n1", 7), "TP2")
    return instantiate(v, {name: 0 for name in v.parameters})
