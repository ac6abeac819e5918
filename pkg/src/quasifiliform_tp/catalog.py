"""Constructors for the six families of quasi-filiform Lie algebras of maximum length.

Three families depend on the dimension ``n``; three are fixed in dimension 7, 9
and 11. All constructors assert the Jacobi identity before returning.
"""

from quasifiliform_tp.lie import LieAlgebra, jacobi_check

from pydantic import BaseModel, ConfigDict

from enum import Enum
from fractions import Fraction
from functools import lru_cache
import logging

logger = logging.getLogger(__name__)


class Family(str, Enum):
    G1N1 = "g1n1"
    G2N1 = "g2n1"
    G3N1 = "g3n1"
    G1_7 = "g1_7"
    G2_9 = "g2_9"
    G3_11 = "g3_11"


FIXED_DIMENSIONS = {Family.G1_7: 7, Family.G2_9: 9, Family.G3_11: 11}
MINIMUM_DIMENSIONS = {Family.G1N1: 5, Family.G2N1: 5, Family.G3N1: 7}


class FamilyError(ValueError):
    """Raised when a family tag or a dimension is not valid"""

    pass


class FamilyId(BaseModel):
    """A family tag together with a concrete dimension."""

    model_config = ConfigDict(frozen=True)

    family: Family
    """Family tag"""
    n: int
    """Dimension of the algebra"""

    @classmethod
    def of(cls, family: Family | str, n: int | None = None) -> "FamilyId":
        """Builds a validated id; ``n`` may be omitted for the fixed families.

        :raises FamilyError: Raised if the family is unknown or ``n`` violates its constraint
        """
        family = parse_family(family)
        if family in FIXED_DIMENSIONS:
            fixed = FIXED_DIMENSIONS[family]
            if n is not None and n != fixed:
                raise FamilyError(f"{family.value} has fixed dimension {fixed}, got n={n}")
            n = fixed
        elif n is None:
            raise FamilyError(f"{family.value} requires a dimension n")
        family_id = cls(family=family, n=n)
        validate_family(family_id)
        return family_id

    @property
    def label(self) -> str:
        if self.family in FIXED_DIMENSIONS:
            return self.family.value
        return f"{self.family.value}(n={self.n})"


class FamilyInfo(BaseModel):
    family: Family
    """Family tag"""
    constraint: str
    """Dimension constraint, e.g. ``n >= 7``"""
    description: str
    """Defining brackets"""


def parse_family(text: Family | str) -> Family:
    """Resolves a family tag case-insensitively.

    :raises FamilyError: Raised if the tag is unknown
    """
    if isinstance(text, Family):
        return text
    try:
        return Family(str(text).strip().lower())
    except ValueError:
        choices = ", ".join(f.value for f in Family)
        raise FamilyError(f"Unknown family {text!r}; expected one of: {choices}")


def validate_family(family_id: FamilyId):
    """Checks the dimension constraint of a family.

    :raises FamilyError: Raised with a message naming the violated constraint
    """
    family, n = family_id.family, family_id.n
    if family in FIXED_DIMENSIONS:
        if n != FIXED_DIMENSIONS[family]:
            raise FamilyError(
                f"{family.value} has fixed dimension {FIXED_DIMENSIONS[family]}, got n={n}"
            )
        return
    minimum = MINIMUM_DIMENSIONS[family]
    if n < minimum:
        raise FamilyError(f"{family.value}: n must be >= {minimum}, got n={n}")
    if family == Family.G1N1 and n % 2 == 0:
        raise FamilyError(f"{family.value}: n must be odd, got n={n}")


def is_valid(family: Family, n: int) -> bool:
    try:
        validate_family(FamilyId(family=family, n=n))
    except FamilyError:
        return False
    return True


def valid_dimensions(family: Family | str, n_max: int) -> list[int]:
    """All valid dimensions of a family up to ``n_max`` (inclusive)."""
    family = parse_family(family)
    if family in FIXED_DIMENSIONS:
        fixed = FIXED_DIMENSIONS[family]
        return [fixed] if fixed <= n_max else []
    return [n for n in range(MINIMUM_DIMENSIONS[family], n_max + 1) if is_valid(family, n)]


def list_families() -> list[FamilyInfo]:
    return [
        FamilyInfo(
            family=Family.G1N1,
            constraint="n >= 5, n odd",
            description="[e1,ei]=e(i+1) for 2<=i<=n-2; [ei,e(n-i)]=(-1)^i en for 2<=i<=(n-1)/2",
        ),
        FamilyInfo(
            family=Family.G2N1,
            constraint="n >= 5",
            description="[e1,ei]=e(i+1) for 2<=i<=n-2; [ei,en]=e(i+2) for 2<=i<=n-3",
        ),
        FamilyInfo(
            family=Family.G3N1,
            constraint="n >= 7",
            description="g2n1 brackets plus [e2,ei]=e(i+3) for 3<=i<=n-4",
        ),
        FamilyInfo(
            family=Family.G1_7,
            constraint="n = 7",
            description="filiform rows plus [e2,e3]=e5, [e2,e4]=e6, [ei,e(7-i)]=(-1)^i e7",
        ),
        FamilyInfo(
            family=Family.G2_9,
            constraint="n = 9",
            description="filiform rows plus [e2,e5]=3e7, [e2,e6]=5e8, [e3,ei]=-2e(i+3), [ei,e(9-i)]=(-1)^i e9",
        ),
        FamilyInfo(
            family=Family.G3_11,
            constraint="n = 11",
            description="filiform rows plus the fixed 11-dimensional table, [ei,e(11-i)]=(-1)^i e11",
        ),
    ]


def _filiform_rows(last: int) -> dict[tuple[int, int], dict[int, Fraction]]:
    return {(1, i): {i + 1: Fraction(1)} for i in range(2, last + 1)}


def _brackets(family_id: FamilyId) -> dict[tuple[int, int], dict[int, Fraction]]:
    family, n = family_id.family, family_id.n
    one = Fraction(1)
    if family == Family.G1N1:
        table = _filiform_rows(n - 2)
        for i in range(2, (n - 1) // 2 + 1):
            table[(i, n - i)] = {n: Fraction((-1) ** i)}
        return table
    if family in (Family.G2N1, Family.G3N1):
        table = _filiform_rows(n - 2)
        for i in range(2, n - 2):
            table[(i, n)] = {i + 2: one}
        if family == Family.G3N1:
            for i in range(3, n - 3):
                table[(2, i)] = {i + 3: one}
        return table

    fixed: dict[Family, list[tuple[int, int, int, int]]] = {
        # (i, j, k, c) for [e_i, e_j] = c e_k
        Family.G1_7: [
            (2, 3, 5, 1), (2, 4, 6, 1),
            (2, 5, 7, 1), (3, 4, 7, -1),
        ],
        Family.G2_9: [
            (2, 3, 5, 1), (2, 4, 6, 1), (2, 5, 7, 3), (2, 6, 8, 5),
            (3, 4, 7, -2), (3, 5, 8, -2),
            (2, 7, 9, 1), (3, 6, 9, -1), (4, 5, 9, 1),
        ],
        Family.G3_11: [
            (2, 3, 5, 1), (2, 4, 6, 1), (2, 6, 8, -1), (2, 7, 9, -1),
            (3, 7, 10, -1),
            (3, 4, 7, 1), (3, 5, 8, 1),
            (4, 5, 9, 1), (4, 6, 10, 1),
            (2, 9, 11, 1), (3, 8, 11, -1), (4, 7, 11, 1), (5, 6, 11, -1),
        ],
    }
    table = _filiform_rows(n - 2)
    for i, j, k, c in fixed[family]:
        table[(i, j)] = {k: Fraction(c)}
    return table


@lru_cache(maxsize=None)
def make_algebra(family_id: FamilyId) -> LieAlgebra:
    """Builds the bracket table of a catalog algebra.

    :param family_id: Family and dimension
    :type family_id: FamilyId
    :return: The Lie algebra, named after its family
    :rtype: LieAlgebra
    :raises FamilyError: Raised if the dimension violates the family constraint
    """
    validate_family(family_id)
    algebra = LieAlgebra(family_id.n, _brackets(family_id), name=family_id.label)
    report = jacobi_check(algebra)
    assert report.passed, f"{family_id.label} violates Jacobi at {report.witness}"
    logger.debug(f"Built {family_id.label} with {len(algebra.brackets)} brackets")
    return algebra
