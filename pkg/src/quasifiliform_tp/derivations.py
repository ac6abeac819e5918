"""delta-derivations of a Lie algebra: exact solution spaces and closed-form bases.

A linear map ``phi`` is a delta-derivation when
``phi([x, y]) = delta * ([phi(x), y] + [x, phi(y)])`` for all ``x, y``. Maps are
vectorized column-major by image: coordinate ``(j - 1) * n + (k - 1)`` holds the
``e_k`` component of ``phi(e_j)``.
"""

from quasifiliform_tp.catalog import Family, FamilyId, make_algebra, validate_family
from quasifiliform_tp.exact_linalg import (
    DimensionMismatchError,
    Matrix,
    SparseVector,
    Subspace,
    axpy,
    nullspace,
    to_rational,
)
from quasifiliform_tp.lie import LieAlgebra
from quasifiliform_tp.models import TheoremReport
from quasifiliform_tp.symbolic import (
    local_name,
    parameter_sort_key,
    parse_expression,
    to_fraction,
)
from quasifiliform_tp.utils import format_rational

from pydantic import BaseModel, ConfigDict, field_validator

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
import logging

import sympy

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


class DerivationProblem(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    algebra: LieAlgebra
    """The algebra whose delta-derivations are sought"""
    delta: Fraction = HALF
    """The scalar of the defining identity"""

    @field_validator("delta", mode="before")
    @classmethod
    def _exact_delta(cls, value) -> Fraction:
        return to_rational(value)


def vector_index(n: int, j: int, k: int) -> int:
    """Coordinate of the ``e_k`` component of ``phi(e_j)`` (1-based ``j, k``)."""
    return (j - 1) * n + (k - 1)


def map_to_vector(m: Matrix) -> SparseVector:
    """Vectorizes a map column-major by image."""
    n = m.cols
    return {
        vector_index(n, j + 1, k + 1): m[k, j]
        for j in range(n)
        for k in range(n)
        if m[k, j]
    }


def vector_to_map(v: SparseVector, n: int) -> Matrix:
    """Reshapes a vectorized map to the matrix whose column ``j`` is ``phi(e_j)``."""
    rows: list[SparseVector] = [{} for _ in range(n)]
    for index, value in v.items():
        j, k = divmod(index, n)
        rows[k][j] = value
    return Matrix.from_sparse_rows(rows, n)


def image(m: Matrix, j: int) -> SparseVector:
    """``phi(e_j)`` as a sparse vector with 1-based keys."""
    return {k + 1: x for k, x in enumerate(m.column(j - 1)) if x}


class DerivationSpace:
    """A linear space of maps held by the canonical basis of its vectorization.

    :ivar algebra_dim: Dimension ``n`` of the algebra the maps act on
    :ivar basis: Subspace of Q^(n*n)
    :ivar name: Label of the algebra
    :ivar delta: Scalar of the defining identity
    """

    def __init__(self, algebra_dim: int, basis: Subspace, name: str = "", delta: Fraction = HALF):
        if basis.ambient_dim != algebra_dim * algebra_dim:
            raise DimensionMismatchError(
                f"A space of maps on dimension {algebra_dim} lives in dimension "
                f"{algebra_dim * algebra_dim}, got {basis.ambient_dim}"
            )
        self.algebra_dim = algebra_dim
        self.basis = basis
        self.name = name
        self.delta = Fraction(delta)

    @property
    def dim(self) -> int:
        return self.basis.dim

    def maps(self) -> list[Matrix]:
        return [vector_to_map(v, self.algebra_dim) for v in self.basis.sparse_basis]

    def contains(self, m: Matrix) -> bool:
        if (m.rows, m.cols) != (self.algebra_dim, self.algebra_dim):
            raise DimensionMismatchError(
                f"Expected a {self.algebra_dim}x{self.algebra_dim} map, got {m.rows}x{m.cols}"
            )
        return self.basis.contains(map_to_vector(m))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DerivationSpace):
            return NotImplemented
        return self.algebra_dim == other.algebra_dim and self.basis == other.basis

    def __repr__(self) -> str:
        return f"DerivationSpace(name={self.name!r}, delta={format_rational(self.delta)}, dim={self.dim})"


def assemble_constraints(p: DerivationProblem) -> Matrix:
    """Builds the linear system whose kernel is the space of delta-derivations.

    There is one row per pair ``i < j`` and coordinate ``k``, in that order,
    encoding ``phi([e_i,e_j])_k - delta*([phi(e_i),e_j] + [e_i,phi(e_j)])_k = 0``
    in the ``n*n`` unknowns. Rows that happen to vanish are kept, so the matrix
    always has ``C(n, 2) * n`` rows.

    :param p: The algebra and the scalar delta
    :type p: DerivationProblem
    :return: The constraint matrix
    :rtype: Matrix
    """
    alg, delta = p.algebra, Fraction(p.delta)
    n = alg.dim
    # right[j][k] lists (m, c) with [e_m, e_j] = c e_k + ...
    right: dict[int, dict[int, list[tuple[int, Fraction]]]] = defaultdict(lambda: defaultdict(list))
    for j in range(1, n + 1):
        for m in range(1, n + 1):
            for k, c in alg.structure(m, j).items():
                right[j][k].append((m, c))

    rows: list[SparseVector] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            bracket_ij = alg.structure(i, j)
            for k in range(1, n + 1):
                row: SparseVector = {}
                for m, c in bracket_ij.items():
                    axpy(row, {vector_index(n, m, k): c}, Fraction(1))
                for m, c in right[j][k]:
                    axpy(row, {vector_index(n, i, m): c}, -delta)
                # [e_i, e_m] = -[e_m, e_i]
                for m, c in right[i][k]:
                    axpy(row, {vector_index(n, j, m): -c}, -delta)
                rows.append(row)
    return Matrix.from_sparse_rows(rows, n * n)


@lru_cache(maxsize=None)
def _solve(algebra: LieAlgebra, delta: Fraction) -> DerivationSpace:
    problem = DerivationProblem(algebra=algebra, delta=delta)
    logger.info(f"Solving {format_rational(delta)}-derivations of {algebra.name}")
    space = nullspace(assemble_constraints(problem))
    logger.info(f"{algebra.name}: derivation space has dimension {space.dim}")
    return DerivationSpace(algebra.dim, space, name=algebra.name, delta=delta)


def solve_derivation_space(p: DerivationProblem) -> DerivationSpace:
    """Computes the canonical basis of the delta-derivation space.

    Results are memoized per algebra and delta.

    :param p: The algebra and the scalar delta
    :type p: DerivationProblem
    :return: The space of delta-derivations
    :rtype: DerivationSpace
    """
    return _solve(p.algebra, Fraction(p.delta))


def half_derivation_defect(
    alg: LieAlgebra, m: Matrix, delta: Fraction = HALF
) -> tuple[int, int, SparseVector] | None:
    """Finds the first basis pair where ``m`` fails the delta-derivation identity.

    :return: ``(i, j, residual)`` for the lexicographically first pair ``i < j``
        with nonzero ``phi([e_i,e_j]) - delta*([phi(e_i),e_j] + [e_i,phi(e_j)])``,
        or None if ``m`` is a delta-derivation
    :raises DimensionMismatchError: Raised if ``m`` is not ``alg.dim`` square
    """
    n = alg.dim
    if (m.rows, m.cols) != (n, n):
        raise DimensionMismatchError(f"Expected a {n}x{n} map, got {m.rows}x{m.cols}")
    images = {j: image(m, j) for j in range(1, n + 1)}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            residual: SparseVector = {}
            for c_index, c in alg.structure(i, j).items():
                axpy(residual, images[c_index], c)
            axpy(residual, alg.bracket_sparse(images[i], {j: Fraction(1)}), -delta)
            axpy(residual, alg.bracket_sparse({i: Fraction(1)}, images[j]), -delta)
            if residual:
                return i, j, residual
    return None


def is_half_derivation(alg: LieAlgebra, m: Matrix, delta: Fraction = HALF) -> bool:
    """Checks the delta-derivation identity (delta = 1/2 by default) on all basis pairs.

    :raises DimensionMismatchError: Raised if ``m`` is not ``alg.dim`` square
    """
    return half_derivation_defect(alg, m, delta) is None


def invariant_subspace_check(space: DerivationSpace, subspace: Subspace) -> bool:
    """Tells whether every map of ``space`` sends ``subspace`` into itself."""
    for m in space.maps():
        for v in subspace.sparse_basis:
            mapped = m.apply(v)
            if not subspace.contains(mapped):
                return False
    return True


class _Display:
    """Accumulates a closed-form map ``phi(e_j) = sum_k coeff_jk e_k``."""

    def __init__(self, family_id: FamilyId):
        self.n = family_id.n
        self.namespace = f"predicted:{family_id.label}"
        self.images: dict[tuple[int, int], sympy.Expr] = defaultdict(lambda: sympy.Integer(0))

    def add(self, j: int, k: int, coefficient: str):
        self.images[(j, k)] += parse_expression(coefficient, self.namespace)

    def basis_maps(self) -> dict[str, SparseVector]:
        """One vectorized map per parameter: that parameter 1, all others 0."""
        symbols = set()
        for expr in self.images.values():
            symbols |= expr.free_symbols
        ordered = sorted(symbols, key=lambda s: parameter_sort_key(local_name(s)))
        zero = {s: sympy.S.Zero for s in ordered}
        out = {}
        for symbol in ordered:
            values = dict(zero)
            values[symbol] = sympy.S.One
            vector = {}
            for (j, k), expr in self.images.items():
                c = to_fraction(expr.xreplace(values))
                if c:
                    vector[vector_index(self.n, j, k)] = c
            out[local_name(symbol)] = vector
        return out


def _display(family_id: FamilyId) -> _Display:
    d = _Display(family_id)
    n = family_id.n
    family = family_id.family

    if family == Family.G1N1 and n == 5:
        for i in range(1, 6):
            d.add(1, i, f"alpha_{i}")
            d.add(2, i, f"beta_{i}")
        d.add(3, 3, "1/2*(alpha_1 + beta_2)")
        d.add(3, 4, "1/2*beta_3")
        d.add(3, 5, "-1/2*alpha_3")
        d.add(4, 4, "1/4*(3*alpha_1 + beta_2)")
        d.add(4, 5, "1/2*alpha_2")
        d.add(5, 4, "1/2*beta_1")
        d.add(5, 5, "1/4*(alpha_1 + 3*beta_2)")
    elif family == Family.G1N1:
        for i in range(1, n + 1):
            d.add(1, i, f"alpha_{i}")
        d.add(2, 2, "alpha_1")
        for i in (n - 2, n - 1, n):
            d.add(2, i, f"beta_{i}")
        d.add(3, 3, "alpha_1")
        d.add(3, n - 1, f"1/2*beta_{n - 2}")
        d.add(3, n, f"-1/2*alpha_{n - 2}")
        for i in range(4, n):
            d.add(i, i, "alpha_1")
            d.add(i, n, f"({(-1) ** i})/2*alpha_{n - i + 1}")
        d.add(n, n, "alpha_1")
    elif family == Family.G2N1 and n == 5:
        for i in range(1, 6):
            d.add(1, i, f"alpha_{i}")
        for i in range(2, 6):
            d.add(2, i, f"beta_{i}")
        d.add(3, 3, "1/2*(alpha_1 + beta_2)")
        d.add(3, 4, "1/2*(beta_3 - alpha_5)")
        d.add(4, 4, "1/4*(3*alpha_1 + beta_2)")
        d.add(5, 3, "-alpha_2")
        d.add(5, 4, "gamma_4")
        d.add(5, 5, "1/2*(3*alpha_1 - beta_2)")
    elif family == Family.G2N1 and n == 6:
        for i in range(1, 7):
            d.add(1, i, f"alpha_{i}")
        d.add(2, 2, "alpha_1")
        d.add(2, 3, "-3*alpha_6")
        d.add(2, 4, "beta_4")
        d.add(2, 5, "beta_5")
        d.add(3, 3, "alpha_1")
        d.add(3, 4, "-2*alpha_6")
        d.add(3, 5, "1/2*beta_4")
        d.add(4, 4, "alpha_1")
        d.add(4, 5, "-3/2*alpha_6")
        d.add(5, 5, "alpha_1")
        d.add(6, 3, "-alpha_2")
        d.add(6, 4, "-alpha_3")
        d.add(6, 5, "gamma_5")
        d.add(6, 6, "alpha_1")
    elif family == Family.G2N1:
        for i in range(1, n):
            d.add(1, i, f"alpha_{i}")
        d.add(2, 2, "alpha_1")
        d.add(2, n - 2, f"beta_{n - 2}")
        d.add(2, n - 1, f"beta_{n - 1}")
        d.add(3, 3, "alpha_1")
        d.add(3, n - 1, f"1/2*beta_{n - 2}")
        for i in range(4, n):
            d.add(i, i, "alpha_1")
        for i in range(3, n - 1):
            d.add(n, i, f"-alpha_{i - 1}")
        d.add(n, n - 1, f"gamma_{n - 1}")
        d.add(n, n, "alpha_1")
    elif family == Family.G3N1 and n == 7:
        for i in range(1, 7):
            d.add(1, i, f"alpha_{i}")
        d.add(2, 2, "alpha_1")
        d.add(2, 4, "4*alpha_2")
        d.add(2, 5, "beta_5")
        d.add(2, 6, "beta_6")
        d.add(3, 3, "alpha_1")
        d.add(3, 5, "2*alpha_2")
        d.add(3, 6, "1/2*(beta_5 - alpha_3)")
        d.add(4, 4, "alpha_1")
        d.add(4, 6, "3/2*alpha_2")
        d.add(5, 5, "alpha_1")
        d.add(6, 6, "alpha_1")
        d.add(7, 3, "-alpha_2")
        d.add(7, 4, "-alpha_3")
        d.add(7, 5, "-alpha_4")
        d.add(7, 6, "gamma_6")
        d.add(7, 7, "alpha_1")
    elif family == Family.G3N1:
        d.add(1, 1, "alpha_1")
        for i in range(3, n):
            d.add(1, i, f"alpha_{i}")
        d.add(2, 2, "alpha_1")
        for i in range(5, n - 2):
            d.add(2, i, f"alpha_{i - 2}")
        d.add(2, n - 2, f"beta_{n - 2}")
        d.add(2, n - 1, f"beta_{n - 1}")
        d.add(3, 3, "alpha_1")
        d.add(3, n - 1, f"1/2*(beta_{n - 2} - alpha_{n - 4})")
        for i in range(4, n):
            d.add(i, i, "alpha_1")
        for i in range(4, n - 1):
            d.add(n, i, f"-alpha_{i - 1}")
        d.add(n, n - 1, f"gamma_{n - 1}")
        d.add(n, n, "alpha_1")
    elif family == Family.G1_7:
        d.add(1, 1, "alpha_1")
        for i in range(3, 8):
            d.add(1, i, f"alpha_{i}")
        d.add(2, 2, "alpha_1")
        d.add(2, 4, "-1/3*alpha_3")
        for i in (5, 6, 7):
            d.add(2, i, f"beta_{i}")
        d.add(3, 3, "alpha_1")
        d.add(3, 5, "-2/3*alpha_3")
        d.add(3, 6, "1/2*(beta_5 - alpha_4)")
        d.add(3, 7, "-1/2*alpha_5")
        d.add(4, 4, "alpha_1")
        d.add(4, 6, "-1/3*alpha_3")
        d.add(4, 7, "1/2*alpha_4")
        d.add(5, 5, "alpha_1")
        d.add(5, 7, "-1/2*alpha_3")
        d.add(6, 6, "alpha_1")
        d.add(7, 7, "alpha_1")
    elif family == Family.G2_9:
        d.add(1, 1, "alpha_1")
        for i in range(5, 10):
            d.add(1, i, f"alpha_{i}")
        d.add(2, 2, "alpha_1")
        d.add(2, 6, "1/3*alpha_5")
        for i in (7, 8, 9):
            d.add(2, i, f"beta_{i}")
        d.add(3, 3, "alpha_1")
        d.add(3, 7, "-4/3*alpha_5")
        d.add(3, 8, "1/2*(beta_7 - 5*alpha_6)")
        d.add(3, 9, "-1/2*alpha_7")
        d.add(4, 4, "alpha_1")
        d.add(4, 8, "1/3*alpha_5")
        d.add(4, 9, "1/2*alpha_6")
        d.add(5, 5, "alpha_1")
        d.add(5, 9, "-1/2*alpha_5")
        for i in range(6, 10):
            d.add(i, i, "alpha_1")
    elif family == Family.G3_11:
        d.add(1, 1, "alpha_1")
        for i in range(6, 12):
            d.add(1, i, f"alpha_{i}")
        d.add(2, 2, "alpha_1")
        d.add(2, 7, "-alpha_6")
        d.add(2, 8, "-alpha_7")
        for i in (9, 10, 11):
            d.add(2, i, f"beta_{i}")
        d.add(3, 3, "alpha_1")
        d.add(3, 10, "1/2*beta_9")
        d.add(3, 11, "-1/2*alpha_9")
        d.add(4, 4, "alpha_1")
        d.add(4, 10, "1/2*alpha_7")
        d.add(4, 11, "1/2*alpha_8")
        d.add(5, 5, "alpha_1")
        d.add(5, 10, "-1/2*alpha_6")
        d.add(5, 11, "-1/2*alpha_7")
        d.add(6, 6, "alpha_1")
        d.add(6, 11, "1/2*alpha_6")
        for i in range(7, 12):
            d.add(i, i, "alpha_1")
    return d


def predicted_parameters(family_id: FamilyId) -> list[str]:
    """Names of the free parameters of the closed-form 1/2-derivation display."""
    validate_family(family_id)
    return list(_display(family_id).basis_maps())


def predicted_space(family_id: FamilyId) -> DerivationSpace:
    """Builds the closed-form space of 1/2-derivations of a catalog algebra.

    Each free parameter of the display contributes the map obtained by setting
    it to 1 and all other parameters to 0.

    :param family_id: Family and dimension
    :type family_id: FamilyId
    :return: The span of the closed-form maps
    :rtype: DerivationSpace
    :raises FamilyError: Raised if the dimension violates the family constraint
    """
    validate_family(family_id)
    n = family_id.n
    maps = _display(family_id).basis_maps()
    return DerivationSpace(
        n, Subspace.span(maps.values(), n * n), name=family_id.label, delta=HALF
    )


def _matrix_strings(v: SparseVector, n: int) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in vector_to_map(v, n).tolist()]


def verify_theorem(family_id: FamilyId) -> TheoremReport:
    """Compares the solved and the closed-form 1/2-derivation spaces.

    :param family_id: Family and dimension
    :type family_id: FamilyId
    :return: Dimensions, equality, and on mismatch the basis maps of each space
        missing from the other
    :rtype: TheoremReport
    """
    n = family_id.n
    solved = solve_derivation_space(DerivationProblem(algebra=make_algebra(family_id)))
    predicted = predicted_space(family_id)
    equal = solved == predicted
    only_in_solved, only_in_predicted = [], []
    if not equal:
        logger.warning(
            f"{family_id.label}: solved dimension {solved.dim} differs from "
            f"predicted dimension {predicted.dim}"
        )
        only_in_solved = [
            _matrix_strings(v, n)
            for v in solved.basis.sparse_basis
            if not predicted.basis.contains(v)
        ]
        only_in_predicted = [
            _matrix_strings(v, n)
            for v in predicted.basis.sparse_basis
            if not solved.basis.contains(v)
        ]
    return TheoremReport(
        family=family_id.family.value,
        n=n,
        solved_dim=solved.dim,
        predicted_dim=predicted.dim,
        equal=equal,
        only_in_solved=only_in_solved,
        only_in_predicted=only_in_predicted,
    )
