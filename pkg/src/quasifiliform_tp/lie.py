from quasifiliform_tp.exact_linalg import (
    ZERO,
    DimensionMismatchError,
    Matrix,
    SparseVector,
    Subspace,
    axpy,
    nullspace,
    to_rational,
)
from quasifiliform_tp.models import CheckReport, Witness, terms

from fractions import Fraction
from itertools import combinations
import logging
from typing import Any, Mapping, Sequence

logger = logging.getLogger(__name__)

Vector = tuple[Fraction, ...]
"""Dense coordinates over the basis e_1..e_n."""


class LieAlgebra:
    """A finite-dimensional Lie algebra given by its structure constants.

    Only brackets ``[e_i, e_j]`` with ``i < j`` are stored, keyed by 1-based
    indices; ``[e_j, e_i] = -[e_i, e_j]`` and ``[e_i, e_i] = 0`` are implied.
    Instances are immutable and hashable.

    :param dim: Dimension of the algebra
    :type dim: int
    :param brackets: Map ``(i, j) -> {k: c_ij^k}`` with ``i < j``
    :type brackets: Mapping[tuple[int, int], Mapping[int, Fraction]]
    :param name: Label used in reports
    :type name: str
    :param metadata: Free-form flags attached by loaders; ignored by equality
    :type metadata: dict, optional
    :raises ValueError: Raised on pairs with ``i >= j`` or indices out of range
    """

    __slots__ = ("dim", "name", "metadata", "_brackets", "_key")

    def __init__(
        self,
        dim: int,
        brackets: Mapping[tuple[int, int], Mapping[int, Fraction | int | str]],
        name: str = "",
        metadata: dict[str, Any] | None = None,
    ):
        if dim < 1:
            raise ValueError(f"Dimension must be positive, got {dim}")
        table: dict[tuple[int, int], SparseVector] = {}
        for (i, j), value in brackets.items():
            if not 1 <= i < j <= dim:
                raise ValueError(
                    f"Bracket ({i}, {j}) must satisfy 1 <= i < j <= {dim}"
                )
            vector = {}
            for k, c in value.items():
                if not 1 <= k <= dim:
                    raise ValueError(
                        f"Bracket ({i}, {j}) has component e{k} outside 1..{dim}"
                    )
                c = to_rational(c)
                if c:
                    vector[k] = c
            if vector:
                table[(i, j)] = dict(sorted(vector.items()))
        self.dim = dim
        self.name = name
        self.metadata = dict(metadata or {})
        self._brackets = dict(sorted(table.items()))
        self._key = (
            dim,
            name,
            tuple((pair, tuple(v.items())) for pair, v in self._brackets.items()),
        )

    @property
    def brackets(self) -> dict[tuple[int, int], SparseVector]:
        return {pair: dict(v) for pair, v in self._brackets.items()}

    def structure(self, i: int, j: int) -> SparseVector:
        """Returns ``[e_i, e_j]`` as a sparse vector with 1-based keys."""
        if i == j:
            return {}
        if i < j:
            return dict(self._brackets.get((i, j), {}))
        return {k: -c for k, c in self._brackets.get((j, i), {}).items()}

    def bracket_sparse(
        self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]
    ) -> SparseVector:
        """Bilinear bracket of two sparse vectors with 1-based keys."""
        out: SparseVector = {}
        for i, a in x.items():
            for j, b in y.items():
                if i == j:
                    continue
                if i < j:
                    value = self._brackets.get((i, j))
                    factor = a * b
                else:
                    value = self._brackets.get((j, i))
                    factor = -a * b
                if value:
                    axpy(out, value, factor)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"LieAlgebra(name={self.name!r}, dim={self.dim}, brackets={len(self._brackets)})"


def to_sparse(x: Sequence, dim: int) -> SparseVector:
    """Converts dense coordinates to a sparse vector with 1-based keys.

    :raises DimensionMismatchError: Raised if ``len(x) != dim``
    """
    if len(x) != dim:
        raise DimensionMismatchError(f"Expected {dim} coordinates, got {len(x)}")
    return {i + 1: to_rational(c) for i, c in enumerate(x) if c}


def to_dense(x: Mapping[int, Fraction], dim: int) -> Vector:
    return tuple(x.get(k, ZERO) for k in range(1, dim + 1))


def basis_vector(dim: int, index: int) -> Vector:
    if not 1 <= index <= dim:
        raise IndexError(f"Basis index {index} out of range 1..{dim}")
    return to_dense({index: Fraction(1)}, dim)


def shift_down(x: Mapping[int, Fraction]) -> SparseVector:
    """Re-keys a 1-based sparse vector to 0-based coordinates."""
    return {k - 1: c for k, c in x.items()}


def shift_up(x: Mapping[int, Fraction]) -> SparseVector:
    return {k + 1: c for k, c in x.items()}


def bracket(alg: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    """Evaluates ``[x, y]`` by bilinear extension of the structure constants.

    :param alg: The Lie algebra
    :type alg: LieAlgebra
    :param x: Coordinates of the left argument
    :type x: Sequence
    :param y: Coordinates of the right argument
    :type y: Sequence
    :return: Coordinates of the bracket
    :rtype: Vector
    :raises DimensionMismatchError: Raised if a vector does not have ``alg.dim`` coordinates
    """
    return to_dense(
        alg.bracket_sparse(to_sparse(x, alg.dim), to_sparse(y, alg.dim)), alg.dim
    )


def jacobi_check(alg: LieAlgebra) -> CheckReport:
    """Evaluates the Jacobi identity on every basis triple ``i < j < k``.

    Each witness lists ``(i, j, k)`` and the residual
    ``[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]``.
    """
    violations = []
    checked = 0
    for i, j, k in combinations(range(1, alg.dim + 1), 3):
        checked += 1
        residual: SparseVector = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            axpy(residual, alg.bracket_sparse(alg.structure(a, b), {c: Fraction(1)}), Fraction(1))
        if residual:
            violations.append(Witness(indices=[i, j, k], residual=terms(residual)))
    if violations:
        logger.debug(f"{alg.name}: {len(violations)} Jacobi violations")
    return CheckReport(check="jacobi", checked=checked, violations=violations)


def _bracket_with_basis(alg: LieAlgebra, space: Subspace) -> Subspace:
    """Span of ``[v, e_i]`` over the basis vectors ``v`` of ``space`` and all ``i``."""
    images = []
    for row in space.sparse_basis:
        v = shift_up(row)
        for i in range(1, alg.dim + 1):
            image = alg.bracket_sparse(v, {i: Fraction(1)})
            if image:
                images.append(shift_down(image))
    return Subspace.span(images, alg.dim)


def lower_central_series_subspaces(alg: LieAlgebra) -> list[Subspace]:
    """Terms L^1 ⊇ L^2 ⊇ ... of the lower central series.

    Stops at the zero subspace or as soon as the series stabilizes.
    """
    series = [Subspace.full(alg.dim)]
    while series[-1].dim > 0:
        following = _bracket_with_basis(alg, series[-1])
        series.append(following)
        if following.dim == series[-2].dim:
            break
    return series


def lower_central_series(alg: LieAlgebra) -> list[int]:
    """Returns the dimensions of the terms of the lower central series.

    :param alg: The Lie algebra
    :type alg: LieAlgebra
    :return: ``[dim L^1, dim L^2, ...]`` ending in 0 for nilpotent algebras
    :rtype: list[int]
    """
    return [term.dim for term in lower_central_series_subspaces(alg)]


def nilindex(alg: LieAlgebra) -> int | None:
    """The least ``k`` with ``L^k = 0``, or None if the algebra is not nilpotent."""
    dims = lower_central_series(alg)
    return dims.index(0) + 1 if 0 in dims else None


def derived_subalgebra(alg: LieAlgebra) -> Subspace:
    """The derived algebra L^2 = [L, L]."""
    return _bracket_with_basis(alg, Subspace.full(alg.dim))


def center(alg: LieAlgebra) -> Subspace:
    """Computes ``{x : [x, e_i] = 0 for all i}``.

    :param alg: The Lie algebra
    :type alg: LieAlgebra
    :return: The center as a subspace of Q^n (0-based coordinates)
    :rtype: Subspace
    """
    n = alg.dim
    rows: dict[tuple[int, int], SparseVector] = {}
    for m in range(1, n + 1):
        for i in range(1, n + 1):
            for k, c in alg.structure(m, i).items():
                rows.setdefault((i, k), {})[m - 1] = c
    constraints = Matrix.from_sparse_rows([rows[key] for key in sorted(rows)], n)
    return nullspace(constraints)
