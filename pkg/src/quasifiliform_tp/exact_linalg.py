from fractions import Fraction
import logging
from typing import Iterable, Mapping, Sequence

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)

SparseVector = dict[int, Fraction]
"""Sparse vector: index -> nonzero coefficient. Indices are 0-based in this module."""


class DimensionMismatchError(ValueError):
    """Raised when operands live in spaces of different dimensions"""

    pass


def to_rational(value: int | str | Fraction) -> Fraction:
    """Converts an integer, a fraction or a ``"p/q"`` string to an exact rational.

    :raises ValueError: Raised if the value is not an exact rational (floats are rejected)
    """
    if isinstance(value, float):
        raise ValueError(f"Floating point values are not exact rationals: {value!r}")
    return Fraction(value)


def axpy(target: SparseVector, source: Mapping[int, Fraction], factor: Fraction) -> None:
    """Adds ``factor * source`` to ``target`` in place, dropping entries that cancel."""
    if not factor:
        return
    for index, value in source.items():
        updated = target.get(index, ZERO) + factor * value
        if updated:
            target[index] = updated
        else:
            target.pop(index, None)


def as_sparse(vector: Sequence | Mapping[int, Fraction], dim: int) -> SparseVector:
    """Converts a dense or sparse vector to a normalized sparse vector of length ``dim``.

    :raises DimensionMismatchError: Raised if the vector does not have length ``dim``
    """
    if isinstance(vector, Mapping):
        out = {}
        for index, value in vector.items():
            if not 0 <= index < dim:
                raise DimensionMismatchError(
                    f"Index {index} out of range for dimension {dim}"
                )
            value = to_rational(value)
            if value:
                out[index] = value
        return out
    if len(vector) != dim:
        raise DimensionMismatchError(
            f"Expected a vector of length {dim}, got length {len(vector)}"
        )
    return {i: to_rational(v) for i, v in enumerate(vector) if v}


def densify(vector: Mapping[int, Fraction], dim: int) -> tuple[Fraction, ...]:
    return tuple(vector.get(i, ZERO) for i in range(dim))


class Matrix:
    """Immutable dense matrix of exact rationals stored row-major.

    Matrices assembled from sparse rows keep those rows so elimination does not
    rescan the dense entries.

    :param rows: Number of rows
    :type rows: int
    :param cols: Number of columns
    :type cols: int
    :param entries: Row-major entries, ``rows * cols`` of them
    :type entries: Sequence[Fraction]
    """

    __slots__ = ("rows", "cols", "entries", "_sparse")

    def __init__(self, rows: int, cols: int, entries: Sequence[Fraction]):
        if len(entries) != rows * cols:
            raise DimensionMismatchError(
                f"A {rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = tuple(to_rational(x) for x in entries)
        self._sparse = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatchError(
                    f"Ragged rows: expected {cols} columns, got {len(row)}"
                )
        return cls(len(rows), cols, [x for row in rows for x in row])

    @classmethod
    def from_sparse_rows(
        cls, rows: Sequence[Mapping[int, Fraction]], cols: int
    ) -> "Matrix":
        entries = [ZERO] * (len(rows) * cols)
        sparse = []
        for r, row in enumerate(rows):
            clean = as_sparse(row, cols)
            sparse.append(clean)
            for c, value in clean.items():
                entries[r * cols + c] = value
        m = cls.__new__(cls)
        m.rows = len(rows)
        m.cols = cols
        m.entries = tuple(entries)
        m._sparse = tuple(sparse)
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_sparse_rows([{i: ONE} for i in range(n)], n)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        r, c = key
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(f"Entry ({r}, {c}) out of range for {self.rows}x{self.cols}")
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple[Fraction, ...]:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def column(self, c: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[r * self.cols + c] for r in range(self.rows))

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(r)) for r in range(self.rows)]

    def sparse_rows(self) -> tuple[SparseVector, ...]:
        if self._sparse is None:
            self._sparse = tuple(
                {c: x for c, x in enumerate(self.row(r)) if x} for r in range(self.rows)
            )
        return self._sparse

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            [self.entries[r * self.cols + c] for c in range(self.cols) for r in range(self.rows)],
        )

    def apply(self, vector: Sequence) -> tuple[Fraction, ...]:
        """Returns the matrix-vector product ``self @ vector``."""
        v = as_sparse(vector, self.cols)
        return tuple(
            sum((row.get(c, ZERO) * x for c, x in v.items()), ZERO)
            for row in self.sparse_rows()
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        right = other.sparse_rows()
        out = []
        for row in self.sparse_rows():
            acc: SparseVector = {}
            for k, x in row.items():
                axpy(acc, right[k], x)
            out.append(acc)
        return Matrix.from_sparse_rows(out, other.cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (
            other.rows,
            other.cols,
            other.entries,
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, {self.tolist()!r})"


def _eliminate(rows: Iterable[Mapping[int, Fraction]]) -> dict[int, SparseVector]:
    """Reduces the span of ``rows`` to its reduced row-echelon basis.

    Returns a mapping pivot column -> normalized row, sorted by pivot column.
    The pivot of each column is the first incoming row whose leading entry lands
    there, which makes the output deterministic; uniqueness of the RREF makes it
    independent of row order.
    """
    pivots: dict[int, SparseVector] = {}
    for source in rows:
        row = {c: Fraction(v) for c, v in source.items() if v}
        while row:
            lead = min(row)
            pivot_row = pivots.get(lead)
            if pivot_row is None:
                inverse = 1 / row[lead]
                pivots[lead] = {c: v * inverse for c, v in row.items()}
                break
            axpy(row, pivot_row, -row[lead])

    # Back substitution, largest pivot first, so each pivot row is already clean
    # above when it is used.
    for col in sorted(pivots, reverse=True):
        pivot_row = pivots[col]
        for other_col, other in pivots.items():
            if other_col < col and col in other:
                axpy(other, pivot_row, -other[col])
    return dict(sorted(pivots.items()))


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Computes the reduced row-echelon form of a matrix.

    :param m: Matrix to reduce
    :type m: Matrix
    :return: The unique RREF (zero rows at the bottom, same shape as ``m``) and
        its pivot columns (0-based)
    :rtype: tuple[Matrix, list[int]]
    """
    pivots = _eliminate(m.sparse_rows())
    rows = list(pivots.values()) + [{}] * (m.rows - len(pivots))
    return Matrix.from_sparse_rows(rows, m.cols), list(pivots)


def rank(m: Matrix) -> int:
    return len(_eliminate(m.sparse_rows()))


class Subspace:
    """A linear subspace of Q^n held by its canonical basis.

    The basis is the reduced row-echelon form of any spanning set; two subspaces
    are equal exactly when their bases are identical. Use :meth:`span` to build
    one from arbitrary vectors.

    :ivar ambient_dim: Dimension of the ambient space
    :ivar pivots: Pivot column of each basis row, strictly increasing
    """

    __slots__ = ("ambient_dim", "pivots", "_rows")

    def __init__(self, ambient_dim: int, reduced: Mapping[int, SparseVector]):
        self.ambient_dim = ambient_dim
        self.pivots = tuple(reduced)
        self._rows = tuple(dict(row) for row in reduced.values())

    @classmethod
    def span(
        cls, vectors: Iterable[Sequence | Mapping[int, Fraction]], ambient_dim: int
    ) -> "Subspace":
        return cls(ambient_dim, _eliminate(as_sparse(v, ambient_dim) for v in vectors))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, {i: {i: ONE} for i in range(ambient_dim)})

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, {})

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def basis(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(densify(row, self.ambient_dim) for row in self._rows)

    @property
    def sparse_basis(self) -> tuple[SparseVector, ...]:
        return tuple(dict(row) for row in self._rows)

    def reduce(self, vector: Sequence | Mapping[int, Fraction]) -> SparseVector:
        """Returns the remainder of ``vector`` after elimination against the basis.

        The remainder is zero exactly when the vector lies in the subspace.
        """
        remainder = as_sparse(vector, self.ambient_dim)
        for col, row in zip(self.pivots, self._rows):
            if col in remainder:
                axpy(remainder, row, -remainder[col])
        return remainder

    def contains(self, vector: Sequence | Mapping[int, Fraction]) -> bool:
        return not self.reduce(vector)

    def __contains__(self, vector) -> bool:
        return self.contains(vector)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(
            (self.ambient_dim, tuple(tuple(sorted(r.items())) for r in self._rows))
        )

    def __repr__(self) -> str:
        return f"Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})"


def nullspace(m: Matrix) -> Subspace:
    """Computes the canonical basis of ``{v : m v = 0}``.

    :param m: Coefficient matrix
    :type m: Matrix
    :return: Kernel of ``m``, of dimension ``m.cols - rank(m)``
    :rtype: Subspace
    """
    pivots = _eliminate(m.sparse_rows())
    logger.debug(f"nullspace: {m.rows}x{m.cols} matrix has rank {len(pivots)}")
    kernel: dict[int, SparseVector] = {
        c: {c: ONE} for c in range(m.cols) if c not in pivots
    }
    for pivot_col, row in pivots.items():
        for c, value in row.items():
            if c != pivot_col:
                kernel[c][pivot_col] = -value
    return Subspace.span(kernel.values(), m.cols)


def equal_span(a: Subspace, b: Subspace) -> bool:
    """Tells whether two subspaces are equal.

    :raises DimensionMismatchError: Raised if the ambient dimensions differ
    """
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(
            f"Ambient dimensions differ: {a.ambient_dim} != {b.ambient_dim}"
        )
    return a == b
