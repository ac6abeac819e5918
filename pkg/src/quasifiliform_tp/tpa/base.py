from quasifiliform_tp.catalog import FamilyId
from quasifiliform_tp.exact_linalg import SparseVector, axpy, to_rational
from quasifiliform_tp.symbolic import (
    local_name,
    parameter_sort_key,
    parse_expression,
    rational,
    to_fraction,
)

from collections import defaultdict
from fractions import Fraction
import logging
from typing import Literal, Mapping

import sympy

logger = logging.getLogger(__name__)

ParameterAssignment = dict[str, Fraction]
"""Values of the free parameters of a variant, keyed by local name (``alpha_5``)."""


class ParameterError(Exception):
    """Raised when a parameter assignment cannot be used with a variant"""

    pass


class MissingParameterError(ParameterError, KeyError):
    """Raised when an assignment does not cover every parameter of a variant"""

    pass


class DomainConstraintError(ParameterError, ValueError):
    """Raised when an assignment violates a domain constraint of a variant"""

    pass


class SamplingError(ParameterError, RuntimeError):
    """Raised when no constraint-satisfying sample is found within the retry budget"""

    pass


class CommutativeProduct:
    """A commutative product on Q^n given by its symmetric multiplication table.

    Only products ``e_i * e_j`` with ``i <= j`` are stored, keyed by 1-based indices.

    :param dim: Dimension of the space
    :type dim: int
    :param table: Map ``(i, j) -> {k: coefficient}`` with ``i <= j``
    :type table: Mapping[tuple[int, int], Mapping[int, Fraction]]
    :param name: Label used in reports, usually the variant id
    :type name: str
    :raises ValueError: Raised on pairs with ``i > j`` or indices out of range
    """

    __slots__ = ("dim", "name", "_table", "_key")

    def __init__(
        self,
        dim: int,
        table: Mapping[tuple[int, int], Mapping[int, Fraction | int | str]],
        name: str = "",
    ):
        if dim < 1:
            raise ValueError(f"Dimension must be positive, got {dim}")
        clean: dict[tuple[int, int], SparseVector] = {}
        for (i, j), value in table.items():
            if not 1 <= i <= j <= dim:
                raise ValueError(f"Product ({i}, {j}) must satisfy 1 <= i <= j <= {dim}")
            vector = {}
            for k, c in value.items():
                if not 1 <= k <= dim:
                    raise ValueError(f"Product ({i}, {j}) has component e{k} outside 1..{dim}")
                c = to_rational(c)
                if c:
                    vector[k] = c
            if vector:
                clean[(i, j)] = dict(sorted(vector.items()))
        self.dim = dim
        self.name = name
        self._table = dict(sorted(clean.items()))
        self._key = (dim, tuple((pair, tuple(v.items())) for pair, v in self._table.items()))

    @property
    def table(self) -> dict[tuple[int, int], SparseVector]:
        return {pair: dict(v) for pair, v in self._table.items()}

    def product(self, i: int, j: int) -> SparseVector:
        """Returns ``e_i * e_j`` as a sparse vector with 1-based keys."""
        if i > j:
            i, j = j, i
        return dict(self._table.get((i, j), {}))

    def multiply_sparse(
        self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]
    ) -> SparseVector:
        out: SparseVector = {}
        for i, a in x.items():
            for j, b in y.items():
                value = self._table.get((i, j) if i <= j else (j, i))
                if value:
                    axpy(out, value, a * b)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CommutativeProduct):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"CommutativeProduct(name={self.name!r}, dim={self.dim}, products={len(self._table)})"


class TPVariant:
    """One parametrized transposed Poisson multiplication table.

    Coefficients are sympy expressions in parameter symbols that are namespaced
    per variant (and per amendment), so equal local names in different tables
    never alias.

    :ivar family_id: Family and dimension of the underlying Lie algebra
    :ivar key: Variant key, e.g. ``TP2`` (``TP`` for single-table theorems)
    :ivar source: ``printed`` for the transcribed table, ``amended`` for a registered correction
    :ivar note: Human-readable description of an amendment
    :ivar parameters: Local parameter names in canonical order
    :ivar symbols: Local name -> namespaced symbol
    :ivar constraints: Expressions required to be nonzero
    :ivar entries: ``(i, j) -> {k: coefficient expression}`` with ``i <= j``
    """

    def __init__(
        self,
        family_id: FamilyId,
        key: str,
        entries: Mapping[tuple[int, int], Mapping[int, sympy.Expr]],
        constraints: list[sympy.Expr],
        source: Literal["printed", "amended"] = "printed",
        note: str | None = None,
    ):
        self.family_id = family_id
        self.key = key
        self.source = source
        self.note = note
        self.entries = {pair: dict(terms) for pair, terms in sorted(entries.items())}
        self.constraints = tuple(constraints)
        symbols: set[sympy.Symbol] = set()
        for terms in self.entries.values():
            for expr in terms.values():
                symbols |= expr.free_symbols
        for expr in self.constraints:
            symbols |= expr.free_symbols
        self.symbols = {local_name(s): s for s in symbols}
        self.parameters = tuple(sorted(self.symbols, key=parameter_sort_key))

    @property
    def id(self) -> str:
        return f"{self.family_id.family.value}[n={self.family_id.n}]:{self.key}"

    @property
    def dim(self) -> int:
        return self.family_id.n

    def display(self, expr: sympy.Expr) -> str:
        """Renders an expression with local parameter names."""
        return str(expr.xreplace({s: sympy.Symbol(name) for name, s in self.symbols.items()}))

    @property
    def constraint_labels(self) -> list[str]:
        return [f"{self.display(expr)} != 0" for expr in self.constraints]

    def constrained_parameters(self) -> list[str]:
        names = set()
        for expr in self.constraints:
            names |= {local_name(s) for s in expr.free_symbols}
        return sorted(names, key=parameter_sort_key)

    def __repr__(self) -> str:
        return f"TPVariant({self.id!r}, source={self.source!r}, parameters={len(self.parameters)})"


class TableBuilder:
    """Collects the printed entries of a multiplication table.

    Coefficients are given as text in ``alpha_i``, ``beta_i``, ``gamma_i``;
    repeated entries for the same product add up, which lets index sums be
    written as loops::

        t = TableBuilder(family_id, "TP1")
        t.product(1, 1, {k: f"alpha_{k}" for k in range(4, n + 1)})
        t.product(1, 2, {n - 2: "beta_1"})
        variant = t.build()
    """

    def __init__(
        self,
        family_id: FamilyId,
        key: str,
        source: Literal["printed", "amended"] = "printed",
        note: str | None = None,
    ):
        self.family_id = family_id
        self.key = key
        self.source = source
        self.note = note
        base = f"{family_id.family.value}[n={family_id.n}]:{key}"
        self.namespace = base if source == "printed" else f"{base}#{source}"
        self._entries: dict[tuple[int, int], dict[int, sympy.Expr]] = defaultdict(dict)
        self._constraints: list[sympy.Expr] = []

    def product(self, i: int, j: int, terms: Mapping[int, str | int | Fraction]) -> "TableBuilder":
        """Adds ``sum_k terms[k] e_k`` to the product ``e_i * e_j``."""
        if i > j:
            i, j = j, i
        n = self.family_id.n
        if not 1 <= i <= j <= n:
            raise ValueError(f"{self.namespace}: product ({i}, {j}) outside 1..{n}")
        entry = self._entries[(i, j)]
        for k, text in terms.items():
            if not 1 <= k <= n:
                raise ValueError(f"{self.namespace}: e{k} outside 1..{n} in e{i}*e{j}")
            entry[k] = entry.get(k, sympy.Integer(0)) + parse_expression(text, self.namespace)
        return self

    def require_nonzero(self, text: str) -> "TableBuilder":
        self._constraints.append(parse_expression(text, self.namespace))
        return self

    def build(self) -> TPVariant:
        entries = {
            pair: {k: expr for k, expr in sorted(terms.items()) if expr != 0}
            for pair, terms in self._entries.items()
        }
        return TPVariant(
            self.family_id,
            self.key,
            {pair: terms for pair, terms in entries.items() if terms},
            self._constraints,
            source=self.source,
            note=self.note,
        )


def instantiate(v: TPVariant, a: Mapping[str, Fraction | int | str]) -> CommutativeProduct:
    """Evaluates a variant at exact parameter values.

    :param v: The variant
    :type v: TPVariant
    :param a: Parameter values keyed by local name; extra keys are ignored
    :type a: Mapping[str, Fraction | int | str]
    :return: The instantiated product; unlisted products are zero
    :rtype: CommutativeProduct
    :raises MissingParameterError: Raised if a parameter has no value
    :raises DomainConstraintError: Raised if a constraint evaluates to zero or a
        coefficient is undefined
    """
    missing = [name for name in v.parameters if name not in a]
    if missing:
        raise MissingParameterError(f"Missing parameters for {v.id}: {', '.join(missing)}")
    values = {v.symbols[name]: rational(to_rational(a[name])) for name in v.parameters}

    for expr, label in zip(v.constraints, v.constraint_labels):
        if expr.xreplace(values) == 0:
            raise DomainConstraintError(f"{v.id}: domain constraint {label} violated")

    table = {}
    for (i, j), terms in v.entries.items():
        vector = {}
        for k, expr in terms.items():
            try:
                c = to_fraction(expr.xreplace(values))
            except ValueError:
                raise DomainConstraintError(
                    f"{v.id}: coefficient of e{k} in e{i}*e{j} is undefined at {dict(a)}"
                )
            if c:
                vector[k] = c
        table[(i, j)] = vector
    return CommutativeProduct(v.dim, table, name=v.id)
