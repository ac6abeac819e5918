from quasifiliform_tp.utils import format_rational, parse_rational

from pydantic import (
    AfterValidator,
    BaseModel,
    Field,
    ValidationInfo,
    computed_field,
    field_validator,
    model_serializer,
    model_validator,
)

from fractions import Fraction
from typing import Annotated, Any, Literal, Mapping


def _canonical_rational(text: str) -> str:
    return format_rational(parse_rational(text))


RationalStr = Annotated[str, AfterValidator(_canonical_rational)]
"""An exact rational serialized as ``"p/q"`` (or ``"p"``), normalized on input."""


class TermSchema(BaseModel):
    k: int = Field(ge=1)
    """1-based index of the basis vector"""
    c: RationalStr
    """Coefficient of ``e_k``"""


def terms(vector: Mapping[int, Fraction]) -> list[TermSchema]:
    """Converts a sparse vector with 1-based keys to sorted term schemas."""
    return [TermSchema(k=k, c=format_rational(vector[k])) for k in sorted(vector)]


def _check_terms_in_range(entries: list, dim: int, field: str):
    for idx, entry in enumerate(entries):
        for name, value in (("i", entry.i), ("j", entry.j)):
            if value > dim:
                raise ValueError(f"{field}.{idx}.{name}: index {value} exceeds dim {dim}")
        for t, term in enumerate(entry.value):
            if term.k > dim:
                raise ValueError(
                    f"{field}.{idx}.value.{t}.k: index {term.k} exceeds dim {dim}"
                )
    seen = set()
    for idx, entry in enumerate(entries):
        if (entry.i, entry.j) in seen:
            raise ValueError(f"{field}.{idx}: duplicate entry for ({entry.i}, {entry.j})")
        seen.add((entry.i, entry.j))


class BracketEntrySchema(BaseModel):
    i: int = Field(ge=1)
    """Index of the left basis vector"""
    j: int = Field(ge=1)
    """Index of the right basis vector, strictly greater than ``i``"""
    value: list[TermSchema]
    """Structure constants of ``[e_i, e_j]``"""

    @field_validator("j")
    @classmethod
    def _j_after_i(cls, j: int, info: ValidationInfo) -> int:
        i = info.data.get("i")
        if i is not None and j <= i:
            raise ValueError(f"bracket entries require i < j, got i={i}, j={j}")
        return j


class LieAlgebraSchema(BaseModel):
    name: str = ""
    """Human-readable label, e.g. ``g1n1(n=5)``"""
    dim: int = Field(ge=1)
    """Dimension of the algebra"""
    brackets: list[BracketEntrySchema] = []
    """Nonzero brackets ``[e_i, e_j]`` for ``i < j``"""

    @model_validator(mode="after")
    def _indices_in_range(self):
        _check_terms_in_range(self.brackets, self.dim, "brackets")
        return self


class ProductEntrySchema(BaseModel):
    i: int = Field(ge=1)
    """Index of the left basis vector"""
    j: int = Field(ge=1)
    """Index of the right basis vector, at least ``i``"""
    value: list[TermSchema]
    """Coefficients of ``e_i * e_j``"""

    @field_validator("j")
    @classmethod
    def _j_not_before_i(cls, j: int, info: ValidationInfo) -> int:
        i = info.data.get("i")
        if i is not None and j < i:
            raise ValueError(f"product entries require i <= j, got i={i}, j={j}")
        return j


class CommutativeProductSchema(BaseModel):
    name: str = ""
    """Label of the product, usually the variant id it was instantiated from"""
    dim: int = Field(ge=1)
    """Dimension of the underlying space"""
    products: list[ProductEntrySchema] = []
    """Nonzero products ``e_i * e_j`` for ``i <= j``"""

    @model_validator(mode="after")
    def _indices_in_range(self):
        _check_terms_in_range(self.products, self.dim, "products")
        return self


class DerivationSpaceSchema(BaseModel):
    algebra: str
    """Name of the algebra the maps act on"""
    delta: RationalStr
    """The scalar ``delta`` of the defining identity"""
    dim: int
    """Dimension of the space of maps"""
    basis: list[list[list[RationalStr]]]
    """Canonical basis, each map given as ``n`` rows of ``n`` rationals"""


class Witness(BaseModel):
    indices: list[int]
    """1-based basis indices of the failing tuple, in the order documented by the check"""
    residual: list[TermSchema] = []
    """Nonzero difference of the two sides of the identity"""


class CheckReport(BaseModel):
    check: str
    """Name of the identity that was checked"""
    checked: int
    """Number of basis tuples evaluated"""
    violations: list[Witness] = []
    """Every failing tuple in lexicographic order"""

    @computed_field
    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def witness(self) -> Witness | None:
        """The minimal (lexicographically first) violation, if any."""
        return self.violations[0] if self.violations else None


class CheckOutcome(BaseModel):
    """Aggregate of one check over every sample of a variant.

    Serializes to the string ``"pass"`` when no sample failed.
    """

    status: Literal["pass", "fail"] = "pass"
    """Whether every sample passed"""
    failed_samples: int = 0
    """Number of failing samples"""
    first_failing_sample: int | None = None
    """0-based index of the first failing sample"""
    assignment: dict[str, RationalStr] | None = None
    """Parameter values of the first failing sample"""
    witness: Witness | None = None
    """Minimal witness of the first failing sample"""

    @model_serializer(mode="wrap")
    def _serialize(self, handler):
        if self.status == "pass":
            return "pass"
        return handler(self)

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class VariantReport(BaseModel):
    variant: str
    """Variant id, ``<family>[n=<n>]:<key>``"""
    family: str
    """Family tag"""
    n: int
    """Dimension"""
    key: str
    """Variant key, e.g. ``TP2``"""
    source: Literal["printed", "amended"] = "printed"
    """Whether the table is the printed one or a registered amendment"""
    note: str | None = None
    """Description of the amendment, if any"""
    parameters: list[str] = []
    """Free parameters of the table"""
    samples: int
    """Number of parameter samples evaluated"""
    commutative: CheckOutcome
    associative: CheckOutcome
    transposed_leibniz: CheckOutcome
    operators_in_halfderiv_space: CheckOutcome
    poisson_leibniz: CheckOutcome
    """Ordinary Leibniz rule; informational only"""
    suspected_erratum: bool = False
    """True when the table failed on every sample"""
    amendment: "VariantReport | None" = None
    """Report of the registered amended table, when the printed one failed"""

    @computed_field
    @property
    def passed(self) -> bool:
        return all(
            outcome.passed
            for outcome in (
                self.commutative,
                self.associative,
                self.transposed_leibniz,
                self.operators_in_halfderiv_space,
            )
        )

    @computed_field
    @property
    def resolved(self) -> bool:
        """Printed table passes, or its amendment does. Only counted as a pass with ``accept_amended``."""
        return self.passed or (self.amendment is not None and self.amendment.passed)


class AlgebraReport(BaseModel):
    family: str
    n: int
    name: str
    jacobi: CheckReport
    lower_central_series: list[int]
    """Dimensions of the terms of the lower central series"""
    nilindex: int | None
    expected_nilindex: int

    @computed_field
    @property
    def passed(self) -> bool:
        return self.jacobi.passed and self.nilindex == self.expected_nilindex


class TheoremReport(BaseModel):
    family: str
    n: int
    solved_dim: int
    """Dimension of the brute-force solution space"""
    predicted_dim: int
    """Dimension of the closed-form space"""
    equal: bool
    only_in_solved: list[list[list[RationalStr]]] = []
    """Canonical basis maps of the solved space missing from the predicted span"""
    only_in_predicted: list[list[list[RationalStr]]] = []
    """Canonical basis maps of the predicted space missing from the solved span"""

    @computed_field
    @property
    def passed(self) -> bool:
        return self.equal


class RunReport(BaseModel):
    tool_version: str
    parameters: dict[str, Any]
    """Invocation parameters (grid, samples, seed, bound, accept_amended)"""
    accept_amended: bool = False
    """Count a failing printed table as passing when its registered amendment passes"""
    skipped: list[str] = []
    """Notices for grid entries that are invalid for a family"""
    lie_axioms: list[AlgebraReport] = []
    theorems: list[TheoremReport] = []
    tp_sweep: list[VariantReport] = []
    timings: dict[str, float] = {}
    """Wall-clock seconds per section; not covered by the determinism contract"""

    @computed_field
    @property
    def failures(self) -> int:
        count = sum(not r.passed for r in self.lie_axioms)
        count += sum(not r.passed for r in self.theorems)
        if self.accept_amended:
            count += sum(not r.resolved for r in self.tp_sweep)
        else:
            count += sum(not r.passed for r in self.tp_sweep)
        return count

    @computed_field
    @property
    def passed(self) -> bool:
        return self.failures == 0

    def deterministic_json(self) -> str:
        """Serializes everything except the timings."""
        return self.model_dump_json(exclude={"timings"}, indent=2)


VariantReport.model_rebuild()
