"""JSON import and export of algebras, products, derivation spaces and run reports.

Rationals are written as ``"p/q"`` strings and all indices are 1-based.
"""

from quasifiliform_tp.derivations import DerivationSpace
from quasifiliform_tp.lie import LieAlgebra, jacobi_check
from quasifiliform_tp.models import (
    BracketEntrySchema,
    CommutativeProductSchema,
    DerivationSpaceSchema,
    LieAlgebraSchema,
    ProductEntrySchema,
    RunReport,
    terms,
)
from quasifiliform_tp.tpa.base import CommutativeProduct
from quasifiliform_tp.utils import format_rational, parse_rational

from pydantic import BaseModel, ValidationError

import json
import logging

logger = logging.getLogger(__name__)


class SchemaValidationError(ValueError):
    """Raised when JSON input does not match the algebra or product schema"""

    pass


def _schema_error(e: ValidationError) -> SchemaValidationError:
    problems = []
    for error in e.errors():
        location = ".".join(str(part) for part in error["loc"])
        message = error["msg"].removeprefix("Value error, ")
        problems.append(f"{location}: {message}" if location else message)
    return SchemaValidationError("; ".join(problems))


def to_schema(
    obj: LieAlgebra | DerivationSpace | CommutativeProduct | RunReport,
) -> BaseModel:
    if isinstance(obj, RunReport):
        return obj
    if isinstance(obj, LieAlgebra):
        return LieAlgebraSchema(
            name=obj.name,
            dim=obj.dim,
            brackets=[
                BracketEntrySchema(i=i, j=j, value=terms(v))
                for (i, j), v in obj.brackets.items()
            ],
        )
    if isinstance(obj, CommutativeProduct):
        return CommutativeProductSchema(
            name=obj.name,
            dim=obj.dim,
            products=[
                ProductEntrySchema(i=i, j=j, value=terms(v)) for (i, j), v in obj.table.items()
            ],
        )
    if isinstance(obj, DerivationSpace):
        return DerivationSpaceSchema(
            algebra=obj.name,
            delta=format_rational(obj.delta),
            dim=obj.dim,
            basis=[
                [[format_rational(x) for x in row] for row in m.tolist()] for m in obj.maps()
            ],
        )
    raise TypeError(f"Cannot export objects of type {type(obj).__name__}")


def export_json(obj: LieAlgebra | DerivationSpace | CommutativeProduct | RunReport) -> str:
    """Serializes an object to indented JSON.

    Run reports are written without their timings, so equal runs give equal text.

    :param obj: The object to export
    :type obj: LieAlgebra | DerivationSpace | CommutativeProduct | RunReport
    :return: JSON text
    :rtype: str
    :raises TypeError: Raised for unsupported objects
    """
    if isinstance(obj, RunReport):
        return obj.deterministic_json()
    return to_schema(obj).model_dump_json(indent=2)


def _entries(schema_entries) -> dict[tuple[int, int], dict[int, object]]:
    return {
        (entry.i, entry.j): {term.k: parse_rational(term.c) for term in entry.value}
        for entry in schema_entries
    }


def import_json(text: str) -> LieAlgebra | CommutativeProduct:
    """Parses an algebra (``brackets`` key) or a commutative product (``products`` key).

    An imported algebra that violates the Jacobi identity is still returned, with
    ``metadata["jacobi_passed"]`` set to False and a warning logged.

    :param text: JSON text
    :type text: str
    :return: The imported object
    :rtype: LieAlgebra | CommutativeProduct
    :raises SchemaValidationError: Raised on malformed JSON or schema violations;
        the message names every failing location as a dotted path
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaValidationError(f"Invalid JSON: {e}")
    if not isinstance(data, dict):
        raise SchemaValidationError("Expected a JSON object")

    if "products" in data:
        try:
            schema = CommutativeProductSchema.model_validate(data)
        except ValidationError as e:
            raise _schema_error(e)
        return CommutativeProduct(schema.dim, _entries(schema.products), name=schema.name)

    if "brackets" not in data:
        raise SchemaValidationError("Expected a 'brackets' or a 'products' key")
    try:
        schema = LieAlgebraSchema.model_validate(data)
    except ValidationError as e:
        raise _schema_error(e)
    algebra = LieAlgebra(schema.dim, _entries(schema.brackets), name=schema.name)
    report = jacobi_check(algebra)
    algebra.metadata["jacobi_passed"] = report.passed
    if not report.passed:
        logger.warning(
            f"Imported algebra {schema.name or '(unnamed)'} violates Jacobi at "
            f"{report.witness.indices}"
        )
    return algebra
