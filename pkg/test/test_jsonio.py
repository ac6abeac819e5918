from quasifiliform_tp.catalog import FamilyId, make_algebra
from quasifiliform_tp.derivations import DerivationProblem, solve_derivation_space
from quasifiliform_tp.jsonio import SchemaValidationError, export_json, import_json
from quasifiliform_tp.lie import LieAlgebra
from quasifiliform_tp.reports import cmd_verify_all
from quasifiliform_tp.tpa import CommutativeProduct

import pytest

from dotenv import find_dotenv, load_dotenv

import json

from fixtures import g1n1_5, non_jacobi_algebra, tp2_g1n1_7_at_zero


load_dotenv(find_dotenv())


def test_export_algebra(g1n1_5: LieAlgebra):
    data = json.loads(export_json(g1n1_5))
    assert data["dim"] == 5
    assert data["name"] == "g1n1(n=5)"
    assert len(data["brackets"]) == 3
    assert data["brackets"][0] == {"i": 1, "j": 2, "value": [{"k": 3, "c": "1"}]}


@pytest.mark.parametrize(
    "family, n", [("g1n1", 5), ("g2n1", 8), ("g3n1", 10), ("g2_9", None), ("g3_11", None)]
)
def test_algebra_roundtrip(family: str, n: int | None):
    alg = make_algebra(FamilyId.of(family, n))
    imported = import_json(export_json(alg))
    assert imported == alg
    assert imported.metadata["jacobi_passed"] is True


def test_product_roundtrip(tp2_g1n1_7_at_zero: CommutativeProduct):
    text = export_json(tp2_g1n1_7_at_zero)
    assert '"c": "-1/2"' in text
    imported = import_json(text)
    assert isinstance(imported, CommutativeProduct)
    assert imported == tp2_g1n1_7_at_zero
    assert imported.name == "g1n1[n=7]:TP2"


def test_export_derivation_space(g1n1_5: LieAlgebra):
    space = solve_derivation_space(DerivationProblem(algebra=g1n1_5))
    data = json.loads(export_json(space))
    assert data["delta"] == "1/2"
    assert data["dim"] == 10
    assert len(data["basis"]) == 10
    assert all(len(m) == 5 and all(len(row) == 5 for row in m) for m in data["basis"])


def test_export_run_report_is_deterministic():
    first = export_json(cmd_verify_all([], samples=1, seed=3))
    second = export_json(cmd_verify_all([], samples=1, seed=3))
    assert first == second
    assert "timings" not in json.loads(first)


def test_jacobi_failure_is_flagged(non_jacobi_algebra: LieAlgebra):
    imported = import_json(export_json(non_jacobi_algebra))
    assert imported == non_jacobi_algebra
    assert imported.metadata["jacobi_passed"] is False


@pytest.mark.parametrize(
    "document, location",
    [
        ({"dim": 3, "brackets": [{"i": 2, "j": 2, "value": []}]}, "brackets.0.j"),
        ({"dim": 3, "brackets": [{"i": 1, "j": 2, "value": [{"k": 4, "c": "1"}]}]}, "brackets.0.value.0.k"),
        ({"dim": 3, "brackets": [{"i": 1, "j": 2, "value": [{"k": 3, "c": "1/0"}]}]}, "brackets.0.value.0.c"),
        ({"dim": 2, "products": [{"i": 2, "j": 1, "value": []}]}, "products.0.j"),
        ({"dim": 0, "products": []}, "dim"),
    ],
)
def test_schema_errors_name_the_location(document: dict, location: str):
    with pytest.raises(SchemaValidationError, match=location.replace(".", r"\.")):
        import_json(json.dumps(document))


def test_unrecognized_documents():
    with pytest.raises(SchemaValidationError):
        import_json("not json")
    with pytest.raises(SchemaValidationError):
        import_json(json.dumps({"dim": 3}))
    with pytest.raises(SchemaValidationError):
        import_json("[1, 2]")


def test_unsupported_export():
    with pytest.raises(TypeError):
        export_json({"dim": 3})
