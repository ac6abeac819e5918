from quasifiliform_tp.catalog import FamilyId, make_algebra
from quasifiliform_tp.exact_linalg import DimensionMismatchError, Matrix
from quasifiliform_tp.lie import LieAlgebra
from quasifiliform_tp.models import RunReport, TermSchema
from quasifiliform_tp.reports import grid_family_ids
from quasifiliform_tp.tpa import (
    CommutativeProduct,
    DomainConstraintError,
    MissingParameterError,
    SamplingError,
    TableBuilder,
    UnknownVariantError,
    amended_keys,
    check_associative,
    check_commutative,
    check_poisson_leibniz,
    check_transposed_leibniz,
    get_amendment,
    get_variant,
    instantiate,
    list_variants,
    multiplication_operator,
    operators_in_halfderivation_space,
    sample_parameters,
    sweep,
    verify_variant,
)

import pytest

from dotenv import find_dotenv, load_dotenv

from fractions import Fraction

from fixtures import (
    FAST_GRID,
    FAST_SAMPLES,
    g1n1_5,
    g1n1_7,
    non_associative_product,
    tp2_g1n1_7_at_zero,
)


load_dotenv(find_dotenv())


@pytest.mark.parametrize(
    "family, n, keys",
    [
        ("g1n1", 5, ["TP1", "TP2", "TP3"]),
        ("g1n1", 9, ["TP1", "TP2", "TP3"]),
        ("g2n1", 5, [f"TP{i}" for i in range(1, 11)]),
        ("g2n1", 6, ["TP1", "TP2", "TP3"]),
        ("g2n1", 8, ["TP1", "TP2", "TP3"]),
        ("g3n1", 7, ["TP1", "TP2"]),
        ("g3n1", 8, ["TP"]),
        ("g3n1", 9, ["TP1", "TP2"]),
        ("g3n1", 12, ["TP1", "TP2"]),
        ("g1_7", None, ["TP1", "TP2"]),
        ("g2_9", None, ["TP"]),
        ("g3_11", None, ["TP"]),
    ],
)
def test_list_variants(family: str, n: int | None, keys: list[str]):
    assert list_variants(FamilyId.of(family, n)) == keys


def test_registered_amendments():
    assert amended_keys(FamilyId.of("g2n1", 5)) == ["TP1", "TP4", "TP7"]
    assert amended_keys(FamilyId.of("g2n1", 9)) == ["TP1", "TP2", "TP3"]
    assert amended_keys(FamilyId.of("g3n1", 9)) == ["TP1"]
    assert amended_keys(FamilyId.of("g3n1", 11)) == ["TP1", "TP2"]
    assert amended_keys(FamilyId.of("g1n1", 7)) == []
    assert get_amendment(FamilyId.of("g2n1", 6), "TP1") is None

    with pytest.raises(UnknownVariantError):
        get_variant(FamilyId.of("g2n1", 6), "TP4")


def test_variant_ids_and_namespaces():
    family_id = FamilyId.of("g2n1", 5)
    printed = get_variant(family_id, "TP1")
    amended = get_amendment(family_id, "TP1")
    assert printed.id == amended.id == "g2n1[n=5]:TP1"
    assert printed.source == "printed" and amended.source == "amended"
    assert amended.note
    assert printed.parameters == amended.parameters
    assert set(printed.symbols.values()).isdisjoint(amended.symbols.values())
    assert printed.parameters == (
        "alpha_3", "alpha_4", "alpha_5", "alpha_8", "alpha_10", "alpha_15", "alpha_16",
    )


def test_instantiate_tp2_g1n1_7(tp2_g1n1_7_at_zero: CommutativeProduct):
    assert tp2_g1n1_7_at_zero.table == {
        (1, 1): {3: Fraction(1)},
        (1, 5): {7: Fraction(-1, 2)},
    }


def test_instantiate_tp3_g1n1_5():
    v = get_variant(FamilyId.of("g1n1", 5), "TP3")
    values = {name: 0 for name in v.parameters}
    values.update(alpha_1=1, beta_2=1)
    p = instantiate(v, values)
    assert p.product(1, 2) == {2: Fraction(1)}
    assert p.product(1, 4) == {4: Fraction(1), 5: Fraction(1, 2)}


def test_instantiate_errors():
    v = get_variant(FamilyId.of("g2n1", 5), "TP5")
    values = {name: 1 for name in v.parameters}
    values["alpha_5"] = 0
    with pytest.raises(DomainConstraintError, match="alpha_5 != 0"):
        instantiate(v, values)

    del values["alpha_5"]
    with pytest.raises(MissingParameterError):
        instantiate(v, values)
    with pytest.raises(KeyError):
        instantiate(v, values)


def test_table_builder_accumulates_terms():
    family_id = FamilyId.of("g1n1", 5)
    t = TableBuilder(family_id, "X")
    t.product(2, 1, {3: "alpha_1"}).product(1, 2, {3: "alpha_2", 4: 1})
    v = t.build()
    p = instantiate(v, {"alpha_1": 1, "alpha_2": "-1/2"})
    assert p.product(2, 1) == {3: Fraction(1, 2), 4: Fraction(1)}

    with pytest.raises(ValueError):
        t.product(1, 6, {1: 1})


def test_associativity_witness(non_associative_product: CommutativeProduct):
    report = check_associative(non_associative_product)
    assert not report.passed
    assert report.witness.indices == [1, 2, 2]
    assert report.witness.residual == [TermSchema(k=1, c="1")]

    assert check_associative(CommutativeProduct(3, {})).passed
    assert check_commutative(non_associative_product).passed


def test_associativity_on_tp1_g1n1_5():
    v = get_variant(FamilyId.of("g1n1", 5), "TP1")
    for seed in range(5):
        p = instantiate(v, sample_parameters(v, seed, 5))
        assert check_associative(p).passed


def test_transposed_leibniz(g1n1_5: LieAlgebra, g1n1_7: LieAlgebra, tp2_g1n1_7_at_zero):
    assert check_transposed_leibniz(g1n1_5, CommutativeProduct(5, {})).passed
    assert check_transposed_leibniz(g1n1_7, tp2_g1n1_7_at_zero).passed

    idempotent = CommutativeProduct(5, {(1, 1): {1: 1}})
    report = check_transposed_leibniz(g1n1_5, idempotent)
    assert report.witness.indices == [1, 2, 1]
    assert report.witness.residual == [TermSchema(k=3, c="-1")]

    with pytest.raises(DimensionMismatchError):
        check_transposed_leibniz(g1n1_7, idempotent)


def test_poisson_leibniz(g1n1_7: LieAlgebra, tp2_g1n1_7_at_zero: CommutativeProduct):
    report = check_poisson_leibniz(g1n1_7, tp2_g1n1_7_at_zero)
    assert not report.passed
    assert report.witness.indices == [1, 1, 1]
    assert report.witness.residual == [TermSchema(k=4, c="1")]

    abelian = LieAlgebra(7, {})
    assert check_poisson_leibniz(abelian, tp2_g1n1_7_at_zero).passed
    assert check_poisson_leibniz(g1n1_7, CommutativeProduct(7, {})).passed


def test_multiplication_operator(tp2_g1n1_7_at_zero: CommutativeProduct):
    m = multiplication_operator(tp2_g1n1_7_at_zero, 1)
    expected = Matrix.from_sparse_rows(
        [{}, {}, {0: 1}, {}, {}, {}, {4: Fraction(-1, 2)}], 7
    )
    assert m == expected
    assert multiplication_operator(CommutativeProduct(3, {}), 2) == Matrix.zeros(3, 3)

    for i in range(1, 8):
        op = multiplication_operator(tp2_g1n1_7_at_zero, i)
        for j in range(1, 8):
            column = {k + 1: x for k, x in enumerate(op.column(j - 1)) if x}
            assert column == tp2_g1n1_7_at_zero.product(j, i)

    with pytest.raises(IndexError):
        multiplication_operator(tp2_g1n1_7_at_zero, 8)


def test_operators_in_halfderivation_space(
    g1n1_5: LieAlgebra, g1n1_7: LieAlgebra, tp2_g1n1_7_at_zero
):
    assert operators_in_halfderivation_space(g1n1_7, tp2_g1n1_7_at_zero).passed

    report = operators_in_halfderivation_space(g1n1_5, CommutativeProduct(5, {(1, 1): {1: 1}}))
    assert report.witness.indices == [1, 1, 2]
    assert report.witness.residual == [TermSchema(k=3, c="-1/2")]


def test_sampling_is_deterministic():
    v = get_variant(FamilyId.of("g2n1", 5), "TP1")
    assert sample_parameters(v, 7, 5) == sample_parameters(v, 7, 5)
    draws = {tuple(sample_parameters(v, seed, 5).values()) for seed in range(100)}
    assert len(draws) >= 95

    for value in sample_parameters(v, 3, 2).values():
        assert -2 <= value.numerator <= 2
        assert value.denominator <= 2

    with pytest.raises(ValueError):
        sample_parameters(v, 1, 0)


def test_sampling_respects_constraints():
    v = get_variant(FamilyId.of("g2n1", 5), "TP4")
    for seed in range(20):
        assert sample_parameters(v, seed, 1)["alpha_12"] != 0

    family_id = FamilyId.of("g1n1", 5)
    impossible = TableBuilder(family_id, "X").require_nonzero("alpha_1 - alpha_1").build()
    with pytest.raises(SamplingError):
        sample_parameters(impossible, 1, 5, max_retries=3)


def test_printed_erratum_is_a_failure():
    # The printed en*en product starts at e4 where e5 is needed, whatever the parameters
    family_id = FamilyId.of("g2n1", 7)
    report = verify_variant(family_id, "TP2", samples=FAST_SAMPLES)
    assert not report.passed
    assert report.suspected_erratum

    outcome = report.transposed_leibniz
    assert outcome.failed_samples == FAST_SAMPLES
    assert outcome.first_failing_sample == 0
    p = instantiate(get_variant(family_id, "TP2"), outcome.assignment)
    recheck = check_transposed_leibniz(make_algebra(family_id), p)
    assert outcome.witness == recheck.witness
    assert len(outcome.witness.indices) == 3
    assert outcome.witness.residual

    # the amendment is reported alongside without changing the printed outcome
    assert report.amendment.source == "amended"
    assert report.amendment.passed
    assert report.resolved
    assert RunReport(tool_version="test", parameters={}, tp_sweep=[report]).failures == 1


def test_verify_variant_passes():
    report = verify_variant(FamilyId.of("g1n1", 9), "TP2", samples=FAST_SAMPLES, seed=7)
    assert report.passed
    assert not report.suspected_erratum
    assert report.amendment is None
    assert report.model_dump(mode="json")["associative"] == "pass"
    # transposed Poisson but not Poisson
    assert not report.poisson_leibniz.passed


def test_sweep_counts_printed_errata():
    family_ids, _ = grid_family_ids(FAST_GRID)
    reports = sweep(family_ids, samples=FAST_SAMPLES, seed=1, bound=5, threads=1)
    assert len(reports) == sum(len(list_variants(f)) for f in family_ids)
    by_id = {r.variant: r for r in reports}
    for report in reports:
        if report.amendment is None:
            assert report.passed, report.variant
        else:
            assert report.amendment.passed, report.variant
    assert not by_id["g2n1[n=7]:TP2"].passed
    assert by_id["g2n1[n=7]:TP2"].suspected_erratum

    run = RunReport(tool_version="test", parameters={}, tp_sweep=reports)
    assert run.failures > 0
    assert run.failures == sum(not r.passed for r in reports)
    assert RunReport(
        tool_version="test", parameters={}, tp_sweep=reports, accept_amended=True
    ).failures == 0


def test_sweep_order_is_independent_of_workers():
    family_ids = [FamilyId.of("g2n1", 5), FamilyId.of("g1_7")]
    serial = sweep(family_ids, samples=2, threads=1)
    parallel = sweep(family_ids, samples=2, threads=2)
    assert [r.variant for r in serial][:3] == ["g2n1[n=5]:TP1", "g2n1[n=5]:TP2", "g2n1[n=5]:TP3"]
    assert serial[9].variant == "g2n1[n=5]:TP10"
    assert [r.model_dump() for r in serial] == [r.model_dump() for r in parallel]


@pytest.mark.slow
def test_full_sweep_up_to_21():
    family_ids, _ = grid_family_ids(list(range(5, 22)))
    for report in sweep(family_ids, samples=25, seed=1, bound=5, threads=None):
        assert report.resolved, report.variant


def test_operators_match_solved_space():
    """Every multiplication operator of a verified table lies in the 1/2-derivation space."""
    family_id = FamilyId.of("g3_11")
    alg = make_algebra(family_id)
    v = get_variant(family_id, "TP")
    for seed in range(3):
        p = instantiate(v, sample_parameters(v, seed, 5))
        assert operators_in_halfderivation_space(alg, p).passed
