"""Seeded verification of transposed Poisson tables, per variant and across a grid."""

from quasifiliform_tp.catalog import Family, FamilyId, make_algebra
from quasifiliform_tp.derivations import DerivationProblem, solve_derivation_space
from quasifiliform_tp.models import CheckOutcome, CheckReport, VariantReport
from quasifiliform_tp.tpa.base import ParameterAssignment, TPVariant, instantiate
from quasifiliform_tp.tpa.checks import (
    check_associative,
    check_commutative,
    check_poisson_leibniz,
    check_transposed_leibniz,
    operators_in_halfderivation_space,
)
from quasifiliform_tp.tpa.registry import get_amendment, get_variant, list_variants
from quasifiliform_tp.tpa.sampling import DEFAULT_MAX_RETRIES, sample_parameters
from quasifiliform_tp.utils import format_rational

from concurrent.futures import ProcessPoolExecutor
from functools import partial
import logging
import re
from typing import Iterable

logger = logging.getLogger(__name__)

CORE_CHECKS = (
    "commutative",
    "associative",
    "transposed_leibniz",
    "operators_in_halfderiv_space",
)
CHECKS = CORE_CHECKS + ("poisson_leibniz",)

_FAMILY_ORDER = {family: position for position, family in enumerate(Family)}


def variant_sort_key(family_id: FamilyId, key: str) -> tuple[int, int, int, str]:
    """Orders by family, dimension and the numeric part of the key (TP2 before TP10)."""
    digits = re.search(r"\d+$", key)
    return (
        _FAMILY_ORDER[family_id.family],
        family_id.n,
        int(digits.group()) if digits else 0,
        key,
    )


class _Outcome:
    def __init__(self):
        self.failed_samples = 0
        self.first: tuple[int, ParameterAssignment, CheckReport] | None = None

    def record(self, sample: int, assignment: ParameterAssignment, report: CheckReport):
        if report.passed:
            return
        self.failed_samples += 1
        if self.first is None:
            self.first = (sample, assignment, report)

    def result(self) -> CheckOutcome:
        if self.first is None:
            return CheckOutcome()
        sample, assignment, report = self.first
        return CheckOutcome(
            status="fail",
            failed_samples=self.failed_samples,
            first_failing_sample=sample,
            assignment={name: format_rational(value) for name, value in assignment.items()},
            witness=report.witness,
        )


def _verify_table(
    v: TPVariant, samples: int, seed: int, bound: int, max_retries: int
) -> VariantReport:
    algebra = make_algebra(v.family_id)
    space = solve_derivation_space(DerivationProblem(algebra=algebra))
    outcomes = {name: _Outcome() for name in CHECKS}
    samples_failing_core = 0
    for sample in range(samples):
        assignment = sample_parameters(v, seed + sample, bound, max_retries)
        p = instantiate(v, assignment)
        reports = {
            "commutative": check_commutative(p),
            "associative": check_associative(p),
            "transposed_leibniz": check_transposed_leibniz(algebra, p),
            "operators_in_halfderiv_space": operators_in_halfderivation_space(algebra, p, space),
            "poisson_leibniz": check_poisson_leibniz(algebra, p),
        }
        for name, report in reports.items():
            outcomes[name].record(sample, assignment, report)
        failing = [name for name in CORE_CHECKS if not reports[name].passed]
        if failing:
            samples_failing_core += 1
            logger.debug(f"{v.id} ({v.source}) sample {sample}: fails {', '.join(failing)}")

    return VariantReport(
        variant=v.id,
        family=v.family_id.family.value,
        n=v.dim,
        key=v.key,
        source=v.source,
        note=v.note,
        parameters=list(v.parameters),
        samples=samples,
        suspected_erratum=samples > 0 and samples_failing_core == samples,
        **{name: outcome.result() for name, outcome in outcomes.items()},
    )


def verify_variant(
    family_id: FamilyId,
    key: str,
    samples: int = 25,
    seed: int = 1,
    bound: int = 5,
    max_retries: int = DEFAULT_MAX_RETRIES,
) -> VariantReport:
    """Verifies one printed table on seeded parameter samples.

    Samples use seeds ``seed, seed + 1, ..., seed + samples - 1``. A registered
    amendment is verified with the same seeds and attached to the report.

    :param family_id: Family and dimension
    :type family_id: FamilyId
    :param key: Variant key, e.g. ``TP1``
    :type key: str
    :param samples: Number of parameter samples
    :type samples: int
    :param seed: First seed
    :type seed: int
    :param bound: Bound on sampled numerators and denominators
    :type bound: int
    :param max_retries: Redraws allowed per sample to meet domain constraints
    :type max_retries: int
    :return: The aggregated report
    :rtype: VariantReport
    :raises UnknownVariantError: Raised if ``key`` is not registered for the family
    :raises SamplingError: Raised if no constraint-satisfying sample can be drawn
    """
    printed = get_variant(family_id, key)
    report = _verify_table(printed, samples, seed, bound, max_retries)
    if report.suspected_erratum:
        logger.warning(f"{printed.id}: printed table fails on every sample (suspected erratum)")
    amended = get_amendment(family_id, key)
    if amended is not None:
        report.amendment = _verify_table(amended, samples, seed, bound, max_retries)
        status = "passes" if report.amendment.passed else "fails"
        logger.info(f"{printed.id}: amendment {status}")
    logger.info(f"{printed.id}: {'pass' if report.passed else 'fail'}")
    return report


def _verify_task(
    task: tuple[FamilyId, str], samples: int, seed: int, bound: int, max_retries: int
) -> VariantReport:
    family_id, key = task
    return verify_variant(
        family_id, key, samples=samples, seed=seed, bound=bound, max_retries=max_retries
    )


def sweep(
    family_ids: Iterable[FamilyId],
    samples: int = 25,
    seed: int = 1,
    bound: int = 5,
    threads: int | None = 1,
    max_retries: int = DEFAULT_MAX_RETRIES,
) -> list[VariantReport]:
    """Verifies every variant of the given algebras.

    Work is spread over ``threads`` worker processes (one per CPU when None;
    in-process when 1). Reports are returned sorted by family, dimension and key,
    independent of the worker count.

    :raises ValueError: Raised if ``threads < 1``
    """
    if threads is not None and threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    tasks = [(family_id, key) for family_id in family_ids for key in list_variants(family_id)]
    worker = partial(
        _verify_task, samples=samples, seed=seed, bound=bound, max_retries=max_retries
    )
    logger.info(f"Sweeping {len(tasks)} variants with {samples} samples each")
    if threads == 1 or len(tasks) <= 1:
        reports = [worker(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(worker, tasks))
    return sorted(
        reports,
        key=lambda r: variant_sort_key(FamilyId(family=Family(r.family), n=r.n), r.key),
    )
