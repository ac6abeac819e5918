"""Top-level verification runs: Lie axioms, closed-form theorems and the table sweep."""

from quasifiliform_tp import __version__
from quasifiliform_tp.catalog import (
    FIXED_DIMENSIONS,
    MINIMUM_DIMENSIONS,
    FamilyError,
    FamilyId,
    make_algebra,
    validate_family,
)
from quasifiliform_tp.derivations import verify_theorem
from quasifiliform_tp.lie import jacobi_check, lower_central_series, nilindex
from quasifiliform_tp.models import AlgebraReport, RunReport
from quasifiliform_tp.tpa.sampling import DEFAULT_MAX_RETRIES
from quasifiliform_tp.tpa.sweep import sweep

import logging
import time

logger = logging.getLogger(__name__)


def grid_family_ids(n_grid: list[int]) -> tuple[list[FamilyId], list[str]]:
    """Expands a dimension grid into catalog algebras.

    The fixed-dimension families are always included. Grid entries that are
    invalid for a family are skipped with a notice.

    :return: The algebras in family order, and the skip notices
    :rtype: tuple[list[FamilyId], list[str]]
    """
    family_ids, skipped = [], []
    for family in MINIMUM_DIMENSIONS:
        for n in sorted(set(n_grid)):
            try:
                family_ids.append(FamilyId.of(family, n))
            except FamilyError as e:
                skipped.append(f"skipped {family.value} n={n}: {e}")
    for family in FIXED_DIMENSIONS:
        family_ids.append(FamilyId.of(family))
    for notice in skipped:
        logger.info(notice)
    return family_ids, skipped


def check_algebra(family_id: FamilyId) -> AlgebraReport:
    """Runs the Jacobi identity and the lower central series on a catalog algebra.

    A quasi-filiform algebra of dimension ``n`` must have nilindex ``n - 1``.
    """
    validate_family(family_id)
    algebra = make_algebra(family_id)
    return AlgebraReport(
        family=family_id.family.value,
        n=family_id.n,
        name=algebra.name,
        jacobi=jacobi_check(algebra),
        lower_central_series=lower_central_series(algebra),
        nilindex=nilindex(algebra),
        expected_nilindex=family_id.n - 1,
    )


def cmd_verify_all(
    n_grid: list[int],
    samples: int = 25,
    seed: int = 1,
    bound: int = 5,
    accept_amended: bool = False,
    threads: int | None = 1,
    max_retries: int = DEFAULT_MAX_RETRIES,
) -> RunReport:
    """Verifies the Lie axioms, every closed-form derivation space and every table on a grid.

    Failures are report content; nothing is raised for a failing check.

    :param n_grid: Dimensions for the families that depend on ``n``
    :type n_grid: list[int]
    :param samples: Parameter samples per table
    :type samples: int
    :param seed: First sample seed
    :type seed: int
    :param bound: Bound on sampled numerators and denominators
    :type bound: int
    :param accept_amended: Count a failing printed table as passing when its registered
        amendment passes
    :type accept_amended: bool
    :param threads: Worker processes for the sweep, None for one per CPU
    :type threads: int | None
    :return: The full report; ``report.failures == 0`` means success
    :rtype: RunReport
    """
    family_ids, skipped = grid_family_ids(n_grid)
    timings = {}

    start = time.perf_counter()
    lie_axioms = [check_algebra(family_id) for family_id in family_ids]
    timings["lie_axioms"] = time.perf_counter() - start

    start = time.perf_counter()
    theorems = [verify_theorem(family_id) for family_id in family_ids]
    timings["theorems"] = time.perf_counter() - start

    start = time.perf_counter()
    tp_sweep = sweep(
        family_ids,
        samples=samples,
        seed=seed,
        bound=bound,
        threads=threads,
        max_retries=max_retries,
    )
    timings["tp_sweep"] = time.perf_counter() - start

    report = RunReport(
        tool_version=__version__,
        parameters={
            "n_grid": sorted(set(n_grid)),
            "samples": samples,
            "seed": seed,
            "bound": bound,
            "accept_amended": accept_amended,
        },
        accept_amended=accept_amended,
        skipped=skipped,
        lie_axioms=lie_axioms,
        theorems=theorems,
        tp_sweep=tp_sweep,
        timings=timings,
    )
    logger.info(f"Verification finished with {report.failures} failure(s)")
    return report
