from quasifiliform_tp.symbolic import rational
from quasifiliform_tp.tpa.base import ParameterAssignment, SamplingError, TPVariant

from fractions import Fraction
import logging
import random

logger = logging.getLogger(__name__)

DEFAULT_MAX_RETRIES = 100


def _satisfies_constraints(v: TPVariant, values: ParameterAssignment) -> bool:
    substitution = {v.symbols[name]: rational(value) for name, value in values.items()}
    return all(expr.xreplace(substitution) != 0 for expr in v.constraints)


def sample_parameters(
    v: TPVariant, seed: int, bound: int, max_retries: int = DEFAULT_MAX_RETRIES
) -> ParameterAssignment:
    """Draws a deterministic constraint-satisfying parameter assignment.

    Numerators are drawn from ``[-bound, bound]`` and denominators from
    ``[1, bound]``. The generator is seeded from the variant id and ``seed``, so
    printed and amended tables of a variant see the same values for the
    parameters they share. Parameters that occur in domain constraints are
    redrawn until every constraint is nonzero.

    :param v: The variant
    :type v: TPVariant
    :param seed: Seed of the draw
    :type seed: int
    :param bound: Bound on numerators and denominators, at least 1
    :type bound: int
    :param max_retries: Number of redraws before giving up
    :type max_retries: int
    :return: Values for every parameter of ``v``
    :rtype: ParameterAssignment
    :raises ValueError: Raised if ``bound < 1``
    :raises SamplingError: Raised if the constraints are not met within ``max_retries`` redraws
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    rng = random.Random(f"{v.id}:{seed}")

    def draw() -> Fraction:
        numerator = rng.randint(-bound, bound)
        return Fraction(numerator, rng.randint(1, bound))

    values = {name: draw() for name in v.parameters}
    constrained = v.constrained_parameters()
    for attempt in range(max_retries + 1):
        if _satisfies_constraints(v, values):
            if attempt:
                logger.debug(f"{v.id}: constraints met after {attempt} redraws")
            return values
        for name in constrained:
            values[name] = draw()
    raise SamplingError(
        f"{v.id}: no sample satisfying {', '.join(v.constraint_labels)} "
        f"within {max_retries} redraws (seed={seed}, bound={bound})"
    )
