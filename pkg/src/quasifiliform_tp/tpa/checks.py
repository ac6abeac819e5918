"""Exhaustive basis checks of commutative products against a Lie bracket.

Every identity checked here is multilinear, so evaluating it on basis tuples is
equivalent to evaluating it on all vectors. Witnesses are reported in
lexicographic order of their indices; the first one is the minimal witness.
"""

from quasifiliform_tp.derivations import (
    DerivationProblem,
    DerivationSpace,
    half_derivation_defect,
    solve_derivation_space,
)
from quasifiliform_tp.exact_linalg import (
    DimensionMismatchError,
    Matrix,
    SparseVector,
    axpy,
)
from quasifiliform_tp.lie import LieAlgebra
from quasifiliform_tp.models import CheckReport, Witness, terms
from quasifiliform_tp.tpa.base import CommutativeProduct

from fractions import Fraction
import logging

logger = logging.getLogger(__name__)

ONE = Fraction(1)
TWO = Fraction(2)


def _check_dims(alg: LieAlgebra, p: CommutativeProduct):
    if alg.dim != p.dim:
        raise DimensionMismatchError(
            f"Bracket of dimension {alg.dim} paired with product of dimension {p.dim}"
        )


def check_commutative(p: CommutativeProduct) -> CheckReport:
    """Commutativity holds by storage; reported for uniformity."""
    return CheckReport(check="commutative", checked=p.dim * (p.dim + 1) // 2)


def check_associative(p: CommutativeProduct) -> CheckReport:
    """Checks ``(e_i e_j) e_k = e_i (e_j e_k)`` on basis triples.

    The associator of a commutative product changes sign when ``i`` and ``k``
    are swapped and vanishes for ``i = k``, so the triples with ``i < k`` and
    any ``j`` cover every case. Witness indices are ``(i, j, k)``.
    """
    n = p.dim
    violations = []
    checked = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            e_ij = p.product(i, j)
            for k in range(i + 1, n + 1):
                checked += 1
                residual = p.multiply_sparse(e_ij, {k: ONE})
                axpy(residual, p.multiply_sparse({i: ONE}, p.product(j, k)), -ONE)
                if residual:
                    violations.append(Witness(indices=[i, j, k], residual=terms(residual)))
    return CheckReport(check="associative", checked=checked, violations=violations)


def check_transposed_leibniz(alg: LieAlgebra, p: CommutativeProduct) -> CheckReport:
    """Checks ``2 z.[x, y] = [z.x, y] + [x, z.y]`` on basis triples.

    Antisymmetry in ``x, y`` reduces the check to ``x = e_i``, ``y = e_j`` with
    ``i < j`` and every ``z = e_k``. Witness indices are ``(i, j, k)``.

    :raises DimensionMismatchError: Raised if the dimensions differ
    """
    _check_dims(alg, p)
    n = alg.dim
    violations = []
    checked = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            bracket_ij = alg.structure(i, j)
            for k in range(1, n + 1):
                checked += 1
                e_k = {k: ONE}
                residual = p.multiply_sparse(e_k, bracket_ij)
                for c in list(residual):
                    residual[c] *= TWO
                axpy(residual, alg.bracket_sparse(p.product(k, i), {j: ONE}), -ONE)
                axpy(residual, alg.bracket_sparse({i: ONE}, p.product(k, j)), -ONE)
                if residual:
                    violations.append(Witness(indices=[i, j, k], residual=terms(residual)))
    return CheckReport(check="transposed_leibniz", checked=checked, violations=violations)


def check_poisson_leibniz(alg: LieAlgebra, p: CommutativeProduct) -> CheckReport:
    """Checks the ordinary Leibniz rule ``[x, y.z] = [x, y].z + y.[x, z]``.

    Both sides are symmetric in ``y, z``, so ``x = e_i``, ``y = e_j``, ``z = e_k``
    with ``j <= k``. Witness indices are ``(i, j, k)``.

    :raises DimensionMismatchError: Raised if the dimensions differ
    """
    _check_dims(alg, p)
    n = alg.dim
    violations = []
    checked = 0
    for i in range(1, n + 1):
        e_i = {i: ONE}
        for j in range(1, n + 1):
            for k in range(j, n + 1):
                checked += 1
                residual = alg.bracket_sparse(e_i, p.product(j, k))
                axpy(residual, p.multiply_sparse(alg.structure(i, j), {k: ONE}), -ONE)
                axpy(residual, p.multiply_sparse({j: ONE}, alg.structure(i, k)), -ONE)
                if residual:
                    violations.append(Witness(indices=[i, j, k], residual=terms(residual)))
    return CheckReport(check="poisson_leibniz", checked=checked, violations=violations)


def multiplication_operator(p: CommutativeProduct, i: int) -> Matrix:
    """The map ``e_j -> e_i * e_j`` as a matrix whose column ``j`` is ``e_i * e_j``.

    :raises IndexError: Raised if ``i`` is not a basis index
    """
    n = p.dim
    if not 1 <= i <= n:
        raise IndexError(f"Basis index {i} out of range 1..{n}")
    rows: list[SparseVector] = [{} for _ in range(n)]
    for j in range(1, n + 1):
        for k, c in p.product(i, j).items():
            rows[k - 1][j - 1] = c
    return Matrix.from_sparse_rows(rows, n)


def operators_in_halfderivation_space(
    alg: LieAlgebra, p: CommutativeProduct, space: DerivationSpace | None = None
) -> CheckReport:
    """Checks that every multiplication operator is a 1/2-derivation of ``alg``.

    Membership is tested against ``space`` (the solved 1/2-derivation space of
    ``alg`` by default). A witness is ``(i, a, b)``: the operator of ``e_i`` fails
    the identity on the basis pair ``e_a, e_b`` with the given residual.

    :raises DimensionMismatchError: Raised if the dimensions differ
    """
    _check_dims(alg, p)
    if space is None:
        space = solve_derivation_space(DerivationProblem(algebra=alg))
    violations = []
    for i in range(1, p.dim + 1):
        operator = multiplication_operator(p, i)
        if space.contains(operator):
            continue
        defect = half_derivation_defect(alg, operator)
        if defect is None:
            violations.append(Witness(indices=[i]))
        else:
            a, b, residual = defect
            violations.append(Witness(indices=[i, a, b], residual=terms(residual)))
    return CheckReport(
        check="operators_in_halfderiv_space", checked=p.dim, violations=violations
    )
