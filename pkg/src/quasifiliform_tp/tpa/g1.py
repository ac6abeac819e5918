"""Transposed Poisson tables on g1n1: dimension 5 and odd dimension n >= 7."""

from quasifiliform_tp.catalog import FamilyId
from quasifiliform_tp.tpa.base import TableBuilder, TPVariant


def _n5() -> list[TPVariant]:
    fid = FamilyId.of("g1n1", 5)

    tp1 = TableBuilder(fid, "TP1")
    tp1.product(1, 1, {4: "alpha_4", 5: "alpha_5"})
    tp1.product(1, 2, {4: "beta_4", 5: "beta_5"})
    tp1.product(2, 2, {4: "beta_9", 5: "beta_10"})

    tp2 = TableBuilder(fid, "TP2")
    tp2.product(1, 1, {3: 1, 4: "alpha_4", 5: "alpha_5"})
    tp2.product(1, 2, {3: "beta_3", 4: "beta_4", 5: "beta_5"})
    tp2.product(1, 3, {4: "1/2*beta_3", 5: "-1/2"})
    tp2.product(2, 2, {3: "beta_3**2", 4: "beta_9", 5: "beta_10"})
    tp2.product(2, 3, {4: "1/2*beta_3**2", 5: "-1/2*beta_3"})

    # (alpha_1 - beta_2) recurs throughout this table
    tp3 = TableBuilder(fid, "TP3")
    tp3.product(1, 1, {1: "alpha_1", 2: 1, 3: "alpha_3", 4: "alpha_4", 5: "alpha_5"})
    tp3.product(
        1,
        2,
        {
            1: "-1/4*(alpha_1 - beta_2)**2",
            2: "beta_2",
            3: "-1/2*alpha_3*(alpha_1 - beta_2)",
            4: "beta_4",
            5: "beta_5",
        },
    )
    tp3.product(
        1,
        3,
        {
            3: "1/2*(alpha_1 + beta_2)",
            4: "-1/4*alpha_3*(alpha_1 - beta_2)",
            5: "-1/2*alpha_3",
        },
    )
    tp3.product(1, 4, {4: "1/4*(3*alpha_1 + beta_2)", 5: "1/2"})
    tp3.product(1, 5, {4: "-1/8*(alpha_1 - beta_2)**2", 5: "1/4*(alpha_1 + 3*beta_2)"})
    tp3.product(
        2,
        2,
        {
            1: "-1/4*(alpha_1 - beta_2)**2*beta_2",
            2: "1/4*(-alpha_1**2 - 2*alpha_1*beta_2 + 3*beta_2**2)",
            3: "1/4*alpha_3*(alpha_1 - beta_2)**2",
            4: (
                "1/8*(alpha_1**2*(alpha_5*beta_2 - beta_5)"
                " - beta_2*(2*alpha_4*beta_2 - alpha_5*beta_2**2 - 10*beta_4 + beta_2*beta_5)"
                " + 2*alpha_1*(alpha_4*beta_2 - alpha_5*beta_2**2 - beta_4 + beta_2*beta_5))"
            ),
            5: (
                "1/4*(2*beta_4 - 2*alpha_4*beta_2 - 3*alpha_5*beta_2**2"
                " + 3*alpha_1*(alpha_5*beta_2 - beta_5) + 7*beta_2*beta_5)"
            ),
        },
    )
    tp3.product(
        2,
        3,
        {
            3: "1/4*(beta_2**2 - alpha_1**2)",
            4: "1/8*alpha_3*(alpha_1 - beta_2)**2",
            5: "1/4*alpha_3*(alpha_1 - beta_2)",
        },
    )
    tp3.product(2, 4, {4: "1/4*alpha_1*(beta_2 - alpha_1)", 5: "1/2*beta_2"})
    tp3.product(
        2,
        5,
        {
            4: "-1/8*(alpha_1 - beta_2)**2*beta_2",
            5: "-1/4*(alpha_1**2 + alpha_1*beta_2 - 2*beta_2**2)",
        },
    )
    tp3.product(3, 3, {4: "1/8*(beta_2**2 - alpha_1**2)", 5: "-1/4*(alpha_1 + beta_2)"})

    return [tp1.build(), tp2.build(), tp3.build()]


def _sign_row(t: TableBuilder, n: int, last: int):
    """``e_1 e_j = ((-1)^j / 2) alpha_(n-j+1) e_n`` for ``4 <= j <= last``."""
    for j in range(4, last + 1):
        t.product(1, j, {n: f"({(-1) ** j})/2*alpha_{n - j + 1}"})


def _generic(n: int) -> list[TPVariant]:
    fid = FamilyId.of("g1n1", n)

    tp1 = TableBuilder(fid, "TP1")
    tp1.product(1, 1, {j: f"alpha_{j}" for j in range(4, n + 1)})
    tp1.product(1, 2, {n - 2: "beta_1", n - 1: "beta_2", n: "beta_3"})
    tp1.product(1, 3, {n - 1: "1/2*beta_1", n: f"-1/2*alpha_{n - 2}"})
    _sign_row(tp1, n, n - 3)
    tp1.product(2, 2, {n - 2: "beta_4", n - 1: "beta_5", n: "beta_6"})
    tp1.product(2, 3, {n - 1: "1/2*beta_4", n: "-1/2*beta_1"})

    tp2 = TableBuilder(fid, "TP2")
    tp2.product(1, 1, {3: 1})
    tp2.product(1, 1, {j: f"alpha_{j}" for j in range(4, n + 1)})
    tp2.product(1, 2, {n - 2: "beta_1", n - 1: "beta_2", n: "beta_3"})
    tp2.product(1, 3, {n - 1: "1/2*beta_1", n: f"-1/2*alpha_{n - 2}"})
    _sign_row(tp2, n, n - 3)
    tp2.product(1, n - 2, {n: "-1/2"})
    tp2.product(2, 2, {n - 1: "beta_4", n: "beta_5"})
    tp2.product(2, 3, {n: "-1/2*beta_1"})

    tp3 = TableBuilder(fid, "TP3")
    tp3.product(1, 1, {2: 1})
    tp3.product(1, 1, {j: f"alpha_{j}" for j in range(3, n + 1)})
    tp3.product(1, 2, {n - 1: "2*beta_1", n: "beta_2"})
    tp3.product(1, 3, {n: f"-1/2*alpha_{n - 2}"})
    _sign_row(tp3, n, n - 2)
    tp3.product(1, n - 1, {n: "1/2"})
    tp3.product(2, 2, {n: "beta_1"})

    return [tp1.build(), tp2.build(), tp3.build()]


def variants(family_id: FamilyId) -> list[TPVariant]:
    if family_id.n == 5:
        return _n5()
    return _generic(family_id.n)


def amendments(family_id: FamilyId) -> dict[str, TPVariant]:
    return {}
