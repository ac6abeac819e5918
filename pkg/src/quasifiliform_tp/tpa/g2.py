"""Transposed Poisson tables on g2n1: dimensions 5, 6 and n >= 7.

Tables marked as amended differ from the printed ones only where noted; the
printed tables fail the transposed Leibniz rule or associativity for generic
parameters.
"""

from quasifiliform_tp.catalog import FamilyId
from quasifiliform_tp.tpa.base import TableBuilder, TPVariant

AMENDMENT_NOTES = {
    (5, "TP1"): "e2*e2 coefficient of e4 is 2(alpha_15 + alpha_5 alpha_16)^2 - alpha_5(2 alpha_15 + alpha_5 alpha_16)",
    (5, "TP4"): "e1*e2 has no alpha_9 e5 term",
    (5, "TP7"): "e1*e3 = alpha_15 e4",
    ("generic", "TP1"): "e2*en = -alpha_1 e(n-1); en*en = e4 + sum_{i=5}^{n-2} alpha_(i-2) e_i + alpha_(n+2) e(n-1)",
    ("generic", "TP2"): "en*en = e5 + sum_{i=6}^{n-2} alpha_(i-2) e_i + alpha_(n+5) e(n-1)",
    ("generic", "TP3"): "en*en = sum_{i=6}^{n-2} alpha_(i-2) e_i + alpha_(n+5) e(n-1)",
}


def _builder(fid: FamilyId, key: str, amended: bool) -> TableBuilder:
    if not amended:
        return TableBuilder(fid, key)
    regime = 5 if fid.n == 5 else "generic"
    return TableBuilder(fid, key, source="amended", note=AMENDMENT_NOTES[(regime, key)])


def _n5_tp1(fid: FamilyId, amended: bool = False) -> TPVariant:
    t = _builder(fid, "TP1", amended)
    t.product(1, 1, {2: 1, 3: "alpha_3", 4: "alpha_4", 5: "alpha_5"})
    t.product(1, 2, {3: "alpha_5*(1 - 2*alpha_16) - 2*alpha_15", 4: "alpha_8"})
    t.product(1, 3, {4: "-(alpha_15 + alpha_5*alpha_16)"})
    t.product(1, 5, {3: -1, 4: "alpha_10"})
    if amended:
        t.product(2, 2, {4: "2*(alpha_15 + alpha_5*alpha_16)**2 - alpha_5*(2*alpha_15 + alpha_5*alpha_16)"})
    else:
        t.product(2, 2, {4: "2*(alpha_15 + alpha_5*alpha_16)**2 - alpha_5*(2*alpha_15 + alpha_16)"})
    t.product(2, 5, {4: "alpha_15"})
    t.product(5, 5, {4: "alpha_16"})
    return t.build()


def _n5_tp4(fid: FamilyId, amended: bool = False) -> TPVariant:
    t = _builder(fid, "TP4", amended)
    t.product(
        1, 1, {3: "(alpha_7**2 - alpha_5*(alpha_7 + 2*alpha_15))/alpha_12", 4: "alpha_4", 5: "alpha_5"}
    )
    if amended:
        t.product(1, 2, {3: "alpha_7", 4: "alpha_8"})
    else:
        t.product(1, 2, {3: "alpha_7", 4: "alpha_8", 5: "alpha_9"})
    t.product(1, 3, {4: "1/2*(alpha_7 - alpha_5)"})
    t.product(1, 5, {4: "1/2*alpha_5*alpha_12"})
    t.product(2, 2, {3: "alpha_12", 4: "alpha_13", 5: 1})
    t.product(2, 3, {4: "1/2*alpha_12"})
    t.product(2, 5, {4: "alpha_15"})
    t.require_nonzero("alpha_12")
    return t.build()


def _n5_tp7(fid: FamilyId, amended: bool = False) -> TPVariant:
    t = _builder(fid, "TP7", amended)
    t.product(1, 1, {3: "alpha_3", 4: "alpha_4"})
    t.product(1, 2, {3: "2*alpha_15", 4: "alpha_8", 5: 1})
    t.product(1, 3, {4: "alpha_15" if amended else "1/2*alpha_15"})
    t.product(1, 5, {4: "1/2*(alpha_3*(alpha_12 - 1) - 4*alpha_15**2)"})
    t.product(2, 2, {3: "alpha_12", 4: "alpha_13"})
    t.product(2, 3, {4: "1/2*(alpha_12 - 1)"})
    t.product(2, 5, {4: "alpha_15"})
    return t.build()


def _n5() -> list[TPVariant]:
    fid = FamilyId.of("g2n1", 5)

    tp2 = TableBuilder(fid, "TP2")
    tp2.product(1, 1, {3: "alpha_3", 4: "alpha_4"})
    tp2.product(1, 2, {4: "alpha_8"})
    tp2.product(1, 5, {4: "alpha_10"})
    tp2.product(2, 2, {4: "alpha_13"})
    tp2.product(2, 5, {4: "alpha_15"})
    tp2.product(5, 5, {4: 1})

    tp3 = TableBuilder(fid, "TP3")
    tp3.product(1, 1, {3: "alpha_7**2", 4: "alpha_4"})
    tp3.product(1, 2, {3: "alpha_7", 4: "alpha_8"})
    tp3.product(1, 3, {4: "1/2*alpha_7"})
    tp3.product(1, 5, {4: "alpha_10"})
    tp3.product(2, 2, {3: 1, 4: "alpha_13"})
    tp3.product(2, 3, {4: "1/2"})
    tp3.product(2, 5, {4: "alpha_15"})
    tp3.product(5, 5, {4: 1})

    tp5 = TableBuilder(fid, "TP5")
    tp5.product(1, 1, {3: "alpha_3", 4: "alpha_4", 5: "alpha_5"})
    tp5.product(1, 2, {3: "alpha_7", 4: "alpha_8"})
    tp5.product(1, 3, {4: "1/2*(alpha_7 - alpha_5)"})
    tp5.product(2, 2, {4: "alpha_13", 5: 1})
    tp5.product(2, 5, {4: "alpha_7*(alpha_7 - alpha_5)/(2*alpha_5)"})
    tp5.require_nonzero("alpha_5")

    tp6 = TableBuilder(fid, "TP6")
    tp6.product(1, 1, {3: "alpha_3", 4: "alpha_4"})
    tp6.product(1, 2, {4: "alpha_8"})
    tp6.product(2, 2, {4: "alpha_13", 5: 1})
    tp6.product(2, 5, {4: "alpha_15"})

    tp8 = TableBuilder(fid, "TP8")
    tp8.product(1, 1, {3: "alpha_7**2", 4: "alpha_4"})
    tp8.product(1, 2, {3: "alpha_7", 4: "alpha_8"})
    tp8.product(1, 3, {4: "1/2*alpha_7"})
    tp8.product(1, 5, {4: "alpha_10"})
    tp8.product(2, 2, {3: 1, 4: "alpha_13"})
    tp8.product(2, 3, {4: "1/2"})
    tp8.product(2, 5, {4: "alpha_15"})

    tp9 = TableBuilder(fid, "TP9")
    tp9.product(1, 1, {3: "alpha_3", 4: "alpha_4", 5: "alpha_5"})
    tp9.product(1, 2, {3: "alpha_7", 4: "alpha_8"})
    tp9.product(1, 3, {4: "1/2*(alpha_7 - alpha_5)"})
    tp9.product(1, 5, {4: "alpha_10"})
    tp9.product(2, 2, {4: "alpha_13"})
    tp9.product(2, 5, {4: "alpha_7*(alpha_7 - alpha_5)/(2*alpha_5)"})
    tp9.require_nonzero("alpha_5")

    tp10 = TableBuilder(fid, "TP10")
    tp10.product(1, 1, {3: "alpha_3", 4: "alpha_4"})
    tp10.product(1, 2, {4: "alpha_8"})
    tp10.product(1, 5, {4: "alpha_10"})
    tp10.product(2, 2, {4: "alpha_13"})
    tp10.product(2, 5, {4: "alpha_15"})

    return [
        _n5_tp1(fid),
        tp2.build(),
        tp3.build(),
        _n5_tp4(fid),
        tp5.build(),
        tp6.build(),
        _n5_tp7(fid),
        tp8.build(),
        tp9.build(),
        tp10.build(),
    ]


def _n6() -> list[TPVariant]:
    fid = FamilyId.of("g2n1", 6)

    tp1 = TableBuilder(fid, "TP1")
    tp1.product(1, 1, {2: 1, 3: "alpha_2", 4: "alpha_3", 5: "alpha_4"})
    tp1.product(1, 2, {4: "-2*alpha_11", 5: "alpha_7"})
    tp1.product(1, 3, {5: "-alpha_11"})
    tp1.product(1, 6, {3: -1, 4: "-alpha_2", 5: "alpha_8"})
    tp1.product(2, 6, {5: "alpha_11"})
    tp1.product(6, 6, {4: 1, 5: "alpha_12"})

    tp2 = TableBuilder(fid, "TP2")
    tp2.product(1, 1, {3: 1, 4: "alpha_3", 5: "alpha_4"})
    tp2.product(1, 2, {4: "alpha_6", 5: "alpha_7"})
    tp2.product(1, 3, {5: "1/2*alpha_6"})
    tp2.product(1, 6, {4: -1, 5: "alpha_8"})
    tp2.product(2, 2, {5: "alpha_10"})
    tp2.product(2, 6, {5: "alpha_11"})
    tp2.product(6, 6, {5: "alpha_12"})

    tp3 = TableBuilder(fid, "TP3")
    tp3.product(1, 1, {4: "alpha_3", 5: "alpha_4"})
    tp3.product(1, 2, {4: "alpha_6", 5: "alpha_7"})
    tp3.product(1, 3, {5: "1/2*alpha_6"})
    tp3.product(1, 6, {5: "alpha_8"})
    tp3.product(2, 2, {4: "alpha_9", 5: "alpha_10"})
    tp3.product(2, 3, {5: "1/2*alpha_9"})
    tp3.product(2, 6, {5: "alpha_11"})
    tp3.product(6, 6, {5: "alpha_12"})

    return [tp1.build(), tp2.build(), tp3.build()]


def _generic_tp1(fid: FamilyId, amended: bool = False) -> TPVariant:
    n = fid.n
    t = _builder(fid, "TP1", amended)
    t.product(1, 1, {2: 1})
    t.product(1, 1, {i: f"alpha_{i}" for i in range(3, n)})
    t.product(1, 2, {n - 2: "2*alpha_1", n - 1: f"alpha_{n}"})
    t.product(1, 3, {n - 1: "alpha_1"})
    t.product(1, n, {3: -1})
    t.product(1, n, {i: f"-alpha_{i - 1}" for i in range(4, n - 1)})
    t.product(1, n, {n - 1: f"alpha_{n + 1}"})
    if amended:
        t.product(2, n, {n - 1: "-alpha_1"})
        t.product(n, n, {4: 1})
        t.product(n, n, {i: f"alpha_{i - 2}" for i in range(5, n - 1)})
    else:
        t.product(2, n, {n - 1: "-alpha_1*alpha_3"})
        t.product(n, n, {i: f"alpha_{i - 1}" for i in range(4, n - 1)})
    t.product(n, n, {n - 1: f"alpha_{n + 2}"})
    return t.build()


def _generic_tp2(fid: FamilyId, amended: bool = False) -> TPVariant:
    n = fid.n
    t = _builder(fid, "TP2", amended)
    t.product(1, 1, {3: 1})
    t.product(1, 1, {i: f"alpha_{i}" for i in range(4, n)})
    t.product(1, 2, {n - 1: f"alpha_{n}"})
    t.product(1, n, {4: -1})
    t.product(1, n, {i: f"-alpha_{i - 1}" for i in range(5, n - 1)})
    t.product(1, n, {n - 1: f"alpha_{n + 1}"})
    t.product(2, 2, {n - 1: f"alpha_{n + 3}"})
    t.product(2, n, {n - 1: f"alpha_{n + 4}"})
    if amended:
        t.product(n, n, {5: 1})
        t.product(n, n, {i: f"alpha_{i - 2}" for i in range(6, n - 1)})
    else:
        t.product(n, n, {4: 1})
        t.product(n, n, {i: f"alpha_{i - 1}" for i in range(5, n - 1)})
    t.product(n, n, {n - 1: f"alpha_{n + 5}"})
    return t.build()


def _generic_tp3(fid: FamilyId, amended: bool = False) -> TPVariant:
    n = fid.n
    t = _builder(fid, "TP3", amended)
    t.product(1, 1, {i: f"alpha_{i}" for i in range(4, n)})
    t.product(1, 2, {n - 2: "2*alpha_1", n - 1: f"alpha_{n}"})
    t.product(1, 3, {n - 1: "alpha_1"})
    t.product(1, n, {i: f"-alpha_{i - 1}" for i in range(5, n - 1)})
    t.product(1, n, {n - 1: f"alpha_{n + 1}"})
    t.product(2, 2, {n - 2: f"2*alpha_{n + 2}", n - 1: f"alpha_{n + 3}"})
    t.product(2, 3, {n - 1: f"alpha_{n + 2}"})
    t.product(2, n, {n - 1: f"alpha_{n + 4}"})
    if amended:
        t.product(n, n, {i: f"alpha_{i - 2}" for i in range(6, n - 1)})
    else:
        t.product(n, n, {i: f"alpha_{i - 1}" for i in range(5, n - 1)})
    t.product(n, n, {n - 1: f"alpha_{n + 5}"})
    return t.build()


def variants(family_id: FamilyId) -> list[TPVariant]:
    if family_id.n == 5:
        return _n5()
    if family_id.n == 6:
        return _n6()
    return [_generic_tp1(family_id), _generic_tp2(family_id), _generic_tp3(family_id)]


def amendments(family_id: FamilyId) -> dict[str, TPVariant]:
    if family_id.n == 5:
        return {
            "TP1": _n5_tp1(family_id, amended=True),
            "TP4": _n5_tp4(family_id, amended=True),
            "TP7": _n5_tp7(family_id, amended=True),
        }
    if family_id.n == 6:
        return {}
    return {
        "TP1": _generic_tp1(family_id, amended=True),
        "TP2": _generic_tp2(family_id, amended=True),
        "TP3": _generic_tp3(family_id, amended=True),
    }
