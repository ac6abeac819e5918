"""Transposed Poisson tables on g3n1: dimensions 7, 8, 9 and n >= 10."""

from quasifiliform_tp.catalog import FamilyId
from quasifiliform_tp.tpa.base import TableBuilder, TPVariant

AMENDMENT_NOTES = {
    (9, "TP1"): "e1*e2 = alpha_4 e6 + beta_1 e7 + beta_2 e8; e3*e9 = 0",
    ("generic", "TP1"): "e3*en = 0",
    ("generic", "TP2"): "the alpha sum in e1*e2 starts at e6",
}


def _builder(fid: FamilyId, key: str, amended: bool) -> TableBuilder:
    if not amended:
        return TableBuilder(fid, key)
    regime = 9 if fid.n == 9 else "generic"
    return TableBuilder(fid, key, source="amended", note=AMENDMENT_NOTES[(regime, key)])


def _n7() -> list[TPVariant]:
    fid = FamilyId.of("g3n1", 7)

    tp1 = TableBuilder(fid, "TP1")
    tp1.product(1, 1, {4: "alpha_4", 5: "alpha_5"})
    tp1.product(1, 2, {5: "2*alpha_6", 6: "alpha_7"})
    tp1.product(1, 3, {6: "alpha_6"})
    tp1.product(1, 7, {5: "-alpha_4", 6: "alpha_8"})
    tp1.product(2, 2, {5: "2*alpha_1", 6: "alpha_9"})
    tp1.product(2, 3, {6: "alpha_1"})
    tp1.product(2, 7, {6: "alpha_10"})
    tp1.product(7, 7, {6: "alpha_11"})

    tp2 = TableBuilder(fid, "TP2")
    tp2.product(1, 1, {3: 2, 4: "alpha_4", 5: "alpha_5"})
    tp2.product(1, 2, {5: "2*alpha_6", 6: "alpha_7"})
    tp2.product(1, 3, {6: "alpha_6 - 1"})
    tp2.product(1, 7, {4: -2, 5: "-alpha_4", 6: "alpha_8"})
    tp2.product(2, 2, {6: "alpha_9"})
    tp2.product(2, 7, {6: "alpha_10"})
    tp2.product(7, 7, {5: 2, 6: "alpha_11"})

    return [tp1.build(), tp2.build()]


def _n8() -> list[TPVariant]:
    fid = FamilyId.of("g3n1", 8)

    tp = TableBuilder(fid, "TP")
    tp.product(1, 1, {t: f"alpha_{t}" for t in range(4, 8)})
    tp.product(1, 2, {6: "beta_1", 7: "beta_2"})
    tp.product(1, 3, {7: "1/2*(beta_1 - alpha_4)"})
    tp.product(1, 8, {5: "-alpha_4", 6: "-alpha_5", 7: "gamma_1"})
    tp.product(2, 2, {6: "beta_3", 7: "beta_4"})
    tp.product(2, 3, {7: "1/2*beta_3"})
    tp.product(2, 8, {7: "gamma_2"})
    tp.product(8, 8, {6: "alpha_4", 7: "gamma_3"})

    return [tp.build()]


def _n9_tp1(fid: FamilyId, amended: bool = False) -> TPVariant:
    t = _builder(fid, "TP1", amended)
    t.product(1, 1, {i: f"alpha_{i}" for i in range(4, 9)})
    if amended:
        t.product(1, 2, {6: "alpha_4"})
    t.product(1, 2, {7: "beta_1", 8: "beta_2"})
    t.product(1, 3, {8: "1/2*(beta_1 - alpha_5)"})
    t.product(1, 9, {i: f"-alpha_{i - 1}" for i in range(5, 8)})
    t.product(1, 9, {8: "gamma_1"})
    t.product(2, 2, {7: "beta_3", 8: "beta_4"})
    t.product(2, 3, {8: "1/2*beta_3"})
    t.product(2, 9, {7: "-alpha_4", 8: "gamma_2"})
    if not amended:
        t.product(3, 9, {8: "1/2*alpha_4"})
    t.product(9, 9, {i: f"alpha_{i - 2}" for i in range(6, 8)})
    t.product(9, 9, {8: "gamma_3"})
    return t.build()


def _n9_tp2(fid: FamilyId) -> TPVariant:
    t = TableBuilder(fid, "TP2")
    t.product(1, 1, {3: 1})
    t.product(1, 1, {i: f"alpha_{i}" for i in range(5, 9)})
    t.product(1, 2, {5: 1, 7: "beta_1", 8: "beta_2"})
    t.product(1, 3, {8: "1/2*(beta_1 - alpha_5)"})
    t.product(1, 9, {4: -1})
    t.product(1, 9, {i: f"-alpha_{i - 1}" for i in range(6, 8)})
    t.product(1, 9, {8: "gamma_1"})
    t.product(2, 2, {7: 1, 8: "beta_4"})
    t.product(2, 9, {6: -1, 8: "gamma_2"})
    t.product(9, 9, {5: 1, 7: "alpha_5", 8: "gamma_3"})
    return t.build()


def _generic_tp1(fid: FamilyId, amended: bool = False) -> TPVariant:
    n = fid.n
    t = _builder(fid, "TP1", amended)
    t.product(1, 1, {i: f"alpha_{i}" for i in range(4, n)})
    t.product(1, 2, {i: f"alpha_{i - 2}" for i in range(6, n - 2)})
    t.product(1, 2, {n - 2: "beta_1", n - 1: "beta_2"})
    t.product(1, 3, {n - 1: f"1/2*(beta_1 - alpha_{n - 4})"})
    t.product(1, n, {i: f"-alpha_{i - 1}" for i in range(5, n - 1)})
    t.product(1, n, {n - 1: "gamma_1"})
    t.product(2, 2, {i: f"alpha_{i - 4}" for i in range(8, n - 2)})
    t.product(2, 2, {n - 2: "beta_3", n - 1: "beta_4"})
    t.product(2, 3, {n - 1: f"1/2*(beta_3 - alpha_{n - 6})"})
    t.product(2, n, {i: f"-alpha_{i - 3}" for i in range(7, n - 1)})
    t.product(2, n, {n - 1: "gamma_2"})
    if not amended:
        t.product(3, n, {n - 1: f"1/2*alpha_{n - 5}"})
    t.product(n, n, {i: f"alpha_{i - 2}" for i in range(6, n - 1)})
    t.product(n, n, {n - 1: "gamma_3"})
    return t.build()


def _generic_tp2(fid: FamilyId, amended: bool = False) -> TPVariant:
    n = fid.n
    t = _builder(fid, "TP2", amended)
    t.product(1, 1, {3: 1})
    t.product(1, 1, {i: f"alpha_{i}" for i in range(4, n - 5)})
    t.product(1, 1, {i: f"alpha_{i}" for i in range(n - 4, n)})
    t.product(1, 2, {5: 1})
    first = 6 if amended else 5
    t.product(1, 2, {i: f"alpha_{i - 2}" for i in range(first, n - 3)})
    t.product(1, 2, {n - 2: "beta_1", n - 1: "beta_2"})
    t.product(1, 3, {n - 1: f"1/2*(beta_1 - alpha_{n - 4})"})
    t.product(1, n, {4: -1})
    t.product(1, n, {i: f"-alpha_{i - 1}" for i in range(5, n - 4)})
    t.product(1, n, {i: f"-alpha_{i - 1}" for i in range(n - 3, n - 1)})
    t.product(1, n, {n - 1: "gamma_1"})
    t.product(2, 2, {7: 1})
    t.product(2, 2, {i: f"alpha_{i - 4}" for i in range(8, n - 1)})
    t.product(2, 2, {n - 1: "beta_4"})
    t.product(2, n, {6: -1})
    t.product(2, n, {i: f"-alpha_{i - 3}" for i in range(7, n - 2)})
    t.product(2, n, {n - 1: "gamma_2"})
    t.product(n, n, {5: 1})
    t.product(n, n, {i: f"alpha_{i - 2}" for i in range(6, n - 3)})
    t.product(n, n, {n - 2: f"alpha_{n - 4}", n - 1: "gamma_3"})
    return t.build()


def variants(family_id: FamilyId) -> list[TPVariant]:
    n = family_id.n
    if n == 7:
        return _n7()
    if n == 8:
        return _n8()
    if n == 9:
        return [_n9_tp1(family_id), _n9_tp2(family_id)]
    return [_generic_tp1(family_id), _generic_tp2(family_id)]


def amendments(family_id: FamilyId) -> dict[str, TPVariant]:
    n = family_id.n
    if n in (7, 8):
        return {}
    if n == 9:
        return {"TP1": _n9_tp1(family_id, amended=True)}
    return {
        "TP1": _generic_tp1(family_id, amended=True),
        "TP2": _generic_tp2(family_id, amended=True),
    }
