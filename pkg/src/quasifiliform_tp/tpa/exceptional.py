"""Transposed Poisson tables on the fixed-dimension algebras g1_7, g2_9 and g3_11."""

from quasifiliform_tp.catalog import Family, FamilyId
from quasifiliform_tp.tpa.base import TableBuilder, TPVariant


def _g1_7(fid: FamilyId) -> list[TPVariant]:
    tp1 = TableBuilder(fid, "TP1")
    tp1.product(1, 1, {4: "alpha_4", 5: "alpha_5", 6: "alpha_6", 7: "alpha_7"})
    tp1.product(1, 2, {5: "alpha_1", 6: "alpha_2", 7: "alpha_8"})
    tp1.product(1, 3, {6: "1/2*(alpha_1 - alpha_4)", 7: "-1/2*alpha_5"})
    tp1.product(1, 4, {7: "1/2*alpha_4"})
    tp1.product(2, 2, {5: "alpha_9", 6: "alpha_10", 7: "alpha_11"})
    tp1.product(2, 3, {6: "1/2*alpha_9", 7: "-1/2*alpha_1"})

    tp2 = TableBuilder(fid, "TP2")
    tp2.product(1, 1, {3: 6, 4: "alpha_4", 5: "alpha_5", 6: "alpha_6", 7: "alpha_7"})
    tp2.product(1, 2, {4: -2, 5: "alpha_1", 6: "alpha_2", 7: "alpha_8"})
    tp2.product(1, 3, {5: -4, 6: "1/2*(alpha_1 - alpha_4)", 7: "-1/2*alpha_5"})
    tp2.product(1, 4, {6: -2, 7: "1/2*alpha_4"})
    tp2.product(1, 5, {7: -3})
    tp2.product(2, 2, {5: "-2/3", 6: "alpha_10", 7: "alpha_11"})
    tp2.product(2, 3, {6: "2/3", 7: "-1/2*alpha_1"})
    tp2.product(2, 4, {7: -1})
    tp2.product(3, 3, {7: 2})

    return [tp1.build(), tp2.build()]


def _g2_9(fid: FamilyId) -> list[TPVariant]:
    tp = TableBuilder(fid, "TP")
    tp.product(1, 1, {t: f"alpha_{t - 4}" for t in range(5, 10)})
    tp.product(1, 2, {6: "1/3*alpha_1", 7: "alpha_6", 8: "alpha_7", 9: "alpha_8"})
    tp.product(1, 3, {7: "-4/3*alpha_1", 8: "1/2*(alpha_6 - 5*alpha_2)", 9: "-1/2*alpha_3"})
    tp.product(1, 4, {8: "1/3*alpha_1", 9: "1/2*alpha_2"})
    tp.product(1, 5, {9: "-1/2*alpha_1"})
    tp.product(2, 2, {7: "alpha_9", 8: "alpha_10", 9: "alpha_11"})
    tp.product(2, 3, {8: "1/6*(3*alpha_9 - 5*alpha_1)", 9: "-1/2*alpha_6"})
    tp.product(2, 4, {9: "1/6*alpha_1"})
    tp.product(3, 3, {9: "2/3*alpha_1"})
    return [tp.build()]


def _g3_11(fid: FamilyId) -> list[TPVariant]:
    tp = TableBuilder(fid, "TP")
    tp.product(1, 1, {i: f"alpha_{i}" for i in range(6, 12)})
    tp.product(
        1, 2, {7: "-alpha_6", 8: "-alpha_7", 9: "alpha_1", 10: "alpha_2", 11: "alpha_3"}
    )
    tp.product(1, 3, {10: "1/2*alpha_1", 11: "-1/2*alpha_9"})
    tp.product(1, 4, {10: "1/2*alpha_7", 11: "1/2*alpha_8"})
    tp.product(1, 5, {10: "-1/2*alpha_6", 11: "-1/2*alpha_7"})
    tp.product(1, 6, {11: "1/2*alpha_6"})
    tp.product(2, 2, {8: "alpha_6", 9: "alpha_4", 10: "alpha_5", 11: "alpha_12"})
    tp.product(2, 3, {10: "1/2*alpha_4", 11: "-1/2*alpha_1"})
    tp.product(2, 4, {10: "-1/2*alpha_6", 11: "-1/2*alpha_7"})
    tp.product(2, 5, {11: "1/2*alpha_6"})
    return [tp.build()]


def variants(family_id: FamilyId) -> list[TPVariant]:
    tables = {Family.G1_7: _g1_7, Family.G2_9: _g2_9, Family.G3_11: _g3_11}
    return tables[family_id.family](family_id)


def amendments(family_id: FamilyId) -> dict[str, TPVariant]:
    return {}
