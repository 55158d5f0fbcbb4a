from fractions import Fraction as Q

import pytest

from gini_invariance.formulas import (
    P810_COEFFS,
    P812_COEFFS,
    Stage,
    coefficient_formula,
    cofactor,
)
from gini_invariance.poly import parse_poly, weighted_degree

WEIGHTS = {"w": 1, "v": 1, "s": 2}
WVS = ("w", "v", "s")


def coeff(f, text):
    (exp, c), = parse_poly(text, WVS).terms.items()
    return f.terms.get(exp, 0)


def test_stored_cofactors():
    assert len(cofactor(8).terms) == 8
    assert coeff(cofactor(8), "w^3*v^5") == 2100
    assert len(cofactor(10).terms) == 18
    assert coeff(cofactor(10), "v^4*s^5") == 279
    assert len(cofactor(12).terms) == 32
    assert coeff(cofactor(12), "w^7*v^13") == 76725000


@pytest.mark.parametrize("k,deg", [(8, 8), (10, 14), (12, 20)])
def test_weighted_homogeneity(k, deg):
    assert weighted_degree(cofactor(k), WEIGHTS) == deg


def test_printed_integers():
    assert len(P810_COEFFS) == 10 and len(P812_COEFFS) == 14
    assert P810_COEFFS[0] == 1178440166794705680
    assert P810_COEFFS[-1] == 44498612407766474466
    assert P812_COEFFS[-1] == 95711050739605210548400442203992


def test_formula_stages():
    assert coefficient_formula(2).stage == Stage.RAW
    assert coefficient_formula(6).stage == Stage.AFTER_T
    assert {coefficient_formula(k).stage for k in (8, 10, 12)} == {Stage.AFTER_R}
    with pytest.raises(ValueError):
        coefficient_formula(14)
    with pytest.raises(ZeroDivisionError):
        coefficient_formula(6).evaluate({"w": Q(0), "v": Q(1), "r": Q(1), "s": Q(1)})
