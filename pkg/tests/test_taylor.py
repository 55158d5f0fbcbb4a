import random
from fractions import Fraction as Q

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gini_invariance.exactnum import TowerElement
from gini_invariance.formulas import Stage, coefficient_formula, r_of
from gini_invariance.gini import ParamTuple
from gini_invariance.taylor import (
    check_formula,
    lift_params,
    reduce_params,
    sample_point,
    series_invariance_check,
    sufficiency_series_check,
    taylor_coefficients,
    taylor_series,
)

from oracles import taylor_numeric


def test_reduce_examples():
    r = reduce_params(ParamTuple.of(3, 1, 5, -5, 2, 0))
    assert (r.w, r.v, r.t, r.r, r.s) == (1, 1, 1, 13, -12)
    r = reduce_params(ParamTuple.of(Q(3, 2), Q(1, 2), Q(1, 2), Q(-1, 2), 1, 0))
    assert (r.w, r.v, r.t, r.r, r.s) == (Q(1, 2), Q(1, 2), Q(1, 4), Q(1, 4), 0)
    assert reduce_params(ParamTuple.of(0, 0, 0, 0, 0, 0)).as_dict() == dict.fromkeys("wvtrs", 0)


def test_lift_rational_example():
    lifted = lift_params(1, 1, -12)
    assert lifted.to_param_tuple() == ParamTuple.of(3, 1, 5, -5, 2, 0)
    assert r_of(Q(1), Q(1), Q(-12)) == 13


def test_lift_formal_example():
    lifted = lift_params(1, 2, 3)
    assert r_of(Q(1), Q(2), Q(3)) == Q(-43, 20)
    a, c = lifted.a, lifted.c
    assert a.rational_part() == 3 and Q(17, 20) in a.radicands
    assert c.rational_part() == -1 and Q(-103, 20) in c.radicands
    assert (lifted.p + lifted.q).to_rational() == 2
    assert ((lifted.p - lifted.q) ** 2).to_rational() == 4 * Q(77, 20)


def test_lift_after_t_example():
    lifted = lift_params(1, 0, 1, Stage.AFTER_T, r=1)
    assert lifted.p == 2 and lifted.q == 0


@pytest.mark.parametrize("params", [(2, 1, 2, 1, 2, 1), (2, 1, 0, -1, 1, 0)])
def test_identity_cases_have_zero_coefficients(params):
    assert not any(taylor_coefficients(params, 12)[1:])


def test_second_coefficient_example():
    coeffs = taylor_coefficients((1, 0, 1, 0, 2, 0), 2)
    assert coeffs == [1, 0, Q(-1, 2)]
    assert coeffs[2] == coefficient_formula(2).evaluate(dict(zip("abcdpq", map(Q, (1, 0, 1, 0, 2, 0)))))


def test_series_matches_numeric_oracle():
    params = (Q(5, 2), Q(-1, 3), Q(1, 2), 2, Q(3, 2), Q(-2, 3))
    exact = taylor_coefficients(params, 8)
    with mpmath.workprec(600):
        approx = taylor_numeric(params, 8)
        for e, a in zip(exact, approx):
            assert abs(mpmath.mpf(e.numerator) / e.denominator - a) < mpmath.mpf(10) ** -100


def test_equal_parameter_branches_match_numeric_oracle():
    params = (1, 1, Q(-1, 2), Q(-1, 2), Q(1, 3), Q(1, 3))
    exact = taylor_coefficients(params, 6)
    with mpmath.workprec(600):
        approx = taylor_numeric(params, 6)
        assert all(abs(mpmath.mpf(e.numerator) / e.denominator - a) < mpmath.mpf(10) ** -100
                   for e, a in zip(exact, approx))


def test_check_formula_c2():
    assert check_formula(2, trials=20).ok
    assert check_formula(2, mode="exhaustive", degree_bound=2).ok


def test_c6_at_family_v_point():
    point = {"w": Q(1), "v": Q(1), "r": Q(13), "s": Q(-12)}
    assert coefficient_formula(6).evaluate(point) == 0
    coeffs = taylor_coefficients(lift_params(1, 1, -12, Stage.AFTER_T, r=13), 6)
    assert coeffs[6] == 0


def test_c8_at_formal_point_matches_bigfloat():
    w, v, s = Q(1), Q(2), Q(3)
    printed = coefficient_formula(8).evaluate({"w": w, "v": v, "s": s})
    assert taylor_coefficients(lift_params(w, v, s), 8)[8] == printed
    r = r_of(w, v, s)
    t = r + v * s / w
    with mpmath.workprec(512):
        def root(x):
            return mpmath.sqrt(mpmath.mpc(mpmath.mpf(x.numerator) / x.denominator))
        ra, rc, rp = root(r + s), root(r - s), root(t)
        W, V = mpmath.mpf(1), mpmath.mpf(2)
        params = (W + V + ra, W + V - ra, W - V + rc, W - V - rc, W + rp, W - rp)
        c8 = taylor_numeric(params, 8, prec=512)[8]
        value = mpmath.mpf(printed.numerator) / printed.denominator
        assert abs(c8 - value) <= abs(value) * mpmath.mpf(10) ** -100


def test_refuted_verdict_carries_witness():
    v = check_formula(10, trials=5)
    assert v.status == "refuted"
    assert set(v.witness) == {"point", "series", "formula"}
    assert v.details["constant_ratio"] == "-1"


@pytest.mark.parametrize("u,v", [(1, Q(1, 2)), (2, 1), (1, 0)])
def test_sufficiency_identity(u, v):
    assert sufficiency_series_check(u, v, 20).ok


def test_series_invariance_check_reports_first_failure():
    v = series_invariance_check((1, 0, 1, 0, 2, 0), 6)
    assert not v.ok and v.witness["k"] == 2


def test_order_guard():
    with pytest.raises(ValueError):
        taylor_series((1, 0, 1, 0, 1, 0), 1)


def test_sample_points_are_seeded():
    a = [sample_point(Stage.AFTER_R, random.Random(7)) for _ in range(3)]
    b = [sample_point(Stage.AFTER_R, random.Random(7)) for _ in range(3)]
    assert a == b


# -- evenness and rationality --------------------------------------------------

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)


@settings(max_examples=40, deadline=None)
@given(st.tuples(*[rationals] * 6))
def test_odd_coefficients_vanish(params):
    series = taylor_series(params, 11)
    assert all(series[k] == 0 for k in range(1, 12, 2))
    assert series[0] == 1


@settings(max_examples=15, deadline=None)
@given(st.fractions(min_value=-20, max_value=20, max_denominator=9).filter(bool),
       st.fractions(min_value=-20, max_value=20, max_denominator=9).filter(bool),
       st.fractions(min_value=-20, max_value=20, max_denominator=9))
def test_tower_coefficients_are_rational(w, v, s):
    if v in (w, -w):
        return
    series = taylor_series(lift_params(w, v, s), 12)
    for c in series.coeffs:
        if isinstance(c, TowerElement):
            assert c.is_rational()
