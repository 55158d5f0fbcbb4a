import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gini_invariance.classify import (
    COROLLARY_TAGS,
    THEOREM_TAGS,
    MSFamily,
    SolutionFamily,
    classify_invariance,
    classify_matkowski_suto,
    lemma_normalized,
    sample_family,
)
from gini_invariance.gini import ParamTuple


def tags(fams):
    return {f.tag for f in fams}


def test_invariance_examples():
    assert classify_invariance(ParamTuple.of(3, 1, 5, -5, 2, 0)) == {SolutionFamily("V", (("w", 1),))}
    assert classify_invariance(ParamTuple.of(1, -1, 2, -2, 3, -3)) == {SolutionFamily("I")}
    origin = classify_invariance(ParamTuple.of(0, 0, 0, 0, 0, 0))
    assert tags(origin) == set(THEOREM_TAGS)
    assert SolutionFamily("IV", (("u", 0), ("v", 0))) in origin
    assert SolutionFamily("VI", (("w", 0),)) in origin


def test_family_iv_with_zero_u_also_reports_iii():
    t = sample_family("IV", {"u": 0, "v": 2})
    assert {"III", "IV"} <= tags(classify_invariance(t))


def test_non_family():
    assert classify_invariance(ParamTuple.of(1, 0, 1, 0, 2, 0)) == set()


def test_matkowski_suto_examples():
    assert classify_matkowski_suto(2, 1, 0, -1) == {MSFamily("ii", (("v", 1),))}
    assert classify_matkowski_suto(Q(3, 2), Q(1, 2), 1, -1) == {MSFamily("iii")}
    assert tags(classify_matkowski_suto(-1, 1, Q(1, 2), Q(3, 2))) == {"iv"}
    # {1,0} = {1+v, v} at v = 0, so the literal condition (ii) also holds
    assert tags(classify_matkowski_suto(1, 0, 1, 0)) == {"i", "ii"}
    assert classify_matkowski_suto(2, 0, 1, 0) == set()


def test_sample_family_examples():
    assert sample_family("IV", {"u": 1, "v": Q(1, 2)}) == ParamTuple.of(Q(3, 2), Q(1, 2), Q(1, 2), Q(-1, 2), 1, 0)
    assert sample_family("VI", {"w": 2, "a": 5}) == ParamTuple.of(5, -5, 6, 2, 4, 0)
    assert sample_family("III", {"a": 2, "b": 1, "p": 3}) == ParamTuple.of(2, 1, -1, -2, 3, -3)


def test_sample_family_errors():
    with pytest.raises(ValueError):
        sample_family("IV", {"u": 1})
    with pytest.raises(ValueError):
        sample_family("VII", {})


def test_str_forms():
    assert str(SolutionFamily("V", (("w", Q(1)),))) == "V (w=1)"
    assert str(MSFamily("iii")) == "iii"


def test_lemma_normalized():
    t = lemma_normalized(ParamTuple.of(2, -2, 3, 1, 5, -5))
    assert t == ParamTuple.of(0, 0, 3, 1, 0, 0)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(THEOREM_TAGS), st.integers(min_value=0, max_value=10 ** 6))
def test_round_trip(tag, seed):
    assert tag in tags(classify_invariance(sample_family(tag, seed=seed)))


small = st.fractions(min_value=-3, max_value=3, max_denominator=2)


@settings(max_examples=300, deadline=None)
@given(small, small, small, small)
def test_corollary_is_theorem_at_arithmetic_outer_mean(a, b, c, d):
    ms = bool(classify_matkowski_suto(a, b, c, d))
    th = bool(classify_invariance(ParamTuple.of(a, b, c, d, 1, 0)))
    assert ms == th


def test_corollary_consistency_on_family_members():
    rng = random.Random(3)
    for _ in range(50):
        v = Q(rng.randint(-9, 9), rng.randint(1, 4))
        assert classify_matkowski_suto(1 + v, v, 1 - v, -v)
        assert classify_invariance(ParamTuple.of(1 + v, v, 1 - v, -v, 1, 0))
