from fractions import Fraction as Q

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gini_invariance.exactnum import (
    TowerElement,
    TowerError,
    align,
    bigfloat_context,
    parse_rational,
    rational_sqrt,
    to_bigfloat,
    tower_inv,
    tower_make,
    tower_mul,
)


@pytest.mark.parametrize("text,value", [
    ("3", Q(3)), ("-3", Q(-3)), ("3/4", Q(3, 4)), ("−1/2", Q(-1, 2)),
    (" 6/4 ", Q(3, 2)), ("0", Q(0)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["0.5", "1e3", "", "1/0", "a/b", "1//2"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_rational_sqrt():
    assert rational_sqrt(Q(9, 4)) == Q(3, 2)
    assert rational_sqrt(Q(2)) is None
    assert rational_sqrt(Q(-4)) is None
    assert rational_sqrt(Q(0)) == 0


def test_perfect_square_folds():
    e = tower_make([1], {(): 2, (1,): 1})
    assert e.is_rational() and e.to_rational() == 3
    assert tower_make([Q(9, 4)], {(1,): 1}).to_rational() == Q(3, 2)


def test_lifted_radicand_keeps_rational_part():
    e = tower_make([Q(17, 20)], {(): 3, (1,): 1})
    assert len(e.coords) == 2
    assert e.rational_part() == 3
    assert not e.is_rational()


def test_negative_radicand_is_formal():
    r = TowerElement.sqrt(Q(-103, 20))
    assert (r * r).to_rational() == Q(-103, 20)


def test_zero_radicand_folds_to_zero():
    assert tower_make([0], {(1,): 5}) == 0


def test_dependent_radicands_fold():
    # sqrt(8) = 2 sqrt(2) and sqrt(2)*sqrt(3) = sqrt(6)
    e = tower_make([2, 8], {(1,): 1, (2,): 1})
    assert e.radicands == (Q(2),)
    assert e.coord_map() == {(1,): 3}
    f = tower_make([2, 3, 6], {(1, 2): 1, (3,): -1})
    assert f == 0


def test_conjugate_product():
    s2 = TowerElement.sqrt(2)
    assert ((1 + s2) * (1 - s2)).to_rational() == -1


def test_basis_product():
    p = TowerElement.sqrt(2) * TowerElement.sqrt(3)
    assert p.coord_map() == {(1, 2): 1}


def test_conjugate_sum_is_rational():
    w, t = Q(1, 2), Q(1, 4)
    root = TowerElement.sqrt(t)
    assert ((w + root) + (w - root)).to_rational() == 1


def test_inverse_examples():
    assert tower_inv(TowerElement.rational(2)).to_rational() == Q(1, 2)
    s2 = TowerElement.sqrt(2)
    assert tower_inv(1 + s2) == s2 - 1
    assert tower_inv(2 * TowerElement.sqrt(Q(1, 4))).to_rational() == 1
    with pytest.raises(ZeroDivisionError):
        tower_inv(TowerElement.rational(0))


def test_mismatched_radicands_rejected_by_raw_multiply():
    with pytest.raises(TowerError):
        tower_mul(TowerElement.sqrt(2), TowerElement.sqrt(3))


def test_operators_align_automatically():
    a, b = TowerElement.sqrt(2), TowerElement.sqrt(3)
    x, y = align(a, b)
    assert x.radicands == y.radicands == (Q(2), Q(3))
    assert (a * b) * (a * b) == 6


def test_too_many_radicals():
    with pytest.raises(TowerError):
        tower_make([2, 3, 5, 7], {(): 1})
    with pytest.raises(TowerError):
        _ = sum((TowerElement.sqrt(p) for p in (2, 3, 5, 7)), TowerElement.rational(0))


def test_to_rational_refuses_radicals():
    with pytest.raises(TowerError):
        TowerElement.sqrt(2).to_rational()


def test_bigfloat_conversion():
    with bigfloat_context(256):
        x = to_bigfloat(Q(1, 3))
        assert abs(x * 3 - 1) < mpmath.mpf(2) ** -250
    with pytest.raises(TypeError):
        to_bigfloat(TowerElement.sqrt(2))


# -- field axioms ------------------------------------------------------------

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
RADICANDS = (Q(2), Q(-3), Q(5, 7))


@st.composite
def elements(draw):
    coords = [draw(rationals) for _ in range(8)]
    return tower_make(RADICANDS, coords)


@settings(max_examples=60, deadline=None)
@given(elements(), elements(), elements())
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0


@settings(max_examples=60, deadline=None)
@given(elements())
def test_inverse_axiom(x):
    if not x:
        return
    assert x * tower_inv(x) == 1
    assert x / x == 1


@settings(max_examples=40, deadline=None)
@given(elements(), st.integers(min_value=0, max_value=5))
def test_integer_powers(x, n):
    expected = TowerElement.rational(1)
    for _ in range(n):
        expected = expected * x
    assert x ** n == expected
