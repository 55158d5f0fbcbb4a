from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gini_invariance.poly import (
    InexactDivisionError,
    MultiPoly,
    divexact,
    parse_poly,
    primitive_part,
    resultant,
    substitute,
    univariate_gcd,
    univariate_resultant,
    weighted_degree,
    term_weighted_degrees,
)

WVS = ("w", "v", "s")
WEIGHTS = {"w": 1, "v": 1, "s": 2}


def P(text, variables=None):
    return parse_poly(text, variables)


def test_parse_and_print_round_trip():
    f = P("2*w^3*v^5 - 153*v^2*s^3 + 1/2", WVS)
    assert P(f.to_text(), WVS) == f
    assert f.evaluate({"w": 1, "v": 1, "s": 1}) == 2 - 153 + Q(1, 2)


def test_parse_errors():
    for bad in ("w^", "(w + v", "w / v", "2 w"):
        with pytest.raises(ValueError):
            P(bad, WVS)


def test_weighted_degree_examples():
    assert weighted_degree(P("w^3*v^5", WVS), WEIGHTS) == 8
    assert weighted_degree(P("v^2*s^3", WVS), WEIGHTS) == 8
    f = P("w + s", WVS)
    assert weighted_degree(f, WEIGHTS) is None
    assert term_weighted_degrees(f, WEIGHTS) == {1, 2}
    with pytest.raises(ValueError):
        weighted_degree(MultiPoly.const(0, WVS), WEIGHTS)


def test_substitute_examples():
    zv = P("z*v", ("z", "v"))
    out = substitute(P("w^2*v", ("w", "v")), "w", zv)
    assert out == P("z^2*v^3", ("z", "v"))
    assert substitute(P("w", ("w",)), "w", MultiPoly.const(0)).is_zero()


def test_divexact_examples():
    assert divexact(P("w^2 - v^2", ("w", "v")), P("w - v", ("w", "v"))) == P("w + v", ("w", "v"))
    with pytest.raises(InexactDivisionError) as info:
        divexact(P("w^2 + 1", ("w",)), P("w", ("w",)))
    assert info.value.remainder == MultiPoly.const(1, ("w",))


def test_primitive_part():
    c, f = primitive_part(P("-6*x^2 + 4*x - 2", ("x",)))
    assert c == -2 and f == P("3*x^2 - 2*x + 1", ("x",))
    c, f = primitive_part(P("x/2 + 1/3", ("x",)))
    assert c == Q(1, 6) and f == P("3*x + 2", ("x",))


@pytest.mark.parametrize("method", ["bareiss", "interp", "both"])
def test_resultant_small(method):
    x = ("x",)
    assert resultant(P("x - 2", x), P("x^2 - 1", x), "x", method).constant_value() == 3
    assert resultant(P("x^2 + 1", x), P("x^2 - 1", x), "x", method).constant_value() == 4


def test_resultant_rejects_constant():
    with pytest.raises(ValueError):
        resultant(P("3", ("x",)), P("x + 1", ("x",)), "x")


def test_resultant_eliminates_variable():
    # common root x = y: Res_x(x - y, x^2 - 4) = y^2 - 4
    xy = ("x", "y")
    r = resultant(P("x - y", xy), P("x^2 - 4", xy), "x", method="both")
    assert r.with_vars(("y",)) == P("y^2 - 4", ("y",))


def test_univariate_resultant_examples():
    z = ("z",)
    assert univariate_resultant(P("z - 1", z), P("z + 1", z)) == 2
    assert univariate_resultant(P("z^2 - 1", z), P("z^2 - 2*z + 1", z)) == 0


def test_univariate_gcd():
    z = ("z",)
    g = univariate_gcd(P("z^2 - 1", z), P("z^2 - 2*z + 1", z))
    assert g == P("z - 1", z)
    assert univariate_gcd(P("z - 1", z), P("z + 1", z)).is_constant()


# -- properties --------------------------------------------------------------

small = st.integers(min_value=-5, max_value=5)


@st.composite
def polys_xy(draw, max_deg=3):
    terms = {}
    for _ in range(draw(st.integers(min_value=1, max_value=5))):
        e = (draw(st.integers(0, max_deg)), draw(st.integers(0, 2)))
        terms[e] = terms.get(e, 0) + draw(small)
    f = MultiPoly(("x", "y"), {e: Q(c) for e, c in terms.items() if c})
    return f


@settings(max_examples=40, deadline=None)
@given(polys_xy(), polys_xy())
def test_resultant_antisymmetry(f, g):
    m, n = f.degree("x"), g.degree("x")
    if m < 1 or n < 1:
        return
    rf = resultant(f, g, "x")
    rg = resultant(g, f, "x")
    assert rf == rg * (-1) ** (m * n)


@settings(max_examples=25, deadline=None)
@given(polys_xy(), polys_xy())
def test_resultant_algorithms_agree(f, g):
    if f.degree("x") < 1 or g.degree("x") < 1:
        return
    assert resultant(f, g, "x", "bareiss") == resultant(f, g, "x", "interp")


@settings(max_examples=40, deadline=None)
@given(polys_xy(), polys_xy())
def test_product_divides_exactly(f, g):
    if g.is_zero():
        return
    assert divexact(f * g, g) == f


@settings(max_examples=40, deadline=None)
@given(polys_xy(), small, small)
def test_evaluation_is_a_homomorphism(f, x, y):
    g = f * f + f
    pt = {"x": x, "y": y}
    fx = f.evaluate(pt)
    assert g.evaluate(pt) == fx * fx + fx
