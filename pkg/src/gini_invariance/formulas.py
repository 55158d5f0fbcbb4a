"""Published closed forms of the Taylor coefficients and elimination data.

Everything here is data: the coefficient formulas C_2 .. C_12 in the
reduced coordinates, the cofactors P_8, P_10, P_12, and the integer
coefficients of the eliminants in z = w/v.  The formulas are checked
against the series engine by exact evaluation (see :mod:`.taylor`), never
re-derived symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .poly import MultiPoly, parse_poly

__all__ = [
    "Stage",
    "CoefficientFormula",
    "coefficient_formula",
    "R_EXPR",
    "r_of",
    "P_TEXT",
    "cofactor",
    "COFACTOR_SCALE",
    "R810_CONST",
    "P810_COEFFS",
    "P812_COEFFS",
]


class Stage:
    """Coordinates in which a formula is stated.

    RAW:      the six parameters a, b, c, d, p, q.
    REDUCED:  w, v, t, r, s with p + q = 2w (C_2 = 0 imposed).
    AFTER_T:  w, v, r, s with t = r + v s / w.
    AFTER_R:  w, v, s with additionally r = R(w, v, s).
    """

    RAW = "raw"
    REDUCED = "reduced"
    AFTER_T = "after_t"
    AFTER_R = "after_r"

    VARIABLES = {
        RAW: ("a", "b", "c", "d", "p", "q"),
        REDUCED: ("w", "v", "t", "r", "s"),
        AFTER_T: ("w", "v", "r", "s"),
        AFTER_R: ("w", "v", "s"),
    }


@dataclass(frozen=True)
class CoefficientFormula:
    """C_k = numerator / denominator in the variables of ``stage``."""

    k: int
    stage: str
    numerator: MultiPoly
    denominator: MultiPoly

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        den = self.denominator.evaluate(point)
        if den == 0:
            raise ZeroDivisionError(f"C_{self.k} denominator vanishes at {dict(point)}")
        return Fraction(self.numerator.evaluate(point)) / den


# r = R(w, v, s) solves C_6 = 0 for r
R_NUM = "15*w^4*v^2 - 3*w^2*s^2 + 3*v^2*s^2 - 5*w^3*v*s - 10*w*v^3*s"
R_DEN = "15*w^2*v^2"
R_EXPR = (R_NUM, R_DEN)

P_TEXT = {
    8: (
        "2100*w^3*v^5 - 3850*w^2*v^4*s + 4200*w^5*v^3 - 255*w*v^3*s^2 + 153*v^2*s^3"
        " - 9245*w^4*v^2*s - 7395*w^3*v*s^2 - 153*w^2*s^3"
    ),
    10: (
        "28500*w^5*v^9 - 59675*w^4*v^8*s + 34470*w^3*v^7*s^2 + 20100*w^7*v^7"
        " - 299575*w^6*v^6*s - 4260*w^2*v^6*s^3 - 73200*w^5*v^5*s^2 - 930*w*v^5*s^4"
        " + 66600*w^9*v^5 + 4805*w^4*v^4*s^3 - 286500*w^8*v^4*s + 279*v^4*s^5"
        " - 169020*w^7*v^3*s^2 - 16740*w^3*v^3*s^4 - 558*w^2*v^2*s^5"
        " + 45955*w^6*v^2*s^3 + 17670*w^5*v*s^4 + 279*w^4*s^5"
    ),
    12: (
        "-3272692500*w^10*v^8*s + 22181100*w^3*v^9*s^4 - 54365475*w^6*v^8*s^3"
        " - 25317375*w^8*v^6*s^3 + 335826*w^4*v^2*s^7 - 559710*w*v^7*s^6"
        " - 215221875*w^6*v^12*s + 22875570*w^6*v^4*s^5 + 16977870*w^5*v^3*s^6"
        " - 7649370*w^3*v^5*s^6 - 1246797750*w^8*v^10*s - 34684335*w^8*v^2*s^5"
        " - 777170000*w^11*v^5*s^2 - 159926550*w^7*v^5*s^4 - 335826*w^2*v^4*s^7"
        " + 641072375*w^10*v^4*s^3 + 270963000*w^5*v^11*s^2 - 1046615000*w^9*v^7*s^2"
        " + 11659365*w^4*v^6*s^5 - 133190250*w^5*v^7*s^4 - 1967022000*w^12*v^6*s"
        " + 177650700*w^9*v^3*s^4 - 8768790*w^7*v*s^6 + 385915750*w^7*v^9*s^2"
        " + 149400*w^2*v^8*s^5 - 98002025*w^4*v^10*s^3 + 76725000*w^7*v^13"
        " - 57172500*w^9*v^11 - 478665000*w^11*v^9 + 188100000*w^13*v^7"
        " - 111942*w^6*s^7 + 111942*v^6*s^7"
    ),
}

# C_k = COFACTOR_SCALE[k] * (v - w)(v + w) s * P_k
COFACTOR_SCALE = {
    8: (Fraction(1, 70875), "w^3*v^2"),
    10: (Fraction(2, 1063125), "w^5*v^4"),
    12: (Fraction(2, 2631234375), "w^7*v^6"),
}

# resultant(P_8, P_10, s) = R810_CONST * w^15 v^15 (v - w)^2 (v + w)^2 * (degree-18 form)
R810_CONST = 136687500

# coefficients of z^0, z^2, ..., z^18 in P_{8,10}(z)
P810_COEFFS = (
    1178440166794705680,
    -34849488132334981400,
    27095657773476976150,
    2157163953185024831539,
    19335728720363587723895,
    77098340762854904758838,
    135541716064734053550290,
    52974528518488497499557,
    2100034048587009260985,
    44498612407766474466,
)

# coefficients of z^0, z^2, ..., z^26 in P_{8,12}(z)
P812_COEFFS = (
    8196063700595383871701091232,
    -179090512353635410423157248720,
    -2262574745604112043731392907114,
    11198535065282946302316347517923,
    369075355861065090753396085824722,
    3321203212966063219800014204539694,
    17018221168597358591328346358640128,
    55161742271395394206883716537690208,
    113024609788553283598449985201081964,
    136472191224999845881431378284988722,
    83840233563357841801204648333566258,
    19391722782753178903737004919064981,
    1234978033803167388960240130106010,
    95711050739605210548400442203992,
)

_WVS = ("w", "v", "s")


@lru_cache(maxsize=None)
def cofactor(k: int) -> MultiPoly:
    """The printed polynomial P_k in (w, v, s), k in {8, 10, 12}."""
    if k not in P_TEXT:
        raise ValueError(f"no printed cofactor for k={k}")
    return parse_poly(P_TEXT[k], _WVS)


def r_of(w: Fraction, v: Fraction, s: Fraction) -> Fraction:
    """R(w, v, s): the value of r forced by C_6 = 0 (needs w, v != 0)."""
    point = {"w": w, "v": v, "s": s}
    num = parse_poly(R_NUM, _WVS).evaluate(point)
    den = parse_poly(R_DEN, _WVS).evaluate(point)
    return Fraction(num) / den


@lru_cache(maxsize=None)
def coefficient_formula(k: int) -> CoefficientFormula:
    """Printed C_k together with the coordinates it is stated in."""
    if k == 2:
        vars_ = Stage.VARIABLES[Stage.RAW]
        num = parse_poly("a/4 + b/4 + c/4 + d/4 - p/2 - q/2", vars_)
        return CoefficientFormula(2, Stage.RAW, num, MultiPoly.const(1, vars_))
    if k == 4:
        vars_ = Stage.VARIABLES[Stage.REDUCED]
        num = parse_poly("t*w/3 - v*s/3 - w*r/3", vars_)
        return CoefficientFormula(4, Stage.REDUCED, num, MultiPoly.const(1, vars_))
    if k == 6:
        vars_ = Stage.VARIABLES[Stage.AFTER_T]
        num = parse_poly(
            "-2*(-3*w^2*s^2 + 3*v^2*s^2 - 15*w^2*r*v^2 - 5*w^3*s*v - 10*v^3*s*w + 15*w^4*v^2)",
            vars_,
        )
        return CoefficientFormula(6, Stage.AFTER_T, num, parse_poly("45*w", vars_))
    if k in P_TEXT:
        scale, den_text = COFACTOR_SCALE[k]
        num = parse_poly("(v - w)*(v + w)*s", _WVS) * cofactor(k) * scale
        return CoefficientFormula(k, Stage.AFTER_R, num, parse_poly(den_text, _WVS))
    raise ValueError(f"no printed formula for C_{k}")
