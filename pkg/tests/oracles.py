"""Independent floating-point oracles: textbook formulas, no exact series code."""

from fractions import Fraction

import mpmath


def _num(x):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpmathify(x)


def section_mean(a, b, x):
    """G_{a,b}(e^x, e^-x); complex parameters allowed."""
    if a == b:
        return mpmath.exp(x * mpmath.tanh(a * x))
    return (mpmath.cosh(a * x) / mpmath.cosh(b * x)) ** (1 / (a - b))


def outer_mean(p, q, u, v):
    if p == q:
        return mpmath.exp((u ** p * mpmath.log(u) + v ** p * mpmath.log(v)) / (u ** p + v ** p))
    return ((u ** p + v ** p) / (u ** q + v ** q)) ** (1 / (p - q))


def taylor_numeric(params, order, prec=600):
    """Taylor coefficients of F at 0 by high-precision numerical differentiation."""
    with mpmath.workprec(prec):
        a, b, c, d, p, q = (_num(v) for v in params)

        def f(x):
            return outer_mean(p, q, section_mean(a, b, x), section_mean(c, d, x)) / section_mean(p, q, x)

        return mpmath.taylor(f, 0, order)
