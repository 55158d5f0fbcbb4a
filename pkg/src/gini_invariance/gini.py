"""Two-variable Gini means evaluated in high precision.

Parameters are exact rationals; arguments are :mod:`mpmath` floats.  All
evaluation happens in the log domain, so huge exponents and extreme
argument ratios do not overflow.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from .exactnum import DEFAULT_PRECISION, parse_rational, to_bigfloat

__all__ = [
    "GiniParams",
    "ParamTuple",
    "ARITHMETIC",
    "GEOMETRIC",
    "HARMONIC",
    "gini_eval",
    "gini_eval_direct",
    "means_equal",
    "GaussResult",
    "ConvergenceError",
    "gauss_compose",
    "default_grid",
    "invariance_residual",
    "matkowski_suto_residual",
    "agm_quadrature",
]

GUARD_BITS = 32


def _q(x) -> Fraction:
    return parse_rational(x) if isinstance(x, str) else Fraction(x)


@dataclass(frozen=True)
class GiniParams:
    """Parameters (p, q) of G_{p,q}, stored with p >= q."""

    p: Fraction
    q: Fraction

    def __post_init__(self):
        p, q = _q(self.p), _q(self.q)
        if p < q:
            p, q = q, p
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def parse(cls, text: str) -> "GiniParams":
        p, q = text.split(",")
        return cls(parse_rational(p), parse_rational(q))

    def __str__(self):
        return f"G[{self.p},{self.q}]"


ARITHMETIC = GiniParams(1, 0)
GEOMETRIC = GiniParams(0, 0)
HARMONIC = GiniParams(0, -1)


@dataclass(frozen=True)
class ParamTuple:
    """The six parameters of G_{p,q}(G_{a,b}, G_{c,d}) = G_{p,q}.

    Each pair is stored in descending order, so field equality is multiset
    equality on {a,b}, {c,d}, {p,q}.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    p: Fraction
    q: Fraction

    def __post_init__(self):
        vals = [_q(getattr(self, f)) for f in "abcdpq"]
        for i in range(0, 6, 2):
            if vals[i] < vals[i + 1]:
                vals[i], vals[i + 1] = vals[i + 1], vals[i]
        for f, v in zip("abcdpq", vals):
            object.__setattr__(self, f, v)

    @classmethod
    def of(cls, *values) -> "ParamTuple":
        if len(values) == 1:
            values = tuple(values[0])
        if len(values) != 6:
            raise ValueError(f"expected 6 parameters, got {len(values)}")
        return cls(*(_q(v) for v in values))

    def as_tuple(self) -> tuple[Fraction, ...]:
        return (self.a, self.b, self.c, self.d, self.p, self.q)

    @property
    def first(self) -> GiniParams:
        return GiniParams(self.a, self.b)

    @property
    def second(self) -> GiniParams:
        return GiniParams(self.c, self.d)

    @property
    def outer(self) -> GiniParams:
        return GiniParams(self.p, self.q)

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.as_tuple()) + ")"


def _lse(u, v):
    m = max(u, v)
    return m + mpmath.log1p(mpmath.exp(-abs(u - v)))


def gini_eval(g: GiniParams, x, y, prec: int | None = None):
    """G_{p,q}(x, y) for x, y > 0, in the log domain.

    ``prec`` defaults to the current mpmath precision; the computation runs
    with a few guard bits and is rounded back.
    """
    bits = prec if prec is not None else mpmath.mp.prec
    with mpmath.workprec(bits + GUARD_BITS):
        x, y = to_bigfloat(x), to_bigfloat(y)
        if x <= 0 or y <= 0:
            raise ValueError("Gini means need positive arguments")
        lx, ly = mpmath.log(x), mpmath.log(y)
        p, q = to_bigfloat(g.p), to_bigfloat(g.q)
        if g.p != g.q:
            val = mpmath.exp((_lse(p * lx, p * ly) - _lse(q * lx, q * ly)) / (p - q))
        else:
            # weight of x in the exponent: x^p / (x^p + y^p)
            wx = 1 / (1 + mpmath.exp(p * (ly - lx)))
            val = mpmath.exp(wx * lx + (1 - wx) * ly)
    with mpmath.workprec(bits):
        return +val


def gini_eval_direct(g: GiniParams, x, y):
    """Textbook formula without log-domain stabilization (test oracle)."""
    x, y = to_bigfloat(x), to_bigfloat(y)
    p, q = to_bigfloat(g.p), to_bigfloat(g.q)
    if g.p != g.q:
        return ((x ** p + y ** p) / (x ** q + y ** q)) ** (1 / (p - q))
    return mpmath.exp((x ** p * mpmath.log(x) + y ** p * mpmath.log(y)) / (x ** p + y ** p))


def means_equal(a, b, c, d) -> bool:
    """Whether G_{a,b} and G_{c,d} coincide as functions.

    True iff both are the geometric mean (a+b = c+d = 0) or {a,b} = {c,d}.
    """
    a, b, c, d = (_q(t) for t in (a, b, c, d))
    if a + b == 0 and c + d == 0:
        return True
    return sorted((a, b)) == sorted((c, d))


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class GaussResult:
    value: mpmath.mpf
    iterations: int
    brackets: tuple


def gauss_compose(M: GiniParams, N: GiniParams, x, y, reltol=None,
                  prec: int = DEFAULT_PRECISION, max_iter: int = 10000,
                  keep_brackets: bool = False) -> GaussResult:
    """Common limit of x_{n+1} = M(x_n, y_n), y_{n+1} = N(x_n, y_n).

    Stops once |x_n - y_n| <= reltol * max(x_n, y_n) and returns the
    midpoint.  ``reltol`` defaults to 2^-(prec - 16).
    """
    with mpmath.workprec(prec):
        x, y = to_bigfloat(x), to_bigfloat(y)
        if x <= 0 or y <= 0:
            raise ValueError("Gauss iteration needs positive starting values")
        tol = mpmath.mpf(2) ** -(prec - 16) if reltol is None else mpmath.mpf(reltol)
        if tol <= 0:
            raise ValueError("reltol must be positive")
        brackets = []
        for n in range(max_iter + 1):
            if keep_brackets:
                brackets.append((min(x, y), max(x, y)))
            if abs(x - y) <= tol * max(x, y):
                return GaussResult((x + y) / 2, n, tuple(brackets))
            x, y = gini_eval(M, x, y, prec), gini_eval(N, x, y, prec)
    raise ConvergenceError(f"no convergence within {max_iter} iterations")


def default_grid(prec: int = DEFAULT_PRECISION, seed: int = 2009, n_random: int = 16) -> list:
    """(e^h, e^-h) for h in {1/10, 1/2, 1, 2, 5} plus seeded random pairs.

    Random pairs have ratio up to 10^4 and either order.
    """
    rng = random.Random(seed)
    with mpmath.workprec(prec):
        pts = []
        for h in (Fraction(1, 10), Fraction(1, 2), 1, 2, 5):
            e = mpmath.exp(to_bigfloat(Fraction(h)))
            pts.append((e, 1 / e))
        for _ in range(n_random):
            base = Fraction(rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 4))
            ratio = Fraction(rng.randint(10 ** 6, 10 ** 10), 10 ** 6)
            x, y = to_bigfloat(base), to_bigfloat(base * ratio)
            pts.append((x, y) if rng.random() < 0.5 else (y, x))
    return pts


def invariance_residual(t: ParamTuple, grid: Sequence | None = None,
                        prec: int = DEFAULT_PRECISION):
    """sup over the grid of |G_pq(G_ab, G_cd) / G_pq - 1|."""
    grid = default_grid(prec) if grid is None else grid
    if not grid:
        raise ValueError("empty grid")
    M, N, K = t.first, t.second, t.outer
    worst = mpmath.mpf(0)
    with mpmath.workprec(prec):
        for x, y in grid:
            lhs = gini_eval(K, gini_eval(M, x, y, prec), gini_eval(N, x, y, prec), prec)
            rhs = gini_eval(K, x, y, prec)
            worst = max(worst, abs(lhs / rhs - 1))
    return worst


def matkowski_suto_residual(a, b, c, d, grid: Sequence | None = None,
                            prec: int = DEFAULT_PRECISION):
    """sup over the grid of |G_ab + G_cd - (x + y)| / (x + y)."""
    grid = default_grid(prec) if grid is None else grid
    M, N = GiniParams(a, b), GiniParams(c, d)
    worst = mpmath.mpf(0)
    with mpmath.workprec(prec):
        for x, y in grid:
            s = x + y
            worst = max(worst, abs(gini_eval(M, x, y, prec) + gini_eval(N, x, y, prec) - s) / s)
    return worst


def agm_quadrature(x, y, prec: int = DEFAULT_PRECISION):
    """(2/pi * int_0^{pi/2} dt / sqrt(x^2 cos^2 t + y^2 sin^2 t))^-1."""
    with mpmath.workprec(prec):
        x, y = to_bigfloat(x), to_bigfloat(y)
        integral = mpmath.quad(
            lambda t: 1 / mpmath.sqrt(x ** 2 * mpmath.cos(t) ** 2 + y ** 2 * mpmath.sin(t) ** 2),
            [0, mpmath.pi / 2],
        )
        return 1 / (2 / mpmath.pi * integral)
