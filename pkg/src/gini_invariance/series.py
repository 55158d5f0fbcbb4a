"""Truncated univariate power series over an exact or big-float scalar ring.

A :class:`PowerSeries` of order ``N`` stores ``c_0 .. c_N`` and is known
modulo ``x^(N+1)``.  Coefficients may be :class:`~fractions.Fraction`,
:class:`~gini_invariance.exactnum.TowerElement`, or :class:`mpmath.mpf`;
exact and floating coefficients are never mixed.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

import mpmath

__all__ = [
    "PowerSeries",
    "SeriesError",
    "series_add",
    "series_mul",
    "series_reciprocal",
    "series_exp",
    "series_log",
    "series_pow",
    "cosh_series",
    "sinh_series",
    "tanh_series",
    "DEFAULT_ORDER",
]

DEFAULT_ORDER = 13


class SeriesError(ValueError):
    """Precondition violation (bad constant term, mixed rings)."""


def _is_float(x) -> bool:
    return isinstance(x, (mpmath.mpf, float))


class PowerSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if not coeffs:
            raise SeriesError("a series needs at least the constant term")
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def zero(self):
        c = self.coeffs[0]
        return c - c

    @property
    def one(self):
        return self.zero + 1

    @classmethod
    def constant(cls, c, order: int) -> "PowerSeries":
        zero = c - c
        return cls([c] + [zero] * order)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def _check(self, other: "PowerSeries") -> int:
        if _is_float(self.coeffs[0]) != _is_float(other.coeffs[0]):
            raise SeriesError("cannot mix exact and floating-point series")
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries((self.coeffs[0] + other,) + self.coeffs[1:])
        return series_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return series_mul(self, other)
        return PowerSeries([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return series_mul(self, series_reciprocal(other))
        return PowerSeries([c / other for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(a == b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1]))

    def __repr__(self):
        return f"PowerSeries({list(self.coeffs)!r})"

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self.coeffs[: order + 1])


def series_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = a._check(b)
    return PowerSeries([x + y for x, y in zip(a.coeffs[: n + 1], b.coeffs[: n + 1])])


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Truncated Cauchy product; zero coefficients are skipped."""
    n = a._check(b)
    zero = a.zero
    out = [zero] * (n + 1)
    bnz = [(j, y) for j, y in enumerate(b.coeffs[: n + 1]) if y]
    for i, x in enumerate(a.coeffs[: n + 1]):
        if not x:
            continue
        for j, y in bnz:
            if i + j > n:
                break
            out[i + j] = out[i + j] + x * y
    return PowerSeries(out)


def series_reciprocal(a: PowerSeries) -> PowerSeries:
    c0 = a.coeffs[0]
    if not c0:
        raise SeriesError("reciprocal of a series with zero constant term")
    inv0 = 1 / c0
    n = a.order
    out = [inv0]
    for k in range(1, n + 1):
        acc = a.zero
        for j in range(1, k + 1):
            if a.coeffs[j]:
                acc = acc + a.coeffs[j] * out[k - j]
        out.append(-acc * inv0)
    return PowerSeries(out)


def series_exp(a: PowerSeries) -> PowerSeries:
    """exp(a) for a with zero constant term, via n e_n = sum k a_k e_{n-k}."""
    if a.coeffs[0]:
        raise SeriesError("exp needs a zero constant term")
    n = a.order
    out = [a.one]
    nz = [(k, k * c) for k, c in enumerate(a.coeffs) if k and c]
    for m in range(1, n + 1):
        acc = a.zero
        for k, kc in nz:
            if k > m:
                break
            acc = acc + kc * out[m - k]
        out.append(acc / m)
    return PowerSeries(out)


def series_log(a: PowerSeries) -> PowerSeries:
    """log(a) for a with constant term 1, via l' = a'/a."""
    if a.coeffs[0] != 1:
        raise SeriesError("log needs constant term 1")
    n = a.order
    out = [a.zero]
    for m in range(1, n + 1):
        acc = m * a.coeffs[m]
        for k in range(1, m):
            if out[k] and a.coeffs[m - k]:
                acc = acc - k * out[k] * a.coeffs[m - k]
        out.append(acc / m)
    return PowerSeries(out)


def series_pow(a: PowerSeries, alpha) -> PowerSeries:
    """a^alpha = exp(alpha * log a); a must have constant term 1."""
    if a.coeffs[0] != 1:
        raise SeriesError("pow needs constant term 1")
    return series_exp(series_log(a) * alpha)


def _even_odd(k, order: int, parity: int) -> PowerSeries:
    zero = k - k
    out = []
    power = zero + 1
    for m in range(order + 1):
        if m % 2 == parity:
            out.append(power / factorial(m))
        else:
            out.append(zero)
        power = power * k
    return PowerSeries(out)


def cosh_series(k, order: int = DEFAULT_ORDER) -> PowerSeries:
    """cosh(k x) = sum k^(2m) x^(2m) / (2m)!."""
    if isinstance(k, int):
        k = Fraction(k)
    return _even_odd(k, order, 0)


def sinh_series(k, order: int = DEFAULT_ORDER) -> PowerSeries:
    if isinstance(k, int):
        k = Fraction(k)
    return _even_odd(k, order, 1)


def tanh_series(k, order: int = DEFAULT_ORDER) -> PowerSeries:
    """tanh(k x) as sinh(k x) / cosh(k x)."""
    return sinh_series(k, order) / cosh_series(k, order)
