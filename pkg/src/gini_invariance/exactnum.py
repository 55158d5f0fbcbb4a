"""Exact scalars: rationals, formal square-root towers, and big floats.

Rationals are plain :class:`fractions.Fraction`.  A :class:`TowerElement`
lives in ``Q(sqrt(d1), sqrt(d2), sqrt(d3))`` where the radicands are
independent modulo rational squares, so the algebra is always a field.
Radicands may be negative; the square roots are then purely formal, which
is harmless because every identity we test is algebraic.

Big floats are :class:`mpmath.mpf` values evaluated under an explicit
working precision (see :func:`bigfloat_context`).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import isqrt
from numbers import Rational
from typing import Iterable, Mapping, Sequence, Union

import mpmath

__all__ = [
    "parse_rational",
    "rational_sqrt",
    "TowerError",
    "TowerElement",
    "tower_make",
    "tower_mul",
    "tower_inv",
    "align",
    "DEFAULT_PRECISION",
    "bigfloat_context",
    "to_bigfloat",
]

MAX_RADICALS = 3
DEFAULT_PRECISION = 256


def parse_rational(text: str) -> Fraction:
    """Parse ``"n/d"`` or an integer literal, rejecting decimals.

    Accepts a leading ASCII minus or the unicode minus sign.
    """
    s = text.strip().replace("−", "-")
    if not s or "." in s or "e" in s.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    num, _, den = s.partition("/")
    try:
        value = Fraction(int(num), int(den)) if den else Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc
    return value


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class TowerError(ValueError):
    """Raised for tower overflow (more than three independent radicals)."""


Scalar = Union["TowerElement", Fraction, int]


def _mask_products(radicands: Sequence[Fraction]) -> list[Fraction]:
    out = []
    for mask in range(1 << len(radicands)):
        prod = Fraction(1)
        for i, d in enumerate(radicands):
            if mask >> i & 1:
                prod *= d
        out.append(prod)
    return out


def _express(radicands: Sequence[Fraction], d: Fraction) -> tuple[Fraction, int] | None:
    """Write sqrt(d) as coef * prod_{i in mask} sqrt(d_i), if possible.

    Uses sqrt(d) = m / prod sqrt(d_i) = m * prod sqrt(d_i) / prod d_i whenever
    d * prod d_i = m^2 with m > 0.
    """
    n = len(radicands)
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            prod = Fraction(1)
            for i in subset:
                prod *= radicands[i]
            m = rational_sqrt(d * prod)
            if m is not None:
                mask = sum(1 << i for i in subset)
                return m / prod, mask
    return None


def _merge(*lists: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Greedy independent basis of the union of radicand lists, sorted."""
    out: list[Fraction] = []
    for d in sorted(set(x for lst in lists for x in lst)):
        if d == 0 or _express(out, d) is not None:
            continue
        out.append(d)
    if len(out) > MAX_RADICALS:
        raise TowerError(f"tower would need {len(out)} radicals (max {MAX_RADICALS})")
    return tuple(out)


class TowerElement:
    """Element of Q adjoined with up to three formal square roots.

    ``coords[mask]`` is the coefficient of ``prod_{i in mask} sqrt(radicands[i])``.
    Instances are immutable; construct through :func:`tower_make` or
    :meth:`TowerElement.rational` / :meth:`TowerElement.sqrt`.
    """

    __slots__ = ("radicands", "coords", "_prods")

    def __init__(self, radicands: tuple[Fraction, ...], coords: tuple[Fraction, ...],
                 _prods: list[Fraction] | None = None):
        self.radicands = radicands
        self.coords = coords
        self._prods = _prods if _prods is not None else _mask_products(radicands)

    # -- constructors -----------------------------------------------------
    @classmethod
    def rational(cls, x, radicands: tuple[Fraction, ...] = (), _prods=None) -> "TowerElement":
        coords = [Fraction(0)] * (1 << len(radicands))
        coords[0] = Fraction(x)
        return cls(radicands, tuple(coords), _prods)

    @classmethod
    def sqrt(cls, d) -> "TowerElement":
        """The formal square root of a rational (folded when possible)."""
        return tower_make([d], {(): 0, (1,): 1})

    # -- inspection -------------------------------------------------------
    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_part(self) -> Fraction:
        return self.coords[0]

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise TowerError(f"element has nonzero radical coordinates: {self}")
        return self.coords[0]

    def coord_map(self) -> dict[tuple[int, ...], Fraction]:
        """Nonzero coordinates keyed by 1-based radical index subsets."""
        out = {}
        for mask, c in enumerate(self.coords):
            if c:
                out[tuple(i + 1 for i in range(len(self.radicands)) if mask >> i & 1)] = c
        return out

    def lift(self, radicands: tuple[Fraction, ...], prods=None) -> "TowerElement":
        """Re-express this element over a larger (aligned) radicand list."""
        if radicands == self.radicands:
            return self
        images = []
        for d in self.radicands:
            e = _express(radicands, d)
            if e is None:
                raise TowerError(f"radicand {d} not expressible in tower {radicands}")
            images.append(e)
        full_prods = prods if prods is not None else _mask_products(radicands)
        coords = [Fraction(0)] * (1 << len(radicands))
        for mask, c in enumerate(self.coords):
            if not c:
                continue
            coef, target = c, 0
            for i, (k, m) in enumerate(images):
                if mask >> i & 1:
                    coef *= k * full_prods[target & m]
                    target ^= m
            coords[target] += coef
        return TowerElement(radicands, tuple(coords), full_prods)

    def conjugate(self, index: int) -> "TowerElement":
        """Flip the sign of sqrt(radicands[index])."""
        bit = 1 << index
        return TowerElement(self.radicands,
                            tuple(-c if m & bit else c for m, c in enumerate(self.coords)),
                            self._prods)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> tuple["TowerElement", "TowerElement"]:
        if isinstance(other, TowerElement):
            if other.radicands == self.radicands:
                return self, other
            rads = _merge(self.radicands, other.radicands)
            prods = _mask_products(rads)
            return self.lift(rads, prods), other.lift(rads, prods)
        if isinstance(other, (int, Rational)):
            return self, TowerElement.rational(other, self.radicands, self._prods)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        x, y = pair
        return TowerElement(x.radicands, tuple(a + b for a, b in zip(x.coords, y.coords)), x._prods)

    __radd__ = __add__

    def __neg__(self):
        return TowerElement(self.radicands, tuple(-c for c in self.coords), self._prods)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        x, y = pair
        return TowerElement(x.radicands, tuple(a - b for a, b in zip(x.coords, y.coords)), x._prods)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            k = Fraction(other)
            return TowerElement(self.radicands, tuple(c * k for c in self.coords), self._prods)
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        return tower_mul(*pair)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("division of tower element by zero")
            k = 1 / Fraction(other)
            return TowerElement(self.radicands, tuple(c * k for c in self.coords), self._prods)
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        x, y = pair
        return tower_mul(x, tower_inv(y))

    def __rtruediv__(self, other):
        return tower_inv(self) * other

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return tower_inv(self) ** (-n)
        result = TowerElement.rational(1, self.radicands, self._prods)
        base = self
        while n:
            if n & 1:
                result = tower_mul(result, base)
            n >>= 1
            if n:
                base = tower_mul(base, base)
        return result

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, (TowerElement, int, Rational)):
            pair = self._coerce(other)
            if pair is NotImplemented:
                return NotImplemented
            return pair[0].coords == pair[1].coords
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.radicands, self.coords))

    def __repr__(self):
        parts = []
        for key, c in self.coord_map().items():
            if not key:
                parts.append(str(c))
            else:
                rad = "*".join(f"sqrt({self.radicands[i - 1]})" for i in key)
                parts.append(f"{c}*{rad}")
        return "TowerElement(" + (" + ".join(parts) or "0") + ")"


def tower_make(radicands: Iterable, coords: Mapping[tuple[int, ...], object]
               | Sequence = ()) -> TowerElement:
    """Build a canonical tower element.

    ``coords`` maps 1-based index subsets of ``radicands`` to rational
    coefficients (``{(): 2, (1,): 1}`` is ``2 + sqrt(d1)``); a plain sequence
    is read as coordinates in bitmask order.  Perfect-square and zero
    radicands fold into rationals, dependent radicands fold into the
    remaining basis.
    """
    raw = [Fraction(d) for d in radicands]
    if len(raw) > MAX_RADICALS:
        raise TowerError(f"at most {MAX_RADICALS} radicands allowed, got {len(raw)}")
    if isinstance(coords, Mapping):
        items = [(sum(1 << (i - 1) for i in key), Fraction(c)) for key, c in coords.items()]
    else:
        items = [(m, Fraction(c)) for m, c in enumerate(coords)]
    rads = _merge(raw)
    prods = _mask_products(rads)
    images = []
    for d in raw:
        if d == 0:
            images.append(None)
        else:
            images.append(_express(rads, d))
    out = [Fraction(0)] * (1 << len(rads))
    for mask, c in items:
        if not c:
            continue
        coef, target = c, 0
        for i in range(len(raw)):
            if mask >> i & 1:
                img = images[i]
                if img is None:
                    coef = Fraction(0)
                    break
                k, m = img
                coef *= k * prods[target & m]
                target ^= m
        if coef:
            out[target] += coef
    return TowerElement(rads, tuple(out), prods)


def align(*elems) -> list[TowerElement]:
    """Lift tower elements and rationals onto one common radicand list."""
    rads = _merge(*(e.radicands for e in elems if isinstance(e, TowerElement)))
    prods = _mask_products(rads)
    out = []
    for e in elems:
        if isinstance(e, TowerElement):
            out.append(e.lift(rads, prods))
        else:
            out.append(TowerElement.rational(e, rads, prods))
    return out


def tower_mul(x: TowerElement, y: TowerElement) -> TowerElement:
    """Product in the tower; both operands must share the radicand list."""
    if x.radicands != y.radicands:
        raise TowerError(f"radicand mismatch: {x.radicands} vs {y.radicands}")
    prods = x._prods
    n = len(x.coords)
    out = [0] * n
    ycoords = [(j, b) for j, b in enumerate(y.coords) if b]
    for i, a in enumerate(x.coords):
        if not a:
            continue
        for j, b in ycoords:
            shared = i & j
            term = a * b
            if shared:
                term *= prods[shared]
            out[i ^ j] += term
    return TowerElement(x.radicands, tuple(Fraction(c) for c in out), prods)


def tower_inv(x: TowerElement) -> TowerElement:
    """Inverse via the product of all sign conjugates (the norm is rational)."""
    if not x:
        raise ZeroDivisionError("inverse of zero tower element")
    if x.is_rational():
        return TowerElement.rational(1 / x.coords[0], x.radicands, x._prods)
    # conjugates for one radical at a time: x * conj_i(x) kills radical i
    num = TowerElement.rational(1, x.radicands, x._prods)
    cur = x
    for i in range(len(x.radicands)):
        bit = 1 << i
        if not any(c for m, c in enumerate(cur.coords) if m & bit):
            continue
        conj = cur.conjugate(i)
        num = tower_mul(num, conj)
        cur = tower_mul(cur, conj)
    norm = cur.to_rational()
    return num / norm


# -- big floats --------------------------------------------------------------

def bigfloat_context(bits: int = DEFAULT_PRECISION):
    """Context manager fixing the mpmath working precision in bits."""
    return mpmath.workprec(bits)


def to_bigfloat(x) -> mpmath.mpf:
    """Convert a rational (or int/str/mpf) to an mpf at the current precision."""
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    if isinstance(x, TowerElement):
        raise TypeError("tower elements have no canonical real value")
    return mpmath.mpf(x)
