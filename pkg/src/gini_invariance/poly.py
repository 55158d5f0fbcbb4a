"""Sparse multivariate polynomials over the rationals.

A :class:`MultiPoly` is a tuple of variable names plus a dict mapping
exponent tuples to nonzero :class:`~fractions.Fraction` coefficients::

    w^3*v^5 - 2*s   ->  vars ('w', 'v', 's'), {(3, 5, 0): 1, (0, 0, 1): -2}

Polynomials over different variable lists are combined on the union of
their variables.  Resultants are available both as fraction-free (Bareiss)
elimination on the Sylvester matrix and by evaluation/interpolation.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Callable, Dict, Iterable, Mapping, Sequence, Tuple

__all__ = [
    "MultiPoly",
    "InexactDivisionError",
    "parse_poly",
    "weighted_degree",
    "term_weighted_degrees",
    "substitute",
    "divexact",
    "sylvester_matrix",
    "det_bareiss",
    "resultant",
    "resultant_bareiss",
    "resultant_interp",
    "univariate_resultant",
    "univariate_gcd",
    "primitive_part",
]

Exponent = Tuple[int, ...]


class InexactDivisionError(ArithmeticError):
    """Division left a nonzero remainder; ``remainder`` is the witness."""

    def __init__(self, dividend: "MultiPoly", divisor: "MultiPoly", remainder: "MultiPoly"):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"{divisor} does not divide exactly; remainder {remainder}")


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, object] | None = None):
        self.vars: tuple[str, ...] = tuple(variables)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names: {self.vars}")
        n = len(self.vars)
        clean: Dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not match variables {self.vars}")
            c = Fraction(c)
            if c:
                clean[tuple(exp)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: Dict[Exponent, Fraction]) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.vars = variables
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, c, variables: Sequence[str] = ()) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Sequence[str] | None = None) -> "MultiPoly":
        variables = tuple(variables) if variables is not None else (name,)
        exp = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise ValueError(f"{name} not in {variables}")
        return cls(variables, {exp: 1})

    # -- structure --------------------------------------------------------
    def with_vars(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-embed into a superset (or reordering) of the variable list."""
        variables = tuple(variables)
        if variables == self.vars:
            return self
        idx = []
        for v in self.vars:
            if v in variables:
                idx.append(variables.index(v))
            else:
                idx.append(None)
        n = len(variables)
        out = {}
        for exp, c in self.terms.items():
            new = [0] * n
            for e, j, name in zip(exp, idx, self.vars):
                if j is None:
                    if e:
                        raise ValueError(f"variable {name} occurs but is dropped")
                    continue
                new[j] = e
            out[tuple(new)] = c
        return MultiPoly._raw(variables, out)

    def _unify(self, other: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        if self.vars == other.vars:
            return self, other
        merged = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return self.with_vars(merged), other.with_vars(merged)

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.const(other, self.vars)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return next(iter(self.terms.values()), Fraction(0))

    def degree(self, var: str) -> int:
        """Degree in ``var``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def used_vars(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def drop_unused(self) -> "MultiPoly":
        return self.with_vars(self.used_vars())

    def coeffs_in(self, var: str) -> list["MultiPoly"]:
        """Coefficients c_0..c_n with self = sum c_k var^k, over the other variables."""
        rest = tuple(v for v in self.vars if v != var)
        if var not in self.vars:
            return [self.with_vars(rest)]
        i = self.vars.index(var)
        buckets: Dict[int, Dict[Exponent, Fraction]] = {}
        for exp, c in self.terms.items():
            buckets.setdefault(exp[i], {})[exp[:i] + exp[i + 1:]] = c
        n = max(buckets, default=0)
        return [MultiPoly._raw(rest, buckets.get(k, {})) for k in range(n + 1)]

    @classmethod
    def from_coeffs(cls, var: str, coeffs: Sequence["MultiPoly"]) -> "MultiPoly":
        rest = next((c.vars for c in coeffs), ())
        variables = rest + (var,)
        out = {}
        for k, c in enumerate(coeffs):
            for exp, v in c.with_vars(rest).terms.items():
                out[exp + (k,)] = v
        return cls._raw(variables, out)

    def leading_term(self) -> tuple[Exponent, Fraction]:
        exp = max(self.terms)
        return exp, self.terms[exp]

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, (MultiPoly, int, Fraction)):
            return NotImplemented
        x, y = self._unify(self._lift(other))
        out = dict(x.terms)
        for exp, c in y.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MultiPoly._raw(x.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (MultiPoly, int, Fraction)):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly._raw(self.vars, {})
            return MultiPoly._raw(self.vars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        x, y = self._unify(other)
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in x.terms.items():
            for e2, c2 in y.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(x.vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, MultiPoly):
            return divexact(self, other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = MultiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.vars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        x, y = self._unify(other)
        return x.terms == y.terms

    def __hash__(self):
        return hash(self.drop_unused().to_text())

    # -- evaluation -------------------------------------------------------
    def __call__(self, **values):
        return self.evaluate(values)

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate at a full assignment; values may be any ring elements."""
        missing = [v for v in self.vars if v not in values and any(e[self.vars.index(v)] for e in self.terms)]
        if missing:
            raise ValueError(f"no value for variables {missing}")
        xs = [values.get(v, 0) for v in self.vars]
        powers: list[dict[int, object]] = [{} for _ in xs]
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = c
            for i, e in enumerate(exp):
                if e:
                    p = powers[i].get(e)
                    if p is None:
                        p = powers[i][e] = xs[i] ** e
                    term = term * p
            total = total + term
        return total

    def partial(self, values: Mapping[str, object]) -> "MultiPoly":
        """Substitute rational values for some variables, keeping the rest."""
        keep = tuple(v for v in self.vars if v not in values)
        ki = [self.vars.index(v) for v in keep]
        si = [(self.vars.index(v), Fraction(values[v])) for v in self.vars if v in values]
        out: Dict[Exponent, Fraction] = {}
        for exp, c in self.terms.items():
            for i, x in si:
                if exp[i]:
                    c = c * x ** exp[i]
            if c:
                e = tuple(exp[i] for i in ki)
                out[e] = out.get(e, 0) + c
        return MultiPoly._raw(keep, {e: c for e, c in out.items() if c})

    # -- text -------------------------------------------------------------
    def to_text(self) -> str:
        """Canonical form: terms in descending lex order of exponents."""
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, exp) if e
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MultiPoly({self.vars}, {self.to_text()!r})"


# -- parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def parse_poly(text: str, variables: Sequence[str] | None = None) -> MultiPoly:
    """Parse ``+ - * / ^`` and parentheses; division only by constants.

    Juxtaposition such as ``2100w^3v^5`` is not supported; write ``*``.
    """
    tokens = []
    for num, name, op in _TOKEN.findall(text.replace("−", "-")):
        if num:
            tokens.append(("num", int(num)))
        elif name:
            tokens.append(("name", name))
        elif op.strip():
            tokens.append(("op", op))
    if variables is None:
        seen: list[str] = []
        for kind, val in tokens:
            if kind == "name" and val not in seen:
                seen.append(val)
        variables = seen
    variables = tuple(variables)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if expected is not None and tok != ("op", expected):
            raise ValueError(f"expected {expected!r} at token {pos} in {text!r}")
        pos += 1
        return tok

    def expr():
        sign = 1
        if peek() in (("op", "-"), ("op", "+")):
            sign = -1 if take()[1] == "-" else 1
        acc = term() * sign
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term():
        acc = power()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = power()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant():
                    raise ValueError("division by a non-constant polynomial")
                acc = acc * (1 / rhs.constant_value())
        return acc

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer literal")
            base = base ** val
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return MultiPoly.const(val, variables)
        if kind == "name":
            if val not in variables:
                raise ValueError(f"unknown variable {val!r}")
            return MultiPoly.var(val, variables)
        if (kind, val) == ("op", "("):
            inner = expr()
            take(")")
            return inner
        if (kind, val) == ("op", "-"):
            return -power()
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    result = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input at token {pos} in {text!r}")
    return result


# -- operations ----------------------------------------------------------------

def term_weighted_degrees(f: MultiPoly, weights: Mapping[str, int]) -> set[int]:
    if any(weights.get(v, 1) < 1 for v in f.vars):
        raise ValueError("weights must be positive integers")
    wv = [weights.get(v, 1) for v in f.vars]
    return {sum(e * w for e, w in zip(exp, wv)) for exp in f.terms}


def weighted_degree(f: MultiPoly, weights: Mapping[str, int]) -> int | None:
    """Common weighted degree of all terms, or None if f is not weighted-homogeneous.

    Variables missing from ``weights`` count with weight 1.
    """
    if f.is_zero():
        raise ValueError("weighted degree of the zero polynomial is undefined")
    degs = term_weighted_degrees(f, weights)
    return degs.pop() if len(degs) == 1 else None


def substitute(f: MultiPoly, var: str, g: MultiPoly) -> MultiPoly:
    """Replace ``var`` by ``g`` (Horner in var); var is dropped from the result."""
    if var not in f.vars:
        raise ValueError(f"{var} is not a variable of {f!r}")
    coeffs = f.coeffs_in(var)
    rest = coeffs[0].vars
    if g.degree(var) > 0:
        raise ValueError("substituted polynomial may not contain the eliminated variable")
    g = g.with_vars(tuple(v for v in g.vars if v != var))
    acc = MultiPoly._raw(rest, {})
    for c in reversed(coeffs):
        acc = acc * g + c
    keep = [v for v in acc.vars if v in rest or v in g.vars]
    return acc.with_vars(tuple(dict.fromkeys(keep)))


def divexact(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Exact quotient f/g by lex-order multivariate division."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    f, g = f._unify(g)
    vars_ = f.vars
    gexp, gc = g.leading_term()
    gterms = list(g.terms.items())
    rem = dict(f.terms)
    quot: Dict[Exponent, Fraction] = {}
    leftover: Dict[Exponent, Fraction] = {}
    while rem:
        exp = max(rem)
        c = rem[exp]
        if any(a < b for a, b in zip(exp, gexp)):
            leftover[exp] = c
            del rem[exp]
            continue
        qexp = tuple(a - b for a, b in zip(exp, gexp))
        qc = c / gc
        quot[qexp] = qc
        for e2, c2 in gterms:
            e = tuple(a + b for a, b in zip(qexp, e2))
            v = rem.get(e, 0) - qc * c2
            if v:
                rem[e] = v
            else:
                rem.pop(e, None)
    if leftover:
        raise InexactDivisionError(f, g, MultiPoly._raw(vars_, leftover))
    return MultiPoly._raw(vars_, quot)


def primitive_part(f: MultiPoly) -> tuple[Fraction, MultiPoly]:
    """(content, primitive integer polynomial) with positive leading coefficient."""
    if f.is_zero():
        return Fraction(0), f
    den = reduce(lcm, (c.denominator for c in f.terms.values()), 1)
    nums = [int(c * den) for c in f.terms.values()]
    g = reduce(gcd, nums)
    content = Fraction(g, den)
    if f.leading_term()[1] < 0:
        content = -content
    return content, f * (1 / content)


# -- determinants and resultants -----------------------------------------------

def sylvester_matrix(fc: Sequence, gc: Sequence, zero) -> list[list]:
    """Sylvester matrix from coefficient lists given lowest degree first."""
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    rows = []
    fhi = list(reversed(fc))
    ghi = list(reversed(gc))
    for i in range(n):
        rows.append([zero] * i + fhi + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + ghi + [zero] * (size - n - 1 - i))
    return rows


def det_bareiss(matrix: Sequence[Sequence], div: Callable, zero, one,
                is_zero: Callable = lambda x: not x):
    """Fraction-free Gaussian elimination; ``div`` must be exact division."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if is_zero(a[k][k]):
            for i in range(k + 1, n):
                if not is_zero(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - aik * row_k[j]
                row_i[j] = div(num, prev)
            row_i[k] = zero
        prev = pivot
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def _check_degrees(f: MultiPoly, g: MultiPoly, var: str) -> None:
    if f.degree(var) < 1 or g.degree(var) < 1:
        raise ValueError(f"both polynomials need positive degree in {var}")


def resultant_bareiss(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Resultant w.r.t. ``var`` by Bareiss elimination over Q[other vars]."""
    _check_degrees(f, g, var)
    f, g = f._unify(g)
    fc, gc = f.coeffs_in(var), g.coeffs_in(var)
    rest = fc[0].vars
    zero = MultiPoly._raw(rest, {})
    one = MultiPoly.const(1, rest)
    mat = sylvester_matrix(fc, gc, zero)
    return det_bareiss(mat, divexact, zero, one, lambda p: p.is_zero())


def _det_rational(mat: list[list[Fraction]]) -> Fraction:
    """Determinant of a rational matrix via integer Bareiss after row scaling."""
    scale = Fraction(1)
    rows = []
    for row in mat:
        den = reduce(lcm, (Fraction(x).denominator for x in row), 1)
        scale /= den
        rows.append([int(Fraction(x) * den) for x in row])
    return scale * det_bareiss(rows, lambda x, y: x // y, 0, 1)


def _newton_interpolate(xs: Sequence[int], ys: Sequence[MultiPoly], var: str) -> MultiPoly:
    """Polynomial in ``var`` (coefficients in ys' ring) through (xs[i], ys[i])."""
    coef = list(ys)
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) * Fraction(1, xs[i] - xs[i - j])
    rest = ys[0].vars
    x = MultiPoly.var(var, rest + (var,))
    acc = coef[-1].with_vars(rest + (var,))
    for i in range(n - 2, -1, -1):
        acc = acc * (x - xs[i]) + coef[i].with_vars(rest + (var,))
    return acc


def resultant_interp(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Resultant w.r.t. ``var`` by evaluation at small integers and interpolation.

    The Sylvester matrix keeps the formal degrees of f and g, so evaluation
    commutes with the determinant even where a leading coefficient vanishes.
    Degree bound in each remaining variable x is deg_var(g)*deg_x(f) +
    deg_var(f)*deg_x(g).
    """
    _check_degrees(f, g, var)
    f, g = f._unify(g)
    fc, gc = f.coeffs_in(var), g.coeffs_in(var)
    rest = fc[0].vars
    m, n = len(fc) - 1, len(gc) - 1
    bounds = {}
    for x in rest:
        dfx = max(c.degree(x) for c in fc)
        dgx = max(c.degree(x) for c in gc)
        bounds[x] = n * max(dfx, 0) + m * max(dgx, 0)

    def solve(fcs: list[MultiPoly], gcs: list[MultiPoly], remaining: tuple[str, ...]) -> MultiPoly:
        if not remaining:
            mat = sylvester_matrix([c.constant_value() for c in fcs],
                                   [c.constant_value() for c in gcs], Fraction(0))
            return MultiPoly.const(_det_rational(mat), ())
        x, others = remaining[0], remaining[1:]
        pts = list(range(bounds[x] + 1))
        vals = []
        for pt in pts:
            vals.append(solve([c.partial({x: pt}) for c in fcs],
                              [c.partial({x: pt}) for c in gcs], others))
        out = _newton_interpolate(pts, [v.with_vars(others) for v in vals], x)
        return out

    res = solve(fc, gc, rest)
    return res.with_vars(rest)


def resultant(f: MultiPoly, g: MultiPoly, var: str, method: str = "bareiss") -> MultiPoly:
    """Resultant of f and g with respect to ``var``.

    ``method`` is ``"bareiss"``, ``"interp"``, or ``"both"`` (computes
    both and raises ``AssertionError`` if they differ).
    """
    if method == "bareiss":
        return resultant_bareiss(f, g, var)
    if method == "interp":
        return resultant_interp(f, g, var)
    if method == "both":
        a = resultant_bareiss(f, g, var)
        b = resultant_interp(f, g, var)
        if a != b:
            raise AssertionError("Bareiss and interpolation resultants disagree")
        return a
    raise ValueError(f"unknown resultant method {method!r}")


def _univariate_coeffs(f: MultiPoly) -> tuple[str | None, list[Fraction]]:
    used = f.used_vars()
    if len(used) > 1:
        raise ValueError(f"not univariate: variables {used}")
    if not used:
        return None, [f.constant_value()] if not f.is_zero() else []
    var = used[0]
    return var, [c.constant_value() for c in f.drop_unused().coeffs_in(var)]


def univariate_resultant(f: MultiPoly, g: MultiPoly) -> Fraction:
    """Exact resultant of two univariate rational polynomials.

    Denominators are cleared first so the Sylvester determinant is taken
    with integer Bareiss elimination; the scaling is undone afterwards.
    """
    vf, fc = _univariate_coeffs(f)
    vg, gc = _univariate_coeffs(g)
    if vf and vg and vf != vg:
        raise ValueError(f"different variables {vf} and {vg}")
    if len(fc) < 2 or len(gc) < 2:
        raise ValueError("both polynomials need positive degree")
    m, n = len(fc) - 1, len(gc) - 1
    df = reduce(lcm, (c.denominator for c in fc), 1)
    dg = reduce(lcm, (c.denominator for c in gc), 1)
    fi = [int(c * df) for c in fc]
    gi = [int(c * dg) for c in gc]
    det = det_bareiss(sylvester_matrix(fi, gi, 0), lambda x, y: x // y, 0, 1)
    return Fraction(det) / (Fraction(df) ** n * Fraction(dg) ** m)


def univariate_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Monic gcd over Q by the Euclidean remainder sequence."""
    vf, fc = _univariate_coeffs(f)
    vg, gc = _univariate_coeffs(g)
    var = vf or vg or "z"

    def rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
        a = list(a)
        lb = b[-1]
        while len(a) >= len(b):
            q = a[-1] / lb
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[shift + i] -= q * c
            a.pop()
            while a and not a[-1]:
                a.pop()
        return a

    a, b = fc, gc
    while b:
        a, b = b, rem(a, b)
    if not a:
        return MultiPoly.const(0, (var,))
    lead = a[-1]
    return MultiPoly((var,), {(k,): c / lead for k, c in enumerate(a)})
