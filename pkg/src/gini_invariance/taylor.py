"""Exact Taylor coefficients of the invariance defect F and formula checks.

F(x) = G_pq(G_ab(e^x, e^-x), G_cd(e^x, e^-x)) / G_pq(e^x, e^-x), so the
identity G_pq(G_ab, G_cd) = G_pq holds iff every C_k = F^(k)(0)/k! vanishes.
Along the section (e^x, e^-x) a Gini mean becomes

    G_ab = (cosh(a x) / cosh(b x))^(1/(a-b))      (a != b)
    G_aa = exp(x tanh(a x))

and the series are built exactly over the rationals or over a radical
tower when the parameters carry square roots.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .exactnum import TowerElement, align
from .formulas import Stage, coefficient_formula, r_of
from .gini import ParamTuple
from .series import (
    PowerSeries,
    SeriesError,
    cosh_series,
    series_exp,
    series_log,
    tanh_series,
)

__all__ = [
    "ReducedParams",
    "LiftedParams",
    "RadicalResidueError",
    "reduce_params",
    "lift_params",
    "section_log",
    "taylor_series",
    "taylor_coefficients",
    "Verdict",
    "check_formula",
    "check_formulas",
    "sample_point",
    "series_invariance_check",
    "sufficiency_series_check",
    "CERT_ORDER",
]

CERT_ORDER = 13


class RadicalResidueError(ArithmeticError):
    """A Taylor coefficient kept a radical or odd part; signals an arithmetic bug."""


@dataclass(frozen=True)
class ReducedParams:
    w: Fraction
    v: Fraction
    t: Fraction
    r: Fraction
    s: Fraction

    def as_dict(self) -> dict[str, Fraction]:
        return {"w": self.w, "v": self.v, "t": self.t, "r": self.r, "s": self.s}


@dataclass(frozen=True)
class LiftedParams:
    """a..q as tower elements (or rationals), no ordering imposed."""

    a: object
    b: object
    c: object
    d: object
    p: object
    q: object

    def as_tuple(self) -> tuple:
        return (self.a, self.b, self.c, self.d, self.p, self.q)

    def to_param_tuple(self) -> ParamTuple:
        vals = []
        for x in self.as_tuple():
            vals.append(x.to_rational() if isinstance(x, TowerElement) else Fraction(x))
        return ParamTuple(*vals)


def reduce_params(t: ParamTuple) -> ReducedParams:
    a, b, c, d, p, q = t.as_tuple()
    return ReducedParams(
        w=(a + b + c + d) / 4,
        v=(a + b - c - d) / 4,
        t=((p - q) / 2) ** 2,
        r=((a - b) ** 2 + (c - d) ** 2) / 8,
        s=((a - b) ** 2 - (c - d) ** 2) / 8,
    )


def lift_params(w, v, s, stage: str = Stage.AFTER_R, r=None, t=None) -> LiftedParams:
    """Rebuild a..q from reduced coordinates with formal square roots.

    ``stage`` decides which coordinates are free: REDUCED takes r and t,
    AFTER_T takes r and sets t = r + v s / w, AFTER_R also sets r = R(w, v, s).
    """
    w, v, s = Fraction(w), Fraction(v), Fraction(s)
    if stage == Stage.REDUCED:
        if r is None or t is None:
            raise ValueError("stage 'reduced' needs r and t")
        r, t = Fraction(r), Fraction(t)
    elif stage == Stage.AFTER_T:
        if w == 0:
            raise ValueError("t = r + v s / w needs w != 0")
        if r is None:
            raise ValueError("stage 'after_t' needs r")
        r = Fraction(r)
        t = r + v * s / w
    elif stage == Stage.AFTER_R:
        if w == 0 or v == 0:
            raise ValueError("r = R(w, v, s) needs w != 0 and v != 0")
        r = r_of(w, v, s)
        t = r + v * s / w
    else:
        raise ValueError(f"unknown stage {stage!r}")
    root_ab = TowerElement.sqrt(r + s)
    root_cd = TowerElement.sqrt(r - s)
    root_pq = TowerElement.sqrt(t)
    root_ab, root_cd, root_pq = align(root_ab, root_cd, root_pq)
    return LiftedParams(
        a=root_ab + (w + v), b=-root_ab + (w + v),
        c=root_cd + (w - v), d=-root_cd + (w - v),
        p=root_pq + w, q=-root_pq + w,
    )


def _scalars(params) -> tuple:
    if isinstance(params, (ParamTuple, LiftedParams)):
        vals = params.as_tuple()
    else:
        vals = tuple(params)
    if len(vals) != 6:
        raise ValueError("need six parameters a, b, c, d, p, q")
    if any(isinstance(x, TowerElement) for x in vals):
        return tuple(align(*vals))
    return tuple(Fraction(x) for x in vals)


def _x_times(s: PowerSeries) -> PowerSeries:
    return PowerSeries((s.zero,) + s.coeffs[:-1])


def section_log(p, q, order: int) -> PowerSeries:
    """log G_pq(e^x, e^-x) as an exact series, branch chosen by p == q."""
    if p == q:
        return _x_times(tanh_series(p, order))
    ratio = cosh_series(p, order) / cosh_series(q, order)
    return series_log(ratio) * (1 / (p - q))


def _outer_log(la: PowerSeries, lb: PowerSeries, p, q) -> PowerSeries:
    """log G_pq(A, B) from la = log A and lb = log B."""
    ea, eb = series_exp(la * p), series_exp(lb * p)
    if p == q:
        return (ea * la + eb * lb) / (ea + eb)
    half = Fraction(1, 2)
    num = series_log((ea + eb) * half)
    den = series_log((series_exp(la * q) + series_exp(lb * q)) * half)
    return (num - den) * (1 / (p - q))


def taylor_series(params, order: int = CERT_ORDER) -> PowerSeries:
    """The raw series of F (coefficients possibly in a radical tower)."""
    if order < 2:
        raise ValueError("order must be at least 2")
    a, b, c, d, p, q = _scalars(params)
    la = section_log(a, b, order)
    lb = section_log(c, d, order)
    log_f = _outer_log(la, lb, p, q) - section_log(p, q, order)
    return series_exp(log_f)


def taylor_coefficients(params, order: int = CERT_ORDER) -> list[Fraction]:
    """C_0 .. C_order of F as exact rationals.

    Raises :class:`RadicalResidueError` if C_0 != 1, an odd coefficient is
    nonzero, or a coefficient keeps radical coordinates.
    """
    f = taylor_series(params, order)
    out = []
    for k, c in enumerate(f.coeffs):
        if isinstance(c, TowerElement):
            if not c.is_rational():
                raise RadicalResidueError(f"C_{k} has radical coordinates: {c}")
            c = c.rational_part()
        c = Fraction(c)
        if k == 0 and c != 1:
            raise RadicalResidueError(f"C_0 = {c}, expected 1")
        if k % 2 and c:
            raise RadicalResidueError(f"odd coefficient C_{k} = {c} is nonzero")
        out.append(c)
    return out


# -- formula identity testing ------------------------------------------------

@dataclass
class Verdict:
    name: str
    status: str  # "confirmed" | "refuted"
    points: int = 0
    witness: dict | None = None
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == "confirmed"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "verdict": self.status,
            "points": self.points,
            "witness": self.witness,
            "details": self.details,
            "seconds": round(self.seconds, 3),
        }


def _rand_q(rng: random.Random, bound: int = 1000) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _admissible(w, v, t, r, s) -> bool:
    return (w != 0 and v != 0 and v != w and v != -w and t != 0
            and r + s != 0 and r - s != 0)


def sample_point(stage: str, rng: random.Random, bound: int = 1000) -> dict[str, Fraction]:
    """Seeded random admissible point in the coordinates of ``stage``."""
    while True:
        if stage == Stage.RAW:
            return {name: _rand_q(rng, bound) for name in Stage.VARIABLES[Stage.RAW]}
        w, v, s = _rand_q(rng, bound), _rand_q(rng, bound), _rand_q(rng, bound)
        if w == 0 or v == 0:
            continue
        if stage == Stage.REDUCED:
            r, t = _rand_q(rng, bound), _rand_q(rng, bound)
            point = {"w": w, "v": v, "t": t, "r": r, "s": s}
        elif stage == Stage.AFTER_T:
            r = _rand_q(rng, bound)
            t = r + v * s / w
            point = {"w": w, "v": v, "r": r, "s": s}
        else:
            r = r_of(w, v, s)
            t = r + v * s / w
            point = {"w": w, "v": v, "s": s}
        if _admissible(w, v, t, r, s):
            return point


def _params_at(stage: str, point: Mapping[str, Fraction]):
    if stage == Stage.RAW:
        return tuple(point[n] for n in Stage.VARIABLES[Stage.RAW])
    return lift_params(point["w"], point["v"], point["s"], stage,
                       r=point.get("r"), t=point.get("t"))


def _grid_points(stage: str, degree_bound: int) -> Iterable[dict[str, Fraction]]:
    """(degree_bound + 1) distinct values per variable; w, v avoid 0 and v != +-w."""
    n = degree_bound + 1
    names = Stage.VARIABLES[stage]
    values = {}
    for name in names:
        if name == "w":
            values[name] = [Fraction(i) for i in range(1, n + 1)]
        elif name == "v":
            values[name] = [Fraction(-(n + i)) for i in range(1, n + 1)]
        else:
            values[name] = [Fraction(i - n // 2) for i in range(n)]
    for combo in product(*(values[name] for name in names)):
        yield dict(zip(names, combo))


def check_formulas(ks: Sequence[int], mode: str = "randomized", trials: int = 200,
                   seed: int = 0, degree_bound: int = 40,
                   order: int | None = None) -> dict[int, Verdict]:
    """Compare printed C_k against the series engine for formulas sharing a stage.

    Each sample point is lifted once and all requested coefficients are
    read off the same series.
    """
    formulas = {k: coefficient_formula(k) for k in ks}
    stages = {f.stage for f in formulas.values()}
    if len(stages) != 1:
        raise ValueError(f"formulas {list(ks)} are stated in different coordinates")
    stage = stages.pop()
    top = max(ks) if order is None else max(order, max(ks))
    if mode == "randomized":
        rng = random.Random(seed)
        points: Iterable = (sample_point(stage, rng) for _ in range(trials))
    elif mode == "exhaustive":
        points = _grid_points(stage, degree_bound)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    start = time.perf_counter()
    ratios: dict[int, set[Fraction]] = {k: set() for k in ks}
    verdicts = {k: Verdict(f"C_{k}", "confirmed", details={"stage": stage, "mode": mode, "seed": seed})
                for k in ks}
    for point in points:
        coeffs = taylor_coefficients(_params_at(stage, point), top)
        for k in ks:
            v = verdicts[k]
            v.points += 1
            try:
                expected = formulas[k].evaluate(point)
            except ZeroDivisionError:
                v.points -= 1
                continue
            if expected:
                ratios[k].add(coeffs[k] / expected)
            if coeffs[k] != expected and v.witness is None:
                v.witness = {
                    "point": {n: str(x) for n, x in point.items()},
                    "series": str(coeffs[k]),
                    "formula": str(expected),
                }
    elapsed = time.perf_counter() - start
    for k, v in verdicts.items():
        v.seconds = elapsed
        if v.witness is not None:
            v.status = "refuted"
            # a single common ratio means the printed formula is off by a constant factor
            if len(ratios[k]) == 1:
                v.details["constant_ratio"] = str(next(iter(ratios[k])))
    return verdicts


def check_formula(k: int, mode: str = "randomized", trials: int = 200, seed: int = 0,
                  degree_bound: int = 40) -> Verdict:
    if k % 2 or not 2 <= k <= 12:
        raise ValueError("k must be even with 2 <= k <= 12")
    return check_formulas([k], mode, trials, seed, degree_bound)[k]


def series_invariance_check(params, order: int = 20, name: str = "F == 1") -> Verdict:
    """Verdict on whether C_1 .. C_order all vanish exactly."""
    start = time.perf_counter()
    coeffs = taylor_coefficients(params, order)
    bad = [k for k, c in enumerate(coeffs) if k and c]
    v = Verdict(name, "confirmed" if not bad else "refuted", points=1,
                details={"order": order})
    if bad:
        v.witness = {"k": bad[0], "C_k": str(coeffs[bad[0]])}
    v.seconds = time.perf_counter() - start
    return v


def sufficiency_series_check(u, v, order: int = 20) -> Verdict:
    """Check F == 1 to ``order`` for {a,b}={u+v,v}, {c,d}={u-v,-v}, {p,q}={u,0}."""
    u, v = Fraction(u), Fraction(v)
    if u == 0:
        raise ValueError("u must be nonzero")
    params = (u + v, v, u - v, -v, u, Fraction(0))
    return series_invariance_check(params, order, name=f"IV(u={u}, v={v})")
