"""End-to-end certificate for the elimination argument.

Stages, in order:

1. printed C_2 .. C_12 against the exact series engine;
2. the cofactors P_8, P_10, P_12 against the series (up to a unit);
3. weighted homogeneity of P_8, P_10, P_12 (weights w:1, v:1, s:2);
4. resultant(P_8, P_10, s) -> P_{8,10}(z), compared with the printed integers;
5. resultant(P_8, P_12, s) -> P_{8,12}(z), likewise;
6. Q = resultant(P_{8,10}, P_{8,12}, z) != 0, with a gcd cross-check.

The certificate is deterministic given seed and mode; wall-clock timings
and the full decimal expansion of Q go to the separate report.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import __version__
from .formulas import (
    COFACTOR_SCALE,
    P810_COEFFS,
    P812_COEFFS,
    R810_CONST,
    Stage,
    cofactor,
)
from .poly import (
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
)
from .taylor import Verdict, _params_at, check_formulas, sample_point, taylor_coefficients

__all__ = [
    "Certificate",
    "WEIGHTS",
    "EXPECTED_WEIGHTED_DEGREES",
    "extract_cofactor",
    "extract_cofactors",
    "homogeneity_check",
    "eliminate",
    "certify_resultant_chain",
    "certify_final_resultant",
    "run_certificate",
]

WEIGHTS = {"w": 1, "v": 1, "s": 2}
EXPECTED_WEIGHTED_DEGREES = {8: 8, 10: 14, 12: 20}
WV = ("w", "v")


@dataclass
class Certificate:
    seed: int
    mode: str
    stages: list[dict] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    q_decimal: str | None = None

    @property
    def verdict(self) -> str:
        ok = self.stages and all(s["verdict"] == "confirmed" for s in self.stages)
        return "certified" if ok else "refuted"

    def add(self, verdict: Verdict) -> None:
        self.stages.append({k: v for k, v in verdict.to_dict().items() if k != "seconds"})
        self.timings[verdict.name] = round(verdict.seconds, 3)

    def to_dict(self) -> dict:
        return {
            "schema": "gini-invariance-certificate/1",
            "version": __version__,
            "seed": self.seed,
            "mode": self.mode,
            "verdict": self.verdict,
            "stages": self.stages,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def report(self) -> dict:
        return {"certificate": self.to_dict(), "timings": self.timings, "Q": self.q_decimal}


def _timed(fn: Callable[[], Verdict]) -> Verdict:
    start = time.perf_counter()
    v = fn()
    v.seconds = time.perf_counter() - start
    return v


def extract_cofactors(ks=(8, 10, 12), points: int = 20, seed: int = 0) -> dict[int, tuple[MultiPoly, Verdict]]:
    """Check C_k * w^i v^j / (scale (v-w)(v+w) s) against the stored P_k.

    Agreement is required up to one constant unit per k; the unit is
    recorded (1 when the printed prefactor is exact).
    """
    rng = random.Random(seed)
    ratios: dict[int, set[Fraction]] = {k: set() for k in ks}
    witness: dict[int, dict] = {}
    used = 0
    while used < points:
        pt = sample_point(Stage.AFTER_R, rng)
        w, v, s = pt["w"], pt["v"], pt["s"]
        if s == 0:
            continue
        coeffs = taylor_coefficients(_params_at(Stage.AFTER_R, pt), max(ks))
        for k in ks:
            scale, den_text = COFACTOR_SCALE[k]
            den = parse_poly(den_text, ("w", "v", "s")).evaluate(pt)
            measured = coeffs[k] * den / (scale * (v - w) * (v + w) * s)
            stored = cofactor(k).evaluate(pt)
            if stored == 0:
                witness.setdefault(k, {"point": {n: str(x) for n, x in pt.items()},
                                       "reason": "P_k vanishes"})
                continue
            ratios[k].add(measured / stored)
        used += 1
    out = {}
    for k in ks:
        ok = len(ratios[k]) == 1 and not witness.get(k)
        unit = next(iter(ratios[k])) if len(ratios[k]) == 1 else None
        v = Verdict(f"extract P_{k}", "confirmed" if ok else "refuted", points=points,
                    details={"terms": len(cofactor(k).terms),
                             "unit": None if unit is None else str(unit)})
        if not ok:
            v.witness = witness.get(k) or {"ratios": sorted(str(r) for r in ratios[k])[:5]}
        out[k] = (cofactor(k), v)
    return out


def extract_cofactor(k: int, points: int = 20, seed: int = 0) -> tuple[MultiPoly, Verdict]:
    return extract_cofactors((k,), points, seed)[k]


def homogeneity_check() -> Verdict:
    degs = {k: weighted_degree(cofactor(k), WEIGHTS) for k in (8, 10, 12)}
    ok = degs == EXPECTED_WEIGHTED_DEGREES
    v = Verdict("weighted homogeneity", "confirmed" if ok else "refuted", points=3,
                details={f"P_{k}": d for k, d in degs.items()})
    if not ok:
        v.witness = {"expected": EXPECTED_WEIGHTED_DEGREES}
    return v


def _max_power(f: MultiPoly, lin: MultiPoly) -> tuple[MultiPoly, int]:
    n = 0
    while True:
        try:
            f = divexact(f, lin)
        except InexactDivisionError:
            return f, n
        n += 1


@dataclass
class Elimination:
    resultant: MultiPoly
    constant: Fraction
    w_power: int
    v_power: int
    minus_power: int
    plus_power: int
    form: MultiPoly
    z_poly: MultiPoly


def eliminate(k: int, method: str = "bareiss") -> Elimination:
    """resultant(P_8, P_k, s) split as c w^a v^b (v-w)^g (v+w)^d H(w, v).

    Monomial and (v -+ w) powers are found by exact trial division, then
    H is made primitive and normalized to z = w/v.
    """
    res = resultant(cofactor(8), cofactor(k), "s", method=method).with_vars(WV)
    alpha = min(e[0] for e in res.terms)
    beta = min(e[1] for e in res.terms)
    f = divexact(res, parse_poly(f"w^{alpha}*v^{beta}", WV))
    f, gminus = _max_power(f, parse_poly("v - w", WV))
    f, gplus = _max_power(f, parse_poly("v + w", WV))
    const, form = primitive_part(f)
    deg = form.total_degree()
    zv = substitute(form, "w", parse_poly("z*v", ("z", "v")))
    zpoly = divexact(zv, parse_poly(f"v^{deg}", ("z", "v"))).drop_unused()
    return Elimination(res, const, alpha, beta, gminus, gplus, form, zpoly.with_vars(("z",)))


def _z_coeff_check(name: str, zpoly: MultiPoly, printed: tuple[int, ...]) -> dict:
    coeffs = {e[0]: c for e, c in zpoly.terms.items()}
    odd = sorted(e for e in coeffs if e % 2)
    expected = {2 * i: Fraction(c) for i, c in enumerate(printed)}
    diff = {}
    for e in sorted(set(coeffs) | set(expected)):
        if coeffs.get(e, 0) != expected.get(e, 0):
            diff[f"z^{e}"] = {"computed": str(coeffs.get(e, 0)), "printed": str(expected.get(e, 0))}
    matched = sum(1 for e, c in expected.items() if coeffs.get(e, 0) == c)
    return {"name": name, "odd_powers": odd, "diff": diff, "matched": matched}


def certify_resultant_chain(cross_check: bool = True) -> tuple[Verdict, Verdict, MultiPoly, MultiPoly]:
    """Reproduce P_{8,10} and P_{8,12}; returns the two verdicts and polynomials."""
    start = time.perf_counter()
    res810 = resultant(cofactor(8), cofactor(10), "s",
                       method="both" if cross_check else "bareiss").with_vars(WV)
    printed_factor = parse_poly(f"{R810_CONST}*w^15*v^15*(v - w)^2*(v + w)^2", WV)
    details: dict = {"cross_check": "bareiss == interpolation" if cross_check else "skipped"}
    v810 = Verdict("P_{8,10}", "confirmed")
    try:
        form = divexact(res810, printed_factor)
        deg = form.total_degree()
        details["cofactor_degree"] = deg
        zpoly = divexact(substitute(form, "w", parse_poly("z*v", ("z", "v"))),
                         parse_poly(f"v^{deg}", ("z", "v"))).drop_unused().with_vars(("z",))
        cmp = _z_coeff_check("P_{8,10}", zpoly, P810_COEFFS)
        details.update(coefficients_matched=cmp["matched"], odd_powers=cmp["odd_powers"])
        if cmp["diff"] or cmp["odd_powers"] or deg != 18:
            v810.status = "refuted"
            v810.witness = {"diff": cmp["diff"]}
    except InexactDivisionError as exc:
        v810.status = "refuted"
        v810.witness = {"remainder": exc.remainder.to_text()[:400]}
        zpoly = MultiPoly((("z",)), {})
    v810.details = details
    v810.points = len(P810_COEFFS)
    v810.seconds = time.perf_counter() - start

    start = time.perf_counter()
    el = eliminate(12)
    cmp = _z_coeff_check("P_{8,12}", el.z_poly, P812_COEFFS)
    v812 = Verdict("P_{8,12}", "confirmed", points=len(P812_COEFFS), details={
        "factor_shape": f"{el.constant} * w^{el.w_power} * v^{el.v_power} * "
                        f"(v - w)^{el.minus_power} * (v + w)^{el.plus_power}",
        "cofactor_degree": el.form.total_degree(),
        "coefficients_matched": cmp["matched"],
        "odd_powers": cmp["odd_powers"],
    })
    if cmp["diff"] or cmp["odd_powers"] or el.form.total_degree() != 26:
        v812.status = "refuted"
        v812.witness = {"diff": cmp["diff"]}
    v812.seconds = time.perf_counter() - start
    return v810, v812, zpoly, el.z_poly


def certify_final_resultant(p810: MultiPoly, p812: MultiPoly) -> tuple[Verdict, int]:
    """Q = resultant(P_{8,10}, P_{8,12}) != 0 and their gcd is constant."""
    start = time.perf_counter()
    q = univariate_resultant(p810, p812)
    g = univariate_gcd(p810, p812)
    control = univariate_resultant(p810, p810)
    if q.denominator != 1:
        raise AssertionError("resultant of integer polynomials must be an integer")
    q = q.numerator
    digits = str(abs(q))
    ok = q != 0 and g.is_constant() and control == 0
    v = Verdict("Q", "confirmed" if ok else "refuted", points=1, details={
        "nonzero": q != 0,
        "sign": (q > 0) - (q < 0),
        "digits": len(digits),
        "leading_digits": digits[:30],
        "sha256": hashlib.sha256(str(q).encode()).hexdigest(),
        "gcd_degree": g.degree("z") if g.vars else 0,
        "self_resultant_zero": control == 0,
        "sylvester_size": p810.degree("z") + p812.degree("z"),
    })
    if not ok:
        v.witness = {"gcd": g.to_text()}
    v.seconds = time.perf_counter() - start
    return v, q


def run_certificate(seed: int = 0, mode: str = "randomized", trials: int = 200,
                    degree_bound: int = 40, extraction_points: int = 20,
                    cross_check: bool = True,
                    progress: Callable[[str], None] | None = None) -> Certificate:
    """Run all stages and collect a :class:`Certificate`."""
    say = progress or (lambda msg: None)
    cert = Certificate(seed=seed, mode=mode)
    for group in ([2], [4], [6], [8, 10, 12]):
        say(f"checking printed C_k for k in {group}")
        verdicts = check_formulas(group, mode=mode, trials=trials, seed=seed,
                                  degree_bound=degree_bound)
        for k in group:
            cert.add(verdicts[k])

    say("extracting P_8, P_10, P_12")
    start = time.perf_counter()
    extracted = extract_cofactors((8, 10, 12), extraction_points, seed)
    for k in (8, 10, 12):
        v = extracted[k][1]
        v.seconds = (time.perf_counter() - start) / 3
        cert.add(v)

    hom = _timed(homogeneity_check)
    cert.add(hom)
    if not hom.ok:
        return cert

    say("computing resultants in s")
    v810, v812, p810, p812 = certify_resultant_chain(cross_check)
    cert.add(v810)
    cert.add(v812)
    if not (v810.ok and v812.ok):
        return cert

    say("computing the final resultant Q")
    vq, q = certify_final_resultant(p810, p812)
    cert.add(vq)
    cert.q_decimal = str(q)
    return cert
