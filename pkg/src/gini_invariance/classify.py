"""Solution families of G_pq(G_ab, G_cd) = G_pq and of G_ab + G_cd = x + y.

The six invariance families (tags I..VI):

    I    a+b = c+d = p+q = 0
    II   {a,b} = {c,d} = {p,q}
    III  {a,b} = {-c,-d}, p+q = 0
    IV   {a,b} = {u+v, v}, {c,d} = {u-v, -v}, {p,q} = {u, 0}
    V    {a,b} = {3w, w}, c+d = 0, {p,q} = {2w, 0}
    VI   a+b = 0, {c,d} = {3w, w}, {p,q} = {2w, 0}

and the four families of the arithmetic-mean case (tags i..iv):

    i    {a,b} = {c,d} = {1, 0}
    ii   {a,b} = {1+v, v}, {c,d} = {1-v, -v}
    iii  {a,b} = {3/2, 1/2}, c+d = 0
    iv   a+b = 0, {c,d} = {3/2, 1/2}

Conditions are tested literally on the parameters; overlapping families are
all reported.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .gini import ParamTuple

__all__ = [
    "SolutionFamily",
    "MSFamily",
    "THEOREM_TAGS",
    "COROLLARY_TAGS",
    "classify_invariance",
    "classify_matkowski_suto",
    "sample_family",
    "random_witness",
    "lemma_normalized",
]

THEOREM_TAGS = ("I", "II", "III", "IV", "V", "VI")
COROLLARY_TAGS = ("i", "ii", "iii", "iv")

HALF = Fraction(1, 2)


@dataclass(frozen=True, order=True)
class SolutionFamily:
    tag: str
    witness: tuple[tuple[str, Fraction], ...] = ()

    def __str__(self):
        if not self.witness:
            return self.tag
        inner = ", ".join(f"{k}={v}" for k, v in self.witness)
        return f"{self.tag} ({inner})"


@dataclass(frozen=True, order=True)
class MSFamily:
    tag: str
    witness: tuple[tuple[str, Fraction], ...] = ()

    def __str__(self):
        if not self.witness:
            return self.tag
        inner = ", ".join(f"{k}={v}" for k, v in self.witness)
        return f"{self.tag} ({inner})"


def _same(pair1: Iterable, pair2: Iterable) -> bool:
    return sorted(pair1) == sorted(pair2)


def _solve_power(p: Fraction, q: Fraction) -> list[Fraction]:
    """All u with {p, q} = {u, 0}."""
    out = []
    if q == 0:
        out.append(p)
    if p == 0 and q not in out:
        out.append(q)
    return out


def _family_iv_witnesses(a, b, c, d, p, q) -> list[tuple[Fraction, Fraction]]:
    found = []
    for u in _solve_power(p, q):
        # v = b with a = u + v, or v = a with b = u + v
        for v in {b, a}:
            if _same((a, b), (u + v, v)) and _same((c, d), (u - v, -v)):
                found.append((u, v))
    return sorted(set(found))


def classify_invariance(t: ParamTuple) -> set[SolutionFamily]:
    a, b, c, d, p, q = t.as_tuple()
    out: set[SolutionFamily] = set()
    if a + b == 0 and c + d == 0 and p + q == 0:
        out.add(SolutionFamily("I"))
    if _same((a, b), (c, d)) and _same((c, d), (p, q)):
        out.add(SolutionFamily("II"))
    if _same((a, b), (-c, -d)) and p + q == 0:
        out.add(SolutionFamily("III"))
    iv = _family_iv_witnesses(a, b, c, d, p, q)
    if iv:
        u, v = iv[0]
        out.add(SolutionFamily("IV", (("u", u), ("v", v))))
    for u in _solve_power(p, q):
        w = u / 2
        if _same((a, b), (3 * w, w)) and c + d == 0:
            out.add(SolutionFamily("V", (("w", w),)))
        if a + b == 0 and _same((c, d), (3 * w, w)):
            out.add(SolutionFamily("VI", (("w", w),)))
    return out


def classify_matkowski_suto(a, b, c, d) -> set[MSFamily]:
    a, b, c, d = (Fraction(x) for x in (a, b, c, d))
    out: set[MSFamily] = set()
    if _same((a, b), (1, 0)) and _same((c, d), (1, 0)):
        out.add(MSFamily("i"))
    for v in sorted({b, a}):
        if _same((a, b), (1 + v, v)) and _same((c, d), (1 - v, -v)):
            out.add(MSFamily("ii", (("v", v),)))
            break
    if _same((a, b), (3 * HALF, HALF)) and c + d == 0:
        out.add(MSFamily("iii"))
    if a + b == 0 and _same((c, d), (3 * HALF, HALF)):
        out.add(MSFamily("iv"))
    return out


def _rq(rng: random.Random, bound: int = 12, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def random_witness(tag: str, rng: random.Random) -> dict[str, Fraction]:
    """Random witness parameters for a Theorem family tag."""
    names = {
        "I": ("a", "c", "p"),
        "II": ("a", "b"),
        "III": ("a", "b", "p"),
        "IV": ("u", "v"),
        "V": ("w", "c"),
        "VI": ("w", "a"),
    }
    if tag not in names:
        raise ValueError(f"unknown family {tag!r}")
    return {n: _rq(rng) for n in names[tag]}


def sample_family(tag: str, witness: dict | None = None, seed: int | None = None) -> ParamTuple:
    """A parameter tuple in family ``tag`` built from explicit or random witnesses.

    Witness names: I (a, c, p); II (a, b); III (a, b, p); IV (u, v);
    V (w, c); VI (w, a).
    """
    if witness is None:
        witness = random_witness(tag, random.Random(seed))
    try:
        x = {k: Fraction(v) for k, v in witness.items()}
        if tag == "I":
            return ParamTuple(x["a"], -x["a"], x["c"], -x["c"], x["p"], -x["p"])
        if tag == "II":
            return ParamTuple(x["a"], x["b"], x["a"], x["b"], x["a"], x["b"])
        if tag == "III":
            return ParamTuple(x["a"], x["b"], -x["a"], -x["b"], x["p"], -x["p"])
        if tag == "IV":
            u, v = x["u"], x["v"]
            return ParamTuple(u + v, v, u - v, -v, u, 0)
        if tag == "V":
            w = x["w"]
            return ParamTuple(3 * w, w, x["c"], -x["c"], 2 * w, 0)
        if tag == "VI":
            w = x["w"]
            return ParamTuple(x["a"], -x["a"], 3 * w, w, 2 * w, 0)
    except KeyError as exc:
        raise ValueError(f"family {tag} needs witness {exc.args[0]!r}") from None
    raise ValueError(f"unknown family {tag!r}")


def lemma_normalized(t: ParamTuple) -> ParamTuple:
    """Replace every geometric-mean pair (sum zero) by (0, 0)."""
    vals = list(t.as_tuple())
    for i in (0, 2, 4):
        if vals[i] + vals[i + 1] == 0:
            vals[i] = vals[i + 1] = Fraction(0)
    return ParamTuple(*vals)
