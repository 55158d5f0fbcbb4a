"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 internal
inconsistency (for example a Taylor coefficient with radical residue).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .certify import run_certificate
from .classify import classify_invariance, classify_matkowski_suto
from .exactnum import DEFAULT_PRECISION, parse_rational
from .gini import (
    ConvergenceError,
    GiniParams,
    ParamTuple,
    gauss_compose,
    invariance_residual,
    matkowski_suto_residual,
)
from .taylor import RadicalResidueError, check_formula, taylor_coefficients

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

_NEG_TOKEN = re.compile(r"^-\d[\d/,−-]*$")


@dataclass
class RunConfig:
    precision: int = DEFAULT_PRECISION
    order: int = 12
    seed: int = 0
    mode: str = "randomized"
    json: bool = False
    report: str | None = None


def _rational(text: str) -> Fraction:
    return parse_rational(text)


_rational.__name__ = "rational"


def _pair(text: str) -> GiniParams:
    return GiniParams.parse(text.replace("−", "-"))


_pair.__name__ = "p,q pair"


def _precision(text: str) -> int:
    bits = int(text)
    if bits < 64:
        raise argparse.ArgumentTypeError("precision must be at least 64 bits")
    return bits


def _order(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("order must be at least 2")
    return n


def default_tolerance(bits: int):
    """10^-(0.28 * bits): about 10^-71.7 at 256 bits."""
    return mpmath.mpf(10) ** (-mpmath.mpf("0.28") * bits)


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_taylor(args) -> int:
    coeffs = taylor_coefficients(args.params, args.order)
    nonzero = [k for k, c in enumerate(coeffs) if k and c]
    lines = [f"C_{k} = {c}" + ("   <- nonzero" if c else "") for k, c in enumerate(coeffs) if k >= 2]
    lines.append("all zero" if not nonzero else f"nonzero: {', '.join(f'C_{k}' for k in nonzero)}")
    _emit(args, {"params": [str(x) for x in args.params], "order": args.order,
                 "coefficients": {f"C_{k}": str(c) for k, c in enumerate(coeffs) if k >= 2},
                 "all_zero": not nonzero}, lines)
    return EXIT_OK if not nonzero else EXIT_FAIL


def cmd_classify(args) -> int:
    if len(args.params) == 4:
        fams = sorted(classify_matkowski_suto(*args.params))
    elif len(args.params) == 6:
        fams = sorted(classify_invariance(ParamTuple(*args.params)))
    else:
        print("classify needs 6 parameters (a b c d p q) or 4 (a b c d)", file=sys.stderr)
        return EXIT_USAGE
    names = [str(f) for f in fams]
    _emit(args, {"params": [str(x) for x in args.params], "families": names},
          [", ".join(names) if names else "none"])
    return EXIT_OK if fams else EXIT_FAIL


def cmd_verify(args) -> int:
    prec = args.precision
    with mpmath.workprec(prec):
        tol = default_tolerance(prec) if args.tol is None else mpmath.mpf(args.tol)
        if len(args.params) == 6:
            res = invariance_residual(ParamTuple(*args.params), prec=prec)
        elif len(args.params) == 4:
            res = matkowski_suto_residual(*args.params, prec=prec)
        else:
            print("verify needs 6 parameters (a b c d p q) or 4 (a b c d)", file=sys.stderr)
            return EXIT_USAGE
        ok = res <= tol
        lines = [f"residual = {mpmath.nstr(res, 10)}",
                 f"tolerance = {mpmath.nstr(tol, 5)}",
                 "PASS" if ok else "FAIL"]
        _emit(args, {"params": [str(x) for x in args.params], "precision": prec,
                     "residual": mpmath.nstr(res, 20), "tolerance": mpmath.nstr(tol, 10),
                     "pass": bool(ok)}, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_gauss(args) -> int:
    try:
        out = gauss_compose(args.M, args.N, args.x, args.y, prec=args.precision)
    except ConvergenceError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_FAIL
    with mpmath.workprec(args.precision):
        digits = int(args.precision * 0.30103)
        value = mpmath.nstr(out.value, digits)
    _emit(args, {"M": str(args.M), "N": str(args.N), "value": value,
                 "iterations": out.iterations},
          [value, f"iterations: {out.iterations}"])
    return EXIT_OK


def cmd_check_formula(args) -> int:
    v = check_formula(args.k, mode=args.mode, trials=args.trials, seed=args.seed,
                      degree_bound=args.degree_bound)
    lines = [f"C_{args.k}: {v.status} at {v.points} points ({args.mode}, seed {args.seed})"]
    if v.witness:
        lines.append(f"witness: {v.witness}")
    if "constant_ratio" in v.details:
        lines.append(f"series / printed = {v.details['constant_ratio']} at every point")
    _emit(args, v.to_dict(), lines)
    return EXIT_OK if v.ok else EXIT_FAIL


def cmd_certify(args) -> int:
    say = (lambda msg: print(msg, file=sys.stderr)) if not args.quiet else None
    cert = run_certificate(seed=args.seed, mode=args.mode, trials=args.trials,
                           degree_bound=args.degree_bound, progress=say)
    with open(args.certificate, "w") as fh:
        fh.write(cert.to_json() + "\n")
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(cert.report(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    if args.json:
        print(cert.to_json())
    else:
        for stage in cert.stages:
            print(f"{stage['verdict']:>9}  {stage['name']}")
        print(f"overall: {cert.verdict}  (certificate written to {args.certificate})")
    return EXIT_OK if cert.verdict == "certified" else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gini-invariance",
        description="Verify and classify solutions of G_pq(G_ab, G_cd) = G_pq.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--precision", type=_precision, default=DEFAULT_PRECISION,
                        help="working precision in bits (>= 64)")

    p = sub.add_parser("taylor", parents=[common], help="exact Taylor coefficients of F")
    p.add_argument("params", nargs=6, type=_rational, metavar="PARAM", help="a b c d p q")
    p.add_argument("--order", type=_order, default=12)
    p.set_defaults(func=cmd_taylor)

    p = sub.add_parser("classify", parents=[common], help="solution families of a tuple")
    p.add_argument("params", nargs="+", type=_rational, metavar="PARAM")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="numeric invariance residual")
    p.add_argument("params", nargs="+", type=_rational, metavar="PARAM")
    p.add_argument("--tol", type=str, default=None, help="pass threshold (default 10^-(0.28*precision))")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gauss", parents=[common], help="Gauss composition of two Gini means")
    p.add_argument("--M", type=_pair, required=True, metavar="p,q")
    p.add_argument("--N", type=_pair, required=True, metavar="p,q")
    p.add_argument("x", type=_rational)
    p.add_argument("y", type=_rational)
    p.set_defaults(func=cmd_gauss)

    for name, func, help_ in (("check-formula", cmd_check_formula, "check one printed C_k"),
                              ("certify", cmd_certify, "run the full elimination certificate")):
        p = sub.add_parser(name, parents=[common], help=help_)
        if name == "check-formula":
            p.add_argument("k", type=int, choices=[2, 4, 6, 8, 10, 12])
        p.add_argument("--mode", choices=["randomized", "exhaustive"], default="randomized")
        p.add_argument("--trials", type=int, default=200)
        p.add_argument("--degree-bound", type=int, default=40)
        if name == "certify":
            p.add_argument("--certificate", default="certificate.json", metavar="PATH")
            p.add_argument("--report", default=None, metavar="PATH",
                           help="also write timings and the full decimal value of Q")
            p.add_argument("--quiet", action="store_true")
        p.set_defaults(func=func)
    return parser


def _protect_negatives(argv: list[str]) -> list[str]:
    # argparse would read "-1/2" as an option flag
    return [a.replace("-", "−", 1) if _NEG_TOKEN.match(a) and ("/" in a or "," in a) else a
            for a in argv]


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negatives(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (RadicalResidueError, AssertionError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
