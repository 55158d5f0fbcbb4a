import json
from fractions import Fraction as Q

import pytest

from gini_invariance.certify import (
    certify_final_resultant,
    eliminate,
    extract_cofactors,
    homogeneity_check,
    run_certificate,
)
from gini_invariance.formulas import P810_COEFFS, P812_COEFFS, R810_CONST
from gini_invariance.poly import parse_poly, univariate_resultant


def z_coeffs(p):
    return {e[0]: c for e, c in p.terms.items()}


def test_extraction_units():
    out = extract_cofactors((8, 10, 12), points=6, seed=1)
    assert all(v.ok for _, v in out.values())
    assert out[8][1].details["unit"] == "1"
    assert out[12][1].details["unit"] == "1"
    # the printed C_10 carries the opposite overall sign
    assert out[10][1].details["unit"] == "-1"


def test_homogeneity_gate():
    v = homogeneity_check()
    assert v.ok and v.details == {"P_8": 8, "P_10": 14, "P_12": 20}


def test_elimination_810_shape():
    el = eliminate(10)
    assert el.constant == R810_CONST
    assert (el.w_power, el.v_power, el.minus_power, el.plus_power) == (15, 15, 2, 2)
    assert el.form.total_degree() == 18


def test_chain_matches_printed_integers(resultant_chain):
    v810, v812, p810, p812 = resultant_chain
    assert v810.ok and v812.ok
    assert z_coeffs(p810) == {2 * i: Q(c) for i, c in enumerate(P810_COEFFS)}
    assert z_coeffs(p812) == {2 * i: Q(c) for i, c in enumerate(P812_COEFFS)}
    assert z_coeffs(p810)[0] == 1178440166794705680
    assert z_coeffs(p810)[18] == 44498612407766474466
    assert z_coeffs(p812)[26] == 95711050739605210548400442203992


def test_final_resultant(resultant_chain):
    _, _, p810, p812 = resultant_chain
    verdict, q = certify_final_resultant(p810, p812)
    assert verdict.ok and q != 0
    assert verdict.details["gcd_degree"] == 0
    assert verdict.details["self_resultant_zero"]
    assert verdict.details["digits"] == len(str(abs(q)))


def test_negative_control_shared_root():
    z = ("z",)
    assert univariate_resultant(parse_poly("z^2 - 1", z), parse_poly("z^2 - 2*z + 1", z)) == 0


@pytest.fixture(scope="module")
def small_certificates():
    kw = dict(seed=5, trials=4, extraction_points=3, cross_check=False)
    return run_certificate(**kw), run_certificate(**kw)


def test_certificate_is_deterministic(small_certificates):
    a, b = small_certificates
    assert a.to_json() == b.to_json()


def test_certificate_schema(small_certificates):
    cert, _ = small_certificates
    data = json.loads(cert.to_json())
    assert data["schema"] == "gini-invariance-certificate/1"
    assert data["seed"] == 5
    names = [s["name"] for s in data["stages"]]
    assert names[:6] == ["C_2", "C_4", "C_6", "C_8", "C_10", "C_12"]
    assert names[-3:] == ["P_{8,10}", "P_{8,12}", "Q"]
    for stage in data["stages"]:
        assert set(stage) == {"name", "verdict", "points", "witness", "details"}
    # exit status follows the verdicts: one refuted stage refutes the certificate
    assert data["verdict"] == ("certified" if all(s["verdict"] == "confirmed" for s in data["stages"])
                               else "refuted")
    report = cert.report()
    assert report["Q"].lstrip("-").isdigit()
    assert set(report["timings"]) >= set(names)
