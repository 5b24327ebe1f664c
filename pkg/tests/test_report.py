import json
from fractions import Fraction

from legendre_like.precision import context
from legendre_like.report import (
    VerificationReport,
    decode_value,
    encode_value,
    exact_report,
    reports_from_json,
    reports_to_csv,
    reports_to_json,
    sort_reports,
    tolerance_report,
)


def test_exact_report_pass_and_fail():
    ok = exact_report("demo", {"n": 2}, [(0, {"a": Fraction(1, 3), "b": Fraction(2, 6)})])
    assert ok.passed and ok.status == "pass" and ok.max_abs_deviation == 0
    bad = exact_report("demo", {"n": 2}, [(0, {"a": 1, "b": 1}), (1, {"a": 1, "b": Fraction(3, 2)})])
    assert not bad.passed
    assert bad.max_abs_deviation == Fraction(1, 2)
    assert bad.failing_indices() == [1]


def test_tolerance_report_uses_relative_bound():
    ctx = context()
    rows = [(0, {"exact": Fraction(1000), "approx": ctx.mpf(1000) + ctx.mpf("1e-7")})]
    assert tolerance_report("t", {}, rows, abs_tol=1e-9, rel_tol=1e-9).passed
    assert not tolerance_report("t", {}, rows, abs_tol=1e-9).passed


def test_fraction_encoding_roundtrip():
    for q in (Fraction(0), Fraction(-7, 3), Fraction(10**40 + 1, 3**50)):
        enc = encode_value(q)
        assert set(enc) == {"num", "den"} and isinstance(enc["num"], str)
        assert decode_value(json.loads(json.dumps(enc))) == q


def test_float_encoding_carries_precision():
    ctx = context(60)
    v = ctx.sqrt(2)
    enc = encode_value(v)
    assert enc["precision"] == 60
    back = decode_value(enc)
    assert abs(back - v) < ctx.mpf(10) ** -58
    assert encode_value(0.5) == {"value": "0.5", "precision": 17}


def test_json_roundtrip_preserves_exact_values():
    r = exact_report("demo", {"x": Fraction(-3, 2), "ns": (1, 2)}, [(3, {"lhs": Fraction(5, 7), "rhs": Fraction(5, 7)})])
    parsed = reports_from_json(reports_to_json([r]))
    assert parsed[0]["identity"] == "demo"
    assert parsed[0]["params"]["x"] == Fraction(-3, 2)
    assert parsed[0]["details"][0]["routes"]["lhs"] == Fraction(5, 7)
    assert parsed[0]["status"] == "pass"
    assert parsed[0]["deviation"] == 0


def test_csv_columns():
    r = exact_report("demo", {"x": Fraction(1, 2), "y": 1}, [(0, {"a": 1, "b": 1})])
    lines = reports_to_csv([r]).splitlines()
    assert lines[0] == "name,params,status,deviation"
    assert lines[1] == "demo,x=1/2;y=1,pass,0"


def test_sorting_is_by_identity_then_params():
    a = VerificationReport("b", {"x": Fraction(1)}, True)
    b = VerificationReport("a", {"x": Fraction(2)}, True)
    c = VerificationReport("a", {"x": Fraction(-1)}, True)
    assert [r.identity + str(r.parameters["x"]) for r in sort_reports([a, b, c])] == ["a-1", "a2", "b1"]
