"""Acceptance checks, one test per criterion.

Each test prints a single PASS/FAIL line so the summary is readable in `pytest -v -s`
output as well as in the captured log. Run `python3 tests/test_acceptance.py` for the
lines alone.
"""

import time
from fractions import Fraction

import pytest

from legendre_like.identities import asymptotic_gegenbauer, asymptotic_hermite, asymptotic_legendre
from legendre_like.identities.suites import run_suite


def _summarize(label, reports, elapsed, limit=None, extra_ok=True):
    failed = [r for r in reports if not r.passed]
    in_time = limit is None or elapsed <= limit
    ok = bool(reports) and not failed and in_time and extra_ok
    budget = f" (limit {limit:g}s)" if limit is not None else ""
    line = f"[{'PASS' if ok else 'FAIL'}] {label}: {len(reports) - len(failed)}/{len(reports)} reports pass, {elapsed:.2f}s{budget}"
    return ok, line, failed


def _run(label, suites, limit=None, check=None):
    t0 = time.perf_counter()
    reports = []
    for name in suites:
        reports.extend(run_suite(name))
    elapsed = time.perf_counter() - t0
    extra_ok = check(reports) if check else True
    return _summarize(label, reports, elapsed, limit, extra_ok)


def _report(capsys, result):
    ok, line, failed = result
    with capsys.disabled():
        print("\n" + line)
    assert ok, [f"{r.identity} {r.parameters} {r.note}" for r in failed[:5]] or line


def _identities(reports):
    return {r.identity for r in reports}


def criterion_1():
    def covers(reports):
        names = _identities(reports)
        wanted = {"genfun-chebyshev-u", "genfun-humbert", "genfun-legendre2", "genfun-multivar-u", "hermite2-genfun"}
        ms = {r.parameters["m"] for r in reports if r.identity == "genfun-humbert"}
        ps = {len(r.parameters["xs"]) for r in reports if r.identity == "genfun-multivar-u"}
        return wanted <= names and ms == {2, 3, 4, 5} and ps == {1, 2, 3}

    return _run("1 generating functions (exact, n<=20)", ["genfun"], limit=10, check=covers)


def criterion_2():
    return _run("2 Laplace routes (N=80, tol 1e-9*(1+|exact|))", ["laplace"], limit=30)


def criterion_3():
    return _run(
        "3 Rodriguez formulas (exact)",
        ["rodriguez-chebyshev", "rodriguez-hermite", "rodriguez-legendre", "rodriguez-legendre-lacunary"],
    )


def criterion_4():
    def covers(reports):
        rain = [r for r in reports if r.identity.startswith("rainville")]
        return {r.parameters["m"] for r in rain} == {2, 3} and {r.parameters["l"] for r in rain} == {0, 1, 2, 3}

    return _run("4 shifted and Rainville generating functions (N=9)", ["shifted-hermite", "shifted-chebyshev", "rainville"], check=covers)


def criterion_5():
    def covers(reports):
        lams = {r.parameters["lambda"] for r in reports if "lambda" in r.parameters}
        return {Fraction(1, 2), Fraction(2), Fraction(-3, 2), Fraction(1)} <= lams

    return _run("5 scaling and multiplication theorems (n<=12)", ["scaling", "hermite-properties"], check=covers)


def criterion_6():
    return _run("6 umbral suite", ["umbral"])


def criterion_7():
    return _run("7 operational Legendre definition (n<=16)", ["operational-legendre"])


def criterion_8():
    t0 = time.perf_counter()
    reports = run_suite("asymptotic")
    trivial = [
        asymptotic_hermite(2, 0, [8, 16, 32, 64]),
        asymptotic_legendre(1, 0, [8, 16, 32]),
        asymptotic_gegenbauer(1, 1, [10, 100, 1000]),
    ]
    elapsed = time.perf_counter() - t0
    zeros = all(d["deviation"] == 0 for r in trivial for d in r.details)
    wanted = {("asymptotic-gegenbauer", 2), ("asymptotic-gegenbauer", 3)}
    have = {(r.identity, r.parameters.get("n")) for r in reports}
    return _summarize("8 asymptotic limits (50 digits)", reports + trivial, elapsed, limit=60, extra_ok=zeros and wanted <= have)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_acceptance(criterion, capsys):
    _report(capsys, criterion())


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    for _, line, _ in results:
        print(line)
    raise SystemExit(0 if all(ok for ok, _, _ in results) else 1)
