"""Acceptance suite: one test per criterion, one report line each.

Every check is exact (zero counterexamples or exact equality). Elapsed
times in the report lines are informational. Run with

    pytest tests/test_acceptance.py -v -s

to see the per-criterion lines on a passing run.
"""

import json
import time

import numpy as np

from iterfix import (
    CustomRule,
    PrimeClassification,
    Violation,
    h_direct,
    schemmel,
    validate,
    verify_divisor_closure,
    verify_orbit_closure,
    verify_s_equals_t,
    verify_theorem,
)
from iterfix.cli import main

R_VALUES = (1, 2, 3, 4, 5)
RULES = {r: schemmel(r) for r in R_VALUES}
CLASSIFIERS = {r: PrimeClassification(RULES[r]) for r in R_VALUES}


def _report(name, ok, t0, detail=""):
    elapsed = time.perf_counter() - t0
    line = f"[acceptance] {name}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s)"
    if detail and not ok:
        line += f" -- {detail}"
    print(line)


def test_criterion_1_limit_completely_multiplicative():
    t0 = time.perf_counter()
    bad = {r: verify_theorem(CLASSIFIERS[r], 2000) for r in R_VALUES}
    ok = not any(bad.values())
    _report("1 multiplicative limit, pairs to 2000, r=1..5", ok, t0, str(bad))
    assert ok, bad


def test_criterion_2_fast_route_equals_direct_route():
    t0 = time.perf_counter()
    mismatches = []
    for r in R_VALUES:
        rule, c = RULES[r], CLASSIFIERS[r]
        for n in range(1, 100_001):
            if c.h_fast(n) != h_direct(rule, n):
                mismatches.append((r, n))
    ok = not mismatches
    _report("2 fast route equals direct route to 1e5, r=1..5", ok, t0, str(mismatches[:5]))
    assert ok, mismatches[:5]


def test_criterion_3_s_and_t_membership_agree():
    t0 = time.perf_counter()
    bad = {r: verify_s_equals_t(CLASSIFIERS[r], 10_000) for r in R_VALUES}
    ok = not any(bad.values())
    _report("3 S/T membership agreement to 1e4, r=1..5", ok, t0, str(bad))
    assert ok, bad


def test_criterion_4_orbit_preserves_membership():
    t0 = time.perf_counter()
    bad = {r: verify_orbit_closure(CLASSIFIERS[r], 2000, 10) for r in R_VALUES}
    ok = not any(bad.values())
    _report("4 orbit closure, k<=2000, depth 10, r=1..5", ok, t0, str(bad))
    assert ok, bad


def test_criterion_5_divisor_closure_and_literal_criterion():
    t0 = time.perf_counter()
    closure_bad = {r: verify_divisor_closure(CLASSIFIERS[r], 500) for r in R_VALUES}
    literal_bad = [
        (r, n)
        for r in R_VALUES
        for n in range(1, 501)
        if CLASSIFIERS[r].in_t(n) != CLASSIFIERS[r].in_t_literal(n)
    ]
    ok = not any(closure_bad.values()) and not literal_bad
    _report(
        "5 divisor closure + literal pair criterion to 500, r=1..5",
        ok,
        t0,
        f"closure={closure_bad} literal={literal_bad[:5]}",
    )
    assert ok, (closure_bad, literal_bad[:5])


def test_criterion_6_hypothesis_validation():
    t0 = time.perf_counter()
    reports = {r: validate(RULES[r], 1000, 6) for r in R_VALUES}
    clean = all(rep.ok for rep in reports.values())
    planted = validate(CustomRule("planted", {(2, 1): 3}), 2, 1)
    planted_ok = planted.violations == (Violation("I", 2, 1, 3),)
    ok = clean and planted_ok
    _report(
        "6 hypothesis validation, primes<=1000 alpha<=6, r=1..5 + planted violation",
        ok,
        t0,
        f"clean={clean} planted={planted.violations}",
    )
    assert ok


def test_criterion_7_derived_closed_forms():
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 10_001):
        if h_direct(RULES[2], n) != n % 2:
            bad.append(("r=2 parity", n))
        if h_direct(RULES[3], n) != (1 if n == 1 else 0):
            bad.append(("r=3 only n=1", n))
        if h_direct(RULES[1], n) != 1:
            bad.append(("r=1 all ones", n))
    ok = not bad
    _report("7 closed forms to 1e4 (r=2 parity, r=3 indicator of 1, r=1 ones)", ok, t0, str(bad[:5]))
    assert ok, bad[:5]


def test_criterion_8_totient_against_coprime_count_oracle():
    t0 = time.perf_counter()
    rule = RULES[1]
    bad = []
    for n in range(1, 10_001):
        oracle = int(np.count_nonzero(np.gcd(np.arange(1, n + 1, dtype=np.int64), n) == 1))
        if rule.eval(n) != oracle:
            bad.append((n, rule.eval(n), oracle))
    ok = not bad
    _report("8 totient equals brute-force coprime count to 1e4", ok, t0, str(bad[:5]))
    assert ok, bad[:5]


def test_criterion_9_benchmark_smoke(capsys):
    t0 = time.perf_counter()
    code = main(["bench", "--rule", "schemmel:1", "--bound", "100000", "--format", "json"])
    out = capsys.readouterr().out
    doc = json.loads(out)
    ok = code == 0 and doc["fast_total_s"] <= doc["direct_total_s"]
    with capsys.disabled():
        _report(
            "9 benchmark smoke, bound 1e5, warm fast route not slower",
            ok,
            t0,
            f"direct={doc['direct_total_s']}s fast={doc['fast_total_s']}s",
        )
    assert ok, doc
