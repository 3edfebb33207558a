"""Acceptance criteria, exact equality throughout.

Each criterion is a function returning ``(ok, detail)``. Under pytest every
criterion is a test and a one-line verdict per criterion is printed in the
terminal summary; ``python3 tests/test_acceptance.py`` prints the same lines.
"""

from __future__ import annotations

import json
import subprocess
import sys
import time
from pathlib import Path

import pytest

from snbracket.exterior import wedge
from snbracket.geometry import naturality_check, pushforward_invertible
from snbracket.parser import parse, print_canonical
from snbracket.poisson import jacobi_on_monomials, is_poisson, schouten_square, triple_identity_check
from snbracket.randgen import random_invertible_map, random_multivector, random_polynomial, trial_rng
from snbracket.ring import Polynomial
from snbracket.schouten import BracketConvention, bracket, convert
from snbracket.suites import SuiteConfig, run_suites

TRIALS = 100
GOLDEN = Path(__file__).parent / "golden"
RESULTS: dict[int, tuple[bool, str]] = {}

SO3 = "x3*e1^e2 + x1*e2^e3 + x2*e3^e1"
NON_POISSON = "x2*e1^e2 + x1*e2^e3"
NON_POISSON_SQUARE = "-2*x1*e1^e2^e3"


def _sign(e):
    return -1 if e % 2 else 1


def _suite_verdict(results, keys=None):
    keys = keys or list(results)
    bad = [k for k in keys if not results[k].passed]
    runs = sum(results[k].runs for k in keys)
    if bad:
        first = results[bad[0]].first
        return False, f"{len(bad)} failing identities, first {bad[0]}: {first[2]}"
    return True, f"{len(keys)} identities, {runs} trials"


def criterion_1():
    t0 = time.perf_counter()
    cfg = SuiteConfig(dims=(1, 2, 3, 4), trials=TRIALS, suites=("schouten",))
    r = run_suites(cfg, keys={"schouten.cross_method"})["schouten.cross_method"]
    pairs = sum(TRIALS * (d + 1) ** 2 for d in cfg.dims)
    elapsed = time.perf_counter() - t0
    ok = r.passed and elapsed < 60
    return ok, f"{pairs} pairs ({TRIALS} per dim, u, v) in {elapsed:.1f}s" + ("" if r.passed else f"; {r.first[2]}")


def criterion_2():
    keys = ["schouten.graded_antisymmetry", "schouten.graded_jacobi", "schouten.leibniz"]
    results = run_suites(SuiteConfig(dims=(1, 2, 3), trials=TRIALS, suites=("schouten",)), keys=set(keys))
    ok, detail = _suite_verdict(results, keys)
    # recorded counterexamples must defeat the mis-signed variants
    mv = lambda t: parse(t, 2, "multivector")  # noqa: E731
    U, V, W = mv("x1"), mv("x2"), mv("e1^e2")
    u, v = U.degree, V.degree
    lhs = bracket(U, bracket(V, W))
    jac_variant_fails = lhs != bracket(bracket(U, V), W) + _sign(u * (v - 1)) * bracket(V, bracket(U, W))
    U, V, W = mv("x1"), mv("1"), mv("e1")
    u, v = U.degree, V.degree
    lhs = bracket(U, wedge(V, W))
    leib_variant_fails = lhs != wedge(bracket(U, V), W) + _sign((u - 1) * (v - 1)) * wedge(V, bracket(U, W))
    variants = {}
    for variant, key in (("jacobi_u_exponent", "schouten.graded_jacobi"), ("leibniz_shifted_exponent", "schouten.leibniz")):
        res = run_suites(SuiteConfig(dims=(1, 2, 3), trials=TRIALS, suites=("schouten",), variant=variant), keys={key})
        variants[variant] = not res[key].passed
    ok = ok and jac_variant_fails and leib_variant_fails and all(variants.values())
    return ok, f"{detail}; recorded counterexamples defeat variants: {jac_variant_fails and leib_variant_fails}; suite catches variants: {all(variants.values())}"


def criterion_3():
    results = run_suites(SuiteConfig(dims=(1, 2, 3), trials=TRIALS, suites=("cartan",)))
    return _suite_verdict(results)


def criterion_4():
    results = run_suites(SuiteConfig(dims=(1, 2, 3, 4), trials=TRIALS, suites=("exterior",)))
    return _suite_verdict(results)


def criterion_5():
    checks = {}
    for name, text, dim in (("canonical", "e1^e2", 2), ("so3", SO3, 3)):
        P = parse(text, dim)
        checks[name] = schouten_square(P).is_zero() and jacobi_on_monomials(P, 3) is None and is_poisson(P).poisson
    P = parse(NON_POISSON, 3)
    report = is_poisson(P)
    checks["golden"] = (
        print_canonical(report.schouten_square) == NON_POISSON_SQUARE
        and not report.poisson
        and any(j for *_, j in report.samples)
    )
    failures = 0
    for t in range(TRIALS):
        rng = trial_rng(0, "acceptance", "triple", 3, t)
        P = random_multivector(rng, 3, 2, 2)
        f, g, h = (random_polynomial(rng, 3, 2) for _ in range(3))
        failures += not triple_identity_check(P, f, g, h)
    checks["triple"] = failures == 0
    return all(checks.values()), ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in checks.items()) + f"; triple identity {TRIALS - failures}/{TRIALS}"


def criterion_6():
    kinds = ("linear", "shear", "both")
    count = {k: 0 for k in kinds}
    failures = []
    for dim in (1, 2, 3):
        for t in range(TRIALS):
            rng = trial_rng(0, "acceptance", "naturality", dim, t)
            kind = kinds[t % 3]
            phi, psi = random_invertible_map(rng, dim, kind)
            U1 = random_multivector(rng, dim, rng.randint(0, dim), 2)
            U2 = random_multivector(rng, dim, rng.randint(0, dim), 2)
            V1, V2 = (pushforward_invertible(phi, psi, U) for U in (U1, U2))
            count[kind] += 1
            if not naturality_check(phi, U1, U2, V1, V2):
                failures.append((dim, t))
    runs = sum(count.values())
    return not failures, f"{runs - len(failures)}/{runs} ({', '.join(f'{k} {n}' for k, n in count.items())})"


def criterion_7():
    results = run_suites(SuiteConfig(dims=(1, 2, 3, 4), trials=TRIALS, suites=("flow",)), keys={"flow.flow_formula"})
    return _suite_verdict(results)


def _convention_pairs():
    for dim in (1, 2, 3):
        for t in range(TRIALS):
            rng = trial_rng(0, "acceptance", "conventions", dim, t)
            U = random_multivector(rng, dim, rng.randint(0, dim))
            V = random_multivector(rng, dim, rng.randint(0, dim))
            yield U, V


def criterion_8a():
    bad = 0
    for U, V in _convention_pairs():
        k = bracket(U, V)
        for conv in (BracketConvention.TULCZYJEW, BracketConvention.LICHNEROWICZ):
            there = convert(k, U.degree, V.degree, BracketConvention.KOSZUL, conv)
            bad += convert(there, U.degree, V.degree, conv, BracketConvention.KOSZUL) != k
    return bad == 0, f"round trips failing: {bad}"


def criterion_8b():
    bad, first = 0, None
    total = 0
    for U, V in _convention_pairs():
        total += 1
        if bracket(U, V, convention="tulczyjew") != -bracket(V, U):
            bad += 1
            first = first or (U, V)
    detail = f"{total - bad}/{total} pairs satisfy tulczyjew(U,V) = -koszul(V,U)"
    if first:
        detail += f"; first failure U = {first[0]}, V = {first[1]}"
    return bad == 0, detail


def criterion_8():
    a, da = criterion_8a()
    b, db = criterion_8b()
    return a and b, f"round trip {'ok' if a else 'FAIL'} ({da}); swapped-negated {'ok' if b else 'FAIL'} ({db})"


def criterion_9():
    cases = json.loads((GOLDEN / "cases.json").read_text())
    bad = []
    for case in cases:
        proc = subprocess.run([sys.executable, "-m", "snbracket", *case["argv"]], capture_output=True)
        if proc.returncode != case["exit"] or proc.stdout != (GOLDEN / case["stdout"]).read_bytes():
            bad.append(case["stdout"])
    from test_parser import _random_value  # same generator as the parser tests

    checked, t, rt_bad = 0, 0, 0
    while checked < 1000:
        rng = trial_rng(0, "parser", "round_trip", 0, t)
        t += 1
        dim = rng.randint(1, 4)
        v = _random_value(rng, dim)
        kind = "polynomial" if isinstance(v, Polynomial) else v.kind
        if kind != "polynomial" and v.is_zero() and v.degree != 0:
            continue
        rt_bad += parse(print_canonical(v), dim, kind) != v
        checked += 1
    ok = not bad and rt_bad == 0
    return ok, f"golden {len(cases) - len(bad)}/{len(cases)}" + (f" (mismatch: {bad})" if bad else "") + f"; round trip {checked - rt_bad}/{checked}"


CRITERIA = {
    1: ("cross-method bracket agreement", criterion_1),
    2: ("graded Lie axioms and recorded sign counterexamples", criterion_2),
    3: ("Cartan calculus operator identities", criterion_3),
    4: ("pairing/insertion duality and shuffle oracle", criterion_4),
    5: ("Poisson criterion", criterion_5),
    6: ("bracket naturality under polynomial diffeomorphisms", criterion_6),
    7: ("flow formula for the Lie derivative", criterion_7),
    8: ("bracket convention adapters", criterion_8),
    9: ("CLI golden files and parser round trip", criterion_9),
}


def verdict_line(n):
    ok, detail = RESULTS[n]
    return f"criterion {n} [{CRITERIA[n][0]}]: {'PASS' if ok else 'FAIL'} - {detail}"


def _run(n):
    RESULTS[n] = CRITERIA[n][1]()
    line = verdict_line(n)
    print(line)
    return RESULTS[n][0], line


@pytest.mark.parametrize("n", sorted(CRITERIA), ids=lambda n: f"criterion_{n}")
def test_criterion(n):
    ok, line = _run(n)
    assert ok, line


if __name__ == "__main__":
    sys.path.insert(0, str(Path(__file__).parent))
    failed = [n for n in sorted(CRITERIA) if not _run(n)[0]]
    sys.exit(1 if failed else 0)
