"""Compare the compiled polynomial kernels against the pure-Python fallback.

Each backend runs in its own interpreter (the backend is fixed at import),
timing three workloads: raw polynomial products, bracket evaluation, and one
pass of the Cartan operator suite.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, time
import snbracket
from snbracket.randgen import random_multivector, random_polynomial, trial_rng
from snbracket.schouten import bracket
from snbracket.suites import SuiteConfig, run_suites

def best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter(); fn(); times.append(time.perf_counter() - t0)
    return min(times)

rng = trial_rng(0, "bench", "poly", 4, 0)
polys = [random_polynomial(rng, 4, 4, 6) for _ in range(40)]
def products():
    for a in polys:
        for b in polys:
            a * b

rng = trial_rng(0, "bench", "bracket", 4, 0)
pairs = [(random_multivector(rng, 4, rng.randint(0, 4)), random_multivector(rng, 4, rng.randint(0, 4))) for _ in range(60)]
def brackets():
    for U, V in pairs:
        bracket(U, V)

cfg = SuiteConfig(dims=(3,), trials=5, suites=("cartan",))
def cartan():
    run_suites(cfg)

R = {repeat}
print(json.dumps({{"backend": snbracket.BACKEND, "products": best(products, R), "brackets": best(brackets, R), "cartan": best(cartan, R)}}))
"""


def run(pure, repeat):
    env = dict(os.environ)
    env.pop("SN_PURE_PYTHON", None)
    if pure:
        env["SN_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", WORKLOAD.format(repeat=repeat)], env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast, slow = run(False, args.repeat), run(True, args.repeat)
    if fast["backend"] != "cython":
        print("note: compiled kernels not available, both runs use the fallback")
    print(f"{'workload':<10} {fast['backend']:>10} {'python':>10} {'speedup':>8}")
    for key in ("products", "brackets", "cartan"):
        print(f"{key:<10} {fast[key]:>9.3f}s {slow[key]:>9.3f}s {slow[key] / fast[key]:>7.2f}x")


if __name__ == "__main__":
    main()
