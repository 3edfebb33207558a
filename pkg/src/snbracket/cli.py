"""``sn``: command-line front end for the bracket library and the identity suites.

Exit codes: 0 success, 1 a negative verdict (not Poisson, not related, failing
identities), 2 input error, 3 bracket method disagreement.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import parser as P
from .calculus import TestScope, ext_deriv, lie_diff
from .errors import MethodDisagreement, SNError
from .exterior import Form, Multivector, insert_form, insert_mv, pair, wedge
from .geometry import pullback, related
from .poisson import is_poisson
from .ring import Polynomial
from .schouten import BracketConvention, bracket
from .suites import SUITES, VARIANTS, SuiteConfig, format_results, run_suites

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2, 3


def _json_value(value):
    if isinstance(value, Polynomial):
        return {"kind": "polynomial", "dim": value.dim, "value": value.to_string()}
    if isinstance(value, bool):
        return {"result": value}
    return value.to_json()


def _emit(args, value):
    if args.json:
        print(json.dumps(_json_value(value), sort_keys=False))
    elif isinstance(value, bool):
        print("true" if value else "false")
    else:
        print(P.print_canonical(value))


def _mv(args, text):
    return P.parse(text, args.dim, "multivector")


def _form(args, text):
    return P.parse(text, args.dim, "form")


def cmd_bracket(args):
    U, V = _mv(args, args.U), _mv(args, args.V)
    _emit(args, bracket(U, V, method=args.method, convention=args.convention))
    return EXIT_OK


def cmd_poisson(args):
    B = _mv(args, args.P)
    extra = None
    if args.with_:
        extra = tuple(P.parse_polynomial(t, args.dim) for t in args.with_)
    report = is_poisson(B, TestScope(args.dim, trials=args.trials, seed=args.seed), extra)
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        print(report.to_text())
    return EXIT_OK if report.poisson else EXIT_NEGATIVE


def cmd_identities(args):
    dims = tuple(args.dims) if args.dims else (1, 2, 3, 4)
    suites = tuple(args.suite) if args.suite else SUITES
    cfg = SuiteConfig(
        dims=dims,
        max_mv_degree=args.max_degree,
        coeff_degree=args.coeff_degree,
        form_degree=args.form_degree,
        trials=args.trials,
        seed=args.seed,
        suites=suites,
        variant=args.variant,
    )
    if cfg.trials == 0:
        print("warning: trials=0, every identity passes vacuously", file=sys.stderr)
    results = run_suites(cfg, jobs=args.jobs)
    if args.json:
        out = {
            "seed": cfg.seed,
            "trials": cfg.trials,
            "identities": [
                {
                    "name": r.key,
                    "runs": r.runs,
                    "failures": r.failures,
                    "counterexample": None if r.first is None else {"dim": r.first[0], "trial": r.first[1], "inputs": r.first[2]},
                }
                for r in results.values()
            ],
        }
        print(json.dumps(out))
    else:
        print(format_results(results, cfg))
    return EXIT_OK if all(r.passed for r in results.values()) else EXIT_NEGATIVE


def cmd_wedge(args):
    a, b = P.parse(args.a, args.dim), P.parse(args.b, args.dim)
    if isinstance(a, Polynomial) and isinstance(b, Polynomial):
        _emit(args, a * b)
    else:
        _emit(args, wedge(a, b))
    return EXIT_OK


def cmd_d(args):
    _emit(args, ext_deriv(_form(args, args.omega)))
    return EXIT_OK


def cmd_insert(args):
    _emit(args, insert_mv(_mv(args, args.U), _form(args, args.omega)))
    return EXIT_OK


def cmd_iota(args):
    _emit(args, insert_form(_form(args, args.omega), _mv(args, args.U)))
    return EXIT_OK


def cmd_pair(args):
    a, b = P.parse(args.a, args.dim), P.parse(args.b, args.dim)
    _emit(args, pair(a, b))
    return EXIT_OK


def cmd_lie(args):
    _emit(args, lie_diff(_mv(args, args.U), _form(args, args.omega)))
    return EXIT_OK


def _map(args):
    return P.parse_map(args.map, args.dim, args.target_dim)


def cmd_pullback(args):
    phi = _map(args)
    _emit(args, pullback(phi, P.parse(args.omega, phi.dst, "form")))
    return EXIT_OK


def cmd_related(args):
    phi = _map(args)
    U = P.parse(args.U, phi.src, "multivector")
    U2 = P.parse(args.U2, phi.dst, "multivector")
    verdict = related(phi, U, U2)
    _emit(args, verdict)
    return EXIT_OK if verdict else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sn", description="Exact Schouten-Nijenhuis bracket calculator.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, *positionals, dim=True):
        p = sub.add_parser(name, help=help_)
        if dim:
            p.add_argument("--dim", type=int, required=True, help="chart dimension")
        p.add_argument("--json", action="store_true", help="emit JSON")
        for pos in positionals:
            p.add_argument(pos)
        p.set_defaults(func=fn)
        return p

    p = add("bracket", cmd_bracket, "bracket of two multivector fields", "U", "V")
    p.add_argument("--method", choices=("direct", "tulczyjew", "both"), default="both")
    p.add_argument("--convention", choices=[c.value for c in BracketConvention], default="koszul")

    p = add("poisson", cmd_poisson, "decide whether a bivector is Poisson", "P")
    p.add_argument("--with", dest="with_", nargs=3, metavar=("F", "G", "H"), help="also sample this triple")
    p.add_argument("--trials", type=int, default=100, help="random function triples to sample")
    p.add_argument("--seed", type=int, default=0)

    p = add("identities", cmd_identities, "run the seeded identity suites", dim=False)
    p.add_argument("--dims", type=int, nargs="+", help="dimensions to test (default 1 2 3 4)")
    p.add_argument("--suite", action="append", choices=SUITES, help="restrict to a suite (repeatable)")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=None, help="largest multivector degree (default dim)")
    p.add_argument("--coeff-degree", type=int, default=3)
    p.add_argument("--form-degree", type=int, default=None, help="largest test-form degree (default dim)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--variant", choices=VARIANTS, default=None, help=argparse.SUPPRESS)

    add("wedge", cmd_wedge, "wedge product", "a", "b")
    add("d", cmd_d, "exterior derivative", "omega")
    add("insert", cmd_insert, "insertion i(U) omega", "U", "omega")
    add("iota", cmd_iota, "contraction of a multivector by a form", "omega", "U")
    add("pair", cmd_pair, "pairing of a form with a multivector", "a", "b")
    add("lie", cmd_lie, "Lie differential L(U) omega", "U", "omega")
    for name, fn, pos in (("pullback", cmd_pullback, ("map", "omega")), ("related", cmd_related, ("map", "U", "U2"))):
        p = add(name, fn, f"{name} along a polynomial map 'p1; p2; ...'", *pos)
        p.add_argument("--target-dim", type=int, default=None, help="number of map components (checked)")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    env_seed = os.environ.get("SN_SEED")
    if env_seed is not None and hasattr(args, "seed"):
        try:
            args.seed = int(env_seed)
        except ValueError:
            print(f"error: SN_SEED must be an integer, got {env_seed!r}", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args)
    except MethodDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"direct:    {exc.direct}", file=sys.stderr)
        print(f"tulczyjew: {exc.tulczyjew}", file=sys.stderr)
        return EXIT_DISAGREE
    except (SNError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
