"""Seeded identity suites: every algebraic law the library promises, as a check.

Each identity is a function ``check(rng, dim, cfg)`` returning ``None`` on
success or a replayable description of the inputs on failure. The random
stream for a trial depends only on ``(seed, suite, identity, dim, trial)``, so
results do not depend on scheduling or the number of workers.
"""

from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable

from .calculus import (
    TestScope,
    d_op,
    differential,
    ext_deriv,
    graded_commutator,
    i_op,
    lie_bracket_vf,
    lie_diff,
    lie_op,
    mu_op,
    operator_counterexample,
    zero_op,
)
from .exterior import Form, Multivector, insert_form, insert_mv, one_form, pair, wedge
from .geometry import FlowFamily, PolyMap, flow_lie_derivative, pullback, pushforward_invertible, related
from .oracles import insertion_by_permutations, lie_bracket_by_action, superbracket
from .poisson import iterated_function_bracket, jacobi_on_monomials, poisson_bracket, schouten_square
from .randgen import (
    random_form,
    random_invertible_map,
    random_multivector,
    random_nilpotent_linear,
    random_one_form,
    random_polynomial,
    random_vector_field,
    trial_rng,
)
from .ring import Polynomial
from .schouten import BracketConvention, bracket, bracket_direct, bracket_tulczyjew, convert, operator_formula

__all__ = ["SuiteConfig", "SUITES", "IDENTITIES", "run_suites", "IdentityResult", "VARIANTS"]

SUITES = ("exterior", "cartan", "schouten", "poisson", "naturality", "flow", "conventions")

# sign variants that can be swapped in to demonstrate that the suite catches them
VARIANTS = ("jacobi_u_exponent", "leibniz_shifted_exponent")


def _sign(e):
    return -1 if e % 2 else 1


@dataclass(frozen=True)
class SuiteConfig:
    dims: tuple = (1, 2, 3, 4)
    max_mv_degree: int | None = None
    coeff_degree: int = 3
    form_degree: int | None = None
    trials: int = 100
    seed: int = 0
    suites: tuple = SUITES
    variant: str | None = None

    def __post_init__(self):
        if not self.suites:
            raise ValueError("at least one suite must be selected")
        unknown = set(self.suites) - set(SUITES)
        if unknown:
            raise ValueError(f"unknown suites: {sorted(unknown)}")
        if self.variant is not None and self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")

    def mv_degree(self, dim):
        return dim if self.max_mv_degree is None else min(self.max_mv_degree, dim)

    def scope(self, dim) -> TestScope:
        return TestScope(dim, self.max_mv_degree, self.coeff_degree, self.form_degree, self.trials, self.seed)


@dataclass(frozen=True)
class Identity:
    suite: str
    name: str
    check: Callable
    max_dim: int = 4
    min_dim: int = 1
    once: bool = False  # exhaustive check, run a single time per dimension


IDENTITIES: dict[str, Identity] = {}


def identity(suite, name=None, max_dim=4, min_dim=1, once=False):
    def deco(fn):
        key = f"{suite}.{name or fn.__name__}"
        IDENTITIES[key] = Identity(suite, name or fn.__name__, fn, max_dim, min_dim, once)
        return fn

    return deco


def _fmt(**values):
    return "; ".join(f"{k} = {v}" for k, v in values.items())


def _rand_deg(rng, dim, cfg):
    return rng.randint(0, cfg.mv_degree(dim))


def _mv(rng, dim, cfg, degree=None):
    degree = _rand_deg(rng, dim, cfg) if degree is None else degree
    return random_multivector(rng, dim, degree, cfg.coeff_degree)


def _form(rng, dim, cfg, degree=None):
    degree = rng.randint(0, dim) if degree is None else degree
    return random_form(rng, dim, degree, cfg.coeff_degree)


def _op_check(A, B, dim, cfg, **inputs):
    w = operator_counterexample(A, B, cfg.scope(dim))
    if w is None:
        return None
    return _fmt(**inputs, form=w)


# ---------------------------------------------------------------------------
# exterior


@identity("exterior")
def wedge_graded_commutative(rng, dim, cfg):
    cls = rng.choice((Multivector, Form))
    a, b = rng.randint(0, dim), rng.randint(0, dim)
    A = random_multivector(rng, dim, a, cfg.coeff_degree) if cls is Multivector else random_form(rng, dim, a, cfg.coeff_degree)
    B = random_multivector(rng, dim, b, cfg.coeff_degree) if cls is Multivector else random_form(rng, dim, b, cfg.coeff_degree)
    if wedge(A, B) != wedge(B, A) * _sign(a * b):
        return _fmt(a=A, b=B)


@identity("exterior")
def wedge_associative(rng, dim, cfg):
    degs = [rng.randint(0, dim) for _ in range(3)]
    A, B, C = (_form(rng, dim, cfg, k) for k in degs)
    if wedge(wedge(A, B), C) != wedge(A, wedge(B, C)):
        return _fmt(a=A, b=B, c=C)


@identity("exterior")
def insert_mv_adjoint(rng, dim, cfg):
    u = rng.randint(0, dim)
    v = rng.randint(0, dim - u)
    U, V = _mv(rng, dim, cfg, u), _mv(rng, dim, cfg, v)
    w = _form(rng, dim, cfg, u + v)
    if pair(insert_mv(U, w), V) != pair(w, wedge(U, V)):
        return _fmt(U=U, V=V, omega=w)


@identity("exterior")
def insert_form_adjoint(rng, dim, cfg):
    p = rng.randint(0, dim)
    k = rng.randint(0, dim - p)
    w, phi = _form(rng, dim, cfg, p), _form(rng, dim, cfg, k)
    U = _mv(rng, dim, cfg, p + k)
    if pair(phi, insert_form(w, U)) != pair(wedge(w, phi), U):
        return _fmt(omega=w, phi=phi, U=U)


@identity("exterior")
def insert_of_function(rng, dim, cfg):
    f = random_polynomial(rng, dim, cfg.coeff_degree)
    w = _form(rng, dim, cfg)
    if insert_mv(Multivector.from_polynomial(f), w) != w * f:
        return _fmt(f=f, omega=w)


@identity("exterior")
def insert_of_wedge(rng, dim, cfg):
    U, V, w = _mv(rng, dim, cfg), _mv(rng, dim, cfg), _form(rng, dim, cfg)
    if insert_mv(wedge(U, V), w) != insert_mv(V, insert_mv(U, w)):
        return _fmt(U=U, V=V, omega=w)


@identity("exterior")
def insert_one_form_derivation(rng, dim, cfg):
    U = _mv(rng, dim, cfg)
    w = random_one_form(rng, dim, cfg.coeff_degree)
    psi = _form(rng, dim, cfg)
    lhs = insert_mv(U, wedge(w, psi))
    rhs = insert_mv(insert_form(w, U), psi) + wedge(w, insert_mv(U, psi)) * _sign(U.degree)
    if lhs != rhs:
        return _fmt(U=U, omega=w, psi=psi)


@identity("exterior")
def shuffle_vs_permutations(rng, dim, cfg):
    k = rng.randint(0, dim)
    u = rng.randint(0, k)
    covs = [random_one_form(rng, dim, 1) for _ in range(k)]
    U = random_multivector(rng, dim, u, 1)
    prod = Form.from_polynomial(Polynomial.one(dim))
    for c in covs:
        prod = wedge(prod, c)
    if insert_mv(U, prod) != insertion_by_permutations(U, covs):
        return _fmt(U=U, covectors=", ".join(map(str, covs)))


@identity("exterior", once=True)
def shuffle_vs_permutations_basis(rng, dim, cfg):
    """Every basis multivector against every ordered product of distinct ``dx_i``."""
    basis = [Form.basis(dim, (i,)) for i in range(1, dim + 1)]
    for k in range(dim + 1):
        for seq in permutations(range(dim), k):
            covs = [basis[i] for i in seq]
            prod = Form.from_polynomial(Polynomial.one(dim))
            for c in covs:
                prod = wedge(prod, c)
            for u in range(k + 1):
                for I in combinations(range(1, dim + 1), u):
                    U = Multivector.basis(dim, I)
                    if insert_mv(U, prod) != insertion_by_permutations(U, covs):
                        return _fmt(U=U, covectors=", ".join(map(str, covs)))


# ---------------------------------------------------------------------------
# cartan: operator identities on the spanning family


@identity("cartan", max_dim=3)
def d_squared_zero(rng, dim, cfg):
    d = d_op(dim)
    return _op_check(d @ d, zero_op(dim, 2), dim, cfg)


@identity("cartan", max_dim=3)
def insertions_commute(rng, dim, cfg):
    U, V = _mv(rng, dim, cfg), _mv(rng, dim, cfg)
    return _op_check(graded_commutator(i_op(U), i_op(V)), zero_op(dim, -U.degree - V.degree), dim, cfg, U=U, V=V)


@identity("cartan", max_dim=3)
def insert_wedge_composition(rng, dim, cfg):
    U, V = _mv(rng, dim, cfg), _mv(rng, dim, cfg)
    return _op_check(i_op(wedge(U, V)), i_op(V) @ i_op(U), dim, cfg, U=U, V=V)


@identity("cartan", max_dim=3)
def insert_mu_commutator(rng, dim, cfg):
    U = _mv(rng, dim, cfg)
    w = random_one_form(rng, dim, cfg.coeff_degree)
    return _op_check(graded_commutator(i_op(U), mu_op(w)), i_op(insert_form(w, U)), dim, cfg, U=U, omega=w)


@identity("cartan", max_dim=3)
def lie_is_commutator(rng, dim, cfg):
    U = _mv(rng, dim, cfg)
    return _op_check(lie_op(U), graded_commutator(i_op(U), d_op(dim)), dim, cfg, U=U)


@identity("cartan", max_dim=3)
def lie_of_wedge(rng, dim, cfg):
    U, V = _mv(rng, dim, cfg), _mv(rng, dim, cfg)
    rhs = i_op(V) @ lie_op(U) + _sign(U.degree) * (lie_op(V) @ i_op(U))
    return _op_check(lie_op(wedge(U, V)), rhs, dim, cfg, U=U, V=V)


@identity("cartan", max_dim=3)
def lie_of_decomposable(rng, dim, cfg):
    u = rng.randint(1, cfg.mv_degree(dim)) if cfg.mv_degree(dim) else 1
    Xs = [random_vector_field(rng, dim, cfg.coeff_degree) for _ in range(u)]
    prod = Xs[0]
    for X in Xs[1:]:
        prod = wedge(prod, X)
    rhs = zero_op(dim, 1 - u)
    for j in range(1, u + 1):
        term = lie_op(Xs[j - 1])
        for X in Xs[j:]:  # i(X_u) ... i(X_{j+1}) on the left
            term = i_op(X) @ term
        for X in reversed(Xs[: j - 1]):  # i(X_{j-1}) ... i(X_1) on the right
            term = term @ i_op(X)
        rhs = rhs + _sign(j - 1) * term
    return _op_check(lie_op(prod), rhs, dim, cfg, fields=", ".join(map(str, Xs)))


@identity("cartan", max_dim=3)
def lie_of_function(rng, dim, cfg):
    f = random_polynomial(rng, dim, cfg.coeff_degree)
    return _op_check(lie_op(f), -mu_op(differential(f)), dim, cfg, f=f)


@identity("cartan", max_dim=3)
def lie_commutes_with_d(rng, dim, cfg):
    U = _mv(rng, dim, cfg)
    return _op_check(graded_commutator(lie_op(U), d_op(dim)), zero_op(dim, 2 - U.degree), dim, cfg, U=U)


@identity("cartan", max_dim=3)
def lie_insert_commutator(rng, dim, cfg):
    U, V = _mv(rng, dim, cfg), _mv(rng, dim, cfg)
    s = _sign((U.degree - 1) * (V.degree - 1))
    lhs = graded_commutator(lie_op(U), i_op(V))
    return _op_check(lhs, s * i_op(bracket(U, V)), dim, cfg, U=U, V=V) or _op_check(
        lhs, -i_op(bracket(V, U)), dim, cfg, U=U, V=V
    )


@identity("cartan", max_dim=3)
def lie_lie_commutator(rng, dim, cfg):
    U, V = _mv(rng, dim, cfg), _mv(rng, dim, cfg)
    s = _sign((U.degree - 1) * (V.degree - 1))
    lhs = graded_commutator(lie_op(U), lie_op(V))
    return _op_check(lhs, s * lie_op(bracket(U, V)), dim, cfg, U=U, V=V) or _op_check(
        lhs, -lie_op(bracket(V, U)), dim, cfg, U=U, V=V
    )


@identity("cartan", max_dim=3)
def insert_bracket_formula(rng, dim, cfg):
    U, V = _mv(rng, dim, cfg), _mv(rng, dim, cfg)
    return _op_check(i_op(bracket(U, V)), operator_formula(U, V), dim, cfg, U=U, V=V)


@identity("cartan", max_dim=3)
def lie_mu_df_commutator(rng, dim, cfg):
    U = _mv(rng, dim, cfg)
    f = random_polynomial(rng, dim, cfg.coeff_degree)
    df = differential(f)
    return _op_check(graded_commutator(lie_op(U), mu_op(df)), -lie_op(insert_form(df, U)), dim, cfg, U=U, f=f)


# ---------------------------------------------------------------------------
# schouten


@identity("schouten")
def cross_method(rng, dim, cfg):
    """One random pair for every degree combination."""
    D = cfg.mv_degree(dim)
    for u in range(D + 1):
        for v in range(D + 1):
            U, V = _mv(rng, dim, cfg, u), _mv(rng, dim, cfg, v)
            if bracket_direct(U, V) != bracket_tulczyjew(U, V):
                return _fmt(U=U, V=V)


@identity("schouten")
def odd_variable_oracle(rng, dim, cfg):
    U, V = _mv(rng, dim, cfg), _mv(rng, dim, cfg)
    if U.degree + V.degree == 0:
        return None
    if bracket(U, V) != superbracket(U, V):
        return _fmt(U=U, V=V)


@identity("schouten")
def vector_field_bracket(rng, dim, cfg):
    X, Y = random_vector_field(rng, dim, cfg.coeff_degree), random_vector_field(rng, dim, cfg.coeff_degree)
    b = bracket(X, Y)
    if b != lie_bracket_vf(X, Y) or b != lie_bracket_by_action(X, Y):
        return _fmt(X=X, Y=Y)


@identity("schouten")
def function_clause(rng, dim, cfg):
    f = random_polynomial(rng, dim, cfg.coeff_degree)
    U = _mv(rng, dim, cfg)
    if bracket(Multivector.from_polynomial(f), U) != -insert_form(differential(f), U):
        return _fmt(f=f, U=U)


@identity("schouten", max_dim=3)
def graded_antisymmetry(rng, dim, cfg):
    U, V = _mv(rng, dim, cfg), _mv(rng, dim, cfg)
    if bracket(U, V) != -_sign((U.degree - 1) * (V.degree - 1)) * bracket(V, U):
        return _fmt(U=U, V=V)


@identity("schouten", max_dim=3)
def graded_jacobi(rng, dim, cfg):
    U, V, W = _mv(rng, dim, cfg), _mv(rng, dim, cfg), _mv(rng, dim, cfg)
    u, v = U.degree, V.degree
    e = u * (v - 1) if cfg.variant == "jacobi_u_exponent" else (u - 1) * (v - 1)
    B = bracket_direct
    if B(U, B(V, W)) != B(B(U, V), W) + _sign(e) * B(V, B(U, W)):
        return _fmt(U=U, V=V, W=W)


@identity("schouten", max_dim=3)
def leibniz(rng, dim, cfg):
    U, V, W = _mv(rng, dim, cfg), _mv(rng, dim, cfg), _mv(rng, dim, cfg)
    u, v = U.degree, V.degree
    e = (u - 1) * (v - 1) if cfg.variant == "leibniz_shifted_exponent" else (u - 1) * v
    B = bracket_direct
    if B(U, wedge(V, W)) != wedge(B(U, V), W) + _sign(e) * wedge(V, B(U, W)):
        return _fmt(U=U, V=V, W=W)


@identity("schouten", max_dim=3)
def iota_df_derivation(rng, dim, cfg):
    U, V = _mv(rng, dim, cfg), _mv(rng, dim, cfg)
    f = random_polynomial(rng, dim, cfg.coeff_degree)
    df = differential(f)
    lhs = insert_form(df, bracket(U, V))
    rhs = bracket(insert_form(df, U), V) + _sign(U.degree - 1) * bracket(U, insert_form(df, V))
    if lhs != rhs:
        return _fmt(f=f, U=U, V=V)


# ---------------------------------------------------------------------------
# conventions


@identity("conventions")
def convention_round_trip(rng, dim, cfg):
    U, V = _mv(rng, dim, cfg), _mv(rng, dim, cfg)
    k = bracket(U, V)
    for conv in BracketConvention:
        there = bracket(U, V, convention=conv)
        back = convert(there, U.degree, V.degree, conv, BracketConvention.KOSZUL)
        if back != k or convert(k, U.degree, V.degree, BracketConvention.KOSZUL, conv) != there:
            return _fmt(U=U, V=V, convention=conv.value)


@identity("conventions")
def tulczyjew_is_swapped_koszul(rng, dim, cfg):
    U, V = _mv(rng, dim, cfg), _mv(rng, dim, cfg)
    if bracket(U, V, convention="tulczyjew") != bracket(V, U):
        return _fmt(U=U, V=V)


@identity("conventions")
def lichnerowicz_antisymmetry(rng, dim, cfg):
    U, V = _mv(rng, dim, cfg), _mv(rng, dim, cfg)
    u, v = U.degree, V.degree
    lhs = bracket(U, V, convention="lichnerowicz")
    if lhs != bracket(V, U, convention="lichnerowicz") * _sign(u * v):
        return _fmt(U=U, V=V)


# ---------------------------------------------------------------------------
# poisson


@identity("poisson", min_dim=2, max_dim=3)
def poisson_triple_identity(rng, dim, cfg):
    P = random_multivector(rng, dim, 2, min(cfg.coeff_degree, 2))
    f, g, h = (random_polynomial(rng, dim, 2) + Polynomial.var(dim, 1 + (i % dim)) for i in range(3))
    PP = schouten_square(P)
    nested = iterated_function_bracket(PP, f, g, h)
    br = lambda a, b: poisson_bracket(P, a, b)  # noqa: E731
    jac = br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))
    paired = pair(wedge(wedge(differential(f), differential(g)), differential(h)), PP)
    if nested != -2 * jac or nested != -paired:
        return _fmt(P=P, f=f, g=g, h=h)


@identity("poisson", min_dim=2)
def poisson_bracket_is_iterated(rng, dim, cfg):
    P = random_multivector(rng, dim, 2, cfg.coeff_degree)
    f, g = random_polynomial(rng, dim, cfg.coeff_degree), random_polynomial(rng, dim, cfg.coeff_degree)
    if poisson_bracket(P, f, g) != iterated_function_bracket(P, f, g):
        return _fmt(P=P, f=f, g=g)


@identity("poisson", min_dim=2)
def poisson_bracket_antisymmetric(rng, dim, cfg):
    P = random_multivector(rng, dim, 2, cfg.coeff_degree)
    f, g = random_polynomial(rng, dim, cfg.coeff_degree), random_polynomial(rng, dim, cfg.coeff_degree)
    if poisson_bracket(P, f, g) != -poisson_bracket(P, g, f):
        return _fmt(P=P, f=f, g=g)


@identity("poisson", min_dim=2, max_dim=3)
def poisson_criterion(rng, dim, cfg):
    """``[P,P] = 0`` exactly when all monomial Jacobiators vanish."""
    if rng.random() < 0.4:
        P = random_multivector(rng, dim, 2, 0)  # constant bivectors are Poisson
    else:
        P = random_multivector(rng, dim, 2, 1)
    square_zero = schouten_square(P).is_zero()
    found = jacobi_on_monomials(P, min(cfg.coeff_degree, 2))
    if square_zero != (found is None):
        return _fmt(P=P)


# ---------------------------------------------------------------------------
# naturality


def _map_pair(rng, dim):
    return random_invertible_map(rng, dim)


@identity("naturality", max_dim=3)
def pullback_functorial(rng, dim, cfg):
    phi, _ = _map_pair(rng, dim)
    psi, _ = _map_pair(rng, dim)
    w = _form(rng, dim, cfg)
    if pullback(phi.compose(psi), w) != pullback(psi, pullback(phi, w)):
        return _fmt(phi=_map_str(phi), psi=_map_str(psi), omega=w)


@identity("naturality", max_dim=3)
def pullback_wedge_and_d(rng, dim, cfg):
    phi, _ = _map_pair(rng, dim)
    a, b = _form(rng, dim, cfg), _form(rng, dim, cfg)
    if pullback(phi, wedge(a, b)) != wedge(pullback(phi, a), pullback(phi, b)):
        return _fmt(phi=_map_str(phi), a=a, b=b)
    if pullback(phi, ext_deriv(a)) != ext_deriv(pullback(phi, a)):
        return _fmt(phi=_map_str(phi), a=a)


@identity("naturality", max_dim=3)
def related_iff_insertion_intertwines(rng, dim, cfg):
    phi, psi = _map_pair(rng, dim)
    U = random_multivector(rng, dim, _rand_deg(rng, dim, cfg), 2)
    Up = pushforward_invertible(phi, psi, U)
    scope = TestScope(dim, coeff_degree=1)
    if not related(phi, U, Up, scope):
        return _fmt(phi=_map_str(phi), U=U)
    # a perturbed image is not related, and the insertion test must see it
    bump = Multivector.basis(dim, tuple(range(1, U.degree + 1)))
    if related(phi, U, Up + bump, scope):
        return _fmt(phi=_map_str(phi), U=U, perturbed=Up + bump)


@identity("naturality", max_dim=3)
def related_intertwines_lie(rng, dim, cfg):
    phi, psi = _map_pair(rng, dim)
    U = random_multivector(rng, dim, _rand_deg(rng, dim, cfg), 2)
    Up = pushforward_invertible(phi, psi, U)
    for w in _small_family(dim):
        if lie_diff(U, pullback(phi, w)) != pullback(phi, lie_diff(Up, w)):
            return _fmt(phi=_map_str(phi), U=U, form=w)


@identity("naturality", max_dim=3)
def bracket_naturality(rng, dim, cfg):
    phi, psi = _map_pair(rng, dim)
    U1 = random_multivector(rng, dim, _rand_deg(rng, dim, cfg), 2)
    U2 = random_multivector(rng, dim, _rand_deg(rng, dim, cfg), 2)
    V1, V2 = pushforward_invertible(phi, psi, U1), pushforward_invertible(phi, psi, U2)
    if not related(phi, bracket(U1, U2), bracket(V1, V2), cross_check=False):
        return _fmt(phi=_map_str(phi), U1=U1, U2=U2)


def _small_family(dim):
    from .calculus import spanning_family

    return spanning_family(dim, 1, dim)


def _map_str(phi: PolyMap):
    return "(" + "; ".join(map(str, phi.components)) + ")"


# ---------------------------------------------------------------------------
# flow


@identity("flow")
def flow_formula(rng, dim, cfg):
    X = random_nilpotent_linear(rng, dim)
    U = _mv(rng, dim, cfg)
    if flow_lie_derivative(X, U) != bracket(X, U):
        return _fmt(X=X, U=U)


@identity("flow")
def flow_solves_ode(rng, dim, cfg):
    X = random_nilpotent_linear(rng, dim)
    if not FlowFamily(X).satisfies_ode():
        return _fmt(X=X)


@identity("flow", max_dim=3)
def flow_group_law(rng, dim, cfg):
    X = random_nilpotent_linear(rng, dim)
    if not FlowFamily(X).group_law_holds():
        return _fmt(X=X)


# ---------------------------------------------------------------------------
# runner


@dataclass
class IdentityResult:
    key: str
    runs: int = 0
    failures: int = 0
    skipped_dims: list = field(default_factory=list)
    first: tuple | None = None  # (dim, trial, description)

    @property
    def passed(self):
        return self.failures == 0


def _run_block(args):
    key, dim, trials, cfg = args
    ident = IDENTITIES[key]
    out = []
    for t in trials:
        rng = trial_rng(cfg.seed, ident.suite, ident.name, dim, t)
        out.append((t, ident.check(rng, dim, cfg)))
    return key, dim, out


def _blocks(cfg):
    for key, ident in IDENTITIES.items():
        if ident.suite not in cfg.suites:
            continue
        for dim in cfg.dims:
            if not ident.min_dim <= dim <= ident.max_dim:
                continue
            n = min(cfg.trials, 1) if ident.once else cfg.trials
            yield key, dim, range(n), cfg


def run_suites(cfg: SuiteConfig, jobs: int = 1, keys=None) -> dict[str, IdentityResult]:
    results = {}
    for key, ident in IDENTITIES.items():
        if ident.suite in cfg.suites and (keys is None or key in keys):
            r = IdentityResult(key)
            r.skipped_dims = [d for d in cfg.dims if not ident.min_dim <= d <= ident.max_dim]
            results[key] = r
    blocks = [b for b in _blocks(cfg) if b[0] in results]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            outputs = list(pool.map(_run_block, blocks))
    else:
        outputs = map(_run_block, blocks)
    for key, dim, out in outputs:
        r = results[key]
        for t, failure in out:
            r.runs += 1
            if failure is not None:
                r.failures += 1
                if r.first is None or (dim, t) < r.first[:2]:
                    r.first = (dim, t, failure)
    return results


def format_results(results: dict[str, IdentityResult], cfg: SuiteConfig) -> str:
    lines = []
    width = max((len(k) for k in results), default=10)
    for suite in SUITES:
        keys = [k for k in results if k.startswith(suite + ".")]
        if not keys:
            continue
        lines.append(f"[{suite}]")
        for k in keys:
            r = results[k]
            status = "pass" if r.passed else "FAIL"
            lines.append(f"  {k:<{width}}  {r.runs - r.failures:>5}/{r.runs:<5} {status}")
            if r.first is not None:
                dim, t, desc = r.first
                lines.append(f"    first counterexample (dim {dim}, trial {t}): {desc}")
    total = len(results)
    failed = sum(not r.passed for r in results.values())
    lines.append(f"{total - failed}/{total} identities passed (seed {cfg.seed}, trials {cfg.trials})")
    return "\n".join(lines)


def warn(msg):
    print(f"warning: {msg}", file=sys.stderr)
