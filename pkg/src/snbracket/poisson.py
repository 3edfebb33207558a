"""Poisson brackets from bivectors and the criterion ``[P, P] = 0``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .calculus import TestScope, differential
from .errors import DegreeError, DimensionError
from .exterior import Multivector, as_multivector, pair, wedge
from .ring import Polynomial, monomials_upto
from .schouten import bracket, bracket_direct

__all__ = [
    "PoissonCandidate",
    "PoissonReport",
    "poisson_bracket",
    "jacobiator",
    "schouten_square",
    "iterated_function_bracket",
    "triple_identity_check",
    "is_poisson",
    "jacobi_on_monomials",
]


@dataclass(frozen=True)
class PoissonCandidate:
    P: Multivector

    def __post_init__(self):
        if not isinstance(self.P, Multivector) or self.P.degree != 2:
            raise DegreeError("a Poisson candidate must be a degree-2 multivector")

    @property
    def dim(self):
        return self.P.dim


def _bivector(P) -> Multivector:
    if isinstance(P, PoissonCandidate):
        return P.P
    return PoissonCandidate(P).P


def _check_dims(P, *fs):
    for f in fs:
        if f.dim != P.dim:
            raise DimensionError(f"function on dim {f.dim}, bivector on dim {P.dim}")


def poisson_bracket(P, f: Polynomial, g: Polynomial) -> Polynomial:
    """``{f, g} = <df ^ dg, P>``."""
    P = _bivector(P)
    _check_dims(P, f, g)
    return pair(wedge(differential(f), differential(g)), P)


def jacobiator(P, f: Polynomial, g: Polynomial, h: Polynomial) -> Polynomial:
    P = _bivector(P)
    _check_dims(P, f, g, h)
    br = lambda a, b: poisson_bracket(P, a, b)  # noqa: E731
    return br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))


def schouten_square(P) -> Multivector:
    P = _bivector(P)
    return bracket(P, P, "both")


def iterated_function_bracket(W: Multivector, *fs: Polynomial) -> Multivector:
    """``[f_k, ... [f_2, [f_1, W]]]`` for functions ``f_1..f_k``."""
    out = as_multivector(W)
    for f in fs:
        out = bracket_direct(Multivector.from_polynomial(f), out)
    return out


def triple_identity_check(P, f, g, h) -> bool:
    """Check the two identities linking ``[P, P]`` to the Jacobiator.

    ``[h,[g,[f,[P,P]]]] = -2 * jacobiator(f, g, h)`` and
    ``[h,[g,[f,[P,P]]]] = -<df ^ dg ^ dh, [P,P]>``. Both hold for every
    bivector, Poisson or not.
    """
    P = _bivector(P)
    _check_dims(P, f, g, h)
    PP = schouten_square(P)
    nested = iterated_function_bracket(PP, f, g, h).as_polynomial()
    paired = pair(wedge(wedge(differential(f), differential(g)), differential(h)), PP)
    return nested == -2 * jacobiator(P, f, g, h) and nested == -paired


def jacobi_on_monomials(P, degree: int):
    """First monomial triple (up to ``degree``) with nonzero Jacobiator, else ``None``.

    The Jacobiator is alternating and trilinear, so unordered triples of distinct
    monomials cover the whole span.
    """
    P = _bivector(P)
    monos = [m for m in monomials_upto(P.dim, degree) if not m.is_constant()]
    for f, g, h in combinations(monos, 3):
        j = jacobiator(P, f, g, h)
        if j:
            return (f, g, h, j)
    return None


@dataclass
class PoissonReport:
    bivector: Multivector
    schouten_square: Multivector
    poisson: bool
    samples: list = field(default_factory=list)  # (f, g, h, jacobiator)

    def to_json(self) -> dict:
        return {
            "poisson": self.poisson,
            "schouten_square": self.schouten_square.to_json(),
            "jacobiator_samples": [
                {"f": f.to_string(), "g": g.to_string(), "h": h.to_string(), "value": j.to_string()}
                for f, g, h, j in self.samples
            ],
        }

    def to_text(self) -> str:
        lines = [
            f"P = {self.bivector}",
            f"[P,P] = {self.schouten_square}",
            f"verdict: {'poisson' if self.poisson else 'not poisson'}",
        ]
        nonzero = [s for s in self.samples if s[3]]
        lines.append(f"jacobiator samples: {len(self.samples)}, nonzero: {len(nonzero)}")
        for f, g, h, j in nonzero[:5]:
            lines.append(f"jacobiator({f}, {g}, {h}) = {j}")
        return "\n".join(lines)


def _random_function(rng: random.Random, dim: int, degree: int) -> Polynomial:
    from .randgen import random_polynomial

    p = random_polynomial(rng, dim, degree)
    # a constant has zero differential and makes the sample vacuous
    return p if not p.is_constant() else p + Polynomial.var(dim, rng.randint(1, dim))


def is_poisson(P, scope: TestScope | None = None, extra=None) -> PoissonReport:
    """Decide ``[P, P] = 0`` and sample Jacobiators on coordinate and random triples."""
    P = _bivector(P)
    scope = scope or TestScope(P.dim)
    PP = schouten_square(P)
    samples = []
    dim = P.dim
    for i, j, k in combinations(range(1, dim + 1), 3):
        f, g, h = (Polynomial.var(dim, a) for a in (i, j, k))
        samples.append((f, g, h, jacobiator(P, f, g, h)))
    if extra is not None:
        f, g, h = extra
        samples.append((f, g, h, jacobiator(P, f, g, h)))
    rng = random.Random(f"{scope.seed}/poisson")
    for _ in range(scope.trials):
        f, g, h = (_random_function(rng, dim, scope.coeff_degree) for _ in range(3))
        samples.append((f, g, h, jacobiator(P, f, g, h)))
    return PoissonReport(P, PP, PP.is_zero(), samples)
