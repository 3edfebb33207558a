"""Seeded random inputs for the identity suites.

Coefficients are integers in ``[-3, 3]``, monomials have total degree at most
``coeff_degree`` and each basis index carries at most three terms.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .exterior import Form, Multivector
from .geometry import PolyMap
from .ring import Polynomial

__all__ = [
    "trial_rng",
    "random_polynomial",
    "random_multivector",
    "random_form",
    "random_vector_field",
    "random_one_form",
    "random_nilpotent_linear",
    "random_invertible_linear",
    "random_shear",
    "random_invertible_map",
]

COEFF_RANGE = 3
MAX_TERMS = 3


def trial_rng(seed, *path) -> random.Random:
    """Independent stream for one trial; depends only on ``seed`` and ``path``."""
    return random.Random("/".join(str(p) for p in (seed,) + path))


def random_monomial(rng, dim, degree):
    m = [0] * dim
    for _ in range(rng.randint(0, degree)):
        m[rng.randrange(dim)] += 1
    return tuple(m)


def random_polynomial(rng, dim, degree=3, max_terms=MAX_TERMS) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        m = random_monomial(rng, dim, degree)
        terms[m] = terms.get(m, 0) + rng.randint(-COEFF_RANGE, COEFF_RANGE)
    return Polynomial(dim, terms)


def _random_graded(cls, rng, dim, degree, coeff_degree):
    return cls(dim, degree, {I: random_polynomial(rng, dim, coeff_degree) for I in combinations(range(1, dim + 1), degree)})


def random_multivector(rng, dim, degree, coeff_degree=3) -> Multivector:
    return _random_graded(Multivector, rng, dim, degree, coeff_degree)


def random_form(rng, dim, degree, coeff_degree=3) -> Form:
    return _random_graded(Form, rng, dim, degree, coeff_degree)


def random_vector_field(rng, dim, coeff_degree=3) -> Multivector:
    return random_multivector(rng, dim, 1, coeff_degree)


def random_one_form(rng, dim, coeff_degree=3) -> Form:
    return random_form(rng, dim, 1, coeff_degree)


def random_nilpotent_linear(rng, dim) -> Multivector:
    """``X = sum_i (A x)_i e_i`` with ``A`` strictly triangular up to a relabelling."""
    perm = list(range(dim))
    rng.shuffle(perm)
    A = [[0] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            A[perm[i]][perm[j]] = rng.randint(-COEFF_RANGE, COEFF_RANGE)
    xs = [Polynomial.var(dim, j) for j in range(1, dim + 1)]
    comps = {}
    for i in range(dim):
        p = Polynomial.zero(dim)
        for j in range(dim):
            if A[i][j]:
                p = p + xs[j] * A[i][j]
        comps[(i + 1,)] = p
    return Multivector(dim, 1, comps)


def random_invertible_linear(rng, dim):
    """``(phi, phi_inverse)`` built from random elementary row operations."""
    M = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    Minv = [row[:] for row in M]
    for _ in range(rng.randint(1, 2 * dim)):
        kind = rng.choice(("add", "scale", "swap")) if dim > 1 else "scale"
        if kind == "add":
            i, j = rng.sample(range(dim), 2)
            c = rng.choice([-2, -1, 1, 2])
            # E = I + c e_ij ; M <- E M ; Minv <- Minv E^-1
            M[i] = [a + c * b for a, b in zip(M[i], M[j])]
            for row in Minv:
                row[j] -= c * row[i]
        elif kind == "scale":
            i = rng.randrange(dim)
            c = Fraction(rng.choice([-2, -1, 2])) ** rng.choice([1, -1])
            M[i] = [a * c for a in M[i]]
            for row in Minv:
                row[i] /= c
        else:
            i, j = rng.sample(range(dim), 2)
            M[i], M[j] = M[j], M[i]
            for row in Minv:
                row[i], row[j] = row[j], row[i]
    return PolyMap.linear(M), PolyMap.linear(Minv)


def random_shear(rng, dim, degree=2):
    """Triangular map ``x_i -> x_i + p_i(x_{i+1}, ..., x_n)`` and its polynomial inverse."""
    shifts = []
    for i in range(dim):
        later = dim - i - 1
        if later and rng.random() < 0.7:
            q = random_polynomial(rng, later, degree, max_terms=2)
            shifts.append(q.extend(dim, offset=i + 1))
        else:
            shifts.append(Polynomial.zero(dim))
    xs = [Polynomial.var(dim, i) for i in range(1, dim + 1)]
    fwd = [x + s for x, s in zip(xs, shifts)]
    inv = [None] * dim
    for i in reversed(range(dim)):
        # x_i = y_i - p_i(x_{i+1}, ...), with later x already expressed in y
        subs = [Polynomial.zero(dim)] * (i + 1) + inv[i + 1:]
        inv[i] = xs[i] - shifts[i].substitute(subs)
    return PolyMap(dim, dim, tuple(fwd)), PolyMap(dim, dim, tuple(inv))


def random_invertible_map(rng, dim, kind=None):
    """Linear, shear, or their composite, with exact inverse."""
    kind = kind or rng.choice(("linear", "shear", "both"))
    if kind == "linear":
        return random_invertible_linear(rng, dim)
    if kind == "shear":
        return random_shear(rng, dim)
    L, Linv = random_invertible_linear(rng, dim)
    S, Sinv = random_shear(rng, dim)
    return L.compose(S), Sinv.compose(Linv)
