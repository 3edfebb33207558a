"""Independent reference computations used to cross-check the main code paths.

Nothing here calls the wedge, insertion or bracket routines it is meant to
check; only the polynomial ring is shared.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import factorial

from .exterior import Form, Multivector
from .ring import Polynomial

__all__ = ["perm_sign", "det", "insertion_by_permutations", "superbracket", "lie_bracket_by_action"]


def perm_sign(seq) -> int:
    """Sign of the permutation putting ``seq`` in increasing order (bubble sort count)."""
    seq = list(seq)
    swaps = 0
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                swaps += 1
    return -1 if swaps % 2 else 1


def det(rows, dim) -> Polynomial:
    n = len(rows)
    total = Polynomial.zero(dim)
    for p in permutations(range(n)):
        term = Polynomial.const(dim, perm_sign(p))
        for r, c in enumerate(p):
            term = term * rows[r][c]
        total = total + term
    return total


def _evaluate(U: Multivector, covectors) -> Polynomial:
    """``U(psi_1, ..., psi_u)`` by the determinant convention."""
    dim = U.dim
    total = Polynomial.zero(dim)
    for I, c in U.terms.items():
        rows = [[psi.coeff((i,)) for i in I] for psi in covectors]
        total = total + c * det(rows, dim)
    return total


def _wedge_of_covectors(covectors, dim) -> Form:
    k = len(covectors)
    terms = {}
    for K in combinations(range(1, dim + 1), k):
        rows = [[psi.coeff((j,)) for j in K] for psi in covectors]
        terms[K] = det(rows, dim)
    if k == 0:
        terms = {(): Polynomial.one(dim)}
    return Form(dim, k, terms)


def insertion_by_permutations(U: Multivector, covectors) -> Form:
    """``i(U)(phi_1 ^ ... ^ phi_k)`` as the normalised sum over all of ``S_k``."""
    dim = U.dim
    u = U.degree
    k = len(covectors)
    ell = k - u
    if ell < 0:
        return Form.zero(dim, ell)
    acc = Form.zero(dim, ell)
    for sigma in permutations(range(k)):
        head = [covectors[s] for s in sigma[:u]]
        tail = [covectors[s] for s in sigma[u:]]
        val = _evaluate(U, head)
        if val:
            acc = acc + _wedge_of_covectors(tail, dim) * (val * perm_sign(sigma))
    return acc * Fraction(1, factorial(u) * factorial(ell))


# -- odd-variable model of multivectors ------------------------------------
# A multivector is a polynomial in x and odd symbols xi_i with e_I <-> xi_I.


def _odd_product(I, J):
    if set(I) & set(J):
        return 0, None
    seq = I + J
    return perm_sign(seq), tuple(sorted(seq))


def _left_xi_derivative(terms, i):
    out = {}
    for I, c in terms.items():
        if i in I:
            p = I.index(i)
            out[I[:p] + I[p + 1:]] = c * (-1 if p % 2 else 1)
    return out


def _right_xi_derivative(terms, i):
    out = {}
    for I, c in terms.items():
        if i in I:
            p = I.index(i)
            out[I[:p] + I[p + 1:]] = c * (-1 if (len(I) - 1 - p) % 2 else 1)
    return out


def _x_derivative(terms, i):
    return {I: c.partial(i) for I, c in terms.items()}


def _odd_mul(A, B, dim):
    out = {}
    for I, a in A.items():
        for J, b in B.items():
            s, K = _odd_product(I, J)
            if s:
                out[K] = out.get(K, Polynomial.zero(dim)) + a * b * s
    return out


def superbracket(U: Multivector, V: Multivector) -> Multivector:
    """``sum_i (U d/dxi_i)(d/dx_i V) - (d/dx_i U)(d/dxi_i V)`` with right/left odd derivatives."""
    dim = U.dim
    A, B = U.terms, V.terms
    total = {}
    for i in range(1, dim + 1):
        for K, c in _odd_mul(_right_xi_derivative(A, i), _x_derivative(B, i), dim).items():
            total[K] = total.get(K, Polynomial.zero(dim)) + c
        for K, c in _odd_mul(_x_derivative(A, i), _left_xi_derivative(B, i), dim).items():
            total[K] = total.get(K, Polynomial.zero(dim)) - c
    return Multivector(dim, U.degree + V.degree - 1, {K: c for K, c in total.items() if c})


def lie_bracket_by_action(X: Multivector, Y: Multivector) -> Multivector:
    """Vector-field bracket read off ``[X,Y] x_i = X(Y x_i) - Y(X x_i)``."""
    dim = X.dim

    def apply(Z, f):
        out = Polynomial.zero(dim)
        for (j,), c in Z.terms.items():
            out = out + c * f.partial(j)
        return out

    comps = {}
    for i in range(1, dim + 1):
        xi = Polynomial.var(dim, i)
        c = apply(X, apply(Y, xi)) - apply(Y, apply(X, xi))
        if c:
            comps[(i,)] = c
    return Multivector(dim, 1, comps)
