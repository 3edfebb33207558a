"""Schouten-Nijenhuis bracket of multivector fields.

Two independent constructions are provided:

``bracket_direct``
    expands each basis term ``f e_{i1}^...^e_{iu}`` as the wedge of the vector
    field ``f e_{i1}`` with coordinate fields and applies the double-sum formula
    for decomposables, with ``[f, U] = -iota(df) U`` for functions.

``bracket_tulczyjew``
    reads the component on ``dx_J`` off the pairing formula
    ``<[U,V], dw> = -<V, d i(U) dw> + (-1)^((u-1)(v-1)) <U, d i(V) dw>``
    with the constant exact forms ``dw = dx_J``.

Results are in the Koszul sign convention; the other conventions are output
scalings applied by :func:`bracket`.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import combinations

from . import kernels as K
from .calculus import (
    FormOperator,
    TestScope,
    d_op,
    differential,
    ext_deriv,
    graded_commutator,
    i_op,
    lie_op,
    operator_equal,
)
from .errors import DimensionError, MethodDisagreement
from .exterior import Form, Multivector, _finalize_terms, as_multivector, insert_form, insert_mv, pair, wedge
from .ring import Polynomial

__all__ = [
    "BracketConvention",
    "TestScope",
    "bracket",
    "bracket_direct",
    "bracket_tulczyjew",
    "convention_factor",
    "convert",
    "lie_derivative_identity_check",
    "operator_formula",
]


class BracketConvention(str, enum.Enum):
    KOSZUL = "koszul"
    TULCZYJEW = "tulczyjew"
    LICHNEROWICZ = "lichnerowicz"


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def convention_factor(convention, u: int, v: int) -> int:
    """Factor ``c`` with ``bracket_conv(U, V) = c * bracket_koszul(U, V)``."""
    convention = BracketConvention(convention)
    if convention is BracketConvention.KOSZUL:
        return 1
    if convention is BracketConvention.TULCZYJEW:
        return -_sign((u - 1) * (v - 1))
    return _sign(u - 1)


def convert(value: Multivector, u: int, v: int, source, target) -> Multivector:
    """Re-express a bracket of degree-``u`` and degree-``v`` fields in another convention."""
    c = convention_factor(source, u, v) * convention_factor(target, u, v)
    return value if c == 1 else -value


@lru_cache(maxsize=None)
def _sort_sign(seq: tuple):
    """Sign of the permutation sorting ``seq`` and the sorted tuple; ``(0, None)`` on repeats."""
    if len(set(seq)) != len(seq):
        return 0, None
    inv = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                inv += 1
    return (-1 if inv % 2 else 1), tuple(sorted(seq))


def _accumulate(acc, seq, a, b, c):
    s, idx = _sort_sign(seq)
    if s:
        raw = acc.get(idx)
        if raw is None:
            raw = acc[idx] = {}
        K.addmul_into(raw, a, b, s * c)


def _function_bracket(f: Polynomial, V: Multivector) -> Multivector:
    # [f, V] = -iota(df) V
    return -insert_form(differential(f), V)


def bracket_direct(U, V) -> Multivector:
    U = as_multivector(U)
    V = as_multivector(V)
    if U.dim != V.dim:
        raise DimensionError(f"dimension mismatch: {U.dim} vs {V.dim}")
    dim, u, v = U.dim, U.degree, V.degree
    degree = u + v - 1
    if degree < 0 or degree > dim or not U or not V:
        return Multivector.zero(dim, degree)
    if u == 0:
        return _function_bracket(U.as_polynomial(), V)
    if v == 0:
        # graded antisymmetry with a degree-0 argument: [U, g] = (-1)^u [g, U]
        res = _function_bracket(V.as_polynomial(), U)
        return -res if u % 2 else res
    acc = {}
    for I, f in U._terms.items():
        ft = f._terms
        a, Ir = I[0], I[1:]
        for J, g in V._terms.items():
            gt = g._terms
            b, Jr = J[0], J[1:]
            # [f e_a, g e_b] = f d_a(g) e_b - g d_b(f) e_a
            dag = K.partial(gt, a - 1)
            if dag:
                _accumulate(acc, (b,) + Ir + Jr, ft, dag, 1)
            dbf = K.partial(ft, b - 1)
            if dbf:
                _accumulate(acc, (a,) + Ir + Jr, gt, dbf, -1)
            # [f e_a, e_j] = -d_j(f) e_a for the coordinate factors of V
            for p in range(1, len(J)):
                djf = K.partial(ft, J[p] - 1)
                if djf:
                    _accumulate(acc, (a,) + Ir + J[:p] + J[p + 1:], djf, gt, -_sign(p))
            # [e_i, g e_b] = d_i(g) e_b for the coordinate factors of U
            for q in range(1, len(I)):
                dig = K.partial(gt, I[q] - 1)
                if dig:
                    _accumulate(acc, (b,) + I[:q] + I[q + 1:] + Jr, ft, dig, _sign(q))
    return Multivector._raw(dim, degree, _finalize_terms(dim, acc))


def bracket_tulczyjew(U, V) -> Multivector:
    U = as_multivector(U)
    V = as_multivector(V)
    if U.dim != V.dim:
        raise DimensionError(f"dimension mismatch: {U.dim} vs {V.dim}")
    dim, u, v = U.dim, U.degree, V.degree
    degree = u + v - 1
    if degree < 0 or degree > dim or not U or not V:
        return Multivector.zero(dim, degree)
    s = _sign((u - 1) * (v - 1))
    terms = {}
    for J in combinations(range(1, dim + 1), degree):
        dxJ = Form._raw(dim, degree, {J: Polynomial.one(dim)})
        c = pair(ext_deriv(insert_mv(U, dxJ)), V)
        c = -c
        other = pair(ext_deriv(insert_mv(V, dxJ)), U)
        c = c + other if s == 1 else c - other
        if c:
            terms[J] = c
    return Multivector._raw(dim, degree, terms)


def bracket(U, V, method: str = "both", convention=BracketConvention.KOSZUL) -> Multivector:
    """Schouten bracket by the chosen method, scaled to ``convention``.

    With ``method="both"`` the two constructions are compared exactly and
    :class:`MethodDisagreement` is raised if they differ.
    """
    U = as_multivector(U)
    V = as_multivector(V)
    if method == "direct":
        res = bracket_direct(U, V)
    elif method == "tulczyjew":
        res = bracket_tulczyjew(U, V)
    elif method == "both":
        res = bracket_direct(U, V)
        other = bracket_tulczyjew(U, V)
        if res != other:
            raise MethodDisagreement(
                f"direct and tulczyjew brackets differ for [{U}, {V}]: {res} vs {other}",
                direct=res,
                tulczyjew=other,
            )
    else:
        raise ValueError(f"unknown bracket method {method!r}")
    return convert(res, U.degree, V.degree, BracketConvention.KOSZUL, convention)


def operator_formula(U, V) -> FormOperator:
    """``-i(V)d i(U) + (-1)^((u-1)(v-1)) i(U)d i(V) + (-1)^v d i(U^V) + (-1)^u i(U^V) d``."""
    U = as_multivector(U)
    V = as_multivector(V)
    u, v = U.degree, V.degree
    d = d_op(U.dim)
    UV = i_op(wedge(U, V))
    return (
        -(i_op(V) @ d @ i_op(U))
        + _sign((u - 1) * (v - 1)) * (i_op(U) @ d @ i_op(V))
        + _sign(v) * (d @ UV)
        + _sign(u) * (UV @ d)
    )


def lie_derivative_identity_check(U, V, scope: TestScope) -> bool:
    """Check ``[L(U), i(V)] = -i([V,U])`` and ``[L(U), L(V)] = -L([V,U])`` on ``scope``."""
    U = as_multivector(U)
    V = as_multivector(V)
    s = _sign((U.degree - 1) * (V.degree - 1))
    UV = bracket(U, V)
    VU = bracket(V, U)
    LU, LV = lie_op(U), lie_op(V)
    checks = [
        (graded_commutator(LU, i_op(V)), s * i_op(UV)),
        (graded_commutator(LU, i_op(V)), -i_op(VU)),
        (graded_commutator(LU, LV), s * lie_op(UV)),
        (graded_commutator(LU, LV), -lie_op(VU)),
    ]
    return all(operator_equal(a, b, scope) for a, b in checks)
