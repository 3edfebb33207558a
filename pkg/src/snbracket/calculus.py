"""Exterior derivative, Lie differential and a small algebra of form operators.

Operator identities are decided by :func:`operator_equal`, which evaluates both
sides on the spanning family ``m * dx_I`` (``m`` a monic monomial). Every
operator here is linear over the constants and maps polynomial forms to
polynomial forms, so agreement on the family is exact agreement on the span.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from . import kernels as K
from .errors import DegreeError, DimensionError
from .exterior import Form, Multivector, _finalize_terms, as_form, as_multivector, insert_mv, wedge
from .ring import Polynomial, monomials_upto

__all__ = [
    "TestScope",
    "FormOperator",
    "ext_deriv",
    "differential",
    "lie_bracket_vf",
    "lie_diff",
    "graded_commutator",
    "operator_equal",
    "operator_counterexample",
    "spanning_family",
    "d_op",
    "i_op",
    "mu_op",
    "lie_op",
    "zero_op",
]


@dataclass(frozen=True)
class TestScope:
    """Size of the form family and random sample used by identity checks."""

    __test__ = False  # not a pytest class

    dim: int
    max_mv_degree: int | None = None
    coeff_degree: int = 3
    form_degree: int | None = None
    trials: int = 100
    seed: int = 0

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("scope dimension must be positive")
        if self.coeff_degree < 0 or self.trials < 0:
            raise ValueError("scope sizes must be non-negative")

    @property
    def mv_degree(self) -> int:
        return self.dim if self.max_mv_degree is None else self.max_mv_degree

    @property
    def forms_upto(self) -> int:
        return self.dim if self.form_degree is None else min(self.form_degree, self.dim)


def ext_deriv(omega) -> Form:
    omega = as_form(omega)
    dim = omega.dim
    degree = omega.degree + 1
    if degree > dim or not omega:
        return Form.zero(dim, degree)
    acc = {}
    for I, f in omega._terms.items():
        for j in range(1, dim + 1):
            s, merged = K.merge_sign((j,), I)
            if not s:
                continue
            df = K.partial(f._terms, j - 1)
            if df:
                raw = acc.get(merged)
                if raw is None:
                    raw = acc[merged] = {}
                K.add_into(raw, df, s)
    return Form._raw(dim, degree, _finalize_terms(dim, acc))


def differential(f: Polynomial) -> Form:
    return ext_deriv(Form.from_polynomial(f))


def lie_bracket_vf(X: Multivector, Y: Multivector) -> Multivector:
    """Bracket of vector fields, component ``i`` = ``sum_j X^j d_j Y^i - Y^j d_j X^i``."""
    if X.degree != 1 or Y.degree != 1:
        raise DegreeError("lie_bracket_vf needs two vector fields")
    if X.dim != Y.dim:
        raise DimensionError(f"dimension mismatch: {X.dim} vs {Y.dim}")
    dim = X.dim
    acc = {}
    for (j,), xj in X._terms.items():
        for (i,), yi in Y._terms.items():
            K.addmul_into(acc.setdefault((i,), {}), xj._terms, K.partial(yi._terms, j - 1))
    for (j,), yj in Y._terms.items():
        for (i,), xi in X._terms.items():
            K.addmul_into(acc.setdefault((i,), {}), yj._terms, K.partial(xi._terms, j - 1), -1)
    return Multivector._raw(dim, 1, _finalize_terms(dim, acc))


def lie_diff(U, omega) -> Form:
    """``L(U) omega = i(U) d omega - (-1)^u d i(U) omega``."""
    U = as_multivector(U)
    omega = as_form(omega)
    if U.dim != omega.dim:
        raise DimensionError(f"dimension mismatch: {U.dim} vs {omega.dim}")
    first = insert_mv(U, ext_deriv(omega))
    second = ext_deriv(insert_mv(U, omega))
    return first + second if U.degree % 2 else first - second


class FormOperator:
    """A constant-linear map on forms that shifts degree by ``homogeneity``."""

    __slots__ = ("dim", "homogeneity", "action", "name")

    def __init__(self, dim: int, homogeneity: int, action: Callable[[Form], Form], name: str = "op"):
        self.dim = dim
        self.homogeneity = homogeneity
        self.action = action
        self.name = name

    def __call__(self, omega) -> Form:
        omega = as_form(omega)
        if omega.dim != self.dim:
            raise DimensionError(f"operator on dim {self.dim} applied to dim {omega.dim} form")
        target = omega.degree + self.homogeneity
        if not omega or target < 0 or target > self.dim:
            return Form.zero(self.dim, target)
        out = self.action(omega)
        if out.degree != target and out:
            raise DegreeError(f"{self.name} produced degree {out.degree}, expected {target}")
        return out if out.degree == target else Form.zero(self.dim, target)

    def __repr__(self):
        return f"<FormOperator {self.name} dim={self.dim} hom={self.homogeneity:+d}>"

    def _check(self, other):
        if not isinstance(other, FormOperator):
            return False
        if other.dim != self.dim:
            raise DimensionError(f"operators on dims {self.dim} and {other.dim}")
        return True

    def __matmul__(self, other: "FormOperator") -> "FormOperator":
        """Composition ``self o other``."""
        if not self._check(other):
            return NotImplemented
        return FormOperator(
            self.dim,
            self.homogeneity + other.homogeneity,
            lambda w: self(other(w)),
            f"{self.name}.{other.name}",
        )

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        if other.homogeneity != self.homogeneity:
            raise DegreeError("cannot add operators of different homogeneity")
        return FormOperator(self.dim, self.homogeneity, lambda w: self(w) + other(w), f"({self.name}+{other.name})")

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        if other.homogeneity != self.homogeneity:
            raise DegreeError("cannot subtract operators of different homogeneity")
        return FormOperator(self.dim, self.homogeneity, lambda w: self(w) - other(w), f"({self.name}-{other.name})")

    def __neg__(self):
        return FormOperator(self.dim, self.homogeneity, lambda w: -self(w), f"-{self.name}")

    def __rmul__(self, c):
        if not isinstance(c, (int, Polynomial)) and not hasattr(c, "denominator"):
            return NotImplemented
        if c == 1:
            return self
        if c == -1:
            return -self
        return FormOperator(self.dim, self.homogeneity, lambda w: self(w) * c, f"{c}*{self.name}")


def d_op(dim: int) -> FormOperator:
    return FormOperator(dim, 1, ext_deriv, "d")


def i_op(U) -> FormOperator:
    U = as_multivector(U)
    return FormOperator(U.dim, -U.degree, lambda w: insert_mv(U, w), f"i[{U}]")


def mu_op(omega) -> FormOperator:
    omega = as_form(omega)
    return FormOperator(omega.dim, omega.degree, lambda w: wedge(omega, w), f"mu[{omega}]")


def lie_op(U) -> FormOperator:
    U = as_multivector(U)
    return FormOperator(U.dim, 1 - U.degree, lambda w: lie_diff(U, w), f"L[{U}]")


def zero_op(dim: int, homogeneity: int) -> FormOperator:
    return FormOperator(dim, homogeneity, lambda w: Form.zero(dim, w.degree + homogeneity), "0")


def graded_commutator(A: FormOperator, B: FormOperator) -> FormOperator:
    """``[A, B] = A o B - (-1)^(|A||B|) B o A``."""
    if A.dim != B.dim:
        raise DimensionError(f"operators on dims {A.dim} and {B.dim}")
    odd = (A.homogeneity * B.homogeneity) % 2

    def action(w):
        left = A(B(w))
        right = B(A(w))
        return left + right if odd else left - right

    return FormOperator(A.dim, A.homogeneity + B.homogeneity, action, f"[{A.name},{B.name}]")


def spanning_family(dim: int, coeff_degree: int, form_degree: int) -> Iterator[Form]:
    """Forms ``m * dx_I`` with ``deg m <= coeff_degree`` and ``|I| <= form_degree``."""
    monos = monomials_upto(dim, coeff_degree)
    for k in range(min(form_degree, dim) + 1):
        for I in combinations(range(1, dim + 1), k):
            for m in monos:
                yield Form._raw(dim, k, {I: m})


def operator_counterexample(A: FormOperator, B: FormOperator, scope: TestScope):
    """First spanning-family form on which ``A`` and ``B`` differ, else ``None``."""
    if A.dim != B.dim:
        raise DimensionError(f"operators on dims {A.dim} and {B.dim}")
    if A.homogeneity != B.homogeneity:
        raise DegreeError(f"homogeneity mismatch: {A.homogeneity} vs {B.homogeneity}")
    for w in spanning_family(A.dim, scope.coeff_degree, scope.forms_upto):
        a, b = A(w), B(w)
        if a._terms != b._terms:
            return w
    return None


def operator_equal(A: FormOperator, B: FormOperator, scope: TestScope) -> bool:
    return operator_counterexample(A, B, scope) is None
