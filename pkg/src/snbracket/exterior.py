"""Multivector fields, differential forms, wedge, pairing and insertions.

Both kinds of field are stored as a map from strictly increasing index tuples
to nonzero :class:`~snbracket.ring.Polynomial` coefficients. The tuple ``(1, 2)``
means ``e1^e2`` for a multivector and ``dx1^dx2`` for a form. Working on
increasing tuples means every alternating sum collapses to a sum over shuffles
with a sign, so no factorial normalisation ever appears.

A field whose degree is negative or exceeds ``dim`` is necessarily zero. Such
zero fields are still allowed so that operator compositions keep track of the
degree they would land in.
"""

from __future__ import annotations

from typing import Mapping

from . import kernels as K
from .errors import DegreeError, DimensionError, VarianceError
from .ring import Polynomial, _coerce_coeff

__all__ = [
    "Multivector",
    "Form",
    "wedge",
    "pair",
    "insert_mv",
    "insert_form",
    "as_multivector",
    "as_form",
    "vector_field",
    "one_form",
]


def _finalize_terms(dim, acc):
    out = {}
    for idx, raw in acc.items():
        t = K.finalize(raw)
        if t:
            out[idx] = Polynomial._raw(dim, t)
    return out


class _Graded:
    kind = "graded"
    _symbol = "?"

    __slots__ = ("dim", "degree", "_terms", "_hash")

    def __init__(self, dim: int, degree: int, terms: Mapping | None = None):
        if not isinstance(dim, int) or dim < 1:
            raise DimensionError(f"dimension must be a positive integer, got {dim!r}")
        clean = {}
        for idx, c in (terms or {}).items():
            idx = tuple(int(i) for i in idx)
            if len(idx) != degree:
                raise DegreeError(f"index {idx} does not have length {degree}")
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise DegreeError(f"index {idx} is not strictly increasing")
            if idx and (idx[0] < 1 or idx[-1] > dim):
                raise DimensionError(f"index {idx} out of range for dim {dim}")
            if not isinstance(c, Polynomial):
                c = Polynomial.const(dim, _coerce_coeff(c))
            elif c.dim != dim:
                raise DimensionError(f"coefficient has dim {c.dim}, expected {dim}")
            if c:
                prev = clean.get(idx)
                c = c if prev is None else prev + c
                if c:
                    clean[idx] = c
                else:
                    del clean[idx]
        self.dim = dim
        self.degree = degree
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, dim, degree, terms):
        obj = object.__new__(cls)
        obj.dim = dim
        obj.degree = degree
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, dim: int, degree: int):
        return cls._raw(dim, degree, {})

    @classmethod
    def basis(cls, dim: int, idx, coeff=None):
        idx = tuple(idx)
        sign, merged = 1, ()
        for i in idx:
            if not 1 <= i <= dim:
                raise DimensionError(f"basis index {i} out of range for dim {dim}")
            s, merged = K.merge_sign(merged, (i,))
            if not s:
                return cls.zero(dim, len(idx))
            sign *= s
        c = Polynomial.one(dim) if coeff is None else coeff
        if not isinstance(c, Polynomial):
            c = Polynomial.const(dim, c)
        return cls._raw(dim, len(idx), {merged: c * sign} if c else {})

    @classmethod
    def from_polynomial(cls, p: Polynomial):
        return cls._raw(p.dim, 0, {(): p} if p else {})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, idx) -> Polynomial:
        return self._terms.get(tuple(idx)) or Polynomial.zero(self.dim)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def as_polynomial(self) -> Polynomial:
        if self.degree != 0:
            raise DegreeError(f"degree {self.degree} {self.kind} is not a function")
        return self.coeff(())

    def max_coeff_degree(self) -> int:
        return max((c.total_degree() for c in self._terms.values()), default=-1)

    def __eq__(self, other):
        if type(other) is type(self):
            return self.dim == other.dim and self.degree == other.degree and self._terms == other._terms
        if isinstance(other, Polynomial) and self.degree == 0:
            return self.coeff(()) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.kind, self.dim, self.degree, frozenset(self._terms.items())))
        return self._hash

    # -- linear structure ---------------------------------------------------

    def _like(self, other):
        if isinstance(other, Polynomial) and self.degree == 0:
            other = type(self).from_polynomial(other)
        if type(other) is not type(self):
            if isinstance(other, _Graded):
                raise VarianceError(f"cannot combine {self.kind} with {other.kind}")
            return None
        if other.dim != self.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        if other.degree != self.degree and (self._terms or other._terms):
            raise DegreeError(f"degree mismatch: {self.degree} vs {other.degree}")
        return other

    def __add__(self, other):
        o = self._like(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for idx, c in o._terms.items():
            s = terms.get(idx)
            s = c if s is None else s + c
            if s:
                terms[idx] = s
            else:
                terms.pop(idx, None)
        degree = self.degree if self._terms or not o._terms else o.degree
        return type(self)._raw(self.dim, degree, terms)

    def __sub__(self, other):
        o = self._like(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __neg__(self):
        return type(self)._raw(self.dim, self.degree, {i: -c for i, c in self._terms.items()})

    def __mul__(self, other):
        """Scale by a function or a rational constant."""
        if isinstance(other, Polynomial):
            if other.dim != self.dim:
                raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
            if not other:
                return type(self).zero(self.dim, self.degree)
            terms = {}
            for idx, c in self._terms.items():
                p = c * other
                if p:
                    terms[idx] = p
            return type(self)._raw(self.dim, self.degree, terms)
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self * Polynomial.const(self.dim, other)
        return NotImplemented

    __rmul__ = __mul__

    def map_coeffs(self, fn):
        terms = {}
        for idx, c in self._terms.items():
            p = fn(c)
            if p:
                terms[idx] = p
        return type(self)._raw(self.dim, self.degree, terms)

    # -- text / json --------------------------------------------------------

    def _basis_string(self, idx):
        return "^".join(f"{self._symbol}{i}" for i in idx)

    def to_string(self) -> str:
        if not self._terms:
            return "0"
        if self.degree == 0:
            return self._terms[()].to_string()
        parts = []
        for k, (idx, c) in enumerate(self.items()):
            basis = self._basis_string(idx)
            lead = c.items()[0][1]
            if k > 0 and len(c) == 1 and lead < 0:
                parts.append(" - " + _term_string(-c, basis))
            else:
                parts.append((" + " if k else "") + _term_string(c, basis))
        return "".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, degree={self.degree}, {self.to_string()!r})"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "dim": self.dim,
            "degree": self.degree,
            "terms": [{"index": list(idx), "coeff": c.to_string()} for idx, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping):
        from .parser import parse_polynomial

        kind = data["kind"]
        target = {"multivector": Multivector, "form": Form}[kind]
        if cls is not _Graded and target is not cls:
            raise VarianceError(f"expected {cls.kind}, got {kind}")
        dim = int(data["dim"])
        terms = {tuple(t["index"]): parse_polynomial(t["coeff"], dim) for t in data["terms"]}
        return target(dim, int(data["degree"]), terms)


def _term_string(c: Polynomial, basis: str) -> str:
    if c == 1:
        return basis
    if len(c) == 1:
        return f"{c.to_string()}*{basis}"
    return f"({c.to_string()})*{basis}"


class Multivector(_Graded):
    """Degree-``u`` multivector field ``sum_I U_I e_I``."""

    kind = "multivector"
    _symbol = "e"
    __slots__ = ()


class Form(_Graded):
    """Degree-``k`` differential form ``sum_I w_I dx_I``."""

    kind = "form"
    _symbol = "dx"
    __slots__ = ()


def as_multivector(x) -> Multivector:
    if isinstance(x, Multivector):
        return x
    if isinstance(x, Polynomial):
        return Multivector.from_polynomial(x)
    raise VarianceError(f"expected a multivector, got {type(x).__name__}")


def as_form(x) -> Form:
    if isinstance(x, Form):
        return x
    if isinstance(x, Polynomial):
        return Form.from_polynomial(x)
    raise VarianceError(f"expected a form, got {type(x).__name__}")


def vector_field(components) -> Multivector:
    comps = list(components)
    dim = comps[0].dim
    return Multivector(dim, 1, {(i + 1,): c for i, c in enumerate(comps)})


def one_form(components) -> Form:
    comps = list(components)
    dim = comps[0].dim
    return Form(dim, 1, {(i + 1,): c for i, c in enumerate(comps)})


def _same_dim(a, b):
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")


def wedge(a, b):
    """Wedge product of two fields of the same variance (functions promote)."""
    if isinstance(a, Polynomial) and isinstance(b, Polynomial):
        return a * b
    if isinstance(a, Polynomial):
        a = type(b).from_polynomial(a)
    if isinstance(b, Polynomial):
        b = type(a).from_polynomial(b)
    if type(a) is not type(b):
        raise VarianceError(f"cannot wedge {a.kind} with {b.kind}")
    _same_dim(a, b)
    cls = type(a)
    degree = a.degree + b.degree
    if degree > a.dim or not a._terms or not b._terms:
        return cls.zero(a.dim, degree)
    acc = {}
    for I, p in a._terms.items():
        for J, q in b._terms.items():
            s, merged = K.merge_sign(I, J)
            if s:
                raw = acc.get(merged)
                if raw is None:
                    raw = acc[merged] = {}
                K.addmul_into(raw, p._terms, q._terms, s)
    return cls._raw(a.dim, degree, _finalize_terms(a.dim, acc))


def pair(omega, U) -> Polynomial:
    """Duality pairing ``<omega, U>``; zero when the degrees differ.

    The pairing is symmetric, so the arguments may be given in either order.
    """
    if isinstance(omega, Multivector) and isinstance(U, Form):
        omega, U = U, omega
    if isinstance(omega, Polynomial):
        omega = Form.from_polynomial(omega)
    if isinstance(U, Polynomial):
        U = Multivector.from_polynomial(U)
    if not isinstance(omega, Form) or not isinstance(U, Multivector):
        raise VarianceError("pair needs one form and one multivector")
    _same_dim(omega, U)
    if omega.degree != U.degree:
        return Polynomial.zero(omega.dim)
    acc = {}
    small, big = (omega._terms, U._terms) if len(omega._terms) <= len(U._terms) else (U._terms, omega._terms)
    for idx, p in small.items():
        q = big.get(idx)
        if q is not None:
            K.addmul_into(acc, p._terms, q._terms)
    return Polynomial._raw(omega.dim, K.finalize(acc))


def _contract(cls, A, B, dim, degree):
    """Coefficients of the contraction of ``B`` by ``A`` on complementary indices."""
    if degree < 0 or not A or not B:
        return cls.zero(dim, degree)
    acc = {}
    for I, p in A.items():
        sI = set(I)
        for L, q in B.items():
            if len(L) < len(I) or not sI.issubset(L):
                continue
            rest = tuple(x for x in L if x not in sI)
            s, _ = K.merge_sign(I, rest)
            raw = acc.get(rest)
            if raw is None:
                raw = acc[rest] = {}
            K.addmul_into(raw, p._terms, q._terms, s)
    return cls._raw(dim, degree, _finalize_terms(dim, acc))


def insert_mv(U, omega) -> Form:
    """Insertion ``i(U) omega``, the adjoint of ``V -> U ^ V`` under :func:`pair`."""
    U = as_multivector(U)
    omega = as_form(omega)
    _same_dim(U, omega)
    return _contract(Form, U._terms, omega._terms, U.dim, omega.degree - U.degree)


def insert_form(omega, U) -> Multivector:
    """Contraction of a multivector by a form, adjoint of ``phi -> omega ^ phi``."""
    omega = as_form(omega)
    U = as_multivector(U)
    _same_dim(U, omega)
    return _contract(Multivector, omega._terms, U._terms, U.dim, U.degree - omega.degree)
