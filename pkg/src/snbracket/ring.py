"""Exact multivariate polynomials over the rationals.

Polynomials are immutable. Terms are stored as a dict from exponent tuples to
nonzero coefficients (``int`` when integral, ``fractions.Fraction`` otherwise),
so equality of polynomials is equality of their term maps.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from . import kernels as K
from .errors import DimensionError

__all__ = ["Polynomial", "add", "mul", "partial", "substitute", "format_rational", "monomials_upto"]


def _coerce_coeff(c):
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, (Fraction, Rational, str)):
        return K.normalize(Fraction(c))
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


def format_rational(c) -> str:
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def _grlex_key(m):
    # descending total degree, then descending lexicographic exponents
    return (-sum(m), tuple(-e for e in m))


class Polynomial:
    """Polynomial in the chart variables ``x1..x{dim}`` with rational coefficients."""

    __slots__ = ("dim", "_terms", "_hash")

    def __init__(self, dim: int, terms: Mapping[Sequence[int], object] | None = None):
        if not isinstance(dim, int) or dim < 1:
            raise DimensionError(f"dimension must be a positive integer, got {dim!r}")
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != dim or any(e < 0 for e in m):
                raise DimensionError(f"bad exponent vector {m} for dim {dim}")
            c = _coerce_coeff(c)
            if c:
                clean[m] = K.normalize(clean.get(m, 0) + c)
                if not clean[m]:
                    del clean[m]
        self.dim = dim
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, dim, terms):
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.dim = dim
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, dim: int) -> "Polynomial":
        return cls._raw(dim, {})

    @classmethod
    def const(cls, dim: int, c) -> "Polynomial":
        c = _coerce_coeff(c)
        return cls._raw(dim, {(0,) * dim: c} if c else {})

    @classmethod
    def one(cls, dim: int) -> "Polynomial":
        return cls._raw(dim, {(0,) * dim: 1})

    @classmethod
    def var(cls, dim: int, i: int) -> "Polynomial":
        """The coordinate function ``x_i`` (1-based)."""
        if not 1 <= i <= dim:
            raise DimensionError(f"variable x{i} out of range for dim {dim}")
        m = [0] * dim
        m[i - 1] = 1
        return cls._raw(dim, {tuple(m): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): c})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[tuple, object]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0,) * self.dim in self._terms)

    def constant_value(self):
        return self._terms.get((0,) * self.dim, 0)

    def total_degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i - 1] for m in self._terms), default=-1)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.dim == other.dim and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, frozenset(self._terms.items())))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.dim != self.dim:
                raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.const(self.dim, other)
        return None

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return Polynomial._raw(self.dim, K.add(self._terms, o._terms))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return Polynomial._raw(self.dim, K.sub(self._terms, o._terms))

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return Polynomial._raw(self.dim, K.sub(o._terms, self._terms))

    def __neg__(self):
        return Polynomial._raw(self.dim, {m: -c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if other.dim != self.dim:
                raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
            return Polynomial._raw(self.dim, K.mul(self._terms, other._terms))
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial._raw(self.dim, K.scale(self._terms, _coerce_coeff(other)))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.one(self.dim)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def partial(self, i: int) -> "Polynomial":
        if not 1 <= i <= self.dim:
            raise DimensionError(f"partial index {i} out of range for dim {self.dim}")
        return Polynomial._raw(self.dim, K.partial(self._terms, i - 1))

    def substitute(self, phi: Sequence["Polynomial"]) -> "Polynomial":
        """Compose with a polynomial map: replace ``x_i`` by ``phi[i-1]``."""
        if len(phi) != self.dim:
            raise DimensionError(f"substitution needs {self.dim} polynomials, got {len(phi)}")
        dims = {q.dim for q in phi}
        if len(dims) != 1:
            raise DimensionError("substituted polynomials must share a dimension")
        m_dim = dims.pop()
        powers = [[{(0,) * m_dim: 1}] for _ in range(self.dim)]

        def power(i, e):
            cache = powers[i]
            while len(cache) <= e:
                cache.append(K.mul(cache[-1], phi[i]._terms))
            return cache[e]

        acc = {}
        for m, c in self._terms.items():
            t = {(0,) * m_dim: c}
            for i, e in enumerate(m):
                if e:
                    t = K.mul(t, power(i, e))
                    if not t:
                        break
            K.add_into(acc, t)
        return Polynomial._raw(m_dim, K.finalize(acc))

    def evaluate(self, point: Sequence) -> object:
        total = 0
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * x**e
            total += v
        return K.normalize(Fraction(total)) if isinstance(total, Fraction) else total

    def extend(self, new_dim: int, offset: int = 0) -> "Polynomial":
        """Re-embed into ``new_dim`` variables, shifting variable ``x_i`` to ``x_{i+offset}``."""
        if new_dim < self.dim + offset:
            raise DimensionError("target dimension too small")
        pad_l = (0,) * offset
        pad_r = (0,) * (new_dim - self.dim - offset)
        return Polynomial._raw(new_dim, {pad_l + m + pad_r: c for m, c in self._terms.items()})

    # -- text ---------------------------------------------------------------

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.dim}, {self.to_string()!r})"

    def to_string(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, (m, c) in enumerate(self.items()):
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}**{e}" for i, e in enumerate(m) if e
            )
            neg = c < 0
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{format_rational(a)}*{mono}"
            else:
                body = format_rational(a)
            if k == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def partial(p: Polynomial, i: int) -> Polynomial:
    return p.partial(i)


def substitute(p: Polynomial, phi: Sequence[Polynomial]) -> Polynomial:
    return p.substitute(phi)


def monomials_upto(dim: int, degree: int) -> list[Polynomial]:
    """All monic monomials of total degree ``<= degree``, in canonical order."""
    out = []

    def rec(prefix, left, slots):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for e in range(left, -1, -1):
            rec(prefix + [e], left - e, slots - 1)

    rec([], degree, dim)
    exps = sorted(out, key=_grlex_key)
    return [Polynomial._raw(dim, {m: 1}) for m in exps]


def linear_combination(dim: int, pairs: Iterable[tuple[object, Polynomial]]) -> Polynomial:
    acc = {}
    for c, p in pairs:
        K.add_into(acc, p._terms, c)
    return Polynomial._raw(dim, K.finalize(acc))
