"""Text syntax for polynomials, multivectors, forms and maps.

Grammar (``^`` is the wedge product, ``**`` the power of a scalar)::

    expr  := sum
    sum   := prod (('+' | '-') prod)*
    prod  := wedge ('*' wedge)*
    wedge := unary ('^' unary)*
    unary := '-' unary | power
    power := atom ('**' INT)*
    atom  := RATIONAL | 'x' INT | 'e' INT | 'dx' INT | '(' expr ')'

``RATIONAL`` is ``INT`` or ``INT/INT`` written without spaces. ``*`` needs a
scalar on at least one side. Wedge operands must share variance, except that
scalars may appear on either side.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DimensionError, ParseError
from .exterior import Form, Multivector, _Graded, wedge
from .ring import Polynomial

__all__ = ["parse", "parse_polynomial", "parse_map", "print_canonical"]

_TOKEN = re.compile(
    r"\s*(?:(?P<rat>\d+/\d+|\d+)|(?P<dx>dx\d+)|(?P<x>x\d+)|(?P<e>e\d+)|(?P<op>\*\*|[-+*^()]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text, dim):
        self.text = text
        self.dim = dim
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, value):
        kind, val, pos = self.take()
        if kind != "op" or val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos, self.text)

    def error(self, msg, pos):
        return ParseError(msg, pos, self.text)

    # -- grammar ------------------------------------------------------------

    def parse(self):
        value = self.sum()
        kind, val, pos = self.peek()
        if kind != "end":
            raise self.error(f"unexpected {val!r}", pos)
        return value

    def sum(self):
        left = self.prod()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "+-" and val:
                self.take()
                right = self.prod()
                left = self.combine(left, right, val, pos)
            else:
                return left

    def prod(self):
        left = self.wedge()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                right = self.wedge()
                left = self.times(left, right, pos)
            else:
                return left

    def wedge(self):
        left = self.unary()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "^":
                self.take()
                right = self.unary()
                if isinstance(left, _Graded) and isinstance(right, _Graded) and type(left) is not type(right):
                    raise self.error(f"cannot wedge {left.kind} with {right.kind}", pos)
                left = wedge(left, right)
            else:
                return left

    def unary(self):
        kind, val, pos = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "**":
                self.take()
                ekind, eval_, epos = self.take()
                if ekind != "rat" or "/" in eval_:
                    raise self.error("exponent must be a non-negative integer", epos)
                if not isinstance(base, Polynomial):
                    raise self.error(f"'**' needs a scalar base, got a {base.kind}", pos)
                base = base ** int(eval_)
            else:
                return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "rat":
            num, _, den = val.partition("/")
            if den and int(den) == 0:
                raise self.error("division by zero", pos)
            return Polynomial.const(self.dim, Fraction(int(num), int(den or 1)))
        if kind in ("x", "e", "dx"):
            idx = int(val[len(kind):])
            if not 1 <= idx <= self.dim:
                raise ParseError(f"index {idx} in {val!r} out of range for dim {self.dim}", pos, self.text)
            if kind == "x":
                return Polynomial.var(self.dim, idx)
            cls = Multivector if kind == "e" else Form
            return cls.basis(self.dim, (idx,))
        if kind == "op" and val == "(":
            value = self.sum()
            self.expect_op(")")
            return value
        raise self.error(f"unexpected {val or 'end of input'!r}", pos)

    # -- typing -------------------------------------------------------------

    def combine(self, left, right, op, pos):
        if isinstance(left, Polynomial) and isinstance(right, Polynomial):
            return left + right if op == "+" else left - right
        lg, rg = isinstance(left, _Graded), isinstance(right, _Graded)
        if lg and rg and type(left) is not type(right):
            raise self.error(f"cannot add {left.kind} and {right.kind}", pos)
        a = left if lg else type(right).from_polynomial(left)
        b = right if rg else type(left).from_polynomial(right)
        if a.degree != b.degree and a and b:
            raise self.error(f"cannot add degree {a.degree} and degree {b.degree} {a.kind}s", pos)
        return a + b if op == "+" else a - b

    def times(self, left, right, pos):
        if isinstance(left, Polynomial):
            return right * left if isinstance(right, _Graded) else left * right
        if isinstance(right, Polynomial):
            return left * right
        if left.degree == 0:
            return wedge(left, right) if type(left) is type(right) else right * left.as_polynomial()
        if right.degree == 0:
            return left * right.as_polynomial()
        raise self.error(f"'*' needs a scalar operand; use '^' to wedge a {left.kind} and a {right.kind}", pos)


def parse(text: str, dim: int, kind: str | None = None):
    """Parse ``text`` on a ``dim``-dimensional chart.

    Returns a :class:`Polynomial` for scalar expressions, otherwise a
    :class:`Multivector` or :class:`Form`. With ``kind`` set to
    ``"multivector"`` or ``"form"`` a scalar result is promoted to degree 0 and
    any other mismatch raises :class:`ParseError`.
    """
    if not isinstance(dim, int) or dim < 1:
        raise DimensionError(f"dimension must be a positive integer, got {dim!r}")
    if not isinstance(text, str):
        raise ParseError("expression must be a string")
    value = _Parser(text, dim).parse()
    if kind is None:
        return value
    target = {"multivector": Multivector, "form": Form, "polynomial": Polynomial}[kind]
    if isinstance(value, target):
        return value
    if isinstance(value, Polynomial):
        return target.from_polynomial(value)
    if target is Polynomial and value.degree == 0:
        return value.as_polynomial()
    raise ParseError(f"expected a {kind}, got a {value.kind}", 0, text)


def parse_polynomial(text: str, dim: int) -> Polynomial:
    return parse(text, dim, kind="polynomial")


def parse_map(text: str, src: int, dst: int | None = None):
    """Parse ``"p1; p2; ..."`` into a :class:`~snbracket.geometry.PolyMap` from dim ``src``."""
    from .geometry import PolyMap

    comps = [parse_polynomial(part, src) for part in text.split(";")]
    if dst is not None and len(comps) != dst:
        raise ParseError(f"map needs {dst} components, got {len(comps)}", 0, text)
    return PolyMap(src, len(comps), tuple(comps))


def print_canonical(value) -> str:
    if isinstance(value, (Polynomial, _Graded)):
        return value.to_string()
    if hasattr(value, "components"):
        return "; ".join(c.to_string() for c in value.components)
    raise TypeError(f"cannot print {type(value).__name__}")
