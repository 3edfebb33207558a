"""Polynomial maps between charts: pullback, relatedness, naturality, flows.

Exact flows are available for linear vector fields ``X(x) = A x`` with ``A``
nilpotent, because then ``exp(tA)`` is a polynomial in ``t``. The time variable
is appended after the space variables, so on an ``n``-dimensional chart the
flow components are polynomials in ``x1..xn, x{n+1} = t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial
from typing import Sequence

from .calculus import TestScope, spanning_family
from .errors import DegreeError, DimensionError, PreconditionError
from .exterior import Form, Multivector, as_form, as_multivector, insert_mv
from .ring import Polynomial
from .schouten import bracket

__all__ = [
    "PolyMap",
    "FlowFamily",
    "pullback",
    "related",
    "pushforward_invertible",
    "naturality_check",
    "flow_lie_derivative",
]


@dataclass(frozen=True)
class PolyMap:
    """A polynomial map from a ``src``-dimensional chart to a ``dst``-dimensional one."""

    src: int
    dst: int
    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if len(comps) != self.dst:
            raise DimensionError(f"map to dim {self.dst} needs {self.dst} components, got {len(comps)}")
        for c in comps:
            if c.dim != self.src:
                raise DimensionError(f"component on dim {c.dim}, expected {self.src}")

    @classmethod
    def of(cls, components: Sequence[Polynomial]) -> "PolyMap":
        comps = tuple(components)
        return cls(comps[0].dim, len(comps), comps)

    @classmethod
    def identity(cls, dim: int) -> "PolyMap":
        return cls(dim, dim, tuple(Polynomial.var(dim, i) for i in range(1, dim + 1)))

    @classmethod
    def linear(cls, matrix) -> "PolyMap":
        """``x -> M x`` for a rational matrix given as a list of rows."""
        dim = len(matrix[0])
        xs = [Polynomial.var(dim, j) for j in range(1, dim + 1)]
        comps = []
        for row in matrix:
            p = Polynomial.zero(dim)
            for a, x in zip(row, xs):
                if a:
                    p = p + x * a
            comps.append(p)
        return cls(dim, len(matrix), tuple(comps))

    def compose(self, inner: "PolyMap") -> "PolyMap":
        """``self o inner``."""
        if inner.dst != self.src:
            raise DimensionError(f"cannot compose: inner lands in dim {inner.dst}, outer starts at {self.src}")
        return PolyMap(inner.src, self.dst, tuple(c.substitute(inner.components) for c in self.components))

    def is_identity(self) -> bool:
        return self.src == self.dst and self == PolyMap.identity(self.src)

    def jacobian(self) -> list[list[Polynomial]]:
        """Rows indexed by target coordinate, columns by source coordinate."""
        return [[c.partial(j) for j in range(1, self.src + 1)] for c in self.components]

    def pull(self, f: Polynomial) -> Polynomial:
        if f.dim != self.dst:
            raise DimensionError(f"function on dim {f.dim}, map lands in dim {self.dst}")
        return f.substitute(self.components)

    def to_json(self) -> dict:
        return {"src": self.src, "dst": self.dst, "components": [c.to_string() for c in self.components]}

    @classmethod
    def from_json(cls, data) -> "PolyMap":
        from .parser import parse_polynomial

        src = int(data["src"])
        return cls(src, int(data["dst"]), tuple(parse_polynomial(s, src) for s in data["components"]))


def _det(rows) -> Polynomial:
    n = len(rows)
    dim = rows[0][0].dim
    total = Polynomial.zero(dim)
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = Polynomial.one(dim)
        for r, c in enumerate(perm):
            term = term * rows[r][c]
            if not term:
                break
        if term:
            total = total - term if inv % 2 else total + term
    return total


def _minor(J, row_idx, col_idx):
    return _det([[J[r - 1][c - 1] for c in col_idx] for r in row_idx])


def pullback(phi: PolyMap, omega) -> Form:
    """Pull a form on the target chart back to the source chart."""
    omega = as_form(omega)
    if omega.dim != phi.dst:
        raise DimensionError(f"form on dim {omega.dim}, map lands in dim {phi.dst}")
    k = omega.degree
    if k > phi.src or not omega:
        return Form.zero(phi.src, k)
    J = phi.jacobian()
    terms = {}
    src_tuples = list(combinations(range(1, phi.src + 1), k))
    for L, w in omega._terms.items():
        wf = phi.pull(w)
        if not wf:
            continue
        for I in src_tuples:
            m = _minor(J, L, I) if k else Polynomial.one(phi.src)
            if m:
                terms[I] = terms.get(I, Polynomial.zero(phi.src)) + wf * m
    return Form(phi.src, k, {I: c for I, c in terms.items() if c})


def _pushed_terms(phi: PolyMap, U: Multivector) -> dict:
    """Components of ``Lambda^u T(phi) . U``: target indices, source-chart coefficients."""
    if U.dim != phi.src:
        raise DimensionError(f"multivector on dim {U.dim}, map starts at dim {phi.src}")
    u = U.degree
    if u <= 0:
        return dict(U._terms)
    J = phi.jacobian()
    terms = {}
    for L in combinations(range(1, phi.dst + 1), u):
        acc = Polynomial.zero(phi.src)
        for I, c in U._terms.items():
            m = _minor(J, L, I)
            if m:
                acc = acc + c * m
        if acc:
            terms[L] = acc
    return terms


def related(phi: PolyMap, U, U2, scope: TestScope | None = None, cross_check: bool = True) -> bool:
    """True iff ``Lambda^u T(phi) . U = U2 o phi`` exactly.

    With ``cross_check`` the insertion characterisation
    ``i(U) o phi^* = phi^* o i(U2)`` is evaluated on a spanning family of
    target forms and must give the same verdict.
    """
    U = as_multivector(U)
    U2 = as_multivector(U2)
    if U.degree != U2.degree and (U or U2):
        raise DegreeError(f"degree mismatch: {U.degree} vs {U2.degree}")
    if U.dim != phi.src or U2.dim != phi.dst:
        raise DimensionError("multivector dimensions do not match the map")
    left = _pushed_terms(phi, U)
    right = {L: phi.pull(c) for L, c in U2._terms.items()}
    right = {L: c for L, c in right.items() if c}
    verdict = left == right
    if cross_check:
        scope = scope or TestScope(phi.dst, coeff_degree=1)
        alt = _insertion_intertwines(phi, U, U2, scope)
        if alt != verdict:
            raise AssertionError("relatedness and insertion characterisation disagree")
    return verdict


def _insertion_intertwines(phi, U, U2, scope) -> bool:
    for w in spanning_family(phi.dst, scope.coeff_degree, scope.forms_upto):
        a = insert_mv(U, pullback(phi, w))
        b = pullback(phi, insert_mv(U2, w))
        if a._terms != b._terms:
            return False
    return True


def pushforward_invertible(phi: PolyMap, psi: PolyMap, U) -> Multivector:
    """The unique field on the target that is ``phi``-related to ``U``; ``psi`` inverts ``phi``."""
    if not phi.compose(psi).is_identity() or not psi.compose(phi).is_identity():
        raise PreconditionError("psi is not a two-sided inverse of phi")
    U = as_multivector(U)
    pushed = _pushed_terms(phi, U)
    terms = {L: c.substitute(psi.components) for L, c in pushed.items()}
    return Multivector(phi.dst, U.degree, terms)


def naturality_check(phi: PolyMap, U1, U2, U1p, U2p) -> bool:
    """If ``Ui`` and ``Uip`` are ``phi``-related, check their brackets are too."""
    if not related(phi, U1, U1p, cross_check=False) or not related(phi, U2, U2p, cross_check=False):
        raise PreconditionError("inputs are not phi-related")
    return related(phi, bracket(U1, U2), bracket(U1p, U2p), cross_check=False)


def _linear_matrix(X: Multivector):
    """Coefficient matrix ``A`` of ``X = sum_i (A x)_i e_i``, or ``None`` if ``X`` is not linear."""
    n = X.dim
    A = [[0] * n for _ in range(n)]
    for (i,), c in X._terms.items():
        for m, a in c.terms.items():
            if sum(m) != 1:
                return None
            A[i - 1][m.index(1)] = a
    return A


def _matmul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


class FlowFamily:
    """Exact flow ``x -> exp(tA) x`` of a nilpotent linear vector field."""

    def __init__(self, X):
        X = as_multivector(X)
        if X.degree != 1:
            raise DegreeError("flows need a vector field")
        A = _linear_matrix(X)
        if A is None:
            raise PreconditionError("vector field is not linear")
        n = X.dim
        powers = [[[int(i == j) for j in range(n)] for i in range(n)]]
        for _ in range(n):
            powers.append(_matmul(powers[-1], A))
        if any(any(row) for row in powers[n]):
            raise PreconditionError("coefficient matrix is not nilpotent")
        self.generator = X
        self.matrix = A
        self.dim = n
        self._powers = powers[:n]
        self.components = self._exp_map(sign=1)

    def _exp_coeffs(self, sign):
        """Entries of ``exp(sign*t*A)`` as polynomials in ``t`` on the extended chart."""
        n = self.dim
        t = Polynomial.var(n + 1, n + 1)
        M = [[Polynomial.zero(n + 1) for _ in range(n)] for _ in range(n)]
        for k, Ak in enumerate(self._powers):
            tk = (t * sign) ** k * Fraction(1, factorial(k))
            for i in range(n):
                for j in range(n):
                    if Ak[i][j]:
                        M[i][j] = M[i][j] + tk * Ak[i][j]
        return M

    def _exp_map(self, sign):
        n = self.dim
        M = self._exp_coeffs(sign)
        xs = [Polynomial.var(n + 1, j) for j in range(1, n + 1)]
        comps = []
        for i in range(n):
            p = Polynomial.zero(n + 1)
            for j in range(n):
                p = p + M[i][j] * xs[j]
            comps.append(p)
        return tuple(comps)

    def at(self, t: Polynomial) -> PolyMap:
        """Specialise the time variable to ``t`` (a polynomial on any chart containing x1..xn)."""
        m = t.dim
        subs = [Polynomial.var(m, i) for i in range(1, self.dim + 1)] + [t]
        return PolyMap(m, self.dim, tuple(c.substitute(subs) for c in self.components))

    def satisfies_ode(self) -> bool:
        """``d/dt Fl_t = X o Fl_t`` and ``Fl_0 = id``, exactly."""
        n = self.dim
        comps_t = [c.partial(n + 1) for c in self.components]
        X_on_flow = [self.generator.coeff((i,)).substitute(self.components) for i in range(1, n + 1)]
        zero_t = self.at(Polynomial.zero(n))
        return comps_t == X_on_flow and zero_t.is_identity()

    def group_law_holds(self) -> bool:
        """``Fl_s o Fl_t = Fl_(s+t)`` on the chart ``(x, s, t)``."""
        n = self.dim
        s = Polynomial.var(n + 2, n + 1)
        t = Polynomial.var(n + 2, n + 2)
        Ft = self.at(t)
        # Fl_s(y) with y = Fl_t(x): y fills the space slots, s the time slot
        composed = [c.substitute(list(Ft.components) + [s]) for c in self.components]
        return composed == list(self.at(s + t).components)

    def transport(self, U) -> Multivector:
        """``Lambda^u T(Fl_-t) . U o Fl_t`` as a field on the extended chart."""
        U = as_multivector(U)
        n = self.dim
        if U.dim != n:
            raise DimensionError(f"field on dim {U.dim}, flow on dim {n}")
        Minv = self._exp_coeffs(-1)
        moved = {I: c.substitute(self.components) for I, c in U._terms.items()}
        u = U.degree
        if u == 0:
            return Multivector(n + 1, 0, moved)
        terms = {}
        for L in combinations(range(1, n + 1), u):
            acc = Polynomial.zero(n + 1)
            for I, c in moved.items():
                m = _minor(Minv, L, I)
                if m:
                    acc = acc + c * m
            if acc:
                terms[L] = acc
        return Multivector(n + 1, u, terms)


def _time_derivative_at_zero(p: Polynomial, n: int) -> Polynomial:
    dp = p.partial(n + 1)
    subs = [Polynomial.var(n, i) for i in range(1, n + 1)] + [Polynomial.zero(n)]
    return dp.substitute(subs)


def flow_lie_derivative(X, U) -> Multivector:
    """``d/dt|0 (Fl_t)^* U`` for a nilpotent linear vector field ``X``."""
    flow = FlowFamily(X)
    n = flow.dim
    moved = flow.transport(U)
    terms = {I: _time_derivative_at_zero(c, n) for I, c in moved._terms.items()}
    return Multivector(n, as_multivector(U).degree, {I: c for I, c in terms.items() if c})
