import pytest

from snbracket.calculus import (
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
    operator_equal,
    spanning_family,
    zero_op,
)
from snbracket.exterior import Form, Multivector
from snbracket.oracles import lie_bracket_by_action
from snbracket.randgen import random_vector_field, trial_rng
from snbracket.ring import Polynomial
from snbracket.schouten import bracket


def test_d_examples(form, poly):
    assert ext_deriv(form("x1*dx2", 2)) == form("dx1^dx2", 2)
    assert ext_deriv(form("dx1", 2)).is_zero()
    assert ext_deriv(differential(poly("x1**2*x2", 2))).is_zero()


def test_lie_bracket_vf_examples(mv):
    assert lie_bracket_vf(mv("x2*e1", 2), mv("e2", 2)) == mv("-e1", 2)
    assert lie_bracket_vf(mv("e1", 2), mv("e2", 2)).is_zero()
    assert lie_bracket_vf(mv("x1*e1", 2), mv("x1*e2", 2)) == mv("x1*e2", 2)


def test_lie_bracket_vf_against_action():
    for t in range(50):
        rng = trial_rng(0, "test", "vf", 3, t)
        X, Y = random_vector_field(rng, 3), random_vector_field(rng, 3)
        assert lie_bracket_vf(X, Y) == lie_bracket_by_action(X, Y)


def test_lie_diff_examples(mv, form, poly):
    assert lie_diff(Multivector.from_polynomial(poly("x1", 2)), form("dx2", 2)) == form("-dx1^dx2", 2)
    assert lie_diff(mv("e1", 2), form("x1*dx2", 2)) == form("dx2", 2)
    assert lie_diff(mv("e1", 2), differential(poly("x1*x2", 2))) == form("dx2", 2)


def test_operator_equal_examples(mv):
    scope = TestScope(3, coeff_degree=2, form_degree=2)
    assert operator_equal(d_op(2), d_op(2), TestScope(2))
    U, V = mv("x2*e1 + e3", 3), mv("x1*e2^e3", 3)
    assert operator_equal(graded_commutator(i_op(U), i_op(V)), zero_op(3, -3), scope)
    e1, e2 = mv("e1", 2), mv("e2", 2)
    lhs = lie_op(e1) @ lie_op(e2) - lie_op(e2) @ lie_op(e1)
    assert operator_equal(lhs, lie_op(bracket(e1, e2)), TestScope(2))


def test_commutator_examples(mv):
    scope = TestScope(2)
    e1, e2 = mv("e1", 2), mv("e2", 2)
    assert operator_equal(graded_commutator(i_op(e1), i_op(e2)), zero_op(2, -2), scope)
    P = mv("e1^e2", 2)
    assert operator_equal(graded_commutator(i_op(P), d_op(2)), lie_op(P), scope)
    assert operator_equal(graded_commutator(lie_op(e1), d_op(2)), zero_op(2, 1), scope)


def test_operator_equal_detects_difference(mv):
    scope = TestScope(2)
    X = mv("x1*e1", 2)
    w = operator_counterexample(lie_op(X), i_op(X) @ d_op(2), scope)
    assert w is not None
    assert lie_diff(X, w) != (i_op(X) @ d_op(2))(w)


def test_homogeneity_mismatch():
    with pytest.raises(ValueError):
        d_op(2) + zero_op(2, 0)


def test_spanning_family_shape():
    fam = list(spanning_family(2, 1, 2))
    # 3 monomials of degree <= 1 times 4 basis forms
    assert len(fam) == 12
    assert all(isinstance(w, Form) for w in fam)


def test_lie_of_function_is_minus_mu_df(poly):
    f = poly("x1**2*x2 - x3", 3)
    assert operator_equal(lie_op(f), -mu_op(differential(f)), TestScope(3, coeff_degree=2))


def test_d_is_a_graded_derivation(form):
    from snbracket.exterior import wedge

    a, b = form("x1*x2*dx1 + x3*dx2", 3), form("x2**2*dx2^dx3", 3)
    assert ext_deriv(wedge(a, b)) == wedge(ext_deriv(a), b) - wedge(a, ext_deriv(b))
    assert ext_deriv(Form.from_polynomial(Polynomial.var(3, 1))) == form("dx1", 3)
