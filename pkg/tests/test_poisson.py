import json

import pytest

from snbracket.calculus import TestScope, differential
from snbracket.errors import DegreeError, DimensionError
from snbracket.exterior import pair, wedge
from snbracket.oracles import superbracket
from snbracket.poisson import (
    PoissonCandidate,
    is_poisson,
    iterated_function_bracket,
    jacobi_on_monomials,
    jacobiator,
    poisson_bracket,
    schouten_square,
    triple_identity_check,
)
from snbracket.randgen import random_multivector, random_polynomial, trial_rng
from snbracket.ring import Polynomial

SO3 = "x3*e1^e2 + x1*e2^e3 + x2*e3^e1"
# {x1,x2} = x2, {x2,x3} = x1: Jacobiator on the coordinates is {x3,x2} = -x1
NON_POISSON = "x2*e1^e2 + x1*e2^e3"


def xs(dim):
    return [Polynomial.var(dim, i) for i in range(1, dim + 1)]


def test_bracket_examples(mv, poly):
    x1, x2, x3 = xs(3)
    assert poisson_bracket(mv("e1^e2", 2), *xs(2)) == Polynomial.one(2)
    f = poly("x1**2*x2 - 3", 3)
    assert poisson_bracket(mv(SO3, 3), f, f).is_zero()
    assert poisson_bracket(mv(SO3, 3), x1, x2) == x3


def test_jacobiator_examples(mv, poly):
    x1, x2 = xs(2)
    assert jacobi_on_monomials(mv("e1^e2", 2), 2) is None
    assert jacobiator(mv(SO3, 3), *xs(3)).is_zero()
    assert jacobiator(mv("x1*e1^e2", 2), x1, x2, x1 * x2).is_zero()


def test_schouten_square_examples(mv):
    assert schouten_square(mv("e1^e2", 2)).is_zero()
    assert schouten_square(mv(SO3, 3)).is_zero()
    # these two look non-Poisson but are not: both satisfy Jacobi
    assert schouten_square(mv("x1*e1^e2 + e2^e3", 3)).is_zero()
    assert schouten_square(mv("x2*e1^e2 + e1^e3", 3)).is_zero()


def test_golden_non_poisson(mv):
    P = mv(NON_POISSON, 3)
    golden = mv("-2*x1*e1^e2^e3", 3)
    assert superbracket(P, P) == golden
    assert schouten_square(P) == golden
    assert jacobiator(P, *xs(3)) == Polynomial.var(3, 1) * -1


def test_triple_identity_examples(mv, poly):
    x1, x2 = xs(2)
    assert triple_identity_check(mv("e1^e2", 2), x1, x2, x1 * x2)
    assert triple_identity_check(mv(SO3, 3), *xs(3))
    assert triple_identity_check(mv(NON_POISSON, 3), *xs(3))


def test_triple_identity_sign(mv):
    # nested brackets equal minus the pairing; with the plus sign this instance fails
    P = mv(NON_POISSON, 3)
    f, g, h = xs(3)
    PP = schouten_square(P)
    nested = iterated_function_bracket(PP, f, g, h).as_polynomial()
    paired = pair(wedge(wedge(differential(f), differential(g)), differential(h)), PP)
    assert nested == Polynomial.var(3, 1) * 2
    assert nested == -paired
    assert nested != paired


def test_triple_identity_random():
    for t in range(40):
        rng = trial_rng(0, "test", "triple", 3, t)
        P = random_multivector(rng, 3, 2, 2)
        f, g, h = (random_polynomial(rng, 3, 2) for _ in range(3))
        assert triple_identity_check(P, f, g, h)


def test_is_poisson_verdicts(mv):
    assert is_poisson(mv("e1^e2", 2)).poisson
    assert is_poisson(mv(SO3, 3)).poisson
    report = is_poisson(mv(NON_POISSON, 3), TestScope(3, trials=20))
    assert not report.poisson
    assert any(j for *_, j in report.samples)


def test_report_json(mv, poly):
    report = is_poisson(mv(NON_POISSON, 3), TestScope(3, trials=2), extra=(poly("x1", 3), poly("x2", 3), poly("x1*x3", 3)))
    data = json.loads(json.dumps(report.to_json()))
    assert data["poisson"] is False
    assert data["schouten_square"]["terms"] == [{"index": [1, 2, 3], "coeff": "-2*x1"}]
    assert len(data["jacobiator_samples"]) == 1 + 1 + 2
    assert data["jacobiator_samples"][1] == {"f": "x1", "g": "x2", "h": "x1*x3", "value": "-x1**2"}


def test_rejects_non_bivectors(mv, poly):
    with pytest.raises(DegreeError):
        PoissonCandidate(mv("e1", 2))
    with pytest.raises(DegreeError):
        poisson_bracket(mv("e1^e2^e3", 3), *xs(3)[:2])
    with pytest.raises(DimensionError):
        poisson_bracket(mv("e1^e2", 2), *xs(3)[:2])


def test_monomial_criterion_matches_square():
    for t in range(20):
        rng = trial_rng(0, "test", "criterion", 3, t)
        P = random_multivector(rng, 3, 2, 1)
        assert schouten_square(P).is_zero() == (jacobi_on_monomials(P, 2) is None)
