import random
from itertools import combinations, permutations

import pytest

from snbracket.errors import DegreeError, DimensionError, VarianceError
from snbracket.exterior import Form, Multivector, insert_form, insert_mv, pair, wedge
from snbracket.oracles import det, insertion_by_permutations
from snbracket.randgen import random_form, random_multivector, random_one_form, trial_rng
from snbracket.ring import Polynomial


def e(dim, *idx):
    return Multivector.basis(dim, idx)


def dx(dim, *idx):
    return Form.basis(dim, idx)


def test_wedge_examples(mv):
    assert wedge(e(2, 1), e(2, 2)) == e(2, 1, 2)
    assert wedge(e(2, 2), e(2, 1)) == -e(2, 1, 2)
    assert wedge(mv("x1*e1", 2), e(2, 1, 2)).is_zero()


def test_wedge_mixed_variance_rejected():
    with pytest.raises(VarianceError):
        wedge(e(2, 1), dx(2, 2))


def test_pair_examples(form):
    assert pair(dx(2, 1, 2), e(2, 1, 2)) == Polynomial.one(2)
    assert pair(dx(2, 1, 2), wedge(e(2, 2), e(2, 1))) == -Polynomial.one(2)
    assert pair(form("x1*dx1^dx2", 2), e(2, 1, 2)) == Polynomial.var(2, 1)


def test_pair_against_determinant():
    # <a1^...^ak, v1^...^vk> = det(<ai, vj>)
    rng = random.Random(3)
    dim = 3
    for k in (1, 2, 3):
        forms = [random_one_form(rng, dim, 1) for _ in range(k)]
        vecs = [random_multivector(rng, dim, 1, 1) for _ in range(k)]
        a = forms[0]
        v = vecs[0]
        for f, w in zip(forms[1:], vecs[1:]):
            a, v = wedge(a, f), wedge(v, w)
        matrix = [[pair(f, w) for w in vecs] for f in forms]
        assert pair(a, v) == det(matrix, dim)


def test_insert_mv_examples():
    assert insert_mv(e(2, 1), dx(2, 1, 2)) == dx(2, 2)
    assert insert_mv(e(2, 2), dx(2, 1, 2)) == -dx(2, 1)
    assert insert_mv(e(2, 1, 2), dx(2, 1, 2)) == Form.from_polynomial(Polynomial.one(2))
    assert insert_mv(e(2, 1, 2), dx(2, 1, 2)) == insert_mv(e(2, 2), insert_mv(e(2, 1), dx(2, 1, 2)))


def test_insert_form_examples():
    assert insert_form(dx(2, 1), e(2, 1, 2)) == e(2, 2)
    assert insert_form(dx(2, 2), e(2, 1, 2)) == -e(2, 1)
    assert insert_form(dx(2, 1, 2), e(2, 1, 2)) == Multivector.from_polynomial(Polynomial.one(2))


def test_insert_degree_too_high_is_zero():
    r = insert_mv(e(3, 1, 2), dx(3, 1))
    assert r.is_zero()


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        wedge(e(2, 1), e(3, 2))


def test_basis_index_checks():
    with pytest.raises((DimensionError, DegreeError, ValueError)):
        e(2, 3)


@pytest.mark.parametrize("dim", [1, 2, 3])
def test_adjunctions(dim):
    for t in range(40):
        rng = trial_rng(0, "test", "adjoint", dim, t)
        u = rng.randint(0, dim)
        v = rng.randint(0, dim - u)
        U, V = random_multivector(rng, dim, u), random_multivector(rng, dim, v)
        w = random_form(rng, dim, u + v)
        assert pair(insert_mv(U, w), V) == pair(w, wedge(U, V))
        phi = random_form(rng, dim, v)
        W = random_multivector(rng, dim, u + v)
        a = random_form(rng, dim, u)
        assert pair(phi, insert_form(a, W)) == pair(wedge(a, phi), W)


@pytest.mark.parametrize("dim", [1, 2, 3, 4])
def test_shuffle_expansion_matches_permutation_sum(dim):
    covs_all = [dx(dim, i) for i in range(1, dim + 1)]
    for k in range(dim + 1):
        for seq in permutations(range(dim), k):
            covs = [covs_all[i] for i in seq]
            prod = Form.from_polynomial(Polynomial.one(dim))
            for c in covs:
                prod = wedge(prod, c)
            for u in range(k + 1):
                for I in combinations(range(1, dim + 1), u):
                    assert insert_mv(e(dim, *I), prod) == insertion_by_permutations(e(dim, *I), covs)


def test_to_string_examples(mv):
    assert (-e(2, 2)).to_string() == "-1*e2"
    assert Multivector.zero(3, 2).to_string() == "0"
    assert Form.zero(3, 1).to_string() == "0"
    assert mv("x3*e1^e2 + x1*e2^e3", 3).to_string() == "x3*e1^e2 + x1*e2^e3"
    assert mv("(x1 + 1)*e1 - x2*e2", 2).to_string() == "(x1 + 1)*e1 - x2*e2"


def test_json_round_trip(mv):
    U = mv("3/2*x1**2*e1^e3 - x2*e2^e3", 3)
    data = U.to_json()
    assert data == {
        "kind": "multivector",
        "dim": 3,
        "degree": 2,
        "terms": [{"index": [1, 3], "coeff": "3/2*x1**2"}, {"index": [2, 3], "coeff": "-x2"}],
    }
    assert Multivector.from_json(data) == U
    with pytest.raises(VarianceError):
        Form.from_json(data)
