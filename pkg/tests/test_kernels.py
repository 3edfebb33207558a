import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from snbracket import _kernels_py as py
from snbracket import kernels

try:
    from snbracket import _kernels as cy
except ImportError:  # extension not built in this environment
    cy = None

needs_ext = pytest.mark.skipif(cy is None, reason="compiled kernels not built")

DIM = 3
coeffs = st.one_of(st.integers(-5, 5), st.fractions(-3, 3, max_denominator=4))
polys = st.dictionaries(st.tuples(*[st.integers(0, 3)] * DIM), coeffs, max_size=5).map(
    lambda d: {k: py.normalize(v) for k, v in d.items() if v}
)
indices = st.lists(st.integers(1, 5), max_size=4, unique=True).map(lambda l: tuple(sorted(l)))


def same(a, b):
    assert a == b
    assert {k: type(v) for k, v in a.items()} == {k: type(v) for k, v in b.items()}


def test_normalize():
    assert type(py.normalize(Fraction(4, 2))) is int
    assert type(py.normalize(Fraction(1, 2))) is Fraction


@needs_ext
@settings(max_examples=200, deadline=None)
@given(polys, polys, coeffs, st.integers(0, DIM - 1))
def test_backend_parity(a, b, c, i):
    same(py.add(a, b), cy.add(a, b))
    same(py.sub(a, b), cy.sub(a, b))
    same(py.mul(a, b), cy.mul(a, b))
    same(py.scale(a, c), cy.scale(a, c))
    same(py.partial(a, i), cy.partial(a, i))
    acc_p, acc_c = {}, {}
    for mod, acc in ((py, acc_p), (cy, acc_c)):
        mod.add_into(acc, a, c)
        mod.addmul_into(acc, a, b, -1)
    same(py.finalize(acc_p), cy.finalize(acc_c))


@needs_ext
@settings(max_examples=200, deadline=None)
@given(indices, indices)
def test_merge_sign_parity(I, J):
    assert py.merge_sign(I, J) == cy.merge_sign(I, J)


def test_merge_sign_values():
    assert py.merge_sign((1,), (2,)) == (1, (1, 2))
    assert py.merge_sign((2,), (1,)) == (-1, (1, 2))
    assert py.merge_sign((1, 3), (2,)) == (-1, (1, 2, 3))
    assert py.merge_sign((1,), (1,))[0] == 0


def test_backend_selection():
    env = dict(os.environ, SN_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import snbracket; print(snbracket.BACKEND)"], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND == ("cython" if cy is not None and not os.environ.get("SN_PURE_PYTHON") else "python")
