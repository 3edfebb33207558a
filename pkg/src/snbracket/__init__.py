"""Exact Schouten-Nijenhuis bracket and Cartan calculus on polynomial multivector fields."""

from .calculus import (
    FormOperator,
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
    operator_equal,
    spanning_family,
)
from .errors import (
    DegreeError,
    DimensionError,
    MethodDisagreement,
    ParseError,
    PreconditionError,
    SNError,
    VarianceError,
)
from .exterior import Form, Multivector, insert_form, insert_mv, one_form, pair, vector_field, wedge
from .geometry import FlowFamily, PolyMap, flow_lie_derivative, naturality_check, pullback, pushforward_invertible, related
from .kernels import BACKEND
from .parser import parse, parse_map, parse_polynomial, print_canonical
from .poisson import (
    PoissonCandidate,
    PoissonReport,
    is_poisson,
    iterated_function_bracket,
    jacobiator,
    poisson_bracket,
    schouten_square,
    triple_identity_check,
)
from .ring import Polynomial
from .schouten import BracketConvention, bracket, bracket_direct, bracket_tulczyjew, convert, operator_formula

__version__ = "0.1.0"
