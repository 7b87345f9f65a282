"""Exact arithmetic in the algebra I1 of polynomial integro-differential operators."""

from .base import HPoly, PolyX, scalar, scalar_str, polyx_divided_to_monomial, polyx_monomial_to_divided
from .fmatrix import FMatrix, fmul, deg_F, det_one_plus, is_unit_one_plus, inverse_one_plus
from .b1 import B1Elem, b1_mul, sigma_n_apply, sigma_n_preimage_search, ad_eigenvalue_on_component
from .iop import (
    IOp, generator, add, neg, scalar_mul, mul, power, commutator, graded_component,
    f_part, pi, is_in_K_plus_F, is_unit, unit_inverse, centralizer_F_dim,
    ONE_OP, H_OP, DER, INT,
)
from .fredholm import StabilizationConfig, apply, truncated_matrix, kernel_basis, index, eigenspace
from .endo import Endo, validate, torus, inner, compose, apply_endo, decompose, AutDecomposition
from .parser import parse, evaluate, to_text
from .errors import *  # noqa: F401,F403

__version__ = "0.1.0"
