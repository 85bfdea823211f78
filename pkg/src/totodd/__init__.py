"""Exact linear algebra for relations among totally odd depth-graded MZVs.

Builds the Ihara-action matrices E, E^(j), C, F over the totally odd index
sets, the restricted even period polynomial spaces W, and the generating
series they are compared against.
"""
from .indices import IndexTable, count_S, enumerate_S, position_of
from .linalg import (
    ExactMatrix,
    KernelBasis,
    intersection_dim,
    left_kernel,
    rank,
    right_kernel,
    span_equal,
)
from .matrices import build, build_C, build_E, build_Ej, build_F, build_prefix
from .period import w2_basis, w_basis, tasaka_image
from .polynomials import (
    EvenPolynomial,
    Polynomial,
    e_coefficient_expansion,
    e_coefficient_formula,
    ihara_circ,
    phi_j,
    pi,
    pi_inverse,
    restricted_even_part,
)
from .series import TruncatedSeries, conjectured_rank_series, series_E, series_O, series_S

__version__ = "0.1.0"
