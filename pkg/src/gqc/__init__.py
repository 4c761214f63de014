"""Gröbner bases of generalized quasi-cyclic (GQC) codes.

Typical use::

    from gqc import GF, OrbitProfile, algorithm2, CodeSpec, encode

    profile = OrbitProfile(GF(2), (6, 6, 4))
    basis = algorithm2(H, profile)          # reduced POT basis
    codeword = encode(message, CodeSpec.from_basis(basis))
"""

from .core import (
    OrbitProfile,
    PolyVec,
    check_gqc,
    matrix_repr,
    polyvec_to_vec,
    scalar_product,
    shift_sigma,
    std_xi,
    vec_to_polyvec,
)
from .echelon import Permutation, algorithm1, dual_generator, echelon_pipeline, standard_form
from .encoder import CodeSpec, encode, encode_with_remainder, syndrome, verify_codeword
from .field import GF, OpCounter, counting, field_from_order, field_new
from .grobner import (
    DivisionResult,
    GrobnerBasis,
    Monomial,
    Ordering,
    buchberger,
    classify_monomials,
    divide,
    reduce_basis,
)
from .linalg import gauss_echelon
from .metrics import (
    CircuitReport,
    ComplexityEstimate,
    circuit_bounds,
    estimate_complexity,
    measure_ops,
    simulate_fg_encoder,
)
from .poly import Poly, gcd_ext
from .transpose import (
    PolyMatrix,
    algorithm2,
    compute_A,
    generator_matrix,
    transpose_hat,
    transpose_pipeline,
    verify_theorem2,
)

__all__ = [
    "CircuitReport", "CodeSpec", "ComplexityEstimate", "DivisionResult", "GF",
    "GrobnerBasis", "Monomial", "OpCounter", "OrbitProfile", "Ordering",
    "Permutation", "Poly", "PolyMatrix", "PolyVec", "algorithm1", "algorithm2",
    "buchberger", "check_gqc", "circuit_bounds", "classify_monomials",
    "compute_A", "counting", "divide", "dual_generator", "echelon_pipeline",
    "encode", "encode_with_remainder", "estimate_complexity", "field_from_order", "field_new",
    "gauss_echelon", "gcd_ext", "generator_matrix", "matrix_repr",
    "measure_ops", "polyvec_to_vec", "reduce_basis", "scalar_product",
    "shift_sigma", "simulate_fg_encoder", "standard_form", "std_xi", "syndrome",
    "transpose_hat", "transpose_pipeline", "vec_to_polyvec", "verify_codeword",
    "verify_theorem2",
]
