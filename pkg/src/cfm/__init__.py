"""Canonical forms of matrices over R, C and H and the manifolds they define."""
from .canonical import (ValidationReport, base_projection, chart_blocks, factor_spread,
                        grassmann_canonicalize, sample, triangular_blocks, validate_membership)
from .cells import (cell_count, cell_generating_polynomial, cell_of_matrix, enumerate_cells,
                    euler_characteristic)
from .dsl import parse, to_dsl
from .expr import (Basic, Spread, Sum, ValidationIssue, dimension, nesting_order, support_of)
from .matrix import MatrixF, Tolerance, inner_product, leading_zero_count, rank
from .poincare import IntPoly, betti_numbers, gaussian_binomial, poincare_polynomial
from .presets import build_preset, catalog
from .scalar import COMPLEX, QUATERNION, REAL, FieldTag, Scalar, multiply, phase_normalizer

__all__ = [
    "Basic", "Spread", "Sum", "ValidationIssue", "ValidationReport", "MatrixF", "Tolerance",
    "IntPoly", "FieldTag", "Scalar", "REAL", "COMPLEX", "QUATERNION",
    "parse", "to_dsl", "support_of", "nesting_order", "dimension", "build_preset", "catalog",
    "multiply", "phase_normalizer", "inner_product", "leading_zero_count", "rank",
    "grassmann_canonicalize", "validate_membership", "factor_spread", "sample",
    "base_projection", "chart_blocks", "triangular_blocks",
    "enumerate_cells", "cell_count", "cell_generating_polynomial", "euler_characteristic",
    "cell_of_matrix", "gaussian_binomial", "poincare_polynomial", "betti_numbers",
]
