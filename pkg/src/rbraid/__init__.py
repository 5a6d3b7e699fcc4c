"""Exact canonical R-matrices for finite-dimensional algebras.

Solve for the unique braiding datum on the bimodules of a
structure-constant algebra over an exact field, verify every axiom
independently, classify the algebra through the central-simplicity
oracles, and manufacture verified solutions of the quantum Yang-Baxter
and braid equations.
"""

from .algebra import (
    Algebra,
    AlgebraElement,
    build_direct_sum,
    build_matrix_algebra,
    build_poly_quotient,
    build_quaternion,
    build_tensor_product,
    center,
    opposite,
    validate_algebra,
)
from .bimodules import (
    Bimodule,
    QuotientMap,
    QuotientSpace,
    adjunction_unit,
    alpha_map,
    audit_braiding,
    braiding_map,
    canonical_morphism,
    check_bimodule,
    epsilon_map,
    free_bimodule,
    invariants,
    monoidal_F_audit,
    regular_bimodule,
    square_bimodule,
    tensor_over_A,
    zeta_map,
)
from .checks import CheckReport, CheckResult
from .classify import ClassificationReport, classify, f_map, is_epi_from_base
from .fields import GF, QQ, Field, PrimeField, RationalField, field_from_json
from .linalg import AffineSolution, Matrix
from .rmatrix import (
    RMatrixCertificate,
    SolverInfo,
    certify,
    matrix_closed_form,
    quaternion_closed_form,
    solve_rmatrix,
    tensor_rmatrix,
    verify_rmatrix,
)
from .tensor import TensorElement, tensor_mul, unit_tensor
from .yangbaxter import (
    YBOperator,
    build_omega,
    check_braid,
    check_omega_cubed,
    check_qybe,
    omega_rank_profile,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AlgebraElement",
    "AffineSolution",
    "Bimodule",
    "CheckReport",
    "CheckResult",
    "ClassificationReport",
    "Field",
    "GF",
    "Matrix",
    "PrimeField",
    "QQ",
    "QuotientMap",
    "QuotientSpace",
    "RMatrixCertificate",
    "RationalField",
    "SolverInfo",
    "TensorElement",
    "YBOperator",
    "adjunction_unit",
    "alpha_map",
    "audit_braiding",
    "braiding_map",
    "build_direct_sum",
    "build_matrix_algebra",
    "build_omega",
    "build_poly_quotient",
    "build_quaternion",
    "build_tensor_product",
    "canonical_morphism",
    "center",
    "certify",
    "check_bimodule",
    "check_braid",
    "check_omega_cubed",
    "check_qybe",
    "classify",
    "epsilon_map",
    "f_map",
    "field_from_json",
    "free_bimodule",
    "invariants",
    "is_epi_from_base",
    "matrix_closed_form",
    "monoidal_F_audit",
    "omega_rank_profile",
    "opposite",
    "quaternion_closed_form",
    "regular_bimodule",
    "solve_rmatrix",
    "square_bimodule",
    "tensor_mul",
    "tensor_over_A",
    "tensor_rmatrix",
    "unit_tensor",
    "validate_algebra",
    "verify_rmatrix",
    "zeta_map",
]
