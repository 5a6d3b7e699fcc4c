"""Shared corpus builders for the test suite."""
from __future__ import annotations

from hypothesis import settings

from rbraid import (
    Algebra,
    build_direct_sum,
    build_matrix_algebra,
    build_poly_quotient,
    build_quaternion,
)

settings.register_profile("rbraid", deadline=None, max_examples=60)
settings.load_profile("rbraid")


def upper_triangular_2x2(field) -> Algebra:
    """Upper-triangular 2x2 matrices: central (center = k) but not
    separable, hence a negative test case for every oracle.

    Basis order (e11, e12, e22)."""
    F = field
    z, o = F.zero, F.one
    # products: e11*e11=e11, e11*e12=e12, e12*e22=e12, e22*e22=e22, rest 0
    table = [[[z, z, z] for _ in range(3)] for _ in range(3)]
    table[0][0][0] = o
    table[0][1][1] = o
    table[1][2][1] = o
    table[2][2][2] = o
    unit = [o, z, o]
    return Algebra(F, table, unit, label=f"upper_triangular(2)/{field!r}")


def scalar_field_algebra(field) -> Algebra:
    """The base field as a 1-dimensional algebra."""
    return build_matrix_algebra(1, field)


def positive_corpus(field):
    """Algebras that must admit an R-matrix over `field`."""
    out = [
        scalar_field_algebra(field),
        build_matrix_algebra(2, field),
        build_matrix_algebra(3, field),
    ]
    if field.characteristic != 2:
        out.append(build_quaternion(-1, -1, field))
    return out


def negative_corpus(field):
    """Algebras that must not admit an R-matrix over `field`."""
    k = scalar_field_algebra(field)
    return [
        build_poly_quotient([0, 0, 1], field),          # k[x]/(x^2)
        build_direct_sum(k, k),                          # k (+) k
        build_direct_sum(build_matrix_algebra(2, field), k),
        upper_triangular_2x2(field),
    ]
