"""Finite-dimensional associative unital algebras given by structure constants.

An algebra of dimension n over an exact field stores the full table
c[i][j][k] with e_i * e_j = sum_k c[i][j][k] e_k together with the
coordinates of the unit.  Builders cover matrix algebras, generalized
quaternion algebras, polynomial quotients, tensor products, opposites and
direct sums; `validate_algebra` machine-checks associativity and the unit
laws, which every other module assumes.
"""
from __future__ import annotations

from .checks import CheckReport, CheckResult
from .errors import (
    AlgebraMismatch,
    CharacteristicTwo,
    FieldMismatch,
    NonInvertibleParameter,
    NonMonicModulus,
    ShapeMismatch,
)
from .fields import Field
from .linalg import Matrix


class Algebra:
    """Structure-constant algebra over an exact field.

    Instances are immutable after construction; validation state and the
    left/right multiplication operators are cached lazily.
    """

    def __init__(self, field: Field, table, unit, label: str = "custom"):
        dim = len(table)
        if dim < 1:
            raise ShapeMismatch("algebra dimension must be >= 1")
        for i, plane in enumerate(table):
            if len(plane) != dim:
                raise ShapeMismatch(f"table[{i}] has {len(plane)} rows, expected {dim}")
            for j, row in enumerate(plane):
                if len(row) != dim:
                    raise ShapeMismatch(f"table[{i}][{j}] has length {len(row)}")
        if len(unit) != dim:
            raise ShapeMismatch(f"unit has length {len(unit)}, expected {dim}")
        self.field = field
        self.dim = dim
        self.table = [[list(row) for row in plane] for plane in table]
        self.unit = list(unit)
        self.label = label
        # basis_products[i][j] = tuple of (k, c_ijk) nonzeros
        self.basis_products = [
            [tuple((k, c) for k, c in enumerate(row) if c) for row in plane]
            for plane in self.table
        ]
        self._left_mats: list[Matrix] | None = None
        self._right_mats: list[Matrix] | None = None
        self._validation: CheckReport | None = None
        self._commutative: bool | None = None

    # -- identity ---------------------------------------------------------

    def same_as(self, other: "Algebra") -> bool:
        """Structural equality (label ignored), with a fast identity path."""
        if self is other:
            return True
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and self.dim == other.dim
            and self.unit == other.unit
            and self.table == other.table
        )

    def check_same(self, other: "Algebra") -> None:
        if not self.same_as(other):
            raise AlgebraMismatch(f"{self.label!r} vs {other.label!r}")

    def __repr__(self):
        return f"Algebra({self.label!r}, dim={self.dim}, field={self.field!r})"

    # -- elements ----------------------------------------------------------

    def element(self, coords) -> "AlgebraElement":
        return AlgebraElement(self, coords)

    def basis_element(self, i: int) -> "AlgebraElement":
        coords = [self.field.zero] * self.dim
        coords[i] = self.field.one
        return AlgebraElement(self, coords)

    def unit_element(self) -> "AlgebraElement":
        return AlgebraElement(self, self.unit)

    def zero_element(self) -> "AlgebraElement":
        return AlgebraElement(self, [self.field.zero] * self.dim)

    def mul_coords(self, x, y):
        F = self.field
        out = [F.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = F.mul(xi, yj)
                for k, ck in self.basis_products[i][j]:
                    out[k] = F.add(out[k], F.mul(c, ck))
        return out

    # -- cached operators ----------------------------------------------------

    def left_mult_matrices(self) -> list[Matrix]:
        """L_i with L_i x = e_i * x in coordinates."""
        if self._left_mats is None:
            mats = []
            for i in range(self.dim):
                rows = [{} for _ in range(self.dim)]
                for x in range(self.dim):
                    for k, c in self.basis_products[i][x]:
                        rows[k][x] = c
                mats.append(Matrix(self.field, self.dim, self.dim, rows))
            self._left_mats = mats
        return self._left_mats

    def right_mult_matrices(self) -> list[Matrix]:
        """R_i with R_i x = x * e_i in coordinates."""
        if self._right_mats is None:
            mats = []
            for i in range(self.dim):
                rows = [{} for _ in range(self.dim)]
                for x in range(self.dim):
                    for k, c in self.basis_products[x][i]:
                        rows[k][x] = c
                mats.append(Matrix(self.field, self.dim, self.dim, rows))
            self._right_mats = mats
        return self._right_mats

    def is_commutative(self) -> bool:
        if self._commutative is None:
            self._commutative = all(
                self.table[i][j] == self.table[j][i]
                for i in range(self.dim)
                for j in range(i + 1, self.dim)
            )
        return self._commutative

    def is_validated(self) -> bool:
        report = self._validation
        return report is not None and report.passed


class AlgebraElement:
    """Coordinate vector in a fixed algebra."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords):
        if len(coords) != algebra.dim:
            raise ShapeMismatch(f"{len(coords)} coords for dim {algebra.dim}")
        self.algebra = algebra
        self.coords = list(coords)

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self.algebra.check_same(other.algebra)
        return AlgebraElement(self.algebra, self.algebra.mul_coords(self.coords, other.coords))

    def __add__(self, other):
        self.algebra.check_same(other.algebra)
        F = self.algebra.field
        return AlgebraElement(
            self.algebra, [F.add(a, b) for a, b in zip(self.coords, other.coords)]
        )

    def __sub__(self, other):
        self.algebra.check_same(other.algebra)
        F = self.algebra.field
        return AlgebraElement(
            self.algebra, [F.sub(a, b) for a, b in zip(self.coords, other.coords)]
        )

    def __neg__(self):
        F = self.algebra.field
        return AlgebraElement(self.algebra, [F.neg(a) for a in self.coords])

    def scale(self, c):
        F = self.algebra.field
        return AlgebraElement(self.algebra, [F.mul(c, a) for a in self.coords])

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra.same_as(other.algebra) and self.coords == other.coords

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        fmt = self.algebra.field.format
        return "AlgebraElement([" + ", ".join(fmt(c) for c in self.coords) + "])"


def validate_algebra(algebra: Algebra) -> CheckReport:
    """Check the unit laws and associativity on all basis triples.

    The report carries the first failing triple (i, j, k) with both sides
    as the witness; results are cached on the algebra.
    """
    if algebra._validation is not None:
        return algebra._validation
    F = algebra.field
    fmt = F.format
    results = []

    unit_ok = True
    witness = None
    for i in range(algebra.dim):
        e = [F.zero] * algebra.dim
        e[i] = F.one
        lhs = algebra.mul_coords(algebra.unit, e)
        rhs = algebra.mul_coords(e, algebra.unit)
        if lhs != e:
            unit_ok, witness = False, f"1*e_{i} = {[fmt(c) for c in lhs]}"
            break
        if rhs != e:
            unit_ok, witness = False, f"e_{i}*1 = {[fmt(c) for c in rhs]}"
            break
    results.append(CheckResult("unit", unit_ok, witness))

    assoc_ok = True
    witness = None
    for i in range(algebra.dim):
        ei = [F.zero] * algebra.dim
        ei[i] = F.one
        for j in range(algebra.dim):
            ej = [F.zero] * algebra.dim
            ej[j] = F.one
            ij = algebra.mul_coords(ei, ej)
            for k in range(algebra.dim):
                ek = [F.zero] * algebra.dim
                ek[k] = F.one
                lhs = algebra.mul_coords(ij, ek)
                rhs = algebra.mul_coords(ei, algebra.mul_coords(ej, ek))
                if lhs != rhs:
                    assoc_ok = False
                    witness = (
                        f"(e_{i}e_{j})e_{k} = {[fmt(c) for c in lhs]} != "
                        f"e_{i}(e_{j}e_{k}) = {[fmt(c) for c in rhs]}"
                    )
                    break
            if not assoc_ok:
                break
        if not assoc_ok:
            break
    results.append(CheckResult("associativity", assoc_ok, witness))

    report = CheckReport(results)
    algebra._validation = report
    return report


def center(algebra: Algebra):
    """Canonical basis of {z : z e_i = e_i z for all i} (list of vectors)."""
    n = algebra.dim
    left = algebra.left_mult_matrices()
    right = algebra.right_mult_matrices()
    rows = []
    for i in range(n):
        diff = left[i] - right[i]
        rows.extend(dict(r) for r in diff.rows)
    system = Matrix(algebra.field, len(rows), n, rows)
    return system.nullspace()


# -- builders -----------------------------------------------------------------


def build_matrix_algebra(n: int, field: Field) -> Algebra:
    """M_n over `field`; basis is the matrix units in row-major order."""
    if n < 1:
        raise ShapeMismatch("matrix size must be >= 1")
    dim = n * n
    F = field
    table = [[[F.zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            a = i * n + j
            for k in range(n):
                for l in range(n):
                    b = k * n + l
                    if j == k:
                        table[a][b][i * n + l] = F.one
    unit = [F.zero] * dim
    for i in range(n):
        unit[i * n + i] = F.one
    return Algebra(F, table, unit, label=f"matrix({n})/{field!r}")


def _quat_word(index: int) -> str:
    return ("", "i", "j", "ij")[index]


def _quat_reduce(word: str, a, b, field: Field):
    """Normal form of a word in the letters i, j.

    Rewrites with ji -> -ij, ii -> a, jj -> b until the word is one of
    '', 'i', 'j', 'ij'; returns (basis index, scalar).  This derives the
    full multiplication table from the defining relations alone.
    """
    F = field
    coeff = F.one
    letters = list(word)
    changed = True
    while changed:
        changed = False
        for t in range(len(letters) - 1):
            if letters[t] == "j" and letters[t + 1] == "i":
                letters[t], letters[t + 1] = "i", "j"
                coeff = F.neg(coeff)
                changed = True
                break
            if letters[t] == letters[t + 1]:
                coeff = F.mul(coeff, a if letters[t] == "i" else b)
                del letters[t : t + 2]
                changed = True
                break
    tail = "".join(letters)
    return {"": 0, "i": 1, "j": 2, "ij": 3}[tail], coeff


def build_quaternion(a, b, field: Field) -> Algebra:
    """Generalized quaternion algebra with i*i = a, j*j = b, ij = -ji = k.

    Basis order is (1, i, j, k); every product is derived from the three
    relations by word rewriting, nothing else is assumed.
    """
    F = field
    a = F.coerce(a)
    b = F.coerce(b)
    if F.characteristic == 2:
        raise CharacteristicTwo("quaternion algebras need 2 invertible")
    if not F.is_invertible(a) or not F.is_invertible(b):
        raise NonInvertibleParameter(f"a={F.format(a)}, b={F.format(b)}")
    table = [[[F.zero] * 4 for _ in range(4)] for _ in range(4)]
    for x in range(4):
        for y in range(4):
            k, c = _quat_reduce(_quat_word(x) + _quat_word(y), a, b, F)
            table[x][y][k] = c
    unit = [F.one, F.zero, F.zero, F.zero]
    return Algebra(
        F, table, unit, label=f"quaternion({F.format(a)},{F.format(b)})/{field!r}"
    )


def build_poly_quotient(modulus, field: Field) -> Algebra:
    """k[x]/(m(x)) for a monic modulus given by ascending coefficients.

    `modulus` lists c_0 .. c_d with c_d = 1, so [0, 0, 1] is x^2 and
    [-1, 0, 1] is x^2 - 1.  Basis is 1, x, .., x^(d-1).
    """
    F = field
    coeffs = [F.coerce(c) for c in modulus]
    if len(coeffs) < 2 or coeffs[-1] != F.one:
        raise NonMonicModulus(f"need a monic modulus of degree >= 1, got {modulus!r}")
    d = len(coeffs) - 1
    reducer = [F.neg(c) for c in coeffs[:-1]]  # x^d = reducer in the basis
    powers = []
    for t in range(d):
        vec = [F.zero] * d
        vec[t] = F.one
        powers.append(vec)
    for t in range(d, 2 * d - 1):
        prev = powers[t - 1]
        shifted = [F.zero] + prev[:-1]
        overflow = prev[-1]
        powers.append([F.add(shifted[s], F.mul(overflow, reducer[s])) for s in range(d)])
    table = [[list(powers[i + j]) for j in range(d)] for i in range(d)]
    unit = [F.zero] * d
    unit[0] = F.one
    mod_str = ",".join(F.format(c) for c in coeffs)
    return Algebra(F, table, unit, label=f"poly_quotient([{mod_str}])/{field!r}")


def build_tensor_product(A: Algebra, B: Algebra) -> Algebra:
    """A (x) B with lexicographic basis e_i (x) f_j, A-index major."""
    if A.field != B.field:
        raise FieldMismatch(f"{A.field!r} vs {B.field!r}")
    F = A.field
    nA, nB = A.dim, B.dim
    dim = nA * nB
    table = [[[F.zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(nA):
        for j in range(nB):
            x = i * nB + j
            for k in range(nA):
                for l in range(nB):
                    y = k * nB + l
                    row = table[x][y]
                    for c1, v1 in A.basis_products[i][k]:
                        for c2, v2 in B.basis_products[j][l]:
                            row[c1 * nB + c2] = F.add(row[c1 * nB + c2], F.mul(v1, v2))
    unit = [F.zero] * dim
    for i, ui in enumerate(A.unit):
        if ui == F.zero:
            continue
        for j, uj in enumerate(B.unit):
            if uj != F.zero:
                unit[i * nB + j] = F.mul(ui, uj)
    return Algebra(F, table, unit, label=f"tensor({A.label},{B.label})")


def opposite(A: Algebra) -> Algebra:
    """Same space, reversed multiplication: c_op[i][j][k] = c[j][i][k]."""
    table = [
        [list(A.table[j][i]) for j in range(A.dim)] for i in range(A.dim)
    ]
    return Algebra(A.field, table, A.unit, label=f"op({A.label})")


def build_direct_sum(A: Algebra, B: Algebra) -> Algebra:
    """Block-diagonal product algebra A (+) B with unit (1_A, 1_B)."""
    if A.field != B.field:
        raise FieldMismatch(f"{A.field!r} vs {B.field!r}")
    F = A.field
    nA, nB = A.dim, B.dim
    dim = nA + nB
    table = [[[F.zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(nA):
        for j in range(nA):
            for k, c in A.basis_products[i][j]:
                table[i][j][k] = c
    for i in range(nB):
        for j in range(nB):
            for k, c in B.basis_products[i][j]:
                table[nA + i][nA + j][nA + k] = c
    unit = list(A.unit) + list(B.unit)
    return Algebra(F, table, unit, label=f"direct_sum({A.label},{B.label})")
