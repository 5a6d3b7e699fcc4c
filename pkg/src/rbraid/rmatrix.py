"""Canonical R-matrices: solver, independent axiom verifier, closed forms.

A canonical R-matrix of an algebra A is an invertible element of the
threefold tensor power satisfying the three centralizing identities, the
two hexagon identities, and (equivalently, which is the reduction the
solver exploits) the single centralizing identity on legs 2/3 together
with the normalization R1R2 (x) R3 = R2 (x) R3R1 = 1 (x) 1.

The solver works in two stages:

1. compute the space W of elements w of A (x) A with a.w = w.a for every
   basis element a, acting on the first leg from the left and the second
   leg from the right (a nullspace of a streamed constraint system);
   over a field the full solution space of the centralizing identity on
   legs 2/3 is then exactly A (x) W;
2. write R = sum_j e_j (x) w_j with unknown W-coordinates and impose the
   two normalizations as an affine system.

An empty affine system means no R-matrix exists.  A positive-dimensional
solution set contradicts uniqueness of the braiding over a field and is
raised as NonUniqueSolution (a solver or input defect, never a choice
point).  Every solved R is re-verified against the complete axiom list by
`verify_rmatrix`, which never uses the reduction above.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    Algebra,
    build_matrix_algebra,
    build_quaternion,
    build_tensor_product,
    validate_algebra,
)
from .checks import CheckReport, CheckResult
from .errors import (
    ArityMismatch,
    FieldMismatch,
    NonUniqueSolution,
    UnsupportedSize,
    UnvalidatedAlgebra,
)
from .fields import Field
from .linalg import Echelon, Matrix, nullspace_from_echelon
from .tensor import TensorElement, tensor_mul, unit_tensor

DEFAULT_SIZE_CAP = 20

_SWAP12 = (2, 1, 3)
_CYCLE_231 = (3, 1, 2)  # result legs are (old 2, old 3, old 1)
_CYCLE_312 = (2, 3, 1)  # result legs are (old 3, old 1, old 2)


@dataclass
class SolverInfo:
    """Dimensions recorded while solving: the W-space, the unknown count
    and the dimension of the affine solution set (0 for a unique R)."""

    w_dim: int
    unknowns: int
    solution_dim: int

    def to_json(self) -> dict:
        return {
            "w_dim": self.w_dim,
            "unknowns": self.unknowns,
            "solution_dim": self.solution_dim,
        }


@dataclass
class RMatrixCertificate:
    """A solved R together with the transcript of all verifier checks."""

    algebra: Algebra
    r: TensorElement
    inverse: TensorElement
    checks: CheckReport
    solver: SolverInfo | None = None

    @property
    def valid(self) -> bool:
        return self.checks.passed

    def to_json(self) -> dict:
        out = {
            "algebra": self.algebra.label,
            "r": self.r.to_json(),
            "checks": self.checks.to_json(),
        }
        if self.solver is not None:
            out["solver"] = self.solver.to_json()
        return out


def pair_invariant_basis(A: Algebra):
    """Basis of {w in A (x) A : a.w = w.a for all a}, acting on leg 1
    left and leg 2 right.  Returned as dense vectors of length dim^2 in
    the canonical nullspace parametrization."""
    n = A.dim
    F = A.field
    left = A.left_mult_matrices()
    right = A.right_mult_matrices()
    ech = Echelon(F, n * n)
    # One block of n^2 constraint rows per acting basis element; rows are
    # generated on the fly so only the echelon state is held in memory.
    for t in range(n):
        lt = left[t].rows
        rt = right[t].rows
        for c in range(n):
            lrow = lt[c]
            for d in range(n):
                rrow = rt[d]
                row = {}
                for x, v in lrow.items():
                    row[x * n + d] = v
                for y, v in rrow.items():
                    key = c * n + y
                    w = F.sub(row.get(key, F.zero), v)
                    if w == F.zero:
                        row.pop(key, None)
                    else:
                        row[key] = w
                if row:
                    ech.insert(row)
    return nullspace_from_echelon(ech)


def solve_rmatrix(A: Algebra, size_cap: int | None = DEFAULT_SIZE_CAP):
    """Unique canonical R-matrix of A, or None when no braiding exists.

    Raises UnsupportedSize beyond the cap, UnvalidatedAlgebra when the
    structure constants fail validation, and NonUniqueSolution on a
    positive-dimensional solution set (an internal-consistency failure).
    """
    if size_cap is not None and A.dim > size_cap:
        raise UnsupportedSize(f"dim {A.dim} exceeds cap {size_cap}")
    if not validate_algebra(A).passed:
        raise UnvalidatedAlgebra(A.label)
    n = A.dim
    F = A.field
    w_basis = pair_invariant_basis(A)
    wdim = len(w_basis)
    unknowns = n * wdim
    w_nonzeros = [
        [(xy, v) for xy, v in enumerate(w) if v != F.zero] for w in w_basis
    ]
    prods = A.basis_products

    # Affine system: unknowns x[j, t] with R = sum x[j,t] e_j (x) w_t.
    # Block 1 demands (leg1*leg2) (x) leg3 = 1 (x) 1, block 2 demands
    # leg2 (x) (leg3*leg1) = 1 (x) 1.
    rows: list[dict] = [{} for _ in range(2 * n * n)]
    for j in range(n):
        for t in range(wdim):
            col = j * wdim + t
            for xy, v in w_nonzeros[t]:
                x, y = divmod(xy, n)
                for k, ck in prods[j][x]:
                    row = rows[k * n + y]
                    w = F.add(row.get(col, F.zero), F.mul(ck, v))
                    if w == F.zero:
                        row.pop(col, None)
                    else:
                        row[col] = w
                for d, cd in prods[y][j]:
                    row = rows[n * n + x * n + d]
                    w = F.add(row.get(col, F.zero), F.mul(cd, v))
                    if w == F.zero:
                        row.pop(col, None)
                    else:
                        row[col] = w
    rhs_block = [F.zero] * (n * n)
    for c, uc in enumerate(A.unit):
        if uc == F.zero:
            continue
        for d, ud in enumerate(A.unit):
            if ud != F.zero:
                rhs_block[c * n + d] = F.mul(uc, ud)
    system = Matrix(F, 2 * n * n, unknowns, rows)
    solution = system.solve_affine(rhs_block + rhs_block)
    if solution.is_empty:
        return None
    if solution.dimension != 0:
        raise NonUniqueSolution(
            f"{A.label}: affine solution set has dimension {solution.dimension}"
        )
    coeffs = [F.zero] * (n ** 3)
    for j in range(n):
        for t in range(wdim):
            x_jt = solution.particular[j * wdim + t]
            if x_jt == F.zero:
                continue
            base = j * n * n
            for xy, v in w_nonzeros[t]:
                coeffs[base + xy] = F.add(coeffs[base + xy], F.mul(x_jt, v))
    r = TensorElement(A, 3, coeffs)
    info = SolverInfo(w_dim=wdim, unknowns=unknowns, solution_dim=0)
    return _certify(A, r, info)


def _certify(A: Algebra, r: TensorElement, info: SolverInfo | None) -> RMatrixCertificate:
    checks = verify_rmatrix(A, r)
    inverse = r.permute_legs(_SWAP12)
    return RMatrixCertificate(A, r, inverse, checks, info)


def _first_diff(lhs: TensorElement, rhs: TensorElement) -> str:
    fmt = lhs.algebra.field.format
    for idx, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return f"monomial {lhs.digits_of(idx)}: {fmt(a)} != {fmt(b)}"
    return "equal"


def _centralizing_check(name, A, R, leg_left, leg_right):
    for b in range(A.dim):
        e = A.basis_element(b)
        lhs = R.act_leg(leg_left, e, "left")
        rhs = R.act_leg(leg_right, e, "right")
        if lhs != rhs:
            return CheckResult(name, False, f"a=e_{b}, {_first_diff(lhs, rhs)}")
    return CheckResult(name, True)


def _literal_pair_product(R, slots_a, slots_b):
    """Fourth-power element sum_{s,t} (legs of R_s at slots_a) * (legs of
    R_t at slots_b), expanded term by term without tensor_mul.

    Slots the two factors share multiply in order (first factor on the
    left); every slot must be covered by at least one factor.
    """
    A = R.algebra
    F = A.field
    out = TensorElement.zero(A, 4)
    nz = list(R.iter_nonzero())
    occupied = set(slots_a) | set(slots_b)
    assert occupied == {1, 2, 3, 4}
    for _, da, ca in nz:
        for _, db, cb in nz:
            partial = [([0, 0, 0, 0], F.mul(ca, cb))]
            for s in range(1, 5):
                in_a = s in slots_a
                in_b = s in slots_b
                if in_a and in_b:
                    x = da[slots_a.index(s)]
                    y = db[slots_b.index(s)]
                    nxt = []
                    for digs, c in partial:
                        for k, ck in A.basis_products[x][y]:
                            nd = list(digs)
                            nd[s - 1] = k
                            nxt.append((nd, F.mul(c, ck)))
                    partial = nxt
                else:
                    d = da[slots_a.index(s)] if in_a else db[slots_b.index(s)]
                    for digs, _ in partial:
                        digs[s - 1] = d
                if not partial:
                    break
            for digs, c in partial:
                idx = out.index_of(digs)
                out.coeffs[idx] = F.add(out.coeffs[idx], c)
    return out


def verify_rmatrix(A: Algebra, R: TensorElement) -> CheckReport:
    """Exact verification of the complete axiom list, independent of the
    solver's reduction.

    c1..c3   the three centralizing identities, one per leg pairing;
    h1, h2   the hexagon identities written out literally as double sums
             in the fourth tensor power;
    inv1/2   invertibility with the explicit inverse swap12(R);
    n1..n3   the three normalizations (legs 1*2, 3*1 and 2*3 collapse to
             the unit of the square);
    cyc1/2   invariance under both cyclic leg rotations;
    q1, q2   the hexagons re-derived as embedded products
             R(124) = R(123) R(134) and R(134) = R(124) R(234).
    """
    A.check_same(R.algebra)
    if R.arity != 3:
        raise ArityMismatch(f"expected arity 3, got {R.arity}")
    results = []
    unit2 = unit_tensor(A, 2)
    unit3 = unit_tensor(A, 3)

    results.append(_centralizing_check("c1", A, R, 3, 1))
    results.append(_centralizing_check("c2", A, R, 1, 2))
    results.append(_centralizing_check("c3", A, R, 2, 3))

    lhs_h1 = R.embed_legs(4, (1, 2, 4))
    rhs_h1 = _literal_pair_product(R, (1, 2, 3), (1, 3, 4))
    results.append(
        CheckResult("h1", lhs_h1 == rhs_h1,
                    None if lhs_h1 == rhs_h1 else _first_diff(lhs_h1, rhs_h1))
    )
    lhs_h2 = R.embed_legs(4, (1, 3, 4))
    rhs_h2 = _literal_pair_product(R, (1, 2, 4), (2, 3, 4))
    results.append(
        CheckResult("h2", lhs_h2 == rhs_h2,
                    None if lhs_h2 == rhs_h2 else _first_diff(lhs_h2, rhs_h2))
    )

    s = R.permute_legs(_SWAP12)
    rs = tensor_mul(R, s)
    sr = tensor_mul(s, R)
    results.append(
        CheckResult("inv1", rs == unit3, None if rs == unit3 else _first_diff(rs, unit3))
    )
    results.append(
        CheckResult("inv2", sr == unit3, None if sr == unit3 else _first_diff(sr, unit3))
    )

    n1 = R.contract_legs(1)
    results.append(
        CheckResult("n1", n1 == unit2, None if n1 == unit2 else _first_diff(n1, unit2))
    )
    cyc231 = R.permute_legs(_CYCLE_231)
    n2 = cyc231.contract_legs(2)
    results.append(
        CheckResult("n2", n2 == unit2, None if n2 == unit2 else _first_diff(n2, unit2))
    )
    n3 = R.contract_legs(2)
    results.append(
        CheckResult("n3", n3 == unit2, None if n3 == unit2 else _first_diff(n3, unit2))
    )

    results.append(
        CheckResult("cyc1", cyc231 == R, None if cyc231 == R else _first_diff(cyc231, R))
    )
    cyc312 = R.permute_legs(_CYCLE_312)
    results.append(
        CheckResult("cyc2", cyc312 == R, None if cyc312 == R else _first_diff(cyc312, R))
    )

    r123 = R.embed_legs(4, (1, 2, 3))
    r124 = R.embed_legs(4, (1, 2, 4))
    r134 = R.embed_legs(4, (1, 3, 4))
    r234 = R.embed_legs(4, (2, 3, 4))
    q1 = tensor_mul(r123, r134)
    results.append(
        CheckResult("q1", q1 == r124, None if q1 == r124 else _first_diff(q1, r124))
    )
    q2 = tensor_mul(r124, r234)
    results.append(
        CheckResult("q2", q2 == r134, None if q2 == r134 else _first_diff(q2, r134))
    )
    return CheckReport(results)


# -- closed forms --------------------------------------------------------------


def matrix_closed_form(n: int, field: Field) -> TensorElement:
    """The matrix-algebra R-matrix: sum over i,j,k of
    e_ij (x) e_ki (x) e_jk, in row-major matrix-unit coordinates."""
    A = build_matrix_algebra(n, field)
    one = field.one
    terms = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                terms.append(((i * n + j, k * n + i, j * n + k), one))
    return TensorElement.from_terms(A, 3, terms)


def quaternion_closed_form(a, b, field: Field) -> TensorElement:
    """The sixteen-term quaternion R-matrix in the basis (1, i, j, k).

    Coefficients are 1/4 on 1^3, 1/(4a) on the i-pairs, 1/(4b) on the
    j-pairs, -1/(4ab) on the k-pairs, +1/(4ab) on the even ijk rotations
    and -1/(4ab) on the odd ones.
    """
    A = build_quaternion(a, b, field)
    F = field
    a = F.coerce(a)
    b = F.coerce(b)
    quarter = F.inv(F.from_int(4))
    c_i = F.div(quarter, a)
    c_j = F.div(quarter, b)
    c_ab = F.div(quarter, F.mul(a, b))
    neg_ab = F.neg(c_ab)
    terms = [((0, 0, 0), quarter)]
    terms += [(digs, c_i) for digs in ((0, 1, 1), (1, 0, 1), (1, 1, 0))]
    terms += [(digs, c_j) for digs in ((0, 2, 2), (2, 0, 2), (2, 2, 0))]
    terms += [(digs, neg_ab) for digs in ((0, 3, 3), (3, 0, 3), (3, 3, 0))]
    terms += [(digs, c_ab) for digs in ((1, 2, 3), (2, 3, 1), (3, 1, 2))]
    terms += [(digs, neg_ab) for digs in ((2, 1, 3), (3, 2, 1), (1, 3, 2))]
    return TensorElement.from_terms(A, 3, terms)


def tensor_rmatrix(
    cert_a: RMatrixCertificate, cert_b: RMatrixCertificate
) -> RMatrixCertificate:
    """Certificate for A (x) B whose element interleaves the two solved
    tensors legwise: leg t of the product is (leg t of R, leg t of S)."""
    A, B = cert_a.algebra, cert_b.algebra
    if A.field != B.field:
        raise FieldMismatch(f"{A.field!r} vs {B.field!r}")
    prod = build_tensor_product(A, B)
    F = prod.field
    nB = B.dim
    terms = []
    for _, da, ca in cert_a.r.iter_nonzero():
        for _, db, cb in cert_b.r.iter_nonzero():
            digits = tuple(x * nB + y for x, y in zip(da, db))
            terms.append((digits, F.mul(ca, cb)))
    t = TensorElement.from_terms(prod, 3, terms)
    return _certify(prod, t, None)


def certify(A: Algebra, r: TensorElement) -> RMatrixCertificate:
    """Wrap an externally supplied tensor in a fully verified certificate."""
    return _certify(A, r, None)
