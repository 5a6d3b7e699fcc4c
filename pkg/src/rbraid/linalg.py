"""Exact sparse linear algebra over a Field.

Matrices store one dict per row mapping column -> nonzero value.  All
eliminations are plain Gauss-Jordan with eager canonicalization; the
reduced row echelon form of a matrix is unique, so every derived object
(rank, pivot set, nullspace parametrization, affine solutions) is
deterministic and byte-stable across runs.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import NotSquare, ShapeMismatch
from .fields import Field

Row = dict


class Echelon:
    """Incremental Gauss-Jordan eliminator.

    Stored rows are fully reduced: coefficient one at their pivot column
    and zero at every other pivot column.  Columns at or beyond
    `pivot_limit` are never chosen as pivots; rows whose pivotable part
    reduces to zero but which keep support beyond the limit are retained
    as residue rows (they drive consistency checks for augmented solves).
    """

    def __init__(self, field: Field, ncols: int, pivot_limit: int | None = None):
        self.field = field
        self.ncols = ncols
        self.pivot_limit = ncols if pivot_limit is None else pivot_limit
        self.rows: list[Row] = []
        self.pivots: dict[int, int] = {}  # pivot column -> row index
        self.residues: list[Row] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: Row) -> Row:
        """Residue of `row` modulo the current row span (fresh dict)."""
        F = self.field
        zero, sub, mul = F.zero, F.sub, F.mul
        out = dict(row)
        # A stored row has no support on other pivot columns, so a single
        # pass over the initial pivot hits fully reduces the input.
        for c in [c for c in out if c in self.pivots]:
            coef = out.pop(c)
            for j, v in self.rows[self.pivots[c]].items():
                if j == c:
                    continue
                w = sub(out.get(j, zero), mul(coef, v))
                if w:
                    out[j] = w
                else:
                    out.pop(j, None)
        return out

    def insert(self, row: Row) -> bool:
        """Add one row; return True when the rank grew."""
        F = self.field
        out = self.reduce(row)
        if not out:
            return False
        pivotable = [c for c in out if c < self.pivot_limit]
        if not pivotable:
            self.residues.append(out)
            return False
        p = min(pivotable)
        scale = F.inv(out[p])
        if scale != F.one:
            out = {j: F.mul(scale, v) for j, v in out.items()}
        zero, sub, mul = F.zero, F.sub, F.mul
        for r in self.rows:
            if p in r:
                coef = r.pop(p)
                for j, v in out.items():
                    if j == p:
                        continue
                    w = sub(r.get(j, zero), mul(coef, v))
                    if w:
                        r[j] = w
                    else:
                        r.pop(j, None)
        self.pivots[p] = len(self.rows)
        self.rows.append(out)
        return True

    def extend(self, rows) -> None:
        for row in rows:
            self.insert(row)

    def pivot_columns(self) -> tuple[int, ...]:
        return tuple(sorted(self.pivots))

    def free_columns(self) -> tuple[int, ...]:
        return tuple(c for c in range(self.pivot_limit) if c not in self.pivots)


@dataclass
class AffineSolution:
    """Solution set of M x = b: empty, or particular + nullspace span."""

    is_empty: bool
    particular: list | None = None
    basis: list = dc_field(default_factory=list)

    @property
    def dimension(self) -> int:
        return -1 if self.is_empty else len(self.basis)


class Matrix:
    """Immutable-by-convention exact matrix with sparse rows."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, nrows: int, ncols: int, rows: list[Row] | None = None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            rows = [{} for _ in range(nrows)]
        if len(rows) != nrows:
            raise ShapeMismatch(f"{len(rows)} rows for a {nrows}x{ncols} matrix")
        self.rows = rows

    # -- construction --------------------------------------------------

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, [{i: field.one} for i in range(n)])

    @classmethod
    def from_dense(cls, field, entries):
        nrows = len(entries)
        ncols = len(entries[0]) if nrows else 0
        rows = []
        for r in entries:
            if len(r) != ncols:
                raise ShapeMismatch("ragged dense matrix")
            rows.append({j: v for j, v in enumerate(r) if v})
        return cls(field, nrows, ncols, rows)

    @classmethod
    def from_columns(cls, field, nrows, columns):
        rows = [{} for _ in range(nrows)]
        for j, col in enumerate(columns):
            if len(col) != nrows:
                raise ShapeMismatch("column length mismatch")
            for i, v in enumerate(col):
                if v:
                    rows[i][j] = v
        return cls(field, nrows, len(columns), rows)

    # -- basic queries --------------------------------------------------

    def entry(self, i, j):
        return self.rows[i].get(j, self.field.zero)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def to_dense(self):
        z = self.field.zero
        return [[r.get(j, z) for j in range(self.ncols)] for r in self.rows]

    def column(self, j):
        z = self.field.zero
        return [r.get(j, z) for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field!r}, nnz={self.nnz()})"

    # -- arithmetic -----------------------------------------------------

    def _check_same_shape(self, other):
        self.field.check_same(other.field)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch(
                f"{self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}"
            )

    def __add__(self, other):
        self._check_same_shape(other)
        F = self.field
        rows = []
        for ra, rb in zip(self.rows, other.rows):
            row = dict(ra)
            for j, v in rb.items():
                w = F.add(row.get(j, F.zero), v)
                if w:
                    row[j] = w
                else:
                    row.pop(j, None)
            rows.append(row)
        return Matrix(F, self.nrows, self.ncols, rows)

    def __sub__(self, other):
        return self + other.scale(self.field.neg(self.field.one))

    def scale(self, c):
        F = self.field
        if c == F.zero:
            return Matrix.zeros(F, self.nrows, self.ncols)
        return Matrix(
            F, self.nrows, self.ncols,
            [{j: F.mul(c, v) for j, v in r.items()} for r in self.rows],
        )

    def __neg__(self):
        return self.scale(self.field.neg(self.field.one))

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self.field.check_same(other.field)
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"{self.ncols} cols vs {other.nrows} rows")
        F = self.field
        zero, add, mul = F.zero, F.add, F.mul
        rows = []
        for ra in self.rows:
            acc: Row = {}
            for k, a in ra.items():
                for j, b in other.rows[k].items():
                    w = add(acc.get(j, zero), mul(a, b))
                    if w:
                        acc[j] = w
                    else:
                        acc.pop(j, None)
            rows.append(acc)
        return Matrix(F, self.nrows, other.ncols, rows)

    def matvec(self, vec):
        if len(vec) != self.ncols:
            raise ShapeMismatch(f"vector length {len(vec)} vs {self.ncols} cols")
        F = self.field
        add, mul = F.add, F.mul
        nz = {j: x for j, x in enumerate(vec) if x}
        out = []
        for r in self.rows:
            acc = F.zero
            if len(r) <= len(nz):
                for j, v in r.items():
                    x = nz.get(j)
                    if x is not None:
                        acc = add(acc, mul(v, x))
            else:
                for j, x in nz.items():
                    v = r.get(j)
                    if v is not None:
                        acc = add(acc, mul(v, x))
            out.append(acc)
        return out

    def transpose(self):
        rows: list[Row] = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                rows[j][i] = v
        return Matrix(self.field, self.ncols, self.nrows, rows)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product, row/column index of (i, k) is i*other.n + k."""
        self.field.check_same(other.field)
        F = self.field
        rows: list[Row] = []
        for ra in self.rows:
            for rb in other.rows:
                row = {}
                for j, a in ra.items():
                    base = j * other.ncols
                    for l, b in rb.items():
                        row[base + l] = F.mul(a, b)
                rows.append(row)
        return Matrix(F, self.nrows * other.nrows, self.ncols * other.ncols, rows)

    # -- eliminations ----------------------------------------------------

    def _echelon(self, pivot_limit=None) -> Echelon:
        ech = Echelon(self.field, self.ncols, pivot_limit)
        ech.extend(self.rows)
        return ech

    def rref(self):
        """Return (reduced row echelon form, rank, pivot columns)."""
        ech = self._echelon()
        pivots = ech.pivot_columns()
        rows = [dict(ech.rows[ech.pivots[p]]) for p in pivots]
        rows += [{} for _ in range(self.nrows - len(rows))]
        return Matrix(self.field, self.nrows, self.ncols, rows), ech.rank, pivots

    def rank(self) -> int:
        return self._echelon().rank

    def nullspace(self):
        """Canonical basis of the kernel (one vector per free column)."""
        ech = self._echelon()
        basis = nullspace_from_echelon(ech)
        assert len(basis) + ech.rank == self.ncols  # rank-nullity
        return basis

    def solve_affine(self, b) -> AffineSolution:
        """Full solution set of M x = b."""
        if len(b) != self.nrows:
            raise ShapeMismatch(f"rhs length {len(b)} vs {self.nrows} rows")
        F = self.field
        bcol = self.ncols
        ech = Echelon(F, bcol + 1, pivot_limit=bcol)
        for i, r in enumerate(self.rows):
            row = dict(r)
            if b[i] != F.zero:
                row[bcol] = b[i]
            ech.insert(row)
        if any(res.get(bcol) for res in ech.residues):
            return AffineSolution(is_empty=True)
        particular = [F.zero] * self.ncols
        for p, ridx in ech.pivots.items():
            particular[p] = ech.rows[ridx].get(bcol, F.zero)
        return AffineSolution(False, particular, nullspace_from_echelon(ech))

    def is_bijective(self) -> bool:
        if self.nrows != self.ncols:
            raise NotSquare(f"{self.nrows}x{self.ncols}")
        return self.rank() == self.ncols


def nullspace_from_echelon(ech: Echelon):
    """Kernel basis in the canonical free-variable parametrization."""
    F = ech.field
    free = ech.free_columns()
    basis = []
    for f in free:
        vec = [F.zero] * ech.pivot_limit
        vec[f] = F.one
        for p, ridx in ech.pivots.items():
            v = ech.rows[ridx].get(f)
            if v is not None:
                vec[p] = F.neg(v)
        basis.append(vec)
    return basis


def coordinates_in_span(field: Field, basis, targets):
    """Coordinates of each target vector in the span of `basis`.

    `basis` must be linearly independent vectors of equal length; returns
    one coordinate list per target, or None where the target lies outside
    the span.  All targets are solved in a single elimination.
    """
    t = len(basis)
    if t == 0:
        return [None if any(tgt) else [] for tgt in targets]
    dim = len(basis[0])
    k = len(targets)
    ech = Echelon(field, t + k, pivot_limit=t)
    for i in range(dim):
        row: Row = {}
        for s, bvec in enumerate(basis):
            if bvec[i]:
                row[s] = bvec[i]
        for j, tgt in enumerate(targets):
            if tgt[i]:
                row[t + j] = tgt[i]
        if row:
            ech.insert(row)
    if ech.rank != t:
        raise ShapeMismatch("span basis is linearly dependent")
    out = []
    for j in range(k):
        col = t + j
        if any(res.get(col) for res in ech.residues):
            out.append(None)
            continue
        coords = [field.zero] * t
        for p, ridx in ech.pivots.items():
            coords[p] = ech.rows[ridx].get(col, field.zero)
        out.append(coords)
    return out
