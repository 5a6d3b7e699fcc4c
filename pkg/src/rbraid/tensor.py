"""Calculus of elements of n-fold tensor powers of an algebra.

A TensorElement of arity m over an algebra of dimension n is a dense
coefficient vector of length n^m; the basis monomial
e_{i1} (x) ... (x) e_{im} sits at index sum(i_t * n^(m-t)), i.e. leg 1 is
the most significant digit.  Operations iterate over nonzero monomials
only, so products in a 16-dimensional algebra's fourth tensor power stay
cheap even though the dense vector has 65536 slots.
"""
from __future__ import annotations

from .algebra import Algebra, AlgebraElement
from .errors import (
    ArityMismatch,
    BadPermutation,
    BadSlots,
    LegOutOfRange,
    ShapeMismatch,
)


class TensorElement:
    """Element of the m-fold tensor power of a fixed algebra."""

    __slots__ = ("algebra", "arity", "coeffs")

    def __init__(self, algebra: Algebra, arity: int, coeffs):
        if arity < 1:
            raise ShapeMismatch("arity must be >= 1")
        size = algebra.dim ** arity
        if len(coeffs) != size:
            raise ShapeMismatch(f"{len(coeffs)} coefficients, expected {size}")
        self.algebra = algebra
        self.arity = arity
        self.coeffs = list(coeffs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, algebra: Algebra, arity: int) -> "TensorElement":
        return cls(algebra, arity, [algebra.field.zero] * (algebra.dim ** arity))

    @classmethod
    def from_terms(cls, algebra: Algebra, arity: int, terms) -> "TensorElement":
        """Build from an iterable of (digits, coefficient) pairs."""
        out = cls.zero(algebra, arity)
        F = algebra.field
        for digits, c in terms:
            idx = out.index_of(digits)
            out.coeffs[idx] = F.add(out.coeffs[idx], c)
        return out

    # -- indexing -------------------------------------------------------------

    def index_of(self, digits) -> int:
        n = self.algebra.dim
        if len(digits) != self.arity:
            raise ShapeMismatch(f"{len(digits)} digits for arity {self.arity}")
        idx = 0
        for d in digits:
            if not 0 <= d < n:
                raise ShapeMismatch(f"basis index {d} out of range")
            idx = idx * n + d
        return idx

    def digits_of(self, index: int):
        n = self.algebra.dim
        out = [0] * self.arity
        for t in range(self.arity - 1, -1, -1):
            index, out[t] = divmod(index, n)
        return tuple(out)

    def iter_nonzero(self):
        for idx, c in enumerate(self.coeffs):
            if c:
                yield idx, self.digits_of(idx), c

    def nnz(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def coefficient(self, digits):
        return self.coeffs[self.index_of(digits)]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- linear structure -------------------------------------------------------

    def _check_compatible(self, other: "TensorElement") -> None:
        self.algebra.check_same(other.algebra)
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")

    def __add__(self, other):
        self._check_compatible(other)
        F = self.algebra.field
        return TensorElement(
            self.algebra, self.arity,
            [F.add(a, b) for a, b in zip(self.coeffs, other.coeffs)],
        )

    def __sub__(self, other):
        self._check_compatible(other)
        F = self.algebra.field
        return TensorElement(
            self.algebra, self.arity,
            [F.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)],
        )

    def __neg__(self):
        F = self.algebra.field
        return TensorElement(self.algebra, self.arity, [F.neg(a) for a in self.coeffs])

    def scale(self, c):
        F = self.algebra.field
        return TensorElement(self.algebra, self.arity, [F.mul(c, a) for a in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (
            self.algebra.same_as(other.algebra)
            and self.arity == other.arity
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"TensorElement(arity={self.arity}, nnz={self.nnz()}, {self.algebra.label!r})"

    # -- multiplicative structure ------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return tensor_mul(self, other)

    def contract_legs(self, leg: int) -> "TensorElement":
        """Replace legs `leg`, `leg`+1 (1-based) by their algebra product."""
        if not 1 <= leg < self.arity:
            raise LegOutOfRange(f"leg {leg} for arity {self.arity}")
        A = self.algebra
        F = A.field
        out = TensorElement.zero(A, self.arity - 1)
        pos = leg - 1
        for _, digits, c in self.iter_nonzero():
            head = digits[:pos]
            tail = digits[pos + 2:]
            for k, ck in A.basis_products[digits[pos]][digits[pos + 1]]:
                idx = out.index_of(head + (k,) + tail)
                out.coeffs[idx] = F.add(out.coeffs[idx], F.mul(c, ck))
        return out

    def permute_legs(self, perm) -> "TensorElement":
        """Send leg p to position perm[p-1]; `perm` is 1-based."""
        perm = tuple(perm)
        if sorted(perm) != list(range(1, self.arity + 1)):
            raise BadPermutation(f"{perm} is not a permutation of 1..{self.arity}")
        out = TensorElement.zero(self.algebra, self.arity)
        for idx, digits, c in self.iter_nonzero():
            new = [0] * self.arity
            for p in range(self.arity):
                new[perm[p] - 1] = digits[p]
            out.coeffs[out.index_of(new)] = c
        return out

    def embed_legs(self, target_arity: int, slots) -> "TensorElement":
        """Place the legs at the listed slots, the unit everywhere else."""
        slots = tuple(slots)
        if len(slots) != self.arity:
            raise BadSlots(f"{len(slots)} slots for arity {self.arity}")
        if any(not 1 <= s <= target_arity for s in slots):
            raise BadSlots(f"slots {slots} outside 1..{target_arity}")
        if any(a >= b for a, b in zip(slots, slots[1:])):
            raise BadSlots(f"slots {slots} must be strictly increasing")
        A = self.algebra
        F = A.field
        unit_slots = [s for s in range(1, target_arity + 1) if s not in slots]
        unit_nz = [(i, u) for i, u in enumerate(A.unit) if u]
        # all ways to fill the unit slots with basis indices of the unit
        fills = [((), F.one)]
        for _ in unit_slots:
            fills = [(combo + (i,), F.mul(c, u)) for combo, c in fills for i, u in unit_nz]
        out = TensorElement.zero(A, target_arity)
        for _, digits, c in self.iter_nonzero():
            for combo, cu in fills:
                new = [0] * target_arity
                for t, s in enumerate(slots):
                    new[s - 1] = digits[t]
                for t, s in enumerate(unit_slots):
                    new[s - 1] = combo[t]
                idx = out.index_of(new)
                out.coeffs[idx] = F.add(out.coeffs[idx], F.mul(c, cu))
        return out

    def act_leg(self, leg: int, a: AlgebraElement, side: str) -> "TensorElement":
        """Multiply one leg by an algebra element on the chosen side."""
        if not 1 <= leg <= self.arity:
            raise LegOutOfRange(f"leg {leg} for arity {self.arity}")
        if side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        A = self.algebra
        A.check_same(a.algebra)
        F = A.field
        pos = leg - 1
        out = TensorElement.zero(A, self.arity)
        for _, digits, c in self.iter_nonzero():
            d = digits[pos]
            for i, ai in enumerate(a.coords):
                if not ai:
                    continue
                prods = A.basis_products[i][d] if side == "left" else A.basis_products[d][i]
                cai = F.mul(c, ai)
                for k, ck in prods:
                    idx = self.index_of(digits[:pos] + (k,) + digits[pos + 1:])
                    out.coeffs[idx] = F.add(out.coeffs[idx], F.mul(cai, ck))
        return out

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> dict:
        fmt = self.algebra.field.format
        entries = [
            {"monomial": list(digits), "value": fmt(c)}
            for _, digits, c in self.iter_nonzero()
        ]
        return {"arity": self.arity, "coeffs": entries}

    @classmethod
    def from_json(cls, algebra: Algebra, obj) -> "TensorElement":
        out = cls.zero(algebra, int(obj["arity"]))
        F = algebra.field
        for entry in obj["coeffs"]:
            idx = out.index_of(tuple(entry["monomial"]))
            out.coeffs[idx] = F.add(out.coeffs[idx], F.parse(entry["value"]))
        return out


def unit_tensor(algebra: Algebra, arity: int) -> TensorElement:
    """The multiplicative identity 1 (x) ... (x) 1 of the arity-fold power."""
    if arity < 1:
        raise ShapeMismatch("arity must be >= 1")
    F = algebra.field
    unit_nz = [(i, u) for i, u in enumerate(algebra.unit) if u]
    terms = [((), F.one)]
    for _ in range(arity):
        terms = [(combo + (i,), F.mul(c, u)) for combo, c in terms for i, u in unit_nz]
    return TensorElement.from_terms(algebra, arity, terms)


def tensor_mul(s: TensorElement, t: TensorElement) -> TensorElement:
    """Legwise product in the tensor-power algebra."""
    s._check_compatible(t)
    A = s.algebra
    F = A.field
    prods = A.basis_products
    out = TensorElement.zero(A, s.arity)
    s_nz = list(s.iter_nonzero())
    t_nz = list(t.iter_nonzero())
    for _, ds, cs in s_nz:
        for _, dt, ct in t_nz:
            partial = [((), F.mul(cs, ct))]
            for a, b in zip(ds, dt):
                nxt = []
                for combo, c in partial:
                    for k, ck in prods[a][b]:
                        nxt.append((combo + (k,), F.mul(c, ck)))
                partial = nxt
                if not partial:
                    break
            for combo, c in partial:
                idx = out.index_of(combo)
                out.coeffs[idx] = F.add(out.coeffs[idx], c)
    return out
