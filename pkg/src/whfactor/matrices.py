"""Dense matrices over a pluggable commutative ring.

Determinants use subset dynamic programming (Laplace expansion with shared
minors), which is exact in any commutative ring and adequate at the small
sizes this library targets (n up to ~8).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ShapeMismatch
from .rings import (
    APPoly,
    GaussianRational,
    MixedFunction,
    Polynomial,
    RationalFunction,
)


@dataclass(frozen=True)
class Ring:
    """Minimal ring descriptor: identity elements plus unit inversion."""

    name: str
    zero: object
    one: object

    def coerce(self, x):
        return type(self.one).coerce(x)

    def invert(self, x):
        if self.name == "gaussian":
            return x.inv()
        if self.name == "polynomial":
            if x.degree != 0:
                raise ZeroDivisionError("only nonzero constants are units in the polynomial ring")
            return Polynomial([x.coeffs[0].inv()])
        if self.name == "rational":
            if x.is_zero:
                raise ZeroDivisionError("zero rational function")
            return RationalFunction(x.den, x.num)
        if self.name == "ap":
            if not x.is_monomial:
                raise ZeroDivisionError("only monomials are units among almost periodic polynomials")
            freq, coeff = x.terms[0]
            return APPoly([(-freq, coeff.inv())])
        if self.name == "mixed":
            if len(x.terms) != 1:
                raise ZeroDivisionError("only single-term mixed functions are inverted here")
            freq, coeff = x.terms[0]
            return MixedFunction([(-freq, 1 / coeff)])
        raise ZeroDivisionError(f"no unit inversion for ring {self.name}")


QI = Ring("gaussian", GaussianRational(0), GaussianRational(1))
POLY = Ring("polynomial", Polynomial(), Polynomial([1]))
RAT = Ring("rational", RationalFunction(0), RationalFunction(1))
AP = Ring("ap", APPoly(), APPoly.coerce(1))
MIXED = Ring("mixed", MixedFunction(), MixedFunction.coerce(1))

RINGS = {r.name: r for r in (QI, POLY, RAT, AP, MIXED)}


class RingMatrix:
    """Immutable dense matrix; entries share one ring."""

    __slots__ = ("rows", "cols", "entries", "ring")

    def __init__(self, ring: Ring, entries):
        rows = [list(r) for r in entries]
        if not rows or not rows[0]:
            raise ShapeMismatch("empty matrix")
        ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ShapeMismatch("ragged rows")
        coerced = tuple(tuple(ring.coerce(x) for x in r) for r in rows)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", coerced)

    def __setattr__(self, name, value):
        raise AttributeError("RingMatrix is immutable")

    @staticmethod
    def identity(ring: Ring, n: int) -> "RingMatrix":
        return RingMatrix(
            ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zeros(ring: Ring, rows: int, cols: int) -> "RingMatrix":
        return RingMatrix(ring, [[ring.zero] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> "RingMatrix":
        return RingMatrix(self.ring, [self.entries[i]])

    def col(self, j: int) -> "RingMatrix":
        return RingMatrix(self.ring, [[r[j]] for r in self.entries])

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __add__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("addition shape mismatch")
        return RingMatrix(
            self.ring,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
        )

    def __sub__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("subtraction shape mismatch")
        return RingMatrix(
            self.ring,
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
        )

    def __neg__(self):
        return RingMatrix(self.ring, [[-a for a in r] for r in self.entries])

    def __mul__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeMismatch(
                f"product shape mismatch: {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        zero = self.ring.zero
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return RingMatrix(self.ring, out)

    def scale(self, c) -> "RingMatrix":
        c = self.ring.coerce(c)
        return RingMatrix(self.ring, [[a * c for a in r] for r in self.entries])

    def map(self, fn, ring: Ring | None = None) -> "RingMatrix":
        return RingMatrix(ring or self.ring, [[fn(a) for a in r] for r in self.entries])

    def transpose(self) -> "RingMatrix":
        return RingMatrix(
            self.ring,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def submatrix(self, row_idx, col_idx) -> "RingMatrix":
        return RingMatrix(
            self.ring, [[self.entries[i][j] for j in col_idx] for i in row_idx]
        )

    def delete_row(self, i: int) -> "RingMatrix":
        return self.submatrix(
            [r for r in range(self.rows) if r != i], range(self.cols)
        )

    def delete_col(self, j: int) -> "RingMatrix":
        return self.submatrix(
            range(self.rows), [c for c in range(self.cols) if c != j]
        )

    def hstack(self, other: "RingMatrix") -> "RingMatrix":
        if self.rows != other.rows:
            raise ShapeMismatch("hstack row mismatch")
        return RingMatrix(
            self.ring, [list(a) + list(b) for a, b in zip(self.entries, other.entries)]
        )

    def vstack(self, other: "RingMatrix") -> "RingMatrix":
        if self.cols != other.cols:
            raise ShapeMismatch("vstack column mismatch")
        return RingMatrix(self.ring, list(self.entries) + list(other.entries))

    def permute_rows(self, perm) -> "RingMatrix":
        return RingMatrix(self.ring, [self.entries[p] for p in perm])

    def permute_cols(self, perm) -> "RingMatrix":
        return RingMatrix(
            self.ring, [[r[p] for p in perm] for r in self.entries]
        )

    def det(self):
        if self.rows != self.cols:
            raise ShapeMismatch("determinant of a non-square matrix")
        table = minors_by_subset(self, self.cols)
        return table[tuple(range(self.rows))]

    def adjugate(self) -> "RingMatrix":
        if self.rows != self.cols:
            raise ShapeMismatch("adjugate of a non-square matrix")
        n = self.rows
        if n == 1:
            return RingMatrix.identity(self.ring, 1)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                minor = self.submatrix(
                    [r for r in range(n) if r != j], [c for c in range(n) if c != i]
                ).det()
                row.append(minor if (i + j) % 2 == 0 else -minor)
            out.append(row)
        return RingMatrix(self.ring, out)

    def inverse(self) -> "RingMatrix":
        """Adjugate inverse; requires the determinant to be a unit of the ring."""
        d = self.det()
        inv_d = self.ring.invert(d)
        return self.adjugate().scale(inv_d)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(self.cols):
                want = self.ring.one if i == j else self.ring.zero
                if not self.entries[i][j] == want:
                    return False
        return True

    def __repr__(self):
        body = "; ".join(
            "[" + ", ".join(repr(a) for a in r) + "]" for r in self.entries
        )
        return f"RingMatrix({self.ring.name}, {self.rows}x{self.cols}: {body})"


def minors_by_subset(m: RingMatrix, size: int):
    """Determinants of (rows S, first |S| columns) submatrices for all row
    subsets S with |S| <= size, sharing subproblems across subsets."""
    if size > m.cols:
        raise ShapeMismatch("subset size exceeds column count")
    table: dict[tuple, object] = {(): m.ring.one}
    for k in range(1, size + 1):
        nxt = {}
        col = k - 1
        for subset in combinations(range(m.rows), k):
            acc = m.ring.zero
            # expand along the last column; positions run top to bottom
            for pos, i in enumerate(subset):
                entry = m.entries[i][col]
                minor = table[subset[:pos] + subset[pos + 1 :]]
                term = entry * minor
                if (pos + k - 1) % 2 == 1:
                    term = -term
                acc = acc + term
            nxt[subset] = acc
        table = nxt
    return table
