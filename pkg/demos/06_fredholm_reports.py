"""Toeplitz operator diagnostics.

Partial indices determine the defect dimensions exactly: the kernel
collects the negative parts, the cokernel the positive parts.  Structural
certificates (one-sided-invertible complements, boundary-relation pairs,
unitarity or orthogonality with constant determinant, continuity outside
one row) transfer Fredholm data between the matrix operator and the scalar
operator of its determinant - a report never claims more than its
certificate proves.
"""

from fractions import Fraction

from whfactor import (
    MixedFunction,
    Polynomial,
    RationalFunction,
    classify,
    continuous_except_line,
    r_function,
    report_from_indices,
    special_orthogonal,
    special_unitary,
)
from whfactor.matrices import MIXED, RAT, RingMatrix

X = Polynomial.x()
r = r_function()


def rat(rows):
    return RingMatrix(RAT, [[RationalFunction.coerce(e) for e in row] for row in rows])


print("== defect dimensions from indices ==")
for ks in ([0, 0, -2], [0, 0, 0], [1, -1]):
    rep = report_from_indices(ks)
    print(f"indices {ks}: ker {rep.dim_ker}, coker {rep.dim_coker}, "
          f"index {rep.index}, one-sided-kernel verdict: {rep.coburn}")

print()
print("== strict vs near equivalence ==")
a = RationalFunction(1, X * X + 1)
G = rat([[1, 0], [a, r**-1]])
rep = classify(G, "row", "H", omitted=1, phi_plus=rat([[1], [0]]))
print("analytic-level certificate:", rep.equivalence, "equivalent;",
      f"dimensions copied from det G: ker {rep.dim_ker}, coker {rep.dim_coker}")
print("justification tag:", rep.justification)

print()
print("== unitary symbol with constant determinant ==")
uni = special_unitary(rat([[r, 0], [0, r**-1]]))
print("diag(r, 1/r):", uni.fredholm, "| indices", uni.partial_indices,
      "| ker", uni.dim_ker, "| coker", uni.dim_coker)
print("Fredholm but not invertible: both defect numbers positive")

print()
print("== orthogonal symbol (a rational rotation) ==")
c = RationalFunction(X * X - 1, X * X + 1)
s = RationalFunction(Polynomial([0, 2]), X * X + 1)
orth = special_orthogonal(rat([[c, s], [RationalFunction(0) - s, c]]))
print("rotation by (c, s):", orth.fredholm, "| index", orth.index)
for note in orth.notes:
    print("  note:", note)

print()
print("== continuous outside one row ==")
e_half = MixedFunction([(Fraction(1, 2), RationalFunction(1))])
G2 = RingMatrix(
    MIXED,
    [
        [MixedFunction.coerce(1), MixedFunction.coerce(0)],
        [e_half, MixedFunction.coerce(r)],
    ],
)
rep2 = continuous_except_line(G2)
print("[[1, 0], [e_{1/2}, r]]:", rep2.equivalence, "equivalent;",
      "Fredholm:", rep2.fredholm)
print("determinant diagnostics:", rep2.scalar)
print("the matrix operator's own index stays unset:", rep2.index)
