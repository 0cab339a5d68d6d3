"""The almost periodic layer.

Almost periodic polynomials (finite sums of exponentials e_freq with exact
rational frequencies) factor with exponential diagonals diag(e_mu_j) in
place of powers of r.  The omitted-row construction needs the off-diagonal
scalar to split across the spectral gap (0, kappa); when a frequency falls
inside the gap the route refuses and names it rather than claiming the
(0, ..., 0, kappa) index list.  The boundary-relation route shifts its
correction term downward and never needs the gap.
"""

from fractions import Fraction

from whfactor import (
    APPoly,
    SplitUnavailable,
    ap_factor_via_rh,
    ap_factor_via_row,
    ap_project,
    ap_special,
    mean_motion,
)
from whfactor.matrices import AP, RingMatrix

E = APPoly.e


def ap(rows):
    return RingMatrix(AP, [[APPoly.coerce(e) for e in row] for row in rows])


print("== frequency-sign projections ==")
p = E(-1, 2) + E(0, 5) + E(2)
print("p =", p)
print("plus part: ", ap_project(p, "+"))
print("minus part:", ap_project(p, "-"))

print()
print("== mean motion ==")
for q in (E(2), E(1, 3) + E(-1), E(1) + E(-1)):
    mm = mean_motion(q)
    print(f"{q}: kappa = {mm.kappa} ({mm.method}) {mm.note}")

print()
print("== omitted-row factorization ==")
G = ap([[E(0), 0], [E(-1) + E(2, 4), E(1)]])
phi_plus = ap([[E(0)], [0]])
out = ap_factor_via_row(G, 1, phi_plus)
print("G = [[1, 0], [e_-1 + 4e_2, e_1]] factors with indices", out.partial_ap_indices)
print("g_minus:", out.g_minus)
print("g_plus: ", out.g_plus)
print("reconstructs exactly:", out.reconstruct() == G)

print()
print("== the spectral gap refusal ==")
fixture = ap([[E(0), 0], [E(Fraction(1, 2)), E(1)]])
refusal = ap_factor_via_row(fixture, 1, phi_plus)
assert isinstance(refusal, SplitUnavailable)
print("G = [[1, 0], [e_{1/2}, e_1]]:", refusal.reason)
print("offending frequencies:", refusal.offending, "| kappa =", refusal.kappa)

print()
print("== the boundary-relation route has no gap ==")
G2 = ap([[E(0), E(Fraction(1, 2))], [0, E(1)]])
col_plus = ap([[E(0)], [0]])
row_inv = ap([[E(0), 0]])
out2 = ap_factor_via_rh(G2, col_plus, col_plus, row_inv, row_inv)
print("G = [[1, e_{1/2}], [0, e_1]] factors with indices", out2.partial_ap_indices)
print("reconstructs exactly:", out2.reconstruct() == G2)

print()
print("== unitary almost periodic symbols ==")
swap = ap([[0, E(1)], [E(-1), 0]])
rep = ap_special(swap, "unitary")
print("[[0, e_1], [e_-1, 0]]:", rep.fredholm)
for note in rep.notes:
    print("  note:", note)
ident = ap([[E(0), 0], [0, E(0)]])
print("identity:", ap_special(ident, "unitary").fredholm)
