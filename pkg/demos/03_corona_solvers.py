"""Corona problems in the rational half-plane algebras.

A tuple of functions analytic and bounded in a half-plane is jointly
invertible (admits g with sum g_j h_j = 1 in the algebra) exactly when the
functions have no common zero in the closed half-plane, the point at
infinity included.  Over the larger algebra of functions merely bounded on
the line, common zeros and poles inside the half-plane can be divided out
as an invertible rational factor first, so only zeros on the extended real
line obstruct solvability.
"""

from whfactor import (
    APPoly,
    GaussianRational,
    Polynomial,
    RationalFunction,
    corona_solve_ap,
    corona_solve_hplus,
    corona_solve_mplus,
)

I = GaussianRational(0, 1)
X = Polynomial.x()


def lin(root):
    return Polynomial([-GaussianRational.coerce(root), GaussianRational(1)])


print("== analytic solver ==")
h = [RationalFunction(lin(I), lin(-I)), RationalFunction(1, lin(-I))]
out = corona_solve_hplus(h, "+")
print("tuple [(x-i)/(x+i), 1/(x+i)] solves with g =", out.solution)
total = sum((g * f for g, f in zip(out.solution, h)), RationalFunction(0))
print("sum g_j h_j =", total)

print()
print("== a planted common zero on the line is a hard failure ==")
bad = [RationalFunction(X - 1, lin(-I)), RationalFunction(X - 1, lin(-3 * I))]
fail = corona_solve_hplus(bad, "+")
print("witness:", fail.witness, "-", fail.reason)

print()
print("== bounded vs analytic ==")
two_i = GaussianRational(0, 2)
fam = [
    RationalFunction(lin(two_i), lin(-I)),
    RationalFunction(lin(two_i) * lin(3 * I), lin(-I) * lin(-I)),
]
m_out = corona_solve_mplus(fam, "+")
print("over bounded functions: status", m_out.status)
print("  invertible rational factor divided out:", m_out.gr_factor)
gm, k, gp = m_out.gr_split
print("  factor split: lower-analytic part", gm.expand(), "| power of r:", k,
      "| upper-analytic part", gp.expand())
h_out = corona_solve_hplus(fam, "+")
print("over analytic functions: status", h_out.status, "| witness", h_out.witness)

print()
print("== almost periodic fragment ==")
from fractions import Fraction

E = APPoly.e
tup = [E(0) + E(1, Fraction(1, 4)), E(2)]
ap = corona_solve_ap(tup, "+")
print("tuple [1 + (1/4)e_1, e_2]: status", ap.status, "| exact:", ap.exact)
print("  declared-approximation residual bound:", ap.residual_bound)
residual_check = APPoly.coerce(1)
for g, p in zip(ap.solution, tup):
    residual_check = residual_check - g * p
print("  residual matches the reported one exactly:", residual_check == ap.residual)
common = corona_solve_ap([E(1), E(2)], "+")
print("tuple [e_1, e_2]: status", common.status, "| common factor", common.witness)
undecided = corona_solve_ap([E(0) + E(1), E(2)], "+")
print("tuple [1 + e_1, e_2]: status", undecided.status,
      "(outside the dominant-coefficient fragment)")
