"""Scalar Wiener-Hopf factorization and the weighted projections.

A rational symbol with no zeros or poles on the extended real line splits
exactly into a lower-analytic factor, an integer power of the inner
function r(x) = (x-i)/(x+i), and an upper-analytic factor normalized at
infinity.  The exponent equals the winding number of the symbol, checked
here against an independent numeric contour count.
"""

from whfactor import (
    FactoredRational,
    GaussianRational,
    Polynomial,
    RationalFunction,
    riesz_project,
    wh_factor_scalar,
    winding_exact,
    winding_numeric,
)

I = GaussianRational(0, 1)
X = Polynomial.x()

print("== factoring (x-2i)/(x+3i) ==")
f = FactoredRational(1, [(GaussianRational(0, 2), 1), (GaussianRational(0, -3), -1)])
wh = wh_factor_scalar(f)
print("gamma_minus =", wh.gamma_minus.expand())
print("exponent k  =", wh.k)
print("gamma_plus  =", wh.gamma_plus.expand())
print("product reconstructs the symbol:", wh.reconstruct() == f.expand())
print("factorization valid", wh.p_note)

print()
print("== winding numbers, exact and numeric ==")
g = FactoredRational(
    1,
    [
        (GaussianRational(0, 2), 2),
        (GaussianRational(0, -5), 1),
        (GaussianRational(0, 7), -1),
        (GaussianRational(0, -1), -2),
    ],
)
print("zero/pole count gives:", winding_exact(g))
print("contour accumulation gives:", winding_numeric(g, grid=256))

print()
print("== weighted projections ==")
phi = RationalFunction(1, X * X + 1)
proj = riesz_project(phi)
print("symbol:", phi)
print("plus part (poles below the line): ", proj.plus_part)
print("minus part (poles above the line):", proj.minus_part)
print("the parts sum back exactly:", proj.plus_part + proj.minus_part == phi)
again = riesz_project(proj.plus_part)
print("projections are idempotent:", again.plus_part == proj.plus_part)
