"""Exact base arithmetic.

Everything in this library runs over Q(i): complex numbers with rational
real and imaginary parts.  That keeps half-plane membership of zeros and
poles an exact yes/no question, which the factorization layers depend on.
"""

from fractions import Fraction

from whfactor import (
    GaussianRational,
    Polynomial,
    RationalFunction,
    factor_numeric,
    mobius_from_disk,
    mobius_to_disk,
    normalize,
)

I = GaussianRational(0, 1)
X = Polynomial.x()

print("== canonical rational functions ==")
f = normalize(X * X - 1, (X - 1).scale(2))
print("(x^2 - 1) / (2x - 2) reduces to:", f)
print("structural equality is mathematical equality:",
      f == RationalFunction(Polynomial([Fraction(1, 2), Fraction(1, 2)])))

print()
print("== factoring with exact snap ==")
g = RationalFunction(X * X + 1, X * X + 4)
fac = factor_numeric(g)
print("(x^2+1)/(x^2+4) factors as:", fac)
for root, mult, tag in fac.tags():
    where = {"+": "upper half-plane", "-": "lower half-plane", "R": "real line"}[tag]
    print(f"  root {root} (multiplicity {mult}) lies in the {where}")
print("expanding the factors reproduces the input exactly:", fac.expand() == g)

print()
print("== the disk substitution ==")
r = RationalFunction(X - Polynomial([I]), X + Polynomial([I]))
print("r(x) = (x-i)/(x+i) becomes the coordinate w on the disk:", mobius_to_disk(r))
h = RationalFunction(1, X + Polynomial([I]))
print("1/(x+i) becomes:", mobius_to_disk(h))
print("the substitution is invertible:", mobius_from_disk(mobius_to_disk(h)) == h)
print("and multiplicative:",
      mobius_to_disk(r * h) == mobius_to_disk(r) * mobius_to_disk(h))
