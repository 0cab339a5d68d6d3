"""One-sided inverses of rectangular matrices over a commutative ring.

A tall matrix is left invertible exactly when its maximal minors admit a
Bezout combination equal to 1; the inverse is assembled from adjugate
blocks weighted by the Bezout coefficients.  A corank-one matrix and its
left inverse extend to a mutually inverse square pair whose determinant is
(-1)**(n-1) - the completion that the factorization routes build on.
"""

from whfactor import (
    complete,
    delta_left_inverse_from_psi,
    field_bezout_solver,
    left_inverse_corank1,
    maximal_minors,
    omitted_row_minors,
    one_sided_diagnose,
)
from whfactor.matrices import QI, RingMatrix

phi = RingMatrix(QI, [[1, 0], [0, 1], [2, 3]])
print("phi =", phi)

mv = maximal_minors(phi)
print("maximal minors, lexicographic row subsets:")
for subset, value in zip(mv.subsets_one_based(), mv.values):
    print(f"  rows {subset}: {value}")
print("omitted-row order:", [str(v) for v in omitted_row_minors(phi)])

print()
print("== Bezout certificate -> left inverse ==")
cert = [0, 0, 1]  # pairs against the omitted-row minors [-2, 3, 1]
psi = left_inverse_corank1(phi, cert)
print("psi =", psi)
print("psi * phi is the identity:", (psi * phi).is_identity())

print()
print("== minor pairing ==")
delta_star = delta_left_inverse_from_psi(psi, phi)
print("column-subset minors of psi:", [str(v) for v in delta_star])
pairing = QI.zero
for c, d in zip(delta_star, mv.values):
    pairing = pairing + c * d
print("they pair with the minors of phi to:", pairing)

print()
print("== completion ==")
comp = complete(phi, psi)
print("phi_e =", comp.phi_e)
print("psi_e =", comp.psi_e)
print("det phi_e =", comp.det_value, "(always (-1)**(n-1))")

print()
print("== the diagnose loop ==")
diag = one_sided_diagnose(phi, "left", field_bezout_solver)
print("status:", diag.status, "| certificate:", [str(c) for c in diag.certificate])
deficient = RingMatrix(QI, [[1, 2], [2, 4], [3, 6]])
print("rank-deficient matrix:", one_sided_diagnose(deficient, "left", field_bezout_solver).status)
