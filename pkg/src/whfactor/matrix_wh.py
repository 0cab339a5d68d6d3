"""Matrix Wiener-Hopf factorization of rational symbols from explicit
one-sided-inverse data.

Three routes are implemented.  Omitting a row whose complement is
right-invertible over the upper half-plane algebra (total index <= 0),
omitting a column whose complement is left-invertible over the lower
half-plane algebra (total index >= 0), and a boundary-relation route from a
pair of analytic solutions G*phi_plus = phi_minus (total index >= 0).  Each
route builds the square completions of the supplied data, conjugates the
symbol to a triangular form whose corner is det G, splits the off-diagonal
scalar with the weighted projections, and reassembles exact factors.

The off-corner entry is always projected after scaling by the inverse of
the plus determinant factor (gamma_plus**-1); with the unscaled entry the
assembled product reconstructs the symbol only when gamma_plus == 1.  The
correction is recorded in every construction trace.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    HypothesisViolation,
    IndexNonzero,
    MembershipViolation,
    RHResidualNonzero,
    ShapeMismatch,
)
from .exact_linalg import complete
from .matrices import RAT, RingMatrix
from .rings import DEFAULT_TOL, RationalFunction
from .scalar_wh import P_NOTE, ScalarWH, pole_split, r_function, riesz_project


@dataclass(frozen=True)
class WHFactorization:
    """Exact triple g_minus * diag(r**k_j) * g_plus == G with half-plane
    membership certificates on the factors and their inverses."""

    g_minus: RingMatrix
    partial_indices: tuple[int, ...]
    g_plus: RingMatrix
    bounded: bool = True
    p_note: str = P_NOTE
    trace: dict = field(default_factory=dict)

    def d_matrix(self) -> RingMatrix:
        r = r_function()
        n = len(self.partial_indices)
        return RingMatrix(
            RAT,
            [
                [r**k if i == j else RAT.zero for j in range(n)]
                for i, k in enumerate(self.partial_indices)
            ],
        )

    def reconstruct(self) -> RingMatrix:
        return self.g_minus * self.d_matrix() * self.g_plus


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple

    @property
    def all_pass(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def as_dict(self) -> dict:
        return {
            "all_pass": self.all_pass,
            "checks": [
                {"name": name, "pass": ok, "detail": detail}
                for name, ok, detail in self.checks
            ],
        }


def _require_rat_square(G: RingMatrix) -> int:
    if G.ring is not RAT:
        raise ShapeMismatch("symbol must be a rational-function matrix")
    if G.rows != G.cols:
        raise ShapeMismatch("symbol must be square")
    return G.rows


def _check_bounded_matrix(G: RingMatrix):
    for i in range(G.rows):
        for j in range(G.cols):
            if not G[i, j].bounded_on_line():
                raise HypothesisViolation(
                    f"symbol entry ({i},{j}) is not bounded on the real line"
                )


def _check_half_matrix(M: RingMatrix, half: str, tol: float, what: str):
    for i in range(M.rows):
        for j in range(M.cols):
            if not M[i, j].in_half_algebra(half, tol):
                raise HypothesisViolation(
                    f"{what} entry ({i},{j}) is outside the {half} half-plane algebra"
                )


def _check_scalar_matches(scalar: ScalarWH, det: RationalFunction):
    if not scalar.reconstruct() == det:
        raise HypothesisViolation(
            "supplied scalar factorization does not reconstruct det G"
        )


def _move_last_perm(n: int, idx: int):
    perm = [i for i in range(n) if i != idx] + [idx]
    inverse = [0] * n
    for pos, p in enumerate(perm):
        inverse[p] = pos
    sign = -1 if (n - 1 - idx) % 2 == 1 else 1
    return perm, inverse, sign


def _scale_gamma_minus(scalar: ScalarWH, sign: int) -> ScalarWH:
    if sign == 1:
        return scalar
    gm = scalar.gamma_minus * (-1)
    return ScalarWH(gm, scalar.k, scalar.gamma_plus)


def _block_lower(n: int, bottom_row, corner) -> RingMatrix:
    """[[I, 0], [bottom_row, corner]] over the rational ring."""
    rows = []
    for i in range(n - 1):
        rows.append([RAT.one if j == i else RAT.zero for j in range(n)])
    rows.append(list(bottom_row) + [corner])
    return RingMatrix(RAT, rows)


def _block_upper(n: int, right_col, corner) -> RingMatrix:
    """[[I, right_col], [0, corner]] over the rational ring."""
    rows = []
    for i in range(n - 1):
        rows.append(
            [RAT.one if j == i else RAT.zero for j in range(n - 1)] + [right_col[i]]
        )
    rows.append([RAT.zero] * (n - 1) + [corner])
    return RingMatrix(RAT, rows)


def factor_via_row(
    G: RingMatrix,
    omitted_row: int,
    phi_plus: RingMatrix,
    scalar: ScalarWH,
    tol: float = DEFAULT_TOL,
) -> WHFactorization:
    """Factor G from a right inverse of the submatrix left by omitting one
    row, all analytic in the upper half-plane; needs total index k <= 0."""
    n = _require_rat_square(G)
    _check_bounded_matrix(G)
    if scalar.k > 0:
        raise HypothesisViolation("row route requires a non-positive index k")
    perm, inv_perm, sign = _move_last_perm(n, omitted_row)
    Gp = G.permute_rows(perm)
    scalar = _scale_gamma_minus(scalar, sign)
    _check_scalar_matches(scalar, Gp.det())

    psi = Gp.submatrix(range(n - 1), range(n))
    ghat = Gp.row(n - 1)
    _check_half_matrix(psi, "+", tol, "submatrix")
    _check_half_matrix(phi_plus, "+", tol, "right inverse")
    if not (psi * phi_plus).is_identity():
        raise HypothesisViolation("supplied matrix is not a right inverse of the submatrix")

    comp = complete(phi_plus, psi)
    gm = scalar.gamma_minus.expand()
    gp = scalar.gamma_plus.expand()
    k = scalar.k
    r = r_function()
    q_row = [(ghat * phi_plus)[0, j] / gm for j in range(n - 1)]
    plus_row = []
    minus_row = []
    for q in q_row:
        proj = riesz_project(q, tol)
        plus_row.append(proj.plus_part)
        minus_row.append(proj.minus_part)

    g_minus_p = _block_lower(n, [gm * m for m in minus_row], gm)
    corner_sign = RAT.one if (n - 1) % 2 == 0 else -RAT.one
    g_plus_p = _block_lower(
        n, [(r ** (-k)) * p for p in plus_row], RAT.one
    ) * _block_lower(n, [RAT.zero] * (n - 1), corner_sign * gp) * comp.psi_e

    indices = tuple([0] * (n - 1) + [k])
    d = RingMatrix(
        RAT,
        [[r**ki if i == j else RAT.zero for j in range(n)] for i, ki in enumerate(indices)],
    )
    if not g_minus_p * d * g_plus_p == Gp:
        raise AssertionError("row-route assembly failed to reconstruct the symbol")
    g_minus = g_minus_p.permute_rows(inv_perm)
    trace = {
        "route": "row",
        "omitted_row": omitted_row,
        "permutation_sign": sign,
        "projection_input": q_row,
        "scalar": scalar,
    }
    return WHFactorization(g_minus, indices, g_plus_p, trace=trace)


def factor_via_column(
    G: RingMatrix,
    omitted_col: int,
    psi_minus: RingMatrix,
    scalar: ScalarWH,
    tol: float = DEFAULT_TOL,
) -> WHFactorization:
    """Dual route: a left inverse of the submatrix left by omitting one
    column, all analytic in the lower half-plane; needs total index k >= 0."""
    n = _require_rat_square(G)
    _check_bounded_matrix(G)
    if scalar.k < 0:
        raise HypothesisViolation("column route requires a non-negative index k")
    perm, inv_perm, sign = _move_last_perm(n, omitted_col)
    Gp = G.permute_cols(perm)
    scalar = _scale_gamma_minus(scalar, sign)
    _check_scalar_matches(scalar, Gp.det())

    phi = Gp.submatrix(range(n), range(n - 1))
    ghat = Gp.col(n - 1)
    _check_half_matrix(phi, "-", tol, "submatrix")
    _check_half_matrix(psi_minus, "-", tol, "left inverse")
    if not (psi_minus * phi).is_identity():
        raise HypothesisViolation("supplied matrix is not a left inverse of the submatrix")

    comp = complete(phi, psi_minus)
    gm = scalar.gamma_minus.expand()
    gp = scalar.gamma_plus.expand()
    k = scalar.k
    r = r_function()
    u_col = [(psi_minus * ghat)[i, 0] / gp for i in range(n - 1)]
    plus_col = []
    minus_col = []
    for u in u_col:
        proj = riesz_project(u, tol)
        plus_col.append(proj.plus_part)
        minus_col.append(proj.minus_part)

    corner_sign = RAT.one if (n - 1) % 2 == 0 else -RAT.one
    g_minus = comp.phi_e * _block_upper(
        n, [(r ** (-k)) * m for m in minus_col], corner_sign * gm
    )
    g_plus_p = _block_upper(n, [gp * p for p in plus_col], gp)
    indices = tuple([0] * (n - 1) + [k])
    d = RingMatrix(
        RAT,
        [[r**ki if i == j else RAT.zero for j in range(n)] for i, ki in enumerate(indices)],
    )
    if not g_minus * d * g_plus_p == Gp:
        raise AssertionError("column-route assembly failed to reconstruct the symbol")
    g_plus = g_plus_p.permute_cols(inv_perm)
    trace = {
        "route": "column",
        "omitted_col": omitted_col,
        "permutation_sign": sign,
        "projection_input": u_col,
        "scalar": scalar,
    }
    return WHFactorization(g_minus, indices, g_plus, trace=trace)


def factor_via_rh(
    G: RingMatrix,
    phi_plus: RingMatrix,
    phi_minus: RingMatrix,
    psi_plus: RingMatrix,
    psi_minus: RingMatrix,
    scalar: ScalarWH,
    tol: float = DEFAULT_TOL,
) -> WHFactorization:
    """Factor G from a corank-one pair of analytic solutions of the boundary
    relation G*phi_plus = phi_minus, with left inverses on both sides and
    total index k >= 0."""
    n = _require_rat_square(G)
    _check_bounded_matrix(G)
    if scalar.k < 0:
        raise HypothesisViolation("boundary-relation route requires k >= 0")
    _check_scalar_matches(scalar, G.det())
    _check_half_matrix(phi_plus, "+", tol, "phi_plus")
    _check_half_matrix(psi_plus, "+", tol, "psi_plus")
    _check_half_matrix(phi_minus, "-", tol, "phi_minus")
    _check_half_matrix(psi_minus, "-", tol, "psi_minus")
    if not G * phi_plus == phi_minus:
        raise RHResidualNonzero("G * phi_plus differs from phi_minus")
    if not (psi_plus * phi_plus).is_identity():
        raise HypothesisViolation("psi_plus is not a left inverse of phi_plus")
    if not (psi_minus * phi_minus).is_identity():
        raise HypothesisViolation("psi_minus is not a left inverse of phi_minus")

    comp_plus = complete(phi_plus, psi_plus)
    comp_minus = complete(phi_minus, psi_minus)
    g0 = comp_minus.psi_e * G * comp_plus.phi_e
    det_g = G.det()
    for i in range(n - 1):
        for j in range(n - 1):
            want = RAT.one if i == j else RAT.zero
            if not g0[i, j] == want:
                raise AssertionError("conjugated symbol is not unit upper triangular")
    for j in range(n - 1):
        if g0[n - 1, j]:
            raise AssertionError("conjugated symbol has a nonzero bottom block")
    if not g0[n - 1, n - 1] == det_g:
        raise AssertionError("conjugated corner does not equal det G")

    gm = scalar.gamma_minus.expand()
    gp = scalar.gamma_plus.expand()
    k = scalar.k
    r = r_function()
    q_col = [g0[i, n - 1] for i in range(n - 1)]
    scaled = [q / gp for q in q_col]
    alpha_plus = []
    alpha_minus = []
    for u in scaled:
        proj = riesz_project(u, tol)
        alpha_plus.append(proj.plus_part)
        alpha_minus.append((r ** (-k)) * proj.minus_part)

    g_minus = comp_minus.phi_e * _block_upper(n, alpha_minus, gm)
    g_plus = _block_upper(n, [gp * a for a in alpha_plus], gp) * comp_plus.psi_e
    indices = tuple([0] * (n - 1) + [k])
    d = RingMatrix(
        RAT,
        [[r**ki if i == j else RAT.zero for j in range(n)] for i, ki in enumerate(indices)],
    )
    if not g_minus * d * g_plus == G:
        raise AssertionError("boundary-relation assembly failed to reconstruct the symbol")
    trace = {
        "route": "rh",
        "corner_column": q_col,
        "triangular_corner": det_g,
        "alpha_correction": "projections applied to gamma_plus**-1 * Q "
        "(unscaled Q reconstructs only for gamma_plus == 1)",
        "scalar": scalar,
    }
    return WHFactorization(g_minus, indices, g_plus, trace=trace)


def _entry_report(M: RingMatrix, half: str, tol: float, label: str):
    bad = []
    for i in range(M.rows):
        for j in range(M.cols):
            if not M[i, j].in_half_algebra(half, tol):
                bad.append((i, j))
    ok = not bad
    detail = "all entries analytic and bounded" if ok else f"violations at {bad}"
    return (label, ok, detail)


def _det_report(M: RingMatrix, half: str, tol: float, label: str):
    det = M.det()
    if det.is_zero:
        return (label, False, "determinant vanishes identically")
    if not det.invertible_on_line():
        return (label, False, "determinant has a zero or pole on the extended line")
    opposite = "-" if half == "+" else "+"
    bad = [
        (str(root), mult)
        for root, mult, tag in det.factored(tol).tags()
        if tag != opposite
    ]
    if bad:
        return (label, False, f"determinant has zeros/poles at {bad}")
    return (label, True, "determinant invertible off the closed half-plane")


def verify_factorization(
    G: RingMatrix, F: WHFactorization, tol: float = DEFAULT_TOL
) -> VerificationReport:
    """Recheck a factorization: exact product identity, index shape, and
    pole-location/boundedness certificates on the factors and their exact
    adjugate inverses."""
    checks = []
    product_ok = F.reconstruct() == G
    checks.append(
        (
            "product",
            product_ok,
            "g_minus * D * g_plus equals the symbol (exact zero residual)"
            if product_ok
            else "product differs from the symbol",
        )
    )
    checks.append(
        (
            "diagonal-shape",
            all(isinstance(ki, int) for ki in F.partial_indices),
            "middle factor is diag(r**k) with integer exponents",
        )
    )
    checks.append(_entry_report(F.g_plus, "+", tol, "gplus-analytic"))
    checks.append(_entry_report(F.g_minus, "-", tol, "gminus-analytic"))
    try:
        gp_inv = F.g_plus.inverse()
        checks.append(_entry_report(gp_inv, "+", tol, "gplus-inverse-analytic"))
    except ZeroDivisionError:
        checks.append(("gplus-inverse-analytic", False, "g_plus is not invertible"))
    try:
        gm_inv = F.g_minus.inverse()
        checks.append(_entry_report(gm_inv, "-", tol, "gminus-inverse-analytic"))
    except ZeroDivisionError:
        checks.append(("gminus-inverse-analytic", False, "g_minus is not invertible"))
    checks.append(_det_report(F.g_plus, "+", tol, "det-gplus-invertible"))
    checks.append(_det_report(F.g_minus, "-", tol, "det-gminus-invertible"))
    return VerificationReport(tuple(checks))


def _check_hardy_plus_vector(phi, tol: float):
    for j, f in enumerate(phi):
        f = RationalFunction.coerce(f)
        if f.is_zero:
            continue
        if not f.in_half_algebra("+", tol):
            raise MembershipViolation(f"entry {j} has a pole outside the lower half-plane")
        if f.num.degree >= f.den.degree:
            raise MembershipViolation(f"entry {j} does not vanish at infinity")


def apply_inverse(F: WHFactorization, phi, tol: float = DEFAULT_TOL):
    """Apply the inverse of the Toeplitz operator attached to a canonically
    factored symbol: g_plus**-1 P+ (g_minus**-1 phi), all by exact partial
    fractions.  phi entries must be strictly proper with lower half-plane poles."""
    if any(k != 0 for k in F.partial_indices):
        raise IndexNonzero("inverse formula needs all partial indices zero")
    phi = [RationalFunction.coerce(f) for f in phi]
    n = len(F.partial_indices)
    if len(phi) != n:
        raise ShapeMismatch("vector length does not match the symbol size")
    _check_hardy_plus_vector(phi, tol)
    col = RingMatrix(RAT, [[f] for f in phi])
    inner = F.g_minus.inverse() * col
    projected = []
    for i in range(n):
        plus, _ = pole_split(inner[i, 0], tol)
        projected.append([plus])
    result = F.g_plus.inverse() * RingMatrix(RAT, projected)
    return [result[i, 0] for i in range(n)]


def toeplitz_apply(G: RingMatrix, phi, tol: float = DEFAULT_TOL):
    """P+ (G * phi) for strictly proper analytic vectors: the Toeplitz action
    used to round-trip apply_inverse."""
    _require_rat_square(G)
    col = RingMatrix(RAT, [[RationalFunction.coerce(f)] for f in phi])
    prod = G * col
    out = []
    for i in range(G.rows):
        plus, _ = pole_split(prod[i, 0], tol)
        out.append(plus)
    return out
