"""Rebuild the JSON job corpus consumed by the command line demos and the
determinism checks.  Everything here is exact, so regeneration is
byte-stable."""

import json
import pathlib

from whfactor import jsonio
from whfactor.matrices import RAT, RingMatrix
from whfactor.matrix_wh import WHFactorization
from whfactor.rings import GaussianRational, Polynomial, RationalFunction
from whfactor.scalar_wh import r_function, riesz_project

HERE = pathlib.Path(__file__).parent

I = GaussianRational(0, 1)
X = Polynomial.x()


def lin(root):
    return Polynomial([-GaussianRational.coerce(root), GaussianRational(1)])


def write(name, payload):
    path = HERE / name
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    print("wrote", path.name)


def main():
    rf = jsonio.encode
    r = r_function()
    a = RationalFunction(1, X * X + 1)

    write(
        "minors.json",
        {"ring": "gaussian", "matrix": [[1, 0], [0, 1], [2, 3]]},
    )
    write(
        "left_inverse.json",
        {
            "ring": "gaussian",
            "matrix": [[1, 0], [0, 1], [2, 3]],
            "certificate": [0, 0, 1],
            "method": "corank1",
        },
    )
    write(
        "right_inverse.json",
        {
            "ring": "gaussian",
            "matrix": [[1, 0, 2], [0, 1, 3]],
            "certificate": [0, 0, 1],
            "method": "corank1",
        },
    )
    write(
        "complete.json",
        {
            "ring": "gaussian",
            "phi": [[1, 0], [0, 1], [2, 3]],
            "psi": [[1, 0, 0], [0, 1, 0]],
        },
    )
    write(
        "corona_h.json",
        {
            "algebra": "H+",
            "tuple": [
                {"num": [{"im": [-1, 1]}, 1], "den": [{"im": [1, 1]}, 1]},
                {"num": [1], "den": [{"im": [1, 1]}, 1]},
            ],
        },
    )
    write(
        "corona_m.json",
        {
            "algebra": "M+",
            "tuple": [
                rf(RationalFunction(lin(2 * I), lin(-I))),
                rf(RationalFunction(lin(2 * I) * lin(3 * I), lin(-I) * lin(-I))),
            ],
        },
    )
    write(
        "corona_fail.json",
        {
            "algebra": "H+",
            "tuple": [
                rf(RationalFunction(X - 1, lin(-I))),
                rf(RationalFunction(X - 1, lin(-3 * I))),
            ],
        },
    )
    write(
        "corona_ap.json",
        {
            "algebra": "AP+",
            "tuple": [
                [
                    {"freq": [0, 1], "coeff": 1},
                    {"freq": [1, 1], "coeff": {"re": [1, 4]}},
                ],
                [{"freq": [2, 1], "coeff": 1}],
            ],
        },
    )
    write(
        "wh_scalar.json",
        {"symbol": rf(RationalFunction(lin(2 * I), lin(-3 * I)))},
    )
    write(
        "wh_scalar_singular.json",
        {"symbol": rf(RationalFunction(X - 1, lin(-I)))},
    )
    write("winding.json", {"symbol": rf(r**2 * RationalFunction(lin(5 * I), lin(-I)))})
    write("project.json", {"symbol": rf(a)})

    G_row = RingMatrix(RAT, [[RationalFunction(1), RationalFunction(0)], [a, r**-1]])
    write(
        "wh_matrix_row.json",
        {
            "mode": "row",
            "omitted": 1,
            "matrix": rf(G_row),
            "phi_plus": rf(RingMatrix(RAT, [[RationalFunction(1)], [RationalFunction(0)]])),
        },
    )
    G_rh = RingMatrix(RAT, [[RationalFunction(1), a], [RationalFunction(0), r]])
    col = RingMatrix(RAT, [[RationalFunction(1)], [RationalFunction(0)]])
    row = RingMatrix(RAT, [[RationalFunction(1), RationalFunction(0)]])
    write(
        "wh_matrix_rh.json",
        {
            "mode": "rh",
            "matrix": rf(G_rh),
            "phi_plus": rf(col),
            "phi_minus": rf(col),
            "psi_plus": rf(row),
            "psi_minus": rf(row),
        },
    )
    c = RationalFunction(lin(-I), lin(2 * I))  # pole at 2i: lower-analytic
    G_col = RingMatrix(RAT, [[RationalFunction(1), RationalFunction(0)], [c, r]])
    write(
        "wh_matrix_col.json",
        {
            "mode": "col",
            "omitted": 1,
            "matrix": rf(G_col),
            "psi_minus": rf(RingMatrix(RAT, [[RationalFunction(1), RationalFunction(0)]])),
        },
    )
    write(
        "ap_row.json",
        {
            "mode": "row",
            "omitted": 1,
            "matrix": [
                [[{"freq": [0, 1], "coeff": 1}], []],
                [
                    [
                        {"freq": [-1, 1], "coeff": 1},
                        {"freq": [2, 1], "coeff": 4},
                    ],
                    [{"freq": [1, 1], "coeff": 1}],
                ],
            ],
            "phi_plus": [[[{"freq": [0, 1], "coeff": 1}]], [[]]],
        },
    )
    write(
        "ap_gap.json",
        {
            "mode": "row",
            "omitted": 1,
            "matrix": [
                [[{"freq": [0, 1], "coeff": 1}], []],
                [[{"freq": [1, 2], "coeff": 1}], [{"freq": [1, 1], "coeff": 1}]],
            ],
            "phi_plus": [[[{"freq": [0, 1], "coeff": 1}]], [[]]],
        },
    )
    write("report_indices.json", {"kind": "indices", "indices": [0, 0, -2]})
    G_unitary = RingMatrix(RAT, [[r, RationalFunction(0)], [RationalFunction(0), r**-1]])
    write("report_unitary.json", {"kind": "unitary", "matrix": rf(G_unitary)})
    cth = RationalFunction(X * X - 1, X * X + 1)
    sth = RationalFunction(Polynomial([0, 2]), X * X + 1)
    G_orth = RingMatrix(RAT, [[cth, sth], [RationalFunction(0) - sth, cth]])
    write("report_orthogonal.json", {"kind": "orthogonal", "matrix": rf(G_orth)})
    write(
        "report_continuous.json",
        {
            "kind": "continuous-except-line",
            "matrix": [
                [[{"freq": [0, 1], "coeff": {"num": [1], "den": [1]}}], []],
                [
                    [{"freq": [1, 2], "coeff": {"num": [1], "den": [1]}}],
                    [{"freq": [0, 1], "coeff": rf(r)}],
                ],
            ],
        },
    )

    b = a
    proj = riesz_project(b)
    gm = RingMatrix(
        RAT,
        [[RationalFunction(1), proj.minus_part], [RationalFunction(0), RationalFunction(1)]],
    )
    gp = RingMatrix(
        RAT,
        [[RationalFunction(1), proj.plus_part], [RationalFunction(0), RationalFunction(1)]],
    )
    F = WHFactorization(gm, (0, 0), gp)
    G = RingMatrix(RAT, [[RationalFunction(1), b], [RationalFunction(0), RationalFunction(1)]])
    write(
        "apply_inverse.json",
        {
            "factorization": {
                "g_minus": rf(gm),
                "partial_indices": [0, 0],
                "g_plus": rf(gp),
            },
            "vector": [
                {"num": [], "den": [1]},
                {"num": [1], "den": [{"im": [1, 1]}, 1]},
            ],
        },
    )
    write(
        "verify.json",
        {
            "matrix": rf(G),
            "factorization": {
                "g_minus": rf(gm),
                "partial_indices": [0, 0],
                "g_plus": rf(gp),
            },
        },
    )


if __name__ == "__main__":
    main()
