"""Base arithmetic: Q(i) field axioms, polynomial gcd, canonical rational
functions, factoring with snap, the disk substitution, and the almost
periodic ring."""

import random
from fractions import Fraction

import pytest

import util
from whfactor.errors import RootClassificationAmbiguous, ZeroDenominator
from whfactor.rings import (
    APPoly,
    FactoredRational,
    GaussianRational,
    MixedFunction,
    Polynomial,
    RationalFunction,
    count_distinct_real_roots,
    expand,
    factor_numeric,
    mobius_from_disk,
    mobius_to_disk,
    normalize,
)

I = GaussianRational(0, 1)
X = Polynomial.x()


def test_gaussian_field_axioms_randomized():
    rng = random.Random(101)
    for _ in range(200):
        a, b, c = (util.rand_gr(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        if a:
            assert a * a.inv() == GaussianRational(1)
            assert (a ** -2) * (a ** 2) == GaussianRational(1)


def test_gaussian_canonical_fractions():
    g = GaussianRational(Fraction(2, 4), Fraction(-6, 3))
    assert g.re == Fraction(1, 2) and g.im == -2
    assert g.re.denominator == 2 and g.re.numerator == 1
    assert g.conjugate().im == 2
    assert g.abs2() == Fraction(1, 4) + 4


def test_polynomial_divmod_and_gcd():
    rng = random.Random(7)
    for _ in range(50):
        a = util.rand_poly(rng, 4)
        b = util.rand_poly(rng, 3)
        if b.is_zero:
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero or r.degree < b.degree
        g, s, t = a.egcd(b)
        assert s * a + t * b == g


def test_normalize_reduces_and_makes_monic():
    f = normalize(X * X - 1, (X - 1).scale(2))
    # (x^2-1)/(2x-2) = (x+1)/2
    assert f.den == Polynomial([1])
    assert f.num == Polynomial([Fraction(1, 2), Fraction(1, 2)])
    assert normalize(Polynomial(), X + 1) == RationalFunction(0)
    xi = X + Polynomial([I])
    assert normalize(xi, xi) == RationalFunction(1)
    with pytest.raises(ZeroDenominator):
        normalize(X, Polynomial())


def test_normalize_value_equality():
    # cross-multiplied identity: num_in * den_out == num_out * den_in
    num_in, den_in = X * X - 1, (X - 1).scale(2)
    f = normalize(num_in, den_in)
    assert num_in * f.den == f.num * den_in


def test_expand_examples():
    two_i = GaussianRational(0, 2)
    f = FactoredRational(1, [(two_i, 1), (-I * 3, -1)])
    rf = expand(f)
    assert rf == RationalFunction(X - Polynomial([two_i]), X + Polynomial([I * 3]))
    assert expand(FactoredRational(1, [])) == RationalFunction(1)
    g = FactoredRational(2, [(I, -1), (-I, -1)])
    assert expand(g) == RationalFunction(Polynomial([2]), X * X + 1)


def test_factor_numeric_quadratic_and_tags():
    f = RationalFunction(X * X + 1, X * X + 4)
    fac = factor_numeric(f)
    assert fac.exact
    tags = {(str(root), mult): tag for root, mult, tag in fac.tags()}
    assert tags[("1i", 1)] == "+"
    assert tags[("-1i", 1)] == "-"
    assert tags[("2i", -1)] == "-" or tags[("-2i", -1)] == "-"
    assert fac.expand() == f


def test_factor_numeric_real_root_tagged():
    f = RationalFunction(X - 1, X + Polynomial([I]))
    fac = factor_numeric(f)
    (root, mult, tag), *rest = fac.tags()
    roots = {str(r): t for r, m, t in fac.tags()}
    assert roots["1"] == "R"


def test_factor_numeric_constant():
    fac = factor_numeric(RationalFunction(Polynomial([5])))
    assert fac.lead == GaussianRational(5)
    assert fac.factors == ()


def test_factor_numeric_ambiguous_refusal():
    # root at 2**-40 + i*1e-12: real part snaps, imaginary part is neither
    # zero nor confidently off the line
    tiny = GaussianRational(0, Fraction(1, 10**12))
    p = X - Polynomial([GaussianRational(1, Fraction(1, 10**12))])
    with pytest.raises(RootClassificationAmbiguous):
        factor_numeric(RationalFunction(p, Polynomial([1])), tol=1e-9)


def test_factor_roundtrip_random():
    rng = random.Random(23)
    for _ in range(40):
        fac = util.rand_line_invertible_factored(rng)
        f = fac.expand()
        again = factor_numeric(f)
        assert again.exact
        assert again.expand() == f


def test_mobius_defining_properties():
    from whfactor.scalar_wh import r_function

    r = r_function()
    assert mobius_to_disk(r) == RationalFunction(X)
    c = RationalFunction(Polynomial([GaussianRational(3, 2)]))
    assert mobius_to_disk(c) == c
    f = RationalFunction(1, X + Polynomial([I]))
    # 1/(x+i) with x = i(1+w)/(1-w) is (1-w)/(2i)
    expect = RationalFunction(Polynomial([GaussianRational(0, Fraction(-1, 2)),
                                          GaussianRational(0, Fraction(1, 2))]))
    assert mobius_to_disk(f) == expect


def test_mobius_roundtrip_and_homomorphism():
    rng = random.Random(5)
    for _ in range(30):
        f = RationalFunction(util.rand_poly(rng, 3), util.rand_poly(rng, 2) + X ** 3)
        g = RationalFunction(util.rand_poly(rng, 2), util.rand_poly(rng, 2) + X ** 2)
        assert mobius_from_disk(mobius_to_disk(f)) == f
        assert mobius_to_disk(f * g) == mobius_to_disk(f) * mobius_to_disk(g)
        assert mobius_to_disk(f + g) == mobius_to_disk(f) + mobius_to_disk(g)


def test_mobius_maps_upper_half_plane_into_disk():
    rng = random.Random(9)
    for _ in range(20):
        root = util.rand_offline_root(rng, "+")
        f = RationalFunction(X - Polynomial([root]))
        image = mobius_to_disk(f)
        # the zero of the image is r(root), which must lie inside the disk
        w = (root - I) / (root + I)
        assert w.abs2() < 1
        assert image(w) == GaussianRational(0)


def test_sturm_real_root_count():
    # (x^2-2)(x^2+1): two real roots
    p = (X * X - 2) * (X * X + 1)
    assert count_distinct_real_roots(p) == 2
    assert count_distinct_real_roots(X * X + 1) == 0
    assert count_distinct_real_roots((X - 1) * (X - 1)) == 1


def test_rational_membership_predicates():
    f = RationalFunction(1, X + Polynomial([I]))  # pole at -i
    assert f.bounded_on_line()
    assert f.in_half_algebra("+")
    assert not f.in_half_algebra("-")
    g = RationalFunction(1, X - 1)  # real pole
    assert not g.bounded_on_line()
    h = RationalFunction(X * X, X + Polynomial([I]))  # grows at infinity
    assert not h.bounded_on_line()


def test_appoly_ring():
    rng = random.Random(31)
    e = APPoly.e
    assert e(1) * e(Fraction(1, 2)) == e(Fraction(3, 2))
    for _ in range(100):
        p = util.rand_appoly(rng)
        q = util.rand_appoly(rng)
        prod = p * q
        sumset = {a + b for a in p.support for b in q.support}
        assert set(prod.support) <= sumset
        assert p * q == q * p
        assert (p + q) - q == p
    p = e(1, 2) + e(-1, 3)
    assert p.conj() == e(-1, 2) + e(1, 3)


def test_mixed_ring_arithmetic():
    r = RationalFunction(X - Polynomial([I]), X + Polynomial([I]))
    m = MixedFunction([(Fraction(1, 2), RationalFunction(1))])
    prod = m * MixedFunction.coerce(r)
    assert prod.terms[0][0] == Fraction(1, 2)
    assert prod.terms[0][1] == r
    assert (m + m).terms[0][1] == RationalFunction(2)
    assert MixedFunction.coerce(r).is_rational
    assert m.is_pure_ap
    assert m.as_appoly() == APPoly.e(Fraction(1, 2))
