import random
from fractions import Fraction

import pytest

from igusa.exprs import parse_expr, parse_zeta_literal
from igusa.poly import MultiPoly
from igusa.render import render_zeta_latex, render_zeta_plain
from igusa.zrat import BandInvalid, DenomFactor, PoleHit, ZetaRat

QT = ("q", "t")


def qpoly(src):
    return parse_expr(src, QT)


def Zp(src):
    """Small helper: parse a zeta literal into the (num, den) pair."""
    lit = parse_zeta_literal(src)
    return lit.num, lit.den


# ----------------------------------------------------------------------
# zr_arith


def geom_example():
    # (q-1) t / (q - t)  =  (q-1) / (q^(1+s) - 1)
    return ZetaRat.inv_factor(1, 1) * qpoly("q - 1")


def test_add_zero_identity():
    z = geom_example()
    assert z + ZetaRat.zero() == z
    assert ZetaRat.zero() + z == z


def test_mul_cancellation():
    inv = ZetaRat(MultiPoly.const(QT, 1), {DenomFactor(1, 1): 1})
    prod = inv * qpoly("q - t")
    assert prod == ZetaRat.const(1)
    assert prod.den == {}


def test_add_two_distinct_factors():
    # 1/(q^(1-s)-1) has cleared factor q t - 1; 1/(q^(1+s)-1) clears to q - t
    a = ZetaRat.inv_factor(1, -1) * qpoly("q - 1")
    b = ZetaRat.inv_factor(1, 1) * qpoly("q - 1")
    c = a + b
    assert set(c.den) <= {DenomFactor(1, -1), DenomFactor(1, 1)}
    assert len(c.den) == 2
    q0, t0 = Fraction(3), Fraction(1, 5)
    assert c.evaluate(q0, t0) == a.evaluate(q0, t0) + b.evaluate(q0, t0)


def case2_formula():
    # (q^2-1) / (q^2 (q^(2-2s)-1)): Example case (2) over the small polydisc
    return ZetaRat.inv_factor(2, -2) * qpoly("q^2 - 1") * ZetaRat.monomial(-2, 0)


# ----------------------------------------------------------------------
# zr_evaluate


def test_evaluate_case2_at_s0():
    z = case2_formula()
    assert z.evaluate(3, 1) == Fraction(8, 9 * 8)


def test_evaluate_constant():
    z = ZetaRat.monomial(-2, 0)
    assert z.evaluate(5, 7) == Fraction(1, 25)


def test_evaluate_pole_hit():
    z = ZetaRat.inv_factor(1, -1)  # 1/(q^(1-s)-1), cleared q t - 1
    with pytest.raises(PoleHit):
        z.evaluate(3, Fraction(1, 3))


# ----------------------------------------------------------------------
# zr_poles


def test_poles_case2():
    z = case2_formula()
    ps = z.poles()
    assert len(ps) == 1
    assert ps[0].real_part == 1
    assert ps[0].order == 1
    assert ps[0].lattice == (-2, 2)


def test_poles_multiplicity():
    z = ZetaRat(MultiPoly.const(QT, 1), {DenomFactor(1, 1): 2})
    ps = z.poles()
    assert ps == [type(ps[0])(Fraction(-1), 2, (1, 1))]


def test_poles_after_cancellation():
    # numerator (q - t) * u cancels the factor (1,1)
    z = ZetaRat(qpoly("(q - t) * (q + 1)"), {DenomFactor(1, 1): 1})
    assert z.poles() == []
    assert z == ZetaRat.from_poly(qpoly("q + 1"))


# ----------------------------------------------------------------------
# zr_band_series


def test_band_series_geometric():
    z = geom_example()
    mu = z.band_series((Fraction(-1), float("inf")), range(1, 4), 3)
    assert mu == {1: Fraction(2, 3), 2: Fraction(2, 9), 3: Fraction(2, 27)}


def test_band_series_case2():
    z = case2_formula()
    mu = z.band_series((float("-inf"), Fraction(1)), range(-4, 1), 3)
    assert mu[-2] == Fraction(8, 81)
    assert mu[-4] == Fraction(8, 729)
    assert mu[-1] == mu[-3] == mu[0] == 0


def test_band_series_constant():
    z = ZetaRat.monomial(-2, 0)
    mu = z.band_series((float("-inf"), float("inf")), range(0, 1), 3)
    assert mu == {0: Fraction(1, 9)}


def test_band_series_invalid():
    z = geom_example()  # pole at Re(s) = -1
    with pytest.raises(BandInvalid):
        z.band_series((Fraction(-2), Fraction(0)), range(0, 2), 3)


def test_band_series_recurrence_property():
    rng = random.Random(7)
    for _ in range(25):
        v = rng.randint(1, 3)
        N = rng.choice([-3, -2, -1, 1, 2, 3])
        z = ZetaRat.inv_factor(v, N)
        q0 = rng.choice([2, 3, 5])
        if N > 0:
            band = (Fraction(-v, N), float("inf"))
        else:
            band = (float("-inf"), Fraction(v, -N))
        mu = z.band_series(band, range(-12, 13), q0)
        ks = range(1, 9) if N > 0 else range(-9, 0)
        for k in ks:
            if k + N in mu and k in mu:
                assert mu[k + N] == Fraction(1, q0 ** v) * mu[k]


# ----------------------------------------------------------------------
# normalization / equality properties


def random_zetarat(rng):
    num = MultiPoly(QT, {(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(-3, 3)
                         for _ in range(rng.randint(1, 3))})
    if num.is_zero():
        num = MultiPoly.const(QT, 1)
    den = {}
    for _ in range(rng.randint(0, 2)):
        den[DenomFactor(rng.randint(1, 3), rng.choice([-2, -1, 0, 1, 2]))] = rng.randint(1, 2)
    return ZetaRat(num, den, Fraction(rng.randint(1, 4), rng.randint(1, 4)),
                   rng.randint(-2, 2), rng.randint(-2, 2))


def test_normalize_idempotent():
    rng = random.Random(11)
    for _ in range(100):
        z = random_zetarat(rng)
        z2 = ZetaRat(z.num, z.den, z.scalar, z.qexp, z.texp)
        assert (z2.num, z2.den, z2.scalar, z2.qexp, z2.texp) == \
            (z.num, z.den, z.scalar, z.qexp, z.texp)


def test_equality_symmetric_transitive():
    rng = random.Random(13)
    for _ in range(50):
        z = random_zetarat(rng)
        fac = DenomFactor(2, 1)
        blown = ZetaRat(z.num * fac.cleared(QT), {**z.den, fac: z.den.get(fac, 0) + 1},
                        z.scalar, z.qexp, z.texp)
        assert blown == z and z == blown
        blown2 = z * ZetaRat.const(1)
        assert blown == blown2 and z == blown2


def test_evaluation_homomorphism():
    rng = random.Random(17)
    pts = 0
    while pts < 100:
        a, b = random_zetarat(rng), random_zetarat(rng)
        q0 = Fraction(rng.randint(2, 9))
        t0 = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        try:
            va, vb = a.evaluate(q0, t0), b.evaluate(q0, t0)
            assert (a + b).evaluate(q0, t0) == va + vb
            assert (a * b).evaluate(q0, t0) == va * vb
            assert (-a).evaluate(q0, t0) == -va
        except PoleHit:
            continue
        pts += 1


# ----------------------------------------------------------------------
# rendering round-trip

PAPER_FORMULAS = [
    "(p^2-1)/(p^2*(p^(2-2*s)-1))",
    "(p^2-1)/(p^2*(p^(2+2*s)-1))",
    "(p-1)^2/((p^(1+2*s)-1)*(p^(1-2*s)-1))",
    "(p^(1+s)+p^2*(p-2)*p^(-s)+p^(2-2*s)-2*p+1)/((p+1)*(p^(1+s)-1)*(p^(1-2*s)-1))",
]


def test_render_round_trip_corpus():
    rng = random.Random(23)
    corpus = [random_zetarat(rng) for _ in range(30)]
    corpus += [geom_example(), case2_formula(), ZetaRat.zero(), ZetaRat.const(1)]
    for z in corpus:
        lit = parse_zeta_literal(render_zeta_plain(z))
        assert z.equals_fraction(lit.num, lit.den)


def test_parse_paper_formulas():
    for src in PAPER_FORMULAS:
        lit = parse_zeta_literal(src)
        assert not lit.num.is_zero()
        assert not lit.den.is_zero()


def test_case2_equals_paper_string():
    z = case2_formula()
    lit = parse_zeta_literal("(p^2-1)/(p^2*(p^(2-2*s)-1))")
    assert z.equals_fraction(lit.num, lit.den)


def test_latex_render_smoke():
    z = case2_formula()
    tex = render_zeta_latex(z)
    assert "\\frac" in tex and "q^{2-2s}" in tex
