from fractions import Fraction

import pytest

from igusa.poly import MultiPoly

XY = ("x", "y")


def P(src):
    from igusa.exprs import parse_expr
    return parse_expr(src, XY)


def test_basic_arithmetic():
    f = P("x^2 - y^2")
    g = P("x^2")
    assert f + g == P("2*x^2 - y^2")
    assert f * g == P("x^4 - x^2*y^2")
    assert (f - f).is_zero()
    assert -f == P("y^2 - x^2")


def test_zero_coefficients_dropped():
    f = P("x + y") - P("y")
    assert f.terms == {(1, 0): Fraction(1)}


def test_laurent_monomials():
    m = MultiPoly.monomial(XY, (-2, 1), 3)
    assert m * MultiPoly.monomial(XY, (2, 0)) == P("3*y")
    assert m ** -1 == MultiPoly.monomial(XY, (2, -1), Fraction(1, 3))


def test_eval_and_partial():
    f = P("x^2*y - 2*y + 1")
    assert f.eval({"x": 3, "y": Fraction(1, 2)}) == Fraction(9, 2) - 1 + 1
    part = f.eval_partial({"x": 3})
    assert part.vars == ("y",)
    assert part.eval({"y": 2}) == f.eval({"x": 3, "y": 2})


def test_compose_blowup_substitution():
    f = P("x^2 - y^2")
    uv = ("u", "v")
    images = {
        "x": MultiPoly.var(uv, "u"),
        "y": MultiPoly.var(uv, "u") * MultiPoly.var(uv, "v"),
    }
    g = f.compose(images)
    assert g == MultiPoly(uv, {(2, 0): 1, (2, 2): -1})
    assert g.var_valuation("u") == 2


def test_divide_exact():
    f = P("x^2 - y^2")
    assert f.divide_exact(P("x - y")) == P("x + y")
    assert f.divide_exact(P("x + 1")) is None
    assert P("0").divide_exact(P("x")) == P("0")


def test_divide_exact_laurent():
    f = MultiPoly.monomial(XY, (-1, 0)) * P("x^2 - y^2")
    q = f.divide_exact(P("x - y"))
    assert q == MultiPoly.monomial(XY, (-1, 0)) * P("x + y")


def test_multiplicity_and_translate():
    f = P("y^2 - x^3")
    assert f.multiplicity_at({"x": 0, "y": 0}) == 2
    assert f.multiplicity_at({"x": 1, "y": 1}) == 1
    g = f.translate({"x": 1, "y": 1})
    assert g.eval({"x": 0, "y": 0}) == f.eval({"x": 1, "y": 1})


def test_derivative():
    f = P("x^3*y + y^2")
    assert f.derivative("x") == P("3*x^2*y")
    assert f.derivative("y") == P("x^3 + 2*y")


def test_content_and_leading():
    f = P("4*x^2 - 6*y^2")
    assert f.content() == 2
    f2 = f.scale(Fraction(1, 3))
    assert f2.content() == Fraction(2, 3)


def test_degree_helpers():
    f = P("x^3*y - y^2")
    assert f.degree() == 4
    assert f.degree("x") == 3
    assert f.degree("y") == 2
    assert f.total_valuation() == 2


def test_variable_mismatch_raises():
    f = P("x")
    g = MultiPoly.var(("u", "v"), "u")
    with pytest.raises(ValueError):
        f + g
