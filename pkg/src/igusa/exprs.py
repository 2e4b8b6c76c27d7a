"""Expression parsing and canonical rendering.

Two grammars share one tokenizer:

* ``parse_expr`` reads ordinary (Laurent) polynomials: ``+ - * ^`` with
  integer exponents (negative allowed), parentheses, integer literals and a
  rational literal written ``a/b`` between two integers.  Implicit
  multiplication is a syntax error.

* ``parse_zeta_literal`` reads rational-function literals such as
  ``(q^2-1)/(q^2*(q^(2-2*s)-1))`` where exponents of ``q`` (alias ``p``) may
  be linear in ``s``.  A monomial ``q^(a+b*s)`` maps to ``q^a * t^-b`` with
  ``t = q^-s``.  The result is an exact numerator/denominator pair of Laurent
  polynomials in ``(q, t)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .poly import MultiPoly

QT_VARS = ("q", "t")


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(ValueError):
    def __init__(self, name: str, position: int):
        super().__init__(f"unknown variable '{name}' (at position {position})")
        self.name = name
        self.position = position


@dataclass
class _Tok:
    kind: str  # INT NAME OP END
    text: str
    pos: int


def _tokenize(src: str) -> List[_Tok]:
    toks: List[_Tok] = []
    i, n = 0, len(src)
    while i < n:
        c = src[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            toks.append(_Tok("INT", src[i:j], i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            toks.append(_Tok("NAME", src[i:j], i))
            i = j
            continue
        if c in "+-*/^()":
            toks.append(_Tok("OP", c, i))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {c!r}", i)
    toks.append(_Tok("END", "", n))
    return toks


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op: str):
        t = self.next()
        if t.kind != "OP" or t.text != op:
            raise ExprSyntaxError(f"expected '{op}'", t.pos)


# ----------------------------------------------------------------------
# plain polynomial grammar


def parse_expr(src: str, allowed_vars: Sequence[str]) -> MultiPoly:
    """Parse a polynomial expression over the given variables."""
    p = _Parser(src)
    poly = _parse_sum(p, tuple(allowed_vars))
    if p.peek().kind != "END":
        raise ExprSyntaxError("trailing input", p.peek().pos)
    return poly


def _parse_sum(p: _Parser, vars_: Tuple[str, ...]) -> MultiPoly:
    t = p.peek()
    negate = False
    if t.kind == "OP" and t.text in "+-":
        p.next()
        negate = t.text == "-"
    acc = _parse_product(p, vars_)
    if negate:
        acc = -acc
    while p.peek().kind == "OP" and p.peek().text in "+-":
        op = p.next().text
        rhs = _parse_product(p, vars_)
        acc = acc + rhs if op == "+" else acc - rhs
    return acc


def _parse_product(p: _Parser, vars_: Tuple[str, ...]) -> MultiPoly:
    acc = _parse_power(p, vars_)
    while p.peek().kind == "OP" and p.peek().text in "*/":
        op = p.next().text
        rhs = _parse_power(p, vars_)
        if op == "*":
            acc = acc * rhs
        else:
            if not rhs.is_const() or rhs.as_const() == 0:
                raise ExprSyntaxError("'/' is only allowed between constants", p.peek().pos)
            acc = acc.scale(Fraction(1) / rhs.as_const())
    return acc


def _parse_power(p: _Parser, vars_: Tuple[str, ...]) -> MultiPoly:
    base = _parse_atom(p, vars_)
    if p.peek().kind == "OP" and p.peek().text == "^":
        p.next()
        k = _parse_int_exponent(p)
        if k < 0 and not base.is_monomial():
            raise ExprSyntaxError("negative exponent requires a monomial base", p.peek().pos)
        base = base ** k
    return base


def _parse_int_exponent(p: _Parser) -> int:
    sign = 1
    t = p.peek()
    if t.kind == "OP" and t.text == "-":
        p.next()
        sign = -1
    t = p.next()
    if t.kind != "INT":
        raise ExprSyntaxError("expected integer exponent", t.pos)
    return sign * int(t.text)


def _parse_atom(p: _Parser, vars_: Tuple[str, ...]) -> MultiPoly:
    t = p.next()
    if t.kind == "INT":
        return MultiPoly.const(vars_, int(t.text))
    if t.kind == "NAME":
        if t.text not in vars_:
            raise UnknownVariableError(t.text, t.pos)
        return MultiPoly.var(vars_, t.text)
    if t.kind == "OP" and t.text == "(":
        inner = _parse_sum(p, vars_)
        p.expect_op(")")
        return inner
    if t.kind == "OP" and t.text == "-":
        return -_parse_atom(p, vars_)
    raise ExprSyntaxError("expected a term", t.pos)


# ----------------------------------------------------------------------
# canonical rendering of polynomials


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_poly(poly: MultiPoly) -> str:
    if poly.is_zero():
        return "0"
    items = sorted(poly.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
    parts: List[str] = []
    for exps, c in items:
        factors = []
        for name, e in zip(poly.vars, exps):
            if e == 0:
                continue
            factors.append(name if e == 1 else f"{name}^{e}")
        mono = "*".join(factors)
        if not mono:
            body = _fmt_coeff(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(abs(c))}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)


# ----------------------------------------------------------------------
# zeta-literal grammar: rational functions in q with s-linear exponents


@dataclass
class LitRat:
    """num/den, both Laurent polynomials in (q, t)."""

    num: MultiPoly
    den: MultiPoly

    @classmethod
    def const(cls, c) -> "LitRat":
        return cls(MultiPoly.const(QT_VARS, c), MultiPoly.const(QT_VARS, 1))

    @classmethod
    def monomial_qs(cls, a: int, b: int) -> "LitRat":
        """q^(a + b*s) = q^a * t^-b."""
        return cls(MultiPoly.monomial(QT_VARS, (a, -b)), MultiPoly.const(QT_VARS, 1))

    def __add__(self, o: "LitRat") -> "LitRat":
        return LitRat(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o: "LitRat") -> "LitRat":
        return LitRat(self.num * o.den - o.num * self.den, self.den * o.den)

    def __neg__(self) -> "LitRat":
        return LitRat(-self.num, self.den)

    def __mul__(self, o: "LitRat") -> "LitRat":
        return LitRat(self.num * o.num, self.den * o.den)

    def __truediv__(self, o: "LitRat") -> "LitRat":
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero in zeta literal")
        return LitRat(self.num * o.den, self.den * o.num)

    def __pow__(self, k: int) -> "LitRat":
        if k < 0:
            return LitRat(self.den, self.num) ** (-k)
        out = LitRat.const(1)
        for _ in range(k):
            out = out * self
        return out


def parse_zeta_literal(src: str, qname: str = "q") -> LitRat:
    """Parse a zeta-function literal into an exact (q, t) fraction.

    ``p`` is accepted as an alias for ``q``; ``s`` may only occur inside
    exponents of the q/p variable.
    """
    p = _Parser(src)
    val = _zl_sum(p, qname)
    if p.peek().kind != "END":
        raise ExprSyntaxError("trailing input", p.peek().pos)
    return val


_Q_ALIASES = ("q", "p")


def _zl_sum(p: _Parser, qname) -> LitRat:
    t = p.peek()
    negate = False
    if t.kind == "OP" and t.text in "+-":
        p.next()
        negate = t.text == "-"
    acc = _zl_product(p, qname)
    if negate:
        acc = -acc
    while p.peek().kind == "OP" and p.peek().text in "+-":
        op = p.next().text
        rhs = _zl_product(p, qname)
        acc = acc + rhs if op == "+" else acc - rhs
    return acc


def _zl_product(p: _Parser, qname) -> LitRat:
    acc = _zl_power(p, qname)
    while p.peek().kind == "OP" and p.peek().text in "*/":
        op = p.next().text
        rhs = _zl_power(p, qname)
        acc = acc * rhs if op == "*" else acc / rhs
    return acc


def _zl_power(p: _Parser, qname) -> LitRat:
    t = p.peek()
    if t.kind == "NAME" and t.text in _Q_ALIASES:
        p.next()
        if p.peek().kind == "OP" and p.peek().text == "^":
            p.next()
            a, b = _zl_exponent(p)
            return LitRat.monomial_qs(a, b)
        return LitRat.monomial_qs(1, 0)
    base = _zl_atom(p, qname)
    if p.peek().kind == "OP" and p.peek().text == "^":
        p.next()
        a, b = _zl_exponent(p)
        if b != 0:
            raise ExprSyntaxError("s-linear exponents only allowed on q/p", p.peek().pos)
        return base ** a
    return base


def _zl_atom(p: _Parser, qname) -> LitRat:
    t = p.next()
    if t.kind == "INT":
        return LitRat.const(int(t.text))
    if t.kind == "NAME":
        raise UnknownVariableError(t.text, t.pos)
    if t.kind == "OP" and t.text == "(":
        inner = _zl_sum(p, qname)
        p.expect_op(")")
        return inner
    if t.kind == "OP" and t.text == "-":
        return -_zl_atom(p, qname)
    raise ExprSyntaxError("expected a term", t.pos)


def _zl_exponent(p: _Parser) -> Tuple[int, int]:
    """Parse an exponent: integer, s, -s, or a parenthesized linear form a+b*s."""
    t = p.peek()
    if t.kind == "OP" and t.text == "(":
        p.next()
        val = _lin_sum(p)
        p.expect_op(")")
        return val
    return _lin_term(p, allow_mul=False)


def _lin_sum(p: _Parser) -> Tuple[int, int]:
    t = p.peek()
    sign = 1
    if t.kind == "OP" and t.text in "+-":
        p.next()
        sign = -1 if t.text == "-" else 1
    a, b = _lin_term(p)
    acc = (sign * a, sign * b)
    while p.peek().kind == "OP" and p.peek().text in "+-":
        op = p.next().text
        a, b = _lin_term(p)
        s = 1 if op == "+" else -1
        acc = (acc[0] + s * a, acc[1] + s * b)
    return acc


def _lin_term(p: _Parser, allow_mul: bool = True) -> Tuple[int, int]:
    """INT, s, INT*s, or -prefixed versions."""
    t = p.next()
    sign = 1
    if t.kind == "OP" and t.text == "-":
        sign = -1
        t = p.next()
    if t.kind == "INT":
        k = int(t.text)
        if allow_mul and p.peek().kind == "OP" and p.peek().text == "*":
            p.next()
            t2 = p.next()
            if t2.kind != "NAME" or t2.text != "s":
                raise ExprSyntaxError("expected 's' after '*' in exponent", t2.pos)
            return (0, sign * k)
        return (sign * k, 0)
    if t.kind == "NAME" and t.text == "s":
        return (0, sign)
    raise ExprSyntaxError("expected integer or s in exponent", t.pos)
