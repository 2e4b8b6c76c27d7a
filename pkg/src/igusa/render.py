"""Plain-text and LaTeX rendering of ZetaRat values.

The plain form uses only ``q`` and ``s`` (``t = q^-s`` is folded into
exponents linear in ``s``) and round-trips through
:func:`igusa.exprs.parse_zeta_literal`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List

from .zrat import ZetaRat, DenomFactor


def _exp_str(c: int, d: int, latex: bool) -> str:
    """Render the exponent c + d*s."""
    parts: List[str] = []
    if c:
        parts.append(str(c))
    if d:
        if d == 1:
            sterm = "s"
        elif d == -1:
            sterm = "-s"
        else:
            sterm = f"{d}s" if latex else f"{d}*s"
        if parts and d > 0:
            parts.append(f"+{sterm}")
        else:
            parts.append(sterm)
    if not parts:
        return "0"
    return "".join(parts)


def _q_power(c: int, d: int, latex: bool) -> str:
    e = _exp_str(c, d, latex)
    if e == "0":
        return "1"
    if e == "1":
        return "q"
    if latex:
        return f"q^{{{e}}}"
    if d == 0 and c > 0:
        return f"q^{c}"
    return f"q^({e})"


def _coeff_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _num_poly_str(z: ZetaRat, num_qexp: int, num_texp: int, latex: bool) -> str:
    poly = z.num.shift((num_qexp, num_texp)).scale(z.scalar)
    if poly.is_zero():
        return "0"
    items = sorted(poly.terms.items(), key=lambda kv: (kv[0][0] - kv[0][1], kv[0]), reverse=True)
    parts: List[str] = []
    for (i, j), c in items:
        qpow = _q_power(i, -j, latex)  # q^i t^j = q^(i - j*s)
        if qpow == "1":
            body = _coeff_str(abs(c))
        elif abs(c) == 1:
            body = qpow
        else:
            mul = "" if latex else "*"
            body = f"{_coeff_str(abs(c))}{mul}{qpow}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if c > 0 else f"-{body}")
    return "".join(parts)


def _factor_str(fac: DenomFactor, mult: int, latex: bool) -> str:
    base = f"({_q_power(fac.v, fac.N, latex)}-1)"
    if mult > 1:
        return f"{base}^{{{mult}}}" if latex else f"{base}^{mult}"
    return base


def render_zeta(z: ZetaRat, latex: bool = False) -> str:
    if z.is_zero():
        return "0"
    den_parts: List[str] = []
    num_qexp = z.qexp
    if z.qexp < 0:
        den_parts.append(_q_power(-z.qexp, 0, latex))
        num_qexp = 0
    # rendering N>0 factors as (q^(v+Ns)-1) = t^-N (q^v - t^N) sheds a t^-N
    # per factor relative to the cleared form; compensate in the numerator
    num_texp = z.texp
    for fac, m in sorted(z.den.items()):
        den_parts.append(_factor_str(fac, m, latex))
        if fac.N > 0:
            num_texp += fac.N * m
    num_str = _num_poly_str(z, num_qexp, num_texp, latex)
    if not den_parts:
        return num_str
    mul = "" if latex else "*"
    den_str = mul.join(den_parts)
    if latex:
        return f"\\frac{{{num_str}}}{{{den_str}}}"
    if ("+" in num_str[1:]) or ("-" in num_str[1:]):
        num_str = f"({num_str})"
    return f"{num_str}/({den_str})"


def render_zeta_plain(z: ZetaRat) -> str:
    return render_zeta(z, latex=False)


def render_zeta_latex(z: ZetaRat) -> str:
    return render_zeta(z, latex=True)
