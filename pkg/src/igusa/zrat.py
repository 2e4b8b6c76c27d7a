"""Exact rational functions in (q, t = q^-s) with factored denominators.

A ZetaRat is  scalar * q^a * t^b * num / prod_i F_i^{m_i}  where each
denominator factor F = (v, N) denotes the *cleared* polynomial form of
q^(v+N*s) - 1:

    N > 0:  q^v - t^N          (since q^(v+Ns) - 1 = t^-N (q^v - t^N))
    N < 0:  q^v t^|N| - 1
    N = 0:  q^v - 1

The t^-N Laurent slack for N > 0 is absorbed by the monomial prefactor when
an inverse factor is built.  Pole real parts -v/N are read directly off
surviving factors; no root finding happens anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .poly import MultiPoly

QT = ("q", "t")
LT = ("L", "T")

NEG_INF = float("-inf")
POS_INF = float("inf")


class PoleHit(ArithmeticError):
    """A denominator factor vanishes at the evaluation point."""


class BandInvalid(ValueError):
    """A pole lies strictly inside the requested convergence band."""


@dataclass(frozen=True, order=True)
class DenomFactor:
    """The factor q^(v+N*s) - 1; v >= 1, N any integer."""

    v: int
    N: int

    def cleared(self, variables: Sequence[str] = QT) -> MultiPoly:
        if self.N > 0:
            return MultiPoly(variables, {(self.v, 0): Fraction(1), (0, self.N): Fraction(-1)})
        if self.N < 0:
            return MultiPoly(variables, {(self.v, -self.N): Fraction(1), (0, 0): Fraction(-1)})
        return MultiPoly(variables, {(self.v, 0): Fraction(1), (0, 0): Fraction(-1)})

    def real_part(self) -> Fraction:
        if self.N == 0:
            raise ValueError("N = 0 factor contributes no pole")
        return Fraction(-self.v, self.N)


@dataclass(frozen=True)
class PoleDescriptor:
    real_part: Fraction
    order: int
    lattice: Tuple[int, int]  # (N, v): the family s = -v/N + 2 pi i k / (N ln q)


class ZetaRat:
    __slots__ = ("vars", "scalar", "qexp", "texp", "num", "den")

    def __init__(self, num: MultiPoly, den: Dict[DenomFactor, int] | None = None,
                 scalar: Fraction | int = 1, qexp: int = 0, texp: int = 0,
                 variables: Sequence[str] = QT, normalized: bool = False):
        self.vars = tuple(variables)
        self.num = num if num.vars == self.vars else num.rename(self.vars)
        self.den: Dict[DenomFactor, int] = dict(den) if den else {}
        self.scalar = Fraction(scalar)
        self.qexp = int(qexp)
        self.texp = int(texp)
        if not normalized:
            self._normalize()

    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, variables: Sequence[str] = QT) -> "ZetaRat":
        return cls(MultiPoly.zero(variables), {}, 0, 0, 0, variables, normalized=True)

    @classmethod
    def const(cls, c, variables: Sequence[str] = QT) -> "ZetaRat":
        return cls(MultiPoly.const(variables, c), variables=variables)

    @classmethod
    def from_poly(cls, p: MultiPoly, variables: Sequence[str] = QT) -> "ZetaRat":
        return cls(p if p.vars == tuple(variables) else p.rename(variables), variables=variables)

    @classmethod
    def monomial(cls, qexp: int, texp: int, c=1, variables: Sequence[str] = QT) -> "ZetaRat":
        return cls(MultiPoly.const(variables, 1), {}, Fraction(c), qexp, texp, variables)

    @classmethod
    def inv_factor(cls, v: int, N: int, variables: Sequence[str] = QT) -> "ZetaRat":
        """1 / (q^(v+N*s) - 1)."""
        texp = N if N > 0 else 0
        return cls(MultiPoly.const(variables, 1), {DenomFactor(v, N): 1},
                   1, 0, texp, variables)

    # ------------------------------------------------------------------
    def _normalize(self):
        if self.num.is_zero() or self.scalar == 0:
            self.num = MultiPoly.zero(self.vars)
            self.den = {}
            self.scalar = Fraction(0)
            self.qexp = 0
            self.texp = 0
            return
        # cancel denominator factors that divide the numerator
        for fac in sorted(self.den):
            mult = self.den[fac]
            cleared = fac.cleared(self.vars)
            while mult > 0:
                quot = self.num.divide_exact(cleared)
                if quot is None:
                    break
                self.num = quot
                mult -= 1
            if mult:
                self.den[fac] = mult
            else:
                del self.den[fac]
        # pull the monomial and rational content into the prefactor
        mins = self.num.min_exps()
        if any(mins):
            self.num = self.num.shift(tuple(-e for e in mins))
            self.qexp += mins[0]
            self.texp += mins[1]
        c = self.num.content()
        lead = self.num.terms[self.num.leading_key()]
        if lead < 0:
            c = -c
        if c != 1:
            self.num = self.num.scale(Fraction(1) / c)
            self.scalar *= c

    def is_zero(self) -> bool:
        return self.num.is_zero()

    # ------------------------------------------------------------------
    def _den_poly(self) -> MultiPoly:
        out = MultiPoly.const(self.vars, 1)
        for fac, m in sorted(self.den.items()):
            out = out * (fac.cleared(self.vars) ** m)
        return out

    def full_num(self) -> MultiPoly:
        """scalar * q^a * t^b * num as a single Laurent polynomial."""
        return self.num.shift((self.qexp, self.texp)).scale(self.scalar)

    def equals_fraction(self, num: MultiPoly, den: MultiPoly) -> bool:
        """Compare with an arbitrary num/den pair by cross-multiplication."""
        num = num if num.vars == self.vars else num.rename(self.vars)
        den = den if den.vars == self.vars else den.rename(self.vars)
        return self.full_num() * den == num * self._den_poly()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZetaRat):
            return NotImplemented
        if self.vars != other.vars:
            return False
        return self.equals_fraction(other.full_num(), other._den_poly())

    def __hash__(self):
        raise TypeError("ZetaRat is unhashable (equality is by cross-multiplication)")

    # ------------------------------------------------------------------
    def __add__(self, other: "ZetaRat") -> "ZetaRat":
        if isinstance(other, (int, Fraction)):
            other = ZetaRat.const(other, self.vars)
        if self.vars != other.vars:
            raise ValueError("variable mismatch")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        # union multiset of denominator factors
        den: Dict[DenomFactor, int] = dict(self.den)
        for fac, m in other.den.items():
            den[fac] = max(den.get(fac, 0), m)
        lift_a = MultiPoly.const(self.vars, 1)
        lift_b = MultiPoly.const(self.vars, 1)
        for fac, m in den.items():
            da = m - self.den.get(fac, 0)
            db = m - other.den.get(fac, 0)
            if da:
                lift_a = lift_a * (fac.cleared(self.vars) ** da)
            if db:
                lift_b = lift_b * (fac.cleared(self.vars) ** db)
        num = self.full_num() * lift_a + other.full_num() * lift_b
        return ZetaRat(num, den, 1, 0, 0, self.vars)

    __radd__ = __add__

    def __neg__(self) -> "ZetaRat":
        return ZetaRat(self.num, self.den, -self.scalar, self.qexp, self.texp,
                       self.vars, normalized=True)

    def __sub__(self, other: "ZetaRat") -> "ZetaRat":
        return self + (-other)

    def __mul__(self, other) -> "ZetaRat":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZetaRat.zero(self.vars)
            return ZetaRat(self.num, self.den, self.scalar * other, self.qexp,
                           self.texp, self.vars, normalized=True)
        if isinstance(other, MultiPoly):
            other = ZetaRat.from_poly(other, self.vars)
        if self.vars != other.vars:
            raise ValueError("variable mismatch")
        den = dict(self.den)
        for fac, m in other.den.items():
            den[fac] = den.get(fac, 0) + m
        return ZetaRat(self.num * other.num, den, self.scalar * other.scalar,
                       self.qexp + other.qexp, self.texp + other.texp, self.vars)

    __rmul__ = __mul__

    # ------------------------------------------------------------------
    def evaluate(self, q0, t0) -> Fraction:
        """Exact value at rational (q0, t0); raises PoleHit on vanishing factors."""
        q0, t0 = Fraction(q0), Fraction(t0)
        if t0 == 0:
            raise ValueError("t0 must be nonzero")
        point = {self.vars[0]: q0, self.vars[1]: t0}
        val = self.scalar * q0 ** self.qexp * t0 ** self.texp * self.num.eval(point)
        for fac, m in self.den.items():
            fv = fac.cleared(self.vars).eval(point)
            if fv == 0:
                raise PoleHit(f"factor (v={fac.v}, N={fac.N}) vanishes at q={q0}, t={t0}")
            val /= fv ** m
        return val

    def poles(self, q0=None) -> List[PoleDescriptor]:
        """One descriptor per surviving factor with N != 0, sorted by real part."""
        out = [PoleDescriptor(fac.real_part(), m, (fac.N, fac.v))
               for fac, m in self.den.items() if fac.N != 0]
        out.sort(key=lambda d: (d.real_part, d.lattice))
        return out

    # ------------------------------------------------------------------
    def band_series(self, band, k_range, q0) -> Dict[int, Fraction]:
        """Two-sided Laurent coefficients mu_k on the band beta < Re(s) < alpha.

        Factors with N > 0 (pole real part <= beta) are expanded in powers of
        t, factors with N < 0 (pole real part >= alpha) in powers of 1/t.
        """
        beta, alpha = band
        q0 = Fraction(q0)
        if isinstance(k_range, range):
            ks = list(k_range)
        else:
            ks = list(range(k_range[0], k_range[1] + 1))
        if self.is_zero():
            return {k: Fraction(0) for k in ks}
        d_plus: List[Tuple[DenomFactor, int]] = []
        d_minus: List[Tuple[DenomFactor, int]] = []
        const = self.scalar * q0 ** self.qexp
        for fac, m in sorted(self.den.items()):
            if fac.N == 0:
                const /= (q0 ** fac.v - 1) ** m
            elif fac.N > 0:
                rp = fac.real_part()
                if not rp <= beta:
                    raise BandInvalid(f"pole at Re(s)={rp} not left of band ({beta}, {alpha})")
                d_plus.append((fac, m))
            else:
                rp = fac.real_part()
                if not rp >= alpha:
                    raise BandInvalid(f"pole at Re(s)={rp} not right of band ({beta}, {alpha})")
                d_minus.append((fac, m))

        num_t = self.num.eval_partial({self.vars[0]: q0})  # univariate in t, Laurent
        tmin = num_t.min_exps()[0]
        shift = self.texp + tmin
        U = _to_ulist(num_t.shift((-tmin,)))

        Dp = [Fraction(1)]
        for fac, m in d_plus:
            base = _fac_ulist(fac, q0)
            for _ in range(m):
                Dp = _up_mul(Dp, base)
        Dm = [Fraction(1)]
        for fac, m in d_minus:
            base = _fac_ulist(fac, q0)
            for _ in range(m):
                Dm = _up_mul(Dm, base)

        D = _up_mul(Dp, Dm)
        Q, R = _up_divmod(U, D)

        g, sc, tc = _up_egcd(Dp, Dm)
        if len(g) != 1:
            raise BandInvalid("expansion directions share a root; band is empty")
        tc = [c / g[0] for c in tc]
        X = _up_divmod(_up_mul(R, tc), Dp)[1] if len(Dp) > 1 else [Fraction(0)]
        Y = _up_divmod(_up_sub(R, _up_mul(X, Dm)), Dp)[0]

        kmax_rel = max((k - shift for k in ks), default=0)
        kmin_rel = min((k - shift for k in ks), default=0)
        plus_series = _up_taylor(X, Dp, max(kmax_rel, 0)) if len(Dp) > 1 else {}
        minus_series = _up_antitaylor(Y, Dm, kmin_rel) if len(Dm) > 1 else {}

        out: Dict[int, Fraction] = {}
        for k in ks:
            r = k - shift
            val = Fraction(0)
            if 0 <= r < len(Q):
                val += Q[r]
            val += plus_series.get(r, Fraction(0))
            val += minus_series.get(r, Fraction(0))
            out[k] = const * val
        return out

    # ------------------------------------------------------------------
    def __repr__(self):
        from .render import render_zeta
        return f"ZetaRat({render_zeta(self)})"


# ----------------------------------------------------------------------
# univariate helpers over Fraction (coefficient lists, index = degree)


def _to_ulist(p: MultiPoly) -> List[Fraction]:
    if p.is_zero():
        return [Fraction(0)]
    deg = p.max_exps()[0]
    out = [Fraction(0)] * (deg + 1)
    for (e,), c in p.terms.items():
        out[e] = c
    return out


def _fac_ulist(fac: DenomFactor, q0: Fraction) -> List[Fraction]:
    if fac.N > 0:
        out = [Fraction(0)] * (fac.N + 1)
        out[0] = q0 ** fac.v
        out[fac.N] = Fraction(-1)
        return out
    out = [Fraction(0)] * (-fac.N + 1)
    out[0] = Fraction(-1)
    out[-fac.N] = q0 ** fac.v
    return out


def _up_trim(a: List[Fraction]) -> List[Fraction]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _up_mul(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return _up_trim(out)


def _up_sub(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _up_trim(out)


def _up_divmod(a: List[Fraction], b: List[Fraction]):
    b = _up_trim(list(b))
    if b == [Fraction(0)]:
        raise ZeroDivisionError
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while _up_trim(a) != [Fraction(0)] and len(_up_trim(a)) >= len(b):
        a = _up_trim(a)
        d = len(a) - len(b)
        c = a[-1] / b[-1]
        q[d] = c
        for i, bc in enumerate(b):
            a[i + d] -= c * bc
    return _up_trim(q), _up_trim(a)


def _up_egcd(a: List[Fraction], b: List[Fraction]):
    """Returns (g, s, t) with s*a + t*b = g."""
    r0, r1 = _up_trim(list(a)), _up_trim(list(b))
    s0, s1 = [Fraction(1)], [Fraction(0)]
    t0, t1 = [Fraction(0)], [Fraction(1)]
    while r1 != [Fraction(0)]:
        q, r = _up_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _up_sub(s0, _up_mul(q, s1))
        t0, t1 = t1, _up_sub(t0, _up_mul(q, t1))
    return r0, s0, t0


def _up_taylor(num: List[Fraction], den: List[Fraction], kmax: int) -> Dict[int, Fraction]:
    """Power-series coefficients of num/den up to t^kmax (den[0] != 0)."""
    if den[0] == 0:
        raise ZeroDivisionError("series denominator vanishes at 0")
    out: Dict[int, Fraction] = {}
    c: List[Fraction] = []
    for k in range(kmax + 1):
        val = num[k] if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            val -= den[j] * c[k - j]
        val /= den[0]
        c.append(val)
        out[k] = val
    return out


def _up_antitaylor(num: List[Fraction], den: List[Fraction], kmin: int) -> Dict[int, Fraction]:
    """Coefficients of num/den expanded in powers of 1/t, down to t^kmin."""
    nb = _up_trim(list(num))
    db = _up_trim(list(den))
    if nb == [Fraction(0)]:
        return {}
    dn, dd = len(nb) - 1, len(db) - 1
    # num/den = w^(dd-dn) * rev(num)(w) / rev(den)(w), w = 1/t
    rn = list(reversed(nb))
    rd = list(reversed(db))
    depth = -kmin - (dd - dn)
    if depth < 0:
        return {}
    series = _up_taylor(rn, rd, depth)
    return {-(j + dd - dn): c for j, c in series.items()}
