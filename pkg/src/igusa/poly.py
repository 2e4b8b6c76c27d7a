"""Exact sparse Laurent polynomials over the rationals.

A polynomial is a map from integer exponent tuples (negative entries allowed,
so these are Laurent polynomials) to Fraction coefficients.  Zero coefficients
are never stored; the zero polynomial has an empty term map.  All arithmetic
is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Mapping, Sequence, Tuple

Exponent = Tuple[int, ...]


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class MultiPoly:
    """Sparse Laurent polynomial in an ordered tuple of named variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, Fraction] | None = None):
        self.vars: Tuple[str, ...] = tuple(variables)
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            nv = len(self.vars)
            for exps, c in terms.items():
                c = _frac(c)
                if c == 0:
                    continue
                exps = tuple(int(e) for e in exps)
                if len(exps) != nv:
                    raise ValueError(f"exponent tuple {exps} has wrong length for vars {self.vars}")
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if clean[exps] == 0:
                    del clean[exps]
        self.terms: Dict[Exponent, Fraction] = clean

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def const(cls, variables: Sequence[str], c) -> "MultiPoly":
        return cls(variables, {(0,) * len(tuple(variables)): _frac(c)})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(variables, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Sequence[int], c=1) -> "MultiPoly":
        return cls(variables, {tuple(int(e) for e in exps): _frac(c)})

    # ------------------------------------------------------------------
    # predicates and views

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def as_const(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_const():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def min_exps(self) -> Exponent:
        if self.is_zero():
            return (0,) * len(self.vars)
        return tuple(min(e[i] for e in self.terms) for i in range(len(self.vars)))

    def max_exps(self) -> Exponent:
        if self.is_zero():
            return (0,) * len(self.vars)
        return tuple(max(e[i] for e in self.terms) for i in range(len(self.vars)))

    def degree(self, name: str | None = None) -> int:
        """Max exponent of one variable, or max total degree if name is None."""
        if self.is_zero():
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def total_valuation(self) -> int:
        """Smallest total degree among monomials (the local multiplicity at 0)."""
        if self.is_zero():
            raise ValueError("valuation of zero polynomial")
        return min(sum(e) for e in self.terms)

    def coefficient_of(self, name: str, k: int) -> "MultiPoly":
        """Coefficient of name**k, as a polynomial in the remaining variables."""
        i = self.vars.index(name)
        rest = tuple(v for v in self.vars if v != name)
        out: Dict[Exponent, Fraction] = {}
        for exps, c in self.terms.items():
            if exps[i] == k:
                key = tuple(e for j, e in enumerate(exps) if j != i)
                out[key] = out.get(key, Fraction(0)) + c
        return MultiPoly(rest, out)

    def content(self) -> Fraction:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        if self.is_zero():
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def leading_key(self) -> Exponent:
        """Graded-lex largest exponent tuple."""
        return max(self.terms, key=lambda e: (sum(e), e))

    # ------------------------------------------------------------------
    # arithmetic

    def _check(self, other: "MultiPoly"):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, Fraction(0)) + c
        return MultiPoly(self.vars, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, Fraction(0)) - c
        return MultiPoly(self.vars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = _frac(c)
        if c == 0:
            return MultiPoly.zero(self.vars)
        return MultiPoly(self.vars, {e: cc * c for e, cc in self.terms.items()})

    def shift(self, exps: Sequence[int]) -> "MultiPoly":
        """Multiply by the monomial with the given exponents."""
        exps = tuple(exps)
        return MultiPoly(self.vars, {tuple(a + b for a, b in zip(e, exps)): c
                                     for e, c in self.terms.items()})

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial")
            (exps, c), = self.terms.items()
            return MultiPoly(self.vars, {tuple(k * e for e in exps): c ** k})
        out = MultiPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPoly) and self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # ------------------------------------------------------------------
    # evaluation and substitution

    def eval(self, values: Mapping[str, Fraction | int]) -> Fraction:
        """Evaluate at exact rational values for every variable."""
        vals = [_frac(values[v]) for v in self.vars]
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(vals, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    def eval_partial(self, values: Mapping[str, Fraction | int]) -> "MultiPoly":
        """Substitute exact values for a subset of the variables."""
        keep = [i for i, v in enumerate(self.vars) if v not in values]
        out: Dict[Exponent, Fraction] = {}
        for exps, c in self.terms.items():
            coeff = c
            for i, v in enumerate(self.vars):
                if v in values:
                    e = exps[i]
                    if e:
                        coeff *= _frac(values[v]) ** e
            key = tuple(exps[i] for i in keep)
            out[key] = out.get(key, Fraction(0)) + coeff
        return MultiPoly(tuple(self.vars[i] for i in keep), out)

    def compose(self, images: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials for variables (all images share one var tuple).

        Exponents of substituted variables must be nonnegative.
        """
        target_vars = next(iter(images.values())).vars
        pow_cache: Dict[Tuple[str, int], MultiPoly] = {}

        def power(name: str, e: int) -> MultiPoly:
            key = (name, e)
            if key not in pow_cache:
                pow_cache[key] = images[name] ** e
            return pow_cache[key]

        out = MultiPoly.zero(target_vars)
        for exps, c in self.terms.items():
            term = MultiPoly.const(target_vars, c)
            for name, e in zip(self.vars, exps):
                if e == 0:
                    continue
                if name not in images:
                    raise ValueError(f"no image for variable {name}")
                if e < 0:
                    raise ValueError("negative exponent in compose")
                term = term * power(name, e)
            out = out + term
        return out

    def rename(self, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        if len(variables) != len(self.vars):
            raise ValueError("rename must preserve arity")
        return MultiPoly(variables, dict(self.terms))

    def derivative(self, name: str) -> "MultiPoly":
        i = self.vars.index(name)
        out: Dict[Exponent, Fraction] = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            key = tuple(ee - 1 if j == i else ee for j, ee in enumerate(exps))
            out[key] = out.get(key, Fraction(0)) + c * e
        return MultiPoly(self.vars, out)

    def translate(self, point: Mapping[str, Fraction | int]) -> "MultiPoly":
        """Substitute v -> v + point[v]; used to read off local multiplicities."""
        images = {}
        for v in self.vars:
            img = MultiPoly.var(self.vars, v)
            if v in point and point[v] != 0:
                img = img + MultiPoly.const(self.vars, point[v])
            images[v] = img
        return self.compose(images)

    def multiplicity_at(self, point: Mapping[str, Fraction | int]) -> int:
        """Multiplicity (lowest total degree) of the polynomial at a point."""
        return self.translate(point).total_valuation()

    # ------------------------------------------------------------------
    # division

    def divide_exact(self, divisor: "MultiPoly") -> "MultiPoly | None":
        """Exact division; returns None when the divisor does not divide self.

        Laurent inputs are shifted to ordinary polynomials first; a single
        divisor is a Groebner basis of its own ideal, so a zero remainder in
        graded-lex division is equivalent to divisibility.
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return MultiPoly.zero(self.vars)
        smin = self.min_exps()
        dmin = divisor.min_exps()
        f = self.shift(tuple(-e for e in smin))
        d = divisor.shift(tuple(-e for e in dmin))
        dk = d.leading_key()
        dc = d.terms[dk]
        quot: Dict[Exponent, Fraction] = {}
        while not f.is_zero():
            fk = f.leading_key()
            qk = tuple(a - b for a, b in zip(fk, dk))
            if any(e < 0 for e in qk):
                return None
            qc = f.terms[fk] / dc
            quot[qk] = qc
            f = f - d * MultiPoly(self.vars, {qk: qc})
        shift = tuple(a - b for a, b in zip(smin, dmin))
        return MultiPoly(self.vars, quot).shift(shift)

    def var_valuation(self, name: str) -> int:
        """Largest k with name**k dividing self (0 for the zero polynomial)."""
        if self.is_zero():
            return 0
        i = self.vars.index(name)
        return min(e[i] for e in self.terms)

    # ------------------------------------------------------------------

    def __repr__(self):
        from .exprs import render_poly
        return f"MultiPoly({render_poly(self)})"


def poly_gcd_fraction(a: Fraction, b: Fraction) -> Fraction:
    """gcd on Q: gcd of numerators over lcm of denominators."""
    num = gcd(a.numerator, b.numerator)
    den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    return Fraction(num, den)
