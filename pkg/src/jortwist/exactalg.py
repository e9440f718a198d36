"""Exact commutative arithmetic: rationals, polynomials in the interpolation
parameter u, and multivariate polynomials in the commuting dilatation
variables x, y, z.

All coefficients are arbitrary-precision fractions; there is no floating
point anywhere in this package.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

MAX_LEGS = 3
VAR_NAMES = ("x", "y", "z")

NEG_INF = float("-inf")


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError("expected an integer or Fraction, got %r" % (value,))


class UPoly:
    """Polynomial in the parameter u with rational coefficients.

    Stored sparsely as {degree: coefficient}; zero coefficients are never
    kept, so equality is plain dict comparison.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        cleaned = {}
        if coeffs:
            for deg, c in coeffs.items():
                c = _as_fraction(c)
                if c:
                    if deg < 0:
                        raise ValueError("negative degree in UPoly")
                    cleaned[deg] = c
        self.coeffs = cleaned

    @classmethod
    def const(cls, value):
        return cls({0: _as_fraction(value)})

    @classmethod
    def u(cls):
        return cls({1: Fraction(1)})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, UPoly):
            return value
        return cls.const(value)

    @property
    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return max(self.coeffs) if self.coeffs else NEG_INF

    def constant_term(self):
        return self.coeffs.get(0, Fraction(0))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPoly.const(other)
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        other = UPoly.coerce(other)
        out = dict(self.coeffs)
        for deg, c in other.coeffs.items():
            s = out.get(deg, 0) + c
            if s:
                out[deg] = s
            else:
                out.pop(deg, None)
        res = UPoly()
        res.coeffs = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = UPoly()
        res.coeffs = {deg: -c for deg, c in self.coeffs.items()}
        return res

    def __sub__(self, other):
        return self + (-UPoly.coerce(other))

    def __rsub__(self, other):
        return UPoly.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            if not other:
                return UPoly()
            res = UPoly()
            res.coeffs = {deg: c * other for deg, c in self.coeffs.items()}
            return res
        if not isinstance(other, UPoly):
            return NotImplemented
        out = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                deg = d1 + d2
                s = out.get(deg, 0) + c1 * c2
                if s:
                    out[deg] = s
                else:
                    out.pop(deg, None)
        res = UPoly()
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a UPoly")
        res = UPoly.const(1)
        for _ in range(n):
            res = res * self
        return res

    def __call__(self, u0):
        u0 = _as_fraction(u0)
        total = Fraction(0)
        for deg, c in self.coeffs.items():
            total += c * u0**deg
        return total

    def __repr__(self):
        return "UPoly(%r)" % (self.coeffs,)

    def __str__(self):
        return format_upoly(self)


def format_upoly(p, var="u"):
    if p.is_zero:
        return "0"
    parts = []
    for deg in sorted(p.coeffs, reverse=True):
        c = p.coeffs[deg]
        if deg == 0:
            mono = str(c)
        else:
            uv = var if deg == 1 else "%s^%d" % (var, deg)
            if c == 1:
                mono = uv
            elif c == -1:
                mono = "-" + uv
            else:
                mono = "%s*%s" % (c, uv)
        if parts and not mono.startswith("-"):
            parts.append("+" + mono)
        else:
            parts.append(mono)
    return "".join(parts)


class DPoly:
    """Polynomial in up to three commuting variables with UPoly coefficients.

    Sparse and canonical: terms map exponent vectors (one entry per leg) to
    nonzero UPoly values.
    """

    __slots__ = ("legs", "terms")

    def __init__(self, legs, terms=None):
        if not 1 <= legs <= MAX_LEGS:
            raise ValueError("legs must be between 1 and %d" % MAX_LEGS)
        self.legs = legs
        cleaned = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != legs or any(e < 0 for e in exps):
                    raise ValueError("bad exponent vector %r" % (exps,))
                c = UPoly.coerce(c)
                if not c.is_zero:
                    cleaned[exps] = c
        self.terms = cleaned

    @classmethod
    def const(cls, legs, value):
        return cls(legs, {(0,) * legs: UPoly.coerce(value)})

    @classmethod
    def variable(cls, legs, index):
        """The variable of leg `index` (1-based)."""
        if not 1 <= index <= legs:
            raise ValueError("variable index out of range")
        exps = tuple(1 if i == index - 1 else 0 for i in range(legs))
        return cls(legs, {exps: 1})

    @property
    def is_zero(self):
        return not self.terms

    def _check_legs(self, other):
        if self.legs != other.legs:
            raise ValueError("DPoly leg counts differ: %d vs %d"
                             % (self.legs, other.legs))

    def coerce_other(self, other):
        if isinstance(other, DPoly):
            return other
        return DPoly.const(self.legs, other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, UPoly)):
            other = DPoly.const(self.legs, other)
        if not isinstance(other, DPoly):
            return NotImplemented
        return self.legs == other.legs and self.terms == other.terms

    def __hash__(self):
        return hash((self.legs, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self.coerce_other(other)
        self._check_legs(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps)
            s = c if s is None else s + c
            if s.is_zero:
                out.pop(exps, None)
            else:
                out[exps] = s
        res = DPoly(self.legs)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = DPoly(self.legs)
        res.terms = {exps: -c for exps, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-self.coerce_other(other))

    def __rsub__(self, other):
        return self.coerce_other(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, UPoly)):
            other = UPoly.coerce(other)
            if other.is_zero:
                return DPoly(self.legs)
            res = DPoly(self.legs)
            res.terms = {exps: c * other for exps, c in self.terms.items()}
            return res
        if not isinstance(other, DPoly):
            return NotImplemented
        self._check_legs(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(exps)
                s = c if s is None else s + c
                if s.is_zero:
                    out.pop(exps, None)
                else:
                    out[exps] = s
        res = DPoly(self.legs)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a DPoly")
        res = DPoly.const(self.legs, 1)
        for _ in range(n):
            res = res * self
        return res

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=NEG_INF)

    def substitute_linear(self, scales, offsets):
        """Replace each variable x_i by scales[i]*x_i + offsets[i]."""
        scales = [_as_fraction(s) for s in scales]
        offsets = [_as_fraction(c) for c in offsets]
        out = DPoly(self.legs)
        for exps, coef in self.terms.items():
            term = DPoly.const(self.legs, coef)
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                if scales[i] == 1 and offsets[i] == 0:
                    factor = DPoly(self.legs, {
                        tuple(e if j == i else 0 for j in range(self.legs)): 1})
                else:
                    # (s*x + c)^e expanded binomially
                    factor = DPoly(self.legs)
                    for j in range(e + 1):
                        coeff = math.comb(e, j) * scales[i]**j * offsets[i]**(e - j)
                        if coeff:
                            key = tuple(j if k == i else 0 for k in range(self.legs))
                            factor = factor + DPoly(self.legs, {key: coeff})
                term = term * factor
            out = out + term
        return out

    def shift(self, offsets):
        """Replace each variable x_i by x_i + offsets[i]."""
        if all(c == 0 for c in offsets):
            return self
        return self.substitute_linear([1] * self.legs, offsets)

    def split_variable(self, slot):
        """Replace the slot variable by a sum of two fresh adjacent variables.

        Variables after the slot are re-indexed; the result has one more leg.
        """
        if not 1 <= slot <= self.legs:
            raise ValueError("slot out of range")
        if self.legs >= MAX_LEGS:
            raise ValueError("cannot split beyond %d variables" % MAX_LEGS)
        i = slot - 1
        out = DPoly(self.legs + 1)
        terms = {}
        for exps, coef in self.terms.items():
            e = exps[i]
            for j in range(e + 1):
                key = exps[:i] + (j, e - j) + exps[i + 1:]
                c = coef * math.comb(e, j)
                s = terms.get(key)
                s = c if s is None else s + c
                terms[key] = s
        out.terms = {k: v for k, v in terms.items() if not v.is_zero}
        return out

    def evaluate(self, point, u_value=0):
        """Exact value at a rational point (one entry per variable)."""
        if len(point) != self.legs:
            raise ValueError("point must assign every variable")
        point = [_as_fraction(v) for v in point]
        u_value = _as_fraction(u_value)
        total = Fraction(0)
        for exps, coef in self.terms.items():
            val = coef(u_value)
            for v, e in zip(point, exps):
                val *= v**e
            total += val
        return total

    def specialize_u(self, u0):
        res = DPoly(self.legs)
        for exps, coef in self.terms.items():
            v = coef(u0)
            if v:
                res.terms[exps] = UPoly.const(v)
        return res

    def __repr__(self):
        return "DPoly(%d, %r)" % (self.legs, self.terms)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for exps in sorted(self.terms):
            coef = self.terms[exps]
            mono = "*".join(
                VAR_NAMES[i] if e == 1 else "%s^%d" % (VAR_NAMES[i], e)
                for i, e in enumerate(exps) if e > 0)
            cs = format_upoly(coef)
            if len(coef.coeffs) > 1:
                cs = "(%s)" % cs
            parts.append("%s*%s" % (cs, mono) if mono else cs)
        return " + ".join(parts)


def binom_poly(T, k):
    """Binomial symbol with polynomial argument: T(T-1)...(T-k+1)/k!."""
    if k < 0:
        raise ValueError("binomial lower index must be nonnegative")
    if isinstance(T, DPoly):
        res = DPoly.const(T.legs, 1)
    else:
        res = UPoly.const(1)
    for j in range(k):
        res = res * (T - j)
    return res * Fraction(1, math.factorial(k))


def int_binom(n, k):
    """Integer binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)
