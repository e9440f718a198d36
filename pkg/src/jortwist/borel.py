"""Normal-ordered, truncated tensor algebra over the Borel algebra.

Generators per tensor leg: the distinguished momentum P (each power carries
one power of 1/kappa, which defines the grading), a transverse momentum
probe Q (grade 0), and the dilatation D, with

    [P, D] = P,   [Q, D] = Q,   [P, Q] = 0.

Elements are stored in normal form: momenta to the left, a polynomial in D
to the right, leg by leg.  Reordering uses f(D) P^m Q^n = P^m Q^n f(D-m-n).
All arithmetic drops terms of grade greater than the truncation order, so
every equality below is an equality of truncated series.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exactalg import DPoly, UPoly, binom_poly

MAX_LEGS = 3


def _key_grade(key):
    return sum(p for p, _ in key)


class TensorElement:
    """A truncated, normal-ordered element of U(b)^{tensor legs}.

    terms maps a tuple of per-leg momentum degrees (pdeg, qdeg) to the
    DPoly (in the per-leg dilatation variables) standing to their right.
    A stored term with total momentum degree g represents the operator
    times (1/kappa)^g; terms of grade above the truncation are dropped.
    """

    __slots__ = ("legs", "truncation", "terms")

    def __init__(self, legs, truncation, terms=None):
        if not 1 <= legs <= MAX_LEGS:
            raise ValueError("legs must be between 1 and %d" % MAX_LEGS)
        if truncation < 0:
            raise ValueError("truncation order must be nonnegative")
        self.legs = legs
        self.truncation = truncation
        cleaned = {}
        if terms:
            for key, d in terms.items():
                key = tuple((int(p), int(q)) for p, q in key)
                if len(key) != legs or any(p < 0 or q < 0 for p, q in key):
                    raise ValueError("bad momentum key %r" % (key,))
                if _key_grade(key) > truncation:
                    continue
                if not isinstance(d, DPoly):
                    d = DPoly.const(legs, d)
                if d.legs != legs:
                    raise ValueError("DPoly leg count does not match element")
                if not d.is_zero:
                    cleaned[key] = d
        self.terms = cleaned

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, legs, truncation):
        return cls(legs, truncation)

    @classmethod
    def one(cls, legs, truncation):
        key = ((0, 0),) * legs
        return cls(legs, truncation, {key: DPoly.const(legs, 1)})

    @classmethod
    def momentum_p(cls, truncation):
        """The 1-leg element P/kappa (grade 1)."""
        return cls(1, truncation, {((1, 0),): DPoly.const(1, 1)})

    @classmethod
    def momentum_q(cls, truncation):
        """The 1-leg transverse momentum probe Q (grade 0)."""
        return cls(1, truncation, {((0, 1),): DPoly.const(1, 1)})

    @classmethod
    def dilatation(cls, truncation):
        return cls(1, truncation, {((0, 0),): DPoly.variable(1, 1)})

    @classmethod
    def monomial(cls, truncation, pdeg, qdeg, ddeg):
        """1-leg P^p Q^q D^d (with the implicit kappa^-p)."""
        return cls(1, truncation,
                   {((pdeg, qdeg),): DPoly(1, {(ddeg,): 1})})

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def min_grade(self):
        return min((_key_grade(k) for k in self.terms), default=None)

    def grade_slice(self, n):
        """The homogeneous part of kappa-grade n."""
        if not 0 <= n <= self.truncation:
            raise ValueError("grade out of range")
        res = TensorElement(self.legs, self.truncation)
        res.terms = {k: d for k, d in self.terms.items() if _key_grade(k) == n}
        return res

    def _check_shape(self, other):
        if self.legs != other.legs or self.truncation != other.truncation:
            raise ValueError(
                "shape mismatch: (%d legs, N=%d) vs (%d legs, N=%d)"
                % (self.legs, self.truncation, other.legs, other.truncation))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        self._check_shape(other)
        out = dict(self.terms)
        for key, d in other.terms.items():
            s = out.get(key)
            s = d if s is None else s + d
            if s.is_zero:
                out.pop(key, None)
            else:
                out[key] = s
        res = TensorElement(self.legs, self.truncation)
        res.terms = out
        return res

    def __neg__(self):
        res = TensorElement(self.legs, self.truncation)
        res.terms = {k: -d for k, d in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        """Multiply by a central scalar (rational or polynomial in u)."""
        c = UPoly.coerce(c)
        if c.is_zero:
            return TensorElement(self.legs, self.truncation)
        res = TensorElement(self.legs, self.truncation)
        res.terms = {k: d * c for k, d in self.terms.items()}
        return res

    def __mul__(self, other):
        """Normal-ordered product.

        Per leg: (P^a Q^b f(D)) (P^c Q^d g(D)) = P^(a+c) Q^(b+d)
        f(D-c-d) g(D); terms above the truncation grade are dropped.
        """
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check_shape(other)
        N = self.truncation
        out = {}
        # group the right factor by the D-shift it induces on the left
        by_offset = {}
        for kb, db in other.terms.items():
            offsets = tuple(-(p + q) for p, q in kb)
            by_offset.setdefault(offsets, []).append((kb, db))
        for ka, da in self.terms.items():
            ga = _key_grade(ka)
            for offsets, entries in by_offset.items():
                shifted = da.shift(offsets)
                for kb, db in entries:
                    if ga + _key_grade(kb) > N:
                        continue
                    key = tuple((pa + pb, qa + qb)
                                for (pa, qa), (pb, qb) in zip(ka, kb))
                    d = shifted * db
                    s = out.get(key)
                    s = d if s is None else s + d
                    if s.is_zero:
                        out.pop(key, None)
                    else:
                        out[key] = s
        res = TensorElement(self.legs, self.truncation)
        res.terms = out
        return res

    def tensor(self, other):
        """Tensor product; legs concatenate, truncations must agree."""
        if self.truncation != other.truncation:
            raise ValueError("truncation mismatch in tensor product")
        legs = self.legs + other.legs
        if legs > MAX_LEGS:
            raise ValueError("tensor product exceeds %d legs" % MAX_LEGS)
        N = self.truncation
        res = TensorElement(legs, N)
        out = {}
        for ka, da in self.terms.items():
            ga = _key_grade(ka)
            for kb, db in other.terms.items():
                if ga + _key_grade(kb) > N:
                    continue
                d = DPoly(legs)
                dterms = {}
                for e1, c1 in da.terms.items():
                    for e2, c2 in db.terms.items():
                        dterms[e1 + e2] = c1 * c2
                d.terms = dterms
                out[ka + kb] = d
        res.terms = out
        return res

    # -- Hopf structure ----------------------------------------------------

    def coproduct(self, slot=1):
        """Apply the undeformed coproduct to the given leg.

        P and Q are primitive; D splits into a sum of two fresh variables.
        The coproduct preserves the kappa-grade.
        """
        if self.legs >= MAX_LEGS:
            raise ValueError("coproduct would exceed %d legs" % MAX_LEGS)
        if not 1 <= slot <= self.legs:
            raise ValueError("slot out of range")
        i = slot - 1
        res = TensorElement(self.legs + 1, self.truncation)
        out = {}
        for key, d in self.terms.items():
            a, b = key[i]
            dsplit = d.split_variable(slot)
            for pa in range(a + 1):
                for qb in range(b + 1):
                    c = math.comb(a, pa) * math.comb(b, qb)
                    nk = key[:i] + ((pa, qb), (a - pa, b - qb)) + key[i + 1:]
                    nd = dsplit * c
                    s = out.get(nk)
                    s = nd if s is None else s + nd
                    out[nk] = s
        res.terms = {k: v for k, v in out.items() if not v.is_zero}
        return res

    def counit_contract(self, slot=1):
        """Apply the counit to one leg (D, P, Q all map to 0)."""
        if self.legs < 2:
            raise ValueError("counit contraction needs at least two legs")
        if not 1 <= slot <= self.legs:
            raise ValueError("slot out of range")
        i = slot - 1
        res = TensorElement(self.legs - 1, self.truncation)
        out = {}
        for key, d in self.terms.items():
            if key[i] != (0, 0):
                continue
            nk = key[:i] + key[i + 1:]
            nd = DPoly(self.legs - 1)
            dterms = {}
            for exps, c in d.terms.items():
                if exps[i] != 0:
                    continue
                ne = exps[:i] + exps[i + 1:]
                s = dterms.get(ne)
                dterms[ne] = c if s is None else s + c
            nd.terms = {k: v for k, v in dterms.items() if not v.is_zero}
            if not nd.is_zero:
                s = out.get(nk)
                out[nk] = nd if s is None else s + nd
        res.terms = {k: v for k, v in out.items() if not v.is_zero}
        return res

    def counit_scalar(self):
        """Counit of a 1-leg element, as a polynomial in u."""
        if self.legs != 1:
            raise ValueError("counit_scalar needs a 1-leg element")
        d = self.terms.get(((0, 0),))
        if d is None:
            return UPoly()
        return d.terms.get((0,), UPoly())

    def antipode(self):
        """Undeformed antipode: S(P^a Q^b f(D)) = (-1)^(a+b) P^a Q^b f(-D+a+b)."""
        if self.legs != 1:
            raise ValueError("antipode acts on 1-leg elements")
        res = TensorElement(1, self.truncation)
        out = {}
        for key, d in self.terms.items():
            a, b = key[0]
            nd = d.substitute_linear([-1], [a + b])
            if (a + b) % 2:
                nd = -nd
            if not nd.is_zero:
                out[key] = nd
        res.terms = out
        return res

    def fold_mul_antipode(self, side="right"):
        """Multiply the two legs after applying S to one of them.

        side="right" computes sum f1 * S(f2), side="left" sum S(f1) * f2.
        """
        if self.legs != 2:
            raise ValueError("fold_mul_antipode needs a 2-leg element")
        if side not in ("right", "left"):
            raise ValueError("side must be 'right' or 'left'")
        N = self.truncation
        out = TensorElement.zero(1, N)
        for ((a1, b1), (a2, b2)), d in self.terms.items():
            for (e1, e2), c in d.terms.items():
                m1 = TensorElement.monomial(N, a1, b1, e1)
                m2 = TensorElement.monomial(N, a2, b2, e2)
                if side == "right":
                    prod = m1 * m2.antipode()
                else:
                    prod = m1.antipode() * m2
                out = out + prod.scale(c)
        return out

    # -- parameter handling ------------------------------------------------

    def specialize_u(self, u0):
        res = TensorElement(self.legs, self.truncation)
        out = {}
        for key, d in self.terms.items():
            nd = d.specialize_u(u0)
            if not nd.is_zero:
                out[key] = nd
        res.terms = out
        return res

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.legs == other.legs
                and self.truncation == other.truncation
                and self.terms == other.terms)

    def __hash__(self):
        raise TypeError("TensorElement is not hashable")

    def __repr__(self):
        return ("TensorElement(legs=%d, N=%d, %d terms)"
                % (self.legs, self.truncation, len(self.terms)))


def first_difference(a, b):
    """Lowest-grade monomial on which two elements differ, or None.

    Returns a dict with the grade, momentum key, D-exponents and the two
    coefficient polynomials, suitable for failure reports.
    """
    a._check_shape(b)
    diffs = []
    keys = set(a.terms) | set(b.terms)
    for key in keys:
        da = a.terms.get(key, DPoly(a.legs))
        db = b.terms.get(key, DPoly(b.legs))
        delta = da - db
        for exps in delta.terms:
            diffs.append((_key_grade(key), key, exps))
    if not diffs:
        return None
    grade, key, exps = min(diffs)
    ca = a.terms.get(key, DPoly(a.legs)).terms.get(exps, UPoly())
    cb = b.terms.get(key, DPoly(b.legs)).terms.get(exps, UPoly())
    return {
        "grade": grade,
        "momenta": key,
        "dilatation_exponents": exps,
        "left": str(ca),
        "right": str(cb),
    }


def series_apply(coeffs, a):
    """Evaluate sum_k coeffs[k] * a^k on an element of minimum grade >= 1.

    The series terminates because a^k has grade at least k; coeffs beyond
    the truncation order are never consulted.
    """
    if not a.grade_slice(0).is_zero:
        raise ValueError("series argument must have minimum grade >= 1")
    N = a.truncation
    kmax = min(len(coeffs) - 1, N)
    res = TensorElement.one(a.legs, N).scale(UPoly.coerce(coeffs[0]))
    power = TensorElement.one(a.legs, N)
    for k in range(1, kmax + 1):
        power = power * a
        if power.is_zero:
            break
        c = UPoly.coerce(coeffs[k])
        if not c.is_zero:
            res = res + power.scale(c)
    return res


def exp_series(a):
    coeffs = [Fraction(1, math.factorial(k)) for k in range(a.truncation + 1)]
    return series_apply(coeffs, a)


def log1p_series(a):
    """log(1 + a) for a of minimum grade >= 1."""
    coeffs = [Fraction(0)] + [Fraction((-1) ** (k + 1), k)
                              for k in range(1, a.truncation + 1)]
    return series_apply(coeffs, a)


def geometric_inverse(e):
    """Inverse of an element whose grade-0 part is 1, by (1+a)^-1 = sum (-a)^k."""
    one = TensorElement.one(e.legs, e.truncation)
    if e.grade_slice(0) != one:
        raise ValueError("geometric inverse needs grade-0 part equal to 1")
    a = e - one
    coeffs = [Fraction((-1) ** k) for k in range(e.truncation + 1)]
    return series_apply(coeffs, a)


def conjugate(F, X, Finv):
    """F * Delta(X) * Finv for a 2-leg twist and a 1-leg generator.

    Raises if F and Finv are not inverse to each other modulo truncation.
    """
    if F.legs != 2 or Finv.legs != 2 or X.legs != 1:
        raise ValueError("conjugate expects 2-leg twists and a 1-leg generator")
    one = TensorElement.one(2, F.truncation)
    if F * Finv != one:
        raise ValueError("conjugate: F * Finv is not the identity "
                         "modulo the truncation")
    return F * X.coproduct(1) * Finv
