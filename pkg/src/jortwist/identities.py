"""Exact verification of the binomial identities behind the twist expansions.

Everything here lives in the commutative world: polynomials in x, y (and z
for the three-leg identity) with rational coefficients.  Each identity is
checked twice: as a canonical polynomial equality and, as a guard against
transcription slips, by evaluation at random integer points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import DPoly, UPoly, binom_poly, int_binom
from .report import VerificationReport

DEFAULT_BOUND_BIG = 4    # four-parameter identities
DEFAULT_BOUND_CHAIN = 4  # left-family chain
DEFAULT_BOUND_RCHAIN = 3
SAMPLE_COUNT = 20
SAMPLE_SEED = 20201214


@dataclass
class IdentityInstance:
    chain: str
    params: dict
    lhs: DPoly
    rhs: DPoly
    equal: bool


def _sample_check(lhs, rhs, rng):
    for _ in range(SAMPLE_COUNT):
        point = [Fraction(rng.randint(-10, 10)) for _ in range(lhs.legs)]
        if lhs.evaluate(point) != rhs.evaluate(point):
            return False
    return True


def _instance(chain, params, lhs, rhs):
    rng = random.Random(SAMPLE_SEED)
    equal = lhs == rhs and _sample_check(lhs, rhs, rng)
    return IdentityInstance(chain, params, lhs, rhs, equal)


# ---------------------------------------------------------------------------
# three-leg identity reducing the 2-cocycle condition
# ---------------------------------------------------------------------------

def verify_bigident(k, l, A, C):
    """The x,y,z identity the cocycle condition reduces to, at fixed k,l,A,C:

    binom(x, l-C) sum_{k1=0}^{A} binom(y,k1) binom(x+y-k1+C-l, C)
                  binom(k-k1, k-A) binom(z, k-k1)
      = binom(z, k-A) sum_{l1=0}^{C} binom(x, l-l1) binom(y,l1)
                  binom(y+z-l1+A-k, A) binom(l-l1, l-C).
    """
    if not (0 <= A <= k and 0 <= C <= l):
        raise ValueError("need 0 <= A <= k and 0 <= C <= l")
    x = DPoly.variable(3, 1)
    y = DPoly.variable(3, 2)
    z = DPoly.variable(3, 3)
    lhs = DPoly(3)
    for k1 in range(A + 1):
        lhs = lhs + (binom_poly(y, k1)
                     * binom_poly(x + y - k1 + C - l, C)
                     * int_binom(k - k1, k - A)
                     * binom_poly(z, k - k1))
    lhs = binom_poly(x, l - C) * lhs
    rhs = DPoly(3)
    for l1 in range(C + 1):
        rhs = rhs + (binom_poly(x, l - l1)
                     * binom_poly(y, l1)
                     * binom_poly(y + z - l1 + A - k, A)
                     * int_binom(l - l1, l - C))
    rhs = binom_poly(z, k - A) * rhs
    return _instance("bigident", {"k": k, "l": l, "A": A, "C": C}, lhs, rhs)


def verify_bigident_index_swap(k, l, A, C):
    """The same identity after k1 -> A-k1, l1 -> C-l1 in the two sums.

    A mechanical reindexing must not change either side; this checks that
    the summation really is insensitive to the interchange of indices.
    """
    if not (0 <= A <= k and 0 <= C <= l):
        raise ValueError("need 0 <= A <= k and 0 <= C <= l")
    x = DPoly.variable(3, 1)
    y = DPoly.variable(3, 2)
    z = DPoly.variable(3, 3)
    lhs = DPoly(3)
    for k1 in range(A + 1):
        j = A - k1
        lhs = lhs + (binom_poly(y, j)
                     * binom_poly(x + y - j + C - l, C)
                     * int_binom(k - j, k - A)
                     * binom_poly(z, k - j))
    lhs = binom_poly(x, l - C) * lhs
    rhs = DPoly(3)
    for l1 in range(C + 1):
        j = C - l1
        rhs = rhs + (binom_poly(x, l - j)
                     * binom_poly(y, j)
                     * binom_poly(y + z - j + A - k, A)
                     * int_binom(l - j, l - C))
    rhs = binom_poly(z, k - A) * rhs
    return _instance("bigident-swap", {"k": k, "l": l, "A": A, "C": C}, lhs, rhs)


def run_bigident_suite(bound=DEFAULT_BOUND_BIG):
    reports = []
    passed = True
    failure = None
    for k in range(bound + 1):
        for l in range(bound + 1):
            for A in range(k + 1):
                for C in range(l + 1):
                    inst = verify_bigident(k, l, A, C)
                    swap = verify_bigident_index_swap(k, l, A, C)
                    ok = inst.equal and swap.equal
                    if not ok and failure is None:
                        failure = {"params": inst.params}
                    passed = passed and ok
    return VerificationReport("bigident", {"bound": bound}, passed,
                              failure=failure)


# ---------------------------------------------------------------------------
# left-family chain of two-leg identities
# ---------------------------------------------------------------------------

def _chain_L_instances(bound):
    """Every identity of the left-family derivation chain, in x and y."""
    x = DPoly.variable(2, 1)
    y = DPoly.variable(2, 2)
    B = bound
    out = []

    # reflection on the second leg, with l = l1 + l2
    for l1 in range(B + 1):
        for l2 in range(B + 1):
            l = l1 + l2
            lhs = binom_poly(y - 1 - l2, l1)
            rhs = binom_poly(-y + l, l1) * Fraction((-1) ** l1)
            out.append(_instance("L1", {"l1": l1, "l2": l2}, lhs, rhs))

    # reflection of the joint binomial
    for k2 in range(B + 1):
        for l2 in range(B + 1):
            m = k2 + l2
            lhs = binom_poly(x + y - 1, m)
            rhs = binom_poly(-x - y + m, m) * Fraction((-1) ** m)
            out.append(_instance("L2", {"k2": k2, "l2": l2}, lhs, rhs))

    # trinomial revision absorbing the integer binomial
    for k2 in range(B + 1):
        for l2 in range(B + 1):
            m = k2 + l2
            T = -x - y + m
            lhs = binom_poly(T, m) * int_binom(m, k2)
            rhs = binom_poly(T, k2) * binom_poly(-x - y + l2, l2)
            out.append(_instance("L3", {"k2": k2, "l2": l2}, lhs, rhs))

    # Vandermonde-type convolution over k1 + k2 = k - k'
    for k in range(B + 1):
        for kp in range(k + 1):
            for l2 in range(B + 1):
                conv = DPoly(2)
                conv_reflected = DPoly(2)
                for k1 in range(k - kp + 1):
                    k2 = k - kp - k1
                    conv = conv + (binom_poly(x - 1 - k + k1, k1)
                                   * binom_poly(-x - y + k2 + l2, k - kp - k1))
                    conv_reflected = conv_reflected + (
                        binom_poly(-x + k, k1)
                        * binom_poly(-x - y + k2 + l2, k - kp - k1)
                        * Fraction((-1) ** k1))
                closed = binom_poly(-y - kp + l2, k - kp)
                out.append(_instance("L4", {"k": k, "k'": kp, "l2": l2},
                                     conv, closed))
                out.append(_instance("L4r", {"k": k, "k'": kp, "l2": l2},
                                     conv, conv_reflected))

    # second-leg trinomial revision, l = l1 + l2
    for kp in range(B + 1):
        for l1 in range(B + 1):
            for l2 in range(B + 1):
                l = l1 + l2
                lhs = binom_poly(-y + l, l1) * binom_poly(-y + l2, kp)
                rhs = binom_poly(-y + l, kp) * binom_poly(-y + l - kp, l1)
                out.append(_instance("L5", {"k'": kp, "l1": l1, "l2": l2},
                                     lhs, rhs))

    # exchange of the two lower indices
    for k in range(B + 1):
        for kp in range(k + 1):
            for l1 in range(B + 1):
                for l2 in range(B + 1):
                    l = l1 + l2
                    lhs = (binom_poly(-y - kp + l2, k - kp)
                           * binom_poly(-y + l - kp, l1))
                    rhs = (binom_poly(-y + l - kp, k - kp)
                           * binom_poly(-y + l - k, l1))
                    out.append(_instance(
                        "L6", {"k": k, "k'": kp, "l1": l1, "l2": l2}, lhs, rhs))

    # alternating convolution over l1 + l2 = l, eliminating y
    for k in range(B + 1):
        for l in range(B + 1):
            conv = DPoly(2)
            for l1 in range(l + 1):
                l2 = l - l1
                conv = conv + (binom_poly(-y + l - k, l1)
                               * binom_poly(-x - y + l2, l2)
                               * Fraction((-1) ** l1))
            out.append(_instance("L7", {"k": k, "l": l},
                                 conv, binom_poly(-x + k, l)))

    # final regrouping into the integer binomial
    for k in range(B + 1):
        for kp in range(k + 1):
            for l in range(B + 1):
                lhs = (binom_poly(-y + l - kp, k - kp)
                       * binom_poly(-y + l, kp))
                rhs = binom_poly(-y + l, k) * int_binom(k, kp)
                out.append(_instance("L8", {"k": k, "k'": kp, "l": l},
                                     lhs, rhs))
    return out


def _chain_R_instances(bound):
    """End-to-end equality of the right-family summation chain.

    The intermediate printed steps use notation that does not transcribe
    unambiguously; only first expression = last expression is checked:

    sum over k1+k2=k-k', l1+l2=l of
      (-1)^(k1+l1) binom(x,k1) binom(y,l1) binom(y-l1,k')
      binom(x+y-(k'+k1+l1), k2+l2) binom(k2+l2,k2)
    = binom(k,k') binom(x,l) binom(y,k).
    """
    x = DPoly.variable(2, 1)
    y = DPoly.variable(2, 2)
    out = []
    for k in range(bound + 1):
        for l in range(bound + 1):
            for kp in range(k + 1):
                total = DPoly(2)
                for k1 in range(k - kp + 1):
                    k2 = k - kp - k1
                    for l1 in range(l + 1):
                        l2 = l - l1
                        total = total + (
                            binom_poly(x, k1)
                            * binom_poly(y, l1)
                            * binom_poly(y - l1, kp)
                            * binom_poly(x + y - (kp + k1 + l1), k2 + l2)
                            * int_binom(k2 + l2, k2)
                            * Fraction((-1) ** (k1 + l1)))
                closed = (binom_poly(x, l) * binom_poly(y, k)
                          * int_binom(k, kp))
                out.append(_instance("R", {"k": k, "l": l, "k'": kp},
                                     total, closed))
    return out


def verify_identity_chain(chain, bound=None):
    """Run a full identity chain; returns a single report."""
    if chain == "L":
        instances = _chain_L_instances(
            DEFAULT_BOUND_CHAIN if bound is None else bound)
    elif chain == "R":
        instances = _chain_R_instances(
            DEFAULT_BOUND_RCHAIN if bound is None else bound)
    else:
        raise ValueError("chain must be 'L' or 'R'")
    failure = None
    for inst in instances:
        if not inst.equal and failure is None:
            failure = {"chain": inst.chain, "params": inst.params,
                       "left": str(inst.lhs), "right": str(inst.rhs)}
    return VerificationReport("chain-%s" % chain, {"bound": bound},
                              failure is None, failure=failure,
                              notes=["%d instances checked" % len(instances)])


# ---------------------------------------------------------------------------
# linear independence of (u-1)^k u^(n-k)
# ---------------------------------------------------------------------------

def independence_matrix(n):
    """Rows: coefficients of (u-1)^k u^(n-k) in the basis u^n, ..., u, 1."""
    rows = []
    u = UPoly.u()
    for k in range(n + 1):
        p = (u - 1) ** k * u ** (n - k)
        rows.append([p.coeffs.get(n - m, Fraction(0)) for m in range(n + 1)])
    return rows


def independence_det(n):
    """Exact determinant of the change-of-basis matrix; |det| must be 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = [row[:] for row in independence_matrix(n)]
    size = n + 1
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, size):
            if m[r][col]:
                factor = m[r][col] * inv
                for c in range(col, size):
                    m[r][c] -= factor * m[col][c]
    if abs(det) != 1:
        raise AssertionError("independence determinant has |det| != 1: %s" % det)
    return det
