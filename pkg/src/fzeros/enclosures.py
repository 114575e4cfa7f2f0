"""Certified rational enclosures of pi and of cosines of rational multiples of pi.

Used only to turn the trigonometric root brackets of the B series into exact
rational interval containments.  Bounds come from alternating series (Machin's
arctangent formula) and Taylor polynomials with the Lagrange remainder, so
every returned pair (lo, hi) is a mathematically rigorous enclosure.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


def round_down(x: Fraction, bits: int = 128) -> Fraction:
    """Largest dyadic rational with denominator 2**bits that is <= x."""
    return Fraction(math.floor(x * 2**bits), 2**bits)


def round_up(x: Fraction, bits: int = 128) -> Fraction:
    """Smallest dyadic rational with denominator 2**bits that is >= x."""
    return Fraction(math.ceil(x * 2**bits), 2**bits)


def _atan_bounds(x: Fraction, terms: int) -> tuple[Fraction, Fraction]:
    """Bracket atan(x) for 0 < x <= 1 by consecutive alternating partial sums."""
    s = Fraction(0)
    xk = x
    x2 = x * x
    last_term = None
    for k in range(terms):
        term = xk / (2 * k + 1)
        s += term if k % 2 == 0 else -term
        xk *= x2
        last_term = xk / (2 * k + 3)
    # partial sum errs by at most the next term, on the side of its sign
    if terms % 2 == 0:
        return s, s + last_term
    return s - last_term, s


@lru_cache(maxsize=None)
def pi_bounds(terms: int = 30) -> tuple[Fraction, Fraction]:
    """Rational lo < pi < hi via 16*atan(1/5) - 4*atan(1/239).

    The bounds are widened onto a dyadic grid so that downstream expressions
    stay small; the enclosure remains rigorous.
    """
    a_lo, a_hi = _atan_bounds(Fraction(1, 5), terms)
    b_lo, b_hi = _atan_bounds(Fraction(1, 239), terms)
    return round_down(16 * a_lo - 4 * b_hi, 256), round_up(16 * a_hi - 4 * b_lo, 256)


def _cos_point_bounds(x: Fraction, terms: int) -> tuple[Fraction, Fraction]:
    """Taylor enclosure of cos(x); remainder bounded by |x|^(2n)/(2n)!."""
    s = Fraction(0)
    x2 = x * x
    p = Fraction(1)
    for k in range(terms):
        s += p if k % 2 == 0 else -p
        p = p * x2 / ((2 * k + 1) * (2 * k + 2))
    # p is now |x|^(2*terms)/(2*terms)!, a valid Lagrange bound
    return s - p, s + p


def cos_pi_multiple_bounds(q: Fraction, terms: int = 14) -> tuple[Fraction, Fraction]:
    """Certified enclosure of cos(q*pi) for rational 0 <= q < 1.

    Relies on cos being decreasing on [0, pi]; the enclosure of q*pi must stay
    inside that range, which is asserted against the pi bounds themselves.
    The result is widened onto a dyadic grid to keep the rationals compact.
    """
    q = Fraction(q)
    if not 0 <= q < 1:
        raise ValueError("need 0 <= q < 1")
    pi_lo, pi_hi = pi_bounds(max(terms, 24))
    x_lo = round_down(q * pi_lo, 192)
    x_hi = round_up(q * pi_hi, 192)
    if x_hi > pi_lo:
        raise ValueError("angle enclosure leaves the monotone range of cos")
    if x_lo < 0:
        x_lo = Fraction(0)
    c_hi = _cos_point_bounds(x_lo, terms)[1]
    c_lo = _cos_point_bounds(x_hi, terms)[0]
    return round_down(c_lo), round_up(c_hi)


def acceptance_smoke() -> bool:
    """Cheap internal consistency check used by tests."""
    lo, hi = pi_bounds()
    return (
        Fraction(3141592653589793, 10**15) < lo < hi < Fraction(3141592653589794, 10**15)
        and hi - lo < Fraction(1, 10**30)
    )
