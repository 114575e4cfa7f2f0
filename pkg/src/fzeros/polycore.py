"""Exact dense univariate polynomial arithmetic over arbitrary-precision rationals.

Every value is immutable and every operation is exact: there is no floating
point anywhere in this module.  Scalars are ``fractions.Fraction`` (re-exported
as ``Rational``), which already guarantees lowest terms and a positive
denominator; the polynomial type below is the substrate for everything else in
the package.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

Scalar = Union[int, Fraction]

#: degree of the zero polynomial
NEG_INFINITY = float("-inf")


class NonZeroRemainder(ArithmeticError):
    """An exact division left a nonzero remainder.

    Raised by :func:`exact_divide`; in this package it always signals that a
    polynomial identity somewhere upstream is broken, never a user error.
    """


class Poly:
    """Dense univariate polynomial over exact rationals.

    ``coeffs[k]`` holds the coefficient of ``t**k``.  Trailing zeros are
    trimmed on construction, so the highest stored coefficient of a nonzero
    polynomial is nonzero; the zero polynomial stores nothing and reports
    degree ``-inf``.

    >>> Poly([1, -2]) * Poly([1, -2])
    Poly('1 - 4t + 4t^2')
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def constant(c: Scalar) -> Poly:
        return Poly([c])

    @staticmethod
    def monomial(k: int, c: Scalar = 1) -> Poly:
        """c * t**k"""
        return Poly([0] * k + [c])

    # -- basic structure -------------------------------------------------------

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        """Coefficient of t**k (zero beyond the stored degree)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def is_integral(self) -> bool:
        """True if every coefficient has denominator 1."""
        return all(c.denominator == 1 for c in self.coeffs)

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other: Poly | Scalar) -> Poly:
        if not isinstance(other, Poly):
            other = Poly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other: Poly | Scalar) -> Poly:
        if not isinstance(other, Poly):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Poly:
        return Poly([other]) - self

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other: Poly | Scalar) -> Poly:
        if not isinstance(other, Poly):
            c = other if isinstance(other, Fraction) else Fraction(other)
            return Poly([c * x for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __call__(self, x: Scalar) -> Fraction:
        """Exact evaluation by Horner's rule."""
        if not isinstance(x, Fraction):
            x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- comparisons and hashing -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly('{self}')"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                term = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


ZERO = Poly()
ONE = Poly([1])
T = Poly([0, 1])


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def sub(p: Poly, q: Poly) -> Poly:
    return p - q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def scale(c: Scalar, p: Poly) -> Poly:
    return p * c


def derivative(p: Poly, n: int = 1) -> Poly:
    """n-fold formal derivative; ``derivative(p, 0)`` is ``p`` itself."""
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    cs = list(p.coeffs)
    for _ in range(n):
        cs = [k * c for k, c in enumerate(cs)][1:]
        if not cs:
            break
    return Poly(cs)


def eval_poly(p: Poly, x: Scalar) -> Fraction:
    return p(x)


def divrem(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Exact Euclidean division: p = q*quot + rem with deg(rem) < deg(q)."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p.coeffs)
    dq = len(q.coeffs) - 1
    lq = q.coeffs[-1]
    if len(r) - 1 < dq:
        return Poly(), p
    quot = [Fraction(0)] * (len(r) - dq)
    for k in range(len(r) - 1 - dq, -1, -1):
        c = r[dq + k] / lq
        if c:
            quot[k] = c
            for j, cq in enumerate(q.coeffs):
                r[j + k] -= c * cq
    return Poly(quot), Poly(r[:dq])


def exact_divide(p: Poly, q: Poly) -> Poly:
    """Quotient p/q, insisting that q divides p exactly."""
    quot, rem = divrem(p, q)
    if not rem.is_zero():
        raise NonZeroRemainder(f"{p!r} is not divisible by {q!r}; remainder {rem!r}")
    return quot


def _int_coeffs(p: Poly) -> list[int]:
    """Integer coefficient list of a positive rational multiple of p."""
    if not p.coeffs:
        return []
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in p.coeffs]


def primitive_part(p: Poly) -> Poly:
    """p divided by the positive rational content (integer coefficients, gcd 1).

    The scaling factor is always positive, so the sign pattern of the
    coefficients, and of every evaluation, is preserved.
    """
    ints = _int_coeffs(p)
    if not ints:
        return Poly()
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return Poly([c // g for c in ints])


def _prem_neg_primitive(a: list[int], b: list[int]) -> list[int]:
    """Primitive part of -rem(a, b), computed by integer pseudo-division.

    ``a`` and ``b`` are integer coefficient lists, b nonzero.  The result
    equals the negated Euclidean remainder up to a positive rational factor,
    which is all the sign-variation machinery needs.
    """
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    scalings = 0
    while len(r) - 1 >= db:
        lead = r[-1]
        dr = len(r) - 1
        r = [lb * c for c in r]
        scalings += 1
        for j in range(db + 1):
            r[j + dr - db] -= lead * b[j]
        del r[dr:]
        while r and r[-1] == 0:
            r.pop()
    # r == lb**scalings * rem(a, b); flip to -rem up to a positive factor
    if not (lb < 0 and scalings % 2 == 1):
        r = [-c for c in r]
    g = 0
    for c in r:
        g = math.gcd(g, c)
    return [c // g for c in r] if g else []


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor (Euclid with primitive normalization)."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = _int_coeffs(p), _int_coeffs(q)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _prem_neg_primitive(a, b)
    lead = Fraction(a[-1])
    return Poly([c / lead for c in a])


def is_square_free(p: Poly) -> bool:
    """True iff gcd(p, p') is constant, i.e. all roots of p are simple."""
    if p.is_zero():
        return False
    if p.degree == 0:
        return True
    return poly_gcd(p, derivative(p)).degree == 0


def compose_affine(p: Poly, a: Scalar, b: Scalar) -> Poly:
    """Exact expansion of p(a*t + b)."""
    inner = Poly([b, a])
    acc = Poly()
    for c in reversed(p.coeffs):
        acc = acc * inner + c
    return acc


def rat_str(x: Fraction) -> str:
    """Serialize a rational as ``num`` or ``num/den``."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``num/den``, integer, or decimal strings into an exact rational."""
    return Fraction(text.strip())
