"""Exact real-root machinery: Sturm chains, counting, isolation, comparison.

Every certificate produced here rests only on exact sign evaluations of
integer polynomials at rational points; there are no epsilon comparisons.
Chains use the canonical negated-remainder convention with each member
divided by its positive content, which keeps coefficient growth polynomial
without disturbing any sign.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polycore import (
    Poly,
    _prem_neg_primitive,
    derivative,
    exact_divide,
    poly_gcd,
    primitive_part,
)


class EndpointRoot(ValueError):
    """The polynomial vanishes at an interval endpoint and deflation is off."""


@dataclass(frozen=True)
class Interval:
    """Open rational interval (lo, hi)."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty interval ({self.lo}, {self.hi})")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __str__(self) -> str:
        return f"({self.lo}, {self.hi})"


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def _sign_at(int_coeffs: tuple[int, ...], x: Fraction) -> int:
    """Sign of the integer polynomial at x, via homogeneous integer Horner."""
    if not int_coeffs:
        return 0
    u, v = x.numerator, x.denominator
    acc = int_coeffs[-1]
    vp = 1
    for k in range(len(int_coeffs) - 2, -1, -1):
        vp *= v
        acc = acc * u + int_coeffs[k] * vp
    return _sign(acc)


class SturmChain:
    """Canonical Sturm chain of a nonzero polynomial.

    ``polys[0]`` is the (content-normalized) input, ``polys[1]`` its
    derivative, and each further member is the negated Euclidean remainder of
    the previous two, again content-normalized.  The last member is a nonzero
    constant exactly when the input is square-free.
    """

    __slots__ = ("polys", "_ints")

    def __init__(self, members: list[Poly]):
        self.polys: tuple[Poly, ...] = tuple(members)
        self._ints: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(c) for c in m.coeffs) for m in members
        )

    def __len__(self) -> int:
        return len(self.polys)

    def variations_at(self, x: Fraction) -> int:
        """Number of sign changes along the chain at x, zeros dropped."""
        count = 0
        prev = 0
        for ints in self._ints:
            s = _sign_at(ints, x)
            if s == 0:
                continue
            if prev and s != prev:
                count += 1
            prev = s
        return count

    def is_square_free(self) -> bool:
        return len(self.polys[-1].coeffs) == 1


@lru_cache(maxsize=4096)
def sturm_chain(p: Poly) -> SturmChain:
    if p.is_zero():
        raise ValueError("no Sturm chain for the zero polynomial")
    members = [primitive_part(p)]
    d = derivative(p)
    if not d.is_zero():
        members.append(primitive_part(d))
        while True:
            nxt = _prem_neg_primitive(
                [int(c) for c in members[-2].coeffs], [int(c) for c in members[-1].coeffs]
            )
            if not nxt:
                break
            members.append(Poly(nxt))
    return SturmChain(members)


def variations_at(chain: SturmChain, x: Fraction) -> int:
    return chain.variations_at(x)


def _deflate_at(p: Poly, x: Fraction) -> tuple[Poly, int]:
    """Divide out (t - x) as often as it divides p; returns (quotient, multiplicity)."""
    mult = 0
    while not p.is_zero() and p(x) == 0:
        p = exact_divide(p, Poly([-x, 1]))
        mult += 1
    return p, mult


def count_roots(p: Poly, a: Fraction, b: Fraction, *, deflate: bool = True) -> int:
    """Number of distinct real roots of p in the half-open interval (a, b].

    Rational roots sitting exactly at an endpoint are divided out first (the
    one at b still counts, the one at a does not); pass ``deflate=False`` to
    get an :class:`EndpointRoot` error instead.
    """
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    if p.is_zero():
        raise ValueError("root counting needs a nonzero polynomial")
    root_at_b = 0
    if p(a) == 0 or p(b) == 0:
        if not deflate:
            raise EndpointRoot(f"polynomial vanishes at an endpoint of ({a}, {b})")
        p, _ = _deflate_at(p, a)
        p, mult_b = _deflate_at(p, b)
        root_at_b = 1 if mult_b else 0
    if p.degree == 0:
        return root_at_b
    chain = sturm_chain(p)
    return chain.variations_at(a) - chain.variations_at(b) + root_at_b


@dataclass(frozen=True)
class RootBox:
    """A polynomial together with an interval certified to hold exactly one
    of its (simple) real roots: the endpoint values are nonzero with opposite
    signs and the Sturm count over the interval is one.
    """

    poly: Poly
    interval: Interval

    @property
    def lo(self) -> Fraction:
        return self.interval.lo

    @property
    def hi(self) -> Fraction:
        return self.interval.hi

    @property
    def approx(self) -> float:
        return float(self.interval.midpoint)

    def __str__(self) -> str:
        return f"RootBox{self.interval}"


def _make_box(p: Poly, lo: Fraction, hi: Fraction) -> RootBox:
    box = RootBox(p, Interval(lo, hi))
    assert _sign(p(lo).numerator) * _sign(p(hi).numerator) < 0
    return box


def _straddle_box(p: Poly, x: Fraction, radius: Fraction) -> RootBox:
    """Box around a known simple rational root x of p."""
    chain = sturm_chain(p)
    d = radius
    while True:
        lo, hi = x - d, x + d
        if p(lo) != 0 and p(hi) != 0 and chain.variations_at(lo) - chain.variations_at(hi) == 1:
            return _make_box(p, lo, hi)
        d /= 2


def rational_root_box(x: Fraction, radius: Fraction = Fraction(1, 64)) -> RootBox:
    """Box certifying the rational point x as the root of the monic linear poly."""
    x = Fraction(x)
    return _make_box(Poly([-x, 1]), x - radius, x + radius)


def _isolate(chain: SturmChain, p: Poly, a: Fraction, b: Fraction, va: int, vb: int) -> list[Interval]:
    n = va - vb
    if n == 0:
        return []
    if n == 1:
        return [Interval(a, b)]
    m = (a + b) / 2
    if p(m) == 0:
        d = (b - a) / 4
        while True:
            lo, hi = m - d, m + d
            if (
                lo > a
                and hi < b
                and p(lo) != 0
                and p(hi) != 0
                and chain.variations_at(lo) - chain.variations_at(hi) == 1
            ):
                break
            d /= 2
        vlo, vhi = chain.variations_at(lo), chain.variations_at(hi)
        return (
            _isolate(chain, p, a, lo, va, vlo)
            + [Interval(lo, hi)]
            + _isolate(chain, p, hi, b, vhi, vb)
        )
    vm = chain.variations_at(m)
    return _isolate(chain, p, a, m, va, vm) + _isolate(chain, p, m, b, vm, vb)


@lru_cache(maxsize=1024)
def isolate_roots(p: Poly, a: Fraction, b: Fraction) -> tuple[RootBox, ...]:
    """Disjoint isolating boxes, in increasing order, for the distinct roots
    of p in (a, b].  A root exactly at b gets a box straddling b.

    p must be square-free; roots at the endpoints are deflated internally so
    the Sturm argument applies, but the returned boxes always reference p.
    """
    a, b = Fraction(a), Fraction(b)
    if not sturm_chain(p).is_square_free():
        raise ValueError("isolation requires a square-free polynomial")
    q, _ = _deflate_at(p, a)
    q, mult_b = _deflate_at(q, b)
    boxes: list[RootBox] = []
    if q.degree >= 1:
        chain = sturm_chain(q)
        intervals = _isolate(chain, q, a, b, chain.variations_at(a), chain.variations_at(b))
        for iv in intervals:
            lo, hi = iv.lo, iv.hi
            # shrink until strictly inside (a, b) so p itself is nonzero at the ends
            while lo == a or hi == b:
                m = (lo + hi) / 2
                if q(m) == 0:
                    d = (hi - lo) / 4
                    while not (m - d > lo and q(m - d) != 0 and q(m + d) != 0):
                        d /= 2
                    lo, hi = m - d, m + d
                elif _sign(q(lo).numerator) == _sign(q(m).numerator):
                    lo = m
                else:
                    hi = m
            boxes.append(_make_box(p, lo, hi))
    if mult_b:
        boxes.append(_straddle_box(p, b, (b - a) / 4))
    return tuple(boxes)


def refine(box: RootBox, eps: Fraction) -> RootBox:
    """Shrink the box below width eps by sign bisection; same root contained."""
    eps = Fraction(eps)
    p = box.poly
    lo, hi = box.lo, box.hi
    slo = _sign(p(lo).numerator)
    while hi - lo >= eps:
        m = (lo + hi) / 2
        sm = _sign(p(m).numerator)
        if sm == 0:
            # the root is exactly m; wrap it tightly
            d = min(eps / 4, (hi - lo) / 4)
            while p(m - d) == 0 or p(m + d) == 0:
                d /= 2
            return _make_box(p, m - d, m + d)
        if sm == slo:
            lo = m
        else:
            hi = m
    return _make_box(p, lo, hi)


def first_root_box(p: Poly, a: Fraction, b: Fraction) -> RootBox:
    """Isolating box of the smallest root of p in the open interval (a, b).

    Cheaper than full isolation when only the leftmost root matters.
    """
    a, b = Fraction(a), Fraction(b)
    q, _ = _deflate_at(p, a)
    q, _ = _deflate_at(q, b)
    chain = sturm_chain(q)
    if not chain.is_square_free():
        raise ValueError("isolation requires a square-free polynomial")
    va, vb = chain.variations_at(a), chain.variations_at(b)
    if va - vb == 0:
        raise ValueError(f"no root in ({a}, {b})")
    while va - vb > 1:
        m = (a + b) / 2
        if q(m) == 0:
            d = (b - a) / 4
            while True:
                lo, hi = m - d, m + d
                if (
                    lo > a
                    and q(lo) != 0
                    and q(hi) != 0
                    and chain.variations_at(lo) - chain.variations_at(hi) == 1
                ):
                    break
                d /= 2
            vlo = chain.variations_at(lo)
            if va - vlo > 0:
                b, vb = lo, vlo
            else:
                return _box_strict_inside(p, q, lo, hi, a)
        else:
            vm = chain.variations_at(m)
            if va - vm > 0:
                b, vb = m, vm
            else:
                a, va = m, vm
    return _box_strict_inside(p, q, a, b, None)


def _box_strict_inside(p: Poly, q: Poly, lo: Fraction, hi: Fraction, outer_lo: Fraction | None) -> RootBox:
    if outer_lo is not None:
        while lo == outer_lo:
            m = (lo + hi) / 2
            if q(m) == 0:
                d = (hi - lo) / 4
                while not (m - d > lo and q(m - d) != 0 and q(m + d) != 0):
                    d /= 2
                lo, hi = m - d, m + d
            elif _sign(q(lo).numerator) == _sign(q(m).numerator):
                lo = m
            else:
                hi = m
    while p(lo) == 0 or p(hi) == 0:
        m = (lo + hi) / 2
        if q(m) == 0:
            d = (hi - lo) / 4
            while not (m - d > lo and q(m - d) != 0 and q(m + d) != 0):
                d /= 2
            lo, hi = m - d, m + d
        elif _sign(q(lo).numerator) == _sign(q(m).numerator):
            lo = m
        else:
            hi = m
    return _make_box(p, lo, hi)


@lru_cache(maxsize=4096)
def _gcd_cached(p: Poly, q: Poly) -> Poly:
    return poly_gcd(p, q)


LESS, EQUAL, GREATER = -1, 0, 1


def compare_roots(r1: RootBox, r2: RootBox) -> int:
    """Exact order of the two boxed roots: -1 (less), 0 (equal) or +1.

    Overlapping boxes are refined until disjoint; a genuinely shared root is
    detected through the gcd of the two polynomials, so the loop always
    terminates even when the roots coincide.
    """
    g: Poly | None = None
    while True:
        if r1.hi <= r2.lo:
            return LESS
        if r2.hi <= r1.lo:
            return GREATER
        if g is None:
            g = _gcd_cached(r1.poly, r2.poly)
        if g.degree >= 1:
            lo = max(r1.lo, r2.lo)
            hi = min(r1.hi, r2.hi)
            if lo < hi:
                if g(lo) == 0 or count_roots(g, lo, hi) >= 1:
                    return EQUAL
            elif g(lo) == 0:
                return EQUAL
        r1 = refine(r1, r1.interval.width / 2)
        r2 = refine(r2, r2.interval.width / 2)


def cauchy_root_bound(p: Poly) -> Fraction:
    """Every real root of p has absolute value below this bound."""
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    lead = abs(p.lead)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lead


def count_real_roots(p: Poly) -> int:
    """Total number of distinct real roots of p, over the whole line."""
    if p.degree == 0:
        return 0
    m = cauchy_root_bound(p)
    return count_roots(p, -m, m)
