"""Constructors for every named polynomial family of the finite root systems.

Face polynomials (f and f+), their h-transforms, shifted Jacobi polynomials,
Rodrigues-style derivative forms, the three-/four-term recurrence steps, the
symmetrized D-family apparatus, and the third-order ODE residual checks all
live here.  Everything is built from closed forms in exact rational
arithmetic; nothing is ever enumerated from the simplicial complexes
themselves.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polycore import ONE, Poly, T, derivative, exact_divide


class InvalidRank(ValueError):
    """Rank parameter outside the validity range of the family."""


class UnsupportedType(ValueError):
    """The requested polynomial is not constructible for this type."""


class RodriguesFormMismatch(ArithmeticError):
    """The two derivative forms of the D-series disagree (transcription bug)."""


class IdentityMismatch(ArithmeticError):
    """Two supposedly equal constructions differ (transcription bug)."""


class Family(str, enum.Enum):
    A = "A"
    B = "B"
    D = "D"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"
    F4 = "F4"
    G2 = "G2"
    H3 = "H3"
    H4 = "H4"
    I2 = "I2"


_FIXED_RANK = {
    Family.E6: 6,
    Family.E7: 7,
    Family.E8: 8,
    Family.F4: 4,
    Family.G2: 2,
    Family.H3: 3,
    Family.H4: 4,
}

_PARAM_MIN = {Family.A: 1, Family.B: 1, Family.D: 4, Family.I2: 3}


@dataclass(frozen=True)
class RootSystemType:
    """Tagged identifier of a finite irreducible root system.

    ``param`` is the rank l for the A/B/D series and the dihedral order p for
    I2(p); it must be omitted for the fixed-rank types.
    """

    family: Family
    param: int | None = None

    def __post_init__(self):
        if self.family in _PARAM_MIN:
            if self.param is None or self.param < _PARAM_MIN[self.family]:
                raise InvalidRank(
                    f"{self.family.value} requires parameter >= "
                    f"{_PARAM_MIN[self.family]}, got {self.param}"
                )
        elif self.param is not None:
            raise InvalidRank(f"{self.family.value} takes no rank parameter")

    @property
    def rank(self) -> int:
        if self.family is Family.I2:
            return 2
        if self.family in _FIXED_RANK:
            return _FIXED_RANK[self.family]
        return self.param  # type: ignore[return-value]

    @property
    def label(self) -> str:
        if self.family is Family.I2:
            return f"I2({self.param})"
        if self.param is not None:
            return f"{self.family.value}{self.param}"
        return self.family.value

    def __str__(self) -> str:
        return self.label


def A(l: int) -> RootSystemType:
    return RootSystemType(Family.A, l)


def B(l: int) -> RootSystemType:
    return RootSystemType(Family.B, l)


def D(l: int) -> RootSystemType:
    return RootSystemType(Family.D, l)


def I2(p: int) -> RootSystemType:
    return RootSystemType(Family.I2, p)


E6 = RootSystemType(Family.E6)
E7 = RootSystemType(Family.E7)
E8 = RootSystemType(Family.E8)
F4 = RootSystemType(Family.F4)
G2 = RootSystemType(Family.G2)
H3 = RootSystemType(Family.H3)
H4 = RootSystemType(Family.H4)

#: the fixed-rank exceptional and non-crystallographic types
FIXED_TYPES = (E6, E7, E8, F4, G2, H3, H4)


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


# Exact integer coefficient tables for the fixed-rank types, constant term
# first.  These are data, not derived values; every identity and root count in
# the verify module is checked against them.
_FIXED_F_COEFFS = {
    Family.E6: (1, -42, 399, -1547, 2856, -2499, 833),
    Family.E7: (1, -70, 945, -5180, 14105, -20202, 14560, -4160),
    Family.E8: (1, -128, 2408, -17936, 67488, -140448, 163856, -100320, 25080),
    Family.F4: (1, -28, 133, -210, 105),
    Family.G2: (1, -8, 8),
    Family.H3: (1, -18, 48, -32),
    Family.H4: (1, -64, 344, -560, 280),
}


@lru_cache(maxsize=None)
def _f_a(l: int) -> Poly:
    # unsigned k-th coefficient: C(l,k) * C(l+k+2, k+1) / (l+2)
    return Poly(
        [
            Fraction((-1) ** k * _binom(l, k) * _binom(l + k + 2, k + 1), l + 2)
            for k in range(l + 1)
        ]
    )


@lru_cache(maxsize=None)
def _f_b(l: int) -> Poly:
    return Poly([(-1) ** k * _binom(l, k) * _binom(l + k, k) for k in range(l + 1)])


@lru_cache(maxsize=None)
def _f_d(l: int) -> Poly:
    return Poly(
        [
            (-1) ** k
            * (_binom(l, k) * _binom(l + k - 1, k) + _binom(l - 2, k - 2) * _binom(l + k - 2, k))
            for k in range(l + 1)
        ]
    )


def f_poly(P: RootSystemType) -> Poly:
    """Face polynomial of the full cluster complex of type P.

    Degree equals the rank, the constant term is 1, and the coefficient signs
    alternate (the unsigned coefficients are the face counts).
    """
    fam = P.family
    if fam is Family.A:
        return _f_a(P.param)
    if fam is Family.B:
        return _f_b(P.param)
    if fam is Family.D:
        return _f_d(P.param)
    if fam is Family.I2:
        p = P.param
        return Poly([1, -(p + 2), p + 2])
    return Poly(_FIXED_F_COEFFS[fam])


@lru_cache(maxsize=None)
def _fplus(fam: Family, l: int) -> Poly:
    if fam is Family.A:
        return Poly([1, -1]) * (_f_a(l - 1) if l >= 2 else ONE)
    if fam is Family.B:
        return (_f_b(l) + _f_b(l - 1)) * Fraction(1, 2)
    # D series: rational combination of two B-face polynomials
    lin = Poly([-2, l])
    quad = Poly([2 * l, -5 * l, 2 * (2 * l - 1)])
    total = lin * _f_b(l) + quad * _f_b(l - 1)
    return total * Fraction(1, 2 * (l - 1))


def fplus_poly(P: RootSystemType) -> Poly:
    """Face polynomial of the positive part of the complex (A, B, D only).

    The result always has integer coefficients, constant term 1 and a simple
    root at t = 1.  The remaining fixed-rank types have no published
    coefficient data, so asking for them is an error rather than a guess.
    """
    if P.family not in (Family.A, Family.B, Family.D):
        raise UnsupportedType(f"positive-part polynomial unavailable for {P}")
    return _fplus(P.family, P.param)


def fplus_poly_a_closed(l: int) -> Poly:
    """Independent binomial closed form for the positive-part A polynomial."""
    return Poly(
        [Fraction((-1) ** k * _binom(l, k) * _binom(l + k, k + 1), l) for k in range(l + 1)]
    )


def fplus_poly_b_closed(l: int) -> Poly:
    """Independent binomial closed form for the positive-part B polynomial."""
    return Poly([(-1) ** k * _binom(l, k) * _binom(l + k - 1, k) for k in range(l + 1)])


def f_vector(P: RootSystemType) -> tuple[int, ...]:
    """Unsigned face counts (f_-1, f_0, ..., f_(rank-1)); f_-1 is always 1."""
    f = f_poly(P)
    counts = []
    for k, c in enumerate(f.coeffs):
        u = (-1) ** k * c
        if u.denominator != 1 or u <= 0:
            raise IdentityMismatch(f"face count {k} of {P} is not a positive integer: {c}")
        counts.append(int(u))
    return tuple(counts)


def h_poly(P: RootSystemType) -> Poly:
    """h-transform of the face vector.

    Defined by matching coefficients in
    ``sum_i f_(i-1) (x-1)^(l-i) = sum_i h_i x^(l-i)``; the h_i are returned as
    the ascending coefficients of a polynomial in t.
    """
    counts = f_vector(P)
    l = P.rank
    lhs = Poly()
    xm1 = Poly([-1, 1])
    for i, fi in enumerate(counts):
        lhs = lhs + fi * xm1 ** (l - i)
    # coefficient of x^(l-i) is h_i
    return Poly([lhs[l - i] for i in range(l + 1)])


def jacobi_shifted(l: int, alpha: int, beta: int) -> Poly:
    """Shifted Jacobi polynomial on [0, 1] of degree l.

    Computed from the derivative formula
    ``(t-1)^a t^b P(t) = (1/l!) d^l/dt^l [ (t-1)^(l+a) t^(l+b) ]``
    with the prefactor divided out exactly.
    """
    if l < 0 or alpha < 0 or beta < 0:
        raise ValueError("l, alpha, beta must be nonnegative")
    base = Poly([-1, 1]) ** (l + alpha) * T ** (l + beta)
    num = derivative(base, l) * Fraction(1, math.factorial(l))
    return exact_divide(num, Poly([-1, 1]) ** alpha * T**beta)


@lru_cache(maxsize=None)
def rodrigues_f(P: RootSystemType) -> Poly:
    """Face polynomial rebuilt through its derivative (Rodrigues-style) form.

    For the D series both printed variants are evaluated and cross-checked;
    a mismatch means a transcription bug, not a math failure.
    """
    fam, l = P.family, P.param
    if fam is Family.A:
        base = T ** (l + 1) * Poly([1, -1]) ** (l + 1)
        num = derivative(base, l) * Fraction(1, math.factorial(l + 1))
        return exact_divide(num, T * Poly([1, -1]))
    if fam is Family.B:
        if l < 2:
            raise InvalidRank("derivative form of the B series needs rank >= 2")
        base = T**l * Poly([1, -1]) ** l
        return derivative(base, l) * Fraction(1, math.factorial(l))
    if fam is Family.D:
        term1 = derivative(T ** (l - 1) * Poly([1, -1]) ** l, l - 1) * Fraction(
            1, math.factorial(l - 1)
        )
        term2 = derivative(T**l * Poly([1, -1]) ** (l - 2), l - 2) * Fraction(
            1, math.factorial(l - 2)
        )
        two_term = term1 + term2
        inner = T ** (l - 2) * Poly([1, -1]) ** (l - 2) * Poly([l - 1, -(3 * l - 2), 3 * l - 2])
        one_term = derivative(inner, l - 2) * Fraction(1, math.factorial(l - 1))
        if two_term != one_term:
            raise RodriguesFormMismatch(f"derivative forms for {P} disagree")
        return one_term
    raise UnsupportedType(f"no derivative form for {P}")


def a_recurrence_step(l: int, f_l: Poly, f_lp1: Poly) -> Poly:
    """Three-term step for the A series: inputs at ranks l, l+1, output l+2."""
    if l < 1:
        raise InvalidRank("A-series recurrence needs l >= 1")
    return ((2 * l + 5) * Poly([1, -2]) * f_lp1 - (l + 1) * f_l) * Fraction(1, l + 4)


def b_recurrence_step(l: int, f_l: Poly, f_lp1: Poly) -> Poly:
    """Three-term step for the B series: inputs at ranks l, l+1, output l+2."""
    if l < 1:
        raise InvalidRank("B-series recurrence needs l >= 1")
    return ((2 * l + 3) * Poly([1, -2]) * f_lp1 - (l + 1) * f_l) * Fraction(1, l + 2)


def d_recurrence_coeffs(l: int) -> tuple[Fraction, ...]:
    """The seven rational coefficients of the four-term D-series recurrence."""
    den3 = (l - 1) * (l + 3) * (5 * l + 4)
    den2 = (l + 3) * (5 * l + 4)
    a_c = Fraction((l + 1) * (5 * l * l + 4 * l - 21), den3)
    b_c = -2 * a_c
    c_c = Fraction(l * (5 * l * l + 14 * l + 5), den3)
    d_c = Fraction(-4 * l * (2 * l + 1) * (5 * l + 9), den3)
    e_c = -d_c
    f_c = Fraction(-(l + 1) * (5 * l + 9), den2)
    g_c = -2 * f_c
    return a_c, b_c, c_c, d_c, e_c, f_c, g_c


def d_recurrence_step(l: int, f_l: Poly, f_lp1: Poly, f_lp2: Poly) -> Poly:
    """Four-term step for the D series: inputs at ranks l..l+2, output l+3."""
    if l < 4:
        raise InvalidRank("D-series recurrence needs l >= 4")
    a_c, b_c, c_c, d_c, e_c, f_c, g_c = d_recurrence_coeffs(l)
    return (
        Poly([a_c, b_c]) * f_lp2
        + Poly([c_c, d_c, e_c]) * f_lp1
        + Poly([f_c, g_c]) * f_l
    )


# -- derivatives of powers of the weight kernel t(t-1) ------------------------

_W = Poly([0, -1, 1])  # t(t-1)


@lru_cache(maxsize=None)
def weight_power_deriv(k: int, order: int) -> Poly:
    """order-fold derivative of (t(t-1))**k."""
    if k < 0 or order < 0:
        raise ValueError("k and order must be nonnegative")
    if order == 0:
        return _W**k
    return derivative(weight_power_deriv(k, order - 1), 1)


def weight_power_deriv_expanded(k: int, order: int) -> Poly:
    """Same derivative via the binomial double-sum expansion.

    Terms whose factorial argument would be negative vanish, which is the
    usual reciprocal-factorial convention.
    """
    if not 0 <= order <= 2 * k:
        raise ValueError("expansion is stated for 0 <= order <= 2k")
    w = _W
    s = Poly([-1, 2])  # 2t - 1
    out = Poly()
    kf = math.factorial(k)
    of = math.factorial(order)
    if order % 2 == 1:
        i = (order + 1) // 2
        for j in range(1, i + 1):
            e = k - i - j + 1
            if e < 0:
                continue
            c = Fraction(kf * of, math.factorial(i - j) * math.factorial(2 * j - 1) * math.factorial(e))
            out = out + c * w**e * s ** (2 * j - 1)
    else:
        i = order // 2
        for j in range(0, i + 1):
            e = k - i - j
            if e < 0:
                continue
            c = Fraction(kf * of, math.factorial(i - j) * math.factorial(2 * j) * math.factorial(e))
            out = out + c * w**e * s ** (2 * j)
    return out


def weight_power_deriv_at_half(k: int, order: int) -> Fraction:
    """Closed-form value of the derivative at t = 1/2.

    Odd orders always vanish there; even orders 2j give
    ``(-1/4)**(k-j) * k! (2j)! / ((k-j)! j!)``.
    """
    if order % 2 == 1 or order > 2 * k:
        return Fraction(0)
    j = order // 2
    return (
        Fraction(-1, 4) ** (k - j)
        * Fraction(math.factorial(k) * math.factorial(2 * j), math.factorial(k - j) * math.factorial(j))
    )


def weight_power_deriv_at_zero(k: int, order: int) -> Fraction:
    """Closed-form value at t = 0 for orders up to k: 0 below, (-1)**k k! at k."""
    if order > k:
        raise ValueError("closed form at zero only stated for order <= k")
    if order < k:
        return Fraction(0)
    return Fraction((-1) ** k * math.factorial(k))


# -- the symmetrized D-series apparatus ---------------------------------------


@lru_cache(maxsize=None)
def d_kernel(l: int) -> Poly:
    """Kernel whose high-order derivatives generate the positive-part and
    symmetrized D-family polynomials: ``(t^2-t)^(l-3) * quadratic``.
    """
    if l < 5:
        raise InvalidRank("the D kernel apparatus needs rank >= 5")
    return _W ** (l - 3) * Poly([l - 2, -(3 * l - 4), 3 * l - 4])


@lru_cache(maxsize=None)
def d_kernel_deriv(l: int, order: int) -> Poly:
    return derivative(d_kernel(l), order)


def fplus_d_from_kernel(l: int) -> Poly:
    """Positive-part D polynomial rebuilt from the kernel derivatives."""
    sign = Fraction((-1) ** (l - 3), math.factorial(l - 2))
    return sign * (
        Poly([1, -1]) * d_kernel_deriv(l, l - 3) - (l - 3) * d_kernel_deriv(l, l - 4)
    )


def fplus_d_rodrigues(l: int) -> Poly:
    """Positive-part D polynomial via its own derivative form."""
    inner = T ** (l - 3) * Poly([1, -1]) ** (l - 2) * Poly([l - 2, -(3 * l - 4), 3 * l - 4])
    return derivative(inner, l - 3) * Fraction(1, math.factorial(l - 2))


def symmetrized_d_from_kernel(l: int) -> Poly:
    """Symmetrized D polynomial straight from its kernel definition."""
    sign = Fraction((-1) ** (l - 3), math.factorial(l - 2))
    return sign * (
        Poly([1, -2]) * d_kernel_deriv(l, l - 3) - 2 * (l - 3) * d_kernel_deriv(l, l - 4)
    )


@lru_cache(maxsize=None)
def symmetrized_d_poly(l: int) -> Poly:
    """Symmetrized variant of the D face polynomial.

    Built two independent ways, via its derivative form and as the rational
    combination ``(l+2)/l * f_D - 2/l * f_B``; the two must agree exactly.
    """
    if l < 5:
        raise InvalidRank("symmetrized D polynomial needs rank >= 5")
    inner = (
        T ** (l - 3)
        * Poly([1, -1]) ** (l - 3)
        * Poly([1, -2])
        * Poly([l - 2, -(3 * l - 4), 3 * l - 4])
    )
    via_rodrigues = derivative(inner, l - 3) * Fraction(1, math.factorial(l - 2))
    via_combination = Fraction(l + 2, l) * _f_d(l) - Fraction(2, l) * _f_b(l)
    if via_rodrigues != via_combination:
        raise IdentityMismatch(f"symmetrized D constructions disagree at l={l}")
    return via_rodrigues


@lru_cache(maxsize=None)
def d_difference_poly(l: int) -> Poly:
    """Difference between the positive-part and symmetrized D polynomials.

    Constructed from the kernel derivatives and cross-checked against the
    direct difference; it vanishes at t = 0 with slope l - 2.
    """
    if l < 5:
        raise InvalidRank("difference polynomial needs rank >= 5")
    sign = Fraction((-1) ** (l - 3), math.factorial(l - 2))
    from_kernel = sign * (T * d_kernel_deriv(l, l - 3) + (l - 3) * d_kernel_deriv(l, l - 4))
    direct = _fplus(Family.D, l) - symmetrized_d_poly(l)
    if from_kernel != direct:
        raise IdentityMismatch(f"difference-polynomial constructions disagree at l={l}")
    return from_kernel


# -- third-order ODE residuals -------------------------------------------------


def ode_residual_d(l: int) -> Poly:
    """Residual of the D face polynomial in its third-order Fuchsian ODE.

    The contract is that the residual is identically zero for every l >= 4.
    """
    if l < 4:
        raise InvalidRank("the D-series ODE needs rank >= 4")
    y = _f_d(l)
    y1, y2, y3 = derivative(y, 1), derivative(y, 2), derivative(y, 3)
    out = T * Poly([-1, 1]) * Poly([-1, 2]) * y3
    out = out + ((l + 6) * _W + 2) * y2
    out = out - l * (l - 1) * Poly([-1, 2]) * y1
    return out - l * (l - 1) * (l + 2) * y


def ode_residual_d_plus_reduced(l: int) -> Poly:
    """Residual of (positive-part D polynomial)/(1-t) in its third-order ODE."""
    if l < 4:
        raise InvalidRank("the reduced positive-part ODE needs rank >= 4")
    y = exact_divide(_fplus(Family.D, l), Poly([1, -1]))
    y1, y2, y3 = derivative(y, 1), derivative(y, 2), derivative(y, 3)
    out = T * Poly([-1, 1]) * Poly([-l, 2 * (l - 1)]) * y3
    out = out + Poly([2 * l, -(l * l + 6 * l - 2), (l + 8) * (l - 1)]) * y2
    out = out - Poly([-(l**3 - 2 * l * l - l - 2), (l - 1) * (2 * l * l - 5 * l - 2)]) * y1
    return out - (l - 1) ** 3 * (l + 2) * y


# -- reflection group invariants ----------------------------------------------


@dataclass(frozen=True)
class CoxeterData:
    """Exponents, Coxeter number and group order of a finite reflection group."""

    exponents: tuple[int, ...]
    coxeter_number: int
    group_order: int


def coxeter_data(P: RootSystemType) -> CoxeterData:
    """Closed-form reflection group data (A, B, D series and I2 only)."""
    fam, l = P.family, P.param
    if fam is Family.A:
        return CoxeterData(tuple(range(1, l + 1)), l + 1, math.factorial(l + 1))
    if fam is Family.B:
        return CoxeterData(
            tuple(range(1, 2 * l, 2)), 2 * l, 2**l * math.factorial(l)
        )
    if fam is Family.D:
        exps = tuple(sorted(list(range(1, 2 * l - 2, 2)) + [l - 1]))
        return CoxeterData(exps, 2 * l - 2, 2 ** (l - 1) * math.factorial(l))
    if fam is Family.I2:
        return CoxeterData((1, l - 1), l, 2 * l)
    raise UnsupportedType(f"no closed-form reflection data stored for {P}")


def derivative_at_one_formula(P: RootSystemType) -> Fraction:
    """Product formula for the derivative of the positive-part polynomial at 1.

    ``(-1)**l / |W| * (l*h) * prod_(i>=2) (e_i - 1)`` with the exponents in
    increasing order (the first exponent is always 1 and is skipped).
    """
    data = coxeter_data(P)
    l = P.rank
    prod = 1
    for e in data.exponents[1:]:
        prod *= e - 1
    return Fraction((-1) ** l * l * data.coxeter_number * prod, data.group_order)
