"""Certification operations: each one checks a family of exact claims about
the face polynomials and returns a structured :class:`Report`.

All root-location conclusions rest on exact sign evaluations, Sturm counts
and gcd equality tests from :mod:`fzeros.sturm`; identity checks reduce both
sides to coefficients and demand the difference be the zero polynomial.
A failing report always carries a witness naming the offending instance.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import catalog
from .catalog import (
    A,
    B,
    D,
    FIXED_TYPES,
    E7,
    H3,
    I2,
    RootSystemType,
    coxeter_data,
    d_difference_poly,
    d_kernel_deriv,
    derivative_at_one_formula,
    f_poly,
    fplus_poly,
    fplus_poly_a_closed,
    fplus_poly_b_closed,
    fplus_d_from_kernel,
    fplus_d_rodrigues,
    h_poly,
    jacobi_shifted,
    symmetrized_d_from_kernel,
    symmetrized_d_poly,
    weight_power_deriv,
    weight_power_deriv_at_half,
    weight_power_deriv_at_zero,
    weight_power_deriv_expanded,
)
from .enclosures import cos_pi_multiple_bounds
from .polycore import Poly, compose_affine, derivative, divrem, exact_divide, rat_str
from .sturm import (
    EQUAL,
    GREATER,
    LESS,
    RootBox,
    compare_roots,
    count_real_roots,
    count_roots,
    first_root_box,
    isolate_roots,
    rational_root_box,
    refine,
    sturm_chain,
)

HALF = Fraction(1, 2)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class Report:
    """Outcome of one verification operation."""

    check: str
    params: dict
    status: str
    witnesses: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status in (PASS, SKIPPED)

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": dict(self.params),
            "status": self.status,
            "witnesses": [dict(w) for w in self.witnesses],
        }

    @staticmethod
    def from_dict(d: dict) -> "Report":
        return Report(d["check"], dict(d["params"]), d["status"], [dict(w) for w in d["witnesses"]])


def _witness(label: str, value) -> dict:
    if isinstance(value, Fraction):
        value = rat_str(value)
    elif isinstance(value, RootBox):
        value = f"({rat_str(value.lo)}, {rat_str(value.hi)})"
    elif isinstance(value, Poly):
        value = _poly_digest(value)
    return {"label": label, "value": str(value)}


def _poly_digest(p: Poly, head: int = 6) -> str:
    cs = [rat_str(c) for c in p.coeffs[:head]]
    tail = " ..." if len(p.coeffs) > head else ""
    return f"deg={p.degree}; coeffs=[{', '.join(cs)}{tail}]"


class _Checker:
    """Collects named boolean checks into a single report."""

    def __init__(self, check: str, params: dict):
        self.check = check
        self.params = params
        self.count = 0
        self.failures: list[dict] = []

    def expect(self, ok: bool, label: str, detail="") -> bool:
        self.count += 1
        if not ok:
            self.failures.append(_witness(label, detail if detail != "" else "failed"))
        return ok

    def report(self, extra: list[dict] | None = None) -> Report:
        witnesses = [_witness("checks", self.count)]
        if extra:
            witnesses.extend(extra)
        witnesses.extend(self.failures)
        return Report(
            self.check, self.params, PASS if not self.failures else FAIL, witnesses
        )


# -- shared root-box plumbing ---------------------------------------------------


def unit_roots_desc(p: Poly) -> list[RootBox]:
    """Isolating boxes for the roots of p in (0, 1), largest first."""
    return list(reversed(isolate_roots(p, Fraction(0), Fraction(1))))


def fplus_interior_roots_desc(P: RootSystemType) -> list[RootBox]:
    """Boxes for the positive-part roots below t = 1, largest first.

    The simple root at t = 1 is divided out first, so index nu in the usual
    decreasing convention corresponds to list position nu - 2.
    """
    fp = fplus_poly(P)
    reduced = exact_divide(fp, Poly([1, -1]))
    if reduced(1) == 0:
        raise catalog.IdentityMismatch(f"root of {P} positive-part at 1 is not simple")
    return unit_roots_desc(reduced)


def _less(r1: RootBox, r2: RootBox) -> bool:
    return compare_roots(r1, r2) == LESS


def _greater(r1: RootBox, r2: RootBox) -> bool:
    return compare_roots(r1, r2) == GREATER


def _between(box: RootBox, lo: RootBox, hi: RootBox) -> bool:
    """Strict containment of box's root in the open interval (lo_root, hi_root)."""
    return _greater(box, lo) and _less(box, hi)


def _strictly_decreasing(boxes: list[RootBox]) -> bool:
    return all(_greater(boxes[i], boxes[i + 1]) for i in range(len(boxes) - 1))


# -- identity suite -------------------------------------------------------------


def verify_identities(l_max: int = 30, ode_l_max: int = 20, weight_k_max: int = 20) -> Report:
    """Exact polynomial-identity suite across the A/B/D families.

    Covers the positive-part product/average/kernel constructions, the
    D-from-B mixture, the shifted-Jacobi expressions, the h-transform
    round-trip, the weight-kernel derivative formulas, and both third-order
    ODE residuals.  Pass means every difference reduced to the zero
    polynomial.
    """
    if l_max < 5:
        raise ValueError("identity suite needs l_max >= 5")
    c = _Checker("identities", {"l_max": l_max, "ode_l_max": ode_l_max, "weight_k_max": weight_k_max})
    one_minus_t = Poly([1, -1])
    one_minus_2t = Poly([1, -2])
    for l in range(1, l_max + 1):
        c.expect(
            fplus_poly(A(l)) == fplus_poly_a_closed(l),
            "fplus_a_product", f"l={l}",
        )
        c.expect(
            fplus_poly(B(l)) == fplus_poly_b_closed(l),
            "fplus_b_average", f"l={l}",
        )
        c.expect(
            f_poly(A(l)) == Fraction((-1) ** l, l + 1) * jacobi_shifted(l, 1, 1),
            "jacobi_a", f"l={l}",
        )
        c.expect(
            f_poly(B(l)) == (-1) ** l * jacobi_shifted(l, 0, 0),
            "jacobi_b", f"l={l}",
        )
    for l in range(4, l_max + 1):
        fd, fb, fb1 = f_poly(D(l)), f_poly(B(l)), f_poly(B(l - 1))
        mix = Fraction(l - 2, 2 * (l - 1)) * fb + Fraction(l, 2 * (l - 1)) * one_minus_2t * fb1
        c.expect(fd == mix, "d_from_b_mix", f"l={l}")
        jac = (-1) ** (l - 1) * one_minus_t * jacobi_shifted(l - 1, 1, 0) + (
            -1
        ) ** l * Poly([0, 0, 1]) * jacobi_shifted(l - 2, 0, 2)
        c.expect(fd == jac, "jacobi_d", f"l={l}")
        legendre_mix = Fraction(l - 2, 2 * (l - 1)) * jacobi_shifted(l, 0, 0) - Fraction(
            l, 2 * (l - 1)
        ) * one_minus_2t * jacobi_shifted(l - 1, 0, 0)
        c.expect((-1) ** l * fd == legendre_mix, "legendre_d_mix", f"l={l}")
    for l in range(5, l_max + 1):
        fp = fplus_poly(D(l))
        c.expect(fp == fplus_d_from_kernel(l), "fplus_d_kernel", f"l={l}")
        c.expect(fp == fplus_d_rodrigues(l), "fplus_d_rodrigues", f"l={l}")
        sym = symmetrized_d_poly(l)  # internally cross-checks its two forms
        c.expect(sym == symmetrized_d_from_kernel(l), "symmetrized_d_forms", f"l={l}")
        c.expect(
            sym == (-1) ** l * compose_affine(sym, Fraction(-1), Fraction(1)),
            "symmetrized_d_reflection", f"l={l}",
        )
    # h-transform round trip across every type
    for P in _all_types(l_max):
        l = P.rank
        h = h_poly(P)
        rebuilt = Poly()
        for i in range(l + 1):
            rebuilt = rebuilt + h[i] * (-1) ** i * Poly.monomial(i) * one_minus_t ** (l - i)
        c.expect(f_poly(P) == rebuilt, "h_transform", str(P))
    # weight-kernel derivative formulas
    for k in range(1, weight_k_max + 1):
        for order in range(0, 2 * k + 1):
            direct = weight_power_deriv(k, order)
            c.expect(
                direct == weight_power_deriv_expanded(k, order),
                "weight_expansion", f"k={k}, order={order}",
            )
            c.expect(
                direct(HALF) == weight_power_deriv_at_half(k, order),
                "weight_half_value", f"k={k}, order={order}",
            )
        for order in range(0, k + 1):
            c.expect(
                weight_power_deriv(k, order)(0) == weight_power_deriv_at_zero(k, order),
                "weight_zero_value", f"k={k}, order={order}",
            )
    for l in range(4, ode_l_max + 1):
        c.expect(catalog.ode_residual_d(l).is_zero(), "ode_residual_d", f"l={l}")
        c.expect(
            catalog.ode_residual_d_plus_reduced(l).is_zero(),
            "ode_residual_d_plus_reduced", f"l={l}",
        )
    return c.report()


def _all_types(l_max: int, p_max: int = 12) -> list[RootSystemType]:
    types: list[RootSystemType] = []
    types.extend(A(l) for l in range(1, l_max + 1))
    types.extend(B(l) for l in range(1, l_max + 1))
    types.extend(D(l) for l in range(4, l_max + 1))
    types.extend(FIXED_TYPES)
    types.extend(I2(p) for p in range(3, p_max + 1))
    return types


# -- root counting and location -------------------------------------------------


def verify_simple_roots(P: RootSystemType) -> Report:
    """The face polynomial has exactly rank-many simple roots in (0, 1)."""
    f = f_poly(P)
    c = _Checker("conj2", {"type": str(P)})
    square_free = sturm_chain(f).is_square_free()
    c.expect(square_free, "square_free", str(P))
    n = count_roots(f, Fraction(0), Fraction(1))
    c.expect(n == P.rank, "unit_interval_root_count", f"{P}: {n} != {P.rank}")
    return c.report([_witness("roots_in_unit_interval", n)])


def verify_d_between_b(l: int) -> Report:
    """Each D-series root lies in its printed interval between B-series roots,
    with the middle root of odd rank landing exactly on 1/2."""
    if l < 4:
        raise catalog.InvalidRank("needs l >= 4")
    c = _Checker("cor54", {"l": l})
    td = unit_roots_desc(f_poly(D(l)))
    tb = unit_roots_desc(f_poly(B(l)))
    tb1 = unit_roots_desc(f_poly(B(l - 1)))

    def t(boxes: list[RootBox], nu: int) -> RootBox:
        return boxes[nu - 1]

    if l % 2 == 0:
        k = l // 2
        for nu in range(1, k + 1):
            c.expect(
                _between(t(td, 2 * k + 1 - nu), t(tb, 2 * k + 1 - nu), t(tb1, 2 * k - nu)),
                "lower_half_membership", f"l={l}, nu={nu}",
            )
            c.expect(
                _between(t(td, k + 1 - nu), t(tb1, k + 1 - nu), t(tb, k + 1 - nu)),
                "upper_half_membership", f"l={l}, nu={nu}",
            )
    else:
        k = (l - 1) // 2
        for nu in range(1, k + 1):
            c.expect(
                _between(t(td, 2 * k + 2 - nu), t(tb, 2 * k + 2 - nu), t(tb1, 2 * k + 1 - nu)),
                "lower_half_membership", f"l={l}, nu={nu}",
            )
            c.expect(
                _between(t(td, k + 1 - nu), t(tb1, k + 1 - nu), t(tb, k + 1 - nu)),
                "upper_half_membership", f"l={l}, nu={nu}",
            )
        c.expect(
            compare_roots(t(td, k + 1), rational_root_box(HALF)) == EQUAL,
            "middle_root_is_half", f"l={l}",
        )
    return c.report()


def verify_series_interlacing_b(l: int) -> Report:
    """Roots of consecutive B-series polynomials strictly alternate."""
    if l < 2:
        raise catalog.InvalidRank("needs l >= 2")
    c = _Checker("interlacing_b", {"l": l})
    big = unit_roots_desc(f_poly(B(l + 1)))
    small = unit_roots_desc(f_poly(B(l)))
    for nu in range(1, l + 1):
        ok = _greater(big[nu - 1], small[nu - 1]) and _greater(small[nu - 1], big[nu])
        c.expect(ok, "alternation", f"l={l}, nu={nu}")
    return c.report()


def verify_series_interlacing_aplus(l: int) -> Report:
    """Interior positive-part roots of consecutive A-series types alternate."""
    if l < 2:
        raise catalog.InvalidRank("needs l >= 2")
    c = _Checker("interlacing_aplus", {"l": l})
    big = fplus_interior_roots_desc(A(l + 1))  # indices 2..l+1
    small = fplus_interior_roots_desc(A(l))  # indices 2..l
    for nu in range(2, l + 1):
        ok = _greater(big[nu - 2], small[nu - 2]) and _greater(small[nu - 2], big[nu - 1])
        c.expect(ok, "alternation", f"l={l}, nu={nu}")
    return c.report()


def _bracket_for_smallest_b_root(l: int, terms: int) -> tuple[Fraction, Fraction]:
    """Certified inner bracket for the smallest B-series root.

    The root equals (1 + cos(theta))/2 for an angle pinned between two
    rational multiples of pi; the larger angle yields the lower endpoint.
    Returns (upper bound of the lower endpoint, lower bound of the upper
    endpoint), so a root box inside (lower_hi, upper_lo) is certified.
    """
    lower_hi = (1 + cos_pi_multiple_bounds(Fraction(2 * l, 2 * l + 1), terms)[1]) / 2
    upper_lo = (1 + cos_pi_multiple_bounds(Fraction(2 * l - 1, 2 * l + 1), terms)[0]) / 2
    return lower_hi, upper_lo


def verify_smallest_root_decay(series: str, l_max: int) -> Report:
    """Smallest roots strictly decrease along the series.

    For B the root is additionally certified to lie inside its cosine-derived
    bracket; for D it is certified to sit between the two neighbouring
    B-series smallest roots.
    """
    series = series.upper()
    if series not in ("A", "B", "D"):
        raise ValueError("series must be A, B or D")
    start = {"A": 1, "B": 1, "D": 4}[series]
    maker = {"A": A, "B": B, "D": D}[series]
    if l_max < start + 1:
        raise ValueError("l_max too small to compare anything")
    c = _Checker("conj3", {"series": series, "l_max": l_max})
    smallest = {
        l: first_root_box(f_poly(maker(l)), Fraction(0), Fraction(1))
        for l in range(start, l_max + 1)
    }
    for l in range(start, l_max):
        c.expect(
            _less(smallest[l + 1], smallest[l]),
            "strict_decrease", f"l={l}->{l + 1}",
        )
    if series == "B":
        for l in range(2, l_max + 1):
            box = smallest[l]
            ok = False
            terms = 24
            for _ in range(3):
                lower_hi, upper_lo = _bracket_for_smallest_b_root(l, terms)
                box = refine(box, Fraction(1, 2**70))
                if box.lo >= lower_hi and box.hi <= upper_lo:
                    ok = True
                    break
                terms *= 2
            c.expect(ok, "cosine_bracket", f"l={l}")
    if series == "D":
        b_smallest = {
            l: first_root_box(f_poly(B(l)), Fraction(0), Fraction(1))
            for l in range(3, l_max + 1)
        }
        for l in range(4, l_max + 1):
            c.expect(
                _greater(smallest[l], b_smallest[l]) and _less(smallest[l], b_smallest[l - 1]),
                "between_b_smallest", f"l={l}",
            )
    return c.report()


def verify_plus_interlacing(P: RootSystemType) -> Report:
    """Interior positive-part roots alternate with the face-polynomial roots."""
    c = _Checker("conj4", {"type": str(P)})
    l = P.rank
    froots = unit_roots_desc(f_poly(P))
    c.expect(len(froots) == l, "face_root_count", f"{P}: {len(froots)}")
    c.expect(fplus_poly(P)(1) == 0, "plus_root_at_one", str(P))
    interior = fplus_interior_roots_desc(P)
    c.expect(len(interior) == l - 1, "plus_interior_count", f"{P}: {len(interior)}")
    if len(froots) == l and len(interior) == l - 1:
        for nu in range(1, l):
            ok = _greater(froots[nu - 1], interior[nu - 1]) and _greater(interior[nu - 1], froots[nu])
            c.expect(ok, "alternation", f"{P}, nu={nu}")
    return c.report()


# -- sign-variation fixtures ------------------------------------------------------

# Rational probe points for the fixed-rank types, listed smallest first and
# paired (alpha_i, alpha_plus_i) for i = rank-1 down to 1.  Probing the Sturm
# chain at both members of pair i must find rank - i roots below the probe.
_F = Fraction
VARIATION_FIXTURES: dict[str, list[tuple[Fraction, Fraction]]] = {
    "E6": [
        (_F(7, 200), _F(1, 10)),
        (_F(21, 100), _F(1, 4)),
        (_F(2, 5), _F(3, 5)),
        (_F(13, 20), _F(7, 10)),
        (_F(17, 20), _F(9, 10)),
    ],
    "E7": [
        (_F(1, 50), _F(1, 10)),
        (_F(3, 20), _F(1, 5)),
        (_F(8, 25), _F(2, 5)),
        (_F(13, 25), _F(3, 5)),
        (_F(7, 10), _F(4, 5)),
        (_F(87, 100), _F(19, 20)),
    ],
    "E8": [
        (_F(19, 2000), _F(1, 100)),
        (_F(11, 100), _F(1, 5)),
        (_F(1, 4), _F(3, 10)),
        (_F(21, 50), _F(49, 100)),
        (_F(3, 5), _F(7, 10)),
        (_F(77, 100), _F(4, 5)),
        (_F(9, 10), _F(19, 20)),
    ],
    "F4": [
        (_F(1, 20), _F(1, 10)),
        (_F(7, 20), _F(2, 5)),
        (_F(7, 10), _F(4, 5)),
    ],
    "G2": [(_F(1, 6), _F(1, 2))],
    "H3": [
        (_F(7, 100), _F(1, 10)),
        (_F(11, 20), _F(3, 5)),
    ],
    "H4": [
        (_F(9, 500), _F(1, 5)),
        (_F(31, 100), _F(2, 5)),
        (_F(7, 10), _F(4, 5)),
    ],
}


def variation_fixture_pairs(P: RootSystemType) -> list[tuple[Fraction, Fraction]]:
    if P.family is catalog.Family.I2:
        return [(Fraction(1, P.param), HALF)]
    try:
        return VARIATION_FIXTURES[P.label]
    except KeyError:
        raise catalog.UnsupportedType(f"no variation fixtures for {P}") from None


def verify_variation_fixtures(P: RootSystemType) -> list[Report]:
    """Check the stored probe points against cumulative Sturm root counts.

    Returns two reports: the face-polynomial side (pass/fail) and the
    positive-part side, which is always skipped because those coefficients
    are not available for the fixed-rank types.
    """
    pairs = variation_fixture_pairs(P)
    l = P.rank
    f = f_poly(P)
    c = _Checker("fact73_f_side", {"type": str(P)})
    c.expect(len(pairs) == l - 1, "fixture_count", f"{P}: {len(pairs)}")
    for j, (alpha, alpha_plus) in enumerate(pairs):
        i = l - 1 - j
        expected = l - i
        c.expect(alpha < alpha_plus, "pair_order", f"{P}, i={i}")
        got = count_roots(f, Fraction(0), alpha)
        c.expect(got == expected, "alpha_count", f"{P}, i={i}: {got} != {expected}")
        got_plus = count_roots(f, Fraction(0), alpha_plus)
        c.expect(got_plus == expected, "alpha_plus_count", f"{P}, i={i}: {got_plus} != {expected}")
    skipped = Report(
        "fact73_fplus_side",
        {"type": str(P)},
        SKIPPED,
        [_witness("reason", "positive-part coefficients not available for this type")],
    )
    return [c.report(), skipped]


# -- the symmetrized D apparatus ---------------------------------------------------


def verify_symmetrized_apparatus(l: int) -> Report:
    """Full root apparatus of the symmetrized D family at rank l >= 5.

    Certifies the kernel-derivative root ladders and their interlacing, the
    positive-part memberships, the symmetrized polynomial's root layout, the
    difference polynomial's roots (one exactly at zero, slope l-2 there), and
    the upper/lower half orderings that combine into the full alternation.
    """
    if l < 5:
        raise catalog.InvalidRank("needs l >= 5")
    c = _Checker("section8", {"l": l})
    half_box = rational_root_box(HALF)
    zero_box = rational_root_box(Fraction(0))
    one_box = rational_root_box(Fraction(1))

    # (a) root ladders of the two kernel derivatives
    a_poly = d_kernel_deriv(l, l - 4)
    b_poly = d_kernel_deriv(l, l - 3)
    c.expect(a_poly.degree == l, "kernel_deriv_degree", f"l={l}")
    c.expect(count_real_roots(a_poly) == l, "kernel_deriv_all_real", f"l={l}")
    c.expect(a_poly(0) == 0 and a_poly(1) == 0, "kernel_deriv_endpoint_roots", f"l={l}")
    u_desc = list(reversed(isolate_roots(a_poly, Fraction(-1), Fraction(1))))
    c.expect(count_real_roots(b_poly) == l - 1, "kernel_second_deriv_all_real", f"l={l}")
    v_desc = unit_roots_desc(b_poly)
    if not (
        c.expect(len(u_desc) == l, "u_count", f"l={l}: {len(u_desc)}")
        and c.expect(len(v_desc) == l - 1, "v_count", f"l={l}: {len(v_desc)}")
    ):
        return c.report()
    c.expect(compare_roots(u_desc[0], one_box) == EQUAL, "u_first_is_one", f"l={l}")
    c.expect(compare_roots(u_desc[-1], zero_box) == EQUAL, "u_last_is_zero", f"l={l}")
    ladder: list[RootBox] = []
    for i in range(l - 1):
        ladder.extend([u_desc[i], v_desc[i]])
    ladder.append(u_desc[-1])
    c.expect(_strictly_decreasing(ladder), "u_v_interlacing", f"l={l}")

    # (b) positive-part roots sit between the ladder rungs
    tplus_desc = fplus_interior_roots_desc(D(l))  # positions 0.. hold indices 2..l

    def tplus(nu: int) -> RootBox:
        return tplus_desc[nu - 2]

    if not c.expect(len(tplus_desc) == l - 1, "tplus_count", f"l={l}: {len(tplus_desc)}"):
        return c.report()
    c.expect(fplus_poly(D(l))(1) == 0, "tplus_first_is_one", f"l={l}")
    for nu in range(1, l):
        idx = l + 1 - nu
        c.expect(
            _between(tplus(idx), u_desc[idx - 1], v_desc[l - nu - 1]),
            "tplus_kernel_membership", f"l={l}, nu={nu}",
        )

    # (c) the symmetrized polynomial's roots
    sym = symmetrized_d_poly(l)
    c.expect(count_real_roots(sym) == l, "symmetrized_all_real", f"l={l}")
    c.expect(count_roots(sym, Fraction(0), Fraction(1)) == l, "symmetrized_unit_count", f"l={l}")
    ts_desc = unit_roots_desc(sym)
    td_desc = unit_roots_desc(f_poly(D(l)))

    def ts(nu: int) -> RootBox:
        return ts_desc[nu - 1]

    def td(nu: int) -> RootBox:
        return td_desc[nu - 1]

    if not (
        c.expect(len(ts_desc) == l, "symmetrized_root_count", f"l={l}: {len(ts_desc)}")
        and c.expect(len(td_desc) == l, "face_root_count", f"l={l}: {len(td_desc)}")
    ):
        return c.report()

    if l % 2 == 0:
        k = l // 2
        for nu in range(1, k):
            c.expect(
                _between(ts(2 * k + 1 - nu), td(2 * k + 1 - nu), td(2 * k - nu)),
                "symmetrized_lower_membership", f"l={l}, nu={nu}",
            )
            c.expect(
                _between(ts(k - nu), td(k + 1 - nu), td(k - nu)),
                "symmetrized_upper_membership", f"l={l}, nu={nu}",
            )
        c.expect(
            _greater(ts(k + 1), td(k + 1)) and _root_below_half(ts(k + 1)),
            "symmetrized_below_half", f"l={l}",
        )
        c.expect(
            _root_above_half(ts(k)) and _less(ts(k), td(k)),
            "symmetrized_above_half", f"l={l}",
        )
        for nu in range(1, k + 1):
            c.expect(
                _between(ts(2 * k + 1 - nu), u_desc[2 * k - nu], v_desc[2 * k - nu - 1]),
                "symmetrized_kernel_membership", f"l={l}, nu={nu}",
            )
    else:
        k = (l - 1) // 2
        for nu in range(1, k):
            c.expect(
                _between(ts(2 * k + 2 - nu), td(2 * k + 2 - nu), td(2 * k + 1 - nu)),
                "symmetrized_lower_membership", f"l={l}, nu={nu}",
            )
            c.expect(
                _between(ts(k - nu), td(k + 1 - nu), td(k - nu)),
                "symmetrized_upper_membership", f"l={l}, nu={nu}",
            )
        c.expect(
            _greater(ts(k + 2), td(k + 2)) and _root_below_half(ts(k + 2)),
            "symmetrized_below_half", f"l={l}",
        )
        c.expect(
            compare_roots(ts(k + 1), half_box) == EQUAL,
            "symmetrized_middle_is_half", f"l={l}",
        )
        c.expect(
            _root_above_half(ts(k)) and _less(ts(k), td(k)),
            "symmetrized_above_half", f"l={l}",
        )
        for nu in range(1, k + 1):
            c.expect(
                _between(ts(2 * k + 2 - nu), u_desc[2 * k + 1 - nu], v_desc[2 * k - nu]),
                "symmetrized_kernel_membership", f"l={l}, nu={nu}",
            )

    # (d) the difference polynomial
    diff = d_difference_poly(l)
    c.expect(diff[0] == 0, "difference_zero_at_origin", f"l={l}")
    c.expect(diff[1] == l - 2, "difference_slope", f"l={l}: {rat_str(diff[1])}")
    c.expect(count_real_roots(diff) == l, "difference_all_real", f"l={l}")
    c.expect(diff(1) != 0, "difference_nonzero_at_one", f"l={l}")
    tk_desc = list(reversed(isolate_roots(diff, Fraction(-1), Fraction(1))))
    if not c.expect(len(tk_desc) == l, "difference_root_count", f"l={l}: {len(tk_desc)}"):
        return c.report()
    c.expect(compare_roots(tk_desc[-1], zero_box) == EQUAL, "difference_smallest_is_zero", f"l={l}")
    for nu in range(1, l):
        c.expect(
            _between(tk_desc[l - nu - 1], v_desc[l - nu - 1], u_desc[l - nu - 1]),
            "difference_membership", f"l={l}, nu={nu}",
        )

    # (e) positive-part vs symmetrized roots, B-root memberships, half-point facts
    if l % 2 == 0:
        k = l // 2
        for nu in range(1, k):
            c.expect(
                _between(tplus(2 * k + 1 - nu), ts(2 * k + 1 - nu), ts(2 * k - nu)),
                "tplus_symmetrized_membership", f"l={l}, nu={nu}",
            )
        c.expect(
            _greater(tplus(k + 1), ts(k + 1)) and _root_below_half(tplus(k + 1)),
            "tplus_below_half", f"l={l}",
        )
    else:
        k = (l - 1) // 2
        for nu in range(1, k):
            c.expect(
                _between(tplus(2 * k + 2 - nu), ts(2 * k + 2 - nu), ts(2 * k + 1 - nu)),
                "tplus_symmetrized_membership", f"l={l}, nu={nu}",
            )
        c.expect(
            _greater(tplus(k + 2), ts(k + 2)) and _root_below_half(tplus(k + 2)),
            "tplus_below_half", f"l={l}",
        )

    tb_desc = unit_roots_desc(f_poly(B(l)))
    tb1_desc = unit_roots_desc(f_poly(B(l - 1)))
    for nu in range(1, l):
        idx = l + 1 - nu
        c.expect(
            _between(tplus(idx), tb_desc[idx - 1], tb_desc[l - nu - 1]),
            "tplus_between_b_roots", f"l={l}, nu={nu}",
        )
    quad = Poly([2 * l, -5 * l, 2 * (2 * l - 1)])
    c.expect(_quadratic_positive_on_unit_interval(quad), "mixture_coefficient_positive", f"l={l}")

    floor_half = l // 2
    for nu in range(1, floor_half):
        c.expect(
            _less(tplus(l + 1 - nu), td(l - nu)),
            "lower_half_separation", f"l={l}, nu={nu}",
        )
    if l % 2 == 0:
        c.expect(_root_above_half(td(l // 2)), "face_middle_above_half", f"l={l}")
    else:
        c.expect(_root_above_half(tplus((l - 1) // 2 + 1)), "plus_middle_above_half", f"l={l}")

    ceil_half = (l + 1) // 2
    for nu in range(1, ceil_half):
        c.expect(
            _greater(td(ceil_half - nu), tplus(ceil_half + 1 - nu))
            and _greater(tplus(ceil_half + 1 - nu), td(ceil_half + 1 - nu)),
            "upper_half_alternation", f"l={l}, nu={nu}",
        )
        c.expect(
            _between(tplus(ceil_half + 1 - nu), tb_desc[ceil_half - nu], tb1_desc[ceil_half - nu - 1]),
            "upper_half_membership", f"l={l}, nu={nu}",
        )
    # the two halves combine into the full alternation
    for nu in range(1, l):
        c.expect(
            _greater(td(nu), tplus(nu + 1)) and _greater(tplus(nu + 1), td(nu + 1)),
            "joint_full_alternation", f"l={l}, nu={nu}",
        )
    return c.report()


def _root_below_half(box: RootBox) -> bool:
    return compare_roots(box, rational_root_box(HALF)) == LESS


def _root_above_half(box: RootBox) -> bool:
    return compare_roots(box, rational_root_box(HALF)) == GREATER


def _quadratic_positive_on_unit_interval(q: Poly) -> bool:
    """Exact positivity of an upward quadratic on [0, 1] via its vertex."""
    if q(0) <= 0 or q(1) <= 0:
        return False
    a2, a1 = q[2], q[1]
    if a2 <= 0:
        return False
    vertex = -a1 / (2 * a2)
    if 0 <= vertex <= 1:
        return q(vertex) > 0
    return True


# -- divisibility parity and the derivative product formula ------------------------


def verify_half_root_parity(l_max: int) -> Report:
    """Divisibility by 1-2t holds exactly for odd ranks in the three series
    (and for the symmetrized D family), and among the fixed-rank types only
    where expected."""
    if l_max < 5:
        raise ValueError("needs l_max >= 5")
    c = _Checker("divisibility", {"l_max": l_max})
    one_minus_2t = Poly([1, -2])

    def divisible(p: Poly) -> bool:
        return divrem(p, one_minus_2t)[1].is_zero()

    for l in range(1, l_max + 1):
        c.expect(divisible(f_poly(A(l))) == (l % 2 == 1), "a_parity", f"l={l}")
        c.expect(divisible(f_poly(B(l))) == (l % 2 == 1), "b_parity", f"l={l}")
    for l in range(4, l_max + 1):
        c.expect(divisible(f_poly(D(l))) == (l % 2 == 1), "d_parity", f"l={l}")
    for l in range(5, l_max + 1):
        c.expect(divisible(symmetrized_d_poly(l)) == (l % 2 == 1), "symmetrized_parity", f"l={l}")
    for P in FIXED_TYPES:
        expected = P in (E7, H3)
        c.expect(divisible(f_poly(P)) == expected, "fixed_type_parity", str(P))
    for p in range(3, 13):
        c.expect(not divisible(f_poly(I2(p))), "dihedral_parity", f"p={p}")
    return c.report()


def verify_derivative_at_one(series: str, l_max: int) -> Report:
    """Derivative of the positive-part polynomial at t = 1 equals the
    reflection-group product formula, exactly."""
    series = series.upper()
    if series not in ("A", "B", "D"):
        raise ValueError("series must be A, B or D")
    start = {"A": 1, "B": 1, "D": 4}[series]
    maker = {"A": A, "B": B, "D": D}[series]
    c = _Checker("addendum", {"series": series, "l_max": l_max})
    for l in range(start, l_max + 1):
        P = maker(l)
        lhs = derivative(fplus_poly(P))(1)
        rhs = derivative_at_one_formula(P)
        c.expect(lhs == rhs, "derivative_product_formula", f"{P}: {rat_str(lhs)} != {rat_str(rhs)}")
        data = coxeter_data(P)
        expected_order = 1
        for e in data.exponents:
            expected_order *= e + 1
        c.expect(data.group_order == expected_order, "group_order_cross_check", str(P))
    return c.report()
