"""Shared helpers for the test suite."""
from fractions import Fraction

from fzeros.polycore import Poly


def sign(v) -> int:
    return (v > 0) - (v < 0)


def grid_scan_count(p: Poly, known_roots: list[Fraction], a: Fraction, b: Fraction) -> int:
    """Independent root-counting oracle for (a, b]: walk a rational grid finer
    than a third of the minimal root separation and track sign changes, with
    exact zeros at grid points counted once (and excluded at a)."""
    pts = sorted(set(known_roots) | {a, b})
    min_sep = min(y - x for x, y in zip(pts, pts[1:]))
    n = int((b - a) / (min_sep / 3)) + 1
    grid = [a + (b - a) * Fraction(i, n) for i in range(n + 1)]
    count = 0
    prev = None
    zero_hit = False
    for x in grid:
        s = sign(p(x))
        if s == 0:
            if x != a:
                count += 1
            zero_hit = True
            continue
        if prev is not None and s != prev and not zero_hit:
            count += 1
        prev = s
        zero_hit = False
    return count
