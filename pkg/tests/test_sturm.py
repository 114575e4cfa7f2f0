"""Tests for chains, counting, isolation, refinement and root comparison."""
import random
from fractions import Fraction

import pytest

from fzeros.catalog import A, B, D, E8, G2, H3, I2, f_poly, fplus_poly, h_poly
from fzeros.polycore import Poly, exact_divide
from fzeros.sturm import (
    EQUAL,
    GREATER,
    LESS,
    EndpointRoot,
    compare_roots,
    count_real_roots,
    count_roots,
    first_root_box,
    isolate_roots,
    rational_root_box,
    refine,
    sturm_chain,
    variations_at,
)

F = Fraction


class TestChain:
    def test_degrees_descend_one_by_one(self):
        ch = sturm_chain(f_poly(G2))
        assert [p.degree for p in ch.polys] == [2, 1, 0]
        ch8 = sturm_chain(f_poly(E8))
        assert [p.degree for p in ch8.polys] == list(range(8, -1, -1))
        assert ch8.is_square_free()

    def test_repeated_root_detected(self):
        ch = sturm_chain(Poly([1, -2]) ** 2)
        assert not ch.is_square_free()
        assert ch.polys[-1].degree == 1

    def test_variations(self):
        ch = sturm_chain(f_poly(G2))
        assert variations_at(ch, F(0)) == 2
        assert variations_at(ch, F(1)) == 0
        xs = [F(k, 10) for k in range(11)]
        vs = [variations_at(ch, x) for x in xs]
        assert vs == sorted(vs, reverse=True)

    def test_variation_at_interior_point(self):
        assert variations_at(sturm_chain(f_poly(I2(3))), F(1, 3)) == 1


class TestCountRoots:
    def test_full_unit_interval(self):
        assert count_roots(f_poly(E8), 0, 1) == 8

    def test_prefix_interval(self):
        assert count_roots(f_poly(B(2)), 0, F(1, 5)) == 0

    def test_negative_axis(self):
        assert count_roots(h_poly(B(2)), -10, 0) == 2

    def test_endpoint_deflation(self):
        fp = fplus_poly(A(3))
        assert fp(1) == 0
        assert count_roots(fp, 0, 1) == 3  # two interior plus the root at 1
        with pytest.raises(EndpointRoot):
            count_roots(fp, 0, 1, deflate=False)

    def test_half_open_excludes_left_endpoint(self):
        p = Poly([0, 1]) * Poly([1, -2])  # roots 0 and 1/2
        assert count_roots(p, 0, 1) == 1

    def test_total_real(self):
        assert count_real_roots(f_poly(E8)) == 8
        assert count_real_roots(Poly([1, 0, 1])) == 0
        assert count_real_roots(Poly([0, 1]) * Poly([1, 0, 1])) == 1


class TestIsolation:
    def test_two_boxes_separated_at_half(self):
        boxes = isolate_roots(f_poly(G2), F(0), F(1))
        assert len(boxes) == 2
        assert boxes[0].hi <= F(1, 2) <= boxes[1].lo
        assert 0 < boxes[0].approx < 0.25
        assert 0.75 < boxes[1].approx < 1

    def test_middle_box_refines_onto_half(self):
        boxes = isolate_roots(f_poly(H3), F(0), F(1))
        assert len(boxes) == 3
        mid = refine(boxes[1], F(1, 2**40))
        assert mid.lo < F(1, 2) < mid.hi
        assert mid.interval.width < F(1, 2**40)

    def test_single_linear(self):
        boxes = isolate_roots(Poly([1, -2]), F(0), F(1))
        assert len(boxes) == 1
        assert boxes[0].lo < F(1, 2) < boxes[0].hi

    def test_root_at_right_endpoint_straddles(self):
        boxes = isolate_roots(fplus_poly(B(3)), F(0), F(1))
        assert len(boxes) == 3
        assert boxes[-1].lo < 1 < boxes[-1].hi

    def test_boxes_ordered_and_disjoint(self):
        boxes = isolate_roots(f_poly(B(9)), F(0), F(1))
        assert len(boxes) == 9
        for left, right in zip(boxes, boxes[1:]):
            assert left.hi <= right.lo

    def test_requires_square_free(self):
        with pytest.raises(ValueError):
            isolate_roots(Poly([1, -2]) ** 2, F(0), F(1))

    def test_first_root_box_matches_full_isolation(self):
        for P in (B(8), A(9), D(7)):
            full = isolate_roots(f_poly(P), F(0), F(1))
            first = first_root_box(f_poly(P), F(0), F(1))
            assert compare_roots(first, full[0]) == EQUAL


class TestRefine:
    def test_width_shrinks(self):
        box = isolate_roots(Poly([1, -2]), F(0), F(1))[0]
        out = refine(box, F(1, 2**10))
        assert out.interval.width < F(1, 2**10)
        assert out.lo < F(1, 2) < out.hi

    def test_nested_containment(self):
        box = isolate_roots(f_poly(B(2)), F(0), F(1))[0]
        tighter = refine(box, F(1, 2**20))
        tightest = refine(tighter, F(1, 2**40))
        assert box.lo <= tighter.lo <= tightest.lo
        assert tightest.hi <= tighter.hi <= box.hi

    def test_smallest_b2_root_enclosure(self):
        # (3 - sqrt(3))/6 is the smallest root; certify via resultant-free check:
        # 36 x^2 - 36 x + 6 = 0 at the root, so check sign change of f at the bounds
        box = refine(isolate_roots(f_poly(B(2)), F(0), F(1))[0], F(1, 2**40))
        f = f_poly(B(2))
        assert f(box.lo) * f(box.hi) < 0
        assert abs(box.approx - (3 - 3**0.5) / 6) < 1e-9


class TestCompareRoots:
    def test_d5_middle_root_is_half(self):
        td5 = list(reversed(isolate_roots(f_poly(D(5)), F(0), F(1))))
        assert compare_roots(td5[2], rational_root_box(F(1, 2))) == EQUAL

    def test_shared_root_across_polynomials(self):
        b1 = isolate_roots(f_poly(H3), F(0), F(1))[1]  # exactly 1/2
        b2 = isolate_roots(Poly([1, -2]), F(0), F(1))[0]
        assert compare_roots(b1, b2) == EQUAL

    def test_box_with_itself(self):
        box = isolate_roots(f_poly(G2), F(0), F(1))[0]
        assert compare_roots(box, box) == EQUAL

    def test_interlacing_pair(self):
        largest_b2 = isolate_roots(f_poly(B(2)), F(0), F(1))[-1]
        interior_plus = isolate_roots(
            exact_divide(fplus_poly(B(2)), Poly([1, -1])), F(0), F(1)
        )[0]
        assert compare_roots(largest_b2, interior_plus) == GREATER
        assert compare_roots(interior_plus, largest_b2) == LESS

    def test_nearby_but_distinct(self):
        p = Poly([-1, 1]) * Poly([-F(10001, 10000), 1])  # roots 1 and 1.0001
        boxes = isolate_roots(p, F(0), F(2))
        assert len(boxes) == 2
        assert compare_roots(boxes[0], boxes[1]) == LESS


from conftest import grid_scan_count


class TestOracleEquivalence:
    def test_randomized_against_grid_scan(self):
        rng = random.Random(20260808)
        for _ in range(60):
            n_roots = rng.randint(1, 6)
            roots = set()
            while len(roots) < n_roots:
                roots.add(F(rng.randint(-12, 12), rng.randint(1, 8)))
            roots = sorted(roots)
            p = Poly([rng.choice([-3, -2, -1, 1, 2, 3])])
            for r in roots:
                p = p * Poly([-r.numerator, r.denominator])
            a = F(rng.randint(-15, -13), rng.randint(1, 3))
            b = F(rng.randint(13, 15), rng.randint(1, 3))
            if rng.random() < 0.3:
                b = roots[-1]  # exercise the endpoint-deflation path
            expected = sum(1 for r in roots if a < r <= b)
            assert count_roots(p, a, b) == expected
            assert grid_scan_count(p, roots, a, b) == expected
