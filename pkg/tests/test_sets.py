from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lti_opacity import (
    ComplementOfSubspace,
    Coset,
    DimensionMismatch,
    Finite,
    FullSpace,
    Lin,
    Poly,
    Subspace,
    Union,
    UnsupportedCombination,
    contains_set,
    coset_intersect,
    difference_body,
    member,
    minkowski_with_subspace,
)
from lti_opacity.linalg import subspace_contains, vsub
from lti_opacity.sets import negate, segment, set_minus_finite, uncovered_point

VERT = Subspace(2, [(0, 1)])
SEG = segment((-1, 0), (1, 0))
BALL_EDGES = Union(2, (
    segment((-1, -1), (1, -1)),
    segment((1, -1), (1, 1)),
    segment((-1, 1), (1, 1)),
    segment((-1, -1), (-1, 1)),
))

points2 = st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=5)
subspace2 = st.sampled_from([Subspace.zero(2), VERT, Subspace(2, [(1, 0)]), Subspace(2, [(1, 1)]), Subspace.full(2)])


class TestConstruction:
    def test_finite_deduplicated(self):
        assert len(Finite(2, [(1, 0), (1, 0)])) == 1

    def test_poly_drops_interior_vertex(self):
        P = Poly(2, [(0, 0), (1, 0), (0, 1), (Fraction(1, 3), Fraction(1, 3))])
        assert len(P.vertices) == 3

    def test_union_flattened(self):
        inner = Union(2, (Finite(2, [(0, 0)]), Finite(2, [(1, 1)])))
        U = Union(2, (inner, Finite(2, [(2, 2)])))
        assert not any(isinstance(m, Union) for m in U.members)

    def test_dimension_checked(self):
        with pytest.raises(DimensionMismatch):
            Finite(2, [(1, 2, 3)])


class TestNegate:
    def test_finite(self):
        assert negate(Finite(2, [(1, 0)])) == Finite(2, [(-1, 0)])

    def test_subspace(self):
        assert negate(Lin(VERT)) == Lin(VERT)

    def test_symmetric_segment(self):
        assert negate(SEG) == SEG

    @given(points2)
    def test_involution(self, pts):
        for S in (Finite(2, pts), Poly(2, pts), Coset(pts[0], VERT)):
            assert negate(negate(S)) == S


class TestMinkowski:
    def test_point_plus_line(self):
        S = minkowski_with_subspace(Finite(2, [(1, 0)]), VERT)
        assert S == Coset((1, 0), VERT)
        assert member(S, (1, 7)) and not member(S, (2, 7))

    def test_segment_plus_line_is_strip(self):
        S = minkowski_with_subspace(SEG, VERT)
        assert member(S, (1, 100)) and member(S, (-1, -5)) and not member(S, (Fraction(11, 10), 0))

    def test_zero_subspace_is_identity(self):
        S = Finite(2, [(1, 2), (3, 4)])
        assert minkowski_with_subspace(S, Subspace.zero(2)) == S

    def test_full_space(self):
        assert minkowski_with_subspace(FullSpace(2), VERT) == FullSpace(2)

    @given(points2, subspace2, st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
    def test_finite_oracle(self, pts, V, x):
        S = minkowski_with_subspace(Finite(2, pts), V)
        assert member(S, x) == any(subspace_contains(V, vsub(x, s)) for s in pts)


class TestDifferenceBody:
    def test_full_space(self):
        assert difference_body(FullSpace(2)) == FullSpace(2)

    def test_two_points(self):
        assert difference_body(Finite(2, [(1, 0), (1, 1)])) == Finite(2, [(0, 0), (0, 1), (0, -1)])

    def test_subspace(self):
        assert difference_body(Lin(VERT)) == Lin(VERT)

    def test_segment(self):
        D = difference_body(segment((0, 0), (1, 0)))
        assert member(D, (-1, 0)) and member(D, (1, 0)) and not member(D, (2, 0))

    @given(points2)
    def test_contains_zero_and_symmetric(self, pts):
        for S in (Finite(2, pts), Poly(2, pts)):
            D = difference_body(S)
            assert member(D, (0, 0))
            assert negate(D) == D


class TestMember:
    def test_vector_in_wus(self):
        assert member(Lin(VERT), (0, 1))

    def test_off_segment(self):
        assert not member(SEG, (1, 1))

    def test_midpoint(self):
        assert member(SEG, (0, 0))

    def test_complement(self):
        C = ComplementOfSubspace(Subspace(2, [(1, 0)]))
        assert member(C, (0, 1)) and not member(C, (5, 0))

    @given(points2, points2, st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
    def test_union_distributes(self, a, b, x):
        U = Union(2, (Finite(2, a), Poly(2, b)))
        assert member(U, x) == (member(Finite(2, a), x) or member(Poly(2, b), x))


class TestContains:
    def test_strip_holds_edges(self):
        strip = minkowski_with_subspace(SEG, VERT)
        assert contains_set(strip, BALL_EDGES)

    def test_narrow_strip_misses_corner(self):
        strip = minkowski_with_subspace(segment((Fraction(-1, 2), 0), (Fraction(1, 2), 0)), VERT)
        assert not contains_set(strip, BALL_EDGES)
        bad = uncovered_point(strip, BALL_EDGES)
        assert bad is not None and member(BALL_EDGES, bad) and not member(strip, bad)

    def test_finite_self(self):
        assert contains_set(Finite(2, [(1, 0)]), Finite(2, [(1, 0)]))

    def test_coset_holds_points(self):
        assert contains_set(Coset((1, 0), VERT), Finite(2, [(1, 5), (1, -3)]))

    def test_union_of_strips_covers_segment(self):
        A = Union(2, (
            minkowski_with_subspace(segment((0, 0), (1, 0)), VERT),
            minkowski_with_subspace(segment((1, 0), (2, 0)), VERT),
        ))
        assert contains_set(A, segment((0, 3), (2, -3)))
        assert not contains_set(A, segment((0, 3), (3, -3)))

    def test_union_covers_square_in_plane(self):
        left = Poly(2, [(0, 0), (1, 0), (1, 2), (0, 2)])
        right = Poly(2, [(1, 0), (2, 0), (2, 2), (1, 2)])
        square = Poly(2, [(0, 0), (2, 0), (2, 2), (0, 2)])
        assert contains_set(Union(2, (left, right)), square)
        assert not contains_set(Union(2, (left, Poly(2, [(1, 0), (2, 0), (2, 1)]))), square)

    def test_three_dimensional_union_unsupported(self):
        cube_half = Poly(3, [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
        other = Poly(3, [(1, 1, 1), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
        big = Poly(3, [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
        with pytest.raises(UnsupportedCombination):
            contains_set(Union(3, (cube_half, other)), big)

    @given(points2, points2)
    def test_finite_oracle(self, a, b):
        A = minkowski_with_subspace(Finite(2, a), VERT)
        assert contains_set(A, Finite(2, b)) == all(member(A, x) for x in b)


class TestSetMinusAndCoset:
    def test_set_minus(self):
        assert set_minus_finite(Finite(2, [(1, 0), (0, 1)]), Finite(2, [(1, 0)])) == Finite(2, [(0, 1)])

    def test_coset_meets_finite(self):
        got = coset_intersect(Coset((1, 0), VERT), Finite(2, [(1, 1), (2, 2)]))
        assert got == Finite(2, [(1, 1)])

    def test_coset_meets_full_space(self):
        C = Coset((1, 0), VERT)
        assert coset_intersect(C, FullSpace(2)) == C

    def test_line_through_square(self):
        square = Poly(2, [(0, 0), (2, 0), (2, 2), (0, 2)])
        got = coset_intersect(Coset((1, 0), VERT), square)
        assert got == segment((1, 0), (1, 2))

    def test_parallel_cosets_disjoint(self):
        got = coset_intersect(Coset((1, 0), VERT), Coset((2, 0), VERT))
        assert got == Finite(2, [])
