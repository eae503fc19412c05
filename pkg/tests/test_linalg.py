from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from lti_opacity import (
    DimensionMismatch,
    Mat,
    Subspace,
    image,
    kernel,
    orth_complement,
    quotient_coords,
    rank,
    solve,
    subspace_intersect,
    subspace_sum,
)
from lti_opacity.linalg import is_zero, subspace_contains, subspace_leq, to_rat


def mats(max_r=4, max_c=4):
    return st.integers(1, max_r).flatmap(
        lambda r: st.integers(1, max_c).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r
            ).map(Mat)
        )
    )


def subspaces(n):
    return st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), max_size=n + 1).map(
        lambda vs: Subspace(n, vs)
    )


class TestRational:
    def test_decimal_parsed_exactly(self):
        assert to_rat(0.5) == Fraction(1, 2)
        assert to_rat("0.5") == Fraction(1, 2)
        assert to_rat("3/6") == Fraction(1, 2)

    def test_bool_rejected(self):
        with pytest.raises(TypeError):
            to_rat(True)


class TestRank:
    def test_identity(self):
        assert rank(Mat.identity(2)) == 2

    def test_zero(self):
        assert rank(Mat.zeros(2, 2)) == 0

    def test_observability_of_running_example(self):
        assert rank(Mat([[1, 1], [0, 1], [1, 2]])) == 2

    @given(mats())
    def test_matches_sympy(self, M):
        assert rank(M) == sympy.Matrix(M.tolist()).rank()

    @given(mats())
    def test_rank_nullity(self, M):
        assert rank(M) + kernel(M).dim == M.ncols

    @given(mats())
    def test_transpose_rank(self, M):
        assert rank(M) == rank(M.T)


class TestKernelImage:
    def test_identity_kernel(self):
        assert kernel(Mat.identity(3)).is_zero

    def test_coordinate_kernel(self):
        assert kernel(Mat([[1, 0]])) == Subspace(2, [(0, 1)])

    def test_rank_one_kernel(self):
        assert kernel(Mat([[1, 1], [2, 2]])) == Subspace(2, [(1, -1)])

    def test_zero_image(self):
        assert image(Mat.zeros(2, 3)).is_zero

    def test_full_image(self):
        assert image(Mat([[1, 1], [1, 0]])).is_full

    def test_decimal_column_image(self):
        S = image(Mat([[0.5], [1]]))
        assert S == Subspace(2, [(1, 2)])

    @given(mats())
    def test_kernel_annihilated(self, M):
        for v in kernel(M).vectors:
            assert is_zero(M.apply(v))

    @given(mats())
    def test_kernel_matches_sympy_dimension_and_span(self, M):
        ours = kernel(M)
        theirs = [tuple(Fraction(int(x.p), int(x.q)) for x in v) for v in sympy.Matrix(M.tolist()).nullspace()]
        assert ours == Subspace(M.ncols, theirs)

    @given(mats())
    def test_canonical_form_idempotent(self, M):
        S = image(M)
        assert Subspace(S.n, S.vectors) == S
        assert Subspace(S.n, list(reversed(S.vectors))) == S


class TestSolve:
    def test_identity(self):
        assert solve(Mat.identity(2), [3, -4]) == (3, -4)

    def test_inconsistent(self):
        assert solve(Mat([[1, 0], [1, 0]]), [1, 2]) is None

    def test_forced_response_example(self):
        F = Mat([[0, 0, 0, 0, 0, 0], [1, 1, 0, 0, 0, 0], [2, 1, 1, 1, 0, 0]])
        U = solve(F, [0, 1, 2])
        assert F.apply(U) == (0, 1, 2)

    def test_free_variables_zero(self):
        assert solve(Mat([[1, 1]]), [2]) == (2, 0)

    @given(mats(), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
    def test_solution_or_rank_jump(self, M, rhs):
        b = rhs[: M.nrows]
        x = solve(M, b)
        if x is None:
            aug = Mat([list(r) + [bi] for r, bi in zip(M.rows, b)])
            assert rank(aug) > rank(M)
        else:
            assert M.apply(x) == tuple(Fraction(v) for v in b)


class TestLattice:
    def test_complement_of_vertical(self):
        assert orth_complement(Subspace(2, [(0, 1)])) == Subspace(2, [(1, 0)])

    def test_axes_meet_at_zero(self):
        assert subspace_intersect(Subspace(2, [(1, 0)]), Subspace(2, [(0, 1)])).is_zero

    def test_axes_sum_to_plane(self):
        assert subspace_sum(Subspace(2, [(1, 0)]), Subspace(2, [(0, 1)])).is_full

    def test_mismatch(self):
        with pytest.raises(DimensionMismatch):
            subspace_sum(Subspace(2, [(1, 0)]), Subspace(3, [(1, 0, 0)]))

    @given(subspaces(3), subspaces(3))
    def test_modular_dimension_formula(self, S1, S2):
        assert subspace_sum(S1, S2).dim + subspace_intersect(S1, S2).dim == S1.dim + S2.dim

    @given(subspaces(3))
    def test_complement_dimension_and_orthogonality(self, S):
        P = orth_complement(S)
        assert S.dim + P.dim == 3
        assert all(sum(a * b for a, b in zip(u, w)) == 0 for u in S.vectors for w in P.vectors)
        assert orth_complement(P) == S

    @given(subspaces(3), subspaces(3))
    def test_antisymmetric_inclusion(self, S1, S2):
        if subspace_leq(S1, S2) and subspace_leq(S2, S1):
            assert S1 == S2


class TestQuotient:
    def test_vertical_coset_coordinates(self):
        V = Subspace(2, [(0, 1)])
        assert quotient_coords(V, (1, 1)) == (1,)
        assert quotient_coords(V, (1, 0)) == (1,)

    def test_full_space_quotient_is_a_point(self):
        assert quotient_coords(Subspace.full(2), (3, 4)) == ()

    @given(subspaces(3), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
    def test_zero_coords_iff_member(self, S, v):
        assert subspace_contains(S, v) == is_zero(quotient_coords(S, v))


@settings(max_examples=50)
@given(mats(3, 3), mats(3, 3))
def test_matmul_associates_with_apply(M, N):
    if M.ncols != N.nrows:
        return
    for e in Mat.identity(N.ncols).rows:
        assert (M @ N).apply(e) == M.apply(N.apply(e))
