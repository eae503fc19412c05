import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lti_opacity import (
    ComplementOfSubspace,
    Coset,
    Finite,
    FullSpace,
    Lin,
    NoExtension,
    NotStronglyOpaque,
    Relation,
    Subspace,
    extend_opaque_set,
    forced_response_matrix,
    is_state_opaque,
    is_strongly_opaque,
    is_weakly_opaque,
    largest_opaque_set,
    observability_matrix,
    opacity_capacity_compare,
    opaque_partner_coset,
    simulate,
    solve,
    wus_kernel_method,
)
from lti_opacity.linalg import vneg, vsub
from lti_opacity.opacity import replay_outputs
from lti_opacity.sets import segment

from conftest import random_system

VERT = Subspace(2, [(0, 1)])


class TestStateOpacity:
    def test_example_pair(self, ex1_sys):
        v = is_state_opaque(ex1_sys, (1, 1), (1, 0))
        assert v.opaque and v.witness.delta == (0, 1)
        assert is_zero_output(ex1_sys, v.witness)

    def test_transparent_pair(self, ex1_sys):
        assert not is_state_opaque(ex1_sys, (2, 0), (1, 0))

    def test_full_output_never_opaque(self, full_out_sys):
        for xs, xns in [((1, 1), (1, 0)), ((0, 1), (0, 0)), ((3, -2), (1, 5))]:
            assert not is_state_opaque(full_out_sys, xs, xns)

    def test_equal_states_rejected(self, ex1_sys):
        with pytest.raises(ValueError):
            is_state_opaque(ex1_sys, (1, 1), (1, 1))

    def test_replay(self, ex1_sys):
        v = is_state_opaque(ex1_sys, (1, 1), (1, 0))
        ys, yn = replay_outputs(ex1_sys, (1, 1), v.witness, [1] * 8)
        assert ys == yn


def is_zero_output(sys, w):
    return all(y == 0 for y in simulate(sys, w.delta, w.zeroing))


class TestPartnerCoset:
    def test_example(self, ex1_sys):
        C = opaque_partner_coset(ex1_sys, (1, 1))
        assert C == Coset((1, 0), VERT)

    def test_no_wus_gives_singleton(self, full_out_sys):
        assert opaque_partner_coset(full_out_sys, (1, 1)) == Finite(2, [(1, 1)])

    def test_full_wus_gives_everything(self, feed_sys):
        assert opaque_partner_coset(feed_sys, (1, 1)) == FullSpace(2)


class TestWeak:
    def test_first_pair_works(self, ex1_sys):
        v = is_weakly_opaque(ex1_sys, Finite(2, [(1, 1), (5, 7)]), Finite(2, [(1, 0)]))
        assert v.opaque and v.witness.x_ns == (1, 0)

    def test_no_pair(self, ex1_sys):
        assert not is_weakly_opaque(ex1_sys, Finite(2, [(5, 7)]), Finite(2, [(1, 0)]))

    def test_full_wus(self, feed_sys):
        assert is_weakly_opaque(feed_sys, segment((3, 3), (4, 4)), Finite(2, [(0, 0)]))

    def test_polytope_pair(self, ex1_sys):
        assert is_weakly_opaque(ex1_sys, segment((0, 5), (2, 5)), segment((1, 0), (3, 0)))
        assert not is_weakly_opaque(ex1_sys, segment((0, 5), (2, 5)), segment((3, 0), (4, 0)))

    def test_overlap_rejected(self, ex1_sys):
        with pytest.raises(ValueError):
            is_weakly_opaque(ex1_sys, Finite(2, [(1, 1)]), Finite(2, [(1, 1)]))


class TestStrong:
    def test_ball_boundary(self, ex1):
        assert is_strongly_opaque(ex1.system, ex1.sets["ball_boundary"], ex1.sets["segment"])

    def test_shrunk_segment_fails(self, ex1):
        v = is_strongly_opaque(ex1.system, ex1.sets["ball_boundary"], ex1.sets["short_segment"])
        assert not v and v.failing_state is not None
        assert abs(v.failing_state[0]) > ex1.sets["short_segment"].vertices[-1][0]

    def test_finite_failure_reported(self, ex1_sys):
        v = is_strongly_opaque(ex1_sys, Finite(2, [(1, 1), (2, 1)]), Finite(2, [(1, 0)]))
        assert not v and v.failing_state == (2, 1)

    def test_example_pair(self, ex1_sys):
        assert is_strongly_opaque(ex1_sys, Finite(2, [(1, 1)]), Finite(2, [(1, 0)]))

    def test_largest_set_is_strongly_opaque(self, ex1_sys):
        Xs, Xns = largest_opaque_set(ex1_sys)
        assert is_strongly_opaque(ex1_sys, Xs, Xns)


class TestLargest:
    def test_example(self, ex1_sys):
        Xs, Xns = largest_opaque_set(ex1_sys)
        assert Xns == Lin(Subspace(2, [(1, 0)]))
        assert Xs == ComplementOfSubspace(Subspace(2, [(1, 0)]))

    def test_feedthrough(self, feed_sys):
        Xs, Xns = largest_opaque_set(feed_sys)
        assert Xns.space.is_zero and Xs == ComplementOfSubspace(Subspace.zero(2))

    def test_no_wus(self, full_out_sys):
        Xs, Xns = largest_opaque_set(full_out_sys)
        assert Xns.space.is_full


class TestCapacity:
    def test_feedthrough_hosts_more(self, ex1_sys, feed_sys):
        c = opacity_capacity_compare(ex1_sys, feed_sys)
        assert c.relation is Relation.SUBSET and c.second_hosts_more_opaque_sets

    def test_equal(self, ex1_sys):
        assert opacity_capacity_compare(ex1_sys, ex1_sys).relation is Relation.EQUAL

    def test_superset(self, ex1_sys, full_out_sys):
        assert opacity_capacity_compare(ex1_sys, full_out_sys).relation is Relation.SUPERSET


class TestExtend:
    def test_full_wus(self, feed_sys):
        Xs2, Xns2 = extend_opaque_set(feed_sys, Finite(2, [(1, 1)]), Finite(2, [(1, 0), (3, 3)]))
        assert len(Xs2) == 2 and len(Xns2) == 1
        assert is_strongly_opaque(feed_sys, Xs2, Xns2)

    def test_no_extension(self, ex1_sys):
        with pytest.raises(NoExtension):
            extend_opaque_set(ex1_sys, Finite(2, [(1, 1)]), Finite(2, [(1, 0)]))

    def test_from_empty_secret(self, ex1_sys):
        Xs2, Xns2 = extend_opaque_set(ex1_sys, Finite(2, []), Finite(2, [(0, 0), (0, 1)]))
        assert Xs2 == Finite(2, [(0, 0)]) and Xns2 == Finite(2, [(0, 1)])

    def test_rejects_non_opaque_input(self, ex1_sys):
        with pytest.raises(NotStronglyOpaque):
            extend_opaque_set(ex1_sys, Finite(2, [(5, 5)]), Finite(2, [(1, 0)]))


seeds = st.integers(0, 10**6)


@settings(max_examples=80)
@given(seeds)
def test_state_opacity_matches_solvability_oracle(seed):
    rng = random.Random(seed)
    sys = random_system(rng)
    xs = tuple(rng.randint(-2, 2) for _ in range(sys.n))
    xns = tuple(rng.randint(-2, 2) for _ in range(sys.n))
    if xs == xns:
        return
    k = 2 * sys.n - 1
    oracle = solve(forced_response_matrix(sys, k), vneg(observability_matrix(sys, k).apply(vsub(xs, xns)))) is not None
    assert bool(is_state_opaque(sys, xs, xns)) == oracle


@settings(max_examples=60)
@given(seeds)
def test_witness_reproduces_outputs(seed):
    rng = random.Random(seed)
    sys = random_system(rng)
    V = wus_kernel_method(sys)
    if V.is_zero:
        return
    v = V.vectors[0]
    xns = tuple(rng.randint(-2, 2) for _ in range(sys.n))
    xs = tuple(a + b for a, b in zip(xns, v))
    w = is_state_opaque(sys, xs, xns).witness
    U_s = [rng.randint(-3, 3) for _ in range(len(w.zeroing))]
    assert simulate(sys, xs, U_s) == simulate(sys, xns, w.masking_input(U_s))


@settings(max_examples=80)
@given(seeds)
def test_strong_implies_weak(seed):
    rng = random.Random(seed)
    sys = random_system(rng, nmax=3)
    pts = {tuple(rng.randint(-2, 2) for _ in range(sys.n)) for _ in range(6)}
    pts = sorted(pts)
    if len(pts) < 2:
        return
    cut = rng.randint(1, len(pts) - 1)
    Xs, Xns = Finite(sys.n, pts[:cut]), Finite(sys.n, pts[cut:])
    if is_strongly_opaque(sys, Xs, Xns):
        assert is_weakly_opaque(sys, Xs, Xns)


@settings(max_examples=40)
@given(seeds)
def test_extension_grows_by_one(seed):
    rng = random.Random(seed)
    sys = random_system(rng, nmax=2)
    pts = sorted({tuple(rng.randint(-2, 2) for _ in range(sys.n)) for _ in range(6)})
    try:
        Xs2, Xns2 = extend_opaque_set(sys, Finite(sys.n, []), Finite(sys.n, pts))
    except NoExtension:
        return
    assert len(Xs2) == 1 and is_strongly_opaque(sys, Xs2, Xns2)
