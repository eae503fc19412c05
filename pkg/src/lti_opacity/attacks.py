"""Undetectable attacks and their trade-off with opacity."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import lp
from .errors import NotASubset, UnsupportedCombination
from .linalg import (
    Mat,
    Subspace,
    Vec,
    image,
    is_zero,
    rank,
    solve,
    subspace_leq,
    vec,
    vneg,
    vsub,
)
from .lti import (
    AttackChannel,
    LtiSystem,
    forced_response_matrix,
    horizon_of,
    observability_matrix,
)
from .opacity import Relation, subspace_relation
from .sets import (
    Coset,
    Finite,
    FullSpace,
    StateSet,
    _pieces,
    coset_intersect,
    difference_body,
    member,
    set_minus_finite,
)
from .wus import wus_kernel_method


@dataclass(frozen=True)
class AttackCertificate:
    """O_k x0 + F_k attack = 0: the attack is masked by the initial-state offset x0."""

    x0: Vec
    attack: Vec
    horizon: int

    def residual(self, sys: LtiSystem, chan: AttackChannel) -> Vec:
        k = self.horizon
        O, F = observability_matrix(sys, k), forced_response_matrix(sys, k, chan)
        return tuple(a + b for a, b in zip(O.apply(self.x0), F.apply(self.attack)))

    @property
    def nonzero(self) -> bool:
        return not is_zero(self.attack)


def _image_meets(M: Mat, S: StateSet, y: Vec) -> bool:
    """Is y = M z for some z in S?"""
    if isinstance(S, FullSpace):
        return solve(M, y) is not None
    if isinstance(S, Finite):
        return any(M.apply(z) == y for z in S.points)
    for piece in _pieces(S):
        cols = [M.apply(p) for p in piece.points]
        for d in piece.dirs:
            Md = M.apply(d)
            cols += [Md, vneg(Md)]
        A = [[c[i] for c in cols] for i in range(M.nrows)]
        conv = [[1] * len(piece.points) + [0] * (2 * len(piece.dirs))]
        if lp.feasible_point(A + conv, list(y) + [1]) is not None:
            return True
    return False


def is_attack_undetectable(
    sys: LtiSystem, chan: AttackChannel, attack: Sequence, X0: StateSet
) -> bool:
    """F_k attack lies in O_k (X0 (+) -X0)."""
    attack = vec(attack)
    k = horizon_of(attack, chan.q)
    O = observability_matrix(sys, k)
    y = forced_response_matrix(sys, k, chan).apply(attack)
    if isinstance(X0, FullSpace):
        return solve(O, y) is not None
    return _image_meets(O, difference_body(X0), y)


def synthesize_undetectable_attack(
    sys: LtiSystem, chan: AttackChannel, k: int
) -> Optional[AttackCertificate]:
    """Certificate from the first canonical basis vector of V(attacked system), if any."""
    attacked = chan.attacked_system(sys)
    Vt = wus_kernel_method(attacked)
    if Vt.is_zero:
        return None
    x0 = Vt.vectors[0]
    rhs = vneg(observability_matrix(sys, k).apply(x0))
    attack = solve(forced_response_matrix(attacked, k), rhs)
    assert attack is not None, "a WUS vector must admit a zeroing attack at every horizon"
    return AttackCertificate(x0, attack, k)


def channel_range_inclusion(chanA: Mat, chanB: Mat) -> Relation:
    """Relation between R(chanA) and R(chanB), both stacked (n+m)-row matrices."""
    return subspace_relation(image(chanA), image(chanB))


@dataclass(frozen=True)
class MonotonicityCheck:
    wus_system: Subspace
    wus_attacked: Subspace
    channel_relation: Relation
    holds: bool


def wus_monotonicity_check(sys: LtiSystem, chan: AttackChannel) -> MonotonicityCheck:
    """A wider input range can only enlarge the WUS; verify on this pair."""
    V = wus_kernel_method(sys)
    Vt = wus_kernel_method(chan.attacked_system(sys))
    rel = channel_range_inclusion(chan.stacked, sys.input_matrix)
    if rel is Relation.SUPERSET:
        holds = subspace_leq(V, Vt)
    elif rel is Relation.SUBSET:
        holds = subspace_leq(Vt, V)
    elif rel is Relation.EQUAL:
        holds = V == Vt
    else:
        holds = True
    return MonotonicityCheck(V, Vt, rel, holds)


@dataclass(frozen=True)
class CoexistenceReport:
    opaque_sets_exist: bool
    opaque_pair: Optional[tuple[Vec, Vec]]
    attacks_exist: bool
    certificate: Optional[AttackCertificate]
    channel_relation: Relation
    wus_system: Subspace
    wus_attacked: Subspace


def coexistence_report(sys: LtiSystem, chan: AttackChannel, k: Optional[int] = None) -> CoexistenceReport:
    k = 2 * sys.n - 1 if k is None else k
    V = wus_kernel_method(sys)
    Vt = wus_kernel_method(chan.attacked_system(sys))
    pair = (V.vectors[0], tuple(0 * x for x in V.vectors[0])) if V.dim else None
    cert = synthesize_undetectable_attack(sys, chan, k)
    return CoexistenceReport(
        opaque_sets_exist=not V.is_zero,
        opaque_pair=pair,
        attacks_exist=cert is not None and cert.nonzero,
        certificate=cert,
        channel_relation=channel_range_inclusion(chan.stacked, sys.input_matrix),
        wus_system=V,
        wus_attacked=Vt,
    )


@dataclass(frozen=True)
class TradeoffReport:
    opacity_grows: bool
    opacity_witness: Optional[Vec]
    attacks_grow: bool
    attack_witness: Optional[Vec]
    new_attack: Optional[Vec]
    shortcut: bool
    horizon: int


def square_feedthrough(chan: AttackChannel) -> bool:
    """D_t square and invertible."""
    return chan.D.nrows == chan.D.ncols and rank(chan.D) == chan.D.ncols


def opacity_growth_witness(sys: LtiSystem, X01: StateSet, X02: Finite) -> Optional[Vec]:
    """A new state x whose V-coset meets X02 somewhere other than x itself."""
    V = wus_kernel_method(sys)
    for x in X02.points:
        if member(X01, x):
            continue
        if coset_intersect(Coset(x, V), X02) != Finite(sys.n, (x,)):
            return x
    return None


def attack_growth_witness(
    sys: LtiSystem, chan: AttackChannel, X01: Finite, X02: Finite, k: int
) -> Optional[tuple[Vec, Vec]]:
    """(z, U) with z in X02 (+) -X02 and F U = -O z, where U is not undetectable under X01.

    The attacks masked by a fixed z form a coset of ker F, so two such cosets
    either coincide (same O z) or are disjoint; a new attack exists exactly
    when -O z is reachable through F and differs from every O z' for z' in
    the smaller difference body.
    """
    O = observability_matrix(sys, k)
    F = forced_response_matrix(sys, k, chan)
    old = {O.apply(z) for z in difference_body(X01).points}
    new_first = set_minus_finite(X02, X01).points
    seen = set()
    for x in new_first + X02.points:
        for xp in X02.points:
            for z in (vsub(x, xp), vsub(xp, x)):
                if z in seen:
                    continue
                seen.add(z)
                target = vneg(O.apply(z))
                if target in old:
                    continue
                U = solve(F, target)
                if U is not None:
                    return z, U
    return None


def x0_expansion_tradeoff(
    sys: LtiSystem,
    chan: AttackChannel,
    X01: StateSet,
    X02: StateSet,
    k: int,
) -> TradeoffReport:
    if not isinstance(X02, Finite):
        raise UnsupportedCombination("the enlarged initial set must be finite")
    if isinstance(X01, Finite) and not set(X01.points) <= set(X02.points):
        raise NotASubset("X01 must be contained in X02")
    x = opacity_growth_witness(sys, X01, X02)
    shortcut = square_feedthrough(chan)
    if not shortcut and not isinstance(X01, Finite):
        raise UnsupportedCombination("attack growth is decided for finite initial sets only")
    found = attack_growth_witness(sys, chan, X01, X02, k) if isinstance(X01, Finite) else None
    z, U = found if found else (None, None)
    grows = shortcut or found is not None
    return TradeoffReport(x is not None, x, grows, z, U, shortcut, k)
