"""Opacity decisions for single states and for sets of initial states.

A secret state x_s is opaque with respect to a non-secret x_ns exactly when
x_s - x_ns lies in the weakly unobservable subspace V; every set-level
question below reduces to that membership.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DimensionMismatch, NoExtension, NotStronglyOpaque, UnsupportedCombination
from .linalg import Subspace, Vec, orth_complement, subspace_contains, subspace_leq, vec, vsub
from .lti import LtiSystem, simulate
from .sets import (
    ComplementOfSubspace,
    Finite,
    Lin,
    StateSet,
    _pieces,
    _pieces_meet,
    _quotient_rows,
    is_empty,
    minkowski_with_subspace,
    uncovered_point,
)
from .wus import wus_kernel_method, zeroing_input


@dataclass(frozen=True)
class OpacityWitness:
    """Evidence that x_ns masks x_s: ``zeroing`` drives the difference state to zero output."""

    x_ns: Vec
    delta: Vec
    zeroing: Vec
    horizon: int

    def masking_input(self, U_s: Sequence) -> Vec:
        """The non-secret input reproducing the secret run's outputs."""
        return vsub(vec(U_s), self.zeroing)


@dataclass(frozen=True)
class OpacityVerdict:
    opaque: bool
    witness: Optional[OpacityWitness] = None
    failing_state: Optional[Vec] = None

    def __bool__(self) -> bool:
        return self.opaque


def _witness(sys: LtiSystem, x_s: Vec, x_ns: Vec) -> OpacityWitness:
    delta = vsub(x_s, x_ns)
    k = 2 * sys.n - 1
    U = zeroing_input(sys, delta, k)
    assert U is not None, "difference in V(sys) must admit a zeroing input"
    return OpacityWitness(x_ns, delta, U, k)


def is_state_opaque(sys: LtiSystem, x_s: Sequence, x_ns: Sequence) -> OpacityVerdict:
    x_s, x_ns = vec(x_s), vec(x_ns)
    if len(x_s) != sys.n or len(x_ns) != sys.n:
        raise DimensionMismatch("states must live in R^n")
    if x_s == x_ns:
        raise ValueError("secret and non-secret states must differ")
    if not subspace_contains(wus_kernel_method(sys), vsub(x_s, x_ns)):
        return OpacityVerdict(False)
    return OpacityVerdict(True, _witness(sys, x_s, x_ns))


def opaque_partner_coset(sys: LtiSystem, x: Sequence) -> StateSet:
    """x (+) V: every non-secret partner that can make x opaque (x itself included)."""
    x = vec(x)
    return minkowski_with_subspace(Finite(sys.n, (x,)), wus_kernel_method(sys))


def _check_disjoint(Xs: StateSet, Xns: StateSet) -> None:
    if isinstance(Xs, Finite) and isinstance(Xns, Finite):
        if set(Xs.points) & set(Xns.points):
            raise ValueError("secret and non-secret sets must be disjoint")


def is_weakly_opaque(sys: LtiSystem, Xs: StateSet, Xns: StateSet) -> OpacityVerdict:
    """Some secret state has a non-secret partner in its V-coset."""
    if is_empty(Xs) or is_empty(Xns):
        raise ValueError("secret and non-secret sets must be nonempty")
    _check_disjoint(Xs, Xns)
    V = wus_kernel_method(sys)
    if isinstance(Xs, Finite) and isinstance(Xns, Finite):
        for xs in Xs.points:
            for xns in Xns.points:
                if subspace_contains(V, vsub(xs, xns)):
                    return OpacityVerdict(True, _witness(sys, xs, xns))
        return OpacityVerdict(False)
    if isinstance(Xs, ComplementOfSubspace):
        # Xs meets Xns (+) V unless every piece of Xns (+) V sits inside the removed subspace
        inside = all(
            all(subspace_contains(Xs.space, p) for p in piece.points)
            and all(subspace_contains(Xs.space, d) for d in piece.dirs)
            for piece in _pieces(minkowski_with_subspace(Xns, V))
        )
        return OpacityVerdict(not inside)
    W = _quotient_rows(V)
    for ps in _pieces(Xs):
        for pn in _pieces(Xns):
            if _pieces_meet(ps.project(W), pn.project(W), len(W)):
                return OpacityVerdict(True)
    return OpacityVerdict(False)


def is_strongly_opaque(sys: LtiSystem, Xs: StateSet, Xns: StateSet) -> OpacityVerdict:
    """Every secret state lies in Xns (+) V."""
    if is_empty(Xns):
        raise ValueError("non-secret set must be nonempty")
    _check_disjoint(Xs, Xns)
    V = wus_kernel_method(sys)
    bad = uncovered_point(minkowski_with_subspace(Xns, V), Xs)
    if bad is not None:
        return OpacityVerdict(False, failing_state=bad)
    return OpacityVerdict(True)


def largest_opaque_set(sys: LtiSystem) -> tuple[StateSet, StateSet]:
    """(Xs, Xns) = (R^n minus V-perp, V-perp), maximal for X0 = R^n."""
    perp = orth_complement(wus_kernel_method(sys))
    return ComplementOfSubspace(perp), Lin(perp)


class Relation(enum.Enum):
    SUBSET = "strict-subset"
    EQUAL = "equal"
    SUPERSET = "strict-superset"
    INCOMPARABLE = "incomparable"


def subspace_relation(S1: Subspace, S2: Subspace) -> Relation:
    le, ge = subspace_leq(S1, S2), subspace_leq(S2, S1)
    if le and ge:
        return Relation.EQUAL
    if le:
        return Relation.SUBSET
    if ge:
        return Relation.SUPERSET
    return Relation.INCOMPARABLE


@dataclass(frozen=True)
class CapacityComparison:
    relation: Relation
    wus1: Subspace
    wus2: Subspace

    @property
    def second_hosts_more_opaque_sets(self) -> bool:
        return self.relation is Relation.SUBSET


def opacity_capacity_compare(sys1: LtiSystem, sys2: LtiSystem) -> CapacityComparison:
    if sys1.n != sys2.n:
        raise DimensionMismatch("systems have different state dimensions")
    V1, V2 = wus_kernel_method(sys1), wus_kernel_method(sys2)
    return CapacityComparison(subspace_relation(V1, V2), V1, V2)


def extend_opaque_set(sys2: LtiSystem, Xs1: Finite, Xns1: Finite) -> tuple[Finite, Finite]:
    """Relabel one non-secret state as secret, keeping strong opacity under ``sys2``.

    Candidates are scanned in lexicographic order; the first relabelling whose
    result is strongly opaque wins. Raises NoExtension when none works.
    """
    if not isinstance(Xs1, Finite) or not isinstance(Xns1, Finite):
        raise UnsupportedCombination("extension is defined for finite sets only")
    if Xs1.points and not is_strongly_opaque(sys2, Xs1, Xns1):
        raise NotStronglyOpaque("input sets are not strongly opaque under the target system")
    V = wus_kernel_method(sys2)
    everything = Xs1.points + Xns1.points
    for x in Xns1.points:
        partners = [y for y in everything if y != x and subspace_contains(V, vsub(y, x))]
        if not partners:
            continue
        Xs2 = Finite(sys2.n, Xs1.points + (x,))
        Xns2 = Finite(sys2.n, tuple(p for p in Xns1.points if p != x))
        if Xns2.points and is_strongly_opaque(sys2, Xs2, Xns2):
            return Xs2, Xns2
    raise NoExtension("no non-secret state can be relabelled as an opaque secret")


def replay_outputs(sys: LtiSystem, x_s: Sequence, witness: OpacityWitness, U_s: Sequence) -> tuple[Vec, Vec]:
    """Outputs of the secret run and of the masking non-secret run."""
    return simulate(sys, x_s, U_s), simulate(sys, witness.x_ns, witness.masking_input(U_s))
