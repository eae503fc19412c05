"""Discrete-time LTI systems, attack channels, and exact simulation."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ChannelRankError, DimensionMismatch
from .linalg import Mat, Vec, rank, vadd, vec, zeros


def _mat(M) -> Mat:
    return M if isinstance(M, Mat) else Mat(M)


@dataclass(frozen=True)
class LtiSystem:
    """x(k+1) = A x(k) + B u(k),  y(k) = C x(k) + D u(k).

    ``D=None`` (or an m x 0 placeholder) means no feedthrough and is stored
    as an explicit m x p zero matrix.
    """

    A: Mat
    B: Mat
    C: Mat
    D: Optional[Mat] = None

    def __post_init__(self):
        A, B, C = _mat(self.A), _mat(self.B), _mat(self.C)
        n = A.nrows
        if A.ncols != n:
            raise DimensionMismatch(f"A must be square, got {A.shape}")
        if B.nrows != n:
            raise DimensionMismatch(f"B has {B.nrows} rows, expected {n}")
        if C.ncols != n:
            raise DimensionMismatch(f"C has {C.ncols} columns, expected {n}")
        if n < 1 or B.ncols < 1 or C.nrows < 1:
            raise DimensionMismatch("n, m and p must all be at least 1")
        D = Mat.zeros(C.nrows, B.ncols) if self.D is None else _mat(self.D)
        if D.ncols == 0 and D.nrows == C.nrows:
            D = Mat.zeros(C.nrows, B.ncols)
        if D.shape != (C.nrows, B.ncols):
            raise DimensionMismatch(f"D is {D.shape}, expected {(C.nrows, B.ncols)}")
        for name, M in (("A", A), ("B", B), ("C", C), ("D", D)):
            object.__setattr__(self, name, M)

    @property
    def n(self) -> int:
        return self.A.nrows

    @property
    def m(self) -> int:
        return self.C.nrows

    @property
    def p(self) -> int:
        return self.B.ncols

    @property
    def input_matrix(self) -> Mat:
        """The stacked (n+m) x p matrix [B; D]."""
        return Mat.vstack(self.B, self.D)

    def replace(self, **changes) -> "LtiSystem":
        fields = {"A": self.A, "B": self.B, "C": self.C, "D": self.D}
        fields.update(changes)
        return LtiSystem(**fields)


@dataclass(frozen=True)
class AttackChannel:
    """Attack inputs enter through B_t (state) and D_t (output)."""

    B: Mat
    D: Mat

    def __post_init__(self):
        B, D = _mat(self.B), _mat(self.D)
        if B.ncols != D.ncols:
            raise DimensionMismatch("attack B and D must have the same column count")
        if rank(Mat.vstack(B, D)) != B.ncols:
            raise ChannelRankError("stacked attack channel [B; D] is not full column rank")
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "D", D)

    @classmethod
    def mirror(cls, sys: LtiSystem) -> "AttackChannel":
        return cls(sys.B, sys.D)

    @property
    def q(self) -> int:
        return self.B.ncols

    @property
    def stacked(self) -> Mat:
        return Mat.vstack(self.B, self.D)

    def check(self, sys: LtiSystem) -> None:
        if self.B.nrows != sys.n or self.D.nrows != sys.m:
            raise DimensionMismatch("attack channel does not match the system dimensions")

    def attacked_system(self, sys: LtiSystem) -> LtiSystem:
        """The attack model: same A and C, inputs through (B_t, D_t)."""
        self.check(sys)
        return LtiSystem(sys.A, self.B, sys.C, self.D)


def _power_products(sys: LtiSystem, k: int) -> list[Mat]:
    """[C, CA, ..., CA^k]."""
    out = [sys.C]
    for _ in range(k):
        out.append(out[-1] @ sys.A)
    return out


def observability_matrix(sys: LtiSystem, k: int) -> Mat:
    if k < 0:
        raise ValueError("horizon must be >= 0")
    return Mat.vstack(*_power_products(sys, k))


def forced_response_matrix(sys: LtiSystem, k: int, chan: Optional[AttackChannel] = None) -> Mat:
    """Block lower-triangular Toeplitz map from stacked inputs to stacked outputs."""
    if k < 0:
        raise ValueError("horizon must be >= 0")
    if chan is not None:
        sys = chan.attacked_system(sys)
    m, p = sys.m, sys.p
    markov = [sys.D] + [CAi @ sys.B for CAi in _power_products(sys, k - 1)] if k else [sys.D]
    rows = []
    for i in range(k + 1):
        blocks = [markov[i - j] if j <= i else Mat.zeros(m, p) for j in range(k + 1)]
        rows.append(Mat.hstack(*blocks))
    return Mat.vstack(*rows)


def horizon_of(U: Sequence, width: int) -> int:
    if width < 1 or len(U) % width or not U:
        raise DimensionMismatch(f"input sequence of length {len(U)} is not a stack of width-{width} blocks")
    return len(U) // width - 1


def blocks(U: Sequence, width: int) -> list[Vec]:
    U = vec(U)
    return [U[i : i + width] for i in range(0, len(U), width)]


def _run(sys: LtiSystem, x0: Sequence, steps: int, inputs) -> Vec:
    x = vec(x0)
    if len(x) != sys.n:
        raise DimensionMismatch(f"x0 has length {len(x)}, expected {sys.n}")
    ys: list = []
    for k in range(steps):
        drive_x, drive_y = inputs(k)
        ys.extend(vadd(sys.C.apply(x), drive_y))
        x = vadd(sys.A.apply(x), drive_x)
    return tuple(ys)


def simulate(sys: LtiSystem, x0: Sequence, U: Sequence) -> Vec:
    """Stacked outputs y(0..k) by forward state recursion."""
    us = blocks(U, sys.p)
    horizon_of(U, sys.p)
    return _run(sys, x0, len(us), lambda k: (sys.B.apply(us[k]), sys.D.apply(us[k])))


def simulate_attacked(
    sys: LtiSystem,
    chan: AttackChannel,
    x0: Sequence,
    attack: Sequence,
    U: Optional[Sequence] = None,
) -> Vec:
    """Outputs with attack inputs through ``chan`` on top of optional normal inputs."""
    chan.check(sys)
    k = horizon_of(attack, chan.q)
    ats = blocks(attack, chan.q)
    if U is None:
        us = [zeros(sys.p)] * (k + 1)
    else:
        if horizon_of(U, sys.p) != k:
            raise DimensionMismatch("normal and attack inputs have different horizons")
        us = blocks(U, sys.p)

    def drive(i):
        return (
            vadd(sys.B.apply(us[i]), chan.B.apply(ats[i])),
            vadd(sys.D.apply(us[i]), chan.D.apply(ats[i])),
        )

    return _run(sys, x0, k + 1, drive)


def is_observable(sys: LtiSystem) -> bool:
    return rank(observability_matrix(sys, sys.n - 1)) == sys.n
