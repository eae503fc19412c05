"""Exact two-phase simplex over the rationals.

Problems are in standard form: minimise ``c.x`` subject to ``A x = b`` and
``x >= 0``. Pivoting follows Bland's rule (lowest-index entering column,
lowest-index leaving basic variable on ties), which cannot cycle, and all
arithmetic is done in :class:`fractions.Fraction`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: Optional[tuple] = None
    value: Optional[Fraction] = None


def _pivot(T: list[list[Fraction]], r: int, c: int) -> None:
    inv = 1 / T[r][c]
    T[r] = [v * inv for v in T[r]]
    pr = T[r]
    for i, row in enumerate(T):
        if i != r and row[c] != 0:
            f = row[c]
            T[i] = [a - f * b for a, b in zip(row, pr)]


def _run(T, basis, cost, allowed) -> str:
    m = len(T)
    while True:
        in_basis = set(basis)
        entering = None
        for j in allowed:
            if j in in_basis:
                continue
            rc = cost[j] - sum((cost[basis[i]] * T[i][j] for i in range(m)), Fraction(0))
            if rc < 0:
                entering = j
                break
        if entering is None:
            return OPTIMAL
        leave = None
        for i in range(m):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][-1] / a
                if leave is None or ratio < leave[0] or (ratio == leave[0] and basis[i] < basis[leave[1]]):
                    leave = (ratio, i)
        if leave is None:
            return UNBOUNDED
        _pivot(T, leave[1], entering)
        basis[leave[1]] = entering


def linprog(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Minimise ``c.x`` over ``{x >= 0 : A x = b}``; ``c=None`` means feasibility only."""
    nvar = len(A[0]) if A else (len(c) if c is not None else 0)
    m = len(A)
    T: list[list[Fraction]] = []
    for r, (row, bi) in enumerate(zip(A, b)):
        row = [Fraction(v) for v in row]
        bi = Fraction(bi)
        if bi < 0:
            row, bi = [-v for v in row], -bi
        T.append(row + [Fraction(int(i == r)) for i in range(m)] + [bi])
    basis = [nvar + i for i in range(m)]
    phase1 = [Fraction(0)] * nvar + [Fraction(1)] * m
    _run(T, basis, phase1, range(nvar + m))
    if sum((T[i][-1] for i in range(m) if basis[i] >= nvar), Fraction(0)) != 0:
        return LPResult(INFEASIBLE)
    # drive remaining (zero-valued) artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(T):
        if basis[i] >= nvar:
            j = next((j for j in range(nvar) if T[i][j] != 0), None)
            if j is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, i, j)
            basis[i] = j
        i += 1
    T = [row[:nvar] + [row[-1]] for row in T]
    cost = [Fraction(v) for v in c] if c is not None else [Fraction(0)] * nvar
    status = _run(T, basis, cost, range(nvar))
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * nvar
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    value = sum((ci * xi for ci, xi in zip(cost, x)), Fraction(0))
    return LPResult(OPTIMAL, tuple(x), value)


def feasible_point(A: Sequence[Sequence], b: Sequence) -> Optional[tuple]:
    """Some ``x >= 0`` with ``A x = b``, or ``None``."""
    res = linprog(None, A, b)
    return res.x if res.status == OPTIMAL else None
