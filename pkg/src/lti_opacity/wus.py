"""The weakly unobservable subspace, computed two independent ways."""
from __future__ import annotations

from typing import Optional, Sequence

from .errors import DimensionMismatch
from .linalg import (
    Mat,
    Subspace,
    Vec,
    image,
    kernel,
    orth_complement,
    solve,
    subspace_sum,
    vec,
    vneg,
)
from .lti import LtiSystem, forced_response_matrix, observability_matrix


def wus_kernel_method(sys: LtiSystem) -> Subspace:
    """States x with O_{n-1} x + F_{n-1} U = 0 for some U: project ker [O | F] onto x."""
    k = sys.n - 1
    K = kernel(Mat.hstack(observability_matrix(sys, k), forced_response_matrix(sys, k)))
    return Subspace(sys.n, [v[: sys.n] for v in K.vectors])


def wus_chain(sys: LtiSystem) -> list[Subspace]:
    """The non-increasing chain V_0 = R^n, V_{k+1} = {x : [A;C] x in (V_k x 0) + R([B;D])}.

    Ends with the first repeated element, so the last entry is the fixed point.
    """
    n, m = sys.n, sys.m
    AC = Mat.vstack(sys.A, sys.C)
    inputs = image(sys.input_matrix)
    chain = [Subspace.full(n)]
    while True:
        lifted = Subspace(n + m, [v + (0,) * m for v in chain[-1].vectors])
        target = subspace_sum(lifted, inputs)
        Q = orth_complement(target)
        nxt = kernel(Mat(Q.vectors, n + m) @ AC) if Q.dim else Subspace.full(n)
        chain.append(nxt)
        if nxt == chain[-2]:
            return chain


def wus_recursive(sys: LtiSystem) -> Subspace:
    return wus_chain(sys)[-1]


def zeroing_input(sys: LtiSystem, x0: Sequence, k: int) -> Optional[Vec]:
    """A stacked input U with O_k x0 + F_k U = 0, or None if none exists."""
    x0 = vec(x0)
    if len(x0) != sys.n:
        raise DimensionMismatch(f"x0 has length {len(x0)}, expected {sys.n}")
    rhs = vneg(observability_matrix(sys, k).apply(x0))
    return solve(forced_response_matrix(sys, k), rhs)


def wus_complement(sys: LtiSystem) -> Subspace:
    return orth_complement(wus_kernel_method(sys))
