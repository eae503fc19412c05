"""Symbolic sets of initial states and their algebra.

A set is one of a handful of variants (full space, finite point set,
subspace, affine coset, V-polytope, union, complement of a subspace, or the
Minkowski sum of a set with a subspace). Decisions reduce to exact linear
algebra or exact LP feasibility over "convex pieces": each piece is
``conv(points) + span(dirs)`` and every supported variant except the
subspace complement is a finite union of pieces.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import lp
from .errors import DimensionMismatch, UnsupportedCombination
from .linalg import (
    Mat,
    Subspace,
    Vec,
    dot,
    is_zero,
    orth_complement,
    rank,
    subspace_contains,
    subspace_intersect,
    subspace_leq,
    subspace_sum,
    vadd,
    vec,
    vneg,
    vscale,
    vsub,
    zeros,
    solve,
)


class StateSet:
    """Base class of all set variants. ``n`` is the ambient dimension."""

    n: int


def _check_dim(n: int, v: Sequence) -> None:
    if len(v) != n:
        raise DimensionMismatch(f"vector of length {len(v)} in R^{n}")


def _same_ambient(*sets: StateSet) -> None:
    if len({s.n for s in sets}) > 1:
        raise DimensionMismatch("sets live in different ambient dimensions")


@dataclass(frozen=True)
class FullSpace(StateSet):
    n: int


@dataclass(frozen=True)
class Finite(StateSet):
    n: int
    points: tuple = ()

    def __post_init__(self):
        pts = {vec(p) for p in self.points}
        for p in pts:
            _check_dim(self.n, p)
        object.__setattr__(self, "points", tuple(sorted(pts)))

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Lin(StateSet):
    space: Subspace

    @property
    def n(self) -> int:
        return self.space.n


@dataclass(frozen=True)
class Coset(StateSet):
    offset: Vec
    space: Subspace

    def __post_init__(self):
        _check_dim(self.space.n, self.offset)
        object.__setattr__(self, "offset", self.space.reduce(self.offset))

    @property
    def n(self) -> int:
        return self.space.n


@dataclass(frozen=True)
class Poly(StateSet):
    """Convex hull of a nonempty vertex list; interior points are dropped."""

    n: int
    vertices: tuple

    def __post_init__(self):
        pts = sorted({vec(v) for v in self.vertices})
        if not pts:
            raise ValueError("a polytope needs at least one vertex")
        for p in pts:
            _check_dim(self.n, p)
        kept = list(pts)
        for p in pts:
            others = [q for q in kept if q != p]
            if others and _in_hull(others, p):
                kept = others
        object.__setattr__(self, "vertices", tuple(kept))


@dataclass(frozen=True)
class Union(StateSet):
    n: int
    members: tuple

    def __post_init__(self):
        flat = []
        for m in self.members:
            if m.n != self.n:
                raise DimensionMismatch("union members differ in ambient dimension")
            flat.extend(m.members if isinstance(m, Union) else [m])
        object.__setattr__(self, "members", tuple(flat))


@dataclass(frozen=True)
class ComplementOfSubspace(StateSet):
    """R^n minus a subspace; not finitely generated, so only handled intensionally."""

    space: Subspace

    @property
    def n(self) -> int:
        return self.space.n


@dataclass(frozen=True)
class MinkowskiSum(StateSet):
    """``base (+) space`` for a base that is not itself closed under the sum."""

    base: StateSet
    space: Subspace

    def __post_init__(self):
        _same_ambient(self.base, Lin(self.space))

    @property
    def n(self) -> int:
        return self.space.n


def empty(n: int) -> Finite:
    return Finite(n, ())


def is_empty(S: StateSet) -> bool:
    if isinstance(S, Finite):
        return not S.points
    if isinstance(S, Union):
        return all(is_empty(m) for m in S.members)
    if isinstance(S, ComplementOfSubspace):
        return S.space.is_full
    if isinstance(S, MinkowskiSum):
        return is_empty(S.base)
    return False


def union_of(n: int, members: Iterable[StateSet]) -> StateSet:
    """Flattened union with empties dropped; a single member is returned as is."""
    flat: list[StateSet] = []
    for m in Union(n, tuple(members)).members:
        if not is_empty(m) and m not in flat:
            flat.append(m)
    if not flat:
        return empty(n)
    if len(flat) == 1:
        return flat[0]
    return Union(n, tuple(flat))


def segment(a: Sequence, b: Sequence) -> Poly:
    a, b = vec(a), vec(b)
    return Poly(len(a), (a, b))


# --------------------------------------------------------------------------
# convex pieces and the LPs over them


@dataclass(frozen=True)
class _Piece:
    points: tuple
    dirs: tuple

    def project(self, W: Sequence[Vec]) -> "_Piece":
        pts = tuple(tuple(dot(w, p) for w in W) for p in self.points)
        dirs = tuple(d for d in (tuple(dot(w, d) for w in W) for d in self.dirs) if not is_zero(d))
        return _Piece(pts, dirs)

    def with_dirs(self, extra: Sequence[Vec]) -> "_Piece":
        return _Piece(self.points, self.dirs + tuple(extra))


def _pieces(S: StateSet) -> list[_Piece]:
    n = S.n
    if isinstance(S, FullSpace):
        return [_Piece((zeros(n),), Mat.identity(n).rows)]
    if isinstance(S, Finite):
        return [_Piece((p,), ()) for p in S.points]
    if isinstance(S, Lin):
        return [_Piece((zeros(n),), S.space.vectors)]
    if isinstance(S, Coset):
        return [_Piece((S.offset,), S.space.vectors)]
    if isinstance(S, Poly):
        return [_Piece(S.vertices, ())]
    if isinstance(S, Union):
        return [p for m in S.members for p in _pieces(m)]
    if isinstance(S, MinkowskiSum):
        return [p.with_dirs(S.space.vectors) for p in _pieces(S.base)]
    raise UnsupportedCombination(f"{type(S).__name__} is not a finite union of convex pieces")


def _columns(piece: _Piece, sign: int = 1) -> list[Vec]:
    """LP columns for conv(points) + span(dirs): one per point, two per direction."""
    cols = [vscale(sign, p) for p in piece.points]
    for d in piece.dirs:
        cols.append(vscale(sign, d))
        cols.append(vscale(-sign, d))
    return cols


def _convexity_rows(pieces: Sequence[_Piece], ncols_tail: int = 0) -> tuple[list[list[int]], int]:
    """Rows forcing the point weights of each piece to sum to one."""
    widths = [len(p.points) + 2 * len(p.dirs) for p in pieces]
    total = sum(widths) + ncols_tail
    rows, start = [], 0
    for p, w in zip(pieces, widths):
        row = [0] * total
        for j in range(start, start + len(p.points)):
            row[j] = 1
        rows.append(row)
        start += w
    return rows, total


def _piece_contains(piece: _Piece, y: Sequence[Fraction]) -> bool:
    cols = _columns(piece)
    if not cols:
        return False
    d = len(y)
    A = [[c[i] for c in cols] for i in range(d)]
    conv, _ = _convexity_rows([piece])
    return lp.feasible_point(A + conv, list(y) + [1]) is not None


def _pieces_meet(p1: _Piece, p2: _Piece, d: int) -> bool:
    cols = _columns(p1) + _columns(p2, -1)
    A = [[c[i] for c in cols] for i in range(d)]
    conv, _ = _convexity_rows([p1, p2])
    return lp.feasible_point(A + conv, [0] * d + [1, 1]) is not None


def _segment_interval(piece: _Piece, a: Vec, b: Vec) -> Optional[tuple[Fraction, Fraction]]:
    """The closed range of t in [0,1] with a + t(b-a) inside the piece."""
    step = vsub(b, a)
    cols = _columns(piece) + [vneg(step), zeros(len(a))]
    d = len(a)
    A = [[c[i] for c in cols] for i in range(d)]
    conv, total = _convexity_rows([piece], 2)
    t_row = [0] * total
    t_row[-2] = t_row[-1] = 1
    A = A + conv + [t_row]
    rhs = list(a) + [1, 1]
    cost = [0] * total
    cost[-2] = 1
    lo = lp.linprog(cost, A, rhs)
    if lo.status != lp.OPTIMAL:
        return None
    cost[-2] = -1
    hi = lp.linprog(cost, A, rhs)
    return lo.x[-2], hi.x[-2]


def _in_hull(points: Sequence[Vec], x: Vec) -> bool:
    return _piece_contains(_Piece(tuple(points), ()), x)


def _quotient_rows(V: Subspace) -> tuple:
    return orth_complement(V).vectors


def lineality(S: StateSet) -> Subspace:
    """A subspace L with S (+) L = S, read off the representation."""
    n = S.n
    if isinstance(S, FullSpace):
        return Subspace.full(n)
    if isinstance(S, (Lin, Coset)):
        return S.space
    if isinstance(S, MinkowskiSum):
        return subspace_sum(S.space, lineality(S.base))
    if isinstance(S, Union) and S.members:
        L = lineality(S.members[0])
        for m in S.members[1:]:
            L = subspace_intersect(L, lineality(m))
        return L
    return Subspace.zero(n)


# --------------------------------------------------------------------------
# operations


def negate(S: StateSet) -> StateSet:
    if isinstance(S, (FullSpace, Lin, ComplementOfSubspace)):
        return S
    if isinstance(S, Finite):
        return Finite(S.n, tuple(vneg(p) for p in S.points))
    if isinstance(S, Coset):
        return Coset(vneg(S.offset), S.space)
    if isinstance(S, Poly):
        return Poly(S.n, tuple(vneg(v) for v in S.vertices))
    if isinstance(S, Union):
        return Union(S.n, tuple(negate(m) for m in S.members))
    if isinstance(S, MinkowskiSum):
        return MinkowskiSum(negate(S.base), S.space)
    raise TypeError(f"unknown set variant {type(S).__name__}")


def translate(S: StateSet, p: Sequence) -> StateSet:
    p = vec(p)
    _check_dim(S.n, p)
    if isinstance(S, FullSpace):
        return S
    if isinstance(S, Finite):
        return Finite(S.n, tuple(vadd(q, p) for q in S.points))
    if isinstance(S, Lin):
        return Coset(p, S.space)
    if isinstance(S, Coset):
        return Coset(vadd(S.offset, p), S.space)
    if isinstance(S, Poly):
        return Poly(S.n, tuple(vadd(v, p) for v in S.vertices))
    if isinstance(S, Union):
        return Union(S.n, tuple(translate(m, p) for m in S.members))
    if isinstance(S, MinkowskiSum):
        return MinkowskiSum(translate(S.base, p), S.space)
    raise UnsupportedCombination(f"cannot translate {type(S).__name__}")


def minkowski_with_subspace(S: StateSet, V: Subspace) -> StateSet:
    """S (+) V."""
    _same_ambient(S, Lin(V))
    if V.is_zero or isinstance(S, FullSpace) or is_empty(S):
        return S
    if isinstance(S, ComplementOfSubspace):
        # (R^n \ U) (+) V is R^n \ U when V <= U and R^n otherwise
        return S if subspace_leq(V, S.space) else FullSpace(S.n)
    if V.is_full:
        return FullSpace(S.n)
    if isinstance(S, Finite):
        return union_of(S.n, (Coset(p, V) for p in S.points))
    if isinstance(S, Lin):
        return Lin(subspace_sum(S.space, V))
    if isinstance(S, Coset):
        W = subspace_sum(S.space, V)
        return FullSpace(S.n) if W.is_full else Coset(S.offset, W)
    if isinstance(S, Poly):
        return MinkowskiSum(S, V)
    if isinstance(S, Union):
        return union_of(S.n, (minkowski_with_subspace(m, V) for m in S.members))
    if isinstance(S, MinkowskiSum):
        W = subspace_sum(S.space, V)
        return FullSpace(S.n) if W.is_full else MinkowskiSum(S.base, W)
    raise TypeError(f"unknown set variant {type(S).__name__}")


def minkowski_sum(S1: StateSet, S2: StateSet) -> StateSet:
    """S1 (+) S2 for the variants whose sums stay inside the representable family."""
    _same_ambient(S1, S2)
    n = S1.n
    if is_empty(S1) or is_empty(S2):
        return empty(n)
    if isinstance(S2, (Union, Lin, Coset, MinkowskiSum, FullSpace)) and not isinstance(
        S1, (Union, Lin, Coset, MinkowskiSum, FullSpace)
    ):
        S1, S2 = S2, S1
    if isinstance(S1, FullSpace):
        return S1
    if isinstance(S1, Union):
        return union_of(n, (minkowski_sum(m, S2) for m in S1.members))
    if isinstance(S2, Union):
        return union_of(n, (minkowski_sum(S1, m) for m in S2.members))
    if isinstance(S1, Lin):
        return minkowski_with_subspace(S2, S1.space)
    if isinstance(S1, Coset):
        return minkowski_with_subspace(translate(S2, S1.offset), S1.space)
    if isinstance(S1, MinkowskiSum):
        return minkowski_with_subspace(minkowski_sum(S1.base, S2), S1.space)
    if isinstance(S1, Finite) and isinstance(S2, Finite):
        return Finite(n, tuple(vadd(p, q) for p in S1.points for q in S2.points))
    if isinstance(S1, Poly) and isinstance(S2, Poly):
        return Poly(n, tuple(vadd(p, q) for p in S1.vertices for q in S2.vertices))
    if isinstance(S1, Poly):
        S1, S2 = S2, S1
    if isinstance(S1, Finite) and isinstance(S2, Poly):
        return union_of(n, (translate(S2, p) for p in S1.points))
    raise UnsupportedCombination(f"Minkowski sum of {type(S1).__name__} and {type(S2).__name__}")


def difference_body(S: StateSet) -> StateSet:
    """S (+) (-S)."""
    n = S.n
    if isinstance(S, (FullSpace, Lin)):
        return S
    if isinstance(S, Coset):
        return Lin(S.space)
    if isinstance(S, Finite):
        return Finite(n, tuple(vsub(p, q) for p in S.points for q in S.points))
    if isinstance(S, Poly):
        return Poly(n, tuple(vsub(p, q) for p in S.vertices for q in S.vertices))
    if isinstance(S, MinkowskiSum):
        return minkowski_with_subspace(difference_body(S.base), S.space)
    if isinstance(S, Union):
        return union_of(n, (minkowski_sum(a, negate(b)) for a in S.members for b in S.members))
    if isinstance(S, ComplementOfSubspace):
        return empty(n) if S.space.is_full else FullSpace(n)
    raise TypeError(f"unknown set variant {type(S).__name__}")


def member(S: StateSet, x: Sequence) -> bool:
    x = vec(x)
    _check_dim(S.n, x)
    if isinstance(S, FullSpace):
        return True
    if isinstance(S, Finite):
        return x in S.points
    if isinstance(S, Lin):
        return subspace_contains(S.space, x)
    if isinstance(S, Coset):
        return subspace_contains(S.space, vsub(x, S.offset))
    if isinstance(S, ComplementOfSubspace):
        return not subspace_contains(S.space, x)
    if isinstance(S, Poly):
        return _in_hull(S.vertices, x)
    if isinstance(S, Union):
        return any(member(m, x) for m in S.members)
    if isinstance(S, MinkowskiSum):
        W = _quotient_rows(S.space)
        y = tuple(dot(w, x) for w in W)
        return any(_piece_contains(p.project(W), y) for p in _pieces(S.base))
    raise TypeError(f"unknown set variant {type(S).__name__}")


def set_minus_finite(A: Finite, B: Finite) -> Finite:
    _same_ambient(A, B)
    drop = set(B.points)
    return Finite(A.n, tuple(p for p in A.points if p not in drop))


def _affine_meet(p: Vec, U: Subspace, q: Vec, W: Subspace) -> StateSet:
    """(p + U) intersected with (q + W)."""
    n = U.n
    M = Mat.hstack(U.basis, -W.basis) if (U.dim or W.dim) else Mat.zeros(n, 0)
    if M.ncols == 0:
        return Finite(n, (p,)) if p == q else empty(n)
    sol = solve(M, vsub(q, p))
    if sol is None:
        return empty(n)
    point = vadd(p, U.basis.apply(sol[: U.dim])) if U.dim else p
    common = subspace_intersect(U, W)
    if common.is_zero:
        return Finite(n, (point,))
    return FullSpace(n) if common.is_full else Coset(point, common)


def coset_intersect(C: Coset, S: StateSet) -> StateSet:
    _same_ambient(C, S)
    n = C.n
    if isinstance(S, FullSpace):
        return C
    if isinstance(S, Finite):
        return Finite(n, tuple(p for p in S.points if member(C, p)))
    if isinstance(S, Lin):
        return _affine_meet(C.offset, C.space, zeros(n), S.space)
    if isinstance(S, Coset):
        return _affine_meet(C.offset, C.space, S.offset, S.space)
    if isinstance(S, Union):
        return union_of(n, (coset_intersect(C, m) for m in S.members))
    if isinstance(S, Poly):
        if C.space.is_full:
            return S
        if C.space.is_zero:
            return Finite(n, (C.offset,)) if member(S, C.offset) else empty(n)
        if C.space.dim == 1:
            return _line_poly_meet(C.offset, C.space.vectors[0], S)
    raise UnsupportedCombination(f"coset intersected with {type(S).__name__}")


def _line_poly_meet(p: Vec, w: Vec, P: Poly) -> StateSet:
    """{p + t w} intersected with conv(P), via exact min/max of t."""
    n = P.n
    cols = list(P.vertices) + [vneg(w), w]
    A = [[c[i] for c in cols] for i in range(n)]
    A.append([1] * len(P.vertices) + [0, 0])
    rhs = list(p) + [1]
    cost = [0] * len(P.vertices) + [1, -1]
    lo = lp.linprog(cost, A, rhs)
    if lo.status == lp.INFEASIBLE:
        return empty(n)
    hi = lp.linprog([-c for c in cost], A, rhs)
    tlo, thi = lo.value, -hi.value
    a, b = vadd(p, vscale(tlo, w)), vadd(p, vscale(thi, w))
    return Finite(n, (a,)) if a == b else Poly(n, (a, b))


# --------------------------------------------------------------------------
# containment


def contains_set(A: StateSet, B: StateSet) -> bool:
    """True iff every point of B lies in A."""
    return uncovered_point(A, B) is None


def uncovered_point(A: StateSet, B: StateSet):
    """A point of B outside A, or None when B is contained in A.

    For unbounded B whose escape point cannot be named, returns a best-effort
    point; raises UnsupportedCombination outside the decidable fragment.
    """
    _same_ambient(A, B)
    if is_empty(B):
        return None
    if isinstance(B, Finite):
        return next((p for p in B.points if not member(A, p)), None)
    if isinstance(B, Union):
        for m in B.members:
            bad = uncovered_point(A, m)
            if bad is not None:
                return bad
        return None
    if isinstance(A, FullSpace):
        return None
    if isinstance(B, Poly):
        return _uncovered_poly(A, B)
    if isinstance(B, ComplementOfSubspace):
        return _uncovered_complement(A, B)
    return _uncovered_affine(A, B)


def _uncovered_poly(A: StateSet, B: Poly):
    L = lineality(A)
    W = _quotient_rows(L)
    pieces = [p.project(W) for p in _pieces(A)]
    if len(pieces) == 1:
        return next((v for v in B.vertices if not member(A, v)), None)
    proj = [tuple(dot(w, v) for w in W) for v in B.vertices]
    diffs = [vsub(q, proj[0]) for q in proj[1:]]
    adim = rank(Mat(diffs, len(W))) if diffs else 0
    if adim == 0:
        return None if any(_piece_contains(p, proj[0]) for p in pieces) else B.vertices[0]
    if adim == 1:
        direction = next(d for d in diffs if not is_zero(d))
        s = [dot(direction, q) for q in proj]
        a = B.vertices[s.index(min(s))]
        b = B.vertices[s.index(max(s))]
        pa, pb = tuple(dot(w, a) for w in W), tuple(dot(w, b) for w in W)
        spans = [iv for iv in (_segment_interval(p, pa, pb) for p in pieces) if iv is not None]
        t = _first_gap(spans)
        return None if t is None else vadd(a, vscale(t, vsub(b, a)))
    if adim == 2 and len(W) == 2:
        c = _uncovered_planar(proj, pieces)
        if c is None:
            return None
        lam = lp.feasible_point(
            [[q[i] for q in proj] for i in range(2)] + [[1] * len(proj)], list(c) + [1]
        )
        return tuple(sum((l * v[i] for l, v in zip(lam, B.vertices)), Fraction(0)) for i in range(B.n))
    raise UnsupportedCombination(
        f"polytope containment in a union needs quotient dimension <= 2 (got {len(W)})"
    )


def _first_gap(spans: list[tuple[Fraction, Fraction]]) -> Optional[Fraction]:
    """Smallest uncovered parameter in [0,1] given closed covering intervals."""
    if not spans:
        return Fraction(0)
    spans = sorted(spans)
    if spans[0][0] > 0:
        return Fraction(0)
    reach = spans[0][1]
    for lo, hi in spans[1:]:
        if lo > reach:
            return (reach + lo) / 2
        reach = max(reach, hi)
    return None if reach >= 1 else (reach + 1) / 2


def _hull2d(points: Sequence[Vec]) -> list[Vec]:
    """Counter-clockwise convex hull (monotone chain), collinear points removed."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[Vec] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Vec] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _area2(poly: Sequence[Vec]) -> Fraction:
    return sum(
        (poly[i][0] * poly[(i + 1) % len(poly)][1] - poly[(i + 1) % len(poly)][0] * poly[i][1]
         for i in range(len(poly))),
        Fraction(0),
    )


def _clip(poly: list[Vec], normal: Vec, c: Fraction, keep_le: bool) -> list[Vec]:
    def inside(p):
        v = dot(normal, p) - c
        return v <= 0 if keep_le else v >= 0

    out: list[Vec] = []
    for i, cur in enumerate(poly):
        prev = poly[i - 1]
        if inside(cur):
            if not inside(prev):
                out.append(_cut(prev, cur, normal, c))
            out.append(cur)
        elif inside(prev):
            out.append(_cut(prev, cur, normal, c))
    return out


def _cut(p: Vec, q: Vec, normal: Vec, c: Fraction) -> Vec:
    fp, fq = dot(normal, p) - c, dot(normal, q) - c
    t = fp / (fp - fq)
    return vadd(p, vscale(t, vsub(q, p)))


def _boundary_lines(piece: _Piece) -> Optional[list[tuple[Vec, Fraction]]]:
    """Supporting lines of a full-dimensional planar piece; None if it is degenerate."""
    r = rank(Mat(piece.dirs, 2)) if piece.dirs else 0
    if r == 2:
        return []
    if r == 1:
        w = piece.dirs[0]
        normal = (-w[1], w[0])
        vals = [dot(normal, p) for p in piece.points]
        if min(vals) == max(vals):
            return None
        return [(normal, min(vals)), (normal, max(vals))]
    hull = _hull2d(piece.points)
    if len(hull) < 3:
        return None
    lines = []
    for i, p in enumerate(hull):
        q = hull[(i + 1) % len(hull)]
        normal = (q[1] - p[1], p[0] - q[0])
        lines.append((normal, dot(normal, p)))
    return lines


def _uncovered_planar(proj: Sequence[Vec], pieces: Sequence[_Piece]) -> Optional[Vec]:
    """Split the planar polygon along every piece boundary and test each cell's centroid."""
    solid = []
    lines: list[tuple[Vec, Fraction]] = []
    for p in pieces:
        bl = _boundary_lines(p)
        if bl is None:
            continue
        if not bl:
            return None
        solid.append(p)
        lines.extend(bl)
    cells = [_hull2d(proj)]
    for normal, c in lines:
        nxt = []
        for cell in cells:
            for keep_le in (True, False):
                part = _clip(cell, normal, c, keep_le)
                if len(part) >= 3 and _area2(part) != 0:
                    nxt.append(part)
        cells = nxt
    for cell in cells:
        centroid = tuple(sum((v[i] for v in cell), Fraction(0)) / len(cell) for i in range(2))
        if not any(_piece_contains(p, centroid) for p in solid):
            return centroid
    return None


def _uncovered_affine(A: StateSet, B: StateSet):
    """B is Lin, Coset, FullSpace or MinkowskiSum; A is not FullSpace."""
    n = B.n
    if isinstance(B, FullSpace):
        U, base = Subspace.full(n), Finite(n, (zeros(n),))
    elif isinstance(B, Lin):
        U, base = B.space, Finite(n, (zeros(n),))
    elif isinstance(B, Coset):
        U, base = B.space, Finite(n, (B.offset,))
    elif isinstance(B, MinkowskiSum):
        U, base = B.space, B.base
    else:
        raise TypeError(f"unknown set variant {type(B).__name__}")
    if isinstance(A, ComplementOfSubspace):
        if isinstance(base, Finite) and len(base.points) == 1:
            hit = _affine_meet(base.points[0], U, zeros(n), A.space)
            return None if is_empty(hit) else _some_point(hit)
        raise UnsupportedCombination("Minkowski sum inside a subspace complement")
    L = lineality(A)
    if subspace_leq(U, L):
        return uncovered_point(A, base)
    pieces = _pieces(A)
    p0 = _some_point(base)
    for u in U.vectors:
        if subspace_contains(L, u):
            continue
        if all(not subspace_contains(Subspace(n, p.dirs), u) for p in pieces):
            # every piece meets the line p0 + t u in a bounded set
            t = Fraction(1)
            while member(A, vadd(p0, vscale(t, u))):
                t *= 2
            return vadd(p0, vscale(t, u))
    members = A.members if isinstance(A, Union) else (A,)
    if len(members) > 1 and any(uncovered_point(m, B) is None for m in members):
        return None
    raise UnsupportedCombination("unbounded set against a union with differing directions")


def _some_point(S: StateSet) -> Vec:
    if isinstance(S, Finite):
        return S.points[0]
    if isinstance(S, Poly):
        return S.vertices[0]
    if isinstance(S, Coset):
        return S.offset
    if isinstance(S, Union):
        return _some_point(S.members[0])
    if isinstance(S, MinkowskiSum):
        return _some_point(S.base)
    return zeros(S.n)


def _uncovered_complement(A: StateSet, B: ComplementOfSubspace):
    U = B.space
    if U.is_full:
        return None
    n = B.n
    if isinstance(A, ComplementOfSubspace):
        # R^n \ U lies in R^n \ U_A exactly when U_A <= U
        return next((v for v in A.space.vectors if not subspace_contains(U, v)), None)
    if isinstance(A, (Lin, Coset, MinkowskiSum)):
        if A.space.is_full:
            return None
        # A is a proper subset bounded modulo its lineality; scaled axis points escape
        for i in range(n):
            for j in range(n):
                e = [Fraction(0)] * n
                e[i] += 1
                e[j] += 1
                t = Fraction(1)
                for _ in range(64):
                    x = tuple(t * c for c in e)
                    if member(B, x) and not member(A, x):
                        return x
                    t *= 2
        raise UnsupportedCombination("could not exhibit a point of the complement outside the set")
    raise UnsupportedCombination(f"complement of a subspace inside {type(A).__name__}")
