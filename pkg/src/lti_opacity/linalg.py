"""Exact rational matrices and the subspace lattice.

Every entry is a :class:`fractions.Fraction`; nothing in this module ever
rounds. Subspaces are stored in a canonical form (the nonzero rows of the
reduced row echelon form of any spanning set, i.e. the transpose of the
reduced column echelon basis), so two subspaces are equal exactly when their
stored vectors are equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch

Vec = tuple  # tuple[Fraction, ...]


def to_rat(x) -> Fraction:
    """Parse ints, decimals, floats and ``"p/q"`` strings to an exact rational.

    Floats go through their shortest repr, so ``0.5`` and ``0.1`` become
    ``1/2`` and ``1/10`` rather than the binary expansion.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(repr(x))
    if isinstance(x, Decimal):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def vec(xs: Iterable) -> Vec:
    return tuple(to_rat(x) for x in xs)


def zeros(n: int) -> Vec:
    return (Fraction(0),) * n


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Vec) -> Vec:
    return tuple(c * a for a in v)


def vneg(v: Vec) -> Vec:
    return tuple(-a for a in v)


def fmt_rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Mat:
    """Immutable dense matrix of rationals, stored row-major."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: Optional[int] = None):
        rows = tuple(vec(r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged matrix rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Mat":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "Mat":
        return cls([[c[i] for c in cols] for i in range(nrows)], len(cols))

    @staticmethod
    def hstack(*mats: "Mat") -> "Mat":
        nrows = mats[0].nrows
        if any(m.nrows != nrows for m in mats):
            raise DimensionMismatch("hstack of matrices with different row counts")
        rows = [sum((m.rows[i] for m in mats), ()) for i in range(nrows)]
        return Mat(rows, sum(m.ncols for m in mats))

    @staticmethod
    def vstack(*mats: "Mat") -> "Mat":
        ncols = mats[0].ncols
        if any(m.ncols != ncols for m in mats):
            raise DimensionMismatch("vstack of matrices with different column counts")
        return Mat([r for m in mats for r in m.rows], ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def T(self) -> "Mat":
        return Mat(self.columns(), self.nrows)

    def columns(self) -> list[Vec]:
        return [tuple(r[j] for r in self.rows) for j in range(self.ncols)]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def apply(self, v: Sequence) -> Vec:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.nrows}x{self.ncols} matrix")
        return tuple(dot(r, v) for r in self.rows)

    def __matmul__(self, other):
        if isinstance(other, Mat):
            if other.ncols == 0:
                return Mat([[] for _ in range(self.nrows)], 0)
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            return Mat([[dot(r, c) for c in cols] for r in self.rows], other.ncols)
        return self.apply(other)

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise DimensionMismatch("shape mismatch in addition")
        return Mat([vadd(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise DimensionMismatch("shape mismatch in subtraction")
        return Mat([vsub(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self) -> "Mat":
        return Mat([vneg(r) for r in self.rows], self.ncols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(fmt_rat(x) for x in r) for r in self.rows)
        return f"Mat({self.nrows}x{self.ncols}: [{body}])"

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Gauss-Jordan elimination. Returns the nonzero reduced rows and pivot columns."""
    R = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(R):
            break
        piv = next((i for i in range(r, len(R)) if R[i][c] != 0), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(M: Mat) -> int:
    return len(rref(M.rows, M.ncols)[1])


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n held in canonical (reduced echelon) form."""

    n: int
    vectors: tuple = ()

    def __post_init__(self):
        vs = [vec(v) for v in self.vectors]
        if any(len(v) != self.n for v in vs):
            raise DimensionMismatch(f"spanning vector not in R^{self.n}")
        R, piv = rref(vs, self.n)
        object.__setattr__(self, "vectors", tuple(tuple(r) for r in R))
        object.__setattr__(self, "_pivots", tuple(piv))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Mat.identity(n).rows)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def is_zero(self) -> bool:
        return not self.vectors

    @property
    def is_full(self) -> bool:
        return self.dim == self.n

    @property
    def basis(self) -> Mat:
        """The n x d basis matrix in reduced column echelon form."""
        return Mat.from_columns(self.vectors, self.n)

    def reduce(self, v: Sequence[Fraction]) -> Vec:
        """Canonical coset representative: v with its pivot coordinates eliminated."""
        w = list(vec(v))
        for row, p in zip(self.vectors, self._pivots):
            if w[p] != 0:
                f = w[p]
                w = [a - f * b for a, b in zip(w, row)]
        return tuple(w)

    def __contains__(self, v) -> bool:
        return subspace_contains(self, v)

    def __repr__(self) -> str:
        if self.is_zero:
            return f"Subspace(R^{self.n}: 0)"
        vs = ", ".join("[" + ",".join(fmt_rat(x) for x in v) + "]" for v in self.vectors)
        return f"Subspace(R^{self.n}: span{{{vs}}})"


def kernel(M: Mat) -> Subspace:
    R, pivots = rref(M.rows, M.ncols)
    free = [c for c in range(M.ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * M.ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return Subspace(M.ncols, basis)


def image(M: Mat) -> Subspace:
    return Subspace(M.nrows, M.columns())


def solve(M: Mat, b: Sequence) -> Optional[Vec]:
    """One exact solution of ``M x = b``, or ``None`` when inconsistent.

    Free variables are set to zero, so the result is deterministic.
    """
    b = vec(b)
    if len(b) != M.nrows:
        raise DimensionMismatch(f"rhs of length {len(b)} for {M.nrows} equations")
    aug = [r + (bi,) for r, bi in zip(M.rows, b)]
    R, pivots = rref(aug, M.ncols + 1)
    if pivots and pivots[-1] == M.ncols:
        return None
    x = [Fraction(0)] * M.ncols
    for row, p in zip(R, pivots):
        x[p] = row[-1]
    return tuple(x)


def _check_same(S1: Subspace, S2: Subspace) -> None:
    if S1.n != S2.n:
        raise DimensionMismatch(f"subspaces of R^{S1.n} and R^{S2.n}")


def subspace_sum(S1: Subspace, S2: Subspace) -> Subspace:
    _check_same(S1, S2)
    return Subspace(S1.n, S1.vectors + S2.vectors)


def orth_complement(S: Subspace) -> Subspace:
    if S.is_zero:
        return Subspace.full(S.n)
    return kernel(Mat(S.vectors, S.n))


def subspace_intersect(S1: Subspace, S2: Subspace) -> Subspace:
    _check_same(S1, S2)
    return orth_complement(subspace_sum(orth_complement(S1), orth_complement(S2)))


def subspace_leq(S1: Subspace, S2: Subspace) -> bool:
    """Inclusion S1 <= S2."""
    _check_same(S1, S2)
    return subspace_sum(S1, S2).dim == S2.dim


def subspace_contains(S: Subspace, v: Sequence) -> bool:
    if len(v) != S.n:
        raise DimensionMismatch(f"vector of length {len(v)} against R^{S.n}")
    return is_zero(S.reduce(v))


def quotient_coords(S: Subspace, v: Sequence) -> Vec:
    """W^T v with W the canonical basis of S's orthogonal complement."""
    if len(v) != S.n:
        raise DimensionMismatch(f"vector of length {len(v)} against R^{S.n}")
    return tuple(dot(w, v) for w in orth_complement(S).vectors)
