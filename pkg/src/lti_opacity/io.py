"""JSON encoding of rationals, matrices, state sets and model files.

Rationals are written as plain integers when integral and as ``"p/q"``
strings otherwise; on input any integer, decimal number or ``"p/q"``/decimal
string is accepted and parsed exactly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from .errors import AnalysisError, ChannelRankError, DimensionMismatch
from .linalg import Mat, Subspace, fmt_rat, vec
from .lti import AttackChannel, LtiSystem
from .sets import (
    ComplementOfSubspace,
    Coset,
    Finite,
    FullSpace,
    Lin,
    MinkowskiSum,
    Poly,
    StateSet,
    Union,
)


class ModelError(AnalysisError):
    """Malformed model file. ``exit_code`` distinguishes the failure class."""

    exit_code = 2


class ModelDimensionError(ModelError):
    exit_code = 4


class ModelRankError(ModelError):
    exit_code = 5


def rat_json(x: Fraction):
    return x.numerator if x.denominator == 1 else fmt_rat(x)


def vec_json(v) -> list:
    return [rat_json(x) for x in v]


def mat_json(M: Mat) -> list:
    return [vec_json(r) for r in M.rows]


def subspace_json(S: Subspace) -> dict:
    return {"dim": S.n, "basis": [vec_json(v) for v in S.vectors]}


def set_json(S: StateSet) -> dict:
    if isinstance(S, FullSpace):
        return {"kind": "fullspace", "dim": S.n}
    if isinstance(S, Finite):
        return {"kind": "finite", "dim": S.n, "points": [vec_json(p) for p in S.points]}
    if isinstance(S, Lin):
        return {"kind": "subspace", **subspace_json(S.space)}
    if isinstance(S, Coset):
        return {"kind": "coset", "offset": vec_json(S.offset), **subspace_json(S.space)}
    if isinstance(S, Poly):
        return {"kind": "poly", "dim": S.n, "vertices": [vec_json(v) for v in S.vertices]}
    if isinstance(S, Union):
        return {"kind": "union", "dim": S.n, "members": [set_json(m) for m in S.members]}
    if isinstance(S, ComplementOfSubspace):
        return {"kind": "complement", **subspace_json(S.space)}
    if isinstance(S, MinkowskiSum):
        return {"kind": "minkowski", "base": set_json(S.base), **subspace_json(S.space)}
    raise TypeError(f"unknown set variant {type(S).__name__}")


def _vec_in(x, n: Optional[int] = None):
    v = vec(x)
    if n is not None and len(v) != n:
        raise ModelDimensionError(f"vector {x!r} is not in R^{n}")
    return v


def _subspace_in(d: dict, n: int) -> Subspace:
    n = d.get("dim", n)
    return Subspace(n, [_vec_in(v, n) for v in d.get("basis", [])])


def set_from_json(d: dict, n: Optional[int] = None) -> StateSet:
    kind = d.get("kind")
    n = d.get("dim", n)
    if kind == "fullspace":
        return FullSpace(n)
    if kind == "finite":
        pts = [_vec_in(p, n) for p in d["points"]]
        return Finite(n if n is not None else len(pts[0]), pts)
    if kind == "subspace":
        return Lin(_subspace_in(d, n))
    if kind == "coset":
        off = _vec_in(d["offset"], n)
        return Coset(off, _subspace_in(d, len(off)))
    if kind == "poly":
        verts = [_vec_in(v, n) for v in d["vertices"]]
        return Poly(n if n is not None else len(verts[0]), verts)
    if kind == "union":
        members = [set_from_json(m, n) for m in d["members"]]
        return Union(n if n is not None else members[0].n, tuple(members))
    if kind == "complement":
        return ComplementOfSubspace(_subspace_in(d, n))
    if kind == "minkowski":
        base = set_from_json(d["base"], n)
        return MinkowskiSum(base, _subspace_in(d, base.n))
    raise ModelError(f"unknown set kind {kind!r}")


@dataclass
class Model:
    system: LtiSystem
    channel: Optional[AttackChannel] = None
    sets: dict = field(default_factory=dict)
    name: str = ""

    @property
    def attack_channel(self) -> AttackChannel:
        """The declared channel, or one mirroring (B, D)."""
        return self.channel if self.channel is not None else AttackChannel.mirror(self.system)


def model_from_dict(data: dict) -> Model:
    if not isinstance(data, dict):
        raise ModelError("model must be a JSON object")
    try:
        A = Mat(data["A"])
        B = Mat(data["B"])
        C = Mat(data["C"])
        D = Mat(data["D"], len(data["B"][0])) if data.get("D") is not None else None
    except KeyError as e:
        raise ModelError(f"missing matrix {e.args[0]}") from None
    except (TypeError, ValueError, ZeroDivisionError, IndexError) as e:
        if isinstance(e, DimensionMismatch):
            raise ModelDimensionError(str(e)) from None
        raise ModelError(f"bad matrix entry: {e}") from None
    try:
        sys = LtiSystem(A, B, C, D)
    except DimensionMismatch as e:
        raise ModelDimensionError(str(e)) from None
    chan = None
    if data.get("attack") is not None:
        att = data["attack"]
        try:
            Bt = Mat(att["B"])
            Dt = Mat(att["D"]) if att.get("D") is not None else Mat.zeros(sys.m, Bt.ncols)
            chan = AttackChannel(Bt, Dt)
            chan.check(sys)
        except ChannelRankError as e:
            raise ModelRankError(str(e)) from None
        except DimensionMismatch as e:
            raise ModelDimensionError(str(e)) from None
        except (KeyError, TypeError, ValueError, IndexError) as e:
            raise ModelError(f"bad attack channel: {e}") from None
    sets = {}
    for name, raw in (data.get("sets") or {}).items():
        try:
            S = set_from_json(raw, sys.n)
        except DimensionMismatch as e:
            raise ModelDimensionError(f"set {name!r}: {e}") from None
        except (KeyError, TypeError, ValueError) as e:
            raise ModelError(f"set {name!r}: {e}") from None
        if S.n != sys.n:
            raise ModelDimensionError(f"set {name!r} is not in R^{sys.n}")
        sets[name] = S
    return Model(sys, chan, sets, data.get("name", ""))


def load_json_text(text: str) -> Any:
    try:
        return json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as e:
        raise ModelError(f"malformed JSON: {e}") from None


def parse_model(path) -> Model:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ModelError(f"cannot read model file: {e}") from None
    return model_from_dict(load_json_text(text))


def parse_vector(text: str):
    """``"1,1"`` or ``"1/2, 3"`` to an exact vector."""
    parts = [p for p in text.replace(" ", "").split(",") if p]
    try:
        return vec(parts)
    except (ValueError, ZeroDivisionError):
        raise ModelError(f"cannot parse vector {text!r}") from None
