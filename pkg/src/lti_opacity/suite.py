"""Built-in golden checks on the shipped example models."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from .attacks import (
    coexistence_report,
    is_attack_undetectable,
    synthesize_undetectable_attack,
    x0_expansion_tradeoff,
)
from .io import Model, parse_model
from .linalg import Mat, Subspace, fmt_rat, is_zero
from .lti import forced_response_matrix, simulate, simulate_attacked
from .opacity import is_state_opaque, is_strongly_opaque, largest_opaque_set, replay_outputs
from .sets import FullSpace
from .wus import wus_kernel_method, wus_recursive

WORKERS_ENV = "LTI_OPACITY_WORKERS"

F2_EXAMPLE = Mat([[0, 0, 0, 0, 0, 0], [1, 1, 0, 0, 0, 0], [2, 1, 1, 1, 0, 0]])


def _fmt(v) -> str:
    return "[" + ", ".join(fmt_rat(x) for x in v) + "]"


def bundled_model(name: str) -> Model:
    with resources.as_file(resources.files("lti_opacity.models") / f"{name}.json") as p:
        return parse_model(p)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _wus_golden():
    got = {
        "example1": wus_kernel_method(bundled_model("example1").system),
        "feedthrough": wus_kernel_method(bundled_model("example1_feedthrough").system),
        "full_output": wus_kernel_method(bundled_model("example1_full_output").system),
    }
    ok = (
        got["example1"] == Subspace(2, [(0, 1)])
        and got["feedthrough"].is_full
        and got["full_output"].is_zero
    )
    return ok, ", ".join(f"{k}: dim {v.dim}" for k, v in got.items())


def _wus_dual():
    names = ["example1", "example1_feedthrough", "example1_full_output", "automotive"]
    bad = [n for n in names if wus_kernel_method(bundled_model(n).system) != wus_recursive(bundled_model(n).system)]
    return not bad, "mismatch: " + ", ".join(bad) if bad else "kernel and recursion agree"


def _f2_golden():
    F = forced_response_matrix(bundled_model("example1").system, 2)
    return F == F2_EXAMPLE, "F_2 rows " + " ".join(_fmt(r) for r in F.rows)


def _state_replay():
    sys = bundled_model("example1").system
    verdict = is_state_opaque(sys, (1, 1), (1, 0))
    ys = simulate(sys, (1, 1), [1] * 6)
    yn = simulate(sys, (1, 0), [1, 2] * 3)
    ok = bool(verdict) and ys == yn == (1, 4, 8)
    if ok:
        a, b = replay_outputs(sys, (1, 1), verdict.witness, [1] * 6)
        ok = a == b
    return ok, f"outputs {_fmt(ys)} and {_fmt(yn)}"


def _strong_opacity():
    m = bundled_model("example1")
    Xs = m.sets["ball_boundary"]
    full = is_strongly_opaque(m.system, Xs, m.sets["segment"])
    short = is_strongly_opaque(m.system, Xs, m.sets["short_segment"])
    return bool(full) and not short, f"segment: {bool(full)}, shrunk segment: {bool(short)}"


def _largest():
    Xs, Xns = largest_opaque_set(bundled_model("example1").system)
    return Xns.space == Subspace(2, [(1, 0)]), "non-secret set basis " + " ".join(_fmt(v) for v in Xns.space.vectors)


def _attacks_example1():
    m = bundled_model("example1")
    chan = m.attack_channel
    und = is_attack_undetectable(m.system, chan, [0, -1, 0, -1, 0, -1], FullSpace(2))
    cert = synthesize_undetectable_attack(m.system, chan, 2)
    ok = und and cert is not None and cert.x0 == (0, 1) and cert.nonzero and is_zero(cert.residual(m.system, chan))
    return ok, f"undetectable={und}, certificate x0={_fmt(cert.x0) if cert else None}"


def _attacks_automotive():
    m = bundled_model("automotive")
    chan = m.attack_channel
    und = is_attack_undetectable(m.system, chan, [2, -2, 2, 0], FullSpace(2))
    attacked = simulate_attacked(m.system, chan, (1, 0), [2, -2, 2, 0], [2, 2, 2, 2])
    ys = simulate(m.system, (1, 0), [2, 2, 2, 2])
    yn = simulate(m.system, (1, 1), [0, 4, 0, 0])
    ok = und and attacked == (1, 3, 7, 13) and ys == yn == (1, 2, 5, 10)
    return ok, f"attacked {_fmt(attacked)}, clean {_fmt(ys)} / {_fmt(yn)}"


def _full_output_variant():
    m = bundled_model("example1_full_output")
    rep = coexistence_report(m.system, m.attack_channel)
    ok = not rep.opaque_sets_exist and not rep.attacks_exist
    return ok, f"opaque sets: {rep.opaque_sets_exist}, attacks: {rep.attacks_exist}"


def _feedthrough_variant():
    Xs, Xns = largest_opaque_set(bundled_model("example1_feedthrough").system)
    return Xns.space.is_zero, "V = R^2, non-secret set is the origin"


def _tradeoff():
    m = bundled_model("example1")
    rep = x0_expansion_tradeoff(m.system, m.attack_channel, m.sets["x01"], m.sets["x02"], 2)
    ok = rep.opacity_grows and rep.attacks_grow and rep.opacity_witness == (0, 5)
    return ok, f"opacity grows: {rep.opacity_grows}, attacks grow: {rep.attacks_grow}"


CHECKS: list[tuple[str, Callable]] = [
    ("wus-golden-values", _wus_golden),
    ("wus-dual-algorithms", _wus_dual),
    ("forced-response-golden", _f2_golden),
    ("state-opacity-replay", _state_replay),
    ("strong-opacity-ball-boundary", _strong_opacity),
    ("largest-opaque-set", _largest),
    ("feedthrough-variant", _feedthrough_variant),
    ("attack-example1", _attacks_example1),
    ("attack-automotive", _attacks_automotive),
    ("full-output-variant", _full_output_variant),
    ("x0-expansion-tradeoff", _tradeoff),
]


def _run_one(item) -> CheckResult:
    name, fn = item
    try:
        ok, detail = fn()
    except Exception as e:  # a crashing check is a failing check
        return CheckResult(name, False, f"{type(e).__name__}: {e}")
    return CheckResult(name, bool(ok), detail)


def golden_suite(workers: int | None = None) -> list[CheckResult]:
    workers = worker_count() if workers is None else workers
    if workers <= 1:
        return [_run_one(c) for c in CHECKS]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, CHECKS))
