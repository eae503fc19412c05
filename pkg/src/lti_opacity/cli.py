"""Command-line front end.

Exit codes: 0 success, 1 the analysis answered "no" or found nothing,
2 input error, 3 internal invariant failure, 4 dimension inconsistency in
the model, 5 rank-deficient attack channel.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from importlib.metadata import PackageNotFoundError, version
from typing import Optional

from .attacks import (
    coexistence_report,
    is_attack_undetectable,
    wus_monotonicity_check,
    x0_expansion_tradeoff,
)
from .errors import AnalysisError, DimensionMismatch, UnsupportedCombination
from .io import (
    ModelError,
    load_json_text,
    parse_model,
    parse_vector,
    set_json,
    subspace_json,
    vec_json,
)
from .linalg import Mat, fmt_rat, is_zero
from .lti import AttackChannel, simulate, simulate_attacked
from .opacity import (
    is_state_opaque,
    is_strongly_opaque,
    is_weakly_opaque,
    largest_opaque_set,
)
from .sets import FullSpace
from .suite import golden_suite, worker_count
from .wus import wus_kernel_method, wus_recursive

TOOL = "lti-opacity"
EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def tool_version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:
        return "0+unknown"


class Outcome:
    """Result payload plus exit code and the lines of the human report."""

    def __init__(self, result: dict, code: int, lines: list[str]):
        self.result, self.code, self.lines = result, code, lines


def _fmt_vec(v) -> str:
    return "[" + ", ".join(fmt_rat(x) for x in v) + "]"


def _fmt_space(S) -> str:
    if S.is_zero:
        return "{0}"
    return "span{" + ", ".join(_fmt_vec(v) for v in S.vectors) + "}"


def _load(args):
    model = parse_model(args.model)
    if getattr(args, "channel", None):
        try:
            with open(args.channel, encoding="utf-8") as fh:
                data = load_json_text(fh.read())
            B = Mat(data["B"])
            D = Mat(data["D"]) if data.get("D") is not None else Mat.zeros(model.system.m, B.ncols)
            model.channel = AttackChannel(B, D)
            model.channel.check(model.system)
        except (OSError, KeyError, TypeError) as e:
            raise ModelError(f"bad channel override: {e}") from None
    return model


def _named_set(model, name: Optional[str]):
    if name is None:
        return FullSpace(model.system.n)
    if name not in model.sets:
        raise ModelError(f"model defines no set named {name!r}")
    return model.sets[name]


def cmd_wus(model, args) -> Outcome:
    V = wus_kernel_method(model.system)
    if wus_recursive(model.system) != V:
        raise AssertionError("kernel and recursive WUS computations disagree")
    result = {"wus": subspace_json(V), "wus_dim": V.dim}
    return Outcome(result, EXIT_OK, [f"V = {_fmt_space(V)}  (dim {V.dim})"])


def cmd_opacity_state(model, args) -> Outcome:
    xs, xns = parse_vector(args.xs), parse_vector(args.xns)
    v = is_state_opaque(model.system, xs, xns)
    result = {"opaque": v.opaque, "x_s": vec_json(xs), "x_ns": vec_json(xns)}
    lines = [f"x_s = {_fmt_vec(xs)} opaque w.r.t. x_ns = {_fmt_vec(xns)}: {'yes' if v else 'no'}"]
    if v.witness:
        w = v.witness
        result["witness"] = {
            "x_ns": vec_json(w.x_ns),
            "delta": vec_json(w.delta),
            "zeroing_input": vec_json(w.zeroing),
            "horizon": w.horizon,
        }
        lines.append(f"zeroing input for the difference (horizon {w.horizon}): {_fmt_vec(w.zeroing)}")
        lines.append("masking input: U_ns = U_s - zeroing input")
    return Outcome(result, EXIT_OK if v else EXIT_NO, lines)


def cmd_opacity_set(model, args) -> Outcome:
    Xs, Xns = _named_set(model, args.secret), _named_set(model, args.nonsecret)
    check = is_strongly_opaque if args.mode == "strong" else is_weakly_opaque
    v = check(model.system, Xs, Xns)
    result = {"mode": args.mode, "opaque": v.opaque, "secret": args.secret, "nonsecret": args.nonsecret}
    lines = [f"{args.mode} opacity of {args.secret} w.r.t. {args.nonsecret}: {'yes' if v else 'no'}"]
    if v.failing_state is not None:
        result["failing_state"] = vec_json(v.failing_state)
        lines.append(f"secret state without a partner: {_fmt_vec(v.failing_state)}")
    if v.witness is not None:
        result["witness"] = {"x_ns": vec_json(v.witness.x_ns), "delta": vec_json(v.witness.delta)}
    return Outcome(result, EXIT_OK if v else EXIT_NO, lines)


def cmd_largest(model, args) -> Outcome:
    Xs, Xns = largest_opaque_set(model.system)
    empty = Xns.space.is_full
    result = {"secret": set_json(Xs), "nonsecret": set_json(Xns), "empty": empty}
    lines = [
        f"non-secret set: {_fmt_space(Xns.space)}",
        f"secret set: R^{model.system.n} minus {_fmt_space(Xns.space)}" + ("  (empty)" if empty else ""),
    ]
    return Outcome(result, EXIT_NO if empty else EXIT_OK, lines)


def _certificate_json(cert) -> dict:
    return {"x0": vec_json(cert.x0), "attack": vec_json(cert.attack), "horizon": cert.horizon}


def cmd_attack_synth(model, args) -> Outcome:
    k = 2 * model.system.n - 1 if args.horizon is None else args.horizon
    chan = model.attack_channel
    rep = coexistence_report(model.system, chan, k)
    mono = wus_monotonicity_check(model.system, chan)
    if not mono.holds:
        raise AssertionError("WUS monotonicity failed for the channel range relation")
    cert = rep.certificate
    result = {
        "horizon": k,
        "attacks_exist": rep.attacks_exist,
        "opaque_sets_exist": rep.opaque_sets_exist,
        "channel_relation": rep.channel_relation.value,
        "wus_attacked": subspace_json(rep.wus_attacked),
    }
    lines = [
        f"V(attacked) = {_fmt_space(rep.wus_attacked)}",
        f"channel range vs (B, D): {rep.channel_relation.value}",
        f"opaque sets exist: {'yes' if rep.opaque_sets_exist else 'no'}",
    ]
    if cert is not None:
        if not is_zero(cert.residual(model.system, chan)):
            raise AssertionError("certificate residual is not zero")
        result["certificate"] = _certificate_json(cert)
        lines.append(f"undetectable attack (k={k}): {_fmt_vec(cert.attack)} masked by x0 = {_fmt_vec(cert.x0)}")
    else:
        lines.append("no undetectable attack: every attack is detectable")
    return Outcome(result, EXIT_OK if rep.attacks_exist else EXIT_NO, lines)


def cmd_attack_check(model, args) -> Outcome:
    attack = parse_vector(args.attack)
    X0 = _named_set(model, args.x0_set)
    und = is_attack_undetectable(model.system, model.attack_channel, attack, X0)
    result = {"undetectable": und, "attack": vec_json(attack), "x0_set": args.x0_set or "fullspace"}
    lines = [f"attack {_fmt_vec(attack)} is {'undetectable' if und else 'detectable'}"]
    return Outcome(result, EXIT_OK if und else EXIT_NO, lines)


def cmd_tradeoff(model, args) -> Outcome:
    X01, X02 = _named_set(model, args.x01), _named_set(model, args.x02)
    k = 2 * model.system.n - 1 if args.horizon is None else args.horizon
    rep = x0_expansion_tradeoff(model.system, model.attack_channel, X01, X02, k)
    result = {
        "horizon": rep.horizon,
        "opacity_grows": rep.opacity_grows,
        "attacks_grow": rep.attacks_grow,
        "square_feedthrough_shortcut": rep.shortcut,
    }
    lines = [f"opacity grows: {'yes' if rep.opacity_grows else 'no'}"]
    if rep.opacity_witness is not None:
        result["opacity_witness"] = vec_json(rep.opacity_witness)
        lines.append(f"  new opaque state: {_fmt_vec(rep.opacity_witness)}")
    lines.append(f"attacks grow: {'yes' if rep.attacks_grow else 'no'}")
    if rep.attack_witness is not None:
        result["attack_witness"] = vec_json(rep.attack_witness)
        result["new_attack"] = vec_json(rep.new_attack)
        lines.append(f"  masking offset z = {_fmt_vec(rep.attack_witness)}, new attack {_fmt_vec(rep.new_attack)}")
    if rep.shortcut:
        lines.append("  attack channel feedthrough is square and invertible")
    grows = rep.opacity_grows or rep.attacks_grow
    return Outcome(result, EXIT_OK if grows else EXIT_NO, lines)


def cmd_simulate(model, args) -> Outcome:
    x0, U = parse_vector(args.x0), parse_vector(args.u)
    if args.attack:
        attack = parse_vector(args.attack)
        ys = simulate_attacked(model.system, model.attack_channel, x0, attack, U)
    else:
        ys = simulate(model.system, x0, U)
    result = {"x0": vec_json(x0), "outputs": vec_json(ys)}
    return Outcome(result, EXIT_OK, ["outputs: " + ", ".join(fmt_rat(y) for y in ys)])


def cmd_suite(args) -> Outcome:
    checks = golden_suite(worker_count())
    result = {
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
        "all_passed": all(c.passed for c in checks),
    }
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}" for c in checks]
    return Outcome(result, EXIT_OK if result["all_passed"] else EXIT_NO, lines)


COMMANDS = {
    "wus": cmd_wus,
    "opacity-state": cmd_opacity_state,
    "opacity-set": cmd_opacity_set,
    "largest-opaque": cmd_largest,
    "attack-synth": cmd_attack_synth,
    "attack-check": cmd_attack_check,
    "tradeoff": cmd_tradeoff,
    "simulate": cmd_simulate,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--timing", action="store_true", help="include wall-clock time in the report")

    with_model = argparse.ArgumentParser(add_help=False, parents=[common])
    with_model.add_argument("--model", required=True, help="JSON model file")
    with_model.add_argument("--channel", help="JSON file with attack matrices B and D, overriding the model")

    p = argparse.ArgumentParser(prog=TOOL, description="Opacity and undetectable-attack analysis for LTI systems.")
    p.add_argument("--version", action="version", version=f"%(prog)s {tool_version()}")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("wus", parents=[with_model], help="weakly unobservable subspace")

    s = sub.add_parser("opacity-state", parents=[with_model], help="opacity of one secret state")
    s.add_argument("--xs", required=True)
    s.add_argument("--xns", required=True)

    s = sub.add_parser("opacity-set", parents=[with_model], help="weak or strong opacity of named sets")
    s.add_argument("--secret", required=True)
    s.add_argument("--nonsecret", required=True)
    s.add_argument("--mode", choices=["strong", "weak"], default="strong")

    sub.add_parser("largest-opaque", parents=[with_model], help="largest opaque set for X0 = R^n")

    s = sub.add_parser("attack-synth", parents=[with_model], help="synthesize an undetectable attack")
    s.add_argument("--horizon", "-k", "--k", type=int, default=None)

    s = sub.add_parser("attack-check", parents=[with_model], help="decide undetectability of an attack")
    s.add_argument("--attack", required=True)
    s.add_argument("--x0-set", default=None, help="named initial-state set (default: all of R^n)")

    s = sub.add_parser("tradeoff", parents=[with_model], help="effect of enlarging the initial-state set")
    s.add_argument("--x01", required=True)
    s.add_argument("--x02", required=True)
    s.add_argument("--horizon", "-k", "--k", type=int, default=None)

    s = sub.add_parser("simulate", parents=[with_model], help="exact output sequence")
    s.add_argument("--x0", required=True)
    s.add_argument("--u", required=True)
    s.add_argument("--attack", default=None)

    sub.add_parser("golden-suite", parents=[common], help="run the built-in golden checks")
    return p


def input_digest(args) -> str:
    h = hashlib.sha256()
    model = getattr(args, "model", None)
    for path in (model, getattr(args, "channel", None)):
        if path:
            with open(path, "rb") as fh:
                h.update(fh.read())
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("model", "channel", "json", "timing")}
    h.update(json.dumps(params, sort_keys=True).encode())
    return h.hexdigest()


def _dispatch(args) -> Outcome:
    if args.command == "golden-suite":
        return cmd_suite(args)
    horizon = getattr(args, "horizon", None)
    if horizon is not None and horizon < 0:
        raise ModelError("horizon must be >= 0")
    return COMMANDS[args.command](_load(args), args)


def _error(args, code: int, kind: str, msg: str) -> int:
    if getattr(args, "json", False):
        print(json.dumps({"tool": TOOL, "error": {"kind": kind, "message": msg}, "exit_code": code}, sort_keys=True))
    else:
        print(f"error ({kind}): {msg}", file=sys.stderr)
    return code


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        out = _dispatch(args)
        digest = input_digest(args)
    except ModelError as e:
        return _error(args, e.exit_code, "input", str(e))
    except DimensionMismatch as e:
        return _error(args, EXIT_INPUT, "dimension", str(e))
    except (UnsupportedCombination, ValueError) as e:
        return _error(args, EXIT_INPUT, "unsupported", str(e))
    except (AssertionError, AnalysisError) as e:
        return _error(args, EXIT_INTERNAL, "internal", str(e))
    elapsed = time.perf_counter() - start
    if args.json:
        report = {
            "tool": TOOL,
            "version": tool_version(),
            "command": args.command,
            "input_digest": digest,
            "result": out.result,
            "exit_code": out.code,
        }
        if args.timing:
            report["seconds"] = round(elapsed, 6)
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for line in out.lines:
            print(line)
        if args.timing:
            print(f"time: {elapsed:.6f} s")
    return out.code


if __name__ == "__main__":
    sys.exit(main())
