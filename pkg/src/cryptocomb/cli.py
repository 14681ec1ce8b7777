"""Command-line workbench.

One executable, one subcommand per capability:

    cryptocomb jones --braid "B4: -2 -3 -3 -2 -2 -3 -1 -2 1 1 3"
    cryptocomb compose --left tre.braid --right fig8.braid --variant paper
    cryptocomb keyagree --parties 2 --seed 7 --braid-len 6 --attack
    cryptocomb succession --prior uniform --replacement with --G 3 --k 3
    cryptocomb pushgame count --board triangular:5 --m 2
    cryptocomb entropy --graph path3.json
    cryptocomb serve --port 8080

Braid, board, graph, and target arguments accept either a file path or
the same content inline. Exit codes: 0 on success, 1 on a domain error
(bad input mathematics), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import entropy as entropy_mod
from . import pushgame, succession
from .braids import BraidWord, parse_braid
from .compose import VARIANTS, compose, obfuscate
from .errors import CryptocombError, ZeroPsi
from .jones import DEFAULT_STRAND_CAP, derive_key, jones_polynomial, kernel_backend
from .laurent import LaurentPoly
from .protocol import (
    eve_attack,
    random_multi_party_session,
    random_two_party_session,
)


def _read_arg(value: str) -> str:
    """Return file contents if value names a file, else the value itself."""
    if os.path.exists(value) and os.path.isfile(value):
        with open(value, "r", encoding="utf-8") as fh:
            return fh.read()
    return value


def _braid_arg(value: str) -> BraidWord:
    return parse_braid(_read_arg(value))


def _emit(args, obj: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        for line in text_lines:
            print(line)


def _poly_json(p: LaurentPoly) -> list:
    return p.to_json_obj()


# subcommand handlers


def _cmd_jones(args) -> int:
    b = _braid_arg(args.braid)
    result = jones_polynomial(b, strand_cap=args.strand_cap)
    key = derive_key(result.polynomial, args.key_power)
    obj = {
        "polynomial": _poly_json(result.polynomial),
        "trace_part": _poly_json(result.trace_part),
        "exponent_sum": result.exponent_sum,
        "strands_used": result.strands_used,
        "key_power": args.key_power,
        "key": key,
    }
    _emit(
        args,
        obj,
        [
            f"polynomial: {result.polynomial}",
            f"trace_part: {result.trace_part}",
            f"exponent_sum: {result.exponent_sum}",
            f"strands_used: {result.strands_used}",
            f"key: {key}",
        ],
    )
    return 0


def _cmd_compose(args) -> int:
    left = _braid_arg(args.left)
    right = _braid_arg(args.right)
    out = compose(left, right, args.variant, args.split_at)
    if args.obfuscate:
        out = obfuscate(out, args.obfuscate, args.seed)
    _emit(args, out.to_json_obj(), [out.to_text()])
    return 0


def _cmd_keyagree(args) -> int:
    if args.parties < 2:
        raise CryptocombError("need at least 2 parties")
    if args.parties == 2:
        outcome = random_two_party_session(
            args.seed, braid_len=args.braid_len, key_power=args.key_power
        )
    else:
        outcome = random_multi_party_session(
            args.seed,
            args.parties,
            braid_len=args.braid_len,
            key_power=args.key_power,
        )
    transcript = [
        {
            "seq": m.seq,
            "from": m.sender,
            "kind": m.kind,
            "braids": [
                {"strands": b.strands, "letters": len(b.word)} for b in m.braids
            ],
        }
        for m in outcome.transcript
    ]
    obj = {
        "session": outcome.session,
        "keys": outcome.keys,
        "shared_key": outcome.shared_key,
        "transcript": transcript,
    }
    lines = [f"session: {outcome.session}"]
    for msg in transcript:
        sizes = ", ".join(
            f"B{b['strands']}({b['letters']} letters)" for b in msg["braids"]
        )
        lines.append(f"  #{msg['seq']} {msg['from']} {msg['kind']}: {sizes}")
    for name, key in outcome.keys.items():
        lines.append(f"key[{name}]: {key}")
    lines.append(f"shared key: {outcome.shared_key}")
    if args.attack:
        if args.parties != 2:
            raise CryptocombError("the eavesdropper demo covers two-party sessions")
        eve = eve_attack(outcome, key_power=args.key_power)
        obj["eve_key"] = eve.key
        obj["eve_matches"] = eve.key == outcome.shared_key
        lines.append(f"eavesdropper key: {eve.key}")
        lines.append(f"eavesdropper matches: {eve.key == outcome.shared_key}")
    _emit(args, obj, lines)
    return 0


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _cmd_succession(args) -> int:
    prior = succession.Prior(args.prior)
    replacement = succession.Replacement(args.replacement)
    if replacement is succession.Replacement.WITH:
        if prior is succession.Prior.UNIFORM:
            value = succession.succ_uniform_rep(args.G, args.k)
        else:
            value = succession.succ_binom_rep(args.G, args.k)
        joint = None
    else:
        value = succession.succ_norep(args.G, args.k, prior)
        joint = succession.joint_norep(args.G, args.k, prior)
    limit = succession.limit_succession(args.k, prior)
    obj = {
        "prior": args.prior,
        "replacement": args.replacement,
        "G": args.G,
        "k": args.k,
        "probability": _fraction_str(value),
        "probability_decimal": float(value),
        "limit": _fraction_str(limit),
    }
    lines = [
        _fraction_str(value),
        f"decimal: {float(value):.12g}",
        f"limit (G -> infinity): {_fraction_str(limit)}",
    ]
    if joint is not None:
        obj["joint_weight"] = _fraction_str(joint)
        lines.append(f"joint weight of the evidence: {_fraction_str(joint)}")
    if args.simulate:
        model = succession.UrnModel(args.G, prior, replacement)
        sim = succession.simulate_urn(model, args.k, args.simulate, args.seed)
        obj["simulation"] = {
            "estimate": sim.estimate,
            "stderr": sim.stderr,
            "conditioning_events": sim.conditioning_events,
            "trials": sim.trials,
        }
        lines.append(
            f"simulated: {sim.estimate:.6f} +- {sim.stderr:.6f} "
            f"({sim.conditioning_events} conditioning events in {sim.trials} trials)"
        )
    _emit(args, obj, lines)
    return 0


def _board_arg(args) -> pushgame.SimplexBoard:
    raw = args.board
    if raw.partition(":")[0] in ("triangular", "hexagonal") and not os.path.exists(raw):
        labels = _labels_arg(args.labels) if args.labels else None
        return pushgame.build_board(raw, args.m if args.m else 2, labels)
    board = pushgame.SimplexBoard.from_json(_read_arg(raw))
    if args.m and args.m != board.m:
        board = pushgame.board_with_m(board, args.m)
    if args.labels:
        board = board.with_labels(_labels_arg(args.labels))
    return board


def _labels_arg(value: str) -> list[int]:
    data = json.loads(_read_arg(value))
    if not isinstance(data, list):
        raise ValueError("labels/target must be a JSON list of integers")
    return [int(x) for x in data]


def _cmd_pushgame(args) -> int:
    board = _board_arg(args)
    target = (
        _labels_arg(args.target) if args.target else [0] * board.num_vertices
    )
    action = args.action
    if action == "solve":
        plan = pushgame.solve(board, target)
        obj = {"solvable": plan is not None, "plan": list(plan) if plan else None}
        lines = [" ".join(str(x) for x in plan)] if plan else ["no solution"]
    elif action == "count":
        count = pushgame.exact_count(board)
        obj = {"count": count}
        lines = [str(count)]
    elif action == "classes":
        classes = pushgame.class_count(board)
        obj = {"classes": classes}
        lines = [str(classes)]
    elif action == "colorable":
        verdict = pushgame.decide_colorable(board, args.test_m)
        obj = {"colorable": verdict.value, "colors": board.n + 1, "test_m": args.test_m}
        lines = [verdict.value]
    elif action == "enumerate":
        plans = pushgame.enumerate_solutions(board, target, args.cap)
        obj = {"count": len(plans), "plans": [list(p) for p in plans]}
        lines = [" ".join(str(x) for x in p) for p in plans] or ["no solution"]
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(action)
    _emit(args, obj, lines)
    return 0


def _cmd_entropy(args) -> int:
    graph = entropy_mod.SimpleGraph.from_json(_read_arg(args.graph))
    try:
        report = entropy_mod.entropy_report(graph)
    except ZeroPsi:
        flow = entropy_mod.info_flow(graph)
        print(f"info_flow: {_fraction_str(flow)}", file=sys.stderr)
        raise
    obj = {
        "psi": [_fraction_str(p) for p in report.psi],
        "g_psi": _fraction_str(report.g_psi),
        "probabilities": [_fraction_str(p) for p in report.probabilities],
        "entropy_bits": report.entropy_bits,
        "info_flow": _fraction_str(report.info_flow),
    }
    _emit(
        args,
        obj,
        [
            "psi: " + " ".join(_fraction_str(p) for p in report.psi),
            f"g_psi: {_fraction_str(report.g_psi)}",
            "probabilities: " + " ".join(_fraction_str(p) for p in report.probabilities),
            f"entropy_bits: {report.entropy_bits:.12f}",
            f"info_flow: {_fraction_str(report.info_flow)}",
        ],
    )
    return 0


def _cmd_serve(args) -> int:
    from .server import serve

    serve(port=args.port, data_dir=args.data, frontend_dir=args.frontend)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cryptocomb",
        description="Workbench for knot-composition key agreement, succession "
        "probabilities, the push game, and graph information entropy.",
    )
    parser.add_argument(
        "--version", action="version", version=f"cryptocomb ({kernel_backend()} kernel)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("jones", help="Jones polynomial and derived key of a braid closure")
    p.add_argument("--braid", required=True, help="file path, 'Bn: ...' text, or JSON")
    p.add_argument("--key-power", type=int, default=3)
    p.add_argument("--strand-cap", type=int, default=DEFAULT_STRAND_CAP)
    add_format(p)
    p.set_defaults(func=_cmd_jones)

    p = sub.add_parser("compose", help="connected sum of two braid closures")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--variant", choices=VARIANTS, default="shift")
    p.add_argument("--split-at", type=int, default=None)
    p.add_argument("--obfuscate", type=int, default=0, metavar="MOVES")
    p.add_argument("--seed", type=int, default=None)
    add_format(p)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("keyagree", help="run a key agreement session")
    p.add_argument("--parties", type=int, default=2)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--braid-len", type=int, default=6)
    p.add_argument("--key-power", type=int, default=3)
    p.add_argument("--attack", action="store_true", help="also run the eavesdropper")
    add_format(p)
    p.set_defaults(func=_cmd_keyagree)

    p = sub.add_parser("succession", help="exact succession probabilities")
    p.add_argument("--prior", choices=("uniform", "binomial"), required=True)
    p.add_argument("--replacement", choices=("with", "without"), required=True)
    p.add_argument("--G", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--simulate", type=int, default=0, metavar="TRIALS")
    p.add_argument("--seed", type=int, default=None)
    add_format(p)
    p.set_defaults(func=_cmd_succession)

    p = sub.add_parser("pushgame", help="solve and count push-game instances")
    p.add_argument(
        "action", choices=("solve", "count", "classes", "colorable", "enumerate")
    )
    p.add_argument(
        "--board", required=True, help="board JSON (file or inline) or builder 'triangular:N'"
    )
    p.add_argument("--m", type=int, default=None, help="label modulus (default 2)")
    p.add_argument("--labels", default=None, help="JSON list (file or inline)")
    p.add_argument("--target", default=None, help="JSON list (file or inline); default all zeros")
    p.add_argument("--test-m", type=int, default=2, help="modulus for the colorability test")
    p.add_argument("--cap", type=int, default=10000, help="enumeration cap")
    add_format(p)
    p.set_defaults(func=_cmd_pushgame)

    p = sub.add_parser("entropy", help="graph information entropy report")
    p.add_argument("--graph", required=True, help="graph JSON (file or inline)")
    add_format(p)
    p.set_defaults(func=_cmd_entropy)

    p = sub.add_parser("serve", help="run the HTTP board service")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--data", default=None, help="session snapshot directory")
    p.add_argument("--frontend", default=None, help="static bundle directory")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CryptocombError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
