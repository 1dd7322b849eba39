"""``atk`` command line: JSON on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 domain error (a JSON error object goes to stderr),
2 usage error. Cycles are comma-separated integers; wrap a cycle that starts
with a minus sign in parentheses, e.g. ``"(-1,2,1,1)"``, or put ``--`` before it.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from typing import Sequence

from . import __version__
from .classify import deformation_types
from .cycles import Cycle, dihedral_canonical, invariants_of, is_negative_definite
from .errors import AtkError
from .fans import Fan, fan_from_cycle, is_toric, opposite_pairs
from .pairs import (
    MarkedPair,
    add_marks,
    elliptic_pair,
    fundamental_group,
    get_model,
    standard_models,
)
from .tables import MODES, verify_all
from .transforms import DEFAULT_ENTRY_MIN, DEFAULT_MAX_MOVES, Move, elem_transform, find_path

log = logging.getLogger("atk")


class UsageError(Exception):
    pass


def default_max_moves() -> int:
    raw = os.environ.get("ATK_MAX_MOVES")
    if raw is None:
        return DEFAULT_MAX_MOVES
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"ATK_MAX_MOVES must be an integer, got {raw!r}") from None


def _ints(text: str) -> list[int]:
    text = text.strip()
    try:
        if text.startswith("["):
            return [int(x) for x in json.loads(text)]
        return [int(tok) for tok in text.strip("()").split(",") if tok.strip()]
    except (ValueError, TypeError, json.JSONDecodeError):
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _cycle(text: str) -> Cycle:
    return Cycle(_ints(text))


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def cmd_fan(args) -> int:
    c = _cycle(args.cycle)
    f = fan_from_cycle(c)
    _emit({"cycle": list(c), "rays": f.to_json()})
    return 0


def cmd_check(args) -> int:
    c = _cycle(args.cycle)
    canon, g = dihedral_canonical(c)
    out = {
        "cycle": list(c),
        "negative_definite": is_negative_definite(c),
        "toric": is_toric(c),
        "invariants": invariants_of(c).to_json(),
        "canonical": list(canon),
        "canonical_by": g.to_json(),
    }
    if out["toric"]:
        out["opposite_pairs"] = [list(p) for p in opposite_pairs(fan_from_cycle(c))]
    _emit(out)
    return 0


def cmd_charge(args) -> int:
    c = _cycle(args.cycle)
    _emit({"cycle": list(c), **invariants_of(c).to_json()})
    return 0


def cmd_transform(args) -> int:
    c = _cycle(args.cycle)
    mv = Move(args.up, args.down)
    _emit({"start": list(c), "move": mv.to_json(), "end": list(elem_transform(c, mv))})
    return 0


def _target(text: str) -> Cycle:
    if text[:1].isalpha():
        return get_model(text).cycle
    return _cycle(text)


def cmd_path(args) -> int:
    max_moves = args.max_moves if args.max_moves is not None else default_max_moves()
    path = find_path(_cycle(args.cycle), _target(args.target), max_moves, args.entry_min)
    _emit(path.to_json())
    return 0


def cmd_models(args) -> int:
    out = []
    for m in standard_models():
        e = elliptic_pair(m)
        out.append({**m.to_json(), "elliptic_marks": list(e.marks), "pi1": fundamental_group(e).to_json()})
    _emit(out)
    return 0


def cmd_pi1(args) -> int:
    if args.fan:
        base = Fan.from_json(args.fan)
        if args.marks is None:
            raise UsageError("--fan needs --marks")
        pair = MarkedPair(base, tuple(_ints(args.marks)))
    elif args.model:
        if args.elliptic:
            pair = elliptic_pair(args.model)
            if args.marks is not None:
                pair = add_marks(pair, _ints(args.marks))
        elif args.marks is not None:
            pair = MarkedPair.on_model(args.model, _ints(args.marks))
        else:
            raise UsageError("give --marks, --elliptic, or both")
    else:
        raise UsageError("give --model or --fan")
    _emit({
        **pair.to_json(),
        "cycle": list(pair.cycle),
        "charge": pair.charge,
        "pi1": fundamental_group(pair).to_json(),
    })
    return 0


def cmd_verify_tables(args) -> int:
    tables = [args.table] if args.table else None
    summary = verify_all(args.mode, tables)
    for r in summary.reports:
        sys.stdout.write(json.dumps(r.to_json()) + "\n")
    sys.stdout.write(json.dumps({"summary": summary.to_json()}) + "\n")
    sys.stderr.write(summary.table() + "\n")
    if summary.ok or args.allow_failures:
        return 0
    return 1


def cmd_classify(args) -> int:
    _emit(deformation_types(_cycle(args.cycle)).to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="atk", description="Toric-model calculus for Looijenga pairs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="timing diagnostics on stderr")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("fan", help="fan of a toric cycle")
    s.add_argument("cycle")
    s.set_defaults(func=cmd_fan)

    s = sub.add_parser("check", help="definiteness, invariants and canonical form")
    s.add_argument("cycle")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("charge", help="D^2, charge and Euler number of the complement")
    s.add_argument("cycle")
    s.set_defaults(func=cmd_charge)

    s = sub.add_parser("transform", help="apply one elementary transformation")
    s.add_argument("cycle")
    s.add_argument("--up", type=int, required=True, help="component receiving the blowup")
    s.add_argument("--down", type=int, required=True, help="component whose curve is contracted")
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("path", help="shortest transformation sequence to a target")
    s.add_argument("cycle")
    s.add_argument("target", help="cycle or model name (T6, T7, Ti, Tii, T9)")
    s.add_argument("--max-moves", type=int, default=None, help=f"default {DEFAULT_MAX_MOVES} or $ATK_MAX_MOVES")
    s.add_argument("--entry-min", type=int, default=DEFAULT_ENTRY_MIN)
    s.set_defaults(func=cmd_path)

    s = sub.add_parser("models", help="the five standard toric models")
    s.set_defaults(func=cmd_models)

    s = sub.add_parser("pi1", help="fundamental group of the complement of a marked pair")
    s.add_argument("--model")
    s.add_argument("--fan", help="JSON array of [x,y] rays instead of a model")
    s.add_argument("--marks", help="interior blowups per component (added to --elliptic)")
    s.add_argument("--elliptic", action="store_true", help="start from the elliptic pair")
    s.set_defaults(func=cmd_pi1)

    s = sub.add_parser("verify-tables", help="replay the case tables (JSON lines)")
    s.add_argument("--mode", choices=MODES, default="auto")
    s.add_argument("--table", type=int, choices=(7, 8, 9))
    s.add_argument("--allow-failures", action="store_true", help="exit 0 even if rows fail")
    s.set_defaults(func=cmd_verify_tables)

    s = sub.add_parser("classify", help="deformation types of a negative definite cycle")
    s.add_argument("cycle")
    s.set_defaults(func=cmd_classify)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(name)s: %(message)s")
    t0 = time.perf_counter()
    try:
        code = args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"atk {args.command}: {exc}\n")
        return 2
    except AtkError as exc:
        sys.stderr.write(json.dumps(exc.to_json()) + "\n")
        return 1
    log.info("%s finished in %.1f ms", args.command, 1000 * (time.perf_counter() - t0))
    return code


def main() -> None:
    sys.exit(run())
