"""Command-line surface.

Elements use the one-line grammar ``[z1*5,1,z2*3,6]`` (a bare value means
color 0); multitableaux use the nested JSON list layout, e.g.
``[[[1,3],[2]],[[4],[5]],[]]``.  Pass ``-`` to read the input from stdin.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import GrpnError
from .group import DEFAULT_CAP, GroupParams, parse_element
from .rs import RSPair, ascending_moves, apply_moves, rs_inverse, rs_map
from .signs import (
    pi,
    pi_from_tableaux,
    verify_admissible,
    verify_membership,
    verify_theorem,
)
from .tableaux import Multitableau

USAGE_ERROR = 2
VERIFY_FAILURE = 1


def _read(text: str) -> str:
    return sys.stdin.read().strip() if text == "-" else text


def _emit(args, text_lines, payload):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _element(args):
    return parse_element(_read(args.element), args.r, args.p)


def cmd_rs(args):
    w = _element(args)
    pair = rs_map(w)
    _emit(
        args,
        [f"w = {w}", f"P = {pair.P}", f"Q = {pair.Q}"],
        {"element": str(w), "P": pair.P.to_json(), "Q": pair.Q.to_json()},
    )
    return 0


def cmd_inverse_rs(args):
    data = json.loads(_read(args.pair))
    P = Multitableau.from_json(data[0])
    Q = Multitableau.from_json(data[1])
    r = args.r if args.r is not None else P.r
    params = GroupParams(r, args.p, P.size)
    w = rs_inverse(RSPair(P, Q), params)
    _emit(args, [str(w)], {"element": str(w), **w.to_json()})
    return 0


def _tableau_stats(T: Multitableau) -> dict:
    return {
        "inv": T.inversions(),
        "sign": T.sign(),
        "e": T.even_row_boxes(),
        "twice_spin": T.twice_spin(),
        "ascending": T.is_ascending(),
    }


def cmd_stats(args):
    raw = _read(args.input)
    try:
        data = json.loads(raw)
        is_tableau = isinstance(data, list) and all(
            isinstance(comp, list) and all(isinstance(row, list) for row in comp)
            for comp in data
        )
    except json.JSONDecodeError:
        is_tableau = False
    if is_tableau:
        T = Multitableau.from_json(data)
        stats = _tableau_stats(T)
        _emit(
            args,
            [f"T = {T}"] + [f"{k} = {v}" for k, v in stats.items()],
            {"tableau": T.to_json(), **stats},
        )
        return 0
    if args.r is None:
        raise GrpnError("--r is required for element input")
    w = parse_element(raw, args.r, args.p)
    pair = rs_map(w)
    stats = {"P": _tableau_stats(pair.P), "Q": _tableau_stats(pair.Q)}
    lines = [f"w = {w}", f"P = {pair.P}", f"Q = {pair.Q}"]
    for name in ("P", "Q"):
        lines += [f"{name}.{k} = {v}" for k, v in stats[name].items()]
    _emit(args, lines, {"element": str(w), **stats})
    return 0


def cmd_sgn(args):
    w = _element(args)
    values = {
        f"tau_{i}^{eps}": str(w.one_dim(i, eps))
        for eps in (0, 1)
        for i in range(args.r)
    }
    _emit(
        args,
        [f"w = {w}"]
        + [f"sigma_{i}(w) = {w.one_dim(i, 0)}" for i in range(args.r)]
        + [f"sgn_{i}(w) = {w.one_dim(i, 1)}" for i in range(args.r)],
        {"element": str(w), "values": values},
    )
    return 0


def cmd_pi(args):
    w = _element(args)
    _emit(
        args,
        [f"w = {w}"] + [f"pi_{i}(w) = {pi(w, i)}" for i in range(args.r)],
        {"element": str(w), "values": {str(i): str(pi(w, i)) for i in range(args.r)}},
    )
    return 0


def cmd_ascend(args):
    w = _element(args)
    moves = ascending_moves(w)
    rep = apply_moves(w, moves)
    move_text = " ".join(f"{side}{i}" for side, i in moves) or "(none)"
    _emit(
        args,
        [f"w = {w}", f"ascending = {rep}", f"moves = {move_text}"],
        {"element": str(w), "ascending": str(rep), "moves": [[s, i] for s, i in moves]},
    )
    return 0


VERIFIERS = {
    "theorem": verify_theorem,
    "membership": verify_membership,
    "admissible": verify_admissible,
}


def cmd_verify(args):
    params = GroupParams(args.r, args.p, args.n)
    cap = args.cap if not args.force else 10**12
    report = VERIFIERS[args.which](params, cap=cap)
    _emit(args, [report.summary()], report.to_json())
    return 0 if report.passed else VERIFY_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grpn", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_r=True, element_arg=True):
        p.add_argument("--r", type=int, required=need_r, default=None, help="color modulus r")
        p.add_argument("--p", type=int, default=1, help="subgroup parameter, divides r")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("rs", help="Robinson-Schensted image of an element")
    common(p)
    p.add_argument("element")
    p.set_defaults(func=cmd_rs)

    p = sub.add_parser("inverse-rs", help="element from a JSON pair [P, Q]")
    common(p, need_r=False)
    p.add_argument("pair")
    p.set_defaults(func=cmd_inverse_rs)

    p = sub.add_parser("stats", help="statistics of an element or multitableau")
    common(p, need_r=False)
    p.add_argument("input")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("sgn", help="all 2r one-dimensional values, group side")
    common(p)
    p.add_argument("element")
    p.set_defaults(func=cmd_sgn)

    p = sub.add_parser("pi", help="tableaux-side sign values for all i")
    common(p)
    p.add_argument("element")
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("ascend", help="ascending representative and move sequence")
    common(p)
    p.add_argument("element")
    p.set_defaults(func=cmd_ascend)

    p = sub.add_parser("verify", help="exhaustive verification sweep")
    p.add_argument("which", choices=sorted(VERIFIERS))
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--force", action="store_true", help="ignore the enumeration cap")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GrpnError, json.JSONDecodeError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
