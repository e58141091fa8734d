"""Command line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .beatty import build_tables
from .core import GameParams, Position
from .ruleset import ExtraMoveTable, MoveSpec, MoveType, classify_move
from .solver import (
    WinningMoveOracle,
    audit_winning_moves,
    check_no_p_to_p,
    index_of_pposition,
    solve_grid,
    verify_theorem1,
)
from .sturmian import WordView, beatty_word, index_taus, phi_word, theta_word, three_way_agreement
from .synth import ORDERS, compare_with_typeiii

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {value}")
    return value


def dump_json(obj) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def dump_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def dump_table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [["" if c is None else str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"


def _render(fmt: str, header: list[str], rows: list[list], json_obj) -> str:
    if fmt == "csv":
        return dump_csv(header, [["" if c is None else c for c in r] for r in rows])
    if fmt == "json":
        return dump_json(json_obj)
    return dump_table(header, rows)


# seq ---------------------------------------------------------------------


def seq_rows(k: int, n_max: int) -> list[list]:
    if n_max == 0:
        return []
    p = GameParams(k)
    t = build_tables(p, n_max)
    rows = []
    for n in range(1, n_max + 1):
        d = int(t.d[n])
        if d == k + 1:
            letter = "s"
        else:
            letter = f"t{(t.tau_count(n) - 1) % k + 1}"
        rows.append([n, int(t.a[n]), int(t.b[n]), int(t.c[n]), d, letter, index_of_pposition(p, n, t)])
    return rows


SEQ_HEADER = ["n", "a", "b", "c", "d", "letter", "index"]


def cmd_seq(args, out) -> int:
    rows = seq_rows(args.k, args.n)
    obj = {"k": args.k, "n": args.n, "rows": [dict(zip(SEQ_HEADER, r)) for r in rows]}
    out.write(_render(args.format, SEQ_HEADER, rows, obj))
    return EXIT_OK


# verify ------------------------------------------------------------------


def verify_report(k: int, bound: int, timings: bool = True) -> dict:
    p = GameParams(k)
    clock: dict[str, float] = {}

    def timed(name, fn):
        t0 = time.perf_counter()
        result = fn()
        clock[name] = round((time.perf_counter() - t0) * 1000, 1)
        return result

    grid = timed("solve_grid", lambda: solve_grid(p, bound))
    checks = [
        timed("theorem1", lambda: verify_theorem1(p, bound, grid)),
        timed("no_p_to_p", lambda: check_no_p_to_p(p, bound)),
        timed("winning_moves", lambda: audit_winning_moves(p, bound, grid)),
    ]
    return {
        "k": k,
        "bound": bound,
        "checks": [c.to_dict() for c in checks],
        "timings_ms": clock if timings else {},
    }


def cmd_verify(args, out) -> int:
    report = verify_report(args.k, args.bound, timings=not args.no_timings)
    ok = all(c["pass"] for c in report["checks"])
    if args.format == "json":
        out.write(dump_json(report))
    else:
        header = ["name", "pass", "witness", "detail"]
        rows = [
            [c["name"], "PASS" if c["pass"] else "FAIL", json.dumps(c.get("witness")) if "witness" in c else "", c.get("detail", "")]
            for c in report["checks"]
        ]
        if args.format == "csv":
            out.write(dump_csv(header, rows))
        else:
            out.write(f"k={args.k} bound={args.bound}\n")
            out.write(dump_table(header, rows))
            out.write("verified\n" if ok else "FAILED\n")
    return EXIT_OK if ok else EXIT_FAIL


# best --------------------------------------------------------------------


def describe_best(k: int, x: int, y: int) -> tuple[Position, str, dict]:
    pos = Position.of(x, y)
    oracle = WinningMoveOracle(k, limit=max(pos.y, 1))
    wm = oracle.winning_move(pos)
    if wm is None:
        return pos, "P-position", {"k": k, "position": list(pos), "p_position": True}
    info = {
        "k": k,
        "position": list(pos),
        "p_position": False,
        "move": {"type": wm.move.kind.name, "u": wm.move.u, "v": wm.move.v, "index": wm.move.index},
        "target": list(wm.target),
        "case": wm.case,
    }
    return pos, str(wm), info


def cmd_best(args, out) -> int:
    pos, text, info = describe_best(args.k, args.x, args.y)
    if args.format == "json":
        out.write(dump_json(info))
    else:
        out.write(f"position {pos}\n{text}\n")
    return EXIT_OK


# play --------------------------------------------------------------------


def _engine_move(oracle: WinningMoveOracle, pos: Position) -> tuple[MoveSpec, Position]:
    wm = oracle.winning_move(pos)
    if wm is not None:
        return wm.move, wm.target
    # lost position: take one token from the larger heap
    return MoveSpec(0, 1, MoveType.I), Position.of(pos.x, pos.y - 1)


def parse_human_move(text: str, pos: Position, k: int, table: ExtraMoveTable) -> tuple[Position, str]:
    """``"dx dy"``: tokens taken from the first and second displayed heap.

    Returns the new position, or raises ValueError with the reason.
    """
    parts = text.split()
    if len(parts) != 2:
        raise ValueError("enter two integers: tokens from the first heap and from the second")
    try:
        dx, dy = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError("enter two integers: tokens from the first heap and from the second")
    if dx < 0 or dy < 0 or dx + dy == 0:
        raise ValueError("remove a non-negative number from each heap, and at least one token")
    if dx > pos.x or dy > pos.y:
        raise ValueError(f"cannot remove ({dx},{dy}) from {pos}")
    spec = classify_move(k, dx, dy, table)
    if spec is None:
        raise ValueError(f"({min(dx, dy)},{max(dx, dy)}) is not a move of this game")
    return Position.of(pos.x - dx, pos.y - dy), str(spec)


def play(k: int, start: Position, engine_first: bool, inp, out) -> str | None:
    """Text game against the oracle; returns the winner, or None if abandoned."""
    oracle = WinningMoveOracle(k, limit=max(start.y, 1))
    table = oracle.extra
    pos = start
    human_turn = not engine_first
    out.write(f"Gamma_{k}, start {pos}. A move is 'dx dy'; the player who reaches (0,0) wins.\n")
    while True:
        if pos == Position(0, 0):
            winner = "engine" if human_turn else "you"
            out.write(f"(0,0) reached: {winner} win{'s' if winner == 'engine' else ''}.\n")
            return winner
        if human_turn:
            out.write(f"position {pos}> ")
            out.flush()
            line = inp.readline()
            if not line:
                out.write("\nno input; game abandoned\n")
                return None
            if line.strip() in {"q", "quit"}:
                out.write("game abandoned\n")
                return None
            try:
                pos, what = parse_human_move(line, pos, k, table)
            except ValueError as exc:
                out.write(f"illegal: {exc}\n")
                continue
            out.write(f"you: {what} -> {pos}\n")
        else:
            spec, pos = _engine_move(oracle, pos)
            out.write(f"engine: {spec} -> {pos}\n")
        human_turn = not human_turn


def cmd_play(args, out, inp=None) -> int:
    start = Position.of(*args.start)
    winner = play(args.k, start, args.engine_first, inp or sys.stdin, out)
    return EXIT_OK if winner else EXIT_FAIL


# word --------------------------------------------------------------------


def cmd_word(args, out) -> int:
    p = GameParams(args.k)
    if args.check:
        agree = three_way_agreement(p, args.len)
        out.write(f"{agree}/3 constructions agree (k={args.k}, length={args.len})\n")
        return EXIT_OK if agree == 3 else EXIT_FAIL
    if args.via == "beatty":
        word = beatty_word(p, args.len)
    elif args.via == "phi":
        word = phi_word(p, args.len)
    else:
        plain = ("0" + theta_word(p, args.len))[: args.len]
        word = WordView(p.k, index_taus(plain, p.k))
    out.write(word.to_str(indexed=args.indexed) + "\n")
    return EXIT_OK


# synth -------------------------------------------------------------------


def cmd_synth(args, out) -> int:
    orders = ORDERS if args.order == "auto" else (args.order,)
    report = compare_with_typeiii(args.k, args.bound, orders=orders, oriented=args.oriented)
    if args.format == "json":
        out.write(dump_json(report.to_dict()))
    else:
        fmt = lambda ms: " ".join(f"({u},{v})" for u, v in ms) or "(none)"
        out.write(f"k={report.k} bound={report.bound} order={report.order} oriented={report.oriented}\n")
        out.write(f"adjoined: {fmt(report.adjoined)}\n")
        out.write(f"type III: {fmt(report.expected)}\n")
        if report.matches:
            out.write(f"match under order '{report.order}'\n")
        else:
            out.write(f"MISMATCH missing={fmt(report.missing)} unexpected={fmt(report.unexpected)}\n")
    return EXIT_OK if report.matches else EXIT_FAIL


# parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="beattygame", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, formats=("table", "csv", "json")):
        sp.add_argument("--k", type=_positive_int, required=True, help="game parameter k >= 1")
        if formats:
            sp.add_argument("--format", choices=formats, default="table")

    sp = sub.add_parser("seq", help="dump n, a_n, b_n, c_n, d_n, letter of W, index")
    common(sp)
    sp.add_argument("--n", type=_nonneg_int, required=True)
    sp.set_defaults(func=cmd_seq)

    sp = sub.add_parser("verify", help="solve the grid and check it against S_k")
    common(sp)
    sp.add_argument("--bound", type=_nonneg_int, required=True)
    sp.add_argument("--no-timings", action="store_true", help="emit an empty timings_ms map")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("best", help="winning move from a position")
    common(sp, formats=("table", "json"))
    sp.add_argument("x", type=_nonneg_int)
    sp.add_argument("y", type=_nonneg_int)
    sp.set_defaults(func=cmd_best)

    sp = sub.add_parser("play", help="play against the engine on stdin/stdout")
    common(sp, formats=())
    sp.add_argument("--start", type=_nonneg_int, nargs=2, default=[20, 30], metavar=("X", "Y"))
    sp.add_argument("--engine-first", action="store_true")
    sp.set_defaults(func=cmd_play)

    sp = sub.add_parser("word", help="prefix of the Sturmian word W")
    common(sp, formats=())
    sp.add_argument("--len", type=_positive_int, required=True)
    sp.add_argument("--via", choices=("beatty", "phi", "theta"), default="phi")
    sp.add_argument("--indexed", action="store_true", help="print tau indices")
    sp.add_argument("--check", action="store_true", help="cross-check all three constructions")
    sp.set_defaults(func=cmd_word)

    sp = sub.add_parser("synth", help="greedy move mining, compared with the Type III moves")
    common(sp, formats=("table", "json"))
    sp.add_argument("--bound", type=_nonneg_int, required=True)
    sp.add_argument("--order", choices=("auto",) + ORDERS, default="auto")
    sp.add_argument("--oriented", action="store_true", help="mine ordered pairs")
    sp.set_defaults(func=cmd_synth)
    return parser


def main(argv: list[str] | None = None, out=None, inp=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = out or sys.stdout
    if args.func is cmd_play:
        return cmd_play(args, out, inp)
    return args.func(args, out)


if __name__ == "__main__":
    sys.exit(main())
