"""Command-line front end: ``pawncgt analyze|value|mzz|oracle|fuzz``."""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus
from . import kernel as k
from .analysis import DEFAULT_BUDGET, BudgetExceeded, RandomParams, analyze, fuzz, oracle
from .board import FenError, Side, parse_fen
from .expr import ValueSyntaxError, parse_value
from .naming import describe, format_value
from .valuation import OFFSCALE

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_CROSSCHECK = 0, 1, 2, 3

_SIGN_WORDS = {
    k.Outcome.LEFT: "positive",
    k.Outcome.RIGHT: "negative",
    k.Outcome.SECOND: "zero",
    k.Outcome.FIRST: "fuzzy",
}


class InputError(Exception):
    pass


def _board(args):
    if getattr(args, "corpus", None):
        if args.fen:
            raise InputError("give either a FEN or --corpus, not both")
        try:
            return parse_fen(corpus.get(args.corpus).fen)
        except KeyError as e:
            raise InputError(e.args[0]) from None
    if not args.fen:
        raise InputError("a FEN (or --corpus NAME) is required")
    return parse_fen(args.fen)


def cmd_analyze(args) -> int:
    board = _board(args)
    report = analyze(board, args.offset, offscale=args.offscale, en_passant=not args.no_ep)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.to_text())
    return EXIT_OK


def cmd_value(args) -> int:
    g = parse_value(args.expr)
    print(f"{describe(g)}, {_SIGN_WORDS[k.outcome(g)]}")
    if args.expr2 is not None:
        h = parse_value(args.expr2)
        print(f"{describe(h)}, {_SIGN_WORDS[k.outcome(h)]}")
        lo, hi = k.leq(g, h), k.leq(h, g)
        rel = "=" if lo and hi else "<" if lo else ">" if hi else "||"
        print(f"{format_value(g)} {rel} {format_value(h)}")
    return EXIT_OK


def cmd_mzz(args) -> int:
    report = analyze(_board(args), args.offset)
    if report.mzz:
        print("mutual zugzwang: total is 0")
        return EXIT_OK
    print(report.total_text())
    return EXIT_FALSE


def cmd_oracle(args) -> int:
    board = _board(args)
    v = oracle(board, args.budget)
    sides = [Side.parse(args.side)] if args.side else list(Side)
    for s in sides:
        prefix = "" if args.side else f"{s.label} to move: "
        print(prefix + v.winner(s).label)
    print(f"nodes: {v.nodes}")
    return EXIT_OK


def cmd_fuzz(args) -> int:
    params = RandomParams(height=args.height, width=args.width, max_files=args.max_files, max_pawns=args.max_pawns)
    summary = fuzz(params, args.seed, args.count, args.budget)
    print(summary.to_text())
    return EXIT_CROSSCHECK if summary.unflagged_disagreements else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pawncgt", description="Combinatorial game values of pawn positions.")
    sub = p.add_subparsers(dest="command", required=True)

    def board_args(q):
        q.add_argument("fen", nargs="?", help="extended FEN, top rank first")
        q.add_argument("--corpus", metavar="NAME", help="use a shipped position, e.g. 5 or diagram4-h3")

    a = sub.add_parser("analyze", help="value every component and decide the outcome")
    board_args(a)
    a.add_argument("--offset", metavar="EXPR", help="extra value added to the total")
    a.add_argument("--no-ep", action="store_true", help="suppress en passant captures")
    a.add_argument("--offscale", type=int, default=OFFSCALE, help="value of a promotion (default %(default)s)")
    a.add_argument("--json", action="store_true", help="structured output")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("value", help="canonical form, name and sign of a value; compare two values")
    v.add_argument("expr")
    v.add_argument("expr2", nargs="?")
    v.set_defaults(func=cmd_value)

    m = sub.add_parser("mzz", help="exit 0 iff the position is a mutual zugzwang")
    board_args(m)
    m.add_argument("--offset", metavar="EXPR")
    m.set_defaults(func=cmd_mzz)

    o = sub.add_parser("oracle", help="brute-force winner of the full-board pawn game")
    board_args(o)
    o.add_argument("--side", choices=["w", "b"], help="side to move (default: both)")
    o.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node budget")
    o.set_defaults(func=cmd_oracle)

    f = sub.add_parser("fuzz", help="cross-check analysis against the oracle on random boards")
    f.add_argument("--seed", type=int, default=7)
    f.add_argument("--count", type=int, default=200)
    f.add_argument("--height", type=int, default=8)
    f.add_argument("--width", type=int, default=8)
    f.add_argument("--max-files", type=int, default=3)
    f.add_argument("--max-pawns", type=int, default=6)
    f.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    f.set_defaults(func=cmd_fuzz)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FenError, ValueSyntaxError, BudgetExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        # bad square names, sides, board parameters
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
