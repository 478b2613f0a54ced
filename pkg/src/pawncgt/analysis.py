"""Whole-position analysis, the brute-force oracle and the fuzz harness."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from . import kernel as k
from .board import (
    Board,
    Component,
    EpState,
    Move,
    Side,
    decompose,
    format_move,
    legal_moves,
    parse_fen,
    play,
    render_fen,
)
from .expr import parse_value
from .kernel import Game, Outcome
from .naming import Unnamed, format_value, recognize
from .valuation import OFFSCALE, SubgameValue, Valuator, valuator

DEFAULT_BUDGET = 10**7
PROMOTION_SKEW = 8


class BudgetExceeded(RuntimeError):
    pass


EP_SENSITIVE = "ep_sensitive"
OFFSCALE_SURVIVAL = "offscale_survival"
STOP_MAGNITUDE = "stop_magnitude"
FLAGGING = (EP_SENSITIVE, OFFSCALE_SURVIVAL)


@dataclass(frozen=True)
class ReportWarning:
    kind: str
    message: str

    @property
    def flags(self) -> bool:
        """Whether this warning marks the verdict as approximate."""
        return self.kind in FLAGGING

    def __str__(self):
        return self.message


@dataclass
class ComponentReport:
    component: Component
    value: SubgameValue

    @property
    def span(self) -> str:
        return self.component.span


@dataclass
class AnalysisReport:
    board: Board
    components: list[ComponentReport]
    offset: Game
    total: Game
    winner_white_to_move: Side
    winner_black_to_move: Side
    mzz: bool
    winning_moves: dict[Side, list[str]]
    warnings: list[ReportWarning] = field(default_factory=list)

    @property
    def outcome(self) -> Outcome:
        return k.outcome(self.total)

    @property
    def flagged(self) -> bool:
        return any(w.flags for w in self.warnings)

    def total_text(self) -> str:
        """Name of the total, or the sum of component names when unnamed."""
        if not isinstance(recognize(self.total), Unnamed):
            return format_value(self.total)
        terms = [format_value(c.value.game) for c in self.components if c.value.game is not k.ZERO]
        if self.offset is not k.ZERO:
            terms.append(format_value(self.offset))
        return " + ".join(terms) if terms else "0"

    def verdict_text(self) -> str:
        return {
            Outcome.LEFT: "White wins either way",
            Outcome.RIGHT: "Black wins either way",
            Outcome.SECOND: "second player wins (mutual zugzwang)",
            Outcome.FIRST: "first player wins",
        }[self.outcome]

    def to_dict(self) -> dict:
        return {
            "board": render_fen(self.board),
            "components": [
                {
                    "files": c.span,
                    "value": format_value(c.value.game),
                    "name": str(c.value.name),
                    "offscale_reached": c.value.offscale_reached,
                    "ep_sensitive": c.value.ep_sensitive,
                }
                for c in self.components
            ],
            "offset": format_value(self.offset),
            "total": format_value(self.total),
            "total_expr": self.total_text(),
            "outcome": self.outcome.value,
            "winner_white_to_move": self.winner_white_to_move.label,
            "winner_black_to_move": self.winner_black_to_move.label,
            "mzz": self.mzz,
            "winning_moves": {
                "white": list(self.winning_moves[Side.WHITE]),
                "black": list(self.winning_moves[Side.BLACK]),
            },
            "warnings": [{"kind": w.kind, "message": w.message} for w in self.warnings],
        }

    def to_text(self) -> str:
        lines = [self.board.diagram(), ""]
        for c in self.components:
            flags = []
            if c.value.ep_sensitive:
                flags.append("ep-sensitive")
            if c.value.offscale_reached:
                flags.append("offscale")
            extra = f"  [{', '.join(flags)}]" if flags else ""
            lines.append(f"  {c.span:<6} {format_value(c.value.game)}{extra}")
        if self.offset is not k.ZERO:
            lines.append(f"  offset {format_value(self.offset)}")
        lines.append(f"total: {self.total_text()} ; {self.verdict_text()}")
        for side in Side:
            moves = ", ".join(self.winning_moves[side]) or "none"
            lines.append(f"winning moves for {side.label}: {moves}")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines)


def winner_from_outcome(o: Outcome, mover: Side) -> Side:
    if o is Outcome.LEFT:
        return Side.WHITE
    if o is Outcome.RIGHT:
        return Side.BLACK
    if o is Outcome.SECOND:
        return mover.opponent
    return mover


def _offset_game(offset) -> Game:
    if offset is None:
        return k.ZERO
    if isinstance(offset, Game):
        return k.canonicalize(offset)
    return parse_value(offset)


def _component_moves(val: Valuator, comp: Component, side: Side) -> list[tuple[Move, Game]]:
    out = []
    for m in val.admissible_moves(comp, side):
        b, ep = play(comp.board, m)
        out.append((m, val.game_of(b, ep)))
    return out


def winning_moves(
    board: Board,
    side: Side,
    offset=None,
    val: Valuator | None = None,
) -> list[str]:
    """Admissible moves after which the opponent, moving next, loses."""
    val = val or valuator()
    off = _offset_game(offset)
    comps = decompose(board)
    values = [val.game_of(c) for c in comps]
    found = []
    for i, comp in enumerate(comps):
        rest = k.add_all([off] + values[:i] + values[i + 1 :])
        for m, g in _component_moves(val, comp, side):
            t = k.add(rest, g)
            ok = k.leq(k.ZERO, t) if side is Side.WHITE else k.leq(t, k.ZERO)
            if ok:
                found.append((comp.first + m.src % comp.board.width, m, comp))
    found.sort(key=lambda x: (x[0], x[1].src // board.width, x[1].dst, x[1].kind.value))
    return [format_move(c.board, m, c.first) for _, m, c in found]


def _promotion_dependence(comps: list[ComponentReport], off: Game, o: Outcome, val: Valuator) -> list[str]:
    """Spans involved when the verdict hinges on lines with promotions by both sides.

    After both sides promote the two terminals cancel and play goes on, which
    need not match first-to-promote-wins.  Reweighting one side's promotions
    far above the other's exposes verdicts that rest on such lines.
    """
    signs: dict[int, list[str]] = {1: [], -1: []}
    for c in comps:
        for sign in val.offscale_signs(c.value.game):
            signs[sign].append(c.span)
    if not (signs[1] and signs[-1]):
        return []
    for weights in ((PROMOTION_SKEW, 1), (1, PROMOTION_SKEW)):
        other = valuator(val.offscale, val.en_passant, weights)
        total = k.add_all([off] + [other.game_of(c.component) for c in comps])
        if k.outcome(total) is not o:
            return sorted(set(signs[1] + signs[-1]))
    return []


def analyze(
    board: Board | str,
    offset=None,
    *,
    offscale: int = OFFSCALE,
    en_passant: bool = True,
) -> AnalysisReport:
    if isinstance(board, str):
        board = parse_fen(board)
    val = valuator(offscale, en_passant)
    off = _offset_game(offset)
    comps = [ComponentReport(c, val.component_value(c)) for c in decompose(board)]
    total = k.add_all([off] + [c.value.game for c in comps])
    o = k.outcome(total)
    warnings = []
    for c in comps:
        if c.value.ep_sensitive:
            warnings.append(ReportWarning(EP_SENSITIVE, f"component {c.span} is en-passant sensitive; its value is a local approximation"))
    survival = _promotion_dependence(comps, off, o, val)
    if survival:
        warnings.append(
            ReportWarning(
                OFFSCALE_SURVIVAL,
                "outcome depends on lines where both sides promote (components " + ", ".join(survival) + ")",
            )
        )
    half = Fraction(offscale, 2)
    for c in comps:
        ls, rs = k.stops(c.value.game)
        if max(abs(ls), abs(rs)) >= half:
            warnings.append(ReportWarning(STOP_MAGNITUDE, f"component {c.span} stops ({ls}, {rs}) reach offscale/2"))
    return AnalysisReport(
        board=board,
        components=comps,
        offset=off,
        total=total,
        winner_white_to_move=winner_from_outcome(o, Side.WHITE),
        winner_black_to_move=winner_from_outcome(o, Side.BLACK),
        mzz=o is Outcome.SECOND,
        winning_moves={s: winning_moves(board, s, off, val) for s in Side},
        warnings=warnings,
    )


# ---------------------------------------------------------------- oracle


@dataclass
class OracleVerdict:
    winner_white_to_move: Side
    winner_black_to_move: Side
    nodes: int
    depth: int

    def winner(self, mover: Side) -> Side:
        return self.winner_white_to_move if mover is Side.WHITE else self.winner_black_to_move


class _Oracle:
    """Last-mover-wins pawn game on the full board; promotion wins at once."""

    def __init__(self, budget: int):
        self.budget = budget
        self.memo: dict = {}
        self.nodes = 0
        self.depth = 0

    def wins(self, board: Board, ep: EpState | None, side: Side, ply: int = 0) -> bool:
        key = (board.cells, ep, side)
        r = self.memo.get(key)
        if r is not None:
            return r
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"oracle exceeded {self.budget} nodes")
        self.depth = max(self.depth, ply)
        moves = legal_moves(board, side, ep)
        top = board.promotion_rank(side)
        r = False
        for m in moves:
            if board.coords(m.dst)[1] == top:
                r = True
                break
        if not r:
            for m in moves:
                b, ep2 = play(board, m)
                if not self.wins(b, ep2, side.opponent, ply + 1):
                    r = True
                    break
        self.memo[key] = r
        return r


def oracle(board: Board | str, budget: int = DEFAULT_BUDGET) -> OracleVerdict:
    if isinstance(board, str):
        board = parse_fen(board)
    o = _Oracle(budget)
    w = {}
    for side in Side:
        w[side] = side if o.wins(board, None, side) else side.opponent
    return OracleVerdict(w[Side.WHITE], w[Side.BLACK], o.nodes, o.depth)


def oracle_outcome(board: Board | str, side_to_move: Side, budget: int = DEFAULT_BUDGET) -> Side:
    if isinstance(board, str):
        board = parse_fen(board)
    o = _Oracle(budget)
    return side_to_move if o.wins(board, None, side_to_move) else side_to_move.opponent


# ---------------------------------------------------------------- cross-check


@dataclass
class CrossCheck:
    board: Board
    predicted: tuple[Side, Side]
    actual: tuple[Side, Side]
    warnings: list[ReportWarning]
    nodes: int

    @property
    def agree(self) -> bool:
        return self.predicted == self.actual

    @property
    def flagged(self) -> bool:
        return any(w.flags for w in self.warnings)


def cross_check(board: Board | str, budget: int = DEFAULT_BUDGET) -> CrossCheck:
    if isinstance(board, str):
        board = parse_fen(board)
    rep = analyze(board)
    orc = oracle(board, budget)
    return CrossCheck(
        board,
        (rep.winner_white_to_move, rep.winner_black_to_move),
        (orc.winner_white_to_move, orc.winner_black_to_move),
        rep.warnings,
        orc.nodes,
    )


@dataclass(frozen=True)
class RandomParams:
    height: int = 8
    width: int = 8
    max_files: int = 3
    max_pawns: int = 6


def gen_random(params: RandomParams, seed: int) -> Board:
    """Deterministic random position: pawns on at most ``max_files`` adjacent files."""
    rng = random.Random(seed)
    nfiles = rng.randint(1, min(params.max_files, params.width))
    first = rng.randint(0, params.width - nfiles)
    squares = [(f, r) for f in range(first, first + nfiles) for r in range(2, params.height)]
    count = rng.randint(1, min(params.max_pawns, len(squares)))
    cells = ["."] * (params.width * params.height)
    for f, r in rng.sample(squares, count):
        cells[(r - 1) * params.width + f] = rng.choice("Pp")
    return Board(params.width, params.height, "".join(cells))


@dataclass
class FuzzCase:
    seed: int
    fen: str
    predicted: tuple[str, str]
    actual: tuple[str, str]
    warnings: list[str]


@dataclass
class FuzzSummary:
    params: RandomParams
    seed: int
    count: int
    agreements: int
    flagged: list[FuzzCase]
    disagreements: list[FuzzCase]
    values: Counter

    @property
    def unflagged_disagreements(self) -> list[FuzzCase]:
        return [c for c in self.disagreements if not c.warnings]

    def to_text(self) -> str:
        p = self.params
        lines = [
            f"fuzz seed={self.seed} count={self.count} board={p.width}x{p.height} "
            f"max_files={p.max_files} max_pawns={p.max_pawns}",
            f"agreements: {self.agreements}/{self.count}",
            f"flagged: {len(self.flagged)}",
            f"disagreements: {len(self.disagreements)} (unflagged: {len(self.unflagged_disagreements)})",
        ]
        for c in self.disagreements:
            tag = "flagged" if c.warnings else "UNFLAGGED"
            lines.append(
                f"  {tag} seed={c.seed} fen={c.fen} predicted={'/'.join(c.predicted)} oracle={'/'.join(c.actual)}"
            )
        for c in self.flagged:
            lines.append(f"  flagged seed={c.seed} fen={c.fen}: {'; '.join(c.warnings)}")
        lines.append("component values seen:")
        for name, n in sorted(self.values.items(), key=lambda kv: (-kv[1], kv[0])):
            lines.append(f"  {name}: {n}")
        return "\n".join(lines)


def case_seeds(seed: int, count: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.randrange(2**32) for _ in range(count)]


def fuzz(params: RandomParams, seed: int, count: int, budget: int = DEFAULT_BUDGET) -> FuzzSummary:
    values: Counter = Counter()
    flagged, bad = [], []
    agree = 0
    for s in case_seeds(seed, count):
        board = gen_random(params, s)
        rep = analyze(board)
        for c in rep.components:
            values[format_value(c.value.game)] += 1
        orc = oracle(board, budget)
        pred = (rep.winner_white_to_move, rep.winner_black_to_move)
        act = (orc.winner_white_to_move, orc.winner_black_to_move)
        case = FuzzCase(
            s,
            render_fen(board),
            tuple(x.label for x in pred),
            tuple(x.label for x in act),
            [w.message for w in rep.warnings if w.flags],
        )
        if pred == act:
            agree += 1
        else:
            bad.append(case)
        if case.warnings:
            flagged.append(case)
    return FuzzSummary(params, seed, count, agree, flagged, bad, values)
