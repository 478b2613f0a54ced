"""Canonical values of pawn subgames.

A move is *admissible* unless, afterwards, the opponent can force a pawn
through to promotion against every defence, where the defender may also
pass (tempo elsewhere in the sum).  Promotion itself is terminal and worth
``+offscale`` to White or ``-offscale`` to Black.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import kernel as k
from .board import OPPONENT, Board, Component, EpState, Move, MoveKind, Side, legal_moves, play
from .kernel import Game
from .naming import ValueName, recognize

OFFSCALE = 1000

PASS = None

_PUSHES = (MoveKind.PUSH1, MoveKind.PUSH2)


@dataclass(frozen=True)
class RaceVerdict:
    side: Side
    witness: tuple  # racer moves interleaved with defender replies; PASS = defender tempo


@dataclass
class SubgameValue:
    game: Game
    name: ValueName
    offscale_reached: bool = False
    ep_sensitive: bool = False


@dataclass
class Valuator:
    """Memoized valuation under one configuration.

    ``en_passant=False`` suppresses every en-passant capture, which is what
    the sensitivity check compares against.
    """

    offscale: int = OFFSCALE
    en_passant: bool = True
    weights: tuple[int, int] = (1, 1)  # promotion worth offscale*w to White, offscale*b to Black
    _race: dict = field(default_factory=dict, repr=False)
    _shortest: dict = field(default_factory=dict, repr=False)
    _games: dict = field(default_factory=dict, repr=False)
    _admissible: dict = field(default_factory=dict, repr=False)

    def _moves(self, board: Board, side: Side, ep: EpState | None) -> list[Move]:
        if not self.en_passant or (ep is not None and ep.side is not side):
            ep = None
        return legal_moves(board, side, ep)

    def _after(self, board: Board, move: Move):
        b, ep = play(board, move)
        return b, (ep if self.en_passant else None)

    # ------------------------------------------------------------ races

    def can_force_promotion(self, position, racer: Side, ep: EpState | None = None) -> RaceVerdict | None:
        """Racer to move: can it promote against every defence, passes included?

        The witness is a shortest forcing line; defender replies in it are the
        ones that delay promotion longest.
        """
        board = getattr(position, "board", position)
        w = self._shortest_line(board, ep, racer, racer)
        return None if w is None else RaceVerdict(racer, w)

    def _race_line(self, board: Board, ep, racer: Side, turn: Side):
        """Some forcing line for the racer, or None."""
        key = (board.cells, board.width, ep, racer, turn)
        if key in self._race:
            return self._race[key]
        self._race[key] = None  # pawn moves are irreversible; no cycles
        result = None
        if turn is racer:
            moves = self._moves(board, racer, ep)
            # most advanced pawns first: forcing lines are found sooner
            moves.sort(key=lambda m: m.dst * racer, reverse=True)
            for m in moves:
                b, ep2 = self._after(board, m)
                if b.promoted() is racer:
                    result = (m,)
                    break
                line = self._race_line(b, ep2, racer, OPPONENT[racer])
                if line is not None:
                    result = (m,) + line
                    break
        else:
            defender = turn
            line = self._race_line(board, None, racer, racer)
            if line is not None:
                result = (PASS,) + line
                for m in self._moves(board, defender, ep):
                    b, ep2 = self._after(board, m)
                    if b.promoted() is defender or self._race_line(b, ep2, racer, racer) is None:
                        result = None
                        break
        self._race[key] = result
        return result

    def _shortest_line(self, board: Board, ep, racer: Side, turn: Side):
        # racer minimizes the line length, defender maximizes it; only called
        # where a forcing line is known to exist somewhere below
        key = (board.cells, board.width, ep, racer, turn)
        if key in self._shortest:
            return self._shortest[key]
        result = None
        if self._race_line(board, ep, racer, turn) is not None:
            if turn is racer:
                # among equally short lines prefer one that captures
                moves = sorted(self._moves(board, racer, ep), key=lambda m: m.kind in _PUSHES)
                for m in moves:
                    b, ep2 = self._after(board, m)
                    if b.promoted() is racer:
                        result = (m,)
                        break
                    line = self._shortest_line(b, ep2, racer, OPPONENT[racer])
                    if line is not None and (result is None or len(line) + 1 < len(result)):
                        result = (m,) + line
            else:
                result = (PASS,) + self._shortest_line(board, None, racer, racer)
                for m in self._moves(board, turn, ep):
                    b, ep2 = self._after(board, m)
                    line = self._shortest_line(b, ep2, racer, racer)
                    if len(line) + 1 > len(result):
                        result = (m,) + line
        self._shortest[key] = result
        return result

    def admissible_moves(self, position, side: Side, ep: EpState | None = None) -> list[Move]:
        """Legal moves that do not let the opponent force a promotion."""
        board = getattr(position, "board", position)
        key = (board.cells, board.width, ep if ep is not None and ep.side is side else None, side)
        hit = self._admissible.get(key)
        if hit is not None:
            return hit
        out = []
        for m in self._moves(board, side, ep):
            b, ep2 = self._after(board, m)
            if b.promoted() is side or self._race_line(b, ep2, OPPONENT[side], OPPONENT[side]) is None:
                out.append(m)
        self._admissible[key] = out
        return out

    # ------------------------------------------------------------ values

    def game_of(self, position, ep: EpState | None = None) -> Game:
        board = getattr(position, "board", position)
        if not self.en_passant:
            ep = None
        key = (board.cells, board.width, ep)
        g = self._games.get(key)
        if g is not None:
            return g
        winner = board.promoted()
        if winner is not None:
            g = k.number(self.terminal(winner))
        else:
            # an ep right belongs to one side only and lapses if the other
            # side moves here again (the entitled side moved elsewhere)
            opts = {}
            for side in Side:
                e = ep if ep is not None and ep.side is side else None
                opts[side] = [self.game_of(*self._after(board, m)) for m in self.admissible_moves(board, side, e)]
            g = k.canonical_make(opts[Side.WHITE], opts[Side.BLACK])
        self._games[key] = g
        return g

    def terminal(self, side: Side) -> int:
        """Value of a position in which ``side`` has promoted."""
        return self.offscale * self.weights[0] if side is Side.WHITE else -self.offscale * self.weights[1]

    def offscale_signs(self, g: Game) -> set[int]:
        """Signs of the promotion-sized numbers kept in G's canonical tree."""
        limit = Fraction(self.offscale, 2)
        signs = set()
        for x in _non_number_closure(g):
            if x.number is not None and abs(x.number) >= limit:
                signs.add(1 if x.number > 0 else -1)
        return signs

    def offscale_reached(self, g: Game) -> bool:
        return bool(self.offscale_signs(g))

    def component_value(self, component, check_ep: bool = True) -> SubgameValue:
        g = self.game_of(component)
        sensitive = check_ep and self.en_passant and ep_sensitive(component, self)
        return SubgameValue(g, recognize(g), self.offscale_reached(g), sensitive)


def _non_number_closure(g: Game) -> list[Game]:
    """Subgames reachable from G without descending into numbers."""
    seen: dict[int, Game] = {}
    stack = [g]
    while stack:
        x = stack.pop()
        if x.uid in seen:
            continue
        seen[x.uid] = x
        if x.number is None:
            stack.extend(x.left)
            stack.extend(x.right)
    return list(seen.values())


_default: dict[tuple, Valuator] = {}


def valuator(offscale: int = OFFSCALE, en_passant: bool = True, weights: tuple[int, int] = (1, 1)) -> Valuator:
    """Shared valuator for a configuration (memo tables persist)."""
    key = (offscale, en_passant, weights)
    if key not in _default:
        _default[key] = Valuator(offscale, en_passant, weights)
    return _default[key]


def has_double_step(board: Board) -> bool:
    """Whether any pawn could still make a double step (on or behind its initial rank)."""
    w = board.width
    return "P" in board.cells[: 2 * w] or "p" in board.cells[(board.height - 2) * w :]


def ep_sensitive(component, val: Valuator | None = None) -> bool:
    """True iff suppressing en passant changes the component's value."""
    board = getattr(component, "board", component)
    if not has_double_step(board):
        return False
    val = val or valuator()
    plain = valuator(val.offscale, en_passant=False)
    return not k.eq(val.game_of(board), plain.game_of(board))


# convenience wrappers over the shared default valuator


def can_force_promotion(position, racer: Side, ep: EpState | None = None) -> RaceVerdict | None:
    return valuator().can_force_promotion(position, racer, ep)


def admissible_moves(position, side: Side, ep: EpState | None = None) -> list[Move]:
    return valuator().admissible_moves(position, side, ep)


def game_of(position, ep: EpState | None = None) -> Game:
    return valuator().game_of(position, ep)


def component_value(component: Component | Board, offscale: int = OFFSCALE, en_passant: bool = True) -> SubgameValue:
    return valuator(offscale, en_passant).component_value(component)
