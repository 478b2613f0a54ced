"""Pawn positions on generalized boards.

A :class:`Board` is ``width`` files by ``height`` ranks.  Cells are stored
as one string, rank 1 first: ``'.'`` empty, ``'P'`` White pawn, ``'p'``
Black pawn, any other letter an immobile, uncapturable wall.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

FILES = "abcdefghijklmnopqrstuvwxyz"
EMPTY = "."


class Side(enum.IntEnum):
    """Left is White, Right is Black; the value doubles as the pawn direction."""

    WHITE = 1
    BLACK = -1

    @property
    def opponent(self) -> "Side":
        return OPPONENT[self]

    @property
    def pawn(self) -> str:
        return "P" if self is Side.WHITE else "p"

    @property
    def label(self) -> str:
        return "White" if self is Side.WHITE else "Black"

    @classmethod
    def parse(cls, text: str) -> "Side":
        t = text.strip().lower()
        if t in ("w", "white", "left"):
            return cls.WHITE
        if t in ("b", "black", "right"):
            return cls.BLACK
        raise ValueError(f"unknown side {text!r}")


OPPONENT = {Side.WHITE: Side.BLACK, Side.BLACK: Side.WHITE}


class FenError(ValueError):
    pass


class MoveKind(enum.Enum):
    PUSH1 = "push1"
    PUSH2 = "push2"
    CAPTURE = "capture"
    EN_PASSANT = "en_passant"


class EpState(NamedTuple):
    """Square a pawn skipped over, and the side entitled to capture there."""

    square: int
    side: Side


class Move(NamedTuple):
    src: int
    dst: int
    kind: MoveKind
    side: Side


class Board(NamedTuple):
    width: int
    height: int
    cells: str

    def index(self, file: int, rank: int) -> int:
        """0-based file, 1-based rank."""
        return (rank - 1) * self.width + file

    def coords(self, square: int) -> tuple[int, int]:
        return square % self.width, square // self.width + 1

    def square_name(self, square: int) -> str:
        f, r = self.coords(square)
        return f"{FILES[f]}{r}"

    def parse_square(self, name: str) -> int:
        f = FILES.index(name[0])
        r = int(name[1:])
        if not (0 <= f < self.width and 1 <= r <= self.height):
            raise ValueError(f"square {name} is off the board")
        return self.index(f, r)

    def at(self, file: int, rank: int) -> str:
        return self.cells[self.index(file, rank)]

    def pawns(self, side: Side | None = None) -> list[int]:
        marks = "Pp" if side is None else side.pawn
        return [i for i, c in enumerate(self.cells) if c in marks]

    def file_has_pawn(self, file: int) -> bool:
        return any(self.at(file, r) in "Pp" for r in range(1, self.height + 1))

    def promotion_rank(self, side: Side) -> int:
        return self.height if side is Side.WHITE else 1

    def initial_rank(self, side: Side) -> int:
        return 2 if side is Side.WHITE else self.height - 1

    def promoted(self) -> Side | None:
        """Side with a pawn on its promotion rank, if any."""
        top = self.cells[(self.height - 1) * self.width :]
        if "P" in top:
            return Side.WHITE
        if "p" in self.cells[: self.width]:
            return Side.BLACK
        return None

    def with_cells(self, changes: dict[int, str]) -> "Board":
        cells = list(self.cells)
        for sq, c in changes.items():
            cells[sq] = c
        return Board(self.width, self.height, "".join(cells))

    def files(self, first: int, last: int) -> "Board":
        """Sub-board made of files ``first..last`` (inclusive)."""
        w = last - first + 1
        rows = [self.cells[r * self.width + first : r * self.width + first + w] for r in range(self.height)]
        return Board(w, self.height, "".join(rows))

    def shifted(self, files: int, width: int | None = None) -> "Board":
        """Same pawns moved ``files`` files right on a board ``width`` wide."""
        width = width or self.width + files
        rows = [
            "." * files + self.cells[r * self.width : (r + 1) * self.width] + "." * (width - self.width - files)
            for r in range(self.height)
        ]
        return Board(width, self.height, "".join(rows))

    def __str__(self):
        return render_fen(self)

    def diagram(self) -> str:
        rows = []
        for r in range(self.height, 0, -1):
            row = self.cells[(r - 1) * self.width : r * self.width]
            rows.append(f"{r:>2} {row}")
        rows.append("   " + FILES[: self.width])
        return "\n".join(rows)


def empty_board(width: int = 8, height: int = 8) -> Board:
    return Board(width, height, EMPTY * (width * height))


def parse_fen(text: str) -> Board:
    """Parse the pawn-only extended FEN used throughout the package."""
    text = text.strip()
    if not text:
        raise FenError("empty FEN")
    rows = text.split("/")
    height = len(rows)
    if height < 4:
        raise FenError(f"board height {height} is below 4")
    parsed = []
    for n, row in enumerate(rows):
        cells = []
        i = 0
        while i < len(row):
            c = row[i]
            if c.isdigit():
                j = i
                while j < len(row) and row[j].isdigit():
                    j += 1
                count = int(row[i:j])
                if count == 0:
                    raise FenError(f"zero-length gap in row {n + 1}")
                cells.append(EMPTY * count)
                i = j
            elif c.isascii() and c.isalpha():
                cells.append(c)
                i += 1
            else:
                raise FenError(f"illegal character {c!r} in row {n + 1}")
        parsed.append("".join(cells))
    width = len(parsed[0])
    if any(len(r) != width for r in parsed):
        raise FenError("ragged rows: " + ", ".join(str(len(r)) for r in parsed))
    if width == 0:
        raise FenError("board has no files")
    if width > len(FILES):
        raise FenError(f"board width {width} exceeds {len(FILES)}")
    if "P" in parsed[0]:
        raise FenError("White pawn on its promotion rank")
    if "p" in parsed[-1]:
        raise FenError("Black pawn on its promotion rank")
    return Board(width, height, "".join(reversed(parsed)))


def render_fen(board: Board) -> str:
    rows = []
    for r in range(board.height, 0, -1):
        row = board.cells[(r - 1) * board.width : r * board.width]
        out = []
        gap = 0
        for c in row:
            if c == EMPTY:
                gap += 1
                continue
            if gap:
                out.append(str(gap))
                gap = 0
            out.append(c)
        if gap:
            out.append(str(gap))
        rows.append("".join(out))
    return "/".join(rows)


# ---------------------------------------------------------------- moves


def legal_moves(position, side: Side, ep: EpState | None = None) -> list[Move]:
    """Pawn moves for ``side``; ``position`` is a Board or a Component."""
    board: Board = position if type(position) is Board else position.board
    cells = board.cells
    w = board.width
    n = len(cells)
    if side is Side.WHITE:
        mine, theirs, step = "P", "p", w
        start_lo, start_hi = w, 2 * w
    else:
        mine, theirs, step = "p", "P", -w
        start_lo, start_hi = n - 2 * w, n - w
    ep_sq = ep.square if ep is not None and ep.side is side else -1
    moves = []
    sq = cells.find(mine)
    while sq >= 0:
        ahead = sq + step
        if 0 <= ahead < n:
            if cells[ahead] == EMPTY:
                moves.append(Move(sq, ahead, MoveKind.PUSH1, side))
                if start_lo <= sq < start_hi:
                    two = ahead + step
                    if 0 <= two < n and cells[two] == EMPTY:
                        moves.append(Move(sq, two, MoveKind.PUSH2, side))
            f = sq % w
            if f > 0:
                t = ahead - 1
                if cells[t] == theirs:
                    moves.append(Move(sq, t, MoveKind.CAPTURE, side))
                elif t == ep_sq:
                    moves.append(Move(sq, t, MoveKind.EN_PASSANT, side))
            if f < w - 1:
                t = ahead + 1
                if cells[t] == theirs:
                    moves.append(Move(sq, t, MoveKind.CAPTURE, side))
                elif t == ep_sq:
                    moves.append(Move(sq, t, MoveKind.EN_PASSANT, side))
        sq = cells.find(mine, sq + 1)
    return moves


def play(board: Board, move: Move) -> tuple[Board, EpState | None]:
    """Apply ``move`` without legality checks."""
    cells = list(board.cells)
    cells[move.dst] = cells[move.src]
    cells[move.src] = EMPTY
    kind = move.kind
    if kind is MoveKind.EN_PASSANT:
        cells[move.dst - board.width * move.side] = EMPTY
    new = Board(board.width, board.height, "".join(cells))
    if kind is not MoveKind.PUSH2:
        return new, None
    w = board.width
    f = move.dst % w
    enemy = "p" if move.side is Side.WHITE else "P"
    if (f > 0 and cells[move.dst - 1] == enemy) or (f < w - 1 and cells[move.dst + 1] == enemy):
        return new, EpState((move.src + move.dst) // 2, OPPONENT[move.side])
    return new, None


class IllegalMove(ValueError):
    pass


def apply_move(board: Board, move: Move, ep: EpState | None = None) -> tuple[Board, EpState | None]:
    """Apply a legal move; returns the new board and the resulting ep state."""
    if move not in legal_moves(board, move.side, ep):
        raise IllegalMove(f"{format_move(board, move)} is not legal here")
    return play(board, move)


def format_move(board: Board, move: Move, file_offset: int = 0) -> str:
    """``a2-a4``, ``c3xd4`` or ``b4xa3ep``; ``file_offset`` shifts file letters."""

    def name(sq):
        f, r = board.coords(sq)
        return f"{FILES[f + file_offset]}{r}"

    if move.kind in (MoveKind.PUSH1, MoveKind.PUSH2):
        return f"{name(move.src)}-{name(move.dst)}"
    suffix = "ep" if move.kind is MoveKind.EN_PASSANT else ""
    return f"{name(move.src)}x{name(move.dst)}{suffix}"


def find_move(board: Board, text: str, side: Side, ep: EpState | None = None) -> Move:
    """Look up a legal move by its text form (``a2-a4``, ``c3xd4``, ...)."""
    for m in legal_moves(board, side, ep):
        if format_move(board, m) == text:
            return m
    raise IllegalMove(f"no legal {side.label} move {text}")


# ---------------------------------------------------------------- decomposition


@dataclass(frozen=True)
class Component:
    """A maximal run of pawn-bearing files, cut out of a board."""

    first: int
    last: int
    board: Board

    @property
    def span(self) -> str:
        if self.first == self.last:
            return FILES[self.first]
        return f"{FILES[self.first]}-{FILES[self.last]}"


def decompose(board: Board) -> list[Component]:
    """Split the board into maximal runs of files holding at least one pawn.

    A pawn only leaves its file by capturing, so it can never enter a file
    that holds no pawn; such files separate independent subgames.
    """
    comps = []
    f = 0
    while f < board.width:
        if not board.file_has_pawn(f):
            f += 1
            continue
        g = f
        while g + 1 < board.width and board.file_has_pawn(g + 1):
            g += 1
        comps.append(Component(f, g, board.files(f, g)))
        f = g + 1
    return comps


def mirror(board: Board) -> Board:
    """Swap colours and reflect ranks; walls keep their letters."""
    swap = str.maketrans("Pp", "pP")
    rows = [board.cells[r * board.width : (r + 1) * board.width] for r in range(board.height)]
    return Board(board.width, board.height, "".join(reversed(rows)).translate(swap))


def mirror_move(board: Board, move: Move) -> Move:
    """Image of ``move`` under :func:`mirror` of ``board``."""

    def flip(sq):
        f, r = board.coords(sq)
        return board.index(f, board.height + 1 - r)

    return Move(flip(move.src), flip(move.dst), move.kind, move.side.opponent)


def place(width: int, height: int, white=(), black=(), walls=None) -> Board:
    """Build a board from square names, e.g. ``place(8, 8, ["h2"], ["h5"])``."""
    b = empty_board(width, height)
    changes = {}
    for s in white:
        changes[b.parse_square(s)] = "P"
    for s in black:
        changes[b.parse_square(s)] = "p"
    for s, c in (walls or {}).items():
        changes[b.parse_square(s)] = c
    return b.with_cells(changes)
