import random

import pytest
from hypothesis import given, settings

from pawncgt.analysis import RandomParams, gen_random
from pawncgt.board import (
    Board,
    EpState,
    FenError,
    IllegalMove,
    MoveKind,
    Side,
    apply_move,
    decompose,
    empty_board,
    find_move,
    format_move,
    legal_moves,
    mirror,
    mirror_move,
    parse_fen,
    place,
    play,
    render_fen,
)
from strategies import boards

DIAGRAM1 = "8/p1p1p3/2P1P3/8/p3P3/P1P2Kp1/2P3Pk/8"
DIAGRAM2 = "8/8/1p2p3/7p/1P6/4P3/7P/8"
DIAGRAM4 = "8/6p1/3p3p/p7/1p2p1PP/8/PP1PP3/8"


def names(board, moves):
    return sorted(format_move(board, m) for m in moves)


def test_parse_diagram1():
    b = parse_fen(DIAGRAM1)
    assert (b.width, b.height) == (8, 8)
    assert len(b.pawns()) == 12
    assert sum(c not in ".Pp" for c in b.cells) == 2
    assert render_fen(b) == DIAGRAM1


def test_parse_wide_and_multidigit():
    fen = "12/12/12/p11/11p/12/P11/12"
    b = parse_fen(fen)
    assert b.width == 12 and b.at(11, 4) == "p"
    assert render_fen(b) == fen
    nine = parse_fen("9/9/9/9")
    assert nine.width == 9 and render_fen(nine) == "9/9/9/9"


@pytest.mark.parametrize(
    "fen,msg",
    [
        ("8/8/8", "height"),
        ("8/8/8/7", "ragged"),
        ("P7/8/8/8", "White pawn"),
        ("8/8/8/p7", "Black pawn"),
        ("8/8/8/7?", "illegal character"),
        ("27/27/27/27", "width"),
        ("", "empty"),
    ],
)
def test_parse_errors(fen, msg):
    with pytest.raises(FenError, match=msg):
        parse_fen(fen)


def test_empty_render():
    assert render_fen(empty_board()) == "8/8/8/8/8/8/8/8"
    assert decompose(empty_board()) == []


@settings(max_examples=500)
@given(boards())
def test_fen_round_trip(b):
    assert parse_fen(render_fen(b)) == b


def test_fen_round_trip_seeded():
    for seed in range(500):
        b = gen_random(RandomParams(), seed)
        assert parse_fen(render_fen(b)) == b


def test_diagram2_h_file_moves():
    b = parse_fen(DIAGRAM2)
    comp = [c for c in decompose(b) if c.span == "h"][0]
    assert names(comp.board, legal_moves(comp, Side.WHITE)) == ["a2-a3", "a2-a4"]
    h = [format_move(comp.board, m, comp.first) for m in legal_moves(comp, Side.WHITE)]
    assert sorted(h) == ["h2-h3", "h2-h4"]


def test_blocked_by_walls():
    b = parse_fen(DIAGRAM1)
    g = [c for c in decompose(b) if c.span == "g"][0]
    assert legal_moves(g, Side.WHITE) == []
    assert legal_moves(g, Side.BLACK) == []


def test_en_passant_cycle():
    b = parse_fen(DIAGRAM4)
    a4 = find_move(b, "a2-a4", Side.WHITE)
    after, ep = apply_move(b, a4)
    assert ep == EpState(b.parse_square("a3"), Side.BLACK)
    replies = names(after, legal_moves(after, Side.BLACK, ep))
    assert "b4xa3ep" in replies
    # the right belongs to Black only
    assert not any(m.kind is MoveKind.EN_PASSANT for m in legal_moves(after, Side.WHITE, ep))
    m = find_move(after, "b4xa3ep", Side.BLACK, ep)
    final, ep2 = apply_move(after, m, ep)
    assert ep2 is None
    assert final.at(0, 4) == "." and final.at(0, 3) == "p" and final.at(1, 4) == "."


def test_push2_without_neighbour_sets_no_ep():
    b = place(3, 8, ["a2"], ["c7"])
    _, ep = play(b, find_move(b, "a2-a4", Side.WHITE))
    assert ep is None
    _, ep = play(b, find_move(b, "a2-a3", Side.WHITE))
    assert ep is None


def test_illegal_move_rejected():
    b = place(2, 8, ["a2"], ["b4"])
    m = find_move(b, "a2-a4", Side.WHITE)
    bad = m._replace(dst=b.parse_square("a5"))
    with pytest.raises(IllegalMove):
        apply_move(b, bad)


def test_decompose_diagrams():
    assert [c.span for c in decompose(parse_fen(DIAGRAM1))] == ["a", "c", "e", "g"]
    assert [c.span for c in decompose(parse_fen(DIAGRAM4))] == ["a-b", "d-e", "g-h"]


def _reachable(board, limit=400):
    seen = {(board.cells, None)}
    stack = [(board, None)]
    while stack and len(seen) < limit:
        b, ep = stack.pop()
        for side in Side:
            for m in legal_moves(b, side, ep if ep is not None and ep.side is side else None):
                yield b, m
                nb, nep = play(b, m)
                if nb.promoted() is None and (nb.cells, nep) not in seen:
                    seen.add((nb.cells, nep))
                    stack.append((nb, nep))


@settings(max_examples=150)
@given(boards(max_width=5, max_height=7))
def test_move_invariants(b):
    for c in decompose(b):
        sub = c.board
        for pos, m in _reachable(sub):
            f0, r0 = pos.coords(m.src)
            f1, r1 = pos.coords(m.dst)
            assert 0 <= f1 < sub.width  # never leaves the component
            assert pos.cells[m.src] == m.side.pawn
            assert r1 - r0 == (2 if m.kind is MoveKind.PUSH2 else 1) * m.side
            if m.kind is MoveKind.PUSH2:
                assert r0 == pos.initial_rank(m.side)
            if m.kind is MoveKind.CAPTURE:
                assert pos.cells[m.dst] == m.side.opponent.pawn
            else:
                assert pos.cells[m.dst] == "."
            assert abs(f1 - f0) == (0 if m.kind in (MoveKind.PUSH1, MoveKind.PUSH2) else 1)


@settings(max_examples=300)
@given(boards())
def test_decompose_partitions_pawns(b):
    comps = decompose(b)
    count = sum(len(c.board.pawns()) for c in comps)
    assert count == len(b.pawns())
    for a, c in zip(comps, comps[1:]):
        assert c.first > a.last + 1


@settings(max_examples=300)
@given(boards())
def test_mirror(b):
    m = mirror(b)
    assert mirror(m) == b
    black = {mirror_move(b, x) for x in legal_moves(b, Side.BLACK)}
    assert black == set(legal_moves(m, Side.WHITE))


def test_mirror_keeps_walls():
    b = parse_fen(DIAGRAM1)
    assert render_fen(mirror(b)) == "8/2p3pk/p1p2KP1/P3p3/8/2p1p3/P1P1P3/8"


def test_shift_and_files():
    b = place(2, 6, ["a2"], ["b5"])
    s = b.shifted(3, 8)
    assert s.width == 8 and s.files(3, 4) == b
    assert isinstance(s, Board)


def test_side_parse():
    assert Side.parse("w") is Side.WHITE and Side.parse("Black") is Side.BLACK
    with pytest.raises(ValueError):
        Side.parse("x")


def test_seeded_boards_deterministic():
    p = RandomParams()
    assert gen_random(p, 1) == gen_random(p, 1)
    rng = random.Random(3)
    for _ in range(50):
        b = gen_random(p, rng.randrange(10**6))
        files = {b.coords(s)[0] for s in b.pawns()}
        assert max(files) - min(files) < p.max_files
        assert b.promoted() is None
