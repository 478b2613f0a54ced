import json

import pytest
from hypothesis import given, settings

from pawncgt import kernel as k
from pawncgt.analysis import (
    BudgetExceeded,
    RandomParams,
    analyze,
    cross_check,
    fuzz,
    gen_random,
    oracle,
    oracle_outcome,
    winning_moves,
)
from pawncgt.board import Side, decompose, find_move, format_move, parse_fen, play
from pawncgt.expr import parse_value
from pawncgt.valuation import admissible_moves, game_of
from strategies import boards

D1 = "8/p1p1p3/2P1P3/8/p3P3/P1P2Kp1/2P3Pk/8"
D5 = "8/1p5p/p7/4k3/4Pp2/5K1P/PP6/8"
D6 = "8/3p4/1p3p2/7p/2pPP3/2P2k1b/P1P2pNP/5K1Q"
D7 = "8/2p4p/p4p2/2p5/2p3PP/2P2p2/PP3Pk1/4KR2"


def test_diagram1_report():
    r = analyze(D1)
    assert [format_value_of(c) for c in r.components] == ["-2", "4", "1", "0"]
    assert r.total is k.number(3)
    assert (r.winner_white_to_move, r.winner_black_to_move) == (Side.WHITE, Side.WHITE)
    assert not r.mzz and not r.warnings


def format_value_of(c):
    from pawncgt.naming import format_value

    return format_value(c.value.game)


def test_offset():
    r = analyze(D1, "-4")
    assert r.total is k.number(-1)
    assert r.winning_moves[Side.WHITE] == []
    assert analyze(D1, k.number(-3)).mzz


def test_diagram5_moves():
    r = analyze(D5)
    assert r.outcome is k.Outcome.FIRST
    assert r.winning_moves[Side.WHITE] == ["h3-h4"]
    assert r.winning_moves[Side.BLACK] == ["a6-a5"]


def test_report_serialization():
    r = analyze(D5)
    d = json.loads(json.dumps(r.to_dict()))
    assert d["total"] == "v*" and d["outcome"] == "FirstPlayerWins"
    for c in d["components"]:
        assert format_value_of_text(c["value"]) == c["value"]
    assert parse_value(d["total"]) is r.total
    text = r.to_text()
    assert "total: v* ; first player wins" in text


def format_value_of_text(s):
    from pawncgt.naming import format_value

    return format_value(parse_value(s))


def test_unnamed_total_text():
    r = analyze("8/p4p2/2p4p/P1p5/P4P2/2P2P1P/2P4P/8")
    assert r.total_text() == "{1|0} + {1|-1} + {{2|1}|0} + 1"
    assert parse_value(r.total_text()) is r.total


def test_determinism():
    assert analyze(D7).to_dict() == analyze(D7).to_dict()


def _check_winning_moves(board, offset=k.ZERO):
    """Soundness and completeness of the winning-move lists by enumeration."""
    comps = decompose(board)
    values = [game_of(c) for c in comps]
    for side in Side:
        listed = set(winning_moves(board, side, offset))
        found = set()
        for i, c in enumerate(comps):
            for m in admissible_moves(c, side):
                b, ep = play(c.board, m)
                total = k.add_all([offset, game_of(b, ep)] + values[:i] + values[i + 1 :])
                wins = k.leq(k.ZERO, total) if side is Side.WHITE else k.leq(total, k.ZERO)
                if wins:
                    found.add(format_move(c.board, m, c.first))
        assert listed == found


@pytest.mark.parametrize("fen", [D1, D5, D6, D7])
def test_winning_moves_by_enumeration(fen):
    _check_winning_moves(parse_fen(fen))


def test_winning_move_resulting_position():
    board = parse_fen(D7)
    for text in analyze(board).winning_moves[Side.BLACK]:
        b, ep = play(board, find_move(board, text, Side.BLACK))
        # the total after the move is at most 0: White to move loses
        after = analyze(b)
        assert after.winner_white_to_move is Side.BLACK


@settings(max_examples=60)
@given(boards(max_width=4, max_height=7))
def test_sum_consistency(b):
    r = analyze(b)
    assert k.eq(r.total, k.add_all(game_of(c) for c in decompose(b)))
    assert r.mzz == k.eq(r.total, k.ZERO)
    _check_winning_moves(b)


@pytest.mark.parametrize(
    "fen,winners",
    [(D1, (Side.WHITE, Side.WHITE)), (D5, (Side.WHITE, Side.BLACK)), (D6, (Side.BLACK, Side.WHITE))],
)
def test_oracle(fen, winners):
    v = oracle(fen)
    assert (v.winner_white_to_move, v.winner_black_to_move) == winners
    assert v.nodes > 0
    assert oracle_outcome(fen, Side.BLACK) is winners[1]


def test_oracle_budget():
    with pytest.raises(BudgetExceeded):
        oracle(D5, budget=100)


def test_cross_check_blocked_pair():
    cc = cross_check("8/8/4p3/8/8/4P3/8/8")
    assert cc.agree and cc.predicted == (Side.BLACK, Side.WHITE)


def test_fuzz_reproducible():
    p = RandomParams()
    a, b = fuzz(p, 11, 20), fuzz(p, 11, 20)
    assert a.to_text() == b.to_text()
    assert gen_random(p, 5) == gen_random(p, 5)


def test_fuzz_single_file_height6_sees_star2():
    s = fuzz(RandomParams(height=6, max_files=1, max_pawns=2), 3, 120)
    assert "*2" in s.values and "*" in s.values


def test_ep_sensitive_warning():
    r = analyze("8/6p1/3p3p/p7/1p2p1PP/8/PP1PP3/8")
    kinds = {w.kind for w in r.warnings}
    assert kinds == {"ep_sensitive"}
    assert r.flagged
    assert not analyze("8/6p1/3p3p/p7/1p2p1PP/8/PP1PP3/8", en_passant=False).warnings


def test_mutual_promotion_flag():
    # both pawns run; the first to promote wins, which no sum of values sees
    fen = "8/8/3p4/8/8/8/1P6/8"
    cc = cross_check(fen)
    assert cc.flagged and not cc.agree
    assert any(w.kind == "offscale_survival" for w in cc.warnings)


def test_stop_magnitude_warning_not_flagging():
    r = analyze("8/8/8/8/8/8/P7/8")
    assert [w.kind for w in r.warnings] == ["stop_magnitude"]
    assert not r.flagged
    assert r.winner_white_to_move is Side.WHITE
