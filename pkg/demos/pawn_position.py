# Decompose a pawn position, value each piece, and read off the winner.
from pawncgt.analysis import analyze, oracle
from pawncgt.board import Side, parse_fen

# kings and other pieces are walls; pawn files split into independent fights
board = parse_fen("8/1p5p/p7/4k3/4Pp2/5K1P/PP6/8")
report = analyze(board)
print(report.to_text())

# the total is confused with zero: whoever moves wins, and only by one move each
print()
for side in Side:
    print(side.label, "to move wins with", report.winning_moves[side])

# brute force over the whole board says the same
v = oracle(board)
print("oracle:", v.winner_white_to_move.label, "/", v.winner_black_to_move.label, f"({v.nodes} nodes)")
