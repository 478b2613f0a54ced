# Families of values that grow with the board.
from pawncgt.board import place
from pawncgt.naming import format_value
from pawncgt.valuation import game_of

# White a2 against Black a(n+4): n ups, plus a star when n is even
for n in range(1, 5):
    vals = [format_value(game_of(place(1, h, ["a2"], [f"a{n + 4}"]))) for h in range(n + 6, 13)]
    print(f"n={n}:", " ".join(vals))

# both pawns on their initial ranks, same file
for h in range(5, 10):
    print(f"height {h}:", format_value(game_of(place(1, h, ["a2"], [f"a{h - 1}"]))))

# a ladder of n+1 White pawns under one Black pawn is the switch {2n|n||0}
for n in (1, 2, 3):
    h = 10
    white = [f"a{r}" for r in range(h - 4 - n, h - 3)]
    print(f"ladder n={n}:", format_value(game_of(place(1, h, white, [f"a{h - 1}"]))))

# a tempo fight that halves with every extra rank
for h in (8, 9, 10):
    print(f"fraction at height {h}:", format_value(game_of(place(3, h, ["a2", "c3", "c2"], [f"b{h - 2}", "c4"]))))
