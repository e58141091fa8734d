"""
Winning moves without search
============================

From any N-position a winning move can be named directly from the Beatty
tables: a Nim move to the partner, a band move along the diagonal, or the
largest Type III move of the matching index.
"""

from beattygame import winning_move

for pos in [(38, 185), (0, 5), (1, 5), (2, 6), (1, 3)]:
    wm = winning_move(4 if pos == (38, 185) else 2, pos)
    print(pos, "->", wm if wm else "P-position, every move loses")

# play a whole game engine against engine from a large start
k, pos = 4, (500, 900)
moves = 0
while pos != (0, 0):
    wm = winning_move(k, pos)
    pos = wm.target if wm else (pos[0], pos[1] - 1)
    moves += 1
print(f"k={k}: reached (0,0) from (500,900) in {moves} moves")
