"""
Solving the game by backward induction
======================================

Backward induction on the grid of heap sizes gives the true P-positions of
the game with move Types I, II and III. They coincide with the Beatty pairs.
Dropping the Type III moves breaks that.
"""

from beattygame import s_set, solve_grid, verify_theorem1

k, bound = 3, 400
grid = solve_grid(k, bound)
print(f"k={k}: {len(grid.p_positions())} P-positions with both heaps <= {bound}")
print("first few:", [tuple(p) for p in grid.p_positions()[:8]])
print(verify_theorem1(k, bound, grid))

# without the extra moves, some positions just below a pair become P
plain = solve_grid(k, bound, extra_moves=[])
extra = sorted(set(plain.p_positions()) - s_set(k, bound))
print("spurious P-positions without Type III moves:", [tuple(p) for p in extra[:5]])
