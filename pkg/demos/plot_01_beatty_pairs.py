"""
Beatty pairs and their step sequences
=====================================

The candidate P-positions are the pairs (a_n, b_n) = (floor(n alpha), floor(n beta))
with alpha = [1; k, 1, k, ...] and beta = k alpha + 1. Everything is computed
with integer square roots, so no floating point rounding can creep in.
"""

from beattygame import GameParams, build_tables

k = 2
params = GameParams(k)
print(f"k={k}: alpha ~ {params.alpha:.6f}, beta ~ {params.beta:.6f}")

# the first few pairs, with the steps c_n = a_n - a_{n-1} and d_n = b_n - b_{n-1}
t = build_tables(params, 12)
for n in range(1, 13):
    print(f"n={n:2d}  (a,b)=({t.a[n]:2d},{t.b[n]:2d})  c={t.c[n]}  d={t.d[n]}")

# A and B together hit every positive integer exactly once
covered = sorted(t.a[1:].tolist() + [b for b in t.b[1:].tolist() if b <= t.a_max])
print("complementary up to", t.a_max, ":", covered == list(range(1, t.a_max + 1)))

# exact arithmetic holds up far beyond float precision
from beattygame import beatty_a, beatty_b

n = 10**30
print("b_n - a_{nk} - n at n = 10^30:", beatty_b(k, n) - beatty_a(k, n * k) - n)
