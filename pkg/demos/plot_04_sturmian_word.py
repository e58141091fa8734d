"""
The Sturmian word behind the D sequence
=======================================

W marks each step d_n: sigma for k+1, tau for k+2. It is the fixed point of
phi: sigma -> sigma tau^k, tau -> sigma tau^(k+1), and also 0X where X is the
fixed point of theta: 0 -> 1^k 0, 1 -> 1^k 0 1.
"""

import math

from beattygame.sturmian import count_stats, phi_word, theta_word, three_way_agreement, w_in

k = 2
print("W =", phi_word(k, 24).to_str(indexed=True))
print("0X =", "0" + theta_word(k, 23))
print("constructions agreeing at 10^5:", three_way_agreement(k, 10**5), "of 3")

# the words w^i_n count the Type III pairs: (#tau_k, length) = (f_n, g_n)
for n in range(4):
    sigmas, tau_k, length = count_stats(w_in(k, 1, n))
    print(f"w^1_{n}: sigmas={sigmas} tau_k={tau_k} length={length}")

gamma = (math.sqrt(k * k + 4 * k) - k) / 2
x = theta_word(k, 10**6)
print(f"density of 1s: {x.count('1') / len(x):.6f} vs gamma = {gamma:.6f}")
