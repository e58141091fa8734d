"""
Mining the extra moves greedily
===============================

Start from k-Wythoff Nim and walk the positions outside the Beatty set by
increasing heap total. Whenever no known move reaches the set, adjoin the
position itself as a move. The mined moves are exactly the Type III moves.
"""

from beattygame.synth import compare_with_typeiii, greedy_synthesize

print("k=2:", greedy_synthesize(2, 1000))
for k in range(1, 6):
    report = compare_with_typeiii(k, 600)
    print(f"k={k}: matches={report.matches} under order '{report.order}', {len(report.adjoined)} moves")
