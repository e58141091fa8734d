"""Greedy mining of invariant moves for a prescribed P-set.

Start from k-Wythoff Nim (Nim moves plus the diagonal band). Walk the
positions outside S_k in a fixed order; whenever none of the moves known so
far leads from a position into S_k, adjoin that position itself as a move
(it then reaches ``(0, 0)``). The mined moves should be the Type III moves.
"""

from __future__ import annotations

import bisect

from dataclasses import dataclass, field

from .beatty import build_tables, n_max_covering
from .core import GameParams, as_params
from .ruleset import ExtraMoveTable

__all__ = ["ORDERS", "SynthReport", "greedy_synthesize", "compare_with_typeiii"]

ORDERS = ("sum", "lex")


def _traversal(bound: int, order: str, oriented: bool):
    if order == "sum":
        for s in range(2 * bound + 1):
            lo = max(0, s - bound)
            for x in range(lo, s + 1 if oriented else s // 2 + 1):
                if x <= bound:
                    yield x, s - x
    elif order == "lex":
        for x in range(bound + 1):
            for y in range(0 if oriented else x, bound + 1):
                yield x, y
    else:
        raise ValueError(f"unknown traversal order {order!r}; expected one of {ORDERS}")


def greedy_synthesize(
    params: GameParams | int, bound: int, order: str = "sum", oriented: bool = False
) -> list[tuple[int, int]]:
    """Moves adjoined by the greedy pass over heaps ``<= bound``, in adjoin order.

    ``order`` is ``"sum"`` (``x + y`` then ``x``) or ``"lex"`` (``x`` then ``y``).
    With ``oriented=False`` a mined pair is stored as ``(min, max)`` and usable in
    both orientations. With ``oriented=True`` the walk also visits ``x > y``
    and a mined pair ``(u, v)`` only removes ``u`` from the first heap.
    """
    p = as_params(params)
    if bound < 0:
        raise ValueError("bound must be non-negative")
    k = p.k
    tables = build_tables(p, n_max_covering(p, max(bound, 1)) + 1)
    ia, ib = tables.index_of_a.tolist(), tables.index_of_b.tolist()
    a, b = tables.a.tolist(), tables.b.tolist()

    def partner(v):
        n = ia[v]
        return b[n] if n >= 0 else a[ib[v]]

    def in_s(x, y):
        return partner(x) == y

    gaps = (tables.b - tables.a).tolist()

    def base_reaches(x, y):
        if partner(x) < y or partner(y) < x:
            return True
        # a band move into (a_j, b_j) needs |(y - x) - gap_j| < k; into the
        # crossed (b_j, a_j) it needs |(y - x) + gap_j| < k
        g = y - x
        for centre, flip in ((g, False), (-g, True)):
            j = bisect.bisect_right(gaps, centre - k)
            while j < len(gaps) and gaps[j] < centre + k:
                tx, ty = (b[j], a[j]) if flip else (a[j], b[j])
                if x - tx >= 1 and y - ty >= 1:
                    return True
                j += 1
        return False

    adjoined: list[tuple[int, int]] = []
    for x, y in _traversal(bound, order, oriented):
        if in_s(x, y) or base_reaches(x, y):
            continue
        hit = False
        for u, v in adjoined:
            if x >= u and y >= v and in_s(x - u, y - v):
                hit = True
                break
            if not oriented and x >= v and y >= u and in_s(x - v, y - u):
                hit = True
                break
        if not hit:
            adjoined.append((x, y) if oriented else (min(x, y), max(x, y)))
    return adjoined


@dataclass(frozen=True)
class SynthReport:
    k: int
    bound: int
    order: str
    oriented: bool
    matches: bool
    adjoined: list[tuple[int, int]]
    expected: list[tuple[int, int]]
    missing: list[tuple[int, int]] = field(default_factory=list)
    unexpected: list[tuple[int, int]] = field(default_factory=list)
    tried: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "bound": self.bound,
            "order": self.order,
            "oriented": self.oriented,
            "matches": self.matches,
            "adjoined": [list(m) for m in self.adjoined],
            "expected": [list(m) for m in self.expected],
            "missing": [list(m) for m in self.missing],
            "unexpected": [list(m) for m in self.unexpected],
            "tried": list(self.tried),
        }


def compare_with_typeiii(
    params: GameParams | int,
    bound: int,
    orders: tuple[str, ...] = ORDERS,
    oriented: bool = False,
) -> SynthReport:
    """Mine moves under each order in turn; stop at the first that yields the Type III set.

    The report names the order used. If none matches, it describes the last one tried.
    """
    p = as_params(params)
    expected = ExtraMoveTable.build(p, bound).move_list()
    want = set(expected)
    tried = []
    report = None
    for order in orders:
        tried.append(order)
        mined = greedy_synthesize(p, bound, order=order, oriented=oriented)
        got = {(min(u, v), max(u, v)) for u, v in mined}
        report = SynthReport(
            k=p.k,
            bound=bound,
            order=order,
            oriented=oriented,
            matches=got == want,
            adjoined=mined,
            expected=expected,
            missing=sorted(want - got),
            unexpected=sorted(got - want),
            tried=list(tried),
        )
        if report.matches:
            return report
    return report
