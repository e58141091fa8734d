"""P/N classification of Gamma_k by backward induction, and the winning-move oracle.

:func:`solve_grid` knows only the rules. It is the independent oracle against
which the Beatty description of the P-positions is checked. The oracle in
:class:`WinningMoveOracle` goes the other way: it starts from the Beatty tables
and follows the case analysis of the correctness proof to name a move.
"""

from __future__ import annotations

import bisect
import functools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .beatty import BeattyTables, TableRangeError, build_tables, n_max_covering, s_set
from .core import GameParams, Position, as_params
from .ruleset import ExtraMoveTable, MoveSpec, MoveType, apply_move, classify_move

__all__ = [
    "PNGrid",
    "CheckResult",
    "WinningMove",
    "WinningMoveOracle",
    "TheoremViolation",
    "solve_grid",
    "solve_grid_naive",
    "verify_theorem1",
    "check_no_p_to_p",
    "audit_winning_moves",
    "winning_move",
    "index_of_pposition",
]

_FAR = 1 << 40


class TheoremViolation(RuntimeError):
    """The case analysis produced no valid move; the P-set claim would be false."""


@dataclass(frozen=True)
class PNGrid:
    """Outcome classes of every position with both heaps ``<= bound``.

    ``p`` is a symmetric boolean matrix, ``p[x, y]`` true iff ``(x, y)`` is P.
    """

    params: GameParams
    bound: int
    p: np.ndarray

    def is_p(self, x: int, y: int) -> bool:
        return bool(self.p[x, y])

    def classify(self, pos: Position) -> str:
        return "P" if self.p[pos.x, pos.y] else "N"

    def p_positions(self) -> list[Position]:
        xs, ys = np.nonzero(np.triu(self.p))
        return sorted(Position(int(a), int(b)) for a, b in zip(xs, ys))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: object = None
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"name": self.name, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.detail:
            out["detail"] = self.detail
        return out


def _jsonable(obj):
    if isinstance(obj, tuple):
        return [_jsonable(o) for o in obj]
    if isinstance(obj, (list, dict, str, int, float, bool)) or obj is None:
        return obj
    return str(obj)


def _extra_move_list(p: GameParams, bound: int, extra_moves) -> list[tuple[int, int]]:
    if extra_moves is None:
        return ExtraMoveTable.build(p, bound).move_list()
    moves = {(min(u, v), max(u, v)) for u, v in extra_moves}
    return sorted((m for m in moves if m[1] <= bound), key=lambda m: (m[1], m[0]))


def solve_grid(
    params: GameParams | int,
    bound: int,
    extra_moves: Iterable[tuple[int, int]] | None = None,
) -> PNGrid:
    """Backward induction over ``0 <= x <= y <= bound``.

    Rows are processed by increasing smaller heap ``x``. Inside a row the only
    dependencies are Nim moves along the row, so the first cell of the row that
    no earlier P-position can reach is the row's P-position and every later
    cell is N. Reachability from earlier rows is vectorized per row:

    * Nim: ``partner[v]`` is the other coordinate of the P-position holding ``v``.
    * Diagonal band: at most one P-position per oriented diagonal ``y - x``;
      a band move reaches diagonals within ``k - 1`` of the source's.
    * Extra moves: a short explicit list, both orientations.

    ``extra_moves`` replaces the Type III list (used to test mined rulesets).
    """
    p = as_params(params)
    if bound < 0:
        raise ValueError("bound must be non-negative")
    k, B = p.k, bound
    P = np.zeros((B + 1, B + 1), dtype=bool)
    partner = np.full(B + 1, -1, dtype=np.int64)
    off = B + k
    diag_x = np.full(2 * B + 2 * k + 1, _FAR, dtype=np.int64)
    moves3 = _extra_move_list(p, B, extra_moves)

    for x in range(B + 1):
        if 0 <= partner[x] < x:
            continue
        ys = np.arange(x, B + 1, dtype=np.int64)
        pr = partner[x:]
        cov = (pr >= 0) & (pr < x)
        gap = ys - x
        for o in range(1 - k, k):
            e = gap + o
            ex = diag_x[e + off]
            cov |= (ex < x) & (ex + e < ys)
        for u, v in moves3:
            if x >= u and v <= B:
                start = max(x, v)
                cov[start - x :] |= P[x - u, start - v : B + 1 - v]
            if x >= v:
                cov |= P[x - v, x - u : B + 1 - u]
        free = np.flatnonzero(~cov)
        if free.size == 0:
            continue
        y0 = x + int(free[0])
        P[x, y0] = P[y0, x] = True
        partner[x], partner[y0] = y0, x
        for ox, e in ((x, y0 - x), (y0, x - y0)):
            if diag_x[e + off] != _FAR and diag_x[e + off] != ox:
                raise AssertionError("two P-positions on one diagonal")
            diag_x[e + off] = ox
    P.flags.writeable = False
    return PNGrid(p, B, P)


def solve_grid_naive(
    params: GameParams | int,
    bound: int,
    extra_moves: Iterable[tuple[int, int]] | None = None,
) -> PNGrid:
    """Same classification by scanning every move from every cell; O(bound^3 k)."""
    p = as_params(params)
    k, B = p.k, bound
    moves = [(0, v) for v in range(1, B + 1)]
    moves += [(u, v) for v in range(1, B + 1) for u in range(max(1, v - k + 1), v + 1)]
    moves += _extra_move_list(p, B, extra_moves)
    P = np.zeros((B + 1, B + 1), dtype=bool)
    for x in range(B + 1):
        for y in range(x, B + 1):
            here = Position(x, y)
            if not any(P[q] for u, v in moves for q in apply_move(here, u, v)):
                P[x, y] = P[y, x] = True
    return PNGrid(p, B, P)


def verify_theorem1(params: GameParams | int, bound: int, grid: PNGrid | None = None) -> CheckResult:
    """Compare the solver's P-set with S_k on the grid ``y <= bound``."""
    p = as_params(params)
    if grid is None:
        grid = solve_grid(p, bound)
    solved = set(grid.p_positions())
    expected = s_set(p, bound)
    diff = solved ^ expected
    if not diff:
        return CheckResult("theorem1", True, detail=f"{len(solved)} P-positions agree")
    first = min(diff)
    side = "solver-only" if first in solved else "beatty-only"
    return CheckResult("theorem1", False, witness=(first.x, first.y), detail=side)


def check_no_p_to_p(params: GameParams | int, bound: int) -> CheckResult:
    """Exhaustively confirm that no move joins two pairs of S_k inside the grid."""
    p = as_params(params)
    k = p.k
    pts = sorted(s_set(p, bound))
    table = ExtraMoveTable.build(p, bound)
    for m in range(1, len(pts)):
        am, bm = pts[m]
        for n in range(m):
            an, bn = pts[n]
            # straight (a_m - a_n, b_m - b_n) and crossed (a_m - b_n, b_m - a_n)
            for s, t in ((am - an, bm - bn), (am - bn, bm - an)):
                if s < 0 or t < 0:
                    continue
                spec = classify_move(k, s, t, table)
                if spec is not None:
                    return CheckResult(
                        "no_p_to_p", False, witness=((am, bm), (an, bn)), detail=str(spec)
                    )
    return CheckResult("no_p_to_p", True, detail=f"{len(pts)} P-positions pairwise")


@dataclass(frozen=True)
class WinningMove:
    move: MoveSpec
    target: Position
    case: str  # which branch of the case analysis produced it

    def __str__(self):
        return f"{self.move} -> {self.target}"


class WinningMoveOracle:
    """Names a winning move from any position, using only the Beatty tables.

    Cases, for ``x <= y`` not in S_k:

    a/b. a Nim move, whenever the partner of ``x`` or of ``y`` is smaller
         than the other heap;
    c.   a diagonal-band move to the P-position whose gap is within ``k - 1``
         of ``y - x``;
    d.   from ``(a_n, b_n - 1)``: the band moves ``(2, k+1)`` or ``(1, k)``
         when ``c_n == 2`` or ``d_n == k+1``, else the largest extra move of
         family ``i`` (the index of ``n``) with ``v <= b_n - 1``.

    Ties within Nim and band moves go to the smallest ``(v, u)``. Tables are
    grown on demand unless ``grow=False``, in which case out-of-range queries
    raise :class:`TableRangeError`.
    """

    def __init__(self, params: GameParams | int, limit: int = 64, grow: bool = True):
        self.params = as_params(params)
        self.grow = grow
        self._limit = -1
        self._build(max(limit, 1))

    @property
    def limit(self) -> int:
        """Largest heap size answerable without growing."""
        return self._limit

    def _build(self, limit: int):
        p = self.params
        self.tables: BeattyTables = build_tables(p, n_max_covering(p, limit) + 1)
        self.extra = ExtraMoveTable.build(p, limit)
        t = self.tables
        self._a = t.a.tolist()
        self._b = t.b.tolist()
        self._ia = t.index_of_a.tolist()
        self._ib = t.index_of_b.tolist()
        self._gaps = (t.b - t.a).tolist()
        self._limit = limit

    def _ensure(self, value: int):
        if value <= self._limit:
            return
        if not self.grow:
            raise TableRangeError(f"heap size {value} exceeds oracle limit {self._limit}")
        self._build(max(value, 2 * self._limit))

    def _partner(self, v: int) -> int:
        n = self._ia[v]
        return self._b[n] if n >= 0 else self._a[self._ib[v]]

    def is_p(self, pos: Position) -> bool:
        x, y = pos
        self._ensure(y)
        return self._partner(x) == y

    def index_of(self, n: int) -> int | None:
        return index_of_pposition(self.params, n, self.tables)

    def winning_move(self, pos: Position) -> WinningMove | None:
        """A winning move from ``pos``, or None if ``pos`` is a P-position."""
        x, y = pos
        if x > y:
            raise ValueError(f"position must be normalized, got {pos}")
        self._ensure(y)
        k = self.params.k
        px, py = self._partner(x), self._partner(y)
        if px == y:
            return None

        # Nim moves
        best = None
        if px < y:
            best = (y - px, 0, Position.of(x, px))
        if py < x and (best is None or x - py < best[0]):
            best = (x - py, 0, Position.of(py, y))
        if best is not None:
            case = "a" if self._ib[x] >= 0 or self._ib[y] >= 0 else "b"
            return WinningMove(MoveSpec(0, best[0], MoveType.I), best[2], case)

        # Now x = a_n and y < b_n. Crossed band moves never help: every gap
        # after the first is >= k.
        n = self._ia[x]
        if n < 0:
            raise TheoremViolation(f"{pos}: no Nim move although {x} is in B")
        g = y - x
        gaps, a, b = self._gaps, self._a, self._b
        cands = []
        j = bisect.bisect_right(gaps, g - k)
        while j < len(gaps) and gaps[j] < g + k:
            s, t = x - a[j], y - b[j]
            if s >= 1 and t >= 1:
                cands.append((max(s, t), min(s, t), Position(a[j], b[j])))
            j += 1
        if cands:
            v, u, target = min(cands)
            case = "c" if y < b[n] - 1 else "d"
            return WinningMove(MoveSpec(u, v, MoveType.II), target, case)

        if y != b[n] - 1:
            raise TheoremViolation(f"{pos}: no band move although y < b_n - 1")
        i = self.index_of(n)
        if i is None:
            raise TheoremViolation(f"{pos}: index of n={n} is not an extra-move family")
        fam = self.extra.family(i)
        m = max(idx for idx, (_, gm) in enumerate(fam) if gm <= b[n])
        if m < 1:
            raise TheoremViolation(f"{pos}: no extra move of family {i} fits")
        f_m, g_m = fam[m]
        jump = fam[m - 1][1]
        target = Position(a[n - jump], b[n - jump])
        if (x - f_m, y - (g_m - 1)) != (target.x, target.y):
            raise TheoremViolation(f"{pos}: extra move ({f_m},{g_m - 1}) misses {target}")
        return WinningMove(MoveSpec(f_m, g_m - 1, MoveType.III, i), target, "d")


@functools.lru_cache(maxsize=16)
def _shared_oracle(k: int) -> WinningMoveOracle:
    return WinningMoveOracle(k)


def winning_move(params: GameParams | int, pos: Position) -> WinningMove | None:
    """Module-level convenience over a cached :class:`WinningMoveOracle`."""
    p = as_params(params)
    return _shared_oracle(p.k).winning_move(Position.of(*pos))


def index_of_pposition(
    params: GameParams | int, n: int, tables: BeattyTables | None = None
) -> int | None:
    """Index ``i`` in ``1..k-1`` of the n-th letter of W, or None for sigma / tau_k.

    The letter is tau exactly when ``d_n == k + 2``; taus are numbered
    cyclically, and the count of taus in the first ``n`` letters is
    ``b_n - (k + 1) n``.
    """
    p = as_params(params)
    if n < 1:
        raise ValueError("n must be >= 1")
    k = p.k
    if tables is not None and n <= tables.n_max:
        bn, bprev = int(tables.b[n]), int(tables.b[n - 1])
    else:
        from .beatty import beatty_b

        bn, bprev = beatty_b(p, n), beatty_b(p, n - 1)
    if bn - bprev == k + 1:
        return None
    taus = bn - (k + 1) * n
    i = (taus - 1) % k + 1
    return i if i < k else None


def audit_winning_moves(
    params: GameParams | int, bound: int, grid: PNGrid | None = None
) -> CheckResult:
    """Every N-position of the grid gets a legal move into S_k; P-positions get none."""
    p = as_params(params)
    if grid is None:
        grid = solve_grid(p, bound)
    oracle = WinningMoveOracle(p, limit=max(bound, 1))
    table = oracle.extra
    k = p.k
    checked = 0
    for x in range(bound + 1):
        for y in range(x, bound + 1):
            pos = Position(x, y)
            try:
                wm = oracle.winning_move(pos)
            except TheoremViolation as exc:
                return CheckResult("winning_moves", False, witness=(x, y), detail=str(exc))
            if grid.p[x, y]:
                if wm is not None:
                    return CheckResult("winning_moves", False, witness=(x, y), detail="move from P")
                continue
            checked += 1
            ok = (
                wm is not None
                and oracle.tables.contains(*wm.target)
                and grid.p[wm.target.x, wm.target.y]
                and classify_move(k, wm.move.u, wm.move.v, table) is not None
                and wm.target in apply_move(pos, wm.move.u, wm.move.v)
            )
            if not ok:
                return CheckResult("winning_moves", False, witness=(x, y), detail=str(wm))
    return CheckResult("winning_moves", True, detail=f"{checked} N-positions")
