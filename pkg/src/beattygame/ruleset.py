"""Moves of the game Gamma_k.

A move ``(u, v)`` with ``0 <= u <= v`` and ``v >= 1`` removes ``u`` tokens from
one heap and ``v`` from the other, in either orientation:

* Type I: ``u == 0`` (ordinary Nim).
* Type II: ``u >= 1`` and ``v - u < k`` (the k-Wythoff diagonal band).
* Type III: ``(f, g - 1)`` for pairs ``(f, g)`` of the extra-move recursion.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

from .core import GameParams, Position, as_params

__all__ = [
    "MoveType",
    "MoveSpec",
    "ExtraMoveTable",
    "QuadInt",
    "extra_pairs",
    "closed_form_k2",
    "closed_form_k2_move",
    "classify_move",
    "is_move_in_gamma",
    "legal_moves",
    "apply_move",
]


class MoveType(enum.IntEnum):
    I = 1
    II = 2
    III = 3


class MoveSpec(NamedTuple):
    u: int
    v: int
    kind: MoveType
    index: int | None = None  # extra-move family i, Type III only

    def __str__(self):
        label = f"Type{self.kind.name}"
        if self.kind is MoveType.III:
            label += f" i={self.index}"
        return f"{label} ({self.u},{self.v})"


def extra_pairs(params: GameParams | int, i: int, bound: int) -> list[tuple[int, int]]:
    """Pairs ``(f_n, g_n)`` of family ``i`` for ``n = 0, 1, ...`` while ``g_n <= bound``.

    For ``k == 1`` there are no families and the result is empty.
    """
    p = as_params(params)
    k = p.k
    if k == 1:
        return []
    if not 1 <= i <= k - 1:
        raise ValueError(f"family index i must lie in 1..{k - 1}, got {i}")
    f, g = 0, i + 1
    out = []
    while g <= bound:
        out.append((f, g))
        f, g = f + g, k * f + (k + 1) * g + i
    return out


@dataclass(frozen=True)
class ExtraMoveTable:
    """Type III data for every family ``i`` with ``g_n - 1 <= bound``.

    ``pairs[i]`` holds ``(f_n, g_n)`` from ``n = 0``; the moves are
    ``(f_n, g_n - 1)`` for ``n >= 1``.
    """

    params: GameParams
    bound: int
    pairs: dict[int, list[tuple[int, int]]]
    moves: dict[tuple[int, int], tuple[int, int]] = field(repr=False)  # (u, v) -> (i, n)

    @classmethod
    def build(cls, params: GameParams | int, bound: int) -> "ExtraMoveTable":
        p = as_params(params)
        pairs = {i: extra_pairs(p, i, bound + 1) for i in range(1, p.k)}
        moves = {}
        for i, seq in pairs.items():
            for n, (f, g) in enumerate(seq):
                if n >= 1:
                    moves[(f, g - 1)] = (i, n)
        return cls(p, bound, pairs, moves)

    def family(self, i: int) -> list[tuple[int, int]]:
        return self.pairs.get(i, [])

    def move_list(self) -> list[tuple[int, int]]:
        """All Type III moves, sorted by ``(v, u)``."""
        return sorted(self.moves, key=lambda m: (m[1], m[0]))

    def covers(self, v: int) -> bool:
        return v <= self.bound


class QuadInt(NamedTuple):
    """``p + q*sqrt(r)`` with integer ``p, q`` (exact arithmetic in Z[sqrt r])."""

    p: int
    q: int
    r: int = 3

    def __add__(self, other):
        if isinstance(other, int):
            return QuadInt(self.p + other, self.q, self.r)
        self._check(other)
        return QuadInt(self.p + other.p, self.q + other.q, self.r)

    def __sub__(self, other):
        if isinstance(other, int):
            return QuadInt(self.p - other, self.q, self.r)
        self._check(other)
        return QuadInt(self.p - other.p, self.q - other.q, self.r)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadInt(self.p * other, self.q * other, self.r)
        self._check(other)
        return QuadInt(
            self.p * other.p + self.r * self.q * other.q,
            self.p * other.q + self.q * other.p,
            self.r,
        )

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not ring elements")
        result, base = QuadInt(1, 0, self.r), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> "QuadInt":
        return QuadInt(self.p, -self.q, self.r)

    def _check(self, other):
        if other.r != self.r:
            raise ValueError("mixing different quadratic rings")


def _exact_div(z: QuadInt, m: int) -> int:
    if z.q != 0 or z.p % m:
        raise ArithmeticError(f"{z} is not an integer multiple of {m}")
    return z.p // m


def closed_form_k2_move(n: int) -> tuple[int, int]:
    """The k=2 extra move ``(f_n, g_n - 1)`` from its closed form in Z[sqrt 3]::

        f = ((1 + r)(2 + r)^n + (1 - r)(2 - r)^n - 2) / 4
        v = ((2 + r)^(n+1) + (2 - r)^(n+1) - 2) / 2          r = sqrt 3

    Note that ``v`` is the move coordinate ``g_n - 1``, not ``g_n``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    root = QuadInt(2, 1)
    lead = QuadInt(1, 1) * root**n
    f = _exact_div(lead + lead.conj() - 2, 4)
    power = root ** (n + 1)
    v = _exact_div(power + power.conj() - 2, 2)
    return f, v


def closed_form_k2(n: int) -> tuple[int, int]:
    """``(f_n, g_n)`` of the single k=2 family, exactly."""
    f, v = closed_form_k2_move(n)
    return f, v + 1


def classify_move(k: int, u: int, v: int, table: ExtraMoveTable) -> MoveSpec | None:
    """The move ``(u, v)`` tagged with its type, or None if it is not in Gamma_k.

    Overlapping types resolve to the lowest one.
    """
    if u > v:
        u, v = v, u
    if u < 0 or v < 1:
        return None
    if u == 0:
        return MoveSpec(u, v, MoveType.I)
    if v - u < k:
        return MoveSpec(u, v, MoveType.II)
    if v > table.bound:
        raise ValueError(f"move ({u},{v}) beyond extra-move table bound {table.bound}")
    hit = table.moves.get((u, v))
    if hit is not None:
        return MoveSpec(u, v, MoveType.III, hit[0])
    return None


def is_move_in_gamma(params: GameParams | int, u: int, v: int, table: ExtraMoveTable) -> bool:
    p = as_params(params)
    return classify_move(p.k, u, v, table) is not None


def apply_move(pos: Position, u: int, v: int) -> list[Position]:
    """Distinct normalized successors of ``pos`` under both orientations of ``(u, v)``."""
    x, y = pos
    out = []
    if x >= u and y >= v:
        out.append(Position.of(x - u, y - v))
    if x >= v and y >= u:
        q = Position.of(x - v, y - u)
        if q not in out:
            out.append(q)
    return out


def legal_moves(
    params: GameParams | int, pos: Position, table: ExtraMoveTable | None = None
) -> list[tuple[MoveSpec, Position]]:
    """Every distinct successor of ``pos`` with one move that reaches it.

    Candidate moves are tried in order Type I, II, III, each by increasing
    ``(v, u)``; a successor keeps the first move that produced it.
    """
    p = as_params(params)
    k = p.k
    x, y = pos
    if x > y:
        raise ValueError(f"position must be normalized, got {pos}")
    if table is None or table.bound < y:
        table = ExtraMoveTable.build(p, y)
    seen: dict[Position, MoveSpec] = {}

    def emit(spec: MoveSpec):
        for q in apply_move(pos, spec.u, spec.v):
            seen.setdefault(q, spec)

    for v in range(1, y + 1):
        emit(MoveSpec(0, v, MoveType.I))
    for v in range(1, y + 1):
        for u in range(max(1, v - k + 1), min(v, x) + 1):
            emit(MoveSpec(u, v, MoveType.II))
    for u, v in table.move_list():
        if v > y:
            break
        i, _ = table.moves[(u, v)]
        emit(MoveSpec(u, v, MoveType.III, i))
    return [(spec, q) for q, spec in seen.items()]
