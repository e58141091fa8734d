"""Exact Beatty sequences for alpha_k = [1;k,1,k,...] and beta_k = k*alpha_k + 1.

Everything here is integer arithmetic. With ``D = k*k + 4*k``::

    alpha_k = (k + sqrt(D)) / (2k)        beta_k = (k + 2 + sqrt(D)) / 2

and since ``n*n*D`` is never a perfect square for ``n >= 1``, the irrational
part can be floored first: ``floor((a + x) / q) == floor((a + floor(x)) / q)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import GameParams, Position, as_params

__all__ = [
    "TableRangeError",
    "BeattyTables",
    "isqrt",
    "beatty_a",
    "beatty_b",
    "build_tables",
    "s_set",
    "n_max_covering",
]


class TableRangeError(ValueError):
    """A query fell outside the range a precomputed table covers."""


def isqrt(m: int) -> int:
    """Largest ``r`` with ``r*r <= m``; exact for any size of ``m``."""
    if m < 0:
        raise ValueError("isqrt of a negative number")
    return math.isqrt(m)


def beatty_a(params: GameParams | int, n: int) -> int:
    """``floor(n * alpha_k)``."""
    p = as_params(params)
    if n < 0:
        raise ValueError("n must be non-negative")
    return (n * p.k + isqrt(n * n * p.D)) // (2 * p.k)


def beatty_b(params: GameParams | int, n: int) -> int:
    """``floor(n * beta_k)``."""
    p = as_params(params)
    if n < 0:
        raise ValueError("n must be non-negative")
    return (n * (p.k + 2) + isqrt(n * n * p.D)) // 2


def n_max_covering(params: GameParams | int, value: int) -> int:
    """Smallest table size whose A-column reaches ``value``.

    Complementarity then makes every integer up to ``value`` resolvable.
    """
    p = as_params(params)
    # a_n >= n, so this overshoots by at most a constant factor; refine downwards.
    n = max(1, value)
    lo, hi = 1, n
    while lo < hi:
        mid = (lo + hi) // 2
        if beatty_a(p, mid) >= value:
            hi = mid
        else:
            lo = mid + 1
    return lo


def _frozen(values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.int64)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class BeattyTables:
    """Values ``a_n, b_n`` for ``0 <= n <= n_max`` plus differences and inverses.

    ``c[n] = a_n - a_{n-1}`` and ``d[n] = b_n - b_{n-1}`` for ``n >= 1``; slot 0
    of both holds 0 and is not part of the sequences. ``index_of_a[v]`` is the
    ``n`` with ``a_n == v`` or -1; same for ``index_of_b``.
    """

    params: GameParams
    n_max: int
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray = field(repr=False)
    d: np.ndarray = field(repr=False)
    index_of_a: np.ndarray = field(repr=False)
    index_of_b: np.ndarray = field(repr=False)

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def a_max(self) -> int:
        """Every integer in ``[0, a_max]`` lies in A or B within this table."""
        return int(self.a[-1])

    @property
    def gaps(self) -> np.ndarray:
        return self.b - self.a

    def partner(self, v: int) -> int:
        """The other coordinate of the unique pair of S_k containing ``v``."""
        if v > self.a_max:
            raise TableRangeError(f"value {v} beyond table range (a_max={self.a_max})")
        n = self.index_of_a[v]
        if n >= 0:
            return int(self.b[n])
        return int(self.a[self.index_of_b[v]])

    def pair_index(self, v: int) -> int:
        """``n`` such that ``v`` is ``a_n`` or ``b_n``."""
        if v > self.a_max:
            raise TableRangeError(f"value {v} beyond table range (a_max={self.a_max})")
        n = self.index_of_a[v]
        return int(n if n >= 0 else self.index_of_b[v])

    def contains(self, x: int, y: int) -> bool:
        """Whether the unordered pair ``{x, y}`` belongs to S_k."""
        if x > y:
            x, y = y, x
        if x > self.a_max:
            raise TableRangeError(f"value {x} beyond table range (a_max={self.a_max})")
        n = self.index_of_a[x]
        return bool(n >= 0 and self.b[n] == y)

    def tau_count(self, n: int) -> int:
        """Number of tau letters among the first ``n`` letters of the word W."""
        return int(self.b[n]) - (self.k + 1) * n


def build_tables(params: GameParams | int, n_max: int) -> BeattyTables:
    p = as_params(params)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    k, D = p.k, p.D
    a = [0] * (n_max + 1)
    b = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        r = isqrt(n * n * D)
        a[n] = (n * k + r) // (2 * k)
        b[n] = (n * (k + 2) + r) // 2
    a_arr = np.array(a, dtype=np.int64)
    b_arr = np.array(b, dtype=np.int64)
    c = np.zeros_like(a_arr)
    d = np.zeros_like(b_arr)
    c[1:] = np.diff(a_arr)
    d[1:] = np.diff(b_arr)
    ns = np.arange(n_max + 1, dtype=np.int64)
    ia = np.full(a[-1] + 1, -1, dtype=np.int64)
    ia[a_arr] = ns
    ib = np.full(b[-1] + 1, -1, dtype=np.int64)
    ib[b_arr[1:]] = ns[1:]
    return BeattyTables(
        params=p,
        n_max=n_max,
        a=_frozen(a_arr),
        b=_frozen(b_arr),
        c=_frozen(c),
        d=_frozen(d),
        index_of_a=_frozen(ia),
        index_of_b=_frozen(ib),
    )


def s_set(params: GameParams | int, bound: int) -> set[Position]:
    """All pairs ``(a_n, b_n)`` with ``b_n <= bound``, including ``(0, 0)``."""
    p = as_params(params)
    if bound < 0:
        raise ValueError("bound must be non-negative")
    out = {Position(0, 0)}
    n = 1
    while True:
        bn = beatty_b(p, n)
        if bn > bound:
            return out
        out.add(Position(beatty_a(p, n), bn))
        n += 1
