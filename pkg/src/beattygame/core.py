"""Shared value types: the game parameter and (unordered) positions."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import NamedTuple


@dataclass(frozen=True)
class GameParams:
    """The single game parameter ``k`` plus the discriminant ``k*k + 4*k``."""

    k: int

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int):
            raise TypeError(f"k must be an int, got {type(self.k).__name__}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")

    @property
    def D(self) -> int:
        return self.k * self.k + 4 * self.k

    @property
    def alpha(self) -> float:
        """Float approximation of alpha_k, for display and density checks only."""
        return (self.k + self.D ** 0.5) / (2 * self.k)

    @property
    def beta(self) -> float:
        return (self.k + 2 + self.D ** 0.5) / 2

    @property
    def gamma(self) -> float:
        """Fractional part of beta, the slope of the theta word."""
        return (self.D ** 0.5 - self.k) / 2


def as_params(k: GameParams | int) -> GameParams:
    return k if isinstance(k, GameParams) else GameParams(k)


class Position(NamedTuple):
    """Two heaps, stored with ``x <= y``. Build with :meth:`of` to normalize."""

    x: int
    y: int

    @classmethod
    def of(cls, a: int, b: int) -> "Position":
        if a < 0 or b < 0:
            raise ValueError(f"heap sizes must be non-negative, got ({a}, {b})")
        return cls(a, b) if a <= b else cls(b, a)

    def __str__(self):
        return f"({self.x},{self.y})"


def is_perfect_square(m: int) -> bool:
    r = isqrt(m)
    return r * r == m
