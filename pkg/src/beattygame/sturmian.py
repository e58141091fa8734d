"""The Sturmian word W behind the D sequence, and its morphic constructions.

Words over ``{sigma, tau}`` are handled as strings over ``"0"``/``"1"`` while
morphisms run (``str.translate`` does the substitution), and as ``int8``
arrays once tau indices are attached: 0 is sigma, ``i`` is tau_i.

Three independent constructions of W are provided:

* from the Beatty D sequence (``d_j == k + 2`` marks a tau),
* as the fixed point of ``phi: sigma -> sigma tau^k, tau -> sigma tau^(k+1)``,
* as ``0 X`` where ``X`` is the fixed point of ``theta: 0 -> 1^k 0, 1 -> 1^k 0 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .beatty import build_tables
from .core import GameParams, as_params
from .ruleset import extra_pairs

__all__ = [
    "WordView",
    "Morphism",
    "E",
    "ETA",
    "ETA_BAR",
    "phi",
    "theta",
    "fixed_point_morphism",
    "phi_word",
    "beatty_word",
    "theta_word",
    "index_taus",
    "syllables",
    "w_in",
    "count_stats",
    "sigma_window_counts",
    "check_lemma3",
    "check_eq16",
    "check_balance",
    "lemma17_factor_counts",
    "check_lemma17",
    "check_appendix_equivalence",
    "standard_sequence",
    "standard_prefix",
    "sturm_directive",
    "check_composition_identity",
    "three_way_agreement",
    "one_density",
]


@dataclass(frozen=True)
class WordView:
    """A finite word with indexed taus: ``letters[j] == 0`` for sigma, ``i`` for tau_i."""

    k: int
    letters: np.ndarray

    def __len__(self):
        return len(self.letters)

    @property
    def plain(self) -> str:
        """The word over ``"0"`` (sigma) and ``"1"`` (tau)."""
        return (np.minimum(self.letters, 1).astype(np.uint8) + 48).tobytes().decode()

    def tokens(self) -> list[str]:
        return ["s" if c == 0 else f"t{c}" for c in self.letters.tolist()]

    def to_str(self, indexed: bool = False) -> str:
        if indexed:
            return " ".join(self.tokens())
        return self.plain.replace("0", "s").replace("1", "t")


class Morphism:
    """A substitution on strings, given by the image of each letter.

    ``(f @ g)(w) == f(g(w))``.
    """

    def __init__(self, images: dict[str, str], name: str = ""):
        self.images = dict(images)
        self.name = name
        self._table = str.maketrans(self.images)

    def __call__(self, word: str) -> str:
        return word.translate(self._table)

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return Morphism({c: self(other(c)) for c in other.images}, f"{self.name}{other.name}")

    def __pow__(self, e: int) -> "Morphism":
        out = Morphism({c: c for c in self.images}, "id")
        for _ in range(e):
            out = self @ out
        return out

    def __eq__(self, other):
        return isinstance(other, Morphism) and self.images == other.images

    def __hash__(self):
        return hash(tuple(sorted(self.images.items())))

    def __repr__(self):
        body = ", ".join(f"{c}->{w}" for c, w in sorted(self.images.items()))
        return f"Morphism({self.name or '?'}: {body})"


E = Morphism({"0": "1", "1": "0"}, "E")
ETA = Morphism({"0": "01", "1": "0"}, "eta")
ETA_BAR = Morphism({"0": "10", "1": "0"}, "etabar")


def phi(k: int) -> Morphism:
    return Morphism({"0": "0" + "1" * k, "1": "0" + "1" * (k + 1)}, "phi")


def theta(k: int) -> Morphism:
    return Morphism({"0": "1" * k + "0", "1": "1" * k + "01"}, "theta")


def fixed_point_morphism(k: int) -> Morphism:
    """``0 -> 0^k 1 0, 1 -> 0^k 1``, the morphism fixing the characteristic word of 1 - gamma."""
    return Morphism({"0": "0" * k + "10", "1": "0" * k + "1"}, "fix")


_FIXED_POINTS: dict[tuple[str, int], str] = {}


def _iterate_fixed_point(morphism: Morphism, seed: str, length: int, key) -> str:
    # Memoized per (construction, k); prefixes of the fixed point only grow.
    word = _FIXED_POINTS.get(key, seed)
    while len(word) < length:
        word = morphism(word)
    _FIXED_POINTS[key] = word
    return word[:length]


def index_taus(plain: str | np.ndarray, k: int) -> np.ndarray:
    """Attach cyclic indices 1..k to the taus of a plain word."""
    if isinstance(plain, str):
        bits = np.frombuffer(plain.encode(), dtype=np.uint8) - 48
    else:
        bits = np.asarray(plain, dtype=np.int64)
    bits = bits.astype(np.int64)
    count = np.cumsum(bits)
    letters = np.where(bits == 1, (count - 1) % k + 1, 0)
    return letters.astype(np.int8)


def phi_word(params: GameParams | int, length: int) -> WordView:
    """Prefix of ``W = lim phi^n(sigma)``."""
    p = as_params(params)
    if length < 1:
        raise ValueError("length must be >= 1")
    plain = _iterate_fixed_point(phi(p.k), "0", length, ("phi", p.k))
    return WordView(p.k, index_taus(plain, p.k))


def beatty_word(params: GameParams | int, length: int) -> WordView:
    """Prefix of W read off the D sequence: tau where ``d_j == k + 2``."""
    p = as_params(params)
    d = build_tables(p, length).d[1:]
    return WordView(p.k, index_taus((d == p.k + 2).astype(np.int64), p.k))


def theta_word(params: GameParams | int, length: int) -> str:
    """Prefix of ``X = lim theta^n(1)`` over ``{0, 1}``."""
    p = as_params(params)
    if length < 1:
        raise ValueError("length must be >= 1")
    return _iterate_fixed_point(theta(p.k), "1", length, ("theta", p.k))


def syllables(word: WordView) -> list[tuple[int, int]]:
    """Half-open ``(start, end)`` spans, each starting at a sigma.

    The last span may be a truncated syllable if the word is a prefix.
    """
    starts = np.flatnonzero(word.letters == 0).tolist()
    if not starts or starts[0] != 0:
        raise ValueError("word does not start with sigma")
    ends = starts[1:] + [len(word)]
    return list(zip(starts, ends))


def w_in(params: GameParams | int, i: int, n: int) -> WordView:
    """``w^i_n``: ``phi`` applied ``n`` times to ``sigma tau_1 ... tau_i``."""
    p = as_params(params)
    if not 1 <= i <= p.k - 1:
        raise ValueError(f"i must lie in 1..{p.k - 1}, got {i}")
    if n < 0:
        raise ValueError("n must be non-negative")
    word = "0" + "1" * i
    step = phi(p.k)
    for _ in range(n):
        word = step(word)
    return WordView(p.k, index_taus(word, p.k))


def count_stats(word: WordView) -> tuple[int, int, int]:
    """``(sigma count, tau_k count, length)``."""
    letters = word.letters
    return int(np.sum(letters == 0)), int(np.sum(letters == word.k)), len(letters)


def sigma_window_counts(word: WordView, width: int) -> np.ndarray:
    """Sigma count of every factor of the given width, by start position."""
    if width < 1 or width > len(word):
        raise ValueError("window width out of range")
    cum = np.concatenate(([0], np.cumsum(word.letters == 0)))
    return cum[width:] - cum[:-width]


def check_lemma3(params: GameParams | int, length: int) -> bool:
    """sigma at position j exactly when ``d_j == k + 1``."""
    p = as_params(params)
    w = phi_word(p, length)
    d = build_tables(p, length).d[1:]
    return bool(np.array_equal(w.letters == 0, d == p.k + 1))


def check_eq16(params: GameParams | int, length: int) -> bool:
    """``c_n == 2`` exactly when the n-th letter is tau_k."""
    p = as_params(params)
    w = phi_word(p, length)
    c = build_tables(p, length).c[1:]
    return bool(np.array_equal(w.letters == p.k, c == 2))


def _g(params: GameParams, i: int, n: int) -> int:
    if n == -1:
        return 1
    seq = []
    bound = 1
    while len(seq) <= n:
        bound *= 4 * (params.k + 2)
        seq = extra_pairs(params, i, bound)
    return seq[n][1]


def check_balance(params: GameParams | int, i: int, n: int, sample_length: int) -> bool:
    """Every factor of W of length ``g_n`` holds ``g_{n-1}`` or ``g_{n-1} - 1`` sigmas."""
    p = as_params(params)
    width, prev = _g(p, i, n), _g(p, i, n - 1)
    if width > sample_length:
        raise ValueError(f"window {width} longer than sample {sample_length}")
    counts = sigma_window_counts(phi_word(p, sample_length), width)
    return bool(np.all((counts == prev) | (counts == prev - 1)))


def lemma17_factor_counts(params: GameParams | int, i: int, n: int) -> tuple[np.ndarray, int]:
    """Sigma counts of the factors of ``w^i_{n+2}`` of length ``g_{n+1}`` ending in tau_i.

    The suffix is excluded from the array and its count returned separately;
    ``n == -1`` is the base case on ``w^i_1``.
    """
    p = as_params(params)
    word = w_in(p, i, n + 2)
    width = _g(p, i, n + 1)
    counts = sigma_window_counts(word, width)
    ends_in_i = word.letters[width - 1 :] == i
    suffix = int(counts[-1])
    return counts[:-1][ends_in_i[:-1]], suffix


def check_lemma17(params: GameParams | int, i: int, n: int) -> bool:
    p = as_params(params)
    counts, _ = lemma17_factor_counts(p, i, n)
    return bool(counts.size > 0 and np.all(counts == _g(p, i, n)))


def check_appendix_equivalence(params: GameParams | int, length: int) -> bool:
    """``0 X`` and W agree letter by letter under sigma <-> 0, tau <-> 1."""
    p = as_params(params)
    if length < 2:
        raise ValueError("length must be >= 2")
    return "0" + theta_word(p, length - 1) == phi_word(p, length).plain


def standard_sequence(directive: list[int], n: int) -> str:
    """``s_n`` with ``s_{-1} = 1``, ``s_0 = 0``, ``s_m = s_{m-1}^{d_m} s_{m-2}``."""
    if n < -1:
        raise ValueError("n must be >= -1")
    if n > len(directive):
        raise ValueError(f"directive has {len(directive)} terms, need {n}")
    if directive and directive[0] < 0 or any(d < 1 for d in directive[1:]):
        raise ValueError("directive needs d_1 >= 0 and d_m >= 1 afterwards")
    prev, cur = "1", "0"
    if n == -1:
        return prev
    for m in range(n):
        prev, cur = cur, cur * directive[m] + prev
    return cur


def standard_prefix(directive: list[int], length: int) -> str:
    """Prefix of ``lim s_n``, taking the first ``s_n`` (``n >= 1``) long enough."""
    for n in range(1, len(directive) + 1):
        s = standard_sequence(directive, n)
        if len(s) >= length:
            return s[:length]
    raise ValueError("directive too short for the requested length")


def sturm_directive(k: int, terms: int) -> list[int]:
    """Directive ``(k, 1, k, 1, ...)`` of ``1 - gamma = [0; 1+k, 1, k, 1, k, ...]``."""
    return [k if m % 2 == 0 else 1 for m in range(terms)]


def check_composition_identity(params: GameParams | int, max_len: int = 10, sample: str = "") -> bool:
    """``(E eta)^k eta == E fix`` and ``theta == (E eta)^k eta E``.

    Checked letter-wise, then by applying both sides to every binary word up
    to ``max_len`` letters and to ``sample``.
    """
    p = as_params(params)
    k = p.k
    std = (E @ ETA) ** k @ ETA
    lhs_fix, lhs_theta = std, std @ E
    rhs_fix, rhs_theta = E @ fixed_point_morphism(k), theta(k)
    if lhs_fix != rhs_fix or lhs_theta != rhs_theta:
        return False
    words = ["".join(t) for L in range(max_len + 1) for t in itertools.product("01", repeat=L)]
    if sample:
        words.append(sample)
    return all(lhs_fix(w) == rhs_fix(w) and lhs_theta(w) == rhs_theta(w) for w in words)


def three_way_agreement(params: GameParams | int, length: int) -> int:
    """How many of the three constructions match the phi construction (max 3)."""
    p = as_params(params)
    ref = phi_word(p, length).plain
    via_d = beatty_word(p, length).plain
    via_theta = ("0" + theta_word(p, length - 1))[:length] if length > 1 else "0"
    return 1 + (via_d == ref) + (via_theta == ref)


def one_density(word: str) -> float:
    return word.count("1") / len(word)
