"""Permutations, Bruhat order and 0-Hecke (Demazure) products.

Permutations are stored in 1-based one-line notation: ``w.oneline[i-1] = w(i)``.
Products compose as functions, ``(u * v)(i) = u(v(i))``, so the word
``s_{i_1} s_{i_2} ... s_{i_l}`` multiplies out left-to-right into
``s_{i_1} * s_{i_2} * ...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _all_perms
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, IndexRangeError, QuotientError

__all__ = [
    "Permutation",
    "bruhat_leq",
    "demazure_product",
    "longest_element",
    "all_permutations",
    "parabolic_permutations",
]


@dataclass(frozen=True)
class Permutation:
    oneline: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.oneline)
        if sorted(self.oneline) != list(range(1, n + 1)):
            raise IndexRangeError(f"{self.oneline} is not a permutation of 1..{n}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def transposition(n: int, i: int) -> "Permutation":
        """The adjacent transposition s_i in S_n."""
        if not 1 <= i <= n - 1:
            raise IndexRangeError(f"s_{i} undefined in S_{n}")
        line = list(range(1, n + 1))
        line[i - 1], line[i] = line[i], line[i - 1]
        return Permutation(tuple(line))

    @staticmethod
    def from_word(n: int, word: Sequence[int]) -> "Permutation":
        """Product s_{word[0]} s_{word[1]} ... in S_n."""
        w = Permutation.identity(n)
        for i in word:
            w = w * Permutation.transposition(n, i)
        return w

    @property
    def n(self) -> int:
        return len(self.oneline)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexRangeError(f"argument {i} outside [1, {self.n}]")
        return self.oneline[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise DimensionError("permutation sizes differ")
        return Permutation(tuple(self.oneline[other.oneline[i] - 1] for i in range(self.n)))

    def inverse(self) -> "Permutation":
        line = [0] * self.n
        for i, v in enumerate(self.oneline, start=1):
            line[v - 1] = i
        return Permutation(tuple(line))

    def length(self) -> int:
        """Number of inversions (Coxeter length)."""
        line = self.oneline
        return sum(
            1
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if line[i] > line[j]
        )

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.oneline, start=1))

    def left_descents(self) -> list[int]:
        """Indices i with l(s_i w) < l(w), i.e. i+1 appears before i."""
        pos = self.inverse().oneline
        return [i for i in range(1, self.n) if pos[i] < pos[i - 1]]

    def reduced_word(self) -> tuple[int, ...]:
        """Lexicographically least reduced word (greedy smallest left factor)."""
        w = self
        word: list[int] = []
        while not w.is_identity():
            i = min(w.left_descents())
            word.append(i)
            w = Permutation.transposition(w.n, i) * w
        return tuple(word)

    def fixes_tail(self, k: int) -> bool:
        """True if w(i) = i for all i > k (w lies in the parabolic S_[1,k])."""
        return all(self.oneline[i] == i + 1 for i in range(k, self.n))

    def fixes_head(self, k: int) -> bool:
        """True if w(i) = i for all i <= k (w lies in S_[k+1, n])."""
        return all(self.oneline[i] == i + 1 for i in range(k))

    def rank_table(self) -> tuple[tuple[int, ...], ...]:
        """w[i, j] = #{a in [i] : w(a) >= j}, the Bruhat comparison statistic."""
        n = self.n
        table = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, n + 1):
                row.append(sum(1 for a in range(1, i + 1) if self.oneline[a - 1] >= j))
            table.append(tuple(row))
        return tuple(table)


def bruhat_leq(x: Permutation, y: Permutation) -> bool:
    """Strong Bruhat order via the entry-counting criterion."""
    if x.n != y.n:
        raise DimensionError("permutation sizes differ")
    n = x.n
    xl, yl = x.oneline, y.oneline
    for i in range(1, n + 1):
        # running counts of values >= j among the first i entries
        for j in range(1, n + 1):
            cx = sum(1 for a in range(i) if xl[a] >= j)
            cy = sum(1 for a in range(i) if yl[a] >= j)
            if cx > cy:
                return False
    return True


def demazure_product(n: int, word: Iterable[int]) -> Permutation:
    """0-Hecke product: fold letters left-to-right, skipping length drops."""
    w = Permutation.identity(n)
    for i in word:
        ws = w * Permutation.transposition(n, i)
        if ws.length() > w.length():
            w = ws
    return w


@lru_cache(maxsize=None)
def longest_element(n: int, lo: int = 1, hi: int | None = None) -> Permutation:
    """Longest element of the parabolic S_{[lo, hi]} embedded in S_n."""
    if hi is None:
        hi = n
    if not 1 <= lo <= hi <= n:
        raise IndexRangeError(f"bad interval [{lo}, {hi}] in S_{n}")
    line = list(range(1, n + 1))
    line[lo - 1 : hi] = reversed(line[lo - 1 : hi])
    return Permutation(tuple(line))


def all_permutations(n: int) -> Iterator[Permutation]:
    for line in _all_perms(range(1, n + 1)):
        yield Permutation(line)


def parabolic_permutations(n: int, lo: int, hi: int) -> list[Permutation]:
    """All elements of S_{[lo, hi]} embedded in S_n, sorted by (length, oneline)."""
    head = tuple(range(1, lo))
    tail = tuple(range(hi + 1, n + 1))
    perms = [
        Permutation(head + mid + tail)
        for mid in _all_perms(range(lo, hi + 1))
    ]
    return sorted(perms, key=lambda w: (w.length(), w.oneline))


def right_quotient(w: Permutation, v: Permutation) -> Permutation:
    """The u with w = u * v and l(w) = l(u) + l(v); QuotientError otherwise."""
    u = w * v.inverse()
    if u.length() + v.length() != w.length():
        raise QuotientError(
            f"length does not subtract: l({w.oneline}) != l({u.oneline}) + l({v.oneline})"
        )
    return u
