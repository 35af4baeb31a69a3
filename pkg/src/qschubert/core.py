"""Partitions in a k x (n-k) rectangle and their encodings.

Partitions are plain tuples of ints, weakly decreasing, with trailing zeros
stripped (the empty tuple is the empty partition). A "bounded" partition is
just a tuple that fits the rectangle of a :class:`RectContext`; functions
that need the rectangle take the context explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Partition = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class RectContext:
    """The Grassmannian Gr_k(C^n), i.e. the k x (n-k) rectangle."""

    k: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.k, int) and isinstance(self.n, int)):
            raise TypeError("k and n must be integers")
        if self.k < 1 or self.k >= self.n:
            raise ValueError(f"need 1 <= k < n, got k={self.k}, n={self.n}")

    @property
    def width(self) -> int:
        return self.n - self.k

    @property
    def area(self) -> int:
        return self.k * (self.n - self.k)

    def full(self) -> Partition:
        """The full rectangle (the point class)."""
        return (self.width,) * self.k

    def fits(self, lam: Sequence[int]) -> bool:
        lam = make_partition(lam)
        return len(lam) <= self.k and (not lam or lam[0] <= self.width)

    def check(self, lam: Sequence[int]) -> Partition:
        """Normalize ``lam`` and raise ``ValueError`` unless it fits."""
        lam = make_partition(lam)
        if not self.fits(lam):
            raise ValueError(f"partition {lam} does not fit the {self.k}x{self.width} rectangle")
        return lam

    def pad(self, lam: Sequence[int]) -> tuple:
        """``lam`` padded with zeros to length k."""
        lam = self.check(lam)
        return lam + (0,) * (self.k - len(lam))


def make_context(k: int, n: int) -> RectContext:
    return RectContext(k, n)


def make_partition(parts: Iterable[int]) -> Partition:
    """Canonical form of ``parts``; raises ``ValueError`` if not a partition."""
    parts = tuple(int(p) for p in parts)
    for i, p in enumerate(parts):
        if p < 0:
            raise ValueError(f"negative part {p} at position {i + 1}")
        if i and p > parts[i - 1]:
            raise ValueError(f"part {p} at position {i + 1} exceeds the previous part")
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def part(lam: Sequence[int], i: int) -> int:
    """1-indexed part of ``lam``, zero beyond its length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def weight(lam: Sequence[int]) -> int:
    return sum(lam)


def conjugate(lam: Sequence[int]) -> Partition:
    lam = make_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def contains(inner: Sequence[int], outer: Sequence[int]) -> bool:
    """True if the diagram of ``inner`` sits inside that of ``outer``."""
    inner, outer = make_partition(inner), make_partition(outer)
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def complement(lam: Sequence[int], ctx: RectContext) -> Partition:
    padded = ctx.pad(lam)
    return make_partition(ctx.width - p for p in reversed(padded))


def is_nonoverlapping(lam: Sequence[int], mu: Sequence[int], ctx: RectContext) -> bool:
    """True iff ``lam`` and the 180-degree rotation of ``mu`` are disjoint."""
    lp, mp = ctx.pad(lam), ctx.pad(mu)
    return all(lp[i] + mp[ctx.k - 1 - i] <= ctx.width for i in range(ctx.k))


# -- 01-words ---------------------------------------------------------------

def word_of(lam: Sequence[int], ctx: RectContext) -> tuple:
    """Border path of ``lam`` from SW to NE corner: 0 = right, 1 = up."""
    lp = ctx.pad(lam)
    bits = [0] * ctx.n
    for m in range(1, ctx.k + 1):
        bits[lp[ctx.k - m] + m - 1] = 1
    return tuple(bits)


def partition_of(word: Sequence[int], ctx: RectContext) -> Partition:
    word = tuple(word)
    if len(word) != ctx.n:
        raise ValueError(f"word has length {len(word)}, expected {ctx.n}")
    if any(b not in (0, 1) for b in word):
        raise ValueError("word must consist of 0s and 1s")
    ones = [i + 1 for i, b in enumerate(word) if b == 1]
    if len(ones) != ctx.k:
        raise ValueError(f"word has {len(ones)} ones, expected {ctx.k}")
    # the m-th one sits at position lam_{k+1-m} + m
    return make_partition(ones[m - 1] - m for m in range(ctx.k, 0, -1))


class PhiSequence:
    """Prefix sums of a 01-word, extended to all integers by phi[i+n] = phi[i] + k."""

    __slots__ = ("base", "k")

    def __init__(self, word: Sequence[int], k: int):
        sums = [0]
        for b in word:
            sums.append(sums[-1] + b)
        if sums[-1] != k:
            raise ValueError("word does not contain exactly k ones")
        self.base = tuple(sums)  # phi_0 .. phi_n
        self.k = k

    @property
    def n(self) -> int:
        return len(self.base) - 1

    def __getitem__(self, i: int) -> int:
        q, r = divmod(i, self.n)
        return self.base[r] + q * self.k

    def __repr__(self):
        return f"PhiSequence({list(self.base[1:])}, k={self.k})"


def phi_sequence(lam: Sequence[int], ctx: RectContext) -> PhiSequence:
    return PhiSequence(word_of(lam, ctx), ctx.k)


def phi(lam: Sequence[int], i: int, ctx: RectContext) -> int:
    return phi_sequence(lam, ctx)[i]


def cyclic_shift(lam: Sequence[int], i: int, ctx: RectContext) -> Partition:
    """S^i(lam): rotate the 01-word i places to the left."""
    w = word_of(lam, ctx)
    i %= ctx.n
    return partition_of(w[i:] + w[:i], ctx)
