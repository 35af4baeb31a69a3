"""Littlewood-Richardson coefficients by enumerating LR fillings.

A filling of nu/lam is an LR filling of content mu when it is semistandard
and its reading word (rows top to bottom, each read right to left) is
Yamanouchi with content mu.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .core import (
    Partition, RectContext, complement, contains, is_nonoverlapping,
    make_partition, part, weight,
)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", make_partition(self.outer))
        object.__setattr__(self, "inner", make_partition(self.inner))
        if not contains(self.inner, self.outer):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    def cells(self) -> list:
        """Cells (row, col), 1-indexed, in reading order."""
        return [(r, c)
                for r in range(1, len(self.outer) + 1)
                for c in range(self.outer[r - 1], part(self.inner, r), -1)]

    def __len__(self):
        return weight(self.outer) - weight(self.inner)


@dataclass(frozen=True)
class SkewTableau:
    """A filling of a skew shape; ``entries`` maps (row, col) -> positive int."""

    shape: SkewShape
    entries: dict = field(hash=False)

    def __post_init__(self):
        if set(self.entries) != set(self.shape.cells()):
            raise ValueError("entries do not match the cells of the shape")

    @classmethod
    def from_rows(cls, inner: Sequence[int], rows: Sequence[Sequence[int]]) -> "SkewTableau":
        """Build from the entries of each row, listed left to right."""
        inner = make_partition(inner)
        outer = make_partition(part(inner, r) + len(row) for r, row in enumerate(rows, 1))
        entries = {}
        for r, row in enumerate(rows, 1):
            for j, v in enumerate(row):
                entries[(r, part(inner, r) + j + 1)] = v
        return cls(SkewShape(outer, inner), entries)

    def rows(self) -> list:
        """Entries of each row of the outer shape, left to right."""
        sh = self.shape
        return [[self.entries[(r, c)] for c in range(part(sh.inner, r) + 1, sh.outer[r - 1] + 1)]
                for r in range(1, len(sh.outer) + 1)]

    def content(self) -> Partition:
        counts = Counter(self.entries.values())
        top = max(counts, default=0)
        return tuple(counts.get(i, 0) for i in range(1, top + 1))

    def is_semistandard(self) -> bool:
        for (r, c), v in self.entries.items():
            if v < 1:
                return False
            right = self.entries.get((r, c + 1))
            if right is not None and right < v:
                return False
            below = self.entries.get((r + 1, c))
            if below is not None and below <= v:
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, SkewTableau):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, tuple(sorted(self.entries.items()))))


def reading_word(tableau: SkewTableau) -> tuple:
    return tuple(tableau.entries[cell] for cell in tableau.shape.cells())


def is_yamanouchi(word: Sequence[int], mu: Sequence[int] | None = None) -> bool:
    """Prefix condition #1s >= #2s >= ...; if ``mu`` is given, content must equal it."""
    counts = Counter()
    for v in word:
        if v < 1:
            return False
        counts[v] += 1
        if v > 1 and counts[v] > counts[v - 1]:
            return False
    if mu is None:
        return True
    mu = make_partition(mu)
    top = max(counts, default=0)
    return tuple(counts.get(i, 0) for i in range(1, top + 1)) == mu


def is_lr_filling(tableau: SkewTableau, mu: Sequence[int]) -> bool:
    return tableau.is_semistandard() and is_yamanouchi(reading_word(tableau), mu)


def _fillings(lam: Partition, mu: Partition, nu: Partition) -> Iterator[list]:
    """Backtracking over cells in reading order with Yamanouchi prefix pruning.

    Yields the list of entries (in reading order) of each LR filling.
    """
    cells = SkewShape(nu, lam).cells()
    index = {cell: i for i, cell in enumerate(cells)}
    ncells = len(cells)
    values = [0] * ncells
    counts = [0] * (len(mu) + 2)
    right_of = [index.get((r, c + 1)) for r, c in cells]
    above = [index.get((r - 1, c)) for r, c in cells]

    def rec(pos):
        if pos == ncells:
            yield list(values)
            return
        r = cells[pos][0]
        hi = min(r, len(mu))
        if right_of[pos] is not None:
            hi = min(hi, values[right_of[pos]])
        lo = 1
        if above[pos] is not None:
            lo = values[above[pos]] + 1
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            values[pos] = v
            yield from rec(pos + 1)
            counts[v] -= 1

    yield from rec(0)


def _admissible(lam: Partition, mu: Partition, nu: Partition) -> bool:
    return (weight(lam) + weight(mu) == weight(nu)
            and contains(lam, nu) and contains(mu, nu))


def enumerate_lr_fillings(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> Iterator[SkewTableau]:
    """All LR fillings of nu/lam with content mu (order is not significant)."""
    lam, mu, nu = make_partition(lam), make_partition(mu), make_partition(nu)
    if not _admissible(lam, mu, nu):
        return
    shape = SkewShape(nu, lam)
    cells = shape.cells()
    for values in _fillings(lam, mu, nu):
        yield SkewTableau(shape, dict(zip(cells, values)))


@lru_cache(maxsize=None)
def _lr_count(lam: Partition, mu: Partition, nu: Partition) -> int:
    if not _admissible(lam, mu, nu):
        return 0
    return sum(1 for _ in _fillings(lam, mu, nu))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """c^nu_{lam,mu}. Partitions need not fit any rectangle."""
    return _lr_count(make_partition(lam), make_partition(mu), make_partition(nu))


# -- classes in H^*(Gr_k(C^n)) -------------------------------------------------

@dataclass
class ClassSum:
    """Integer combination of Schubert classes, ``terms`` maps partition -> coefficient."""

    ctx: RectContext
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.terms.items():
            lam = self.ctx.check(lam)
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self.terms = {lam: c for lam, c in clean.items() if c}

    def __getitem__(self, lam) -> int:
        return self.terms.get(make_partition(lam), 0)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self) -> list:
        """(partition, coefficient) pairs, lexicographic on padded parts."""
        return sorted(self.terms.items(), key=lambda t: self.ctx.pad(t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for lam, c in self.sorted_terms():
            coef = "" if c == 1 else f"{c}*"
            out.append(f"{coef}s({','.join(map(str, lam))})")
        return " + ".join(out)


def partitions_in_box(rows: int, cols: int, size: int | None = None,
                      lower: Sequence[int] = ()) -> Iterator[Partition]:
    """Partitions with at most ``rows`` parts, parts <= ``cols``, containing ``lower``.

    If ``size`` is given only partitions of that weight are produced.
    """
    lower = make_partition(lower)

    def rec(i, cap, remaining, acc):
        if i > rows:
            if size is None or remaining == 0:
                yield make_partition(acc)
            return
        lo = part(lower, i)
        hi = cap
        if size is not None:
            hi = min(hi, remaining)
        for p in range(hi, lo - 1, -1):
            # later rows hold at most p boxes each
            if size is not None and remaining - p > p * (rows - i):
                break
            yield from rec(i + 1, p, remaining - p if size is not None else 0, acc + [p])

    if size is not None and size < 0:
        return
    yield from rec(1, cols, size if size is not None else 0, [])


def classical_expansion(lam: Sequence[int], mu: Sequence[int], max_rows: int) -> dict:
    """s_lam * s_mu restricted to partitions with at most ``max_rows`` rows.

    Result maps nu -> c^nu_{lam,mu} (nonzero entries only); nu_1 is unbounded.
    """
    lam, mu = make_partition(lam), make_partition(mu)
    lower = tuple(max(a, b) for a, b in zip(lam + (0,) * len(mu), mu + (0,) * len(lam)))
    lower = make_partition(lower)
    if len(lower) > max_rows:
        return {}
    out = {}
    cols = part(lam, 1) + part(mu, 1)
    for nu in partitions_in_box(max_rows, cols, weight(lam) + weight(mu), lower):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def schubert_product(lam: Sequence[int], mu: Sequence[int], ctx: RectContext) -> ClassSum:
    lam, mu = ctx.check(lam), ctx.check(mu)
    terms = {}
    if is_nonoverlapping(lam, mu, ctx):
        for nu, c in classical_expansion(lam, mu, ctx.k).items():
            if ctx.fits(nu):
                terms[nu] = c
    return ClassSum(ctx, terms)


def pieri_row(lam: Sequence[int], p: int, ctx: RectContext) -> ClassSum:
    """sigma_lam * sigma_(p): add a horizontal strip of p boxes inside the rectangle."""
    lam = ctx.check(lam)
    if not 0 <= p <= ctx.width:
        raise ValueError(f"row length {p} outside [0, {ctx.width}]")
    lp = ctx.pad(lam)
    terms = {}

    def rec(i, remaining, acc):
        if i == ctx.k:
            if remaining == 0:
                terms[make_partition(acc)] = 1
            return
        cap = ctx.width if i == 0 else lp[i - 1]
        for add in range(0, min(cap - lp[i], remaining) + 1):
            rec(i + 1, remaining - add, acc + [lp[i] + add])

    rec(0, p, [])
    return ClassSum(ctx, terms)


def multiply_by_row(cls: ClassSum, p: int) -> ClassSum:
    """Linear extension of :func:`pieri_row` to a class sum."""
    terms = {}
    for lam, c in cls.terms.items():
        for nu, e in pieri_row(lam, p, cls.ctx).terms.items():
            terms[nu] = terms.get(nu, 0) + c * e
    return ClassSum(cls.ctx, terms)


def point_pairing(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], ctx: RectContext) -> int:
    """Coefficient of the point class in sigma_lam * sigma_mu * sigma_nu."""
    lam, mu, nu = ctx.check(lam), ctx.check(mu), ctx.check(nu)
    if weight(lam) + weight(mu) + weight(nu) != ctx.area:
        return 0
    return lr_coefficient(lam, mu, complement(nu, ctx))
