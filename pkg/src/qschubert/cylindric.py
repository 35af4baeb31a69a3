"""Cylindric loops, frames and toric shapes.

Lattice points use matrix coordinates: (row, col) is ``row`` steps down and
``col`` steps right of the origin. The rectangle R_kn has its SW corner at
(k, 0) and its NE corner at (0, n - k). The border of lam, walked from the SW
corner, continues periodically under translation by (-k, n - k); the loop
lam[d] is that path translated by (d, d).

Loops are never materialized; everything is a scan over one period of
columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .core import Partition, RectContext, complement, make_partition, phi_sequence, word_of


class LatticePoint(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Frame:
    """A translate of R_kn, located by its SW corner."""

    anchor: LatticePoint
    ctx: RectContext

    @property
    def rows(self) -> tuple:
        return self.anchor.row - self.ctx.k, self.anchor.row

    @property
    def cols(self) -> tuple:
        return self.anchor.col, self.anchor.col + self.ctx.width


@dataclass(frozen=True)
class CylindricLoop:
    base: Partition
    shift: int
    ctx: RectContext

    def __post_init__(self):
        object.__setattr__(self, "base", self.ctx.check(self.base))

    def point(self, j: int) -> LatticePoint:
        """The lattice point reached after j steps from the (shifted) anchor."""
        ph = phi_sequence(self.base, self.ctx)[j]
        return LatticePoint(self.ctx.k + self.shift - ph, self.shift + j - ph)

    def step_range(self, col: int) -> tuple:
        """First and last step index j whose point lies on column ``col``."""
        ctx = self.ctx
        zeros = [i + 1 for i, b in enumerate(word_of(self.base, ctx)) if b == 0]
        m = ctx.width
        q, r = divmod(col - self.shift, m)
        # position of the t-th right step, t counted from 1 in the base period
        def zpos(t):
            qq, rr = divmod(t - 1, m)
            return zeros[rr] + qq * ctx.n
        return zpos(r) + q * ctx.n, zpos(r + 1) - 1 + q * ctx.n


def loop_height_at(loop: CylindricLoop, col: int) -> tuple:
    """(lowest, highest) row coordinate of the loop's points on column ``col``.

    Rows grow downward, so the first entry is the visually highest point.
    """
    j_lo, j_hi = loop.step_range(col)
    return loop.point(j_hi).row, loop.point(j_lo).row


def _edge_row(loop: CylindricLoop, col: int) -> int:
    # row of the horizontal edge leaving column line ``col`` to the right
    return loop_height_at(loop, col)[0]


def is_cylindric_shape(mu: Sequence[int], d: int, lam: Sequence[int], ctx: RectContext) -> bool:
    """True iff mu[d] lies weakly right of and below lam[0]."""
    upper = CylindricLoop(lam, 0, ctx)
    lower = CylindricLoop(mu, d, ctx)
    return all(_edge_row(lower, c) >= _edge_row(upper, c) for c in range(ctx.width))


def is_toric(mu: Sequence[int], d: int, lam: Sequence[int], ctx: RectContext) -> bool:
    """True iff mu[d] lies weakly between lam[0] and lam[0] shifted down by k."""
    upper = CylindricLoop(lam, 0, ctx)
    lower = CylindricLoop(mu, d, ctx)
    for c in range(ctx.width):
        top, row = _edge_row(upper, c), _edge_row(lower, c)
        if not top <= row <= top + ctx.k:
            return False
    return True


def toric_support(lam: Sequence[int], mu: Sequence[int], ctx: RectContext) -> set:
    """All d >= 0 for which mu^vee/d/lam is toric."""
    lam, mu = ctx.check(lam), ctx.check(mu)
    muv = complement(mu, ctx)
    # beyond d = n the translate has dropped more than k rows below lam[0]
    return {d for d in range(ctx.n + 1) if is_toric(muv, d, lam, ctx)}


def frame_view(lam: Sequence[int], i: int, ctx: RectContext) -> tuple:
    """Slide a frame's anchor i steps NE along lam[0] and read off its contents.

    Returns (partition inside the frame, how far the frame moved up).
    """
    loop = CylindricLoop(lam, 0, ctx)
    anchor = loop.point(i)
    frame = Frame(anchor, ctx)
    top, bottom = frame.rows
    left = frame.cols[0]
    parts = []
    # row band between lines r-1 and r is crossed by exactly one up-step
    for r in range(top + 1, bottom + 1):
        for j in range(i + 1, i + ctx.n + 1):
            prev, here = loop.point(j - 1), loop.point(j)
            if prev.row == r and here.row == r - 1:
                parts.append(here.col - left)
                break
    return make_partition(parts), ctx.k - anchor.row


def loop_points(loop: CylindricLoop, start: int, stop: int) -> list:
    """Planar points of the loop for step indices start..stop inclusive."""
    return [loop.point(j) for j in range(start, stop + 1)]
