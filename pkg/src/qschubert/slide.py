"""The sliding construction of a partition nu with c^nu_{lam,mu} = 1.

Inside a box, an upper shape (lam, top-aligned columns) faces a lower shape
(mu rotated by 180 degrees, bottom-aligned columns). The lower columns are
labelled 1, 2, ... from the top, slid up against the upper shape, and then
every row is left-justified. The row lengths of the result give nu and the
labels give an LR filling of nu/lam.

The same slide run in a taller box cut out of the cylinder gives the
candidate nu(lam, mu, d) for intermediate quantum degrees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import (
    Partition, RectContext, complement, conjugate, is_nonoverlapping,
    make_partition, part,
)
from .cylindric import CylindricLoop, LatticePoint, loop_height_at
from .lr import SkewShape, SkewTableau
from .quantum import d_max, d_min


class SlideAnomaly(ValueError):
    """The shapes inside the working box do not admit a well-formed slide."""


@dataclass(frozen=True)
class ColumnDiagram:
    """A box of ``height`` x ``width`` cells, 1-indexed from the top-left.

    ``upper`` holds the column heights of the top-aligned upper shape and
    ``labels`` maps the cells of the lower shape to their labels.
    """

    height: int
    width: int
    upper: tuple
    labels: dict = field(hash=False)

    def upper_rows(self) -> list:
        return [sum(1 for h in self.upper if h >= r) for r in range(1, self.height + 1)]

    def row_lengths(self) -> list:
        """Upper-shape row length plus labelled cells, per row."""
        counts = [0] * self.height
        for r, _ in self.labels:
            counts[r - 1] += 1
        return [u + c for u, c in zip(self.upper_rows(), counts)]

    def grid(self) -> list:
        """Rows of characters: '#' upper shape, digits for labels, '.' empty."""
        out = [["."] * self.width for _ in range(self.height)]
        for c, h in enumerate(self.upper):
            for r in range(h):
                out[r][c] = "#"
        for (r, c), v in self.labels.items():
            out[r - 1][c - 1] = str(v) if v < 10 else "+"
        return ["".join(row) for row in out]


@dataclass(frozen=True)
class SlideTrace:
    """(description, diagram) snapshots: initial, after sliding up, after left-justifying."""

    stages: tuple


def _slide_in_box(height: int, upper: Sequence[int], lower: Sequence[int]) -> SlideTrace:
    width = len(upper)
    for c in range(width):
        if upper[c] < 0 or lower[c] < 0 or upper[c] + lower[c] > height:
            raise SlideAnomaly(f"column {c + 1}: shapes of heights {upper[c]} and "
                               f"{lower[c]} do not fit in a box of height {height}")
    if any(upper[c] < upper[c + 1] for c in range(width - 1)):
        raise SlideAnomaly(f"upper column heights {tuple(upper)} are not a partition")
    if any(lower[c] > lower[c + 1] for c in range(width - 1)):
        raise SlideAnomaly(f"lower column heights {tuple(lower)} are not a rotated partition")
    upper = tuple(upper)
    initial = {}
    theta = {}
    for c in range(width):
        for t in range(1, lower[c] + 1):
            initial[(height - lower[c] + t, c + 1)] = t
            theta[(upper[c] + t, c + 1)] = t
    shifted = ColumnDiagram(height, width, upper, theta)
    upper_rows = shifted.upper_rows()
    final = {}
    for r in range(1, height + 1):
        row = sorted(c for rr, c in theta if rr == r)
        for j, c in enumerate(row):
            final[(r, upper_rows[r - 1] + j + 1)] = theta[(r, c)]
    return SlideTrace((
        ("initial", ColumnDiagram(height, width, upper, initial)),
        ("slid up", shifted),
        ("left-justified", ColumnDiagram(height, width, upper, final)),
    ))


def _result(trace: SlideTrace) -> tuple:
    final = trace.stages[-1][1]
    lengths = final.row_lengths()
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        raise SlideAnomaly(f"slide produced row lengths {lengths}, not a partition")
    inner = make_partition(final.upper_rows())
    witness = SkewTableau(SkewShape(make_partition(lengths), inner), dict(final.labels))
    return lengths, witness


def _require_nonoverlapping(lam, mu, ctx):
    if not is_nonoverlapping(lam, mu, ctx):
        raise ValueError(f"{lam} overlaps the rotation of {mu}; the product is zero")


def rho(lam: Sequence[int], mu: Sequence[int], ctx: RectContext) -> Partition:
    """Sorted heights of the gaps between the columns of lam and of rotated mu."""
    lam, mu = ctx.check(lam), ctx.check(mu)
    _require_nonoverlapping(lam, mu, ctx)
    lc, mc = conjugate(lam), conjugate(mu)
    m = ctx.width
    gaps = [ctx.k - part(lc, i) - part(mc, m + 1 - i) for i in range(1, m + 1)]
    return make_partition(sorted(gaps, reverse=True))


def nu_classical(lam: Sequence[int], mu: Sequence[int], ctx: RectContext) -> Partition:
    return complement(conjugate(rho(lam, mu, ctx)), ctx)


def slide(lam: Sequence[int], mu: Sequence[int], ctx: RectContext) -> tuple:
    """Run the slide in R_kn. Returns (nu, witness tableau on nu/lam, trace)."""
    lam, mu = ctx.check(lam), ctx.check(mu)
    _require_nonoverlapping(lam, mu, ctx)
    lc, mc = conjugate(lam), conjugate(mu)
    m = ctx.width
    upper = [part(lc, c) for c in range(1, m + 1)]
    lower = [part(mc, m + 1 - c) for c in range(1, m + 1)]
    trace = _slide_in_box(ctx.k, upper, lower)
    lengths, witness = _result(trace)
    return make_partition(lengths), witness, trace


@dataclass(frozen=True)
class QuantumSlide:
    """Working data of the degree-d construction.

    The box spans rows [top, bottom] and columns [left, left + n - k] of the
    plane; ``anchor`` is the rectangle's SW corner moved by (d, d) and
    ``upper_anchor`` the lowest point of lam[0] on the anchor's column that
    lies weakly above it.
    """

    d: int
    anchor: LatticePoint
    upper_anchor: LatticePoint
    top: int
    bottom: int
    left: int
    nu_tilde: tuple
    nu: Partition
    witness: SkewTableau
    trace: SlideTrace


def quantum_slide(lam: Sequence[int], mu: Sequence[int], d: int, ctx: RectContext) -> QuantumSlide:
    lam, mu = ctx.check(lam), ctx.check(mu)
    lo, hi = d_min(lam, mu, ctx), d_max(lam, mu, ctx)
    if not lo <= d <= hi:
        raise ValueError(f"degree {d} outside the valid range [{lo}, {hi}]")
    k, m = ctx.k, ctx.width
    anchor = LatticePoint(k + d, d)
    upper_loop = CylindricLoop(lam, 0, ctx)
    lower_loop = CylindricLoop(complement(mu, ctx), d, ctx)
    # for d = 0 lam[0] may continue below the anchor on its column
    p_row = min(loop_height_at(upper_loop, d)[1], anchor.row)
    upper_anchor = LatticePoint(p_row, d)
    top, bottom = p_row - k, anchor.row
    height = bottom - top
    upper, lower = [], []
    for c in range(d, d + m):
        upper.append(loop_height_at(upper_loop, c)[0] - top)
        lower.append(bottom - loop_height_at(lower_loop, c)[0])
    trace = _slide_in_box(height, upper, lower)
    lengths, witness = _result(trace)
    return QuantumSlide(
        d=d, anchor=anchor, upper_anchor=upper_anchor, top=top, bottom=bottom,
        left=d, nu_tilde=tuple(lengths), nu=make_partition(lengths[-k:]),
        witness=witness, trace=trace,
    )


def nu_quantum(lam: Sequence[int], mu: Sequence[int], d: int, ctx: RectContext) -> Partition:
    """Candidate nu with c^nu_{lam,mu}(d) = 1 (conjecturally) for D_min <= d <= D_max."""
    return quantum_slide(lam, mu, d, ctx).nu
