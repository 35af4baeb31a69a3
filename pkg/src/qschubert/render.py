"""ASCII and SVG pictures of loops, toric shapes, frames and slides.

Pictures are built on a grid of lattice boxes; box (i, j) has its top-left
corner at lattice point (i, j). Output is deterministic for fixed inputs.
"""

from __future__ import annotations

from .core import RectContext, cyclic_shift
from .cylindric import CylindricLoop, Frame, loop_height_at
from .slide import quantum_slide, slide

UNIT = 20
RENDER_KINDS = ("loops", "toric", "slide", "frames")
RENDER_FORMATS = ("ascii", "svg")


def loop_path(lam, d: int, ctx: RectContext, start: int = None, stop: int = None) -> list:
    """Lattice points (row, col) of lam[d] for steps start..stop (default: one period plus a margin)."""
    loop = CylindricLoop(lam, d, ctx)
    if start is None:
        start = -ctx.k
    if stop is None:
        stop = ctx.n + ctx.k
    return [tuple(loop.point(j)) for j in range(start, stop + 1)]


def _corners(points):
    """Drop points in the middle of straight runs."""
    if len(points) < 3:
        return list(points)
    out = [points[0]]
    for a, b, c in zip(points, points[1:], points[2:]):
        if (b[0] - a[0], b[1] - a[1]) != (c[0] - b[0], c[1] - b[1]):
            out.append(b)
    out.append(points[-1])
    return out


class _Canvas:
    def __init__(self, rows, cols):
        self.r0, self.r1 = rows
        self.c0, self.c1 = cols
        self.cells = {}
        self.lines = []
        self.rects = []

    def put(self, i, j, ch):
        if self.r0 <= i < self.r1 and self.c0 <= j < self.c1:
            self.cells[(i, j)] = ch

    def ascii(self) -> str:
        out = []
        for i in range(self.r0, self.r1):
            out.append("".join(self.cells.get((i, j), " ") for j in range(self.c0, self.c1)).rstrip())
        while out and not out[-1]:
            out.pop()
        return "\n".join(out) + "\n"

    def svg(self) -> str:
        w = (self.c1 - self.c0) * UNIT
        h = (self.r1 - self.r0) * UNIT
        parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
                 f'viewBox="0 0 {w} {h}">']
        fills = {"#": "#bbbbbb", "*": "#888888", ".": "#ffffff"}
        for (i, j), ch in sorted(self.cells.items()):
            x, y = (j - self.c0) * UNIT, (i - self.r0) * UNIT
            fill = fills.get(ch, "#ffffff")
            parts.append(f'<rect x="{x}" y="{y}" width="{UNIT}" height="{UNIT}" '
                         f'fill="{fill}" stroke="#dddddd"/>')
            if ch not in fills:
                parts.append(f'<text x="{x + UNIT // 2}" y="{y + UNIT * 3 // 4}" '
                             f'text-anchor="middle" font-size="{UNIT * 3 // 4}">{ch}</text>')
        for (r0, c0), (r1, c1), style in self.rects:
            x, y = (c0 - self.c0) * UNIT, (r0 - self.r0) * UNIT
            parts.append(f'<rect x="{x}" y="{y}" width="{(c1 - c0) * UNIT}" '
                         f'height="{(r1 - r0) * UNIT}" fill="none" stroke="black" '
                         f'stroke-dasharray="{style}"/>')
        for pts, width in self.lines:
            coords = " ".join(f"{(c - self.c0) * UNIT},{(r - self.r0) * UNIT}" for r, c in pts)
            parts.append(f'<polyline points="{coords}" fill="none" stroke="black" '
                         f'stroke-width="{width}"/>')
        parts.append("</svg>")
        return "\n".join(parts) + "\n"


def _border_boxes(canvas, lam, d, ctx, ch, overwrite=True):
    loop = CylindricLoop(lam, d, ctx)
    for c in range(canvas.c0, canvas.c1):
        i = loop_height_at(loop, c)[0] - 1
        if overwrite or (i, c) not in canvas.cells:
            canvas.put(i, c, ch)


def _clip(points, canvas):
    return [p for p in points if canvas.r0 <= p[0] <= canvas.r1 and canvas.c0 <= p[1] <= canvas.c1]


def render_loops(lam, ctx, shifts=(0, 1, 2)):
    cv = _Canvas((-3, ctx.k + max(shifts) + 3), (-3, ctx.width + 5))
    cv.rects.append(((0, 0), (ctx.k, ctx.width), "0"))
    for d in shifts:
        _border_boxes(cv, lam, d, ctx, str(d % 10))
        cv.lines.append((_corners(_clip(loop_path(lam, d, ctx, -2 * ctx.n, 3 * ctx.n), cv)), 2))
    return cv


def render_toric(lam, mu, d, ctx):
    cv = _Canvas((-ctx.k, 2 * ctx.k + d + 1), (-2, ctx.width + 2))
    upper = CylindricLoop(lam, 0, ctx)
    lower = CylindricLoop(mu, d, ctx)
    for c in range(cv.c0, cv.c1):
        a, b = loop_height_at(upper, c)[0], loop_height_at(lower, c)[0]
        for i in range(a, b):
            cv.put(i, c, "#")
    cv.rects.append(((0, 0), (ctx.k, ctx.width), "0"))
    for shape, shift, width in ((lam, 0, 2), (mu, d, 2)):
        cv.lines.append((_corners(_clip(loop_path(shape, shift, ctx, -2 * ctx.n, 3 * ctx.n), cv)), width))
    down = [(r + ctx.k, c) for r, c in loop_path(lam, 0, ctx, -2 * ctx.n, 3 * ctx.n)]
    cv.lines.append((_corners(_clip(down, cv)), 1))
    return cv


def render_frames(lam, i, ctx):
    loop = CylindricLoop(lam, 0, ctx)
    anchor = loop.point(i)
    frame = Frame(anchor, ctx)
    r0, r1 = min(0, frame.rows[0]), max(ctx.k, frame.rows[1])
    c0, c1 = min(0, frame.cols[0]), max(ctx.width, frame.cols[1])
    cv = _Canvas((r0 - 1, r1 + 1), (c0 - 1, c1 + 1))
    shifted = cyclic_shift(lam, i, ctx)
    pad = ctx.pad(shifted)
    for t in range(ctx.k):
        for j in range(ctx.width):
            cv.put(frame.rows[0] + t, frame.cols[0] + j, "#" if j < pad[t] else ".")
    _border_boxes(cv, lam, 0, ctx, "*", overwrite=False)
    cv.rects.append(((0, 0), (ctx.k, ctx.width), "4"))
    cv.rects.append(((frame.rows[0], frame.cols[0]), (frame.rows[1], frame.cols[1]), "0"))
    cv.lines.append((_corners(_clip(loop_path(lam, 0, ctx, -2 * ctx.n, 3 * ctx.n), cv)), 2))
    return cv


def render_slide(lam, mu, ctx, d=None):
    if d is None:
        _, _, trace = slide(lam, mu, ctx)
    else:
        trace = quantum_slide(lam, mu, d, ctx).trace
    stages = [diagram for _, diagram in trace.stages]
    h, w = stages[0].height, stages[0].width
    cv = _Canvas((0, h), (0, len(stages) * (w + 2) - 2))
    for s, diagram in enumerate(stages):
        off = s * (w + 2)
        for i, row in enumerate(diagram.grid()):
            for j, ch in enumerate(row):
                cv.put(i, off + j, ch)
        cv.rects.append(((0, off), (h, off + w), "0"))
    return cv


def render(kind: str, fmt: str, ctx: RectContext, lam, mu=None, d=None) -> str:
    if kind not in RENDER_KINDS:
        raise ValueError(f"unknown diagram kind {kind!r}")
    if fmt not in RENDER_FORMATS:
        raise ValueError(f"unknown diagram format {fmt!r}")
    lam = ctx.check(lam)
    if kind == "loops":
        cv = render_loops(lam, ctx, tuple(range(0, (2 if d is None else d) + 1)))
    elif kind == "frames":
        cv = render_frames(lam, 1 if d is None else d, ctx)
    else:
        if mu is None:
            raise ValueError(f"diagram kind {kind!r} needs a second partition")
        mu = ctx.check(mu)
        if kind == "toric":
            # the strip mu/d/lam; pass mu^vee to picture a quantum product's degree d
            cv = render_toric(lam, mu, 0 if d is None else d, ctx)
        else:
            cv = render_slide(lam, mu, ctx, d)
    return cv.ascii() if fmt == "ascii" else cv.svg()
