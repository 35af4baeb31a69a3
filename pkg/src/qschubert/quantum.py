"""Quantum products in QH^*(Gr_k(C^n)).

Two routes to the Gromov-Witten invariants c^nu_{lam,mu}(d):

* at the extreme degrees D_min and D_max, a classical LR coefficient of
  cyclically rotated partitions (the rotation rule);
* at any degree, rim-hook reduction of the classical product s_lam * s_mu
  computed in k variables (Bertram, Ciocan-Fontanine and Fulton).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import (
    Partition, RectContext, complement, cyclic_shift, make_partition,
    phi_sequence, weight,
)
from .lr import classical_expansion, lr_coefficient


class OracleDisagreement(AssertionError):
    """Two independent routes to the same invariant gave different answers."""


@dataclass
class QuantumClassSum:
    """``terms`` maps (d, nu) -> coefficient of q^d sigma_nu."""

    ctx: RectContext
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (d, nu), c in self.terms.items():
            key = (d, self.ctx.check(nu))
            clean[key] = clean.get(key, 0) + c
        self.terms = {key: c for key, c in clean.items() if c}

    def __getitem__(self, key) -> int:
        d, nu = key
        return self.terms.get((d, make_partition(nu)), 0)

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set:
        return {d for d, _ in self.terms}

    def at_degree(self, d: int) -> dict:
        return {nu: c for (e, nu), c in self.terms.items() if e == d}

    def sorted_terms(self) -> list:
        """((d, nu), coefficient) pairs sorted by degree then padded parts."""
        return sorted(self.terms.items(), key=lambda t: (t[0][0], self.ctx.pad(t[0][1])))

    def mod2(self) -> "QuantumClassSum":
        return QuantumClassSum(self.ctx, {key: c % 2 for key, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for (d, nu), c in self.sorted_terms():
            q = "" if d == 0 else ("q*" if d == 1 else f"q^{d}*")
            out.append(("" if c == 1 else f"{c}*") + q + f"s({','.join(map(str, nu))})")
        return " + ".join(out)


# -- extremal degrees -------------------------------------------------------

def _min_window(lam, mu, ctx):
    pl, pm = phi_sequence(lam, ctx), phi_sequence(mu, ctx)
    return [pl[i] + pm[-i] for i in range(1, ctx.n + 1)]


def _max_window(lam, mu, ctx):
    pl, pm = phi_sequence(lam, ctx), phi_sequence(mu, ctx)
    return [pl[-i] + pm[i - ctx.width] for i in range(1, ctx.n + 1)]


def d_min(lam: Sequence[int], mu: Sequence[int], ctx: RectContext) -> int:
    """Lowest power of q in sigma_lam * sigma_mu."""
    return -min(_min_window(ctx.check(lam), ctx.check(mu), ctx))


def d_max(lam: Sequence[int], mu: Sequence[int], ctx: RectContext) -> int:
    """Highest power of q in sigma_lam * sigma_mu."""
    return -max(_max_window(ctx.check(lam), ctx.check(mu), ctx))


@dataclass(frozen=True)
class ExtremalData:
    d_min: int
    d_max: int
    a: int
    b: int
    lambda_min: Partition
    mu_min: Partition
    lambda_max: Partition
    mu_max: Partition


def extremal_data(lam: Sequence[int], mu: Sequence[int], ctx: RectContext) -> ExtremalData:
    """D_min, D_max with witness indices and the four rotated partitions.

    Witnesses a and b are the smallest indices in [1, n] attaining the
    extremum.
    """
    lam, mu = ctx.check(lam), ctx.check(mu)
    lo = _min_window(lam, mu, ctx)
    hi = _max_window(lam, mu, ctx)
    a = lo.index(min(lo)) + 1
    b = hi.index(max(hi)) + 1
    return ExtremalData(
        d_min=-lo[a - 1],
        d_max=-hi[b - 1],
        a=a,
        b=b,
        lambda_min=cyclic_shift(lam, a, ctx),
        mu_min=cyclic_shift(mu, -a, ctx),
        lambda_max=cyclic_shift(complement(lam, ctx), b, ctx),
        mu_max=cyclic_shift(complement(mu, ctx), ctx.width - b, ctx),
    )


# -- rim-hook oracle --------------------------------------------------------

def _remove_top_rim_hook(rows: list, length: int):
    """Strip the ``length``-cell rim hook starting at the end of row 1.

    Returns (new_rows, height) or None if no such removable hook exists.
    """
    nrows = len(rows)
    i, j = 0, rows[0] - 1  # 0-indexed cell (row, col)
    path = []
    while len(path) < length:
        if i >= nrows or j < 0 or j >= rows[i]:
            return None
        path.append((i, j))
        if i + 1 < nrows and rows[i + 1] > j:
            i += 1
        else:
            j -= 1
    # removal leaves a partition unless the rim continues straight down
    end_i, end_j = path[-1]
    if end_i + 1 < nrows and rows[end_i + 1] > end_j:
        return None
    new = list(rows)
    for r, _ in path:
        new[r] -= 1
    if any(new[r] < new[r + 1] for r in range(nrows - 1)):
        return None
    height = len({r for r, _ in path})
    return new, height


def rim_hook_reduce(nu: Sequence[int], ctx: RectContext):
    """Reduce ``nu`` (at most k rows) into the rectangle by removing n-rim hooks.

    Returns ``(d, sign, reduced)`` or ``None`` when the class vanishes.
    """
    nu = make_partition(nu)
    if len(nu) > ctx.k:
        raise ValueError(f"{nu} has more than k={ctx.k} rows")
    rows = list(nu)
    d, sign = 0, 1
    while rows and rows[0] > ctx.width:
        step = _remove_top_rim_hook(rows, ctx.n)
        if step is None:
            return None
        rows, height = step
        d += 1
        sign *= (-1) ** (ctx.k - height)
    return d, sign, make_partition(rows)


def quantum_product(lam: Sequence[int], mu: Sequence[int], ctx: RectContext) -> QuantumClassSum:
    lam, mu = ctx.check(lam), ctx.check(mu)
    terms = {}
    for nu, c in classical_expansion(lam, mu, ctx.k).items():
        red = rim_hook_reduce(nu, ctx)
        if red is None:
            continue
        d, sign, rho = red
        terms[(d, rho)] = terms.get((d, rho), 0) + sign * c
    negative = {key: c for key, c in terms.items() if c < 0}
    if negative:
        raise OracleDisagreement(f"negative quantum coefficients {negative} for {lam} * {mu}")
    return QuantumClassSum(ctx, terms)


def q_support(lam: Sequence[int], mu: Sequence[int], ctx: RectContext) -> set:
    return quantum_product(lam, mu, ctx).degrees()


def gw_invariant(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], d: int,
                 ctx: RectContext, product: QuantumClassSum | None = None) -> int:
    """c^nu_{lam,mu}(d).

    At D_min and D_max the rotation rule is used and checked against the
    rim-hook oracle; elsewhere the oracle alone answers. ``product`` may be
    passed to reuse an already computed quantum product.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    lam, mu, nu = ctx.check(lam), ctx.check(mu), ctx.check(nu)
    if weight(lam) + weight(mu) != weight(nu) + d * ctx.n:
        return 0
    if product is None:
        product = quantum_product(lam, mu, ctx)
    oracle = product[(d, nu)]
    ext = extremal_data(lam, mu, ctx)
    routes = []
    if d == ext.d_min:
        routes.append(lr_coefficient(ext.lambda_min, ext.mu_min, nu))
    if d == ext.d_max:
        routes.append(lr_coefficient(ext.lambda_max, ext.mu_max, complement(nu, ctx)))
    for value in routes:
        if value != oracle:
            raise OracleDisagreement(
                f"c^{nu}_{lam},{mu}({d}): rotation rule gives {value}, rim hooks give {oracle}")
    return routes[0] if routes else oracle
