import itertools

import pytest
from hypothesis import given, settings

from conftest import context_and_partitions
from oracles import brute_lr, rectangle_partitions
from qschubert.core import RectContext, complement, conjugate, is_nonoverlapping
from qschubert.lr import enumerate_lr_fillings, is_lr_filling, lr_coefficient, reading_word
from qschubert.quantum import d_max, d_min, extremal_data, gw_invariant, quantum_product
from qschubert.slide import (
    SlideAnomaly, _slide_in_box, nu_classical, nu_quantum, quantum_slide, rho, slide,
)

LAM, MU = (6, 5, 4, 2), (6, 4, 3, 3, 2)


def _labels(points, origin, top=0, left=0, k=5):
    """Picture label positions (box centres, 10 units per box) -> 1-indexed box cells."""
    x0, y0 = origin
    out = {}
    for x, y, v in points:
        row = k - (y - y0) / 10 - top + 0.5
        col = (x - x0) / 10 - left + 0.5
        out[(int(row), int(col))] = v
    return out


# the three panels of the classical example lam = (4,3,1), mu = (5,4,4) in the 5 x 6 box
CLASSICAL_PANELS = [
    ((0, 0), [(15, 5, 1), (25, 5, 3), (35, 5, 3), (45, 5, 3), (55, 5, 3), (25, 15, 2),
              (35, 15, 2), (45, 15, 2), (55, 15, 2), (25, 25, 1), (35, 25, 1), (45, 25, 1),
              (55, 25, 1)]),
    ((120, 0), [(135, 25, 1), (145, 5, 3), (155, 15, 3), (165, 25, 3), (175, 25, 3),
                (145, 15, 2), (155, 25, 2), (165, 35, 2), (175, 35, 2), (145, 25, 1),
                (155, 35, 1), (165, 45, 1), (175, 45, 1)]),
    ((120, -60), [(135, -35, 1), (125, -55, 3), (135, -45, 3), (165, -35, 3), (175, -35, 3),
                  (125, -45, 2), (155, -35, 2), (165, -25, 2), (175, -25, 2), (145, -35, 1),
                  (155, -25, 1), (165, -15, 1), (175, -15, 1)]),
]

# the three panels of the degree-2 example; the box spans rows -1..7 and columns 2..8
QUANTUM_PANELS = [
    ((0, 0), [(25, -15, 1), (35, -15, 1), (45, -15, 2), (55, -15, 4), (65, -15, 5),
              (75, -15, 5), (45, -5, 1), (55, -5, 3), (65, -5, 4), (75, -5, 4), (55, 5, 2),
              (65, 5, 3), (75, 5, 3), (55, 15, 1), (65, 15, 2), (75, 15, 2), (65, 25, 1),
              (75, 25, 1)]),
    ((140, 0), [(165, 15, 1), (175, 15, 1), (185, 15, 2), (195, 5, 4), (205, 15, 5),
                (215, 15, 5), (185, 25, 1), (195, 15, 3), (205, 25, 4), (215, 25, 4),
                (195, 25, 2), (205, 35, 3), (215, 35, 3), (195, 35, 1), (205, 45, 2),
                (215, 45, 2), (205, 55, 1), (215, 55, 1)]),
    ((140, -90), [(165, -75, 1), (175, -75, 1), (185, -75, 2), (165, -85, 4), (205, -75, 5),
                  (215, -75, 5), (185, -65, 1), (195, -75, 3), (205, -65, 4), (215, -65, 4),
                  (195, -65, 2), (205, -55, 3), (215, -55, 3), (195, -55, 1), (205, -45, 2),
                  (215, -45, 2), (205, -35, 1), (215, -35, 1)]),
]


def test_rho_and_nu_example(running):
    assert rho((4, 3, 1), (5, 4, 4), running) == (2, 2, 2, 2, 1)
    assert nu_classical((4, 3, 1), (5, 4, 4), running) == (6, 6, 6, 2, 1)


def test_rho_trivial(running):
    assert rho((), (), running) == (5,) * 6
    assert rho((4, 3, 1), complement((4, 3, 1), running), running) == ()
    with pytest.raises(ValueError):
        rho((6, 6, 6, 6, 6), (1,), running)


def test_nu_classical_trivial(running):
    for lam in [(), (4, 3, 1), (6, 5, 4, 2)]:
        assert nu_classical(lam, (), running) == lam
        assert nu_classical(lam, complement(lam, running), running) == (6,) * 5


def test_slide_matches_pictured_stages(running):
    nu, witness, trace = slide((4, 3, 1), (5, 4, 4), running)
    assert nu == (6, 6, 6, 2, 1)
    assert [name for name, _ in trace.stages] == ["initial", "slid up", "left-justified"]
    for (origin, labels), (_, diagram) in zip(CLASSICAL_PANELS, trace.stages):
        assert diagram.labels == _labels(labels, origin)
    assert witness.rows() == [[1, 1], [1, 2, 2], [1, 1, 2, 3, 3], [2, 3], [3]]
    assert is_lr_filling(witness, (5, 4, 4))


def test_witness_is_the_only_filling(running):
    _, witness, _ = slide((4, 3, 1), (5, 4, 4), running)
    fillings = list(enumerate_lr_fillings((4, 3, 1), (5, 4, 4), (6, 6, 6, 2, 1)))
    assert fillings == [witness]


def test_not_jeu_de_taquin(running):
    # rectifying the rotated shape would give a different class
    nu = nu_classical((4, 3, 1), (5, 4, 4), running)
    assert nu != (6, 6, 6, 3)
    assert lr_coefficient((4, 3, 1), (5, 4, 4), (6, 6, 6, 3)) == brute_lr((4, 3, 1), (5, 4, 4), (6, 6, 6, 3))


def test_slide_of_empty_is_superstandard(running):
    nu, witness, _ = slide((), (5, 4, 4), running)
    assert nu == (5, 4, 4)
    assert witness.rows() == [[1] * 5, [2] * 4, [3] * 4]


@pytest.mark.parametrize("k,n", [(2, 5), (3, 6), (3, 7)])
def test_slide_exhaustive(k, n):
    ctx = RectContext(k, n)
    parts = rectangle_partitions(k, n - k)
    for lam, mu in itertools.product(parts, parts):
        if not is_nonoverlapping(lam, mu, ctx):
            continue
        nu, witness, trace = slide(lam, mu, ctx)
        assert nu == nu_classical(lam, mu, ctx)
        assert is_lr_filling(witness, mu)
        assert brute_lr(lam, mu, nu) == 1
        # left-justifying rows keeps the reading word of the slid-up picture
        slid = trace.stages[1][1].labels
        word = [slid[c] for c in sorted(slid, key=lambda rc: (rc[0], -rc[1]))]
        assert tuple(word) == tuple(reading_word(witness))


@settings(max_examples=80, deadline=None)
@given(context_and_partitions(2, 9))
def test_nu_is_weight_complement_of_rho(data):
    ctx, lam, mu = data
    if not is_nonoverlapping(lam, mu, ctx):
        return
    r = rho(lam, mu, ctx)
    assert sum(r) == ctx.area - sum(lam) - sum(mu)
    assert nu_classical(lam, mu, ctx) == complement(conjugate(r), ctx)


def test_bad_column_heights_are_anomalies():
    with pytest.raises(SlideAnomaly):
        _slide_in_box(2, [2, 1], [1, 0])
    with pytest.raises(SlideAnomaly):
        _slide_in_box(3, [1, 2], [0, 0])


def test_quantum_slide_example(running):
    q = quantum_slide(LAM, MU, 2, running)
    assert q.anchor == (7, 2) and q.upper_anchor == (4, 2)
    assert (q.top, q.bottom, q.left) == (-1, 7, 2)
    assert q.nu_tilde == (6, 6, 6, 6, 6, 1, 0, 0)
    assert q.nu == nu_quantum(LAM, MU, 2, running) == (6, 6, 1)
    for (origin, labels), (_, diagram) in zip(QUANTUM_PANELS, q.trace.stages):
        assert diagram.labels == _labels(labels, origin, top=-1, left=2)
    assert gw_invariant(LAM, MU, q.nu, 2, running) == 1


def test_quantum_slide_degree_bookkeeping(running):
    for d in (1, 2, 3):
        q = quantum_slide(LAM, MU, d, running)
        assert sum(q.nu) + d * running.n == sum(LAM) + sum(MU)
        assert quantum_product(LAM, MU, running)[(d, q.nu)] == 1


def test_quantum_slide_out_of_range(running):
    with pytest.raises(ValueError, match=r"outside the valid range \[1, 3\]"):
        nu_quantum(LAM, MU, 0, running)
    with pytest.raises(ValueError, match="outside"):
        nu_quantum(LAM, MU, 4, running)


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6)])
def test_quantum_slide_at_zero_is_classical(k, n):
    ctx = RectContext(k, n)
    parts = rectangle_partitions(k, n - k)
    for lam, mu in itertools.product(parts, parts):
        if is_nonoverlapping(lam, mu, ctx) and d_min(lam, mu, ctx) == 0:
            assert nu_quantum(lam, mu, 0, ctx) == nu_classical(lam, mu, ctx)


@pytest.mark.parametrize("k,n", [(2, 5), (3, 6)])
def test_quantum_slide_gives_coefficient_one(k, n):
    ctx = RectContext(k, n)
    parts = rectangle_partitions(k, n - k)
    for lam, mu in itertools.product(parts, parts):
        prod = quantum_product(lam, mu, ctx)
        ext = extremal_data(lam, mu, ctx)
        for d in range(ext.d_min, ext.d_max + 1):
            assert prod[(d, nu_quantum(lam, mu, d, ctx))] == 1
        assert d_max(lam, mu, ctx) == ext.d_max
