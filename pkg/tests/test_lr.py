import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import context_and_partitions
from oracles import brute_lr, horizontal_strips, rectangle_partitions
from qschubert.core import RectContext, complement, conjugate, contains, is_nonoverlapping, weight
from qschubert.lr import (
    ClassSum, SkewShape, SkewTableau, classical_expansion, enumerate_lr_fillings,
    is_lr_filling, is_yamanouchi, lr_coefficient, pieri_row, point_pairing,
    reading_word, schubert_product,
)

BOX_6 = rectangle_partitions(6, 6)

# Tableau on (6,6,6,2,1)/(4,3,1) produced by the sliding example, row by row.
SLIDE_EXAMPLE = SkewTableau.from_rows((4, 3, 1), [[1, 1], [1, 2, 2], [1, 1, 2, 3, 3], [2, 3], [3]])


def test_reading_word_examples():
    assert reading_word(SkewTableau.from_rows((), [[1, 1, 2]])) == (2, 1, 1)
    assert reading_word(SkewTableau(SkewShape((2, 1), (2, 1)), {})) == ()
    assert reading_word(SLIDE_EXAMPLE) == (1, 1, 2, 2, 1, 3, 3, 2, 1, 1, 3, 2, 3)


def test_yamanouchi_examples():
    assert is_yamanouchi(reading_word(SLIDE_EXAMPLE), (5, 4, 4))
    assert not is_yamanouchi((2, 1, 1), (2, 1))
    assert is_yamanouchi((1, 2, 1), (2, 1))
    assert not is_yamanouchi((1, 2, 1), (1, 1, 1))
    assert is_lr_filling(SLIDE_EXAMPLE, (5, 4, 4))


def test_lr_coefficient_examples():
    assert lr_coefficient((4, 3, 1), (5, 4, 4), (6, 6, 6, 2, 1)) == 1
    assert lr_coefficient((3, 1), (), (3, 1)) == 1
    # values from the exhaustive filling oracle
    assert brute_lr((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert brute_lr((2, 1), (2, 1), (5, 1)) == 0
    assert lr_coefficient((2, 1), (2, 1), (5, 1)) == 0


def test_lr_accepts_partitions_outside_any_rectangle():
    assert lr_coefficient((3,), (3,), (6,)) == 1
    assert lr_coefficient((2, 1), (2, 1), (4, 2)) == brute_lr((2, 1), (2, 1), (4, 2)) == 1


def test_enumerate_fillings():
    found = list(enumerate_lr_fillings((2, 1), (2, 1), (3, 2, 1)))
    assert len(found) == 2 and len(set(found)) == 2
    assert all(is_lr_filling(t, (2, 1)) for t in found)
    assert [t.entries for t in enumerate_lr_fillings((2, 1), (), (2, 1))] == [{}]


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_lr_matches_brute_force(data):
    lam = data.draw(st.sampled_from(rectangle_partitions(3, 2)))
    mu = data.draw(st.sampled_from(rectangle_partitions(3, 2)))
    size = weight(lam) + weight(mu)
    candidates = [nu for nu in rectangle_partitions(4, 4) if weight(nu) == size]
    if not candidates:
        return
    nu = data.draw(st.sampled_from(candidates))
    assert lr_coefficient(lam, mu, nu) == brute_lr(lam, mu, nu)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(rectangle_partitions(3, 3)), st.sampled_from(rectangle_partitions(3, 3)))
def test_lr_symmetry_conjugation_degree(lam, mu):
    expansion = classical_expansion(lam, mu, 6)
    for nu, c in expansion.items():
        assert weight(nu) == weight(lam) + weight(mu)
        assert contains(lam, nu) and contains(mu, nu)
        assert lr_coefficient(mu, lam, nu) == c
        assert lr_coefficient(conjugate(lam), conjugate(mu), conjugate(nu)) == c
    # nothing is missing from the expansion
    for nu in BOX_6:
        if weight(nu) == weight(lam) + weight(mu) and nu not in expansion:
            assert lr_coefficient(lam, mu, nu) == 0


def test_schubert_product_examples():
    ctx = RectContext(2, 4)
    # Pieri oracle: horizontal strips of size 1 added to (1)
    expected = {nu: 1 for nu in horizontal_strips((1,), 1, 2, 2)}
    assert expected == {(2,): 1, (1, 1): 1}
    assert schubert_product((1,), (1,), ctx).terms == expected
    assert schubert_product((), (2, 1), ctx).terms == {(2, 1): 1}
    running = RectContext(5, 11)
    lam = (4, 3, 1)
    assert schubert_product(lam, complement(lam, running), running).terms == {running.full(): 1}


@pytest.mark.parametrize("k,n", [(2, 5), (3, 6)])
def test_pieri_consistency(k, n):
    ctx = RectContext(k, n)
    for lam in rectangle_partitions(k, n - k):
        for p in range(n - k + 1):
            got = pieri_row(lam, p, ctx)
            assert got.terms == {nu: 1 for nu in horizontal_strips(lam, p, k, n - k)}
            assert got.terms == schubert_product(lam, (p,) if p else (), ctx).terms


def test_pieri_examples():
    ctx = RectContext(2, 4)
    assert pieri_row((1,), 1, ctx).terms == {(2,): 1, (1, 1): 1}
    assert pieri_row((2, 1), 0, ctx).terms == {(2, 1): 1}
    with pytest.raises(ValueError):
        pieri_row((), 3, ctx)
    running = RectContext(5, 11)
    lam, mu = (4, 3, 1), (5, 4, 4)
    # largest horizontal strip on lam inside mu^vee, by brute force
    room = [nu for nu in horizontal_strips(lam, 5, 5, 6) if contains(nu, complement(mu, running))]
    assert room == [(6, 4, 2, 1)]
    assert pieri_row(lam, 5, running)[(6, 4, 2, 1)] == 1


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6)])
def test_product_nonzero_iff_nonoverlapping(k, n):
    ctx = RectContext(k, n)
    parts = rectangle_partitions(k, n - k)
    for lam, mu in itertools.product(parts, parts):
        assert bool(schubert_product(lam, mu, ctx)) == is_nonoverlapping(lam, mu, ctx)


def test_point_pairing():
    ctx = RectContext(5, 11)
    lam = (4, 3, 1)
    assert point_pairing(lam, complement(lam, ctx), (), ctx) == 1
    assert point_pairing(lam, (5, 4, 4), complement((6, 6, 6, 2, 1), ctx), ctx) == 1
    assert point_pairing(lam, (1,), (1,), ctx) == 0


def test_class_sum_drops_zero_terms():
    ctx = RectContext(2, 4)
    s = ClassSum(ctx, {(1,): 0, (2,): 3})
    assert s.terms == {(2,): 3} and s[(2,)] == 3 and s[(1,)] == 0
    with pytest.raises(ValueError):
        ClassSum(ctx, {(3,): 1})


@given(context_and_partitions(count=2, max_n=6))
@settings(deadline=None)
def test_classical_product_total_degree(data):
    ctx, lam, mu = data
    for nu in schubert_product(lam, mu, ctx).terms:
        assert weight(nu) == weight(lam) + weight(mu)
