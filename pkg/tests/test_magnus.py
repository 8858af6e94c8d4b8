import itertools
import random

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ordalib.magnus import (
    DegreeMismatch,
    Monomial,
    Order,
    TruncatedSeries,
    compare,
    expand,
    is_garside_positive,
    leading_term,
    mul,
    sort_words,
)
from ordalib.words import Alphabet, Word, all_reduced_words, concat, conjugate, invert, parse

from strategies import X12, words

x1, x2 = X12.gens


def w(text):
    return parse(text, X12)


def test_expand_examples():
    assert str(expand(w("x_1"), 3)) == "1 + X_1"
    assert str(expand(w("x_1^-1"), 3)) == "1 - X_1 + X_1^2 - X_1^3"
    s = expand(w("x_1 x_2^2 x_1^-1"), 2)
    assert str(s) == "1 + 2X_2 + 2X_1X_2 - 2X_2X_1 + X_2^2"
    assert s.coeff(x1, x2) == 2 and s.coeff(x2, x1) == -2 and s.coeff(x2, x2) == 1


def test_mul_examples():
    one_plus = TruncatedSeries(2, {(): 1, (x1,): 1})
    assert mul(one_plus, TruncatedSeries(2, {(): 1, (x1,): -1, (x1, x1): 1})) == TruncatedSeries.one(2)
    a = TruncatedSeries(2, {(): 1, (x1,): 1})
    b = TruncatedSeries(2, {(): 1, (x2,): 1})
    assert str(a * b) == "1 + X_1 + X_2 + X_1X_2"
    c = TruncatedSeries(2, {(): 1, (x2,): 1})
    assert str(c * c) == "1 + 2X_2 + X_2^2"
    with pytest.raises(DegreeMismatch):
        mul(a, TruncatedSeries.one(3))


def test_compare_examples():
    assert compare(w("x_2^2"), w("x_1 x_2^2 x_1^-1")) is Order.LESS
    assert compare(w("x1 x2"), w("x1 x2")) is Order.EQUAL
    for p, q in itertools.combinations(range(-4, 5), 2):
        assert compare(w(f"x1^{p}") if p else X12.identity(), w(f"x1^{q}") if q else X12.identity()) is Order.LESS


def test_leading_term_examples():
    assert leading_term(w("x_1^3")) == (Monomial((x1,)), 3)
    assert leading_term(X12.identity()) is None


def test_garside_positive():
    assert is_garside_positive(w("x1 x2"))
    assert not is_garside_positive(w("x1 x2^-1"))


def test_injectivity_exhaustive_length_4():
    ws = all_reduced_words(X12, 4)
    e = X12.identity()
    for u in ws:
        assert (compare(e, u) is Order.EQUAL) == u.is_identity()


def test_total_order_on_small_ball():
    ws = all_reduced_words(X12, 3)
    ordered = sort_words(ws)
    for a, b in zip(ordered, ordered[1:]):
        assert compare(a, b) is Order.LESS


@given(words(X12, 6), words(X12, 6), words(X12, 6))
def test_bi_invariance(u, v, g):
    c = compare(u, v)
    assert compare(concat(g, u), concat(g, v)) is c
    assert compare(concat(u, g), concat(v, g)) is c


@given(words(X12, 6), words(X12, 6))
def test_conjugation_preserves_leading_term(u, g):
    assume(not u.is_identity())
    assert leading_term(conjugate(u, g)) == leading_term(u)


@given(st.lists(st.tuples(st.sampled_from([x1, x2]), st.integers(1, 3)), min_size=1, max_size=5))
def test_garside_positive_words_are_positive(pairs):
    u = Word.from_pairs(X12, pairs)
    assert compare(X12.identity(), u) is Order.LESS


def _halve_first_syllable(d: Word) -> Word | None:
    g, e = d.pairs()[0]
    if abs(e) <= 1:
        return None
    return Word.from_pairs(d.alphabet, [(g, e // 2 if e > 0 else -((-e) // 2))])


@given(words(X12, 6), words(X12, 6))
def test_order_density_witness(u, v):
    """u < u (u^-1 v)' < v when (u^-1 v)' keeps half the first syllable and is itself positive."""
    if compare(u, v) is Order.GREATER:
        u, v = v, u
    d = concat(invert(u), v)
    assume(not d.is_identity())
    h = _halve_first_syllable(d)
    assume(h is not None)
    assume(compare(X12.identity(), h) is Order.LESS and compare(h, d) is Order.LESS)
    mid = concat(u, h)
    assert compare(u, mid) is Order.LESS and compare(mid, v) is Order.LESS


def test_group_ring_extremes_are_unique():
    """For finite supports A, B the extreme products are achieved by a single pair."""
    rng = random.Random(3)
    pool = all_reduced_words(X12, 3)
    for _ in range(40):
        A = rng.sample(pool, 4)
        B = rng.sample(pool, 4)
        prods = [(concat(a, b), a, b) for a in A for b in B]
        ordered = sort_words([p for p, _, _ in prods])
        lo, hi = ordered[0], ordered[-1]
        assert sum(1 for p, _, _ in prods if p == lo) == 1
        assert sum(1 for p, _, _ in prods if p == hi) == 1


def test_surface_translation_preserves_positivity():
    grid = Alphabet.indexed("x", [(m, n) for m in range(4) for n in range(4)])
    rng = random.Random(5)

    def shift(u: Word, dm: int, dn: int) -> Word:
        return Word.from_pairs(grid, [(grid.lookup(f"x_{g.index[0] + dm}_{g.index[1] + dn}"), e) for g, e in u.pairs()])

    small = [g for g in grid if g.index[0] < 2 and g.index[1] < 2]
    for _ in range(60):
        u = Word.from_pairs(grid, [(rng.choice(small), rng.choice([1, -1])) for _ in range(rng.randint(1, 6))])
        if u.is_identity():
            continue
        s = compare(grid.identity(), u)
        for dm, dn in ((1, 0), (0, 2), (2, 1)):
            assert compare(grid.identity(), shift(u, dm, dn)) is s
