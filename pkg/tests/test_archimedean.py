import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ordalib.archimedean import (
    DimensionMismatch,
    NotArchimedean,
    OrderVector,
    QuadraticInt,
    holder_phi,
    parse_quadratic,
    vector_compare,
    zn_compare,
)
from ordalib.magnus import Order

V = OrderVector.parse("1,sqrt2")
cmp = vector_compare(V)
vec2 = st.tuples(st.integers(-50, 50), st.integers(-50, 50))


def test_quadratic_sign():
    assert QuadraticInt(1, -1, 2).sign() == -1
    assert QuadraticInt(-1, 1, 2).sign() == 1
    assert QuadraticInt(3, -2, 2).sign() == 1
    assert QuadraticInt(0, 0).sign() == 0
    with pytest.raises(ValueError):
        QuadraticInt(1, 1, 4)


@pytest.mark.parametrize("text,val", [("3", (3, 0)), ("sqrt2", (0, 1)), ("-2sqrt3", (0, -2)),
                                      ("1+sqrt(5)", (1, 1)), ("1-2*sqrt2", (1, -2)), ("-sqrt2", (0, -1))])
def test_parse_quadratic(text, val):
    q = parse_quadratic(text)
    assert (q.a, q.b) == val


def test_compare_examples():
    assert zn_compare(V, (1, 0), (0, 1)) is Order.LESS
    assert zn_compare(V, (3, -2), (3, -2)) is Order.EQUAL
    lex = OrderVector.parse("1,0", ["0,1"])
    assert zn_compare(lex, (0, 1), (0, 2)) is Order.LESS
    with pytest.raises(DimensionMismatch):
        zn_compare(V, (1, 0, 0), (0, 1))


@given(vec2, vec2, vec2)
def test_translation_invariance(m, n, p):
    shift = lambda x: tuple(a + b for a, b in zip(x, p))  # noqa: E731
    assert zn_compare(V, m, n) is zn_compare(V, shift(m), shift(n))


@given(vec2, vec2)
def test_irrational_slope_separates(m, n):
    assert (zn_compare(V, m, n) is Order.EQUAL) == (m == n)


def test_holder_examples():
    for K in (0, 5, 12):
        assert holder_phi(cmp, (2, 1), (2, 1), K) == 1
        assert holder_phi(cmp, (1, 1), (3, 3), K) == 3
    for K in (10, 15, 20):
        assert abs(float(holder_phi(cmp, (1, 0), (0, 1), K)) - math.sqrt(2)) <= 2 * 2.0 ** -K


def test_holder_cauchy_bound():
    prev = holder_phi(cmp, (1, 0), (0, 1), 1)
    for k in range(2, 25):
        cur = holder_phi(cmp, (1, 0), (0, 1), k)
        assert abs(cur - prev) <= Fraction(1, 2 ** (k - 1))
        prev = cur


@given(vec2, vec2)
def test_holder_additivity(g, h):
    K = 12
    gh = tuple(a + b for a, b in zip(g, h))
    err = holder_phi(cmp, (1, 0), gh, K) - holder_phi(cmp, (1, 0), g, K) - holder_phi(cmp, (1, 0), h, K)
    assert abs(err) <= Fraction(2, 2 ** K)


@given(vec2)
def test_holder_preserves_order(g):
    assume(g != (0, 0))
    phi = holder_phi(cmp, (1, 0), g, 30)
    if zn_compare(V, (0, 0), g) is Order.LESS:
        assert phi >= 0
    else:
        assert phi <= 0


def test_holder_negative_unit():
    assert holder_phi(cmp, (-1, 0), (2, 0), 6) == -2


def test_not_archimedean_is_detected():
    lex = vector_compare(OrderVector.parse("1,0", ["0,1"]))
    with pytest.raises(NotArchimedean):
        holder_phi(lex, (0, 1), (1, 0), 4)
