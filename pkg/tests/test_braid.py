import itertools
import random

import pytest
from hypothesis import given

from ordalib.braid import (
    BraidWord,
    NotAKnot,
    SignKind,
    StrandMismatch,
    alexander_from_braid,
    b3_alphabet,
    b3_navas_normalize,
    b3_sign_from_navas,
    braid_to_b3_ab,
    burau_reduced,
    compare_dehornoy,
    dd_generators,
    dd_membership,
    dehornoy_floor,
    exponent_sum,
    genus_bound,
    half_twist,
    handle_reduce,
    is_trivial,
    permutation,
    provably_prime,
    sigma,
    sigma_sign,
)
from ordalib.knots import torus_alexander
from ordalib.poly import Laurent, parse_poly
from ordalib.words import parse

from strategies import braids, positive_braids


def B(text, n=3):
    return BraidWord.parse(text, n)


def test_parse_and_format():
    b = B("s1 s2^-1 s1^3")
    assert b.letters == (1, -2, 1, 1, 1)
    assert str(b) == "s1 s2^-1 s1^3"
    assert B("sigma_1 sigma_2") == B("s1 s2")


def test_permutation_examples():
    assert permutation(B("s1")) == (2, 1, 3)
    assert permutation(BraidWord(3, ())) == (1, 2, 3)
    # strands read left to right: strand 1 ends at 3, 2 at 1, 3 at 2
    assert permutation(B("s1 s2")) == (3, 1, 2)


def test_exponent_sum_examples():
    assert exponent_sum(B("s1^3")) == 3
    assert exponent_sum(B("s1 s2^-1")) == 0
    assert exponent_sum(half_twist(3)) == 3


def test_handle_reduction_examples():
    r = handle_reduce(B("s1^2 s2^-1 s1^-1"))
    assert sigma_sign(r).kind is SignKind.NEGATIVE and sigma_sign(r).index == 1
    assert handle_reduce(B("s1 s1^-1")).letters == ()


def test_random_w_winv_reduces_to_empty():
    rng = random.Random(1)
    for _ in range(200):
        letters = tuple(rng.choice([1, 2, 3, -1, -2, -3]) for _ in range(rng.randint(0, 12)))
        b = BraidWord(4, letters)
        assert handle_reduce(b * b.inverse()).letters == ()


def test_sigma_sign_examples():
    assert str(sigma_sign(B("s1^2 s2^-1 s1^-1"))) == "1-negative"
    for n in (3, 4, 5):
        s = sigma_sign(sigma(n, n - 1))
        assert s.kind is SignKind.POSITIVE and s.index == n - 1
    assert sigma_sign(BraidWord(3, ())).kind is SignKind.TRIVIAL


def test_compare_examples():
    one = BraidWord(3, ())
    assert compare_dehornoy(one, B("s2")) == -1
    assert compare_dehornoy(B("s1 s2"), B("s1 s2")) == 0
    assert compare_dehornoy(B("s2"), B("s1")) == -1
    with pytest.raises(StrandMismatch):
        compare_dehornoy(B("s1", 3), B("s1", 4))


def test_navas_examples():
    a = b3_alphabet()
    assert b3_navas_normalize(parse("b^3", a)) == parse("b^3", a)
    assert b3_navas_normalize(parse("a", a)) == parse("a", a)
    nf = b3_navas_normalize(parse("b a^-3", a))
    assert all(e < 0 for g, e in nf.pairs() if g.label == "a")


def test_dd_examples():
    assert dd_membership(B("s1 s2"))
    assert dd_membership(B("s2^-1"))
    assert not dd_membership(BraidWord(3, ()))
    assert all(dd_membership(g) for g in dd_generators(4))


def test_half_twist():
    assert half_twist(2) == B("s1", 2)
    assert half_twist(3) == B("s1 s2 s1")
    for n in range(2, 6):
        d = half_twist(n)
        for i in range(1, n):
            conj = d * sigma(n, i) * d.inverse()
            assert is_trivial(conj * sigma(n, n - i).inverse())


def test_floor_examples():
    d = half_twist(3)
    assert dehornoy_floor(BraidWord(3, ())) == 0
    for m in (-2, 1, 3):
        assert dehornoy_floor(d ** (2 * m)) == m
    assert dehornoy_floor(B("s1")) == 0


def test_prime_examples():
    assert provably_prime(B("s1") * half_twist(3) ** 4)
    assert not provably_prime(B("s1^3", 2))
    assert not provably_prime(BraidWord(3, ()))


def test_genus_examples():
    assert genus_bound(B("s1", 2)) == 0
    assert genus_bound(B("s1^3", 2)) <= 1
    # the bare Delta^6 s1 closes to a two-component link
    with pytest.raises(NotAKnot):
        genus_bound(half_twist(3) ** 6 * B("s1"))
    assert genus_bound(half_twist(3) ** 6 * B("s1 s2")) >= 2


def test_burau_examples():
    m = burau_reduced(B("s1", 2))
    assert m == [[Laurent.t(1, -1)]]
    ident = burau_reduced(BraidWord(3, ()))
    assert ident == [[Laurent.const(1), Laurent.const(0)], [Laurent.const(0), Laurent.const(1)]]
    assert burau_reduced(B("s1 s2 s1")) == burau_reduced(B("s2 s1 s2"))


def test_alexander_examples():
    assert alexander_from_braid(B("s1^3", 2)) == torus_alexander(2, 3)
    assert alexander_from_braid(B("s1", 2)) == parse_poly("1")
    assert alexander_from_braid(B("s1 s2^-1 s1 s2^-1")) == parse_poly("1 - 3t + t^2")


def _all_b3_words(max_len):
    for n in range(max_len + 1):
        for letters in itertools.product((1, -1, 2, -2), repeat=n):
            if any(a == -b for a, b in zip(letters, letters[1:])):
                continue
            yield BraidWord(3, letters)


def test_acyclicity_exhaustive_length_6():
    for b in _all_b3_words(6):
        s, t = sigma_sign(b), sigma_sign(b.inverse())
        assert s.sign == -t.sign


@given(braids(4, 10), braids(4, 10), braids(4, 8))
def test_left_invariance(a, b, c):
    assert compare_dehornoy(a, b) == compare_dehornoy(c * a, c * b)


@given(braids(3, 10))
def test_reduction_preserves_permutation_and_exponent_sum(b):
    r = handle_reduce(b)
    assert permutation(r) == permutation(b)
    assert exponent_sum(r) == exponent_sum(b)


@given(braids(3, 8), braids(3, 8))
def test_floor_is_superadditive(a, b):
    assert dehornoy_floor(a * b) >= dehornoy_floor(a) + dehornoy_floor(b)


@given(braids(3, 8))
def test_navas_sign_agrees_with_handle_reduction(b):
    assert b3_sign_from_navas(b3_navas_normalize(braid_to_b3_ab(b))).sign == sigma_sign(b).sign


@given(positive_braids(3, 6), positive_braids(3, 6))
def test_positive_braids_are_positive(a, b):
    assert sigma_sign(a).sign == 1
    assert compare_dehornoy(a, a * b) == -1
