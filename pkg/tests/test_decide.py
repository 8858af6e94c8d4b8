import json
import random
from fractions import Fraction

import pytest

from ordalib import decide as D
from ordalib.oracle import Braid, ball
from ordalib.presentation import lookup
from ordalib.words import Alphabet, all_reduced_words, parse

# frozen regression values, computed by this tool and cross-checked by brute force
Z2_COUNTS = {1: 4, 2: 8, 3: 16, 4: 24}
CRYSTALLOGRAPHIC_MIN_K = 2
DEHORNOY_WITNESS = ("s1 s2", "s2^-1 s1 s2^-1", "s2 s1^-1 s2")


def _ball(name, k):
    return ball(lookup(name).backend(), None, k)


def test_z_partitions():
    for k in (1, 2, 3):
        parts = D.enumerate_k_partitions(_ball("z", k))
        assert len(parts) == 2
        assert sorted(len(p.members) for p in parts) == [k, k]
    assert sorted(str(w) for w in D.enumerate_k_partitions(_ball("z", 3))[0].words()) == ["x", "x^2", "x^3"]


def test_z2_k1_is_unconstrained():
    assert len(D.enumerate_k_partitions(_ball("z2", 1))) == 4


@pytest.mark.parametrize("name,k", [("z", 3), ("z2", 2), ("z2", 3), ("kleinbottle", 2), ("kleinbottle", 3),
                                    ("crystallographic", 2), ("free2", 2)])
def test_backtracking_matches_brute_force(name, k):
    b = _ball(name, k)
    got = {p.members for p in D.enumerate_k_partitions(b)}
    assert got == set(D.brute_force_partitions(b))
    for p in D.enumerate_k_partitions(b):
        assert p.violations() == []


@pytest.mark.parametrize("name,k", [("kleinbottle", 2), ("kleinbottle", 3), ("z", 3)])
def test_conradian_matches_brute_force(name, k):
    b = _ball(name, k)
    got = {p.members for p in D.enumerate_conradian_k_partitions(b)}
    assert got == set(D.brute_force_partitions(b, conradian=True))


def test_enumeration_order_is_deterministic_and_parallel_safe():
    b = _ball("z2", 3)
    serial = [sorted(p.members) for p in D.enumerate_k_partitions(b)]
    assert serial == [sorted(p.members) for p in D.enumerate_k_partitions(b)]
    assert serial == [sorted(p.members) for p in D.enumerate_k_partitions(b, threads=2)]


@pytest.mark.parametrize("name,k", [("z2", 1), ("z2", 2), ("z2", 3), ("kleinbottle", 1), ("kleinbottle", 2),
                                    ("kleinbottle", 3), ("free2", 1)])
def test_restriction_is_monotone(name, k):
    small, big = _ball(name, k), _ball(name, k + 1)
    for p in D.enumerate_k_partitions(big):
        assert D.restrict(p, small).violations() == []


def test_sikora_growth():
    counts = {k: len(D.enumerate_k_partitions(_ball("z2", k))) for k in range(1, 5)}
    assert counts == Z2_COUNTS
    assert all(counts[k] < counts[k + 1] for k in range(1, 4))


def test_nonlo_by_partitions():
    z = lookup("z").backend()
    for k in (1, 3, 5):
        assert D.nonlo_by_partitions(z, None, k).outcome is D.Outcome.UNDETERMINED
    kb = lookup("kleinbottle").backend()
    for k in range(1, 6):
        assert D.nonlo_by_partitions(kb, None, k).outcome is D.Outcome.UNDETERMINED
    c = lookup("crystallographic").backend()
    assert D.minimal_refuting_radius(c, 8) == CRYSTALLOGRAPHIC_MIN_K


def test_involution_blocks_everything():
    z2 = Alphabet.of("t")
    from ordalib.oracle import BoundedRewriting

    b = ball(BoundedRewriting(z2, [parse("t^2", z2)]), None, 2)
    assert D.enumerate_k_partitions(b) == []
    assert D.brute_force_partitions(b) == []


def test_klein_cones():
    a = Alphabet.of("x", "y")
    assert D.klein_cone_membership(1, 1, parse("x y^-5", a))
    assert not D.klein_cone_membership(1, 1, parse("y^-1", a))
    for k in range(1, 6):
        b = _ball("kleinbottle", k)
        cones = D.klein_cone_partitions(b)
        assert len({c.members for c in cones}) == 4
        for c in cones:
            assert c.violations() == []
            assert c.violations(conradian=True) == []


def test_klein_partitions_are_conradian():
    for k in range(1, 5):
        b = _ball("kleinbottle", k)
        plain = [p.members for p in D.enumerate_k_partitions(b)]
        assert plain == [p.members for p in D.enumerate_conradian_k_partitions(b)]


def test_tararin_counts():
    kb = lookup("kleinbottle").backend()
    for k in (2, 3):
        t = D.tararin_counts(kb, k)
        assert t.extendable == 4 and t.cone_consistent_extendable == 4


def test_ordering_metric():
    a = Alphabet.of("x", "y")
    cone = lambda s, t: (lambda w: D.klein_cone_membership(s, t, w))  # noqa: E731
    enum = [w for w in all_reduced_words(a, 3) if not w.is_identity()]
    enum.sort(key=lambda w: (len(w), 0 if str(w).startswith("y") else 1, str(w)))
    assert str(enum[0]) == "y"
    assert D.ordering_metric(cone(1, 1), cone(1, 1), enum) == 0
    assert D.ordering_metric(cone(1, 1), cone(1, -1), enum) == Fraction(1, 2)
    rng = random.Random(2)
    preds = [cone(s, t) for s, t in D.KLEIN_SIGNS]
    for _ in range(30):
        p1, p2, p3 = (rng.choice(preds) for _ in range(3))
        d13 = D.ordering_metric(p1, p3, enum)
        assert d13 <= max(D.ordering_metric(p1, p2, enum), D.ordering_metric(p2, p3, enum))


def test_dehornoy_cone_is_not_conradian():
    b = ball(Braid(3), None, 4)
    part = D.dehornoy_partition(b, 3)
    assert part.violations() == []
    g, h, k = D.conradian_violation(part)
    assert (str(g), str(h), str(k)) == DEHORNOY_WITNESS


def test_blocks():
    a = Alphabet.indexed("x", [1, 2])
    x1, x2 = a.gens
    plus = {x1: 1, x2: 1}
    assert D.blocks(parse("x1 x2", a), plus)
    assert not D.blocks(parse("x1 x2^-1", a), plus)
    assert D.blocks(parse("x1^-1 x2^-1", a), plus)
    with pytest.raises(D.EmptyRelator):
        D.blocks(a.identity(), plus)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_sigma_n_complete(n):
    p = lookup("sigma_n_41", n=n)
    res = D.is_complete(p)
    assert res.complete
    cert = D.CompleteCertificate.build(p, res)
    assert D.load_certificate(cert.dumps()).replay()


def test_incomplete_and_unverified():
    free = lookup("free2")
    res = D.is_complete(free)
    assert not res.complete and len(res.unblocked) == 4
    with pytest.raises(D.UnverifiedExtraRelator):
        D.is_complete(free, [parse("a b", free.alphabet)])


def test_find_blockers():
    c = D.find_blockers(lookup("crystallographic"), 10, 100000, 2)
    assert c.complete and c.generation <= 2
    assert D.find_blockers(lookup("sigma_n_41", n=2)).generation == 0
    assert not D.find_blockers(lookup("kleinbottle"), 8, 5000, 2).complete


def test_crystallographic_sign_test():
    p = lookup("crystallographic")
    a = p.alphabet
    r = D.semigroup_sign_test(p, [parse("a", a), parse("b", a)], 8)
    assert r.outcome is D.Outcome.NON_LEFT_ORDERABLE
    assert len(r.certificate.witnesses) == 4
    cert = D.load_certificate(r.certificate.dumps())
    assert cert.replay()


def test_weeks_sign_test():
    p = lookup("weeks")
    X = [parse(s, p.alphabet) for s in p.expected["sign_words"]]
    r = D.semigroup_sign_test(p, X, 10)
    assert r.outcome is D.Outcome.NON_LEFT_ORDERABLE
    assert len(r.certificate.witnesses) == 8
    assert D.load_certificate(r.certificate.dumps()).replay()


def test_sign_test_undetermined_and_errors():
    z = lookup("z")
    r = D.semigroup_sign_test(z, [parse("x", z.alphabet)], 10)
    assert r.outcome is D.Outcome.UNDETERMINED and r.certificate is None
    with pytest.raises(D.IdentityInList):
        D.semigroup_sign_test(z, [z.alphabet.identity()], 4)


def test_tampered_certificates_fail():
    p = lookup("crystallographic")
    a = p.alphabet
    data = D.semigroup_sign_test(p, [parse("a", a), parse("b", a)], 8).certificate.to_json()
    data["witnesses"][0]["factors"] = data["witnesses"][0]["factors"][:-1]
    assert not D.load_certificate(data).replay()
    data = D.semigroup_sign_test(p, [parse("a", a), parse("b", a)], 8).certificate.to_json()
    data["witnesses"] = data["witnesses"][:3]
    assert not D.load_certificate(data).replay()
    w = lookup("weeks")
    X = [parse(s, w.alphabet) for s in w.expected["sign_words"]]
    data = json.loads(D.semigroup_sign_test(w, X, 10).certificate.dumps())
    for entry in data["witnesses"]:
        if entry["script"]:
            entry["script"] = entry["script"][:-1]
            break
    assert not D.load_certificate(data).replay()


def test_partition_certificate():
    p = lookup("crystallographic")
    cert = D.PartitionCertificate(p.name, p.oracle, p.to_json(), 2, 17)
    assert D.load_certificate(cert.dumps()).replay()
    k = lookup("kleinbottle")
    assert not D.PartitionCertificate(k.name, k.oracle, k.to_json(), 2, 13).replay()
