import pytest

from ordalib.presentation import (
    AbelianInvariants,
    Presentation,
    PresentationError,
    abelianization,
    catalog,
    consequences,
    coset_enumeration,
    lookup,
)
from ordalib.words import parse


def test_parse_text_format():
    p = Presentation.parse("gens: a b ; rels: a b a b = b^3 = a^5")
    assert len(p.relators) == 2
    assert Presentation.parse(p.to_text()).relators == p.relators
    with pytest.raises(PresentationError):
        Presentation.parse("a b")


def test_json_roundtrip():
    for name in catalog():
        p = lookup(name)
        q = Presentation.from_json(p.to_json())
        assert q.relators == p.relators and q.alphabet == p.alphabet


def test_abelianization_examples():
    assert abelianization(lookup("weeks")).as_tuple() == (0, [5, 5])
    assert abelianization(lookup("sigma237")).is_trivial
    assert abelianization(lookup("gphi", p=1, q=0, r=-1, s=0)).order == 32
    assert abelianization(lookup("crystallographic")).as_tuple() == (0, [4, 4])
    assert abelianization(lookup("kleinbottle")).as_tuple() == (1, [2])
    assert str(AbelianInvariants(1, [2])) == "Z + Z/2"


@pytest.mark.parametrize("pqrs", [(1, 0, -1, 0), (2, 1, 0, -1), (1, 1, -1, 0), (3, 0, 0, -2)])
def test_gphi_abelian_order_formula(pqrs):
    p = lookup("gphi", **dict(zip("pqrs", pqrs)))
    assert abelianization(p).order == p.expected["abelian_order"]


def test_catalog_expected_facts():
    assert lookup("weeks").expected["abelianization"] == (0, [5, 5])
    assert lookup("kleinbottle").expected["lo_count"] == 4
    assert lookup("sigma_n_41", n=2).expected["complete"] is True
    assert lookup("sigma_n_41:3").params["n"] == 3
    assert lookup("gphi:1,0,-1,0").params == {"p": 1, "q": 0, "r": -1, "s": 0}
    for name in catalog():
        p = lookup(name)
        if "abelianization" in p.expected:
            assert abelianization(p).as_tuple() == tuple(p.expected["abelianization"]), name


def test_coset_enumeration():
    assert coset_enumeration(Presentation.parse("gens: a ; rels: a^5")).order == 5
    assert coset_enumeration(lookup("poincare")).order == 120
    assert coset_enumeration(lookup("sigma237"), 20000).order is None
    for cap in (1000, 5000):
        assert coset_enumeration(lookup("kleinbottle"), cap).order is None
    assert coset_enumeration(lookup("sigma_n_41", n=2)).order == 5


def test_consequences_small():
    p = Presentation.parse("gens: a ; rels: a^3")
    words = [c.word for c in consequences(p, 6, 100)]
    assert parse("a^-3", p.alphabet) in words


def test_crystallographic_consequences_contain_the_identity():
    p = lookup("crystallographic")
    cons = consequences(p, 10, 100000, 2)
    target = parse("a b a b b a b a", p.alphabet)
    hits = [c for c in cons if c.word == target]
    assert hits and hits[0].generation <= 2
    for c in cons[::25]:
        assert c.verify(p.relators)


def test_relators_are_cyclically_reduced():
    p = Presentation.parse("gens: x y ; rels: x y^2 x^-1, x y x^-1 y x")
    assert [str(r) for r in p.relators] == ["y^2", "x y x^-1 y x"]
