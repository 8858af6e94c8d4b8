"""Alexander polynomials and the bi-orderability verdicts for knot groups.

Rules:
  * fibred, all roots of Delta real and positive   -> bi-orderable
  * fibred, nontrivial, no positive real root      -> not bi-orderable
  * two-bridge, no positive real root              -> not bi-orderable
  * twist knot K_m (m > 1)                         -> bi-orderable iff m even
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Iterable, Sequence

from .braid import BraidWord, alexander_from_braid
from .poly import IntPolynomial, parse_poly, positive_real_roots
from .presentation import Presentation
from .words import Alphabet, Word


class KnotError(ValueError):
    pass


class NotCoprime(KnotError):
    pass


class MissingFibredFlag(KnotError):
    pass


class MissingParameters(KnotError):
    pass


class OutOfRange(KnotError):
    pass


class BadParameters(KnotError):
    pass


class InconsistentDiagram(KnotError):
    pass


def torus_alexander(p: int, q: int) -> IntPolynomial:
    """(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))."""
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise NotCoprime(f"({p}, {q}) are not coprime integers >= 2")
    tm = lambda k: IntPolynomial.monomial(k) - IntPolynomial([1])  # noqa: E731
    return (tm(p * q) * tm(1)).exact_div(tm(p) * tm(q))


def alexander_sanity(p: IntPolynomial) -> bool:
    return not p.is_zero() and abs(p(1)) == 1 and p.is_palindromic()


class VerdictValue(Enum):
    BI_ORDERABLE = "BiOrderable"
    NOT_BI_ORDERABLE = "NotBiOrderable"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Verdict:
    value: VerdictValue
    rule: str
    roots: tuple[int, int] | None = None
    degree: int | None = None

    def to_dict(self) -> dict:
        return {"verdict": self.value.value, "rule": self.rule,
                "positive_roots": list(self.roots) if self.roots else None, "degree": self.degree}


@dataclass
class KnotInput:
    name: str
    braid: BraidWord | None = None
    polynomial: IntPolynomial | None = None
    fibred: bool | None = None
    two_bridge: tuple[int, int] | None = None
    twist_m: int | None = None

    def __post_init__(self):
        if self.braid is None and self.polynomial is None and self.two_bridge is None and self.twist_m is None:
            raise KnotError(f"{self.name}: no source given")
        if self.two_bridge is not None:
            p, q = self.two_bridge
            if not (0 < p < q and p % 2 and q % 2 and gcd(p, q) == 1):
                raise BadParameters(f"{self.name}: two-bridge parameters {self.two_bridge}")

    def alexander(self) -> IntPolynomial:
        if self.polynomial is not None:
            return self.polynomial
        if self.braid is not None:
            return alexander_from_braid(self.braid)
        raise MissingParameters(f"{self.name}: no polynomial or braid")

    @classmethod
    def from_dict(cls, d: dict) -> "KnotInput":
        braid = None
        if d.get("braid") is not None:
            if "strands" not in d:
                raise KnotError(f"{d.get('name')}: braid needs 'strands'")
            braid = BraidWord.parse(d["braid"], int(d["strands"]))
        poly = None
        if d.get("polynomial") is not None:
            raw = d["polynomial"]
            poly = IntPolynomial(raw) if isinstance(raw, list) else parse_poly(raw)
        tb = tuple(d["two_bridge"]) if d.get("two_bridge") is not None else None
        return cls(d.get("name", "?"), braid, poly, d.get("fibred"), tb, d.get("twist_m"))

    def to_dict(self) -> dict:
        out: dict = {"name": self.name}
        if self.braid is not None:
            out["braid"] = str(self.braid)
            out["strands"] = self.braid.n
        if self.polynomial is not None:
            out["polynomial"] = str(self.polynomial)
        if self.fibred is not None:
            out["fibred"] = self.fibred
        if self.two_bridge is not None:
            out["two_bridge"] = list(self.two_bridge)
        if self.twist_m is not None:
            out["twist_m"] = self.twist_m
        return out


def _all_positive_real(p: IntPolynomial) -> tuple[bool, tuple[int, int]]:
    roots = positive_real_roots(p)
    return roots[0] == p.degree, roots


def verdict_fibred(k: KnotInput) -> Verdict:
    if not k.fibred:
        raise MissingFibredFlag(f"{k.name} is not marked fibred")
    p = k.alexander()
    if p.degree == 0:
        return Verdict(VerdictValue.BI_ORDERABLE, "trivial knot group is Z", (0, 0), 0)
    all_pos, roots = _all_positive_real(p)
    if all_pos:
        return Verdict(VerdictValue.BI_ORDERABLE, "fibred: all roots real and positive", roots, p.degree)
    if roots[0] == 0:
        return Verdict(VerdictValue.NOT_BI_ORDERABLE, "fibred: no positive real root", roots, p.degree)
    return Verdict(VerdictValue.INCONCLUSIVE, "fibred: some but not all roots positive", roots, p.degree)


def verdict_twist(m: int) -> Verdict:
    if m is None or m <= 1:
        raise OutOfRange(f"twist parameter {m} must exceed 1")
    if m % 2 == 0:
        return Verdict(VerdictValue.BI_ORDERABLE, "twist knot: m even")
    return Verdict(VerdictValue.NOT_BI_ORDERABLE, "twist knot: m odd")


def verdict_two_bridge(k: KnotInput) -> Verdict:
    if k.two_bridge is None and k.twist_m is None:
        raise MissingParameters(f"{k.name} has no two-bridge parameters")
    if k.twist_m is not None:
        return verdict_twist(k.twist_m)
    p = k.alexander()
    roots = positive_real_roots(p)
    if p.degree > 0 and roots[0] == 0:
        return Verdict(VerdictValue.NOT_BI_ORDERABLE, "two-bridge: no positive real root", roots, p.degree)
    return Verdict(VerdictValue.INCONCLUSIVE, "two-bridge: positive roots present, rule silent", roots, p.degree)


def verdict(k: KnotInput) -> Verdict:
    """Apply whichever rules the input supports, strongest first."""
    if k.twist_m is not None:
        return verdict_twist(k.twist_m)
    if k.fibred:
        v = verdict_fibred(k)
        if v.value is not VerdictValue.INCONCLUSIVE or k.two_bridge is None:
            return v
    if k.two_bridge is not None:
        return verdict_two_bridge(k)
    p = k.alexander()
    return Verdict(VerdictValue.INCONCLUSIVE, "no applicable rule", positive_real_roots(p) if p.degree else (0, 0),
                   p.degree)


# --- presentations ---------------------------------------------------------------

def two_bridge_word(p: int, q: int) -> list[tuple[str, int]]:
    if not (0 < p < q and p % 2 and q % 2 and gcd(p, q) == 1):
        raise BadParameters(f"two-bridge parameters ({p}, {q})")
    out = []
    for i in range(1, q):
        eps = -1 if (i * p // q) % 2 else 1
        out.append(("b" if i % 2 else "a", eps))
    return out


def two_bridge_presentation(p: int, q: int) -> Presentation:
    """<a, b | a w = w b> with w = b^e1 a^e2 ... a^e_{q-1}, e_i = (-1)^floor(ip/q)."""
    alpha = Alphabet.of("a", "b")
    w = Word.from_labels(alpha, two_bridge_word(p, q))
    a, b = alpha.gen("a"), alpha.gen("b")
    return Presentation(alpha, [a * w * ~b * ~w], f"two_bridge_{p}_{q}", params={"p": p, "q": q})


@dataclass(frozen=True)
class Crossing:
    over: str
    into: str
    out: str
    sign: int


def wirtinger(crossings: Sequence[Crossing | tuple], name: str = "wirtinger") -> Presentation:
    """One generator per arc, one relation per crossing.

    Positive crossing: in * over = over * out; negative: over * in = out * over.
    """
    cs = [c if isinstance(c, Crossing) else Crossing(*c) for c in crossings]
    if not cs:
        raise InconsistentDiagram("empty diagram")
    arcs = sorted({a for c in cs for a in (c.over, c.into, c.out)})
    ins = sorted(c.into for c in cs)
    outs = sorted(c.out for c in cs)
    if ins != arcs or outs != arcs:
        raise InconsistentDiagram("each arc must end at exactly one crossing and start at exactly one")
    for c in cs:
        if c.sign not in (1, -1):
            raise InconsistentDiagram(f"bad crossing sign {c.sign}")
    alpha = Alphabet.of(*arcs)
    rels = []
    for c in cs:
        o, i, u = (alpha.gen(x) for x in (c.over, c.into, c.out))
        rels.append(i * o * ~u * ~o if c.sign > 0 else o * i * ~o * ~u)
    return Presentation(alpha, rels, name)


TREFOIL_DIAGRAM = [Crossing("x", "z", "y", 1), Crossing("y", "x", "z", 1), Crossing("z", "y", "x", 1)]


# --- tables ------------------------------------------------------------------------

# fibred knots with all Alexander roots real and positive (12 or fewer crossings)
FIBRED_BIORDERABLE = [
    ("4_1", "1-3t+t^2"),
    ("8_12", "1-7t+13t^2-7t^3+t^4"),
    ("10_137", "1-6t+11t^2-6t^3+t^4"),
    ("11a_5", "1-9t+30t^2-45t^3+30t^4-9t^5+t^6"),
    ("11n_142", "1-8t+15t^2-8t^3+t^4"),
    ("12a_0125", "1-12t+44t^2-67t^3+44t^4-12t^5+t^6"),
    ("12a_0181", "1-11t+40t^2-61t^3+40t^4-11t^5+t^6"),
    ("12a_0477", "1-11t+41t^2-63t^3+41t^4-11t^5+t^6"),
    ("12a_1124", "1-13t+50t^2-77t^3+50t^4-13t^5+t^6"),
    ("12n_0013", "1-7t+13t^2-7t^3+t^4"),
    ("12n_0145", "1-6t+11t^2-6t^3+t^4"),
    ("12n_0462", "1-6t+11t^2-6t^3+t^4"),
    ("12n_0838", "1-6t+11t^2-6t^3+t^4"),
]

# standard closed-braid representatives used for cross-checks
KNOT_BRAIDS = {
    "3_1": ("s1^3", 2),
    "5_1": ("s1^5", 2),
    "4_1": ("s1 s2^-1 s1 s2^-1", 3),
    "5_2": ("s1^3 s2 s1^-1 s2", 3),
    "8_19": ("s1 s2 s1 s2 s1 s2 s1 s2", 3),
}

TORUS_KNOTS = {"3_1": (2, 3), "5_1": (2, 5), "8_19": (4, 3)}


def fibred_table() -> list[KnotInput]:
    """Thirteen fibred bi-orderable knots plus three torus knots, polynomials from the torus formula where it applies."""
    rows = [KnotInput(name, polynomial=parse_poly(poly), fibred=True) for name, poly in FIBRED_BIORDERABLE]
    for name, (p, q) in TORUS_KNOTS.items():
        rows.append(KnotInput(name, polynomial=torus_alexander(p, q), fibred=True))
    return rows


def braid_of(name: str) -> BraidWord:
    word, n = KNOT_BRAIDS[name]
    return BraidWord.parse(word, n)


def read_table(lines: Iterable[str]) -> list[KnotInput]:
    out = []
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(KnotInput.from_dict(json.loads(line)))
    return out


def write_table(rows: Iterable[KnotInput]) -> str:
    return "".join(json.dumps(r.to_dict(), sort_keys=True) + "\n" for r in rows)


@dataclass
class VerdictRow:
    name: str
    polynomial: str
    verdict: Verdict
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "polynomial": self.polynomial, **self.verdict.to_dict()}


def verdict_row(k: KnotInput) -> VerdictRow:
    v = verdict(k)
    try:
        poly = str(k.alexander())
    except KnotError:
        poly = ""
    return VerdictRow(k.name, poly, v)


__all__ = [
    "torus_alexander", "alexander_sanity", "positive_real_roots", "KnotInput", "Verdict", "VerdictValue",
    "verdict", "verdict_fibred", "verdict_two_bridge", "verdict_twist", "two_bridge_presentation",
    "two_bridge_word", "wirtinger", "Crossing", "TREFOIL_DIAGRAM", "fibred_table", "braid_of",
    "read_table", "write_table", "verdict_row", "VerdictRow",
]
