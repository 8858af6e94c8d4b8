"""Finite presentations: abelianization, coset enumeration, consequences, catalog."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable, Sequence

from .intlinalg import SmithForm, smith_normal_form
from .oracle import (
    AffineCrystallographic,
    Backend,
    Braid,
    BoundedRewriting,
    FreeAbelian,
    FreeGroup,
    Hint,
    KleinBottle,
    OracleConfig,
    RelatorScript,
    ScriptStep,
)
from .words import (
    Alphabet,
    GeneratorId,
    Word,
    concat,
    cyclically_reduce,
    exponent_vector,
    from_json,
    invert,
    parse,
    to_json,
)

__all__ = [
    "Presentation", "AbelianInvariants", "abelianization", "smith_normal_form", "SmithForm",
    "CosetResult", "coset_enumeration", "Consequence", "consequences", "catalog", "lookup",
    "relation_matrix", "PresentationError",
]


class PresentationError(ValueError):
    pass


@dataclass
class Presentation:
    alphabet: Alphabet
    relators: list[Word]
    name: str = ""
    oracle: str = "bounded"
    hints: list[Hint] = field(default_factory=list)
    expected: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        out = []
        for r in self.relators:
            if r.alphabet != self.alphabet:
                raise PresentationError(f"relator {r} is over another alphabet")
            _, core = cyclically_reduce(r)
            if not core.is_identity():
                out.append(core)
        self.relators = out

    @property
    def generators(self) -> tuple[GeneratorId, ...]:
        return self.alphabet.gens

    def word(self, text: str) -> Word:
        return parse(text, self.alphabet)

    # text format: "gens: a b ; rels: a^2*b*a^2*b^-1 , b^2*a*b^2*a^-1"
    @classmethod
    def parse(cls, text: str, name: str = "") -> "Presentation":
        m = re.fullmatch(r"\s*gens\s*:(?P<g>[^;]*);\s*rels\s*:(?P<r>.*)", text, re.S)
        if m is None:
            raise PresentationError("expected 'gens: ... ; rels: ...'")
        alpha = Alphabet.of(*m.group("g").split())
        rels = []
        for chunk in m.group("r").split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            sides = [parse(s, alpha) for s in chunk.split("=")]
            if len(sides) == 1:
                rels.append(sides[0])
            for a, b in zip(sides, sides[1:]):
                rels.append(concat(a, invert(b)))
        return cls(alpha, rels, name=name)

    def to_text(self) -> str:
        gens = " ".join(g.label for g in self.alphabet)
        rels = " , ".join(str(r).replace(" ", "*") for r in self.relators)
        return f"gens: {gens} ; rels: {rels}"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "generators": [[g.name, list(g.index)] if g.index else g.name for g in self.alphabet],
            "relators": [to_json(r) for r in self.relators],
        }

    @classmethod
    def from_json(cls, data) -> "Presentation":
        if isinstance(data, str):
            data = json.loads(data)
        gens = [GeneratorId(g) if isinstance(g, str) else GeneratorId(g[0], tuple(g[1])) for g in data["generators"]]
        alpha = Alphabet(gens)
        return cls(alpha, [from_json(r, alpha) for r in data["relators"]], name=data.get("name", ""))

    def backend(self, cfg: OracleConfig | None = None) -> Backend:
        """The word-problem backend named by the ``oracle`` hint."""
        cfg = cfg or OracleConfig()
        kind = self.oracle
        if kind == "free":
            return FreeGroup(self.alphabet)
        if kind == "abelian":
            return FreeAbelian(self.alphabet)
        if kind == "klein":
            return KleinBottle.xy()
        if kind == "klein_ab":
            return KleinBottle.ab()
        if kind == "affine":
            return AffineCrystallographic.crystallographic()
        if kind == "braid":
            return Braid(self.params["n"])
        return BoundedRewriting(self.alphabet, self.relators, cfg.max_len, cfg.max_depth, self.hints, cfg.node_budget)


# --- abelianization ------------------------------------------------------------

@dataclass(frozen=True)
class AbelianInvariants:
    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion must form a divisibility chain")

    @property
    def order(self) -> int | None:
        """Order of the group, None if infinite."""
        if self.rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def as_tuple(self):
        return (self.rank, list(self.torsion))

    def __str__(self):
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def relation_matrix(p: Presentation) -> list[list[int]]:
    return [list(exponent_vector(r)) for r in p.relators]


def abelianization(p: Presentation) -> AbelianInvariants:
    n = len(p.alphabet)
    rows = relation_matrix(p)
    if not rows:
        return AbelianInvariants(n)
    diag = smith_normal_form(rows).diagonal
    nonzero = [d for d in diag if d]
    return AbelianInvariants(n - len(nonzero), tuple(d for d in nonzero if d > 1))


# --- coset enumeration ---------------------------------------------------------

@dataclass(frozen=True)
class CosetResult:
    order: int | None
    cosets_defined: int

    @property
    def exceeded(self) -> bool:
        return self.order is None

    def __str__(self):
        return f"Order({self.order})" if self.order is not None else "ExceededBound"


class _Full(Exception):
    pass


class _CosetTable:
    def __init__(self, ncols: int, inv: list[int], cap: int):
        self.ncols, self.inv, self.cap = ncols, inv, cap
        self.T: list[list] = [[None] * ncols]
        self.p = [0]
        self.live = 1
        self.defined = 1

    def rep(self, k: int) -> int:
        p = self.p
        r = k
        while p[r] != r:
            r = p[r]
        while p[k] != r:
            p[k], k = r, p[k]
        return r

    def define(self, c: int, x: int):
        if self.live >= self.cap:
            raise _Full
        new = len(self.T)
        self.T.append([None] * self.ncols)
        self.p.append(new)
        self.live += 1
        self.defined += 1
        self.T[c][x] = new
        self.T[new][self.inv[x]] = c

    def _merge(self, k, l, q):
        a, b = self.rep(k), self.rep(l)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            self.p[hi] = lo
            self.live -= 1
            q.append(hi)

    def coincidence(self, a: int, b: int):
        T, inv = self.T, self.inv
        q: list[int] = []
        self._merge(a, b, q)
        i = 0
        while i < len(q):
            g = q[i]
            i += 1
            for x in range(self.ncols):
                d = T[g][x]
                if d is None:
                    continue
                T[d][inv[x]] = None
                mu, nu = self.rep(g), self.rep(d)
                if T[mu][x] is not None:
                    self._merge(nu, T[mu][x], q)
                elif T[nu][inv[x]] is not None:
                    self._merge(mu, T[nu][inv[x]], q)
                else:
                    T[mu][x] = nu
                    T[nu][inv[x]] = mu

    def scan(self, c: int, w: Sequence[int], fill: bool) -> None:
        T, inv = self.T, self.inv
        f, b, i, j = c, c, 0, len(w) - 1
        while True:
            while i <= j and T[f][w[i]] is not None:
                f = T[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and T[b][inv[w[j]]] is not None:
                b = T[b][inv[w[j]]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                T[f][w[i]] = b
                T[b][inv[w[i]]] = f
                return
            if not fill:
                return
            self.define(f, w[i])

    def compact(self, pos: int) -> int:
        """Renumber live cosets in order; returns the new index of scan position ``pos``."""
        old = [c for c in range(len(self.T)) if self.p[c] == c]
        new_of = {c: i for i, c in enumerate(old)}
        self.T = [[None if e is None else new_of[self.rep(e)] for e in self.T[c]] for c in old]
        self.p = list(range(len(old)))
        return sum(1 for c in old if c < pos)


def coset_enumeration(p: Presentation, max_cosets: int = 100000) -> CosetResult:
    """HLT Todd-Coxeter over the trivial subgroup, with a lookahead pass when full."""
    n = len(p.alphabet)
    ncols = 2 * n
    inv = [i ^ 1 for i in range(ncols)]
    rels = []
    for r in p.relators:
        rels.append([2 * p.alphabet.position(g) + (0 if s > 0 else 1) for g, s in r.expanded()])
    tab = _CosetTable(ncols, inv, max_cosets)
    c = 0
    while c < len(tab.T):
        try:
            if tab.p[c] == c:
                for r in rels:
                    tab.scan(c, r, True)
                    if tab.p[c] != c:
                        break
                if tab.p[c] == c:
                    for x in range(ncols):
                        if tab.T[c][x] is None:
                            tab.define(c, x)
            c += 1
        except _Full:
            # lookahead: scan everything without defining
            for d in range(len(tab.T)):
                if tab.p[d] == d:
                    for r in rels:
                        tab.scan(d, r, False)
                        if tab.p[d] != d:
                            break
            c = tab.compact(c)
            tab.live = len(tab.T)
            if tab.live >= max_cosets:
                return CosetResult(None, tab.defined)
    return CosetResult(tab.live, tab.defined)


# --- consequences --------------------------------------------------------------

@dataclass(frozen=True)
class Consequence:
    word: Word
    script: RelatorScript
    generation: int

    def verify(self, relators: Sequence[Word]) -> bool:
        return self.script.proves(self.word, relators)


def _variants(word: Word, script: RelatorScript) -> list[tuple[Word, RelatorScript]]:
    """Cyclic reduction, all rotations and their inverses, each with its proof."""
    out = []
    conj, core = cyclically_reduce(word)
    if core.is_identity():
        return out
    base = script.conjugate_by(invert(conj))  # core = conj^-1 word conj
    for w, s in ((core, base), (invert(core), base.inverse())):
        seq = w.expanded()
        for i in range(len(seq)):
            alpha = Word.from_pairs(w.alphabet, seq[:i])
            rot = Word.from_pairs(w.alphabet, seq[i:] + seq[:i])
            out.append((rot, s.conjugate_by(invert(alpha))))
    return out


def _cyclic_class(core: Word) -> tuple:
    """A key shared by all rotations of a cyclically reduced word and of its inverse."""
    keys = []
    for w in (core, invert(core)):
        seq = w.expanded()
        keys += [tuple(seq[i:] + seq[:i]) for i in range(len(seq))]
    return min(keys, key=lambda k: [(g.name, g.index, e) for g, e in k])


def consequences(p: Presentation, max_len: int, max_count: int, generations: int = 2) -> list[Consequence]:
    """Relator consequences with replayable proofs.

    Generation 0 holds the rotations of relators and their inverses.  Each
    later generation multiplies the newest words by generation-0 words, then
    cyclically reduces and adds rotations and inverses.  Conjugating a
    cyclically reduced word by a generator and reducing again only yields a
    rotation, so those are covered.  Output is deduplicated, filtered to
    length <= max_len, and ordered by (generation, length, text).
    """
    if max_len <= 0 or max_count <= 0:
        raise ValueError("bounds must be positive")
    alpha = p.alphabet
    seen: dict[tuple, Consequence] = {}
    out: list[Consequence] = []

    def add(batch: Iterable[tuple[Word, RelatorScript]], gen: int) -> list[Consequence]:
        fresh = []
        for w, s in sorted(batch, key=lambda t: (len(t[0]), str(t[0]))):
            if len(w) > max_len or w.key() in seen or len(out) >= max_count:
                continue
            c = Consequence(w, s, gen)
            seen[w.key()] = c
            out.append(c)
            fresh.append(c)
        return fresh

    base_items = []
    for i, r in enumerate(p.relators):
        base_items += _variants(r, RelatorScript((ScriptStep(alpha.identity(), i, 1),)))
    base = add(base_items, 0)
    newest = base
    classes = {_cyclic_class(c.word) for c in base}
    for gen in range(1, generations + 1):
        batch = []
        for u in newest:
            for v in base:
                w = concat(u.word, v.word)
                _, core = cyclically_reduce(w)
                if core.is_identity() or len(core) > max_len:
                    continue
                cls = _cyclic_class(core)
                if cls in classes:
                    continue
                # one proof per cyclic class is enough; rotations inherit it
                classes.add(cls)
                batch += _variants(w, u.script + v.script)
        newest = add(batch, gen)
        if not newest:
            break
    return out


# --- catalog -------------------------------------------------------------------

_CATALOG: dict[str, Callable[..., Presentation]] = {}


def _entry(name: str):
    def deco(fn):
        _CATALOG[name] = fn
        return fn

    return deco


def _rels(alpha: Alphabet, *texts: str) -> list[Word]:
    out = []
    for t in texts:
        sides = [parse(s, alpha) for s in t.split("=")]
        if len(sides) == 1:
            out.append(sides[0])
        for a, b in zip(sides, sides[1:]):
            out.append(concat(a, invert(b)))
    return out


@_entry("kleinbottle")
def kleinbottle() -> Presentation:
    alpha = Alphabet.of("x", "y")
    return Presentation(alpha, _rels(alpha, "x y x^-1 = y^-1"), "kleinbottle", "klein",
                        expected={"abelianization": (1, [2]), "lo_count": 4, "left_orderable": True})


@_entry("kleinbottle_ab")
def kleinbottle_ab() -> Presentation:
    alpha = Alphabet.of("a", "b")
    return Presentation(alpha, _rels(alpha, "a^2 = b^2"), "kleinbottle_ab", "klein_ab",
                        expected={"abelianization": (1, [2]), "lo_count": 4, "left_orderable": True})


@_entry("torus_knot")
def torus_knot(p: int = 2, q: int = 3) -> Presentation:
    if gcd(p, q) != 1:
        raise PresentationError("p and q must be coprime")
    alpha = Alphabet.of("a", "b")
    return Presentation(alpha, _rels(alpha, f"a^{p} = b^{q}"), f"torus_knot_{p}_{q}", params={"p": p, "q": q},
                        expected={"abelianization": (1, [])})


@_entry("trefoil")
def trefoil() -> Presentation:
    alpha = Alphabet.of("x", "y")
    return Presentation(alpha, _rels(alpha, "x y x = y x y"), "trefoil", expected={"abelianization": (1, [])})


@_entry("crystallographic")
def crystallographic() -> Presentation:
    alpha = Alphabet.of("a", "b")
    return Presentation(alpha, _rels(alpha, "a^2 b a^2 = b", "b^2 a b^2 = a"), "crystallographic", "affine",
                        expected={"abelianization": (0, [4, 4]), "left_orderable": False})


# Weeks manifold group.  One sign case needs an identity that uses both
# relators; its proof is shipped as a replayable script (derived by bounded
# search, then frozen).
_WEEKS_HINTS = [
    ("a b^-2 a b^-2 a^2 b^-1 a", [("a^-1", 1, 1), ("a^-1 b a^-2 b^2 a^-1 b^2 a^-1", 0, -1)]),
]


@_entry("weeks")
def weeks() -> Presentation:
    alpha = Alphabet.of("a", "b")
    rels = _rels(alpha, "b a b a b = a b^-2 a", "a b a b a = b a^-2 b")
    hints = []
    for text, steps in _WEEKS_HINTS:
        script = RelatorScript(tuple(ScriptStep(parse(c, alpha), i, s) for c, i, s in steps))
        hints.append(Hint(parse(text, alpha), script))
    return Presentation(alpha, rels, "weeks", "bounded", hints,
                        expected={"abelianization": (0, [5, 5]), "left_orderable": False,
                                  "sign_words": ["a", "b", "a^-1 b"]})


@_entry("sigma237")
def sigma237() -> Presentation:
    alpha = Alphabet.of("a", "b")
    return Presentation(alpha, _rels(alpha, "a b a b = b^3 = a^7"), "sigma237",
                        expected={"abelianization": (0, []), "finite": False, "left_orderable": True})


@_entry("poincare")
def poincare() -> Presentation:
    alpha = Alphabet.of("a", "b")
    return Presentation(alpha, _rels(alpha, "a b a b = b^3 = a^5"), "poincare",
                        expected={"abelianization": (0, []), "order": 120})


@_entry("gphi")
def gphi(p: int = 1, q: int = 0, r: int = -1, s: int = 0) -> Presentation:
    """Two twisted I-bundles over the Klein bottle glued by phi, exactly as printed."""
    alpha = Alphabet.of("a1", "b1", "a2", "b2")
    a2sq = parse("a2^2", alpha)
    ab = parse("a2 b2", alpha)
    lhs3 = concat(a2sq ** p, ab ** q)
    lhs4 = concat(a2sq ** r, ab ** s)
    rels = _rels(alpha, "a1^2 = b1^2", "a2^2 = b2^2")
    rels.append(concat(parse("a1^2", alpha), invert(lhs3)))
    rels.append(concat(parse("a1 b1", alpha), invert(lhs4)))
    expected = {"abelian_order": 16 * abs(p + q - r - s)}
    if (p >= 0 and q >= 0 and r <= 0 and s <= 0) or (p <= 0 and q <= 0 and r >= 0 and s >= 0):
        expected["left_orderable"] = False
    return Presentation(alpha, rels, f"gphi_{p}_{q}_{r}_{s}", params=dict(p=p, q=q, r=r, s=s), expected=expected)


@_entry("sigma_n_41")
def sigma_n_41(n: int = 2) -> Presentation:
    """Cyclic branched covers of the figure-eight knot: x_i = x_{i-1}^-1 x_{i+1}, x_2 x_4 ... x_2n = 1."""
    if n < 2:
        raise PresentationError("n >= 2")
    m = 2 * n
    alpha = Alphabet.indexed("x", range(1, m + 1))
    g = lambda i: alpha.gens[(i - 1) % m]  # noqa: E731
    rels = []
    for i in range(1, m + 1):
        rels.append(Word.from_pairs(alpha, [(g(i), -1), (g(i - 1), -1), (g(i + 1), 1)]))
    rels.append(Word.from_pairs(alpha, [(g(i), 1) for i in range(2, m + 1, 2)]))
    return Presentation(alpha, rels, f"sigma_{n}_41", params={"n": n},
                        expected={"complete": True, "left_orderable": False})


@_entry("braid_group")
def braid_group(n: int = 3) -> Presentation:
    alpha = Alphabet.indexed("s", range(1, n))
    texts = []
    for i in range(1, n - 1):
        texts.append(f"s{i} s{i+1} s{i} = s{i+1} s{i} s{i+1}")
    for i in range(1, n):
        for j in range(i + 2, n):
            texts.append(f"s{i} s{j} = s{j} s{i}")
    return Presentation(alpha, _rels(alpha, *texts), f"braid_group_{n}", "braid", params={"n": n},
                        expected={"abelianization": (1, []), "left_orderable": True})


@_entry("free2")
def free2() -> Presentation:
    return Presentation(Alphabet.of("a", "b"), [], "free2", "free", expected={"left_orderable": True})


@_entry("z")
def z() -> Presentation:
    return Presentation(Alphabet.of("x"), [], "z", "abelian", expected={"left_orderable": True})


@_entry("z2")
def z2() -> Presentation:
    alpha = Alphabet.of("x", "y")
    return Presentation(alpha, _rels(alpha, "x y = y x"), "z2", "abelian", expected={"left_orderable": True})


def catalog() -> list[str]:
    return sorted(_CATALOG)


def lookup(name: str, **params) -> Presentation:
    """Catalog entry by name; parametrized families also accept e.g. ``sigma_n_41:3`` or ``gphi:1,0,-1,0``."""
    if ":" in name:
        name, arg = name.split(":", 1)
        vals = [int(v) for v in arg.split(",") if v]
        if name == "gphi":
            params.update(dict(zip("pqrs", vals)))
        elif name == "torus_knot":
            params.update(dict(zip("pq", vals)))
        elif name in ("sigma_n_41", "braid_group"):
            params["n"] = vals[0]
    try:
        fn = _CATALOG[name]
    except KeyError:
        raise PresentationError(f"unknown catalog entry {name!r}") from None
    return fn(**params)
