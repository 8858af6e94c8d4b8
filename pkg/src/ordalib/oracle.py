"""Word-problem backends and Cayley balls.

Every backend answers ``equal(u, v)`` soundly.  Backends with a computable
canonical element (free, free abelian, Klein bottle, affine, braid) also expose
``element``/``mul`` so balls can be built by hashing.  ``BoundedRewriting`` only
knows the relators; it proves equalities by a bounded search and records the
proof as a product of relator conjugates that anyone can replay.
"""

from __future__ import annotations

import heapq
import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Hashable, Iterable, Sequence

from . import braid as _braid
from .intlinalg import in_row_lattice, smith_normal_form
from .words import (
    Alphabet,
    AlphabetMismatch,
    GeneratorId,
    Word,
    concat,
    cyclically_reduce,
    exponent_vector,
    from_json,
    invert,
    product,
    to_json,
)

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib


class OracleError(RuntimeError):
    pass


class UnsupportedBackend(OracleError):
    pass


class OracleIncomplete(OracleError):
    pass


class BallTooLarge(OracleError):
    pass


class Answer(Enum):
    EQUAL = "Equal"
    NOT_EQUAL = "NotEqual"
    UNKNOWN = "Unknown"


# --- certificates ------------------------------------------------------------

@dataclass(frozen=True)
class ScriptStep:
    conjugator: Word
    relator: int
    sign: int


@dataclass(frozen=True)
class RelatorScript:
    """A proof that a word is trivial: the word equals prod g_i r_{j_i}^{s_i} g_i^-1."""

    steps: tuple[ScriptStep, ...] = ()

    def evaluate(self, relators: Sequence[Word], alphabet: Alphabet) -> Word:
        parts = []
        for st in self.steps:
            r = relators[st.relator] if st.sign > 0 else invert(relators[st.relator])
            parts += [st.conjugator, r, invert(st.conjugator)]
        return product(alphabet, parts)

    def proves(self, word: Word, relators: Sequence[Word]) -> bool:
        return self.evaluate(relators, word.alphabet) == word

    def inverse(self) -> "RelatorScript":
        return RelatorScript(tuple(ScriptStep(s.conjugator, s.relator, -s.sign) for s in reversed(self.steps)))

    def conjugate_by(self, g: Word) -> "RelatorScript":
        return RelatorScript(tuple(ScriptStep(concat(g, s.conjugator), s.relator, s.sign) for s in self.steps))

    def __add__(self, other: "RelatorScript") -> "RelatorScript":
        return RelatorScript(self.steps + other.steps)

    def __len__(self):
        return len(self.steps)

    def to_json(self) -> list:
        return [{"conj": to_json(s.conjugator), "rel": s.relator, "sign": s.sign} for s in self.steps]

    @classmethod
    def from_json(cls, data, alphabet: Alphabet) -> "RelatorScript":
        return cls(tuple(ScriptStep(from_json(d["conj"], alphabet), int(d["rel"]), int(d["sign"])) for d in data))


@dataclass(frozen=True)
class OracleVerdict:
    value: Answer
    certificate: RelatorScript | None = None

    @property
    def is_equal(self) -> bool:
        return self.value is Answer.EQUAL


EQUAL = OracleVerdict(Answer.EQUAL)
NOT_EQUAL = OracleVerdict(Answer.NOT_EQUAL)
UNKNOWN = OracleVerdict(Answer.UNKNOWN)


# --- backends ----------------------------------------------------------------

class Backend:
    """Common interface.  Subclasses with canonical elements set ``canonical``."""

    name = "backend"
    canonical = True

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet

    def _check(self, *words: Word):
        for w in words:
            if w.alphabet != self.alphabet:
                raise AlphabetMismatch(f"{w.alphabet!r} is not {self.alphabet!r}")

    # canonical element API
    def element(self, w: Word) -> Hashable:
        raise UnsupportedBackend(self.name)

    def mul(self, a, b):
        raise UnsupportedBackend(self.name)

    def equal(self, u: Word, v: Word) -> OracleVerdict:
        self._check(u, v)
        return EQUAL if self.element(u) == self.element(v) else NOT_EQUAL

    def is_trivial(self, w: Word) -> OracleVerdict:
        return self.equal(w, self.alphabet.identity())

    def normal_form(self, w: Word) -> Word:
        raise UnsupportedBackend(f"{self.name} has no canonical form")


class FreeGroup(Backend):
    name = "free"

    def element(self, w):
        self._check(w)
        return w.key()

    def mul(self, a, b):
        return concat(Word.from_pairs(self.alphabet, a), Word.from_pairs(self.alphabet, b)).key()

    def normal_form(self, w):
        self._check(w)
        return w


class FreeAbelian(Backend):
    name = "abelian"

    def element(self, w):
        self._check(w)
        return exponent_vector(w)

    def mul(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def normal_form(self, w):
        vec = self.element(w)
        return Word.from_pairs(self.alphabet, list(zip(self.alphabet.gens, vec)))


class KleinBottle(Backend):
    """Elements (m, n) meaning x^m y^n, with y^n x^m = x^m y^((-1)^m n)."""

    name = "klein"

    def __init__(self, alphabet: Alphabet, images: dict[GeneratorId, tuple[int, int]] | None = None):
        super().__init__(alphabet)
        if images is None:
            gx, gy = alphabet.gens
            images = {gx: (1, 0), gy: (0, 1)}
        self.images = images

    @classmethod
    def xy(cls) -> "KleinBottle":
        return cls(Alphabet.of("x", "y"))

    @classmethod
    def ab(cls) -> "KleinBottle":
        """The form <a, b | a^2 = b^2> via a = x, b = x y."""
        alpha = Alphabet.of("a", "b")
        return cls(alpha, {GeneratorId("a"): (1, 0), GeneratorId("b"): (1, 1)})

    @staticmethod
    def _mul(a, b):
        m1, n1 = a
        m2, n2 = b
        return (m1 + m2, (n1 if m2 % 2 == 0 else -n1) + n2)

    @staticmethod
    def _inv(a):
        m, n = a
        return (-m, -n if m % 2 == 0 else n)

    def mul(self, a, b):
        return self._mul(a, b)

    def element(self, w):
        self._check(w)
        acc = (0, 0)
        for g, e in w.pairs():
            img = self.images[g]
            if e < 0:
                img = self._inv(img)
            for _ in range(abs(e)):
                acc = self._mul(acc, img)
        return acc

    def normal_form(self, w):
        m, n = self.element(w)
        gx = GeneratorId("x")
        if gx in self.alphabet:
            gy = GeneratorId("y")
            return Word.from_pairs(self.alphabet, [(gx, m), (gy, n)])
        # a, b form: x = a, y = a^-1 b
        a, b = GeneratorId("a"), GeneratorId("b")
        y = Word.from_pairs(self.alphabet, [(a, -1), (b, 1)])
        return concat(Word.from_pairs(self.alphabet, [(a, m)]), y ** n)


Affine = tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]


def _aff_mul(f: Affine, g: Affine) -> Affine:
    """f o g."""
    (M, s), (N, t) = f, g
    n = len(M)
    MN = tuple(tuple(sum(M[i][k] * N[k][j] for k in range(n)) for j in range(n)) for i in range(n))
    Mt = tuple(sum(M[i][k] * t[k] for k in range(n)) + s[i] for i in range(n))
    return MN, Mt


def _aff_inv(f: Affine) -> Affine:
    # M is a signed permutation matrix, so its inverse is its transpose
    M, s = f
    n = len(M)
    Mi = tuple(tuple(M[j][i] for j in range(n)) for i in range(n))
    return Mi, tuple(-sum(Mi[i][k] * s[k] for k in range(n)) for i in range(n))


class AffineCrystallographic(Backend):
    """Words act on Z^3 by integer affine maps; a word acts as the composite of its letters."""

    name = "affine"

    def __init__(self, alphabet: Alphabet, actions: dict[GeneratorId, Affine]):
        super().__init__(alphabet)
        from .intlinalg import det

        for g, (M, t) in actions.items():
            if any(x not in (-1, 0, 1) for row in M for x in row) or abs(det([list(r) for r in M])) != 1:
                raise ValueError(f"action of {g.label} is not an invertible signed map")
            if any(sum(abs(x) for x in row) != 1 for row in M):
                raise ValueError(f"action of {g.label} must be a signed permutation")
        self.actions = dict(actions)
        n = len(next(iter(actions.values()))[1])
        self._id: Affine = (tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), (0,) * n)

    @classmethod
    def crystallographic(cls) -> "AffineCrystallographic":
        """a(x,y,z) = (x+1, 1-y, -z), b(x,y,z) = (-x, y+1, 1-z)."""
        alpha = Alphabet.of("a", "b")
        acts = {
            GeneratorId("a"): (((1, 0, 0), (0, -1, 0), (0, 0, -1)), (1, 1, 0)),
            GeneratorId("b"): (((-1, 0, 0), (0, 1, 0), (0, 0, -1)), (0, 1, 1)),
        }
        return cls(alpha, acts)

    def mul(self, a, b):
        return _aff_mul(a, b)

    def element(self, w):
        self._check(w)
        acc = self._id
        for g, e in w.pairs():
            f = self.actions[g]
            if e < 0:
                f = _aff_inv(f)
            for _ in range(abs(e)):
                acc = _aff_mul(acc, f)
        return acc

    def apply(self, w: Word, point: Sequence[int]) -> tuple[int, ...]:
        M, t = self.element(w)
        return tuple(sum(M[i][k] * point[k] for k in range(len(t))) + t[i] for i in range(len(t)))


class Braid(Backend):
    """Equality by handle reduction; canonical keys from the (faithful) Artin action."""

    name = "braid"

    def __init__(self, n: int):
        super().__init__(_braid.braid_alphabet(n))
        self.n = n

    def element(self, w):
        self._check(w)
        return _braid.artin_action(_braid.word_to_braid(w, self.n))

    def mul(self, a, b):
        return _braid.compose_actions(a, b)

    def equal(self, u, v):
        self._check(u, v)
        b = _braid.word_to_braid(concat(u, invert(v)), self.n)
        return EQUAL if _braid.is_trivial(b) else NOT_EQUAL


@dataclass(frozen=True)
class Hint:
    """A word known to be trivial together with its proof."""

    word: Word
    script: RelatorScript


class BoundedRewriting(Backend):
    """Relator-insertion search with length and depth bounds.

    NotEqual is answered only when the abelianization separates the words.
    """

    name = "bounded"
    canonical = False

    def __init__(
        self,
        alphabet: Alphabet,
        relators: Sequence[Word],
        max_len: int = 24,
        max_depth: int = 12,
        hints: Iterable[Hint] = (),
        node_budget: int = 20000,
    ):
        super().__init__(alphabet)
        self.relators = list(relators)
        self.max_len = max_len
        self.max_depth = max_depth
        self.node_budget = node_budget
        self._memo: dict[tuple, RelatorScript | None] = {}
        rows = [list(exponent_vector(r)) for r in self.relators] or [[0] * len(alphabet)]
        self._rows = rows
        self._snf = smith_normal_form(rows)
        self.hints: list[Hint] = []
        for h in hints:
            if not h.script.proves(h.word, self.relators):
                raise OracleError(f"hint {h.word} does not replay")
            self.hints.append(h)
        # move set: each entry is (rotation word, script proving rotation = 1)
        self._moves: list[tuple[Word, RelatorScript]] = []
        self._cyc: dict[tuple, tuple[Word, RelatorScript]] = {}
        base = [(r, RelatorScript((ScriptStep(alphabet.identity(), i, 1),))) for i, r in enumerate(self.relators)]
        base += [(h.word, h.script) for h in self.hints]
        seen = set()
        for w, scr in base:
            if w.is_identity():
                continue
            for word, script in ((w, scr), (invert(w), scr.inverse())):
                conj, core = cyclically_reduce(word)
                # word = conj core conj^-1, so core = conj^-1 word conj
                cscript = script.conjugate_by(invert(conj))
                seq = core.expanded()
                for i in range(len(seq)):
                    alpha = Word.from_pairs(alphabet, seq[:i])
                    rot = Word.from_pairs(alphabet, seq[i:] + seq[:i])
                    # rot = alpha^-1 core alpha
                    if rot.key() in seen:
                        continue
                    seen.add(rot.key())
                    entry = (rot, cscript.conjugate_by(invert(alpha)))
                    self._moves.append(entry)
                    self._cyc.setdefault(rot.key(), entry)

    def abelian_separates(self, w: Word) -> bool:
        return not in_row_lattice(list(exponent_vector(w)), self._rows, self._snf)

    def prove_trivial(self, w: Word) -> RelatorScript | None:
        """Search for a relator script proving w = 1 within the bounds."""
        self._check(w)
        if w.is_identity():
            return RelatorScript()
        conj, core = cyclically_reduce(w)
        hit = self._cyc.get(core.key())
        if hit is not None:
            return hit[1].conjugate_by(conj)
        found = self._search(core)
        return None if found is None else found.conjugate_by(conj)

    def _encode(self, w: Word) -> tuple[int, ...]:
        pos = self.alphabet.position
        return tuple((pos(g) + 1) * s for g, s in w.expanded())

    def _decode(self, seq: Sequence[int]) -> Word:
        gens = self.alphabet.gens
        return Word.from_pairs(self.alphabet, [(gens[abs(x) - 1], 1 if x > 0 else -1) for x in seq])

    def _search(self, start: Word) -> RelatorScript | None:
        key = start.key()
        if key in self._memo:
            return self._memo[key]
        found = self._search_uncached(start)
        self._memo[key] = found
        return found

    def _search_uncached(self, start: Word) -> RelatorScript | None:
        # state c satisfies start * (c_1 ... c_k) = c; each c_i = tail^-1 rot tail
        moves = [self._encode(rot) for rot, _ in self._moves]
        s0 = self._encode(start)
        best: dict[tuple, int] = {s0: 0}
        counter = 0
        heap = [(len(s0), 0, counter, s0, ())]
        expanded = 0
        max_len, max_depth = self.max_len, self.max_depth
        while heap:
            _, depth, _, cur, path = heapq.heappop(heap)
            if depth >= max_depth:
                continue
            expanded += 1
            if expanded > self.node_budget:
                return None
            for p in range(len(cur) + 1):
                head, tail = cur[:p], cur[p:]
                for mi, rot in enumerate(moves):
                    out = list(head)
                    for x in rot:
                        if out and out[-1] == -x:
                            out.pop()
                        else:
                            out.append(x)
                    for x in tail:
                        if out and out[-1] == -x:
                            out.pop()
                        else:
                            out.append(x)
                    if len(out) > max_len:
                        continue
                    nxt = tuple(out)
                    if best.get(nxt, max_depth + 1) <= depth + 1:
                        continue
                    best[nxt] = depth + 1
                    npath = path + ((tail, mi),)
                    if not nxt:
                        total = RelatorScript()
                        for t, m in npath:
                            total = total + self._moves[m][1].conjugate_by(invert(self._decode(t)))
                        # start * P = 1, so start = P^-1
                        return total.inverse()
                    counter += 1
                    heapq.heappush(heap, (len(nxt), depth + 1, counter, nxt, npath))
        return None

    def equal(self, u, v):
        self._check(u, v)
        w = concat(u, invert(v))
        if w.is_identity():
            return OracleVerdict(Answer.EQUAL, RelatorScript())
        if self.abelian_separates(w):
            return NOT_EQUAL
        script = self.prove_trivial(w)
        if script is None:
            return UNKNOWN
        return OracleVerdict(Answer.EQUAL, script)

    def element(self, w):
        raise UnsupportedBackend("bounded rewriting has no canonical elements")


# --- configuration -----------------------------------------------------------

@dataclass
class OracleConfig:
    backend: str = "bounded"
    max_len: int = 24
    max_depth: int = 12
    node_budget: int = 20000
    ball_cap: int = 200000

    def __post_init__(self):
        for name in ("max_len", "max_depth", "node_budget", "ball_cap"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def from_mapping(cls, data: dict) -> "OracleConfig":
        sect = data.get("oracle", data)
        known = {k: sect[k] for k in ("backend", "max_len", "max_depth", "node_budget", "ball_cap") if k in sect}
        return cls(**known)

    @classmethod
    def from_toml(cls, text: str) -> "OracleConfig":
        return cls.from_mapping(tomllib.loads(text))


# --- balls ---------------------------------------------------------------------

@dataclass
class Ball:
    radius: int
    backend: Backend = field(repr=False)
    gens: tuple[GeneratorId, ...]
    elements: list[Word]
    keys: list[Hashable]
    inverse: list[int]
    table: dict[tuple[int, int], int]

    def __len__(self):
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    def index_of_key(self, key) -> int | None:
        return self._index.get(key)

    def locate(self, w: Word) -> int | None:
        """Index of the ball element equal to w, if any."""
        if self.backend.canonical:
            return self._index.get(self.backend.element(w))
        for i, e in enumerate(self.elements):
            ans = self.backend.equal(w, e)
            if ans.value is Answer.UNKNOWN:
                raise OracleIncomplete(f"cannot place {w}")
            if ans.is_equal:
                return i
        return None

    def __post_init__(self):
        self._index = {k: i for i, k in enumerate(self.keys)} if self.backend.canonical else {}

    def inverse_pairs(self) -> list[tuple[int, int]]:
        """Pairs (g, g^-1) of non-identity elements, g the lower index; involutions appear as (g, g)."""
        out = []
        for i in range(1, len(self)):
            j = self.inverse[i]
            if i <= j:
                out.append((i, j))
        return out


def ball(backend: Backend, gens: Sequence[GeneratorId] | None, k: int, cap: int = 200000) -> Ball:
    if k < 1:
        raise ValueError("radius must be >= 1")
    alpha = backend.alphabet
    gens = tuple(gens) if gens else alpha.gens
    steps = [Word.from_pairs(alpha, [(g, s)]) for g in gens for s in (1, -1)]
    elements = [alpha.identity()]
    canonical = backend.canonical
    keys: list = [backend.element(elements[0])] if canonical else [elements[0].key()]
    index = {keys[0]: 0}
    frontier = [elements[0]]

    def find(w: Word) -> int | None:
        if canonical:
            return index.get(backend.element(w))
        for i, e in enumerate(elements):
            ans = backend.equal(w, e)
            if ans.value is Answer.UNKNOWN:
                raise OracleIncomplete(f"oracle cannot compare {w} and {e}")
            if ans.is_equal:
                return i
        return None

    for _ in range(k):
        nxt = []
        for w in frontier:
            for s in steps:
                cand = concat(w, s)
                if len(cand) <= len(w):
                    continue
                if find(cand) is None:
                    key = backend.element(cand) if canonical else cand.key()
                    index[key] = len(elements)
                    elements.append(cand)
                    keys.append(key)
                    nxt.append(cand)
                    if len(elements) > cap:
                        raise BallTooLarge(f"ball exceeds {cap} elements")
        frontier = nxt

    n = len(elements)
    inverse = []
    for w in elements:
        j = find(invert(w))
        if j is None:
            raise OracleIncomplete(f"inverse of {w} not found in ball")
        inverse.append(j)
    table: dict[tuple[int, int], int] = {}
    for i in range(n):
        for j in range(n):
            if canonical:
                idx = index.get(backend.mul(keys[i], keys[j]))
            else:
                idx = find(concat(elements[i], elements[j]))
            if idx is not None:
                table[(i, j)] = idx
    return Ball(k, backend, gens, elements, keys, inverse, table)


def backend_for_words(name: str, alphabet: Alphabet, relators: Sequence[Word] = (), cfg: OracleConfig | None = None,
                      hints: Iterable[Hint] = ()) -> Backend:
    """Build a backend by name; used by the catalog and the CLI config."""
    cfg = cfg or OracleConfig()
    if name == "free":
        return FreeGroup(alphabet)
    if name == "abelian":
        return FreeAbelian(alphabet)
    if name == "bounded":
        return BoundedRewriting(alphabet, relators, cfg.max_len, cfg.max_depth, hints, cfg.node_budget)
    raise UnsupportedBackend(name)


def check_homomorphism(backend: Backend, relators: Sequence[Word]) -> bool:
    """True iff every relator maps to the identity element of a canonical backend."""
    ident = backend.element(backend.alphabet.identity())
    return all(backend.element(r) == ident for r in relators)


__all__ = [
    "Answer", "OracleVerdict", "RelatorScript", "ScriptStep", "Hint", "Backend", "FreeGroup", "FreeAbelian",
    "KleinBottle", "AffineCrystallographic", "Braid", "BoundedRewriting", "OracleConfig", "Ball", "ball",
    "OracleError", "UnsupportedBackend", "OracleIncomplete", "BallTooLarge", "backend_for_words",
    "check_homomorphism",
]
