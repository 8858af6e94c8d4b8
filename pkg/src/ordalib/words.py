"""Free-group words over explicit alphabets.

Words are stored in syllable (run-length) form: a tuple of ``Letter`` objects,
each a generator with a nonzero exponent, and adjacent letters always carry
distinct generators.  Every constructor returns a freely reduced word, so two
words represent the same free-group element iff they compare equal.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable


class WordError(ValueError):
    pass


class UnknownGenerator(WordError):
    pass


class MalformedExponent(WordError):
    pass


class AlphabetMismatch(WordError):
    pass


@dataclass(frozen=True, order=True)
class GeneratorId:
    name: str
    index: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.name:
            raise WordError("generator name must be nonempty")
        if len(self.index) > 2:
            raise WordError("generator index has at most two components")

    @property
    def label(self) -> str:
        if not self.index:
            return self.name
        if len(self.index) == 1:
            return f"{self.name}{self.index[0]}"
        return f"{self.name}_{self.index[0]}_{self.index[1]}"

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class Letter:
    gen: GeneratorId
    exp: int

    def __post_init__(self):
        if self.exp == 0:
            raise MalformedExponent("letter exponent must be nonzero")

    def __str__(self):
        return self.gen.label if self.exp == 1 else f"{self.gen.label}^{self.exp}"


class Alphabet:
    """An ordered, immutable set of generators.

    Two alphabets are the same iff they hold the same generators in the same
    order.  Position in the alphabet is what the Magnus expansion uses as the
    variable subscript.
    """

    def __init__(self, gens: Iterable[GeneratorId | str]):
        gs = tuple(g if isinstance(g, GeneratorId) else GeneratorId(g) for g in gens)
        if len(set(gs)) != len(gs):
            raise WordError("duplicate generator in alphabet")
        labels = [g.label for g in gs]
        if len(set(labels)) != len(labels):
            raise WordError("generator labels collide")
        for lab in labels:
            if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_\-]*", lab) or lab == "1":
                raise WordError(f"bad generator label {lab!r}")
        self.gens = gs
        self._by_label = dict(zip(labels, gs))
        for g in gs:
            # x_1 and x_{1,2} are accepted as spellings of x1 and x_1_2
            if len(g.index) == 1:
                self._by_label.setdefault(f"{g.name}_{g.index[0]}", g)
            elif len(g.index) == 2:
                self._by_label.setdefault(f"{g.name}_{{{g.index[0]},{g.index[1]}}}", g)
        self._pos = {g: i for i, g in enumerate(gs)}

    @classmethod
    def of(cls, *names: str) -> "Alphabet":
        return cls(GeneratorId(n) for n in names)

    @classmethod
    def indexed(cls, name: str, indices: Iterable) -> "Alphabet":
        out = []
        for i in indices:
            out.append(GeneratorId(name, tuple(i) if isinstance(i, tuple) else (int(i),)))
        return cls(out)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, g):
        return g in self._pos

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return f"Alphabet({' '.join(g.label for g in self.gens)})"

    def position(self, g: GeneratorId) -> int:
        return self._pos[g]

    def lookup(self, label: str) -> GeneratorId:
        try:
            return self._by_label[label]
        except KeyError:
            raise UnknownGenerator(label) from None

    def gen(self, label: str) -> "Word":
        return Word.from_pairs(self, [(self.lookup(label), 1)])

    def identity(self) -> "Word":
        return Word(self, ())

    def word(self, text: str) -> "Word":
        return parse(text, self)


def _reduce_pairs(pairs: Iterable[tuple[GeneratorId, int]]) -> tuple[Letter, ...]:
    stack: list[list] = []
    for g, e in pairs:
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            stack[-1][1] += e
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([g, e])
    return tuple(Letter(g, e) for g, e in stack)


@dataclass(frozen=True)
class Word:
    alphabet: Alphabet = field(compare=True, repr=False)
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.letters, self.letters[1:]):
            if a.gen == b.gen:
                raise WordError("word is not freely reduced; use Word.from_pairs")
        for l in self.letters:
            if l.gen not in self.alphabet:
                raise UnknownGenerator(l.gen.label)

    @classmethod
    def from_pairs(cls, alphabet: Alphabet, pairs: Iterable[tuple[GeneratorId, int]]) -> "Word":
        return cls(alphabet, _reduce_pairs(pairs))

    @classmethod
    def from_labels(cls, alphabet: Alphabet, pairs: Iterable[tuple[str, int]]) -> "Word":
        return cls.from_pairs(alphabet, ((alphabet.lookup(s), e) for s, e in pairs))

    def pairs(self) -> list[tuple[GeneratorId, int]]:
        return [(l.gen, l.exp) for l in self.letters]

    def expanded(self) -> list[tuple[GeneratorId, int]]:
        """Letter-by-letter form: each entry has exponent +1 or -1."""
        out = []
        for l in self.letters:
            s = 1 if l.exp > 0 else -1
            out.extend([(l.gen, s)] * abs(l.exp))
        return out

    def __len__(self):
        return sum(abs(l.exp) for l in self.letters)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def syllables(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return invert(self) ** (-k)
        out = self.alphabet.identity()
        for _ in range(k):
            out = concat(out, self)
        return out

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({format_word(self)!r})"

    def key(self) -> tuple:
        return tuple((l.gen, l.exp) for l in self.letters)


_TOKEN = re.compile(r"^(?P<gen>[^\^\s*]+)(?:\^(?P<exp>[^\s*]+))?$")


def parse(text: str, alphabet: Alphabet) -> Word:
    """Parse ``"x y^-1 x^2"`` (whitespace- or ``*``-separated) into a reduced word."""
    tokens = [t for t in re.split(r"[\s*]+", text.strip()) if t]
    if tokens == ["1"]:
        return alphabet.identity()
    pairs = []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if m is None:
            raise MalformedExponent(f"cannot parse token {tok!r}")
        gen = alphabet.lookup(m.group("gen"))
        exp_text = m.group("exp")
        if exp_text is None:
            exp = 1
        else:
            exp_text = exp_text.strip("()")
            if not re.fullmatch(r"[+-]?\d+", exp_text):
                raise MalformedExponent(f"bad exponent in {tok!r}")
            exp = int(exp_text)
            if exp == 0:
                raise MalformedExponent(f"zero exponent in {tok!r}")
        pairs.append((gen, exp))
    return Word.from_pairs(alphabet, pairs)


def format_word(w: Word) -> str:
    if w.is_identity():
        return "1"
    return " ".join(str(l) for l in w.letters)


def _check_same(u: Word, v: Word):
    if u.alphabet != v.alphabet:
        raise AlphabetMismatch(f"{u.alphabet!r} vs {v.alphabet!r}")


def concat(u: Word, v: Word) -> Word:
    _check_same(u, v)
    return Word.from_pairs(u.alphabet, u.pairs() + v.pairs())


def product(alphabet: Alphabet, words: Iterable[Word]) -> Word:
    pairs: list = []
    for w in words:
        _check_same(alphabet.identity(), w)
        pairs.extend(w.pairs())
    return Word.from_pairs(alphabet, pairs)


def invert(w: Word) -> Word:
    return Word(w.alphabet, tuple(Letter(l.gen, -l.exp) for l in reversed(w.letters)))


def conjugate(w: Word, g: Word) -> Word:
    """g w g^-1."""
    return product(w.alphabet, (g, w, invert(g)))


def cyclically_reduce(w: Word) -> tuple[Word, Word]:
    """Split ``w = c * core * c^-1`` with ``core`` cyclically reduced."""
    seq = w.expanded()
    lo, hi = 0, len(seq)
    while hi - lo >= 2 and seq[lo][0] == seq[hi - 1][0] and seq[lo][1] == -seq[hi - 1][1]:
        lo += 1
        hi -= 1
    return Word.from_pairs(w.alphabet, seq[:lo]), Word.from_pairs(w.alphabet, seq[lo:hi])


def is_cyclically_reduced(w: Word) -> bool:
    if len(w.letters) < 2:
        return True
    a, b = w.letters[0], w.letters[-1]
    return a.gen != b.gen or (a.exp > 0) == (b.exp > 0)


def rotations(w: Word) -> list[Word]:
    """All distinct letter-level cyclic permutations of a cyclically reduced word."""
    seq = w.expanded()
    out, seen = [], set()
    for i in range(max(1, len(seq))):
        r = Word.from_pairs(w.alphabet, seq[i:] + seq[:i])
        if r.key() not in seen:
            seen.add(r.key())
            out.append(r)
    return out


def exponent_vector(w: Word) -> tuple[int, ...]:
    vec = [0] * len(w.alphabet)
    for l in w.letters:
        vec[w.alphabet.position(l.gen)] += l.exp
    return tuple(vec)


def to_json(w: Word) -> list:
    out = []
    for l in w.letters:
        if l.gen.index:
            out.append([l.gen.name, list(l.gen.index), l.exp])
        else:
            out.append([l.gen.name, l.exp])
    return out


def from_json(data, alphabet: Alphabet) -> Word:
    if isinstance(data, str):
        data = json.loads(data)
    pairs = []
    for entry in data:
        if len(entry) == 2:
            g = GeneratorId(entry[0])
        elif len(entry) == 3:
            g = GeneratorId(entry[0], tuple(entry[1]))
        else:
            raise WordError(f"bad JSON letter {entry!r}")
        if g not in alphabet:
            raise UnknownGenerator(g.label)
        exp = entry[-1]
        if not isinstance(exp, int) or exp == 0:
            raise MalformedExponent(f"bad exponent {exp!r}")
        pairs.append((g, exp))
    return Word.from_pairs(alphabet, pairs)


def all_reduced_words(alphabet: Alphabet, max_len: int) -> list[Word]:
    """Every freely reduced word of letter-length <= max_len, shortlex order."""
    steps = [(g, s) for g in alphabet for s in (1, -1)]
    layer: list[list[tuple[GeneratorId, int]]] = [[]]
    out = [alphabet.identity()]
    for _ in range(max_len):
        nxt = []
        for seq in layer:
            for g, s in steps:
                if seq and seq[-1] == (g, -s):
                    continue
                nxt.append(seq + [(g, s)])
        out.extend(Word.from_pairs(alphabet, s) for s in nxt)
        layer = nxt
    return out
