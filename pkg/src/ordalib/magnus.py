"""Magnus expansion of free-group words and the induced bi-ordering.

x_i maps to 1 + X_i in the ring of power series in non-commuting variables.
Series are truncated at a fixed degree and have exact integer coefficients.
Two words are compared through the lowest term of mu(u^-1 v) - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb

from .words import GeneratorId, Word, concat, invert


class DegreeMismatch(ValueError):
    pass


class Order(Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"

    @property
    def sign(self) -> int:
        return {"Less": -1, "Equal": 0, "Greater": 1}[self.value]


@dataclass(frozen=True)
class Monomial:
    vars: tuple[GeneratorId, ...] = ()

    @property
    def degree(self) -> int:
        return len(self.vars)

    def sort_key(self):
        return (len(self.vars), self.vars)

    def __lt__(self, other: "Monomial"):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if not self.vars:
            return "1"
        out, i = [], 0
        while i < len(self.vars):
            j = i
            while j < len(self.vars) and self.vars[j] == self.vars[i]:
                j += 1
            v = _var_name(self.vars[i])
            out.append(v if j - i == 1 else f"{v}^{j - i}")
            i = j
        return "".join(out)


def _var_name(g: GeneratorId) -> str:
    if len(g.index) == 1:
        return f"X_{g.index[0]}"
    if len(g.index) == 2:
        return f"X_{{{g.index[0]},{g.index[1]}}}"
    return f"X_{g.name}"


def _binom(e: int, k: int) -> int:
    """Generalized binomial coefficient C(e, k), valid for negative e."""
    if e >= 0:
        return comb(e, k)
    # C(-m, k) = (-1)^k C(m + k - 1, k)
    return (-1) ** k * comb(-e + k - 1, k)


class TruncatedSeries:
    """Finitely many terms of degree <= d; zero coefficients are never stored."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: dict[tuple[GeneratorId, ...], int] | None = None):
        if degree < 0:
            raise ValueError("truncation degree must be >= 0")
        self.degree = degree
        self.coeffs = {m: c for m, c in (coeffs or {}).items() if c and len(m) <= degree}

    @classmethod
    def one(cls, d: int) -> "TruncatedSeries":
        return cls(d, {(): 1})

    @classmethod
    def syllable(cls, g: GeneratorId, e: int, d: int) -> "TruncatedSeries":
        return cls(d, {(g,) * k: _binom(e, k) for k in range(d + 1)})

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and self.degree == other.degree and self.coeffs == other.coeffs

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return mul(self, other)

    def coeff(self, *vars: GeneratorId) -> int:
        return self.coeffs.get(tuple(vars), 0)

    def terms(self) -> list[tuple[Monomial, int]]:
        return sorted(((Monomial(m), c) for m, c in self.coeffs.items()), key=lambda t: t[0].sort_key())

    def __str__(self):
        parts = []
        for mono, c in self.terms():
            body = str(mono)
            if mono.degree == 0:
                txt = str(abs(c))
            elif abs(c) == 1:
                txt = body
            else:
                txt = f"{abs(c)}{body}"
            if not parts:
                parts.append(txt if c > 0 else f"-{txt}")
            else:
                parts.append(f"+ {txt}" if c > 0 else f"- {txt}")
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"TruncatedSeries({self.degree}, {self})"


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    if a.degree != b.degree:
        raise DegreeMismatch(f"{a.degree} vs {b.degree}")
    d = a.degree
    out: dict[tuple, int] = {}
    for ma, ca in a.coeffs.items():
        room = d - len(ma)
        for mb, cb in b.coeffs.items():
            if len(mb) <= room:
                key = ma + mb
                out[key] = out.get(key, 0) + ca * cb
    return TruncatedSeries(d, out)


def expand(w: Word, d: int) -> TruncatedSeries:
    """mu(w) truncated at degree d."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    acc = TruncatedSeries.one(d)
    for g, e in w.pairs():
        acc = mul(acc, TruncatedSeries.syllable(g, e, d))
    return acc


def _raw_expand(pairs: list[tuple[int, int]], d: int) -> dict[tuple[int, ...], int]:
    # same product as expand(), over integer variable ranks and plain dicts
    acc: dict[tuple[int, ...], int] = {(): 1}
    for g, e in pairs:
        syl = [((g,) * k, _binom(e, k)) for k in range(d + 1)]
        out: dict[tuple[int, ...], int] = {}
        for ma, ca in acc.items():
            room = d - len(ma)
            for mb, cb in syl[: room + 1]:
                key = ma + mb
                out[key] = out.get(key, 0) + ca * cb
        acc = {m: c for m, c in out.items() if c}
    return acc


def _lowest_term(w: Word, cap: int):
    gens = sorted({g for g, _ in w.pairs()})
    rank = {g: i for i, g in enumerate(gens)}
    pairs = [(rank[g], e) for g, e in w.pairs()]
    # try small truncation degrees first; most leading terms sit in low degree
    d = 1
    while True:
        nonconst = [(m, c) for m, c in _raw_expand(pairs, d).items() if m]
        if nonconst:
            m, c = min(nonconst, key=lambda t: (len(t[0]), t[0]))
            return Monomial(tuple(gens[i] for i in m)), c
        if d >= cap:
            return None
        d = min(cap, d * 2)


def leading_term(w: Word) -> tuple[Monomial, int] | None:
    """Minimal nonzero term of mu(w) - 1; None iff w is the identity."""
    if w.is_identity():
        return None
    t = _lowest_term(w, len(w) + 1)
    if t is None:
        raise AssertionError(f"no nonzero term found for {w}")
    return t


def compare(u: Word, v: Word) -> Order:
    """u < v iff mu(u^-1 v) - 1 has a positive leading coefficient.

    The lowest term of mu(w) - 1 for reduced w != 1 has degree <= len(w), so
    truncation at len(u) + len(v) + 1 is always enough.
    """
    w = concat(invert(u), v)
    if w.is_identity():
        return Order.EQUAL
    t = _lowest_term(w, len(u) + len(v) + 1)
    if t is None:
        raise AssertionError(f"no nonzero term found for {w}")
    return Order.LESS if t[1] > 0 else Order.GREATER


def is_positive(w: Word) -> bool:
    return compare(w.alphabet.identity(), w) is Order.LESS


def is_garside_positive(w: Word) -> bool:
    return all(l.exp > 0 for l in w.letters)


def sort_words(words: list[Word]) -> list[Word]:
    """Sort by the Magnus order."""
    from functools import cmp_to_key

    return sorted(words, key=cmp_to_key(lambda a, b: compare(a, b).sign))
