"""Archimedean orderings of Z^n and a numerical Hoelder map.

A vector v with components in Z[sqrt d] orders Z^n by m < n iff (n - m).v > 0.
Signs are computed exactly, so Equal is decidable.  Tiebreak vectors extend
the order lexicographically when v has rational slope.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Callable, Sequence

from .magnus import Order


class DimensionMismatch(ValueError):
    pass


class NotArchimedean(ArithmeticError):
    pass


HOLDER_CAP = 2 ** 40


@dataclass(frozen=True)
class QuadraticInt:
    """a + b sqrt(d) with d squarefree (d = 1 only with b = 0)."""

    a: int
    b: int = 0
    d: int = 2

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be positive")
        r = isqrt(self.d)
        if self.b and r * r == self.d:
            raise ValueError(f"{self.d} is a perfect square")

    def _same(self, other: "QuadraticInt") -> int:
        if self.b and other.b and self.d != other.d:
            raise ValueError("mixed radicands")
        return self.d if self.b else other.d

    def __add__(self, other: "QuadraticInt") -> "QuadraticInt":
        return QuadraticInt(self.a + other.a, self.b + other.b, self._same(other))

    def __neg__(self) -> "QuadraticInt":
        return QuadraticInt(-self.a, -self.b, self.d)

    def __sub__(self, other: "QuadraticInt") -> "QuadraticInt":
        return self + (-other)

    def scale(self, k: int) -> "QuadraticInt":
        return QuadraticInt(self.a * k, self.b * k, self.d)

    def sign(self) -> int:
        a, b, d = self.a, self.b, self.d
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 d
        diff = a * a - b * b * d
        return sa if diff > 0 else sb

    def __float__(self):
        return self.a + self.b * self.d ** 0.5

    def __str__(self):
        if not self.b:
            return str(self.a)
        rad = f"sqrt{self.d}" if abs(self.b) == 1 else f"{abs(self.b)}sqrt{self.d}"
        if not self.a:
            return rad if self.b > 0 else f"-{rad}"
        return f"{self.a}{'+' if self.b > 0 else '-'}{rad}"


_RATIONAL = re.compile(r"^[+-]?\d+$")
_SURD = re.compile(r"^(?P<s>[+-]?)(?P<b>\d*)\*?sqrt\(?(?P<d>\d+)\)?$")


def parse_quadratic(text: str) -> QuadraticInt:
    """Accepts forms like 3, sqrt2, -2sqrt3, 1+sqrt(5), 1-2*sqrt2."""
    t = text.replace(" ", "")
    if _RATIONAL.match(t):
        return QuadraticInt(int(t), 0)
    # split an optional rational part off the surd
    k = t.find("sqrt")
    cut = max(t.rfind("+", 1, k), t.rfind("-", 1, k)) if k > 0 else -1
    head, tail = (t[:cut], t[cut:]) if cut > 0 else ("0", t)
    m = _SURD.match(tail)
    if m is None or not _RATIONAL.match(head):
        raise ValueError(f"cannot parse {text!r} as a + b sqrt d")
    b = int(m.group("b") or 1) * (-1 if m.group("s") == "-" else 1)
    return QuadraticInt(int(head), b, int(m.group("d")))


@dataclass(frozen=True)
class OrderVector:
    components: tuple[QuadraticInt, ...]
    tiebreaks: tuple[tuple[QuadraticInt, ...], ...] = field(default=())

    def __post_init__(self):
        if all(c.sign() == 0 for c in self.components):
            raise ValueError("order vector must be nonzero")
        for t in self.tiebreaks:
            if len(t) != len(self.components):
                raise DimensionMismatch("tiebreak dimension differs")

    @property
    def dim(self) -> int:
        return len(self.components)

    @classmethod
    def parse(cls, text: str, tiebreaks: Sequence[str] = ()) -> "OrderVector":
        comps = tuple(parse_quadratic(s) for s in text.split(","))
        return cls(comps, tuple(tuple(parse_quadratic(s) for s in t.split(",")) for t in tiebreaks))

    def __str__(self):
        return "(" + ", ".join(map(str, self.components)) + ")"


def _dot(vec: Sequence[QuadraticInt], m: Sequence[int]) -> QuadraticInt:
    acc = QuadraticInt(0, 0, next((c.d for c in vec if c.b), 2))
    for c, x in zip(vec, m):
        acc = acc + c.scale(x)
    return acc


def zn_compare(v: OrderVector, m: Sequence[int], n: Sequence[int]) -> Order:
    """Order of m and n: sign of (n - m).v, then of the tiebreak vectors in turn."""
    if len(m) != v.dim or len(n) != v.dim:
        raise DimensionMismatch(f"vector of dimension {v.dim} applied to {len(m)} and {len(n)}")
    diff = [y - x for x, y in zip(m, n)]
    for vec in (v.components,) + v.tiebreaks:
        s = _dot(vec, diff).sign()
        if s:
            return Order.LESS if s > 0 else Order.GREATER
    if any(diff):
        # the vectors alone do not separate them: fall back to coordinates
        first = next(x for x in diff if x)
        return Order.LESS if first > 0 else Order.GREATER
    return Order.EQUAL


Compare = Callable[[Sequence[int], Sequence[int]], Order]


def _scaled(x: Sequence[int], k: int) -> tuple[int, ...]:
    return tuple(k * c for c in x)


def holder_a(cmp: Compare, f: Sequence[int], g: Sequence[int], m: int, cap: int = HOLDER_CAP) -> int:
    """The integer a with a f <= m g < (a + 1) f, for f positive, found with comparisons only."""
    target = _scaled(g, m)

    def below(a: int) -> bool:  # a f <= m g
        return cmp(_scaled(f, a), target) is not Order.GREATER

    if below(0):
        lo, hi = 0, 1
        while below(hi):
            lo, hi = hi, hi * 2
            if hi > cap:
                raise NotArchimedean(f"multiples of f never exceed {m} g")
    else:
        lo, hi = -1, 0
        while not below(lo):
            lo, hi = lo * 2, lo
            if -lo > cap:
                raise NotArchimedean(f"multiples of f never fall below {m} g")
    # invariant: below(lo) and not below(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if below(mid):
            lo = mid
        else:
            hi = mid
    return lo


def holder_phi(cmp: Compare, f: Sequence[int], g: Sequence[int], K: int, cap: int = HOLDER_CAP) -> Fraction:
    """phi_K(g) = a_{2^K} / 2^K, measuring g in units of f."""
    zero = tuple(0 for _ in f)
    s = cmp(zero, f)
    if s is Order.EQUAL:
        raise ValueError("f must be nonzero")
    if s is Order.GREATER:
        # f is negative: measure against f^-1 and flip
        return -holder_phi(cmp, _scaled(f, -1), g, K, cap)
    m = 2 ** K
    return Fraction(holder_a(cmp, f, g, m, cap), m)


def vector_compare(v: OrderVector) -> Compare:
    return lambda m, n: zn_compare(v, m, n)
