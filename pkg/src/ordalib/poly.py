"""Integer and Laurent polynomials with exact real-root counting.

Root counts on (0, inf) use Sturm chains over the rationals, so no floating
point is involved anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


def _trim(cs: list) -> list:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


class IntPolynomial:
    """Polynomial with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        self.coeffs = tuple(_trim(cs))

    @classmethod
    def monomial(cls, deg: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * deg + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        q, r = divmod_q(self.to_fractions(), other.to_fractions())
        if any(r) or any(c.denominator != 1 for c in q):
            raise ArithmeticError(f"{other} does not divide {self} over Z")
        return IntPolynomial(int(c) for c in q)

    def to_fractions(self) -> list[Fraction]:
        return [Fraction(c) for c in self.coeffs]

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs)


def format_poly(coeffs: Sequence[int], var: str = "t", low: int = 0) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        d = i + low
        mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms) if terms else "0"


def parse_poly(text: str, var: str = "t") -> IntPolynomial:
    """Parse ``"1 - 3t + t^2"`` style text (also accepts ``*`` and ``**``)."""
    import re

    s = text.replace(" ", "").replace("**", "^").replace("*", "")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    out: dict[int, int] = {}
    for sign, coef, has_var, exp in re.findall(rf"([+-])(\d*)({var}?)(?:\^(\d+))?", s):
        if not coef and not has_var:
            raise ValueError(f"cannot parse polynomial {text!r}")
        c = int(coef) if coef else 1
        d = (int(exp) if exp else 1) if has_var else 0
        out[d] = out.get(d, 0) + (c if sign == "+" else -c)
    rebuilt = len(re.sub(rf"([+-])(\d*)({var}?)(?:\^(\d+))?", "", s))
    if rebuilt:
        raise ValueError(f"cannot parse polynomial {text!r}")
    deg = max(out) if out else 0
    return IntPolynomial(out.get(i, 0) for i in range(deg + 1))


# --- rational helpers -------------------------------------------------------

def divmod_q(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    r = list(a)
    lead = b[-1]
    for k in range(len(q) - 1, -1, -1):
        c = r[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                r[k + j] -= c * bj
    return _trim(q), _trim(r[: len(b) - 1])


def gcd_q(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = divmod_q(a, b)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def _eval_q(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sturm_chain(p: Sequence) -> list[list[Fraction]]:
    p0 = _trim([Fraction(c) for c in p])
    p1 = _trim([i * c for i, c in enumerate(p0)][1:])
    chain = [p0]
    if p1:
        chain.append(p1)
    while len(chain) > 1 and len(chain[-1]) > 1:
        _, r = divmod_q(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _variations(signs: list[int]) -> int:
    s = [x for x in signs if x]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def _signs_at(chain, x: Fraction) -> list[int]:
    return [_sign(_eval_q(q, x)) for q in chain]


def _signs_at_inf(chain) -> list[int]:
    return [_sign(q[-1]) for q in chain]


def count_distinct_roots_in(p: Sequence, lo: Fraction | None, hi: Fraction | None) -> int:
    """Distinct real roots in the half-open interval (lo, hi]; None means infinity.

    Requires p(lo) != 0 when lo is finite, which the callers guarantee.
    """
    chain = sturm_chain(p)
    if len(chain[0]) <= 1:
        return 0
    vlo = _variations(_signs_at(chain, lo)) if lo is not None else _variations(
        [s * (-1) ** (len(q) - 1) for s, q in zip(_signs_at_inf(chain), chain)]
    )
    vhi = _variations(_signs_at(chain, hi)) if hi is not None else _variations(_signs_at_inf(chain))
    return vlo - vhi


def _deriv_q(p: list[Fraction]) -> list[Fraction]:
    return _trim([i * c for i, c in enumerate(p)][1:])


def _sub_q(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)])


def squarefree_factorization(p: Sequence) -> list[tuple[list[Fraction], int]]:
    """Yun's algorithm over Q: [(f_i, i)] with p ~ prod f_i^i and each f_i squarefree."""
    f = _trim([Fraction(c) for c in p])
    fp = _deriv_q(f)
    a0 = gcd_q(f, fp)
    if len(a0) <= 1:
        return [(f, 1)]
    b, _ = divmod_q(f, a0)
    c, _ = divmod_q(fp, a0)
    d = _sub_q(c, _deriv_q(b))
    out, i = [], 1
    while len(b) > 1:
        a = gcd_q(b, d)
        if len(a) > 1:
            out.append((a, i))
        b, _ = divmod_q(b, a)
        c, _ = divmod_q(d, a)
        d = _sub_q(c, _deriv_q(b))
        i += 1
    return out


def positive_real_roots(p: IntPolynomial | Sequence[int]) -> tuple[int, int]:
    """(count with multiplicity, distinct count) of roots in (0, inf)."""
    coeffs = p.coeffs if isinstance(p, IntPolynomial) else tuple(p)
    if not _trim(list(coeffs)):
        raise ValueError("zero polynomial has no finite root count")
    # strip the factor t^k: roots at 0 are not positive
    k = 0
    while coeffs[k] == 0:
        k += 1
    coeffs = coeffs[k:]
    distinct = count_distinct_roots_in(coeffs, Fraction(0), None)
    with_mult = 0
    for factor, mult in squarefree_factorization(coeffs):
        with_mult += mult * count_distinct_roots_in(factor, Fraction(0), None)
    return with_mult, distinct


def real_roots_in(p: Sequence[int], lo: Fraction, hi: Fraction) -> int:
    return count_distinct_roots_in(p, Fraction(lo), Fraction(hi))


# --- Laurent polynomials ----------------------------------------------------

class Laurent:
    """Integer Laurent polynomial in t: ``coeffs[i]`` multiplies ``t^(low+i)``."""

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), low: int = 0):
        cs = [int(c) for c in coeffs]
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        cs = _trim(cs[start:])
        self.coeffs = tuple(cs)
        self.low = low + start if cs else 0

    @classmethod
    def const(cls, c: int) -> "Laurent":
        return cls([c])

    @classmethod
    def t(cls, k: int = 1, c: int = 1) -> "Laurent":
        return cls([c], low=k)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent.const(other)
        return isinstance(other, Laurent) and (self.low, self.coeffs) == (other.low, other.coeffs)

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def _dense(self, low, high):
        return [self.coeff(d) for d in range(low, high + 1)]

    def coeff(self, d: int) -> int:
        i = d - self.low
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def __add__(self, other):
        if isinstance(other, int):
            other = Laurent.const(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        return Laurent([a + b for a, b in zip(self._dense(lo, hi), other._dense(lo, hi))], lo)

    __radd__ = __add__

    def __neg__(self):
        return Laurent([-c for c in self.coeffs], self.low)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Laurent.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Laurent([c * other for c in self.coeffs], self.low)
        if self.is_zero() or other.is_zero():
            return Laurent()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Laurent(out, self.low + other.low)

    __rmul__ = __mul__

    def exact_div(self, other: "Laurent") -> "Laurent":
        if other.is_zero():
            raise ZeroDivisionError
        if self.is_zero():
            return Laurent()
        q = IntPolynomial(self.coeffs).exact_div(IntPolynomial(other.coeffs))
        return Laurent(q.coeffs, self.low - other.low)

    def to_poly(self) -> tuple[IntPolynomial, int]:
        """Return (p, shift) with self = t^shift * p and p(0) != 0."""
        return IntPolynomial(self.coeffs), self.low

    def __repr__(self):
        return f"Laurent({list(self.coeffs)}, low={self.low})"

    def __str__(self):
        return format_poly(self.coeffs, low=self.low)


def laurent_det(m: list[list[Laurent]]) -> Laurent:
    """Bareiss fraction-free determinant over Z[t, t^-1]."""
    n = len(m)
    if n == 0:
        return Laurent.const(1)
    a = [list(r) for r in m]
    sign = 1
    prev = Laurent.const(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Laurent()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign
