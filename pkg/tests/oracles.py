"""Independent reference implementations used only by the tests."""

from __future__ import annotations

from fractions import Fraction


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod(a, b):
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(_trim(a)) >= len(b):
        a = _trim(a)
        k = len(a) - len(b)
        c = a[-1] / b[-1]
        q[k] = c
        for i, x in enumerate(b):
            a[i + k] -= c * x
        a = _trim(a)
    return _trim(q), _trim(a)


def _gcd(a, b):
    a, b = _trim([Fraction(x) for x in a]), _trim([Fraction(x) for x in b])
    while b:
        a, b = b, _divmod(a, b)[1]
    return a


def squarefree_part(p):
    dp = [i * c for i, c in enumerate(p)][1:]
    g = _gcd(p, dp)
    return _divmod(p, g)[0] if len(g) > 1 else [Fraction(c) for c in _trim(p)]


def _variations(seq):
    s = [x for x in seq if x != 0]
    return sum(1 for a, b in zip(s, s[1:]) if (a > 0) != (b > 0))


def _taylor_shift(p, a):
    """Coefficients of p(x + a)."""
    p = list(p)
    n = len(p)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            p[j] += a * p[j + 1]
    return p


def _descartes_bound(p, lo, hi):
    """Sign variations of (1 + x)^n p((lo + hi x) / (1 + x)): an upper bound on roots in (lo, hi)."""
    # q(x) = p(lo + (hi - lo) x), then reverse and shift by 1
    q = [c * (hi - lo) ** i for i, c in enumerate(_taylor_shift(p, lo))]
    r = list(reversed(q))
    r = _taylor_shift(r, Fraction(1))
    return _variations(r)


def _eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def count_roots_bisect(p, lo, hi):
    """Distinct real roots of p in the open interval (lo, hi) by Descartes bisection."""
    p = squarefree_part(p)
    return _count(p, Fraction(lo), Fraction(hi), 0)


def _count(p, lo, hi, depth):
    if len(p) <= 1:
        return 0
    v = _descartes_bound(p, lo, hi)
    if v == 0:
        return 0
    if v == 1:
        return 1
    if depth > 200:
        raise RuntimeError("bisection did not isolate")
    mid = (lo + hi) / 2
    here = 1 if _eval(p, mid) == 0 else 0
    return _count(p, lo, mid, depth + 1) + here + _count(p, mid, hi, depth + 1)


def root_bound(p):
    p = _trim([Fraction(c) for c in p])
    return 1 + max(abs(c / p[-1]) for c in p[:-1]) if len(p) > 1 else Fraction(1)


def positive_distinct(p):
    return count_roots_bisect(p, 0, root_bound(p))


def positive_with_multiplicity(p):
    """Positive roots counted with multiplicity: a root of multiplicity m survives m steps of p -> gcd(p, p')."""
    total = 0
    g = _trim([Fraction(c) for c in p])
    while len(g) > 1:
        total += positive_distinct(g)
        g = _gcd(g, [i * c for i, c in enumerate(g)][1:])
    return total
