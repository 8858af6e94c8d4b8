"""Braid words, handle reduction and the Dehornoy ordering.

A braid word on ``n`` strands is a tuple of nonzero ints: ``i`` stands for
sigma_i and ``-i`` for its inverse.  Handle reduction (Dehornoy) rewrites a
word into a sigma-reduced one, i.e. one whose lowest-index generator occurs
with a single sign.  That sign is the Dehornoy sign of the braid, so handle
reduction answers both the word problem and the ordering question.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .poly import IntPolynomial, Laurent, laurent_det
from .words import Alphabet, GeneratorId, Word

DEFAULT_STEP_CAP = 10**6


class BraidError(ValueError):
    pass


class StrandMismatch(BraidError):
    pass


class NotAKnot(BraidError):
    pass


class NonTermination(RuntimeError):
    pass


class NormalizationFailure(RuntimeError):
    pass


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise BraidError("braid groups need at least 2 strands")
        for x in self.letters:
            if x == 0 or abs(x) >= self.n:
                raise BraidError(f"generator index {x} out of range for B_{self.n}")

    @classmethod
    def parse(cls, text: str, n: int) -> "BraidWord":
        """Parse ``"s1 s2^-1 s1^3"``; ``1`` or the empty string is the identity."""
        toks = [t for t in re.split(r"[\s*]+", text.strip()) if t]
        if toks == ["1"]:
            return cls(n)
        out: list[int] = []
        for tok in toks:
            m = re.fullmatch(r"(?:s|sigma_?)(\d+)(?:\^\(?([+-]?\d+)\)?)?", tok)
            if m is None:
                raise BraidError(f"cannot parse braid token {tok!r}")
            i, e = int(m.group(1)), int(m.group(2) or 1)
            if e == 0:
                raise BraidError(f"zero exponent in {tok!r}")
            out.extend([i if e > 0 else -i] * abs(e))
        return cls(n, tuple(out))

    def __str__(self):
        if not self.letters:
            return "1"
        parts = []
        i = 0
        w = self.letters
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            k = (j - i) * (1 if w[i] > 0 else -1)
            parts.append(f"s{abs(w[i])}" if k == 1 else f"s{abs(w[i])}^{k}")
            i = j
        return " ".join(parts)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.n != self.n:
            raise StrandMismatch(f"B_{self.n} vs B_{other.n}")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.n, base.letters * abs(k))

    def free_reduced(self) -> "BraidWord":
        out: list[int] = []
        for x in self.letters:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return BraidWord(self.n, tuple(out))


def sigma(n: int, *letters: int) -> BraidWord:
    return BraidWord(n, tuple(letters))


def braid_alphabet(n: int) -> Alphabet:
    return Alphabet.indexed("s", range(1, n))


def braid_to_word(b: BraidWord) -> Word:
    alpha = braid_alphabet(b.n)
    return Word.from_pairs(alpha, [(GeneratorId("s", (abs(x),)), 1 if x > 0 else -1) for x in b.letters])


def word_to_braid(w: Word, n: int) -> BraidWord:
    out: list[int] = []
    for g, e in w.pairs():
        if g.name != "s" or len(g.index) != 1:
            raise BraidError(f"{g.label} is not a braid generator")
        i = g.index[0]
        out.extend([i if e > 0 else -i] * abs(e))
    return BraidWord(n, tuple(out))


# --- permutations and abelianization ----------------------------------------

def permutation(b: BraidWord) -> tuple[int, ...]:
    """Strand permutation as images of 1..n, composing transpositions left to right.

    ``result[k-1]`` is where the strand starting at position k ends.
    """
    pos = list(range(1, b.n + 1))
    # track the point k through successive transpositions
    images = []
    for k in range(1, b.n + 1):
        p = k
        for x in b.letters:
            i = abs(x)
            if p == i:
                p = i + 1
            elif p == i + 1:
                p = i
        images.append(p)
    del pos
    return tuple(images)


def cycle_type(perm: Sequence[int]) -> list[int]:
    seen, lengths = set(), []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        k, ln = start, 0
        while k not in seen:
            seen.add(k)
            k = perm[k - 1]
            ln += 1
        lengths.append(ln)
    return sorted(lengths, reverse=True)


def is_knot_closure(b: BraidWord) -> bool:
    return cycle_type(permutation(b)) == [b.n]


def exponent_sum(b: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in b.letters)


# --- handle reduction --------------------------------------------------------

def _find_handle(w: list[int], start: int) -> tuple[int, int] | None:
    """Leftmost-ending handle with right end >= start, as (left, right)."""
    for q in range(start, len(w)):
        i = abs(w[q])
        for j in range(q - 1, -1, -1):
            a = abs(w[j])
            if a < i:
                break
            if a == i:
                if w[j] == -w[q]:
                    return j, q
                break
    return None


def handle_reduce(b: BraidWord, max_steps: int = DEFAULT_STEP_CAP) -> BraidWord:
    """Dehornoy handle reduction to a sigma-reduced word representing the same braid."""
    w = list(b.letters)
    start, steps = 0, 0
    while True:
        h = _find_handle(w, start)
        if h is None:
            return BraidWord(b.n, tuple(w))
        steps += 1
        if steps > max_steps:
            raise NonTermination(f"handle reduction exceeded {max_steps} steps")
        p, q = h
        i = abs(w[p])
        e = 1 if w[p] > 0 else -1
        mid: list[int] = []
        for x in w[p + 1 : q]:
            if abs(x) == i + 1:
                d = 1 if x > 0 else -1
                mid.extend((-e * (i + 1), d * i, e * (i + 1)))
            else:
                mid.append(x)
        w[p : q + 1] = mid
        start = p


class SignKind(Enum):
    TRIVIAL = "trivial"
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class SigmaSign:
    kind: SignKind
    index: int = 0

    def __str__(self):
        if self.kind is SignKind.TRIVIAL:
            return "trivial"
        return f"{self.index}-{self.kind.value}"

    @property
    def sign(self) -> int:
        return {SignKind.TRIVIAL: 0, SignKind.POSITIVE: 1, SignKind.NEGATIVE: -1}[self.kind]


def sign_of_reduced(letters: Sequence[int]) -> SigmaSign:
    if not letters:
        return SigmaSign(SignKind.TRIVIAL)
    i = min(abs(x) for x in letters)
    signs = {x > 0 for x in letters if abs(x) == i}
    if len(signs) != 1:
        raise ValueError("word is not sigma-reduced")
    return SigmaSign(SignKind.POSITIVE if signs.pop() else SignKind.NEGATIVE, i)


def sigma_sign(b: BraidWord, max_steps: int = DEFAULT_STEP_CAP) -> SigmaSign:
    return sign_of_reduced(handle_reduce(b, max_steps).letters)


def is_trivial(b: BraidWord) -> bool:
    return not handle_reduce(b).letters


def compare_dehornoy(a: BraidWord, b: BraidWord) -> int:
    """-1, 0, 1 as a <_D b, a = b, a >_D b."""
    if a.n != b.n:
        raise StrandMismatch(f"B_{a.n} vs B_{b.n}")
    return -sigma_sign(a.inverse() * b).sign


def dd_membership(b: BraidWord) -> bool:
    """Membership in the Dubrovina-Dubrovin cone P_1 u P_2^-1 u P_3 u ..."""
    s = sigma_sign(b)
    if s.kind is SignKind.TRIVIAL:
        return False
    want = SignKind.POSITIVE if s.index % 2 == 1 else SignKind.NEGATIVE
    return s.kind is want


def dd_generators(n: int) -> list[BraidWord]:
    """beta_i = (sigma_i ... sigma_{n-1})^((-1)^(i-1))."""
    out = []
    for i in range(1, n):
        w = BraidWord(n, tuple(range(i, n)))
        out.append(w if i % 2 == 1 else w.inverse())
    return out


# --- Garside element and its applications ------------------------------------

def half_twist(n: int) -> BraidWord:
    if n < 2:
        raise BraidError("n >= 2 required")
    letters: list[int] = []
    for top in range(n - 1, 0, -1):
        letters.extend(range(1, top + 1))
    return BraidWord(n, tuple(letters))


def _delta_power(n: int, k: int) -> BraidWord:
    return half_twist(n) ** k


def _at_least_delta2(b: BraidWord, k: int) -> bool:
    """Delta^(2k) <=_D b."""
    return compare_dehornoy(_delta_power(b.n, 2 * k), b) <= 0


def dehornoy_floor(b: BraidWord) -> int:
    """The k with Delta^(2k) <=_D b <_D Delta^(2k+2)."""
    if _at_least_delta2(b, 0):
        lo, hi = 0, 1
        while _at_least_delta2(b, hi):
            lo, hi = hi, hi * 2
    else:
        hi, lo = 0, -1
        while not _at_least_delta2(b, lo):
            hi, lo = lo, lo * 2
    # invariant: Delta^(2lo) <= b < Delta^(2hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _at_least_delta2(b, mid):
            lo = mid
        else:
            hi = mid
    return lo


def provably_prime(b: BraidWord) -> bool:
    """True when b <_D Delta^-4 or b >_D Delta^4; False only means inconclusive."""
    d4 = _delta_power(b.n, 4)
    return compare_dehornoy(b, d4.inverse()) < 0 or compare_dehornoy(b, d4) > 0


def genus_bound(b: BraidWord) -> int:
    """Smallest k >= 0 with Delta^(-2k-2) <_D b <_D Delta^(2k+2); the knot genus is >= k."""
    if not is_knot_closure(b):
        raise NotAKnot(f"closure of {b} has {len(cycle_type(permutation(b)))} components")
    k = 0
    while True:
        up = _delta_power(b.n, 2 * k + 2)
        if compare_dehornoy(up.inverse(), b) < 0 and compare_dehornoy(b, up) < 0:
            return k
        k += 1


# --- the B_3 rewriting oracle ------------------------------------------------

def b3_alphabet() -> Alphabet:
    return Alphabet.of("a", "b")


def braid_to_b3_ab(b: BraidWord) -> Word:
    """sigma_1 = a b, sigma_2 = b^-1 under a = sigma_1 sigma_2, b = sigma_2^-1."""
    if b.n != 3:
        raise StrandMismatch("the a, b presentation is for B_3")
    A, B = GeneratorId("a"), GeneratorId("b")
    pairs = []
    for x in b.letters:
        if x == 1:
            pairs += [(A, 1), (B, 1)]
        elif x == -1:
            pairs += [(B, -1), (A, -1)]
        elif x == 2:
            pairs.append((B, -1))
        else:
            pairs.append((B, 1))
    return Word.from_pairs(b3_alphabet(), pairs)


def b3_ab_to_braid(w: Word) -> BraidWord:
    letters: list[int] = []
    for g, e in w.pairs():
        unit = [1, 2] if g.name == "a" else [-2]
        if e < 0:
            unit = [-x for x in reversed(unit)]
        letters.extend(unit * abs(e))
    return BraidWord(3, tuple(letters))


def _merge(seq: list[list]) -> list[list]:
    out: list[list] = []
    for g, e in seq:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([g, e])
    return out


def b3_navas_normalize(w: Word) -> Word:
    """Rewrite a word in <a, b | b a^2 b = a> so that a occurs with one sign only.

    Follows Navas's argument: a^3 is central and b^-1 = a^2 b a^-1, so the
    word becomes w' a^(3l) with w' positive; then b a^2 b -> a until w' is
    a^r1 b^k1 a b^k2 ... a b^kn a^r2, and for l < 0 the identity
    a b^k a^-1 = (a^-1 b^-1)^k pushes the negative power through.
    """
    pos: list[list] = []  # positive word in 'a', 'b'
    ell = 0
    for g, e in w.pairs():
        if g.name == "a":
            q, r = divmod(e, 3)
            ell += q
            if r:
                pos.append(["a", r])
        elif e > 0:
            pos.append(["b", e])
        else:
            for _ in range(-e):
                pos += [["a", 2], ["b", 1], ["a", 2]]
                ell -= 1

    def normalize_a(seq):
        seq = _merge(seq)
        nonlocal ell
        out = []
        for g, e in seq:
            if g == "a" and e >= 3:
                ell += e // 3
                e %= 3
            if e:
                out.append([g, e])
        merged = _merge(out)
        return merged if merged == out else normalize_a(merged)

    pos = normalize_a(pos)
    # replace the leftmost b a^2 b by a
    while True:
        for k in range(len(pos) - 2):
            if pos[k][0] == "b" and pos[k + 1] == ["a", 2] and pos[k + 2][0] == "b":
                left = [["b", pos[k][1] - 1]] if pos[k][1] > 1 else []
                right = [["b", pos[k + 2][1] - 1]] if pos[k + 2][1] > 1 else []
                pos = pos[:k] + left + [["a", 1]] + right + pos[k + 3 :]
                pos = normalize_a(pos)
                break
        else:
            break

    A, B = GeneratorId("a"), GeneratorId("b")
    gid = {"a": A, "b": B}
    if ell >= 0:
        seq = pos + ([["a", 3 * ell]] if ell else [])
        return Word.from_pairs(b3_alphabet(), [(gid[g], e) for g, e in seq])

    # w' a^-3: apply a b^k a^-1 -> (a^-1 b^-1)^k from the right until a is uniformly negative
    seq = _merge(pos + [["a", -3]])
    while any(g == "a" and e > 0 for g, e in seq) and any(g == "a" and e < 0 for g, e in seq):
        for k in range(len(seq) - 3, -1, -1):
            if seq[k][0] == "a" and seq[k][1] > 0 and seq[k + 1][0] == "b" and seq[k + 1][1] > 0 \
                    and seq[k + 2][0] == "a" and seq[k + 2][1] < 0:
                kk = seq[k + 1][1]
                repl = [["a", seq[k][1] - 1]] + [["a", -1], ["b", -1]] * kk + [["a", seq[k + 2][1] + 1]]
                seq = _merge(seq[:k] + repl + seq[k + 3 :])
                break
        else:
            # a^r at the far left with r > 0 and nothing else positive: a^r a^-3 already merged
            raise AssertionError(f"unexpected shape in B_3 rewriting: {seq}")
    seq = _merge(seq + [["a", 3 * (ell + 1)]])
    return Word.from_pairs(b3_alphabet(), [(gid[g], e) for g, e in seq])


def b3_sign_from_navas(w: Word) -> SigmaSign:
    """Dehornoy sign read off a Navas normal form (a = s1 s2, b = s2^-1)."""
    a_exps = [e for g, e in w.pairs() if g.name == "a"]
    if a_exps:
        if all(e > 0 for e in a_exps):
            return SigmaSign(SignKind.POSITIVE, 1)
        if all(e < 0 for e in a_exps):
            return SigmaSign(SignKind.NEGATIVE, 1)
        raise ValueError("word has mixed a-signs")
    k = sum(e for _, e in w.pairs())
    if k == 0:
        return SigmaSign(SignKind.TRIVIAL)
    return SigmaSign(SignKind.NEGATIVE if k > 0 else SignKind.POSITIVE, 2)


# --- Artin action: a faithful canonical key ----------------------------------

def _fred(seq: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in seq:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _gen_action(n: int, x: int) -> tuple[tuple[int, ...], ...]:
    imgs = [(j,) for j in range(1, n + 1)]
    i = abs(x)
    if x > 0:
        imgs[i - 1] = (i, i + 1, -i)
        imgs[i] = (i,)
    else:
        imgs[i - 1] = (i + 1,)
        imgs[i] = (-(i + 1), i, i + 1)
    return tuple(imgs)


def _substitute(word: Sequence[int], images) -> tuple[int, ...]:
    out: list[int] = []
    for y in word:
        img = images[abs(y) - 1]
        if y < 0:
            img = [-z for z in reversed(img)]
        out.extend(img)
    return _fred(out)


def compose_actions(phi, psi) -> tuple[tuple[int, ...], ...]:
    """phi o psi as automorphisms of the free group F_n."""
    return tuple(_substitute(img, phi) for img in psi)


def artin_action(b: BraidWord) -> tuple[tuple[int, ...], ...]:
    """Images of x_1..x_n under the Artin representation; equal iff the braids are equal."""
    phi = tuple((j,) for j in range(1, b.n + 1))
    for x in b.letters:
        phi = compose_actions(phi, _gen_action(b.n, x))
    return phi


# --- Burau and Alexander -----------------------------------------------------

def _burau_block(i: int, n: int, inverse: bool):
    t, ti = Laurent.t(1), Laurent.t(-1)
    one, zero = Laurent.const(1), Laurent()
    if not inverse:
        blk = [[one, t, zero], [zero, -t, zero], [zero, one, one]]
    else:
        blk = [[one, one, zero], [zero, -ti, zero], [zero, ti, one]]
    m = [[Laurent.const(int(r == c)) for c in range(n - 1)] for r in range(n - 1)]
    for r in range(3):
        for c in range(3):
            R, C = i - 2 + r, i - 2 + c
            if 0 <= R < n - 1 and 0 <= C < n - 1:
                m[R][C] = blk[r][c]
    return m


def _lmatmul(a, b):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = Laurent()
            for k in range(n):
                if not a[i][k].is_zero() and not b[k][j].is_zero():
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def burau_reduced(b: BraidWord) -> list[list[Laurent]]:
    n = b.n
    m = [[Laurent.const(int(r == c)) for c in range(n - 1)] for r in range(n - 1)]
    for x in b.letters:
        m = _lmatmul(m, _burau_block(abs(x), n, x < 0))
    return m


def normalize_alexander(p: Laurent) -> IntPolynomial:
    """Fix the unit +-t^k: lowest degree 0, positive constant term."""
    poly, _ = p.to_poly()
    if poly.is_zero():
        raise NormalizationFailure("zero Alexander polynomial")
    if poly.coeffs[0] < 0:
        poly = -poly
    return poly


def alexander_from_braid(b: BraidWord) -> IntPolynomial:
    """Alexander polynomial of the closure: det(I - Burau(b)) / (1 + t + ... + t^(n-1))."""
    if not is_knot_closure(b):
        raise NotAKnot(f"closure of {b} is not a knot")
    n = b.n
    m = burau_reduced(b)
    diff = [[Laurent.const(int(r == c)) - m[r][c] for c in range(n - 1)] for r in range(n - 1)]
    d = laurent_det(diff)
    delta = d.exact_div(Laurent([1] * n))
    poly = normalize_alexander(delta)
    if abs(poly(1)) != 1:
        raise NormalizationFailure(f"Delta(1) = {poly(1)} for {b}")
    return poly
