"""Decision procedures for (non-)left-orderability.

Proper k-partitions are positive-cone fragments on a Cayley ball; when none
exists the group cannot be left-ordered.  The sign test looks for the
identity inside the semigroup generated by x_i^(e_i), once for every sign
choice.  A complete presentation blocks every sign choice on generators.
Every negative verdict carries a certificate that replays without search.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import partial
from typing import Callable, Iterable, Sequence

from .oracle import (
    Answer,
    Backend,
    Ball,
    BoundedRewriting,
    KleinBottle,
    RelatorScript,
    ball as make_ball,
)
from .parallel import pmap
from .presentation import Consequence, Presentation, consequences
from .words import GeneratorId, Word, cyclically_reduce, from_json, invert, product, to_json


class DecideError(ValueError):
    pass


class IdentityInList(DecideError):
    pass


class EmptyRelator(DecideError):
    pass


class UnverifiedExtraRelator(DecideError):
    pass


class Outcome(Enum):
    NON_LEFT_ORDERABLE = "NonLeftOrderable"
    UNDETERMINED = "Undetermined"


# --- k-partitions ------------------------------------------------------------------

@dataclass(frozen=True)
class KPartition:
    ball: Ball = field(repr=False, compare=False, hash=False)
    members: frozenset[int]

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def words(self) -> list[Word]:
        return [self.ball.elements[i] for i in sorted(self.members)]

    def violations(self, conradian: bool = False) -> list[str]:
        """Empty iff the three proper-partition conditions (and optionally Conradian closure) hold."""
        b, Q = self.ball, self.members
        out = []
        if 0 in Q:
            out.append("identity in Q")
        for i in range(1, len(b)):
            inQ, invQ = i in Q, b.inverse[i] in Q
            if inQ and invQ:
                out.append(f"{b.elements[i]} and its inverse both in Q")
            if not inQ and not invQ:
                out.append(f"neither {b.elements[i]} nor its inverse in Q")
        for g in Q:
            for h in Q:
                k = b.table.get((g, h))
                if k is not None and k not in Q:
                    out.append(f"{b.elements[g]} * {b.elements[h]} leaves Q")
        if conradian:
            for g, h, k in conradian_triples(b):
                if g in Q and h in Q and k not in Q:
                    out.append(f"g^-1 h g^2 leaves Q for g={b.elements[g]}, h={b.elements[h]}")
        return out


def conradian_triples(b: Ball) -> list[tuple[int, int, int]]:
    """(g, h, idx of g^-1 h g^2) for non-identity g, h whenever that element lies in the ball."""
    out = []
    n = len(b)
    canonical = b.backend.canonical
    mul = b.backend.mul if canonical else None
    for g in range(1, n):
        if canonical:
            g2 = mul(b.keys[g], b.keys[g])
            ginv = b.keys[b.inverse[g]]
        for h in range(1, n):
            if canonical:
                k = b.index_of_key(mul(mul(ginv, b.keys[h]), g2))
            else:
                e = b.elements
                k = b.locate(product(e[g].alphabet, (invert(e[g]), e[h], e[g], e[g])))
            if k is not None:
                out.append((g, h, k))
    return out


@dataclass
class _Problem:
    """Boolean encoding: variable v true means the lower-index element of pair v lies in Q."""

    nvars: int
    clauses: list[tuple[int, ...]]  # literals: +-(v + 1)
    pairs: list[tuple[int, int]]
    infeasible: bool = False


def _literal(b: Ball, var_of: dict[int, int], first: set[int], e: int) -> int:
    v = var_of[e] + 1
    return v if e in first else -v


def encode(b: Ball, conradian: bool = False) -> _Problem:
    pairs = b.inverse_pairs()
    if any(i == j for i, j in pairs):
        # an involution g = g^-1 != 1 can lie neither in Q nor outside it
        return _Problem(0, [], pairs, infeasible=True)
    var_of: dict[int, int] = {}
    first = set()
    for v, (i, j) in enumerate(pairs):
        var_of[i] = var_of[j] = v
        first.add(i)
    lit = partial(_literal, b, var_of, first)
    clauses = set()
    triples = [(g, h, k) for (g, h), k in b.table.items() if g and h]
    if conradian:
        triples += conradian_triples(b)
    for g, h, k in triples:
        body = {-lit(g), -lit(h)}
        if k != 0:
            body.add(lit(k))
        if any(-x in body for x in body):
            continue  # tautology
        clauses.add(tuple(sorted(body, key=lambda x: (abs(x), x))))
    return _Problem(len(pairs), sorted(clauses), pairs)


def _solve(prob: _Problem, prefix: tuple[int, ...] = ()) -> list[tuple[int, ...]]:
    """All satisfying assignments (as tuples of 0/1) extending ``prefix``, in lexicographic order, true first."""
    n = prob.nvars
    if prob.infeasible:
        return []
    occurs: list[list[int]] = [[] for _ in range(n)]
    for ci, cl in enumerate(prob.clauses):
        for x in cl:
            occurs[abs(x) - 1].append(ci)
    clauses = prob.clauses
    val = [-1] * n
    trail: list[int] = []

    def lit_val(x: int) -> int:
        a = val[abs(x) - 1]
        if a < 0:
            return -1
        return a if x > 0 else 1 - a

    def assign(v: int, a: int) -> bool:
        """Set v and unit-propagate; False on conflict.  Assigned vars go on the trail."""
        queue = [(v, a)]
        while queue:
            u, b = queue.pop()
            cur = val[u]
            if cur >= 0:
                if cur != b:
                    return False
                continue
            val[u] = b
            trail.append(u)
            for ci in occurs[u]:
                unassigned = None
                sat = False
                count = 0
                for x in clauses[ci]:
                    lv = lit_val(x)
                    if lv == 1:
                        sat = True
                        break
                    if lv == -1:
                        unassigned = x
                        count += 1
                if sat:
                    continue
                if count == 0:
                    return False
                if count == 1:
                    queue.append((abs(unassigned) - 1, 1 if unassigned > 0 else 0))
        return True

    def undo(mark: int):
        while len(trail) > mark:
            val[trail.pop()] = -1

    # unit clauses of length one are handled by the first propagation
    for cl in clauses:
        if len(cl) == 1:
            x = cl[0]
            if not assign(abs(x) - 1, 1 if x > 0 else 0):
                return []
    for v, a in enumerate(prefix):
        if not assign(v, a):
            return []

    out: list[tuple[int, ...]] = []

    def dfs(v: int):
        while v < n and val[v] >= 0:
            v += 1
        if v == n:
            out.append(tuple(val))
            return
        for a in (1, 0):
            mark = len(trail)
            if assign(v, a):
                dfs(v + 1)
            undo(mark)

    dfs(0)
    return out


def _members(prob: _Problem, sol: Sequence[int]) -> frozenset[int]:
    return frozenset(i if a else j for (i, j), a in zip(prob.pairs, sol))


def _solve_prefix(prob: _Problem, prefix: tuple[int, ...]) -> list[tuple[int, ...]]:
    return _solve(prob, prefix)


def enumerate_k_partitions(b: Ball, conradian: bool = False, threads: int | None = 1) -> list[KPartition]:
    """All proper (optionally Conradian) k-partitions, by backtracking with unit propagation."""
    prob = encode(b, conradian)
    split = min(4, prob.nvars)
    if threads and threads > 1 and split:
        prefixes = list(itertools.product((1, 0), repeat=split))
        chunks = pmap(partial(_solve_prefix, prob), prefixes, threads)
        sols = sorted({s for ch in chunks for s in ch}, key=lambda s: tuple(1 - x for x in s))
    else:
        sols = _solve(prob)
    return [KPartition(b, _members(prob, s)) for s in sols]


def enumerate_conradian_k_partitions(b: Ball, threads: int | None = 1) -> list[KPartition]:
    return enumerate_k_partitions(b, conradian=True, threads=threads)


def count_k_partitions(b: Ball, conradian: bool = False) -> int:
    return len(_solve(encode(b, conradian)))


def brute_force_partitions(b: Ball, conradian: bool = False) -> list[frozenset[int]]:
    """Independent check: try every sign vector over the inverse pairs (numpy, <= 20 pairs)."""
    import numpy as np

    pairs = b.inverse_pairs()
    if any(i == j for i, j in pairs):
        return []
    m = len(pairs)
    if m > 20:
        raise DecideError("brute force limited to 20 inverse pairs")
    masks = np.arange(1 << m, dtype=np.int64)
    # inQ[e] is a boolean vector over all assignments
    bits = [((masks >> (m - 1 - v)) & 1).astype(bool) for v in range(m)]
    inQ = {0: np.zeros(1 << m, dtype=bool)}
    for v, (i, j) in enumerate(pairs):
        inQ[i] = bits[v]
        inQ[j] = ~bits[v]
    ok = np.ones(1 << m, dtype=bool)
    triples = [(g, h, k) for (g, h), k in b.table.items() if g and h]
    if conradian:
        triples += conradian_triples(b)
    for g, h, k in triples:
        ok &= ~(inQ[g] & inQ[h]) | inQ[k]
    out = []
    for s in np.nonzero(ok)[0]:
        out.append(frozenset(i if inQ[i][s] else j for i, j in pairs))
    return out


@dataclass(frozen=True)
class PartitionVerdict:
    outcome: Outcome
    k: int
    count: int
    ball_size: int


def nonlo_by_partitions(backend: Backend, gens: Sequence[GeneratorId] | None, k: int,
                        threads: int | None = 1) -> PartitionVerdict:
    b = make_ball(backend, gens, k)
    prob = encode(b)
    sols = _solve(prob) if not threads or threads <= 1 else [0] * len(enumerate_k_partitions(b, threads=threads))
    outcome = Outcome.NON_LEFT_ORDERABLE if not sols else Outcome.UNDETERMINED
    return PartitionVerdict(outcome, k, len(sols), len(b))


def minimal_refuting_radius(backend: Backend, max_k: int, threads: int | None = 1) -> int | None:
    for k in range(1, max_k + 1):
        if nonlo_by_partitions(backend, None, k, threads).outcome is Outcome.NON_LEFT_ORDERABLE:
            return k
    return None


def restrict(p: KPartition, smaller: Ball) -> KPartition:
    """Restriction of a partition of a larger ball to a smaller ball of the same backend."""
    big = p.ball
    keyed = big.backend.canonical
    members = set()
    for i, w in enumerate(smaller.elements):
        j = big.index_of_key(smaller.keys[i]) if keyed else big.locate(w)
        if j is None:
            raise DecideError(f"{w} missing from the larger ball")
        if j in p.members:
            members.add(i)
    return KPartition(smaller, frozenset(members))


# --- Klein bottle cones and the space of orderings ---------------------------------

def klein_cone_membership(s: int, t: int, w: Word) -> bool:
    """Lexicographic cone on x^m y^n: positive iff m s > 0, or m = 0 and n t > 0."""
    m, n = KleinBottle(w.alphabet).element(w)
    return m * s > 0 or (m == 0 and n * t > 0)


KLEIN_SIGNS = [(1, 1), (1, -1), (-1, 1), (-1, -1)]


def cone_partition(b: Ball, pred: Callable[[Word], bool]) -> KPartition:
    return KPartition(b, frozenset(i for i, w in enumerate(b.elements) if pred(w)))


def klein_cone_partitions(b: Ball) -> list[KPartition]:
    return [cone_partition(b, partial(klein_cone_membership, s, t)) for s, t in KLEIN_SIGNS]


def ordering_metric(p1, p2, enumeration: Sequence[Word]) -> Fraction:
    """2^-n for the first (1-based) index n where the cones disagree; 0 if they never do."""

    def member(p, w):
        if isinstance(p, KPartition):
            i = p.ball.locate(w)
            if i is None:
                raise DecideError(f"{w} outside the ball")
            return i in p.members
        return bool(p(w))

    for n, w in enumerate(enumeration, start=1):
        if member(p1, w) != member(p2, w):
            return Fraction(1, 2 ** n)
    return Fraction(0)


@dataclass(frozen=True)
class TararinCounts:
    k: int
    partitions: int
    extendable: int
    cone_consistent_extendable: int


def tararin_counts(backend: Backend, k: int, cones: Sequence[Callable[[Word], bool]] | None = None) -> TararinCounts:
    """How many k-partitions extend to (k+1)-partitions, and how many of those are cone restrictions."""
    small = make_ball(backend, None, k)
    big = make_ball(backend, None, k + 1)
    parts = enumerate_k_partitions(small)
    ext = {restrict(p, small).members for p in enumerate_k_partitions(big)}
    if cones is None:
        cones = [partial(klein_cone_membership, s, t) for s, t in KLEIN_SIGNS]
    cone_sets = {cone_partition(small, c).members for c in cones}
    n_ext = sum(1 for p in parts if p.members in ext)
    n_cone = sum(1 for p in parts if p.members in ext and p.members in cone_sets)
    return TararinCounts(k, len(parts), n_ext, n_cone)


# --- semigroup sign test -------------------------------------------------------------

@dataclass
class Witness:
    signs: tuple[int, ...]
    factors: tuple[int, ...]  # indices into X
    script: RelatorScript | None = None

    def word(self, X: Sequence[Word]) -> Word:
        return product(X[0].alphabet, [X[i] if self.signs[i] > 0 else invert(X[i]) for i in self.factors])


@dataclass
class NonLOCertificate:
    group: str
    backend: str
    presentation: dict
    X: list[Word]
    witnesses: list[Witness]

    def to_json(self) -> dict:
        return {
            "schema": "ordalib.nonlo-signs/1",
            "group": self.group,
            "backend": self.backend,
            "presentation": self.presentation,
            "X": [to_json(x) for x in self.X],
            "witnesses": [
                {"signs": list(w.signs), "factors": list(w.factors),
                 "script": w.script.to_json() if w.script is not None else None}
                for w in self.witnesses
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1)

    @classmethod
    def from_json(cls, data) -> "NonLOCertificate":
        if isinstance(data, str):
            data = json.loads(data)
        pres = Presentation.from_json(data["presentation"])
        alpha = pres.alphabet
        X = [from_json(x, alpha) for x in data["X"]]
        ws = []
        for w in data["witnesses"]:
            scr = RelatorScript.from_json(w["script"], alpha) if w["script"] is not None else None
            ws.append(Witness(tuple(w["signs"]), tuple(w["factors"]), scr))
        return cls(data["group"], data["backend"], data["presentation"], X, ws)

    def replay(self, backend: Backend | None = None) -> bool:
        """Check every witness without any search; all 2^|X| sign choices must be covered."""
        pres = Presentation.from_json(self.presentation)
        pres.oracle = self.backend
        if backend is None:
            backend = pres.backend()
        n = len(self.X)
        covered = {w.signs for w in self.witnesses}
        if covered != set(itertools.product((1, -1), repeat=n)):
            return False
        for w in self.witnesses:
            if not w.factors:
                return False
            word = w.word(self.X)
            if backend.canonical:
                if not backend.is_trivial(word).is_equal:
                    return False
            else:
                if w.script is None or not w.script.proves(word, pres.relators):
                    return False
        return True


@dataclass
class SignTestResult:
    outcome: Outcome
    certificate: NonLOCertificate | None
    unrefuted: list[tuple[int, ...]]


def _quick_script(backend: BoundedRewriting, w: Word) -> RelatorScript | None:
    """Free reduction, relator and hint rotations only: no search."""
    if w.is_identity():
        return RelatorScript()
    conj, core = cyclically_reduce(w)
    if core.is_identity():
        return RelatorScript()
    hit = backend._cyc.get(core.key())
    return None if hit is None else hit[1].conjugate_by(conj)


def _refute_one(backend: Backend, X: Sequence[Word], max_len: int, deep: bool, signs: tuple[int, ...]) -> Witness | None:
    gens = [x if s > 0 else invert(x) for x, s in zip(X, signs)]
    alpha = X[0].alphabet
    if backend.canonical:
        ident = backend.element(alpha.identity())
        keys = [backend.element(g) for g in gens]
        seen = {}
        frontier = []
        for i, k in enumerate(keys):
            if k == ident:
                return Witness(signs, (i,))
            if k not in seen:
                seen[k] = (i,)
                frontier.append(k)
        for _ in range(max_len - 1):
            nxt = []
            for k in frontier:
                path = seen[k]
                for i, g in enumerate(keys):
                    kk = backend.mul(k, g)
                    if kk == ident:
                        return Witness(signs, path + (i,))
                    if kk not in seen:
                        seen[kk] = path + (i,)
                        nxt.append(kk)
            frontier = nxt
        return None
    # no canonical forms: enumerate products as reduced words, prove triviality by script
    assert isinstance(backend, BoundedRewriting)
    seen_w = {}
    frontier = []
    for i, g in enumerate(gens):
        seen_w.setdefault(g.key(), (g, (i,)))
    frontier = [seen_w[k] for k in sorted(seen_w, key=lambda k: seen_w[k][1])]
    level = list(frontier)
    for length in range(1, max_len + 1):
        for w, path in level:
            scr = _quick_script(backend, w)
            if scr is None and deep and not backend.abelian_separates(w):
                scr = backend.prove_trivial(w)
            if scr is not None:
                return Witness(signs, path, scr)
        if length == max_len:
            break
        nxt = []
        for w, path in level:
            for i, g in enumerate(gens):
                ww = product(alpha, (w, g))
                if ww.key() not in seen_w:
                    seen_w[ww.key()] = (ww, path + (i,))
                    nxt.append((ww, path + (i,)))
        level = nxt
    return None


def semigroup_sign_test(presentation: Presentation, X: Sequence[Word], max_product_len: int,
                        backend: Backend | None = None, deep: bool = False, threads: int | None = 1) -> SignTestResult:
    """Refuted iff for every sign choice some product of the x_i^(e_i) is the identity."""
    backend = backend or presentation.backend()
    X = list(X)
    if not X:
        raise DecideError("empty word list")
    for x in X:
        v = backend.is_trivial(x)
        if v.value is Answer.EQUAL:
            raise IdentityInList(f"{x} is the identity")
    all_signs = list(itertools.product((1, -1), repeat=len(X)))
    found = pmap(partial(_refute_one, backend, X, max_product_len, deep), all_signs, threads)
    missing = [s for s, w in zip(all_signs, found) if w is None]
    if missing:
        return SignTestResult(Outcome.UNDETERMINED, None, missing)
    cert = NonLOCertificate(presentation.name, presentation.oracle, presentation.to_json(), X, list(found))
    return SignTestResult(Outcome.NON_LEFT_ORDERABLE, cert, [])


# --- complete presentations ---------------------------------------------------------

def blocks(relator: Word, eps: dict[GeneratorId, int]) -> bool:
    """All syllables x_a^b have eps_a * b of one sign."""
    if relator.is_identity():
        raise EmptyRelator("the empty word blocks nothing")
    signs = {eps[l.gen] * l.exp > 0 for l in relator.letters}
    return len(signs) == 1


@dataclass
class CompletenessResult:
    complete: bool
    blockers: dict[tuple[int, ...], int]  # sign vector -> index into words
    words: list[Word]
    unblocked: list[tuple[int, ...]]


def is_complete(p: Presentation, extra: Iterable[Word | Consequence] = (), backend: Backend | None = None) -> CompletenessResult:
    words = list(p.relators)
    for e in extra:
        if isinstance(e, Consequence):
            if not e.verify(p.relators):
                raise UnverifiedExtraRelator(f"script for {e.word} does not replay")
            words.append(e.word)
        else:
            backend = backend or p.backend()
            if backend.is_trivial(e).value is not Answer.EQUAL:
                raise UnverifiedExtraRelator(f"{e} not verified trivial")
            words.append(e)
    gens = p.alphabet.gens
    # index each word by its sign pattern requirement: only words whose syllable
    # generators get consistent signs can block
    blockers: dict[tuple[int, ...], int] = {}
    unblocked = []
    for signs in itertools.product((1, -1), repeat=len(gens)):
        eps = dict(zip(gens, signs))
        for i, w in enumerate(words):
            if not w.is_identity() and blocks(w, eps):
                blockers[signs] = i
                break
        else:
            unblocked.append(signs)
    return CompletenessResult(not unblocked, blockers, words, unblocked)


@dataclass
class BlockerSearch:
    complete: bool
    generation: int | None
    result: CompletenessResult | None
    used: list[Consequence]


def find_blockers(p: Presentation, max_len: int = 10, max_count: int = 20000, generations: int = 2) -> BlockerSearch:
    for gen in range(generations + 1):
        cons = consequences(p, max_len, max_count, gen)
        res = is_complete(p, cons)
        if res.complete:
            used_idx = sorted(set(res.blockers.values()))
            nrel = len(p.relators)
            used = [cons[i - nrel] for i in used_idx if i >= nrel]
            return BlockerSearch(True, gen, res, used)
    return BlockerSearch(False, None, None, [])


# --- certificates for the other two methods ------------------------------------------

def _pres_backend(presentation: dict, backend_name: str) -> tuple[Presentation, Backend]:
    pres = Presentation.from_json(presentation)
    pres.oracle = backend_name
    return pres, pres.backend()


@dataclass
class PartitionCertificate:
    """No proper k-partition of the k-ball.  Replay re-enumerates with the independent brute force when small."""

    group: str
    backend: str
    presentation: dict
    k: int
    ball_size: int

    def to_json(self) -> dict:
        return {"schema": "ordalib.nonlo-partitions/1", "group": self.group, "backend": self.backend,
                "presentation": self.presentation, "k": self.k, "ball_size": self.ball_size}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1)

    @classmethod
    def from_json(cls, data) -> "PartitionCertificate":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["group"], data["backend"], data["presentation"], int(data["k"]), int(data["ball_size"]))

    def replay(self) -> bool:
        _, backend = _pres_backend(self.presentation, self.backend)
        if not backend.canonical:
            return False
        b = make_ball(backend, None, self.k)
        if len(b) != self.ball_size:
            return False
        if len(b.inverse_pairs()) <= 20:
            return not brute_force_partitions(b)
        return not _solve(encode(b))


@dataclass
class CompleteCertificate:
    """Relators and proved consequences, with one blocking word per generator sign vector."""

    group: str
    presentation: dict
    words: list[Word]
    scripts: list[RelatorScript]
    blockers: dict[tuple[int, ...], int]

    def to_json(self) -> dict:
        return {
            "schema": "ordalib.nonlo-complete/1",
            "group": self.group,
            "presentation": self.presentation,
            "words": [{"word": to_json(w), "script": s.to_json()} for w, s in zip(self.words, self.scripts)],
            "blockers": [{"signs": list(k), "word": v} for k, v in sorted(self.blockers.items(), reverse=True)],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1)

    @classmethod
    def from_json(cls, data) -> "CompleteCertificate":
        if isinstance(data, str):
            data = json.loads(data)
        alpha = Presentation.from_json(data["presentation"]).alphabet
        words = [from_json(e["word"], alpha) for e in data["words"]]
        scripts = [RelatorScript.from_json(e["script"], alpha) for e in data["words"]]
        blockers = {tuple(e["signs"]): int(e["word"]) for e in data["blockers"]}
        return cls(data["group"], data["presentation"], words, scripts, blockers)

    @classmethod
    def build(cls, p: Presentation, res: CompletenessResult, cons: Sequence[Consequence] = ()) -> "CompleteCertificate":
        alpha = p.alphabet
        from .oracle import ScriptStep

        by_key = {c.word.key(): c.script for c in cons}
        used = sorted(set(res.blockers.values()))
        words, scripts, remap = [], [], {}
        for i in used:
            w = res.words[i]
            if i < len(p.relators):
                s = RelatorScript((ScriptStep(alpha.identity(), i, 1),))
            else:
                s = by_key[w.key()]
            remap[i] = len(words)
            words.append(w)
            scripts.append(s)
        return cls(p.name, p.to_json(), words, scripts, {k: remap[v] for k, v in res.blockers.items()})

    def replay(self) -> bool:
        pres = Presentation.from_json(self.presentation)
        for w, s in zip(self.words, self.scripts):
            if w.is_identity() or not s.proves(w, pres.relators):
                return False
        gens = pres.alphabet.gens
        for signs in itertools.product((1, -1), repeat=len(gens)):
            i = self.blockers.get(signs)
            if i is None or not blocks(self.words[i], dict(zip(gens, signs))):
                return False
        return True


def load_certificate(data):
    if isinstance(data, str):
        data = json.loads(data)
    schema = data.get("schema", "")
    kinds = {"ordalib.nonlo-signs/1": NonLOCertificate, "ordalib.nonlo-partitions/1": PartitionCertificate,
             "ordalib.nonlo-complete/1": CompleteCertificate}
    if schema not in kinds:
        raise DecideError(f"unknown certificate schema {schema!r}")
    return kinds[schema].from_json(data)


# --- Dehornoy cone versus Conradian closure -----------------------------------------

def dehornoy_partition(b: Ball, n: int) -> KPartition:
    """The sigma-positive braids of a B_n ball (generators s1 .. s_{n-1})."""
    from .braid import sigma_sign, word_to_braid

    return cone_partition(b, lambda w: sigma_sign(word_to_braid(w, n)).sign > 0)


def conradian_violation(part: KPartition) -> tuple[Word, Word, Word] | None:
    """First (g, h, g^-1 h g^2) with g, h in Q and the last in the ball but not in Q."""
    b = part.ball
    for g, h, k in conradian_triples(b):
        if g in part.members and h in part.members and k not in part.members:
            return b.elements[g], b.elements[h], b.elements[k]
    return None


__all__ = [
    "Outcome", "KPartition", "enumerate_k_partitions", "enumerate_conradian_k_partitions", "count_k_partitions",
    "brute_force_partitions", "nonlo_by_partitions", "minimal_refuting_radius", "restrict", "klein_cone_membership",
    "klein_cone_partitions", "cone_partition", "ordering_metric", "tararin_counts", "TararinCounts",
    "semigroup_sign_test", "NonLOCertificate", "Witness", "SignTestResult", "blocks", "is_complete",
    "CompletenessResult", "find_blockers", "BlockerSearch", "conradian_violation", "PartitionCertificate", "CompleteCertificate", "load_certificate", "dehornoy_partition", "IdentityInList",
    "EmptyRelator", "UnverifiedExtraRelator", "PartitionVerdict", "encode",
]
