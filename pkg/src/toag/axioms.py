"""Checkers for Axioms 1-16 and the derived lemmas.

Every axiom is a predicate ``f(T, *vars)`` returning ``None`` when the
hypotheses fail (a vacuous instance), ``True`` when the conclusion holds
and ``False`` on a genuine violation.  Wherever a nested ``-.`` is
undefined the instance counts as vacuous.

Finite structures are checked over every tuple; infinite ones on seeded
random tuples drawn from a pool of sampled elements.
"""
from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass

from .errors import DomainError

DEFAULT_SAMPLES = 100_000
POOL_SIZE = 2048


class Verdict(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    EXHAUSTED = "EXHAUSTED-BUDGET"


def _a1(T, x, y):
    return T.add(x, y) == T.add(y, x)


def _a2(T, x):
    return T.add(x, T.zero) == x


def _a3(T, x):
    return T.add(x, T.tau) == T.tau


def _a4(T, x1, y1, x2, y2):
    if not (x1 <= y1 and x2 <= y2):
        return None
    return T.add(x1, x2) <= T.add(y1, y2)


def _a5(T, x, y, z):
    add = T.add
    return add(x, add(y, z)) == add(add(x, y), z)


def _a6(T, x, y, z):
    s = T.add(x, y)
    if not s < T.tau or s != T.add(x, z):
        return None
    return y == z


def _solutions(T, x, y):
    """All ``z`` with ``x + z = y``, for ``y < tau``."""
    if T.is_finite:
        return [z for z in T.elements() if T.add(x, z) == y]
    # in a truncation x + z = y < tau forces x (+) z = y
    z = T.group.sub(y, x)
    return [z] if T.contains(z) and T.add(x, z) == y else []


def _a7(T, x, y):
    if not x <= y < T.tau:
        return None
    sols = _solutions(T, x, y)
    if len(sols) != 1:
        return False
    return T.dm(y, x) == sols[0]


def _a8(T, x, w):
    tau = T.tau
    t = T.tau_dotminus(x)
    if not T.contains(t) or T.add(x, t) != tau:
        return False
    return not (w < t and T.add(x, w) == tau)


def _a9(T, x):
    tdm = T.tau_dotminus
    return tdm(tdm(x)) == x


def _a10(T, x, y):
    tau = T.tau
    if not (x < tau and y < tau) or T.add(x, y) != tau:
        return None
    a = T.dm(y, T.tau_dotminus(x))
    b = T.dm(x, T.tau_dotminus(y))
    if a is None or b is None:
        return None
    return a == b


def _a11(T, x, y, z):
    add, tau = T.add, T.tau
    s = add(y, z)
    if not s < tau or add(x, s) != tau or not add(y, x) < tau:
        return None
    a = T.dm(x, T.tau_dotminus(s))
    b = T.dm(z, T.tau_dotminus(add(x, y)))
    if a is None or b is None:
        return None
    return a == b


def _a12(T, x, y, z):
    add, tau = T.add, T.tau
    s = add(y, z)
    if not s < tau or add(x, s) != tau or add(y, x) != tau:
        return None
    e = T.dm(y, T.tau_dotminus(x))
    if e is None:
        return None
    lhs = add(z, e)
    if not lhs < tau:
        return None
    rhs = T.dm(x, T.tau_dotminus(s))
    if rhs is None:
        return None
    return lhs == rhs


def _a13(T, x, y, z):
    add, tau = T.add, T.tau
    if add(y, x) != tau or not add(y, z) < tau:
        return None
    e = T.dm(y, T.tau_dotminus(x))
    if e is None:
        return None
    return add(z, e) < tau


def _a14(T, x, y, z):
    # conclusion read as x+(y-.(tau-.z)) = (x-.(tau-.y))+z; the printed "+x"
    # is false already in truncations of Z
    add, tau, tdm, dm = T.add, T.tau, T.tau_dotminus, T.dm
    if add(y, z) != tau or add(y, x) != tau:
        return None
    e = dm(y, tdm(x))
    if e is None or not add(z, e) < tau:
        return None
    d = dm(y, tdm(z))
    c = dm(x, tdm(y))
    if d is None or c is None:
        return None
    return add(x, d) == add(c, z)


def _a15(T, x, y, z):
    add, tau, tdm, dm = T.add, T.tau, T.tau_dotminus, T.dm
    if add(y, z) != tau or add(y, x) != tau:
        return None
    d = dm(y, tdm(z))
    if d is None or add(x, d) != tau:
        return None
    e = dm(y, tdm(x))
    if e is None:
        return None
    return add(z, e) == tau


def _a16(T, x, y, z):
    add, tau, tdm, dm = T.add, T.tau, T.tau_dotminus, T.dm
    if add(y, z) != tau or add(y, x) != tau:
        return None
    d = dm(y, tdm(z))
    if d is None or add(x, d) != tau:
        return None
    e = dm(y, tdm(x))
    if e is None:
        return None
    lhs = dm(e, tdm(z))
    rhs = dm(d, tdm(x))
    if lhs is None or rhs is None:
        return None
    return lhs == rhs


def _lemma1(T, y, z):
    if not y <= z < T.tau:
        return None
    return T.tau_dotminus(z) <= T.tau_dotminus(y)


def _lemma2(T, x, y):
    if not (x < T.tau and y < T.tau) or T.tau_dotminus(x) != T.tau_dotminus(y):
        return None
    return x == y


def _corollary1(T, x, y):
    if not x < y < T.tau:
        return None
    return T.tau_dotminus(y) < T.tau_dotminus(x)


AXIOMS = {
    1: (_a1, 2), 2: (_a2, 1), 3: (_a3, 1), 4: (_a4, 4),
    5: (_a5, 3), 6: (_a6, 3), 7: (_a7, 2), 8: (_a8, 2),
    9: (_a9, 1), 10: (_a10, 2), 11: (_a11, 3), 12: (_a12, 3),
    13: (_a13, 3), 14: (_a14, 3), 15: (_a15, 3), 16: (_a16, 3),
}

LEMMAS = {
    "L1": (_lemma1, 2),
    "L2": (_lemma2, 2),
    "C1": (_corollary1, 2),
}

_LABELS = {"L1": "LEMMA 1", "L2": "LEMMA 2", "C1": "COROLLARY 1"}

ALL_AXIOMS = frozenset(AXIOMS)


@dataclass(frozen=True)
class AxiomReport:
    axiom: object
    verdict: Verdict
    witness: tuple | None
    samples: int
    seed: int
    exhaustive: bool
    nonvacuous: int = 0

    @property
    def passed(self):
        return self.verdict is Verdict.PASS

    def render(self, T=None):
        fmt = T.fmt if T is not None else str
        label = _LABELS.get(self.axiom, f"AXIOM {self.axiom}")
        parts = [label, self.verdict.value]
        if self.witness is not None:
            parts.append("witness=(" + ",".join(fmt(w) for w in self.witness) + ")")
        parts.append(f"samples={self.samples}")
        parts.append(f"seed={self.seed}")
        return " ".join(parts)


def _lookup(axiom_id):
    if axiom_id in AXIOMS:
        return AXIOMS[axiom_id]
    if axiom_id in LEMMAS:
        return LEMMAS[axiom_id]
    raise DomainError(f"unknown axiom id {axiom_id!r}")


def evaluate(T, axiom_id, tup):
    """Evaluate one instance: ``None`` vacuous, ``True`` holds, ``False`` fails."""
    f, arity = _lookup(axiom_id)
    if len(tup) != arity:
        raise DomainError(f"axiom {axiom_id} takes {arity} variables")
    return f(T, *tup)


def element_pool(T, seed, size=POOL_SIZE):
    rng = random.Random(f"{seed}:pool")
    pool = [T.zero, T.tau]
    if T.one is not None:
        pool.append(T.one)
        p = T.predecessor(T.tau)
        if p is not None:
            pool.append(p)
    while len(pool) < size:
        x = T.sample(rng)
        pool.append(x)
        if rng.random() < 0.1:
            pool.append(T.tau_dotminus(x))
    return pool


def check_axiom(T, axiom_id, budget=None, samples=DEFAULT_SAMPLES, seed=0,
                pool=None):
    """Check one axiom (or lemma tag) on ``T``.

    Finite structures are checked exhaustively; ``budget`` caps the number
    of tuples and yields ``EXHAUSTED-BUDGET`` when the cap cuts the check
    short.  Infinite structures get ``min(samples, budget)`` random tuples.
    """
    f, arity = _lookup(axiom_id)
    if T.is_finite:
        els = T.elements()
        total = len(els) ** arity
        limit = total if budget is None else min(total, budget)
        it = itertools.islice(itertools.product(els, repeat=arity), limit)
        exhaustive = True
    else:
        limit = samples if budget is None else min(samples, budget)
        if pool is None:
            pool = element_pool(T, seed)
        rng = random.Random(f"{seed}:{axiom_id}")
        flat = rng.choices(pool, k=arity * limit)
        it = zip(*[iter(flat)] * arity)
        total = limit
        exhaustive = False
    count = 0
    hits = 0
    for tup in it:
        count += 1
        r = f(T, *tup)
        if r is None:
            continue
        hits += 1
        if r is False:
            if f(T, *tup) is not False:
                raise AssertionError(f"witness {tup!r} for axiom {axiom_id} did not re-check")
            return AxiomReport(axiom_id, Verdict.FAIL, tuple(tup), count, seed,
                               exhaustive, hits)
    verdict = Verdict.PASS if count == total else Verdict.EXHAUSTED
    return AxiomReport(axiom_id, verdict, None, count, seed, exhaustive, hits)


def check_all(T, ids=None, budget=None, samples=DEFAULT_SAMPLES, seed=0):
    ids = sorted(AXIOMS) if ids is None else list(ids)
    pool = None if T.is_finite else element_pool(T, seed)
    return [check_axiom(T, i, budget, samples, seed, pool) for i in ids]


def check_lemmas(T, budget=None, samples=DEFAULT_SAMPLES, seed=0):
    pool = None if T.is_finite else element_pool(T, seed)
    return [check_axiom(T, i, budget, samples, seed, pool) for i in LEMMAS]


def first_failure(T, axiom_id):
    """Exhaustive check of a finite structure; the first failing tuple or ``None``."""
    f, arity = _lookup(axiom_id)
    for tup in itertools.product(T.elements(), repeat=arity):
        if f(T, *tup) is False:
            return tup
    return None


def satisfies(T, axiom_id):
    return first_failure(T, axiom_id) is None
