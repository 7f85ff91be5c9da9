"""Extension of a TOAG ``[0, tau]`` to an ordered abelian group.

The monoid ``P`` consists of pairs ``<k, x>`` with ``k`` a natural number
and ``x`` in ``[0, tau)``, ordered lexicographically.  Addition carries
into the first coordinate exactly when the truncated sum of the second
coordinates reaches ``tau``::

    <k,y> + <l,z> = <k+l,   y + z>            if y + z < tau
                  = <k+l+1, y -. (tau -. z)>  if y + z = tau

``[0, tau]`` embeds as ``[<0,0>, <1,0>]`` and the group is the group of
formal differences of ``P``.
"""
from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field

from .axioms import Verdict
from .errors import DomainError
from .groups import Cmp, format_value


@dataclass(frozen=True, order=True)
class PElement:
    k: int
    x: object

    def __str__(self):
        return f"<{self.k},{format_value(self.x)}>"


@dataclass(frozen=True)
class CompletionElement:
    pos: PElement
    neg: PElement

    def __str__(self):
        return f"{self.pos}-{self.neg}"


class Extension:
    """Arithmetic in ``P`` over a fixed structure ``T``."""

    def __init__(self, T):
        self.T = T
        self.zero = PElement(0, T.zero)
        self.tau_p = PElement(1, T.zero)

    def contains(self, a):
        return (isinstance(a, PElement) and type(a.k) is int and a.k >= 0
                and self.T.contains(a.x) and a.x < self.T.tau)

    def check(self, *elements):
        for a in elements:
            if not self.contains(a):
                raise DomainError(f"{a} is not an element of P over {self.T!r}")

    def add(self, a, b):
        T = self.T
        y, z = a.x, b.x
        s = T.add(y, z)
        if s < T.tau:
            return PElement(a.k + b.k, s)
        carry = T.dm(y, T.tau_dotminus(z))
        if carry is None:
            raise DomainError(f"carry undefined in {a} + {b}")
        return PElement(a.k + b.k + 1, carry)

    def try_add(self, a, b):
        """``a + b``, or ``None`` when the carry is undefined (non-TOAG tables)."""
        if a is None or b is None:
            return None
        try:
            return self.add(a, b)
        except DomainError:
            return None

    def cmp(self, a, b):
        return Cmp.of((a.k, a.x), (b.k, b.x))

    def cancel_witness(self, a, b):
        """The ``c`` with ``a + c = b``; requires ``a <= b``."""
        if (a.k, a.x) > (b.k, b.x):
            raise DomainError(f"cancel witness needs a <= b, got {a} > {b}")
        T = self.T
        k, x, l, y = a.k, a.x, b.k, b.x
        if k == l or x <= y:
            m, z = l - k, T.dm(y, x)
        else:
            d = T.dm(x, y)
            m, z = l - k - 1, (None if d is None else T.tau_dotminus(d))
        if z is None:
            raise DomainError(f"no cancellation witness for {a} <= {b}")
        return PElement(m, z)

    def embed(self, x):
        if x == self.T.tau:
            return self.tau_p
        return PElement(0, x)

    def clamp(self, a):
        """``min(a, tau_P)``: the truncated addition induced on ``[0, tau_P]``."""
        return a if (a.k, a.x) < (1, self.T.zero) else self.tau_p

    def window(self, kmax):
        """All ``<k, x>`` with ``k <= kmax`` in increasing order (finite T only)."""
        xs = [x for x in self.T.elements() if x < self.T.tau]
        return [PElement(k, x) for k in range(kmax + 1) for x in xs]

    def sample(self, rng, kmax):
        T = self.T
        while True:
            x = T.sample(rng)
            if x < T.tau:
                return PElement(rng.randint(0, kmax), x)


def p_add(T, a, b):
    ext = Extension(T)
    ext.check(a, b)
    return ext.add(a, b)


def p_cmp(T, a, b):
    ext = Extension(T)
    ext.check(a, b)
    return ext.cmp(a, b)


def p_cancel_witness(T, a, b):
    ext = Extension(T)
    ext.check(a, b)
    return ext.cancel_witness(a, b)


def embed(T, x):
    if not T.contains(x):
        raise DomainError(f"{x!r} outside [0, tau] of {T!r}")
    return Extension(T).embed(x)


# Associativity of P splits by the carry pattern of (y,z), then x against
# the partial sum, and symmetrically (y,x) then z.  Labels are
# "S<situation>.<case of (y,x)>.<case of z with y+x>".
SITUATIONS = {(1, 1): 1, (1, 2): 2, (2, 1): 3, (2, 2): 4}
REACHABLE = frozenset({"S1.1.1", "S2.1.2", "S2.2.1", "S3.1.2", "S3.2.1", "S4.2.2"})


def _carry(T, y, z):
    s = T.add(y, z)
    if s < T.tau:
        return 1, s
    return 2, T.dm(y, T.tau_dotminus(z))


def associativity_situation(T, x, y, z):
    """Situation label of the triple, or ``"undefined"`` if a carry is undefined."""
    c_yz, r = _carry(T, y, z)
    c_yx, r3 = _carry(T, y, x)
    if r is None or r3 is None:
        return "undefined"
    c_x, r1 = _carry(T, x, r)
    c_z, r2 = _carry(T, z, r3)
    if r1 is None or r2 is None:
        return "undefined"
    return f"S{SITUATIONS[c_yz, c_x]}.{c_yx}.{c_z}"


@dataclass
class LawResult:
    law: str
    verdict: Verdict
    witness: tuple | None = None
    checked: int = 0

    @property
    def passed(self):
        return self.verdict is Verdict.PASS

    def render(self):
        line = f"LAW {self.law} {self.verdict.value}"
        if self.witness is not None:
            line += " witness=(" + ",".join(str(w) for w in self.witness) + ")"
        return line + f" checked={self.checked}"


@dataclass
class PLawReport:
    laws: list = field(default_factory=list)
    coverage: Counter = field(default_factory=Counter)
    exhaustive: bool = True
    seed: int = 0

    @property
    def passed(self):
        return all(r.verdict is Verdict.PASS for r in self.laws)

    def law(self, name):
        return next(r for r in self.laws if r.law == name)

    def render(self):
        lines = [r.render() for r in self.laws]
        for label in sorted(self.coverage):
            lines.append(f"SITUATION {label} count={self.coverage[label]}")
        return "\n".join(lines)


def _result(name, witness, checked):
    if witness is None:
        return LawResult(name, Verdict.PASS, None, checked)
    return LawResult(name, Verdict.FAIL, witness, checked)


def _monotonicity_violation(W, K):
    # W is sorted, so a <= b iff index(a) <= index(b)
    n = len(W)
    count = 0
    for i in range(n):
        Ki = K[i]
        for j in range(i, n):
            Kj = K[j]
            for l in range(n):
                kil = Ki[l]
                for m in range(l, n):
                    count += 1
                    if kil is None or Kj[m] is None or kil > Kj[m]:
                        return (W[i], W[j], W[l], W[m]), count
    return None, count


def _cancels(ext, a, b):
    try:
        c = ext.cancel_witness(a, b)
    except DomainError:
        return False
    return ext.contains(c) and ext.try_add(a, c) == b


def _exhaustive_laws(ext, kmax):
    T = ext.T
    W = ext.window(kmax)
    n = len(W)
    add = ext.try_add
    S = [[add(a, b) for b in W] for a in W]
    K = [[None if s is None else (s.k, s.x) for s in row] for row in S]
    laws = []

    wit = next(((W[i],) for i in range(n) if add(ext.zero, W[i]) != W[i]), None)
    laws.append(_result("identity", wit, n))

    wit = next(((W[i], W[j]) for i in range(n) for j in range(i, n)
                if S[i][j] is None or S[i][j] != S[j][i]), None)
    laws.append(_result("commutativity", wit, n * (n + 1) // 2))

    xs = [x for x in T.elements() if x < T.tau]
    labels = {(x, y, z): associativity_situation(T, x, y, z)
              for x in xs for y in xs for z in xs}
    coverage = Counter()
    wit = None
    for i, j, l in itertools.product(range(n), repeat=3):
        a, b, c = W[i], W[j], W[l]
        coverage[labels[a.x, b.x, c.x]] += 1
        if wit is None:
            left = add(a, S[j][l])
            if left is None or left != add(S[i][j], c):
                wit = (a, b, c)
    laws.append(_result("associativity", wit, n ** 3))

    wit, count = _monotonicity_violation(W, K)
    laws.append(_result("monotonicity", wit, count))

    wit = next(((W[i], W[j]) for i in range(n) for j in range(i, n)
                if not _cancels(ext, W[i], W[j])), None)
    laws.append(_result("cancellation", wit, n * (n + 1) // 2))

    wit = None
    for i in range(n):
        seen = {}
        for j in range(n):
            prev = seen.setdefault(K[i][j], j)
            if K[i][j] is None or prev != j:
                wit = (W[i], W[prev], W[j])
                break
        if wit:
            break
    laws.append(_result("cancellative", wit, n * n))
    return laws, coverage


def _sampled_laws(ext, kmax, samples, seed):
    T = ext.T
    rng = random.Random(f"{seed}:plaws")
    pool = [ext.sample(rng, kmax) for _ in range(512)] + [ext.zero, ext.tau_p]
    add = ext.try_add
    coverage = Counter()

    def first(arity, bad):
        for _ in range(samples):
            tup = [rng.choice(pool) for _ in range(arity)]
            if bad(*tup):
                return tuple(tup)
        return None

    def non_assoc(a, b, c):
        coverage[associativity_situation(T, a.x, b.x, c.x)] += 1
        left = add(a, add(b, c))
        return left is None or left != add(add(a, b), c)

    def non_monotone(a, b, c, d):
        a, b = sorted((a, b))
        c, d = sorted((c, d))
        left, right = add(a, c), add(b, d)
        return left is None or right is None or left > right

    def not_cancellative(a, c, d):
        return c != d and add(a, c) is not None and add(a, c) == add(a, d)

    checks = [
        ("identity", 1, lambda a: add(ext.zero, a) != a),
        ("commutativity", 2, lambda a, b: add(a, b) is None or add(a, b) != add(b, a)),
        ("associativity", 3, non_assoc),
        ("monotonicity", 4, non_monotone),
        ("cancellation", 2, lambda a, b: not _cancels(ext, *sorted((a, b)))),
        ("cancellative", 3, not_cancellative),
    ]
    laws = [_result(name, first(arity, bad), samples) for name, arity, bad in checks]
    return laws, coverage


def check_p_laws(T, kmax=3, samples=20_000, seed=0):
    """Verify that ``P`` is a cancellative commutative ordered monoid.

    Finite ``T``: every element with ``k <= kmax`` (associativity over all
    triples, monotonicity over all 4-tuples).  Infinite ``T``: seeded samples.
    The report also counts how often each associativity situation occurred.
    """
    ext = Extension(T)
    if T.is_finite:
        laws, coverage = _exhaustive_laws(ext, kmax)
    else:
        laws, coverage = _sampled_laws(ext, kmax, samples, seed)
    return PLawReport(laws, coverage, T.is_finite, seed)


@dataclass
class EmbeddingReport:
    verdict: Verdict
    witness: tuple | None
    checked: int
    exhaustive: bool
    seed: int

    @property
    def passed(self):
        return self.verdict is Verdict.PASS

    def render(self, T=None):
        fmt = T.fmt if T is not None else str
        line = f"EMBEDDING {self.verdict.value}"
        if self.witness is not None:
            line += " witness=(" + ",".join(fmt(w) for w in self.witness) + ")"
        return line + f" checked={self.checked} seed={self.seed}"


def verify_embedding(T, budget=None, samples=20_000, seed=0):
    """Check that ``x -> <0,x>`` (``tau -> <1,0>``) is an isomorphism onto ``[0, tau_P]``.

    Order: strictly increasing and onto.  Addition: the image of ``x + y``
    equals ``min(embed x + embed y, tau_P)``.
    """
    ext = Extension(T)
    checked = 0
    if T.is_finite:
        els = T.elements()
        images = [ext.embed(x) for x in els]
        for u, v, a, b in zip(els, els[1:], images, images[1:]):
            checked += 1
            if not (a.k, a.x) < (b.k, b.x):
                return EmbeddingReport(Verdict.FAIL, (u, v), checked, True, seed)
        expected = {PElement(0, x) for x in els if x < T.tau} | {ext.tau_p}
        if set(images) != expected:
            missing = sorted(expected - set(images))
            return EmbeddingReport(Verdict.FAIL, tuple(missing[:1]), checked, True, seed)
        pairs = itertools.product(els, repeat=2)
        total = len(els) ** 2
        exhaustive = True
    else:
        rng = random.Random(f"{seed}:embed")
        n = samples if budget is None else min(samples, budget)
        pool = [T.zero, T.tau] + [T.sample(rng) for _ in range(1024)]
        pairs = ((rng.choice(pool), rng.choice(pool)) for _ in range(n))
        total = n
        exhaustive = False
    if budget is not None and T.is_finite:
        pairs = itertools.islice(pairs, budget)
    count = 0
    for x, y in pairs:
        count += 1
        ex, ey = ext.embed(x), ext.embed(y)
        if (x < y) != ((ex.k, ex.x) < (ey.k, ey.x)):
            return EmbeddingReport(Verdict.FAIL, (x, y), checked + count, exhaustive, seed)
        sum_p = ext.try_add(ex, ey)
        if sum_p is None or ext.embed(T.add(x, y)) != ext.clamp(sum_p):
            return EmbeddingReport(Verdict.FAIL, (x, y), checked + count, exhaustive, seed)
    verdict = Verdict.PASS if count == total else Verdict.EXHAUSTED
    return EmbeddingReport(verdict, None, checked + count, exhaustive, seed)


class CompletionGroup:
    """The group of formal differences ``p - q`` of ``P``."""

    def __init__(self, T):
        self.ext = Extension(T)
        self.T = T
        self.zero = CompletionElement(self.ext.zero, self.ext.zero)

    def from_p(self, p):
        return CompletionElement(p, self.ext.zero)

    def element(self, pos, neg):
        self.ext.check(pos, neg)
        return CompletionElement(pos, neg)

    def add(self, a, b):
        add = self.ext.add
        return CompletionElement(add(a.pos, b.pos), add(a.neg, b.neg))

    def neg(self, a):
        return CompletionElement(a.neg, a.pos)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def cmp(self, a, b):
        add = self.ext.add
        return self.ext.cmp(add(a.pos, b.neg), add(b.pos, a.neg))

    def eq(self, a, b):
        return self.cmp(a, b) is Cmp.EQ

    def le(self, a, b):
        return self.cmp(a, b) is not Cmp.GT

    def lt(self, a, b):
        return self.cmp(a, b) is Cmp.LT

    def normalize(self, a):
        """The representative with one side zero."""
        ext = self.ext
        if ext.cmp(a.neg, a.pos) is not Cmp.GT:
            return CompletionElement(ext.cancel_witness(a.neg, a.pos), ext.zero)
        return CompletionElement(ext.zero, ext.cancel_witness(a.pos, a.neg))

    def is_nonnegative(self, a):
        return self.le(self.zero, a)


def complete_to_group(T):
    return CompletionGroup(T)
