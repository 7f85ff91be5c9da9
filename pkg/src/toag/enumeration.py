"""Exhaustive search for finite TOAG tables.

Tables live on ``{0, ..., N}`` with ``tau = N``.  Row 0 is the identity
and row N is constantly N, so only the upper triangle of
``[1, N-1] x [1, N-1]`` is free.  Entries are filled in row-major order
with ascending values, which makes the emitted tables come out in
lexicographic order of their flattened upper triangle.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .axioms import ALL_AXIOMS, first_failure
from .errors import DomainError
from .structure import FiniteTable

MAX_SIZE = 5
DEFAULT_BUDGET = 2_000_000
STRUCTURAL = frozenset({1, 2, 3, 4})


@dataclass(frozen=True)
class SearchSpec:
    size: int
    require: frozenset = ALL_AXIOMS
    negate: frozenset = frozenset()
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        object.__setattr__(self, "require", frozenset(self.require))
        object.__setattr__(self, "negate", frozenset(self.negate))
        if not 1 <= self.size <= MAX_SIZE:
            raise DomainError(f"size must be in 1..{MAX_SIZE}, got {self.size}")
        bad = (self.require | self.negate) - ALL_AXIOMS
        if bad:
            raise DomainError(f"unknown axiom ids {sorted(bad)}")
        if self.require & self.negate:
            raise DomainError(
                f"axioms both required and negated: {sorted(self.require & self.negate)}")
        if self.negate & STRUCTURAL:
            raise DomainError("axioms 1-4 are built into the search space and cannot be negated")
        if self.budget < 1:
            raise DomainError("budget must be positive")


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    exhausted: bool = False


@dataclass
class SearchResult:
    tables: list = field(default_factory=list)
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def exhausted(self):
        return self.stats.exhausted


class _BudgetExceeded(Exception):
    pass


def _assoc_conflict(t, n):
    rng = range(n + 1)
    for a in rng:
        ta = t[a]
        for b in rng:
            ab = ta[b]
            if ab is None:
                continue
            tab = t[ab]
            tb = t[b]
            for c in rng:
                left = tab[c]
                if left is None:
                    continue
                bc = tb[c]
                if bc is None:
                    continue
                right = ta[bc]
                if right is not None and right != left:
                    return True
    return False


def enumerate_toags(spec):
    """All tables on ``{0..N}`` meeting ``spec.require`` and failing ``spec.negate``.

    Axioms 1-4 hold by construction.  Associativity (5) and cancellation
    below tau (6) are used for pruning when required; every other axiom is
    checked on complete tables.
    """
    n = spec.size
    t = [[None] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        t[0][i] = t[i][0] = i
        t[n][i] = t[i][n] = n
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]
    prune_assoc = 5 in spec.require
    strict = 6 in spec.require
    leaf_require = sorted(spec.require - STRUCTURAL)
    leaf_negate = sorted(spec.negate)
    result = SearchResult()
    stats = result.stats

    def leaf():
        stats.leaves += 1
        T = FiniteTable([row[:] for row in t], validate=False)
        for a in leaf_require:
            if first_failure(T, a) is not None:
                return
        for a in leaf_negate:
            if first_failure(T, a) is None:
                return
        result.tables.append(T)

    def fill(c):
        stats.nodes += 1
        if stats.nodes > spec.budget:
            raise _BudgetExceeded
        if c == len(cells):
            leaf()
            return
        i, j = cells[c]
        lo = max(t[i][j - 1], t[i - 1][j])
        if strict and lo < n:
            lo += 1
        for v in range(lo, n + 1):
            t[i][j] = t[j][i] = v
            if prune_assoc and _assoc_conflict(t, n):
                continue
            fill(c + 1)
        t[i][j] = t[j][i] = None

    try:
        fill(0)
    except _BudgetExceeded:
        stats.exhausted = True
    return result


@dataclass
class IndependenceEntry:
    axiom: int
    size_max: int
    witnesses: list = field(default_factory=list)  # (N, FiniteTable)
    exhausted: bool = False

    def render(self):
        if self.witnesses:
            sizes = sorted({n for n, _ in self.witnesses})
            head = (f"INDEPENDENCE {self.axiom} witness sizes={','.join(map(str, sizes))} "
                    f"tables={len(self.witnesses)}")
        elif self.exhausted:
            head = f"INDEPENDENCE {self.axiom} EXHAUSTED-BUDGET up to N={self.size_max}"
        else:
            head = f"INDEPENDENCE {self.axiom} none found up to N={self.size_max}"
        return head


def independence_report(size_max, budget=DEFAULT_BUDGET, ids=range(10, 17)):
    """Search for tables satisfying every axiom except one, and failing that one."""
    ids = list(ids)
    for a in ids:
        if a not in range(10, 17):
            raise DomainError(f"independence ids must lie in 10..16, got {a!r}")
    if not 1 <= size_max <= MAX_SIZE:
        raise DomainError(f"size_max must be in 1..{MAX_SIZE}")
    report = {}
    for a in ids:
        entry = IndependenceEntry(a, size_max)
        for n in range(1, size_max + 1):
            res = enumerate_toags(SearchSpec(n, ALL_AXIOMS - {a}, {a}, budget))
            entry.witnesses.extend((n, T) for T in res.tables)
            entry.exhausted |= res.exhausted
        report[a] = entry
    return report
