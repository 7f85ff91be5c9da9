"""The truncated valuation on Z/p^k.

For ``x`` in Z/p^k the value is the p-adic valuation of a representative,
capped at ``k`` (so the zero class has value ``k``).  Values live in the
TOAG ``[0, k]`` and satisfy

    v(x + y) >= min(v(x), v(y))
    v(x * y)  = min(k, v(x) + v(y))
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .axioms import Verdict
from .errors import DomainError
from .groups import INTEGERS
from .structure import Truncation


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class ResidueRing:
    p: int
    k: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise DomainError(f"p must be prime, got {self.p}")
        if self.k < 1:
            raise DomainError(f"k must be positive, got {self.k}")

    @property
    def modulus(self):
        return self.p ** self.k


def truncated_valuation(R, x):
    x %= R.modulus
    if x == 0:
        return R.k
    v = 0
    while x % R.p == 0:
        x //= R.p
        v += 1
    return v


def value_toag(R):
    return Truncation(INTEGERS, R.k)


@dataclass
class ValuationReport:
    ring: ResidueRing
    law: str
    verdict: Verdict
    witness: tuple | None
    pairs: int

    @property
    def passed(self):
        return self.verdict is Verdict.PASS

    def render(self):
        line = f"VALUATION p={self.ring.p} k={self.ring.k} law={self.law} {self.verdict.value}"
        if self.witness is not None:
            line += f" witness=({self.witness[0]},{self.witness[1]})"
        return line + f" pairs={self.pairs}"


def check_valuation_laws(R):
    """Exhaustively check both laws over all pairs of Z/p^k."""
    M, k = R.modulus, R.k
    v = np.array([truncated_valuation(R, x) for x in range(M)], dtype=np.int64)
    ys = np.arange(M, dtype=np.int64)
    ultra = mult = None
    for x in range(M):
        if ultra is None:
            bad = v[(x + ys) % M] < np.minimum(v[x], v)
            if bad.any():
                ultra = (x, int(np.argmax(bad)))
        if mult is None:
            bad = v[(x * ys) % M] != np.minimum(v[x] + v, k)
            if bad.any():
                mult = (x, int(np.argmax(bad)))
    pairs = M * M
    return [
        ValuationReport(R, "ultrametric", Verdict.FAIL if ultra else Verdict.PASS, ultra, pairs),
        ValuationReport(R, "multiplicative", Verdict.FAIL if mult else Verdict.PASS, mult, pairs),
    ]
