"""Presburger truncations: recognition and elementary invariants.

A TOAG with least positive element 1 is a truncation of a model of
Presburger arithmetic iff it is discretely ordered with every positive
element a successor, and every element can be written ``n*y + m`` with
``0 <= m < n`` (all sums truncated).  Two such truncations are
elementarily equivalent iff the penultimate elements ``tau - 1`` have the
same Presburger 1-type: whether ``tau - 1`` is a standard natural number,
and its residue modulo every ``n``.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .axioms import Verdict
from .errors import DomainError
from .groups import INTEGERS, LEX_QZ
from .structure import Truncation

DEFAULT_NMAX = 30
DEFAULT_SAMPLES = 500


@dataclass(frozen=True)
class TypeSignature:
    standard: bool
    value: int | None
    residues: dict = field(default_factory=dict)
    n_max: int = DEFAULT_NMAX

    def coherent(self):
        res = self.residues
        for n, r in res.items():
            if not (isinstance(n, int) and n >= 2 and 0 <= r < n):
                return False
            for m, s in res.items():
                if m % n == 0 and s % n != r:
                    return False
        if self.standard:
            if self.value is None or self.value < 0:
                return False
            return all(r == self.value % n for n, r in res.items())
        return self.value is None

    def render(self):
        value = "-" if self.value is None else str(self.value)
        residues = ",".join(f"{n}:{self.residues[n]}" for n in sorted(self.residues))
        return (f"standard={'true' if self.standard else 'false'} value={value} "
                f"residues={{{residues}}}")


@dataclass
class CheckResult:
    verdict: Verdict
    witness: tuple | None = None
    reason: str = ""
    checked: int = 0
    exhaustive: bool = True
    condition: int | None = None

    @property
    def passed(self):
        return self.verdict is Verdict.PASS

    def render(self, T=None):
        fmt = T.fmt if T is not None else str
        label = self.verdict.value
        if self.verdict is Verdict.PASS and not self.exhaustive:
            label += " (up to budget)"
        parts = [f"PRESBURGER {label}"]
        if self.condition is not None:
            parts.append(f"condition={self.condition}")
        if self.witness is not None:
            parts.append("witness=(" + ",".join(fmt(w) for w in self.witness) + ")")
        if self.reason:
            parts.append(f"reason={self.reason.replace(' ', '_')}")
        parts.append(f"checked={self.checked}")
        return " ".join(parts)


def _probe_elements(T, samples, seed):
    if T.is_finite:
        return T.elements()
    rng = random.Random(f"{seed}:presburger")
    xs = [T.zero, T.tau]
    if T.one is not None:
        xs.append(T.one)
        xs.append(T.predecessor(T.tau))
    xs.extend(T.sample(rng) for _ in range(samples))
    return xs


def is_discrete_with_successors(T, samples=DEFAULT_SAMPLES, seed=0):
    """Discreteness and the successor property.

    ``x`` counts as a successor when some ``y < x`` has ``y + 1 = x``; the
    identity ``tau + 1 = tau`` does not make ``tau`` its own successor.
    """
    if T.one is None:
        g = getattr(T, "group", None)
        if g is not None and g.one is None:
            # no least positive element: halve the least positive probe
            pos = [x for x in _probe_elements(T, samples, seed) if x > T.zero]
            e = min(pos)
            half, _ = g.divide_with_remainder(e, 2)
            return CheckResult(Verdict.FAIL, (e, half), "no least positive element",
                               len(pos), False, 1)
        return CheckResult(Verdict.FAIL, None, "no least positive element", 0,
                           T.is_finite, 1)
    one = T.one
    checked = 0
    for x in _probe_elements(T, samples, seed):
        if not x > T.zero:
            continue
        checked += 1
        y = T.predecessor(x)
        if y is None or not (T.contains(y) and y < x and T.add(y, one) == x):
            return CheckResult(Verdict.FAIL, (x,), "not a successor", checked,
                               T.is_finite, 1)
    return CheckResult(Verdict.PASS, None, "", checked, T.is_finite)


def _multiples_table(T, n):
    """Map each reachable value to its first ``(y, m)`` in (y, m) order."""
    ones = [T.n_times(T.one, m) for m in range(n)]
    sols = {}
    for y in T.elements():
        ny = T.n_times(y, n)
        for m in range(n):
            sols.setdefault(T.add(ny, ones[m]), (y, m))
    return sols


def _truncation_division(T, x, n):
    g = T.group
    if x < T.tau:
        # no saturation below tau, so this is Euclidean division in the group
        return g.divide_with_remainder(x, n)
    c = g.sub(T.tau, g.from_int(n - 1))
    if c <= g.zero:
        y = g.zero
    else:
        y = g.least_multiple_cover(c, n)
        if y is None:
            # the least y is not attained; fall back to the canonical tau + 0
            return T.tau, 0
    ny = g.scale(y, n)
    for m in range(n):
        if g.add(ny, g.from_int(m)) >= T.tau:
            return y, m
    raise AssertionError("unreachable: n*y + (n-1) >= tau by construction")


def euclidean_division(T, x, n):
    """``(y, m)`` with ``n*y + m = x`` in truncated arithmetic, ``0 <= m < n``.

    Ties (possible only at ``x = tau``) go to the smallest ``y``, then the
    smallest ``m``.  Returns ``None`` if no decomposition exists.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if T.one is None:
        raise DomainError(f"{T!r} has no least positive element")
    if not T.contains(x):
        raise DomainError(f"{x!r} outside [0, tau] of {T!r}")
    if T.is_finite:
        return _multiples_table(T, n).get(x)
    return _truncation_division(T, x, n)


def is_presburger_toag(T, n_max=DEFAULT_NMAX, samples=DEFAULT_SAMPLES, seed=0):
    disc = is_discrete_with_successors(T, samples, seed)
    if not disc.passed:
        return disc
    xs = _probe_elements(T, samples, seed)
    checked = disc.checked
    for n in range(1, n_max + 1):
        if T.is_finite:
            sols = _multiples_table(T, n)
            for x in xs:
                checked += 1
                if x not in sols:
                    return CheckResult(Verdict.FAIL, (x, n), "no euclidean division",
                                       checked, True, 2)
        else:
            for x in xs:
                checked += 1
                if _truncation_division(T, x, n) is None:
                    return CheckResult(Verdict.FAIL, (x, n), "no euclidean division",
                                       checked, False, 2)
    return CheckResult(Verdict.PASS, None, "", checked, T.is_finite)


def type_signature(T, n_max=DEFAULT_NMAX, samples=DEFAULT_SAMPLES, seed=0):
    """Standardness and residues of ``tau - 1``, for ``2 <= n <= n_max``."""
    check = is_presburger_toag(T, n_max, samples, seed)
    if not check.passed:
        raise DomainError(f"{T!r} is not a Presburger TOAG: {check.reason}")
    p = T.predecessor(T.tau)
    if T.is_finite:
        value = T.elements().index(p)
    else:
        value = T.group.standard_value(p)
    residues = {n: euclidean_division(T, p, n)[1] for n in range(2, n_max + 1)}
    return TypeSignature(value is not None, value, residues, n_max)


@dataclass
class Equivalence:
    equivalent: bool
    exact: bool
    reason: str
    left: TypeSignature
    right: TypeSignature

    def render(self):
        head = "EQUIVALENT" if self.equivalent else "NOT EQUIVALENT"
        if not self.exact:
            head += f" (up to n_max={min(self.left.n_max, self.right.n_max)})"
        return f"{head} reason={self.reason}"


def elementarily_equivalent(T1, T2, n_max=DEFAULT_NMAX):
    s1 = type_signature(T1, n_max)
    s2 = type_signature(T2, n_max)
    if s1.standard != s2.standard:
        return Equivalence(False, True, "standardness", s1, s2)
    if s1.standard:
        same = s1.value == s2.value
        return Equivalence(same, True, "value", s1, s2)
    for n in range(2, n_max + 1):
        if s1.residues[n] != s2.residues[n]:
            return Equivalence(False, True, f"residue_mod_{n}", s1, s2)
    return Equivalence(True, False, "residues", s1, s2)


def _crt(congruences):
    """Combine ``t = r (mod n)`` pairs; ``None`` if inconsistent."""
    t, mod = 0, 1
    for n, r in congruences:
        g = math.gcd(mod, n)
        if (r - t) % g:
            return None
        step = (r - t) // g * pow(mod // g, -1, n // g) % (n // g)
        t += mod * step
        mod = mod * n // g
        t %= mod
    return t, mod


def realize_signature(sig):
    """A bundled truncation whose ``tau - 1`` has the given type.

    Standard value ``v`` gives ``[0, v+1]`` over the integers.  A
    nonstandard signature gives ``tau = (1, s)`` over Q x Z where
    ``s - 1`` solves the residue congruences; the solution of least
    absolute value is used.
    """
    if not sig.coherent():
        raise DomainError("signature is not coherent")
    if sig.standard:
        return Truncation(INTEGERS, sig.value + 1)
    solved = _crt(sorted(sig.residues.items()))
    if solved is None:
        raise DomainError("unrealizable in bundled instances: residues have no common shift")
    t, mod = solved
    if 2 * t > mod:
        t -= mod
    return Truncation(LEX_QZ, (Fraction(1), t + 1))
