"""Concrete ordered abelian groups.

Four instances are bundled: the integers, the rationals, and the
lexicographic products Z x Z and Q x Z (first coordinate dominant).
Elements are plain Python values so that the native ``<`` and ``==``
realise the group order:

    Integers   int
    Rationals  Fraction
    LexZZ      (int, int)
    LexQZ      (Fraction, int)

Each group object supplies the arithmetic.  The module level functions
``group_add`` and friends check instance membership first and are the
public entry points; the methods on the groups skip the checks and are
what the hot loops elsewhere in the package call.
"""
from __future__ import annotations

import enum
import re
from fractions import Fraction

from .errors import DomainError, MixedInstanceError

DEFAULT_BOUND = 100


class Cmp(enum.Enum):
    LT = -1
    EQ = 0
    GT = 1

    @classmethod
    def of(cls, a, b):
        if a < b:
            return cls.LT
        if a == b:
            return cls.EQ
        return cls.GT


def _is_int(v):
    return type(v) is int


def _is_frac(v):
    return type(v) is Fraction


def _ceil_div(a, n):
    return -((-a) // n)


def format_value(v):
    if isinstance(v, tuple):
        return "(" + ",".join(format_value(c) for c in v) + ")"
    return str(v)


class OrderedGroup:
    """Interface shared by the bundled groups."""

    name = "?"
    zero = None
    one = None  # least positive element, if there is one
    is_z_group = False

    def contains(self, a):
        raise NotImplementedError

    def element(self, *args):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def scale(self, a, n):
        """Return ``n * a`` for an integer ``n``."""
        raise NotImplementedError

    def from_int(self, n):
        """Return ``n * 1``; only meaningful when the group has a 1."""
        return self.scale(self.one, n)

    def divide_with_remainder(self, a, n):
        raise NotImplementedError

    def least_multiple_cover(self, c, n):
        """Least ``y`` with ``n * y >= c``, or ``None`` if there is no least one."""
        raise NotImplementedError

    def standard_value(self, a):
        """``m`` if ``a == m * 1`` for a natural number ``m``, else ``None``."""
        raise NotImplementedError

    def interval(self, hi):
        """All elements of ``[0, hi]`` as a list, or ``None`` if infinite."""
        raise NotImplementedError

    def sample(self, rng, hi, bound=DEFAULT_BOUND):
        """A random element of ``[0, hi]``."""
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def format(self, a):
        return format_value(a)

    def __repr__(self):
        return self.name


class _Integers(OrderedGroup):
    name = "Integers"
    zero = 0
    one = 1
    is_z_group = True

    def contains(self, a):
        return _is_int(a)

    def element(self, a):
        return int(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def scale(self, a, n):
        return n * a

    def divide_with_remainder(self, a, n):
        q, r = divmod(a, n)
        return q, r

    def least_multiple_cover(self, c, n):
        return _ceil_div(c, n)

    def standard_value(self, a):
        return a if a >= 0 else None

    def interval(self, hi):
        return list(range(hi + 1))

    def sample(self, rng, hi, bound=DEFAULT_BOUND):
        return rng.randint(0, hi)

    def parse(self, text):
        return int(text.strip())


class _Rationals(OrderedGroup):
    name = "Rationals"
    zero = Fraction(0)
    one = None

    def contains(self, a):
        return _is_frac(a)

    def element(self, a, b=1):
        return Fraction(a, b) if not isinstance(a, str) else Fraction(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def scale(self, a, n):
        return n * a

    def from_int(self, n):
        return Fraction(n)

    def divide_with_remainder(self, a, n):
        return a / n, 0

    def least_multiple_cover(self, c, n):
        return c / n

    def standard_value(self, a):
        return None

    def interval(self, hi):
        return None

    def sample(self, rng, hi, bound=DEFAULT_BOUND):
        den = rng.randint(1, bound)
        return hi * Fraction(rng.randint(0, den), den)

    def parse(self, text):
        return Fraction(text.strip())


class _Lex(OrderedGroup):
    """Lexicographic product with an integer second coordinate."""

    one = None

    def _first(self, v):
        raise NotImplementedError

    def contains(self, a):
        return (type(a) is tuple and len(a) == 2 and self._first_ok(a[0])
                and _is_int(a[1]))

    def element(self, a, b):
        return (self._first(a), int(b))

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def sub(self, a, b):
        return (a[0] - b[0], a[1] - b[1])

    def scale(self, a, n):
        return (n * a[0], n * a[1])

    def standard_value(self, a):
        if a[0] == 0 and a[1] >= 0:
            return a[1]
        return None

    def interval(self, hi):
        if hi[0] != 0:
            return None
        return [(self.zero[0], b) for b in range(hi[1] + 1)]

    def _sample_first(self, rng, hi0, bound):
        raise NotImplementedError

    def sample(self, rng, hi, bound=DEFAULT_BOUND):
        h0, h1 = hi
        if h0 == 0:
            return (self.zero[0], rng.randint(0, h1))
        roll = rng.random()
        if roll < 0.25:
            a = self.zero[0]
        elif roll < 0.5:
            a = h0
        else:
            a = self._sample_first(rng, h0, bound)
        if a == 0:
            return (a, rng.randint(0, bound))
        if a == h0:
            return (a, rng.randint(h1 - bound, h1))
        return (a, rng.randint(-bound, bound))

    def parse(self, text):
        m = re.fullmatch(r"\s*\(\s*([^,()]+)\s*,\s*([^,()]+)\s*\)\s*", text)
        if not m:
            raise ValueError(f"expected a pair '(a,b)', got {text!r}")
        return self.element(m.group(1).strip(), m.group(2).strip())


class _LexZZ(_Lex):
    name = "LexZZ"
    zero = (0, 0)
    one = (0, 1)

    def _first(self, v):
        return int(v)

    def _first_ok(self, v):
        return _is_int(v)

    def divide_with_remainder(self, a, n):
        if a[0] % n:
            return None
        r = a[1] % n
        return (a[0] // n, (a[1] - r) // n), r

    def least_multiple_cover(self, c, n):
        if c[0] % n:
            # the first coordinate must round up, leaving the second unbounded below
            return None
        return (c[0] // n, _ceil_div(c[1], n))

    def _sample_first(self, rng, hi0, bound):
        return rng.randint(0, hi0)


class _LexQZ(_Lex):
    name = "LexQZ"
    zero = (Fraction(0), 0)
    one = (Fraction(0), 1)
    is_z_group = True

    def _first(self, v):
        return Fraction(v)

    def _first_ok(self, v):
        return _is_frac(v)

    def divide_with_remainder(self, a, n):
        r = a[1] % n
        return (a[0] / n, (a[1] - r) // n), r

    def least_multiple_cover(self, c, n):
        return (c[0] / n, _ceil_div(c[1], n))

    def _sample_first(self, rng, hi0, bound):
        den = rng.randint(1, bound)
        return hi0 * Fraction(rng.randint(0, den), den)


INTEGERS = _Integers()
RATIONALS = _Rationals()
LEX_ZZ = _LexZZ()
LEX_QZ = _LexQZ()

GROUPS = {g.name: g for g in (INTEGERS, RATIONALS, LEX_ZZ, LEX_QZ)}


def _check(g, *elements):
    for a in elements:
        if not g.contains(a):
            raise MixedInstanceError(f"{a!r} is not an element of {g.name}")


def group_add(g, a, b):
    _check(g, a, b)
    return g.add(a, b)


def group_sub(g, a, b):
    _check(g, a, b)
    return g.sub(a, b)


def group_cmp(g, a, b):
    _check(g, a, b)
    return Cmp.of(a, b)


def divide_with_remainder(g, a, n):
    """Write ``a = n*q + r`` with ``0 <= r < n``, smallest ``r`` first.

    Returns ``(q, r)`` or ``None`` when no such decomposition exists
    (e.g. in Z x Z when ``n`` does not divide the first coordinate).
    """
    _check(g, a)
    if not isinstance(n, int) or n <= 0:
        raise DomainError(f"divisor must be a positive integer, got {n!r}")
    return g.divide_with_remainder(a, n)

