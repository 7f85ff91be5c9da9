"""Truncated ordered abelian groups.

A TOAG is a linear order ``[0, tau]`` with a truncated addition.  Two
backings are provided:

* :class:`Truncation` - the segment ``[0, tau]`` of a bundled group with
  ``x + y = min(x (+) y, tau)``;
* :class:`FiniteTable` - an explicit addition table on ``{0, ..., N}``
  with ``tau = N``.

Elements are the raw group values (or table indices), so Python's
comparison operators give the order in both cases.
"""
from __future__ import annotations

import enum
from pathlib import Path

from .errors import DomainError, TableFormatError
from .groups import GROUPS, INTEGERS, Cmp, format_value


class Case(enum.Enum):
    CASE1 = 1  # y + z < tau
    CASE2 = 2  # y + z = tau


class TruncStructure:
    tau = None
    zero = None
    one = None  # least positive element, if any
    is_finite = False

    def add(self, x, y):
        raise NotImplementedError

    def contains(self, x):
        raise NotImplementedError

    def elements(self):
        """All elements in increasing order (finite structures only)."""
        raise NotImplementedError

    def sample(self, rng):
        raise NotImplementedError

    def dm(self, y, x):
        """``y -. x``, or ``None`` where it is undefined."""
        raise NotImplementedError

    def tau_dotminus(self, x):
        raise NotImplementedError

    def predecessor(self, x):
        """The ``y < x`` with ``y + 1 = x``, or ``None``."""
        raise NotImplementedError

    def fmt(self, x):
        return format_value(x)

    def dotminus(self, y, x):
        """The unique ``z`` with ``x + z = y``; requires ``x <= y < tau``."""
        if not (self.contains(x) and self.contains(y)):
            raise DomainError(f"dotminus arguments outside [0, tau]: {y!r}, {x!r}")
        if not x <= y < self.tau:
            raise DomainError(
                f"dotminus needs x <= y < tau, got y={self.fmt(y)} x={self.fmt(x)}")
        z = self.dm(y, x)
        if z is None:
            raise DomainError(
                f"no unique z with {self.fmt(x)} + z = {self.fmt(y)}")
        return z

    def case_of(self, y, z):
        tau = self.tau
        if y == tau or z == tau:
            raise DomainError("case_of is defined on [0, tau) only")
        return Case.CASE1 if self.add(y, z) < tau else Case.CASE2

    def cmp(self, x, y):
        return Cmp.of(x, y)

    def n_times(self, y, n):
        """``y + ... + y`` (n summands, truncated), ``0`` for ``n = 0``."""
        acc = self.zero
        for _ in range(n):
            acc = self.add(acc, y)
        return acc


class Truncation(TruncStructure):
    def __init__(self, group, tau):
        if not group.contains(tau):
            raise DomainError(f"tau={tau!r} is not an element of {group.name}")
        if not tau > group.zero:
            raise DomainError(f"tau must be positive, got {format_value(tau)}")
        self.group = group
        self.tau = tau
        self.zero = group.zero
        one = group.one
        self.one = one if one is not None and one <= tau else None
        self._elements = group.interval(tau)
        self.is_finite = self._elements is not None
        self._gadd = group.add
        self._gsub = group.sub

    def __repr__(self):
        return f"Truncation({self.group.name}, tau={format_value(self.tau)})"

    def __eq__(self, other):
        return (isinstance(other, Truncation) and other.group is self.group
                and other.tau == self.tau)

    def __hash__(self):
        return hash((self.group.name, self.tau))

    def add(self, x, y):
        s = self._gadd(x, y)
        return s if s < self.tau else self.tau

    def contains(self, x):
        return self.group.contains(x) and self.zero <= x <= self.tau

    def elements(self):
        if self._elements is None:
            raise DomainError(f"{self!r} is infinite")
        return list(self._elements)

    def sample(self, rng):
        return self.group.sample(rng, self.tau)

    def dm(self, y, x):
        if not x <= y < self.tau:
            return None
        return self._gsub(y, x)

    def tau_dotminus(self, x):
        return self._gsub(self.tau, x)

    def predecessor(self, x):
        if self.one is None or x <= self.zero:
            return None
        return self._gsub(x, self.one)


class FiniteTable(TruncStructure):
    """Addition table on ``{0, ..., N}``; validated against Axioms 1-4."""

    is_finite = True

    def __init__(self, table, validate=True):
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        n = len(self.table) - 1
        if n < 1:
            raise TableFormatError("a TOAG table needs N >= 1")
        self.n = n
        self.tau = n
        self.zero = 0
        self.one = 1
        if validate:
            _validate_table(self.table)
        t = self.table
        self._tdm = tuple(next(z for z in range(n + 1) if t[x][z] == n)
                          for x in range(n)) + (0,)
        sols = {}
        for x in range(n + 1):
            for z in range(n + 1):
                y = t[x][z]
                if y < n:
                    sols.setdefault((x, y), []).append(z)
        self._dm = {k: v[0] for k, v in sols.items() if len(v) == 1}

    def __repr__(self):
        return f"FiniteTable(N={self.n})"

    def __eq__(self, other):
        return isinstance(other, FiniteTable) and other.table == self.table

    def __hash__(self):
        return hash(self.table)

    def add(self, x, y):
        return self.table[x][y]

    def contains(self, x):
        return type(x) is int and 0 <= x <= self.n

    def elements(self):
        return list(range(self.n + 1))

    def sample(self, rng):
        return rng.randint(0, self.n)

    def dm(self, y, x):
        if not x <= y < self.n:
            return None
        return self._dm.get((x, y))

    def tau_dotminus(self, x):
        return self._tdm[x]

    def predecessor(self, x):
        for y in range(x):
            if self.table[y][1] == x:
                return y
        return None

    def to_text(self):
        return dump_table(self)


def make_truncation(group, tau):
    return Truncation(group, tau)


def trunc_add(T, x, y):
    if not (T.contains(x) and T.contains(y)):
        raise DomainError(f"arguments outside [0, tau] of {T!r}")
    return T.add(x, y)


def dotminus(T, y, x):
    return T.dotminus(y, x)


def tau_dotminus(T, x):
    if not T.contains(x):
        raise DomainError(f"{x!r} outside [0, tau] of {T!r}")
    return T.tau_dotminus(x)


def case_of(T, y, z):
    return T.case_of(y, z)


def _validate_table(t):
    n = len(t) - 1
    for i, row in enumerate(t):
        if len(row) != n + 1:
            raise TableFormatError(
                f"row {i} has {len(row)} entries, expected {n + 1}")
        for j, v in enumerate(row):
            if not 0 <= v <= n:
                raise TableFormatError(
                    f"entry [{i}][{j}]={v} outside 0..{n}")
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            if t[i][j] != t[j][i]:
                raise TableFormatError(
                    f"Axiom 1 (commutativity) fails at ({i},{j})",
                    axiom=1, witness=(i, j))
    for x in range(n + 1):
        if t[x][0] != x:
            raise TableFormatError(
                f"Axiom 2 (x+0=x) fails at x={x}", axiom=2, witness=(x,))
    for x in range(n + 1):
        if t[x][n] != n:
            raise TableFormatError(
                f"Axiom 3 (x+tau=tau) fails at x={x}", axiom=3, witness=(x,))
    # pointwise monotonicity in each argument is equivalent to Axiom 4
    for i in range(n + 1):
        for j in range(n):
            if t[i][j] > t[i][j + 1]:
                raise TableFormatError(
                    f"Axiom 4 (monotonicity) fails: {i}+{j} > {i}+{j + 1}",
                    axiom=4, witness=(i, j, i, j + 1))


def load_finite_table(text):
    """Parse a ``TOAG1`` document into a validated :class:`FiniteTable`."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or lines[0] != "TOAG1":
        raise TableFormatError("missing 'TOAG1' header")
    if len(lines) < 2:
        raise TableFormatError("missing 'n <N>' line")
    parts = lines[1].split()
    if len(parts) != 2 or parts[0] != "n":
        raise TableFormatError(f"expected 'n <N>', got {lines[1]!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise TableFormatError(f"bad size {parts[1]!r}") from None
    if n < 1:
        raise TableFormatError(f"N must be >= 1, got {n}")
    rows = lines[2:]
    if len(rows) != n + 1:
        raise TableFormatError(f"expected {n + 1} table rows, got {len(rows)}")
    try:
        table = [[int(v) for v in row.split()] for row in rows]
    except ValueError as exc:
        raise TableFormatError(f"non-integer table entry: {exc}") from None
    return FiniteTable(table)


def dump_table(T, comment=None):
    out = ["TOAG1"]
    if comment:
        out.append(f"# {comment}")
    out.append(f"n {T.n}")
    out.extend(" ".join(str(v) for v in row) for row in T.table)
    return "\n".join(out) + "\n"


def saturating_table(n):
    """The table of ``min(x + y, n)`` on ``{0, ..., n}``."""
    return FiniteTable([[min(x + y, n) for y in range(n + 1)]
                        for x in range(n + 1)])


def table_of(T):
    """Tabulate a finite structure as a :class:`FiniteTable`."""
    els = T.elements()
    index = {x: i for i, x in enumerate(els)}
    return FiniteTable([[index[T.add(x, y)] for y in els] for x in els])


def integer_truncation(tau):
    return Truncation(INTEGERS, tau)


_BUILTIN = {"Z": "Integers", "Q": "Rationals", "ZZ": "LexZZ", "QZ": "LexQZ"}


def parse_structure(text):
    """Build a structure from ``Z:tau=7``, ``QZ:tau=(1/2,3)``, ... or a TOAG1 path."""
    head, sep, rest = text.partition(":")
    if sep and head in _BUILTIN:
        key, eq, value = rest.partition("=")
        if key.strip() != "tau" or not eq:
            raise ValueError(f"expected '{head}:tau=<value>', got {text!r}")
        g = GROUPS[_BUILTIN[head]]
        try:
            tau = g.parse(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad tau for {g.name}: {value!r} ({exc})") from None
        return Truncation(g, tau)
    path = Path(text)
    if not path.is_file():
        raise ValueError(f"{text!r} is neither a builtin structure nor a readable file")
    return load_finite_table(path.read_text())
