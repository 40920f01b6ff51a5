"""Partitions, multipartitions, nodes, contents and residues.

Everything here is an immutable value; arithmetic is exact (``Fraction``).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence


class ConfigurationError(ValueError):
    """Parameters that make an operation ill-defined (wrong level, m on a wall, ...)."""


class OnWallError(ConfigurationError):
    """An order vector lies on a wall, so the node order is not total."""


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def check_modulus(e) -> None:
    if e is INFINITY:
        return
    if not isinstance(e, int) or isinstance(e, bool) or e < 2:
        raise ConfigurationError(f"modulus e must be an integer >= 2 or INFINITY, got {e!r}")


def parse_modulus(text: str):
    if text.strip().lower() in ("inf", "infinity", "oo", "∞"):
        return INFINITY
    e = int(text)
    check_modulus(e)
    return e


def to_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def as_charge(s: Iterable) -> tuple[int, ...]:
    """Coerce an integer charge vector, rejecting non-integral entries."""
    out = []
    for x in s:
        q = to_fraction(x)
        if q.denominator != 1:
            raise ConfigurationError(f"charge entries must be integers here, got {q}")
        out.append(int(q))
    return tuple(out)


def as_vector(m: Iterable) -> tuple[Fraction, ...]:
    return tuple(to_fraction(x) for x in m)


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers (zero parts are dropped)."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def part(self, a: int) -> int:
        """The a-th part (1-indexed), zero beyond the length."""
        return self.parts[a - 1] if 1 <= a <= len(self.parts) else 0

    def rank(self) -> int:
        return sum(self.parts)

    def transpose(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= b) for b in range(1, self.parts[0] + 1)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("-", "", "∅"):
            return cls()
        return cls(tuple(int(x) for x in text.split(".")))

    def __str__(self):
        return ".".join(map(str, self.parts)) if self.parts else "-"


EMPTY = Partition()


class Node(NamedTuple):
    """Box (row, col, comp) of a Young diagram; all three indices start at 1."""

    row: int
    col: int
    comp: int


@dataclass(frozen=True, order=True)
class LPartition:
    """An l-tuple of partitions."""

    components: tuple[Partition, ...]

    def __post_init__(self):
        comps = tuple(c if isinstance(c, Partition) else Partition(tuple(c)) for c in self.components)
        if not comps:
            raise ValueError("an l-partition needs level l >= 1")
        object.__setattr__(self, "components", comps)

    @classmethod
    def empty(cls, level: int) -> "LPartition":
        return cls((EMPTY,) * level)

    @classmethod
    def of(cls, *comps) -> "LPartition":
        """Build from dotted strings, Partitions or part sequences: ``LPartition.of("3.1", "2.2.1.1")``."""
        out = []
        for c in comps:
            if isinstance(c, str):
                out.append(Partition.parse(c))
            elif isinstance(c, Partition):
                out.append(c)
            else:
                out.append(Partition(tuple(c)))
        return cls(tuple(out))

    @classmethod
    def from_json(cls, data) -> "LPartition":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
            raise ValueError("an l-partition is a JSON array of arrays, e.g. [[3,1],[2]]")
        return cls(tuple(Partition(tuple(c)) for c in data))

    def to_json(self) -> list[list[int]]:
        return [list(c.parts) for c in self.components]

    @property
    def level(self) -> int:
        return len(self.components)

    def __getitem__(self, c: int) -> Partition:
        """Component c, 1-indexed as in the usual notation."""
        if not 1 <= c <= len(self.components):
            raise IndexError(f"component {c} out of range 1..{len(self.components)}")
        return self.components[c - 1]

    def rank(self) -> int:
        return sum(c.rank() for c in self.components)

    def contains(self, node: Node) -> bool:
        a, b, c = node
        return a >= 1 and b >= 1 and 1 <= c <= self.level and b <= self[c].part(a)

    def nodes(self) -> Iterator[Node]:
        for c, lam in enumerate(self.components, start=1):
            for a, p in enumerate(lam.parts, start=1):
                for b in range(1, p + 1):
                    yield Node(a, b, c)

    def add(self, node: Node) -> "LPartition":
        a, b, c = node
        parts = list(self[c].parts) + [0]
        if parts[a - 1] != b - 1 or (a > 1 and parts[a - 2] < b):
            raise ValueError(f"{node} is not addable to {self}")
        parts[a - 1] = b
        return self._replace(c, Partition(tuple(parts)))

    def remove(self, node: Node) -> "LPartition":
        a, b, c = node
        lam = self[c]
        if lam.part(a) != b or lam.part(a + 1) >= b:
            raise ValueError(f"{node} is not removable from {self}")
        parts = list(lam.parts)
        parts[a - 1] -= 1
        return self._replace(c, Partition(tuple(parts)))

    def _replace(self, c: int, lam: Partition) -> "LPartition":
        comps = list(self.components)
        comps[c - 1] = lam
        return LPartition(tuple(comps))

    def sort_key(self):
        return (self.rank(), json.dumps(self.to_json()))

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


@dataclass(frozen=True)
class Residue:
    """Class of an integer modulo e; for e = INFINITY the integer itself."""

    modulus: object
    value: int

    def __post_init__(self):
        check_modulus(self.modulus)
        if self.modulus is not INFINITY:
            object.__setattr__(self, "value", self.value % self.modulus)

    def __int__(self):
        return self.value


def _check_level(lp: LPartition, s: Sequence) -> None:
    if len(s) != lp.level:
        raise ConfigurationError(f"charge has length {len(s)} but the l-partition has level {lp.level}")


def content(node: Node, s: Sequence) -> Fraction:
    a, b, c = node
    if not 1 <= c <= len(s):
        raise ConfigurationError(f"component {c} out of range for a charge of length {len(s)}")
    return Fraction(b - a) + to_fraction(s[c - 1])


def residue(node: Node, s: Sequence, e) -> Residue:
    check_modulus(e)
    q = content(node, s)
    if q.denominator != 1:
        raise ConfigurationError("integer charges are required for residues mod e")
    return Residue(e, int(q))


def addable_all(lp: LPartition) -> list[Node]:
    out = []
    for c, lam in enumerate(lp.components, start=1):
        parts = lam.parts
        for a in range(1, len(parts) + 2):
            p = lam.part(a)
            if a == 1 or lam.part(a - 1) > p:
                out.append(Node(a, p + 1, c))
    return out


def removable_all(lp: LPartition) -> list[Node]:
    out = []
    for c, lam in enumerate(lp.components, start=1):
        for a, p in enumerate(lam.parts, start=1):
            if lam.part(a + 1) < p:
                out.append(Node(a, p, c))
    return out


def addable_nodes(lp: LPartition, s: Sequence, e, z) -> list[Node]:
    """Addable nodes of ``lp`` with residue ``z`` (a Residue or an int)."""
    _check_level(lp, s)
    target = z if isinstance(z, Residue) else Residue(e, z)
    if target.modulus != e:
        raise ConfigurationError(f"residue modulus {target.modulus} does not match e={e}")
    return [g for g in addable_all(lp) if residue(g, s, e) == target]


def removable_nodes(lp: LPartition, s: Sequence, e, z) -> list[Node]:
    _check_level(lp, s)
    target = z if isinstance(z, Residue) else Residue(e, z)
    if target.modulus != e:
        raise ConfigurationError(f"residue modulus {target.modulus} does not match e={e}")
    return [g for g in removable_all(lp) if residue(g, s, e) == target]


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse lexicographic order."""

    def gen(rem, cap):
        if rem == 0:
            yield ()
            return
        for p in range(min(rem, cap), 0, -1):
            for rest in gen(rem - p, p):
                yield (p,) + rest

    return tuple(Partition(t) for t in gen(n, n))


@lru_cache(maxsize=None)
def lpartitions(l: int, n: int) -> tuple[LPartition, ...]:
    """All l-partitions of rank n, sorted by their JSON form."""
    out = []

    def gen(k, rem, acc):
        if k == l - 1:
            for lam in partitions(rem):
                out.append(LPartition(acc + (lam,)))
            return
        for r in range(rem + 1):
            for lam in partitions(r):
                gen(k + 1, rem - r, acc + (lam,))

    gen(0, n, ())
    return tuple(sorted(out, key=LPartition.sort_key))


def lpartitions_upto(l: int, n: int) -> list[LPartition]:
    return [lp for k in range(n + 1) for lp in lpartitions(l, k)]
