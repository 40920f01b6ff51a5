"""The wall arrangement in order-parameter space and composed wall crossings."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    INFINITY,
    ConfigurationError,
    LPartition,
    OnWallError,
    as_charge,
    as_vector,
    check_modulus,
)
from .symbols import psi_single_wall_finite_e


@dataclass(frozen=True)
class Wall:
    """Hyperplane s_i - m_i - (s_j - m_j) = N*e (N is None when e is infinite)."""

    i: int
    j: int
    N: int | None
    s: tuple[int, ...]
    e: object

    def value(self, m: Sequence) -> Fraction:
        """Signed distance-like quantity; zero exactly on the wall."""
        i, j = self.i, self.j
        x = (self.s[i - 1] - Fraction(m[i - 1])) - (self.s[j - 1] - Fraction(m[j - 1]))
        return x if self.N is None else x - self.N * self.e

    def contains(self, m: Sequence) -> bool:
        return self.value(m) == 0

    @property
    def offset(self) -> int:
        """N*e + s_j - s_i: the value of m_i - m_j on the wall."""
        base = self.s[self.j - 1] - self.s[self.i - 1]
        return base if self.N is None else self.N * self.e + base

    def is_essential(self, n: int) -> bool:
        return abs(self.offset) <= n

    def label(self) -> str:
        return f"({self.i},{self.j})" if self.N is None else f"({self.i},{self.j},{self.N})"

    def equation(self) -> str:
        return f"m_{self.i} - m_{self.j} = {self.offset}"


@dataclass(frozen=True)
class ChamberSignature:
    walls: tuple[Wall, ...]
    signs: tuple[int, ...]

    def separating(self, other: "ChamberSignature") -> list[Wall]:
        if self.walls != other.walls:
            raise ValueError("signatures over different arrangements")
        return [w for w, a, b in zip(self.walls, self.signs, other.signs) if a != b]


def essential_walls(l: int, n: int, e, s) -> list[Wall]:
    """Walls m_{i,j,N} with i < j and |N*e + s_j - s_i| <= n."""
    check_modulus(e)
    s = as_charge(s)
    if len(s) != l:
        raise ConfigurationError(f"charge must have length l={l}")
    out = []
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            d = s[j - 1] - s[i - 1]
            if e is INFINITY:
                if abs(d) <= n:
                    out.append(Wall(i, j, None, s, e))
                continue
            lo = math.ceil(Fraction(-n - d, e))
            hi = math.floor(Fraction(n - d, e))
            out.extend(Wall(i, j, N, s, e) for N in range(lo, hi + 1))
    return out


def signature(m, walls: Sequence[Wall]) -> ChamberSignature:
    m = as_vector(m)
    signs = []
    for w in walls:
        v = w.value(m)
        if v == 0:
            raise OnWallError(f"m lies on the wall {w.label()}: {w.equation()}")
        signs.append(1 if v > 0 else -1)
    return ChamberSignature(tuple(walls), tuple(signs))


@dataclass(frozen=True)
class Crossing:
    wall: Wall
    t: Fraction
    side: int  # sign of wall.value on the departure side


def _odd_primes(k: int) -> list[int]:
    out, p = [], 3
    while len(out) < k:
        if all(p % q for q in range(3, int(p**0.5) + 1, 2)):
            out.append(p)
        p += 2
    return out


def _perturbation(l: int, flip: bool) -> tuple[Fraction, ...]:
    v = [Fraction(1)] + [Fraction(1, p) for p in _odd_primes(l)[1:l]]
    return tuple(reversed(v)) if flip else tuple(v)


def _raw_path(m, m2, walls):
    hits = []
    for w in walls:
        a, b = w.value(m), w.value(m2)
        if (a > 0) != (b > 0):
            hits.append(Crossing(w, a / (a - b), 1 if a > 0 else -1))
    hits.sort(key=lambda c: c.t)
    return hits


def _has_ties(path) -> bool:
    return any(x.t == y.t for x, y in zip(path, path[1:]))


def crossing_points(m, m2, walls: Sequence[Wall]):
    """Return (path, points); points[k] lies in the chamber entered before crossing k.

    When two walls are met at the same t, both endpoints are nudged inside their
    chambers until all crossing parameters are distinct.
    """
    m, m2 = as_vector(m), as_vector(m2)
    signature(m, walls)
    signature(m2, walls)
    path = _raw_path(m, m2, walls)
    if _has_ties(path):
        m, m2 = perturbed_endpoints(m, m2, walls)
        path = _raw_path(m, m2, walls)
    ts = [Fraction(0)] + [c.t for c in path] + [Fraction(1)]
    points = [_point(m, m2, (a + b) / 2) for a, b in zip(ts, ts[1:])]
    return path, points


def crossing_path(m, m2, walls: Sequence[Wall]) -> list[Crossing]:
    """Walls met by the segment m -> m2, ordered by the crossing parameter."""
    return crossing_points(m, m2, walls)[0]


def perturbed_endpoints(m, m2, walls):
    l = len(m)
    v, w = _perturbation(l, False), _perturbation(l, True)
    margin = min(min(abs(x.value(m)), abs(x.value(m2))) for x in walls)
    # each wall value moves by at most 2*eps, so signs survive
    eps = margin / 4
    for _ in range(64):
        a = tuple(x + eps * y for x, y in zip(m, v))
        b = tuple(x + eps * y for x, y in zip(m2, w))
        if not _has_ties(_raw_path(a, b, walls)):
            return a, b
        eps /= 3
    raise ConfigurationError("could not separate simultaneous wall crossings")


def _point(m, m2, t):
    return tuple(x + t * (y - x) for x, y in zip(m, m2))


def wall_cross(lp: LPartition, s, e, m, m2, n: int | None = None) -> LPartition:
    """Compose the single-wall isomorphisms along the segment from m to m2."""
    check_modulus(e)
    s = as_charge(s)
    if len(s) != lp.level:
        raise ConfigurationError("charge length must equal the level")
    n = lp.rank() if n is None else n
    walls = essential_walls(lp.level, n, e, s)
    path, points = crossing_points(m, m2, walls)
    out = lp
    for k, c in enumerate(path):
        wall = (c.wall.i, c.wall.j, c.wall.N)
        out = psi_single_wall_finite_e(out, s, e, points[k], points[k + 1], wall)
    return out


# ---------------------------------------------------------------- chambers


def _on_any_wall(diff: int, e, den: int) -> bool:
    # diff = den * (s_i - m_i - (s_j - m_j)); walls sit at multiples of e
    if e is INFINITY:
        return diff == 0
    return diff % (e * den) == 0


def chamber_samples(l: int, n: int, e, s, per_chamber: int = 1) -> list[tuple[ChamberSignature, list]]:
    """Sample points (exact rationals, m_1 = s_1) for every chamber of the essential arrangement.

    Points on any wall of the full (infinite) arrangement are skipped, so every
    sample is generic in the strong sense required by ``build_graph``. Wall
    offsets are integers, so every alcove of the full arrangement (hence every
    chamber) meets the lattice (1/l)Z^l; the lattice is refined by halving until
    each chamber holds ``per_chamber`` points.
    """
    s = as_charge(s)
    walls = essential_walls(l, n, e, s)
    if l == 1:
        m = tuple(Fraction(x) for x in s)
        return [(signature(m, walls), [m])]
    radius = (l - 1) * (max((abs(w.offset) for w in walls), default=0) + 2)
    coeffs = [(w.i - 1, w.j - 1, 0 if w.N is None else w.N * w.e) for w in walls]
    pairs = list(itertools.combinations(range(l), 2))
    den = l
    while True:
        found: dict[tuple, list] = {}
        span = range(-radius * den, radius * den + 1)
        for ys in itertools.product(span, repeat=l - 1):
            y = (0,) + ys
            # den * (s_i - m_i - (s_j - m_j) - N e) with m = s + y/den
            if any(_on_any_wall(y[j] - y[i], e, den) for i, j in pairs):
                continue
            vals = [y[j] - y[i] - ne * den for i, j, ne in coeffs]
            signs = tuple(1 if v > 0 else -1 for v in vals)
            found.setdefault(signs, []).append(y)
        if all(len(v) >= per_chamber for v in found.values()):
            break
        den *= 2
    out = []
    for signs, pts in sorted(found.items()):
        pts.sort(key=lambda y: (sum(map(abs, y)), y))
        ms = [tuple(sc + Fraction(yc, den) for sc, yc in zip(s, y)) for y in pts[:per_chamber]]
        out.append((ChamberSignature(tuple(walls), signs), ms))
    return out
