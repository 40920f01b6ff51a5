"""Rational Cherednik parameters (kappa, s) and their translation to crystal data."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .core import ConfigurationError, LPartition, Node, as_vector, to_fraction
from .crystal import CherednikOrder, CrystalGraph, build_graph_colored
from .walls import essential_walls, signature, wall_cross


@dataclass(frozen=True)
class CherednikParams:
    """kappa = r/e in lowest terms and a rational charge with r*s_j integral.

    ``kappa`` may be negative only as the image of ``sharp_params``; every
    crystal computation requires kappa > 0.
    """

    kappa: Fraction
    s: tuple[Fraction, ...]

    def __post_init__(self):
        kappa = to_fraction(self.kappa)
        s = as_vector(self.s)
        if kappa == 0:
            raise ConfigurationError("kappa must be nonzero")
        if not s:
            raise ConfigurationError("the charge must have at least one entry")
        r = abs(kappa.numerator)
        for x in s:
            if (r * x).denominator != 1:
                raise ConfigurationError(f"r*s_j must be an integer (r={r}, s_j={x})")
        object.__setattr__(self, "kappa", kappa)
        object.__setattr__(self, "s", s)

    @property
    def r(self) -> int:
        return self.kappa.numerator

    @property
    def e(self) -> int:
        return self.kappa.denominator

    @property
    def level(self) -> int:
        return len(self.s)

    @classmethod
    def from_json(cls, data) -> "CherednikParams":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(Fraction(str(data["kappa"])), tuple(Fraction(str(x)) for x in data["s"]))

    def to_json(self) -> dict:
        return {"kappa": str(self.kappa), "s": [str(x) for x in self.s]}


def _positive(p: CherednikParams) -> None:
    if p.kappa <= 0:
        raise ConfigurationError("kappa must be positive here; conjugate by # first")


@dataclass(frozen=True)
class CherResidue:
    """A class in Q / (e/r)Z, stored by its representative in [0, e/r)."""

    value: Fraction
    modulus: Fraction

    def __post_init__(self):
        mod = Fraction(self.modulus)
        if mod <= 0:
            raise ConfigurationError("modulus must be positive")
        v = Fraction(self.value)
        v -= mod * math.floor(v / mod)
        object.__setattr__(self, "value", v)
        object.__setattr__(self, "modulus", mod)

    def __neg__(self) -> "CherResidue":
        return CherResidue(-self.value, self.modulus)

    def __str__(self):
        return f"{self.value} mod {self.modulus}"


class CrystalData(NamedTuple):
    c: tuple[int, ...]
    d: tuple[int, ...]
    m: tuple[Fraction, ...]
    h: tuple[Fraction, ...]


def derive_crystal_data(p: CherednikParams) -> CrystalData:
    """r*s_j = e*d_j + r*c_j with 0 <= c_j < e;  m_j = s_j - j*e/(r*l);  h_j = kappa*m_j."""
    _positive(p)
    r, e, l = p.r, p.e, p.level
    r_inv = pow(r, -1, e)
    c, d = [], []
    for x in p.s:
        a = int(r * x)
        cj = (a * r_inv) % e
        c.append(cj)
        d.append((a - r * cj) // e)
    m = tuple(x - Fraction(j * e, r * l) for j, x in enumerate(p.s, start=1))
    h = tuple(p.kappa * x for x in m)
    return CrystalData(tuple(c), tuple(d), m, h)


def cher_residue(node: Node, p: CherednikParams) -> CherResidue:
    a, b, c = node
    return CherResidue(b - a + p.s[c - 1], 1 / abs(p.kappa))


def psi_color_map(p: CherednikParams) -> dict[int, CherResidue]:
    """i mod e  ->  i mod kappa^{-1}Z."""
    _positive(p)
    return {i: CherResidue(i, 1 / p.kappa) for i in range(p.e)}


def index_set(p: CherednikParams) -> set[CherResidue]:
    """I_s: the classes x + s_j + kappa^{-1}Z, x an integer."""
    mod = 1 / abs(p.kappa)
    # x ranges over one period of Z / eZ, which covers Z + s_j modulo e/r
    return {CherResidue(x + sj, mod) for sj in set(p.s) for x in range(p.e)}


def cherednik_order_graph(l: int, n: int, p: CherednikParams) -> CrystalGraph:
    if p.level != l:
        raise ConfigurationError(f"charge must have length l={l}")
    order = CherednikOrder(p.kappa, p.s)
    return build_graph_colored(l, n, lambda g: cher_residue(g, p), order, e=p.e, s=p.s)


# ---------------------------------------------------------------- walls


def essential_wall_test(p: CherednikParams, n: int, i: int, j: int, m: Sequence | None = None):
    """Definition form: an integer a with |a| < n, m_i - m_j = a, s_i - s_j - a in kappa^{-1}Z.

    ``m`` defaults to the vector of ``derive_crystal_data``; it may be overridden
    to probe the definition away from that point. Returns (bool, a or None).
    """
    _check_pair(p, i, j)
    m = derive_crystal_data(p).m if m is None else as_vector(m)
    a = m[i - 1] - m[j - 1]
    if a.denominator != 1 or abs(a) >= n:
        return False, None
    q = (p.s[i - 1] - p.s[j - 1] - a) * p.kappa
    return (True, int(a)) if q.denominator == 1 else (False, None)


def essential_wall_congruence(p: CherednikParams, n: int, i: int, j: int, m: Sequence | None = None) -> bool:
    """Congruence form: c_j - m_j - (c_i - m_i) in eZ, with |m_i - m_j| < n."""
    _check_pair(p, i, j)
    data = derive_crystal_data(p)
    m = data.m if m is None else as_vector(m)
    a = m[i - 1] - m[j - 1]
    if a.denominator != 1 or abs(a) >= n:
        return False
    x = data.c[j - 1] - m[j - 1] - (data.c[i - 1] - m[i - 1])
    return x.denominator == 1 and x.numerator % p.e == 0


def _check_pair(p: CherednikParams, i: int, j: int) -> None:
    if i == j or not (1 <= i <= p.level and 1 <= j <= p.level):
        raise ConfigurationError(f"need distinct component indices in 1..{p.level}")


def params_compatible(p: CherednikParams, q: CherednikParams) -> bool:
    """kappa - kappa' in Z and kappa*s_j - kappa'*s'_j in Z for all j."""
    if p.level != q.level:
        return False
    if (p.kappa - q.kappa).denominator != 1:
        return False
    return all((p.kappa * x - q.kappa * y).denominator == 1 for x, y in zip(p.s, q.s))


def separating_walls(p: CherednikParams, q: CherednikParams, n: int):
    """Essential walls (for the common charge c) between the order vectors of p and q."""
    if not params_compatible(p, q):
        raise ConfigurationError("parameters are not compatible (kappa - kappa' or kappa*s_j - kappa'*s'_j not integral)")
    dp, dq = derive_crystal_data(p), derive_crystal_data(q)
    assert dp.c == dq.c
    walls = essential_walls(p.level, n, p.e, dp.c)
    return signature(dp.m, walls).separating(signature(dq.m, walls))


def wall_crossing_bijection(lp: LPartition, p: CherednikParams, q: CherednikParams) -> LPartition:
    """The bijection across (at most) one essential wall, computed as a crystal isomorphism."""
    if p.kappa < 0 or q.kappa < 0:
        if not (p.kappa < 0 and q.kappa < 0):
            raise ConfigurationError("kappa and kappa' must have the same sign")
        return sharp_conjugate(wall_crossing_bijection(sharp_conjugate(lp), sharp_params(p), sharp_params(q)))
    if lp.level != p.level:
        raise ConfigurationError("the l-partition must have the level of the parameters")
    n = lp.rank()
    crossed = separating_walls(p, q, n)
    if len(crossed) > 1:
        labels = ", ".join(w.label() for w in crossed)
        raise ConfigurationError(
            f"parameters are separated by {len(crossed)} essential walls ({labels}); "
            "route through intermediate parameters or use wall_cross on the order vectors"
        )
    dp, dq = derive_crystal_data(p), derive_crystal_data(q)
    return wall_cross(lp, dp.c, p.e, dp.m, dq.m, n)


# ---------------------------------------------------------------- conjugation


def sharp_conjugate(lp: LPartition) -> LPartition:
    """((lambda^l)^t, ..., (lambda^1)^t)."""
    return LPartition(tuple(lam.transpose() for lam in reversed(lp.components)))


def sharp_params(p: CherednikParams) -> CherednikParams:
    """(kappa, s) -> (-kappa, (-s_l, ..., -s_1))."""
    return CherednikParams(-p.kappa, tuple(-x for x in reversed(p.s)))


def sharp_node(node: Node, l: int) -> Node:
    a, b, c = node
    return Node(b, a, l + 1 - c)


__all__ = [
    "CherednikParams",
    "CherResidue",
    "CrystalData",
    "derive_crystal_data",
    "cher_residue",
    "psi_color_map",
    "index_set",
    "cherednik_order_graph",
    "essential_wall_test",
    "essential_wall_congruence",
    "params_compatible",
    "separating_walls",
    "wall_crossing_bijection",
    "sharp_conjugate",
    "sharp_params",
    "sharp_node",
]
