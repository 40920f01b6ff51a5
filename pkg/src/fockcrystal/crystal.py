"""Node orders, z-words, the operators f~/e~ and the colored graphs they define."""
from __future__ import annotations

import json
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Iterable, NamedTuple, Sequence

from .core import (
    INFINITY,
    ConfigurationError,
    LPartition,
    Node,
    OnWallError,
    addable_all,
    as_charge,
    as_vector,
    check_modulus,
    lpartitions_upto,
    removable_all,
)


# ---------------------------------------------------------------- node orders


@dataclass(frozen=True)
class MOrder:
    """gamma < gamma' iff b - a + m_c < b' - a' + m_c' (or the reverse when ``reverse``)."""

    m: tuple[Fraction, ...]
    reverse: bool = False

    def __post_init__(self):
        object.__setattr__(self, "m", as_vector(self.m))
        den = math.lcm(*(x.denominator for x in self.m))
        object.__setattr__(self, "_den", den)
        object.__setattr__(self, "_scaled", tuple(int(x * den) for x in self.m))

    def key(self, node: Node) -> Fraction:
        a, b, c = node
        k = b - a + self.m[c - 1]
        return -k if self.reverse else k

    def sort_key(self, node: Node) -> int:
        """``key`` times a common denominator; same order, integer arithmetic."""
        a, b, c = node
        k = (b - a) * self._den + self._scaled[c - 1]
        return -k if self.reverse else k

    @property
    def level(self) -> int:
        return len(self.m)


def m_order(m) -> MOrder:
    return MOrder(as_vector(m))


def m_order_reversed(m) -> MOrder:
    return MOrder(as_vector(m), reverse=True)


@dataclass(frozen=True)
class CherednikOrder:
    """gamma <= gamma' iff kappa*l*(b - a + s_c) - c <= kappa*l*(b' - a' + s_c') - c'."""

    kappa: Fraction
    s: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "kappa", Fraction(self.kappa))
        object.__setattr__(self, "s", as_vector(self.s))
        kl = self.kappa * len(self.s)
        shifts = [kl * x for x in self.s]
        den = math.lcm(kl.denominator, *(x.denominator for x in shifts))
        object.__setattr__(self, "_den", den)
        object.__setattr__(self, "_kl", int(kl * den))
        object.__setattr__(self, "_shifts", tuple(int(x * den) for x in shifts))

    def key(self, node: Node) -> Fraction:
        a, b, c = node
        return self.kappa * len(self.s) * (b - a + self.s[c - 1]) - c

    def sort_key(self, node: Node) -> int:
        a, b, c = node
        return self._kl * (b - a) + self._shifts[c - 1] - c * self._den

    @property
    def level(self) -> int:
        return len(self.s)


NodeOrder = MOrder | CherednikOrder


def wall_value(m: Sequence, s: Sequence, i: int, j: int) -> Fraction:
    """s_i - m_i - (s_j - m_j), components 1-indexed."""
    return (s[i - 1] - m[i - 1]) - (s[j - 1] - m[j - 1])


def find_wall(m, s, e) -> tuple[int, int, int | None] | None:
    """Return some (i, j, N) with m on the wall, or None when m is generic."""
    m, s = as_vector(m), as_vector(s)
    for i in range(1, len(m) + 1):
        for j in range(i + 1, len(m) + 1):
            x = wall_value(m, s, i, j)
            if e is INFINITY:
                if x == 0:
                    return (i, j, None)
            elif (x / e).denominator == 1:
                return (i, j, int(x / e))
    return None


def check_generic(m, s, e) -> None:
    hit = find_wall(m, s, e)
    if hit is not None:
        i, j, N = hit
        where = f"m_{{{i},{j}}}" if N is None else f"m_{{{i},{j},{N}}}"
        raise OnWallError(f"order vector m={tuple(str(x) for x in m)} lies on the wall {where}")


# ---------------------------------------------------------------- words


class Letter(NamedTuple):
    tag: str  # "A" or "R"
    node: Node


def _sorted_word(addable: Iterable[Node], removable: Iterable[Node], order) -> list[Letter]:
    letters = [Letter("A", g) for g in addable] + [Letter("R", g) for g in removable]
    keyed = sorted(((order.sort_key(x.node), x) for x in letters), key=lambda t: t[0])
    for (k1, x1), (k2, x2) in zip(keyed, keyed[1:]):
        if k1 == k2:
            raise OnWallError(f"node order is not total: {x1.node} and {x2.node} compare equal")
    return [x for _, x in keyed]


def _modular_color(s: tuple[int, ...], e) -> Callable[[Node], int]:
    if e is INFINITY:
        return lambda g: g.col - g.row + s[g.comp - 1]
    return lambda g: (g.col - g.row + s[g.comp - 1]) % e


def _check_config(lp: LPartition, s, e, order) -> tuple[int, ...]:
    check_modulus(e)
    s = as_charge(s)
    if len(s) != lp.level or order.level != lp.level:
        raise ConfigurationError(
            f"level mismatch: l-partition has level {lp.level}, charge {len(s)}, order {order.level}"
        )
    return s


def _color_value(z, e) -> int:
    z = int(z)
    return z if e is INFINITY else z % e


def z_word(lp: LPartition, s, e, z, order) -> list[Letter]:
    """Addable (A) and removable (R) z-nodes of ``lp`` in increasing order."""
    s = _check_config(lp, s, e, order)
    color = _modular_color(s, e)
    z = _color_value(z, e)
    return _sorted_word(
        (g for g in addable_all(lp) if color(g) == z),
        (g for g in removable_all(lp) if color(g) == z),
        order,
    )


def reduced_word(word) -> tuple[int, int, list]:
    """Cancel RA factors until the word reads A^p R^q.

    ``word`` may hold bare letters ("A"/"R") or ``Letter`` pairs; survivors keep
    their identity.  Returns ``(p, q, survivors)``.
    """
    stack = []
    for x in word:
        tag = x if isinstance(x, str) else x[0]
        if tag == "A" and stack:
            top = stack[-1]
            if (top if isinstance(top, str) else top[0]) == "R":
                stack.pop()
                continue
        stack.append(x)
    p = sum(1 for x in stack if (x if isinstance(x, str) else x[0]) == "A")
    return p, len(stack) - p, stack


def _good_addable(word: list[Letter]) -> Node | None:
    p, _, survivors = reduced_word(word)
    return survivors[p - 1].node if p else None


def _good_removable(word: list[Letter]) -> Node | None:
    p, q, survivors = reduced_word(word)
    return survivors[p].node if q else None


def f_tilde(lp: LPartition, s, e, z, order) -> LPartition | None:
    """Add the good addable z-node; None when there is none."""
    g = _good_addable(z_word(lp, s, e, z, order))
    return None if g is None else lp.add(g)


def e_tilde(lp: LPartition, s, e, z, order) -> LPartition | None:
    """Remove the good removable z-node; None when there is none."""
    g = _good_removable(z_word(lp, s, e, z, order))
    return None if g is None else lp.remove(g)


def good_nodes(lp: LPartition, color_of: Callable[[Node], Hashable], order):
    """Map each color to (good addable, good removable) for one vertex."""
    groups: dict = defaultdict(lambda: ([], []))
    for g in addable_all(lp):
        groups[color_of(g)][0].append(g)
    for g in removable_all(lp):
        groups[color_of(g)][1].append(g)
    out = {}
    for z, (add, rem) in groups.items():
        word = _sorted_word(add, rem, order)
        p, q, survivors = reduced_word(word)
        out[z] = (survivors[p - 1].node if p else None, survivors[p].node if q else None)
    return out


# ---------------------------------------------------------------- graphs


def _color_sort_key(z):
    return (0, z, "") if isinstance(z, int) else (1, 0, repr(z))


@dataclass
class CrystalGraph:
    """Colored graph on all l-partitions of rank 0..n."""

    level: int
    n: int
    e: object
    s: tuple
    order: object
    vertices: tuple[LPartition, ...]
    edges: tuple[tuple[LPartition, LPartition, Hashable], ...]
    _out: dict = field(default_factory=dict, repr=False)
    _in: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for src, dst, z in self.edges:
            self._out[(src, z)] = dst
            self._in[(dst, z)] = src

    def f(self, v: LPartition, z) -> LPartition | None:
        return self._out.get((v, z))

    def e_op(self, v: LPartition, z) -> LPartition | None:
        return self._in.get((v, z))

    def colors(self) -> list:
        return sorted({z for _, _, z in self.edges}, key=_color_sort_key)

    def edge_set(self) -> set:
        return set(self.edges)

    def highest_weight_vertices(self) -> list[LPartition]:
        targets = {dst for _, dst, _ in self.edges}
        return [v for v in self.vertices if v not in targets]

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "n": self.n,
            "e": str(self.e),
            "s": [str(x) for x in self.s],
            "vertices": [v.to_json() for v in self.vertices],
            "edges": [{"src": a.to_json(), "dst": b.to_json(), "color": _json_color(z)} for a, b, z in self.edges],
        }

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for a, b, z in self.edges:
            lines.append(f'  "{a}" -> "{b}" [label="{_json_color(z)}"];')
        lines.append("}")
        return "\n".join(lines)


def _json_color(z):
    return z if isinstance(z, int) else str(z)


def build_graph_colored(level: int, n: int, color_of, order, *, e=None, s=()) -> CrystalGraph:
    """Graph on ranks 0..n for an arbitrary node coloring and node order."""
    if n < 0:
        raise ConfigurationError("n must be nonnegative")
    vertices = tuple(lpartitions_upto(level, n))
    edges = []
    for v in vertices:
        if v.rank() >= n:
            continue
        for z, (add, _) in good_nodes(v, color_of, order).items():
            if add is not None:
                edges.append((v, v.add(add), z))
    edges.sort(key=lambda t: (t[0].sort_key(), _color_sort_key(t[2])))
    return CrystalGraph(level, n, e, tuple(s), order, vertices, tuple(edges))


def build_graph(l: int, n: int, e, s, order) -> CrystalGraph:
    """The graph G_{e,m,s} (or any graph on integer residues) on l-partitions of rank <= n."""
    check_modulus(e)
    s = as_charge(s)
    if len(s) != l or order.level != l:
        raise ConfigurationError(f"charge/order length must equal l={l}")
    if isinstance(order, MOrder):
        check_generic(order.m, s, e)
    return build_graph_colored(l, n, _modular_color(s, e), order, e=e, s=s)


def highest_weight_vertices(graph: CrystalGraph) -> list[LPartition]:
    return graph.highest_weight_vertices()


def graphs_equivalent(g1: CrystalGraph, g2: CrystalGraph, psi=None) -> bool:
    """True when the identity on vertices carries g1's i-arrows to g2's psi(i)-arrows."""
    if set(g1.vertices) != set(g2.vertices):
        return False
    if psi is None:
        relabel = lambda z: z  # noqa: E731
    elif callable(psi):
        relabel = psi
    else:
        relabel = psi.__getitem__
    mapped = {(a, b, relabel(z)) for a, b, z in g1.edges}
    if mapped != g2.edge_set():
        return False
    return set(g1.highest_weight_vertices()) == set(g2.highest_weight_vertices())


# ---------------------------------------------------------------- JMMO reduction


class JMMOData(NamedTuple):
    s_prime: tuple[int, ...]
    delta: tuple[Fraction, ...]
    sigma: tuple[int, ...]  # sigma[k-1] = sigma(k), 1-indexed values

    def sigma_inverse(self) -> tuple[int, ...]:
        inv = [0] * len(self.sigma)
        for k, c in enumerate(self.sigma, start=1):
            inv[c - 1] = k
        return tuple(inv)


def jmmo_decompose(m, s, e) -> JMMOData:
    """Write m = s' + delta with s' = s (mod e), delta in [0, e) and sort delta decreasingly."""
    check_modulus(e)
    if e is INFINITY:
        raise ConfigurationError("the JMMO reduction needs a finite e")
    m, s = as_vector(m), as_charge(s)
    if len(m) != len(s):
        raise ConfigurationError("m and s must have the same length")
    check_generic(m, s, e)
    delta = tuple((mc - sc) % e for mc, sc in zip(m, s))
    s_prime = tuple(int(mc - d) for mc, d in zip(m, delta))
    sigma = tuple(sorted(range(1, len(m) + 1), key=lambda c: -delta[c - 1]))
    return JMMOData(s_prime, delta, sigma)


def permute_components(lp: LPartition, sigma: Sequence[int]) -> LPartition:
    """Component k of the result is component sigma(k) of ``lp``."""
    if sorted(sigma) != list(range(1, lp.level + 1)):
        raise ConfigurationError(f"{tuple(sigma)} is not a permutation of 1..{lp.level}")
    return LPartition(tuple(lp[c] for c in sigma))


def permute_vector(v: Sequence, sigma: Sequence[int]) -> tuple:
    return tuple(v[c - 1] for c in sigma)


def inverse_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for k, c in enumerate(sigma, start=1):
        inv[c - 1] = k
    return tuple(inv)


def graph_json(graph: CrystalGraph) -> str:
    return json.dumps(graph.to_json())
