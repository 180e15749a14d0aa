"""Catalogue of saturated graphs and trigraphs, pattern graphs, and the
threshold/split recognizers.

Vertex numbering conventions are fixed here so that certificates printed by
the verifier refer to stable labels:

* ``icosa(j, k)``: wheel ``i`` occupies ``i*(j+1) .. i*(j+1)+j``, hub first,
  then the rim in cyclic order.
* ``generalized_L(m)``: outer cycle ``a_i = i``, middle ``b_i = m+i``,
  inner cycle ``c_i = 2m+i``.
* Cartesian products index ``(a, b)`` as ``a * n2 + b``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from indsat_lab.graph import (
    BlowupMode,
    Graph,
    GraphError,
    Trigraph,
    blowup,
    cartesian_product,
    complement,
    complete_graph,
    disjoint_union,
    flip_edge,
    remove_vertices,
)
from indsat_lab.induced import contains_any


# ---------------------------------------------------------------- patterns


@dataclass(frozen=True)
class PatternName:
    """A named target graph; ``param`` is an int or a tuple of part sizes."""

    kind: str
    param: int | tuple[int, ...] | None = None

    def __str__(self) -> str:
        if self.param is None:
            return self.kind
        if isinstance(self.param, tuple):
            return f"{self.kind}:{','.join(map(str, self.param))}"
        return f"{self.kind}:{self.param}"


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(t: int) -> Graph:
    """K_{1,t} with centre 0."""
    return Graph.from_edges(t + 1, [(0, i) for i in range(1, t + 1)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Parts occupy consecutive index ranges, in the given order."""
    if any(p < 1 for p in parts):
        raise GraphError("part sizes must be positive")
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return Graph.from_edges(
        n, [(u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]]
    )


def pattern(name: PatternName) -> Graph:
    kind, p = name.kind, name.param
    if kind == "paw":
        return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    if kind == "claw":
        return star_graph(3)
    if kind in ("complete-multipartite",):
        if not isinstance(p, tuple) or not p:
            raise GraphError("complete-multipartite needs part sizes")
        return complete_multipartite(p)
    if not isinstance(p, int) or p < 1:
        raise GraphError(f"{kind} needs a positive integer parameter")
    if kind == "star":
        return star_graph(p)
    if kind == "path":
        return path_graph(p)
    if kind == "cycle":
        return cycle_graph(p)
    if kind == "complete":
        return complete_graph(p)
    if kind == "matching":
        return Graph.from_edges(2 * p, [(2 * i, 2 * i + 1) for i in range(p)])
    if kind in ("cycle-pendant", "cycle-hop"):
        if p < 6 or p % 2:
            raise GraphError(f"{kind} needs an even length of at least 6")
        edges = [(i, (i + 1) % p) for i in range(p)]
        if kind == "cycle-pendant":
            return Graph.from_edges(p + 1, edges + [(0, p)])
        return Graph.from_edges(p, edges + [(0, 2)])
    raise GraphError(f"unknown pattern {kind!r}")


_SHORT = re.compile(r"^(?:(?P<kind>[CPK])(?P<n>\d+)|(?P<k>\d+)K2)$")


def parse_pattern(text: str) -> PatternName:
    """Accepts ``paw``, ``claw``, ``C5``, ``P4``, ``K4``, ``2K2`` and ``kind:param``."""
    s = text.strip()
    low = s.lower()
    if low in ("paw", "claw"):
        return PatternName(low)
    m = _SHORT.match(s)
    if m:
        if m["k"]:
            return PatternName("matching", int(m["k"]))
        kind = {"C": "cycle", "P": "path", "K": "complete"}[m["kind"]]
        return PatternName(kind, int(m["n"]))
    if ":" in low:
        kind, _, arg = low.partition(":")
        try:
            if kind == "complete-multipartite":
                return PatternName(kind, tuple(int(x) for x in arg.split(",")))
            return PatternName(kind, int(arg))
        except ValueError:
            raise GraphError(f"bad pattern parameter in {text!r}") from None
    raise GraphError(f"unknown pattern {text!r}")


PAW = pattern(PatternName("paw"))
CLAW = pattern(PatternName("claw"))


# ---------------------------------------------------------------- paw


@dataclass(frozen=True)
class PawSpec:
    isolated: int = 0
    components: tuple[tuple[int, ...], ...] = field(default_factory=tuple)

    def validate(self) -> None:
        if self.isolated not in (0, 1):
            raise GraphError("at most one isolated vertex")
        for parts in self.components:
            if len(parts) < 3:
                raise GraphError(f"component {parts} has fewer than 3 parts")
            if sum(1 for p in parts if p == 1) > 1:
                raise GraphError(f"component {parts} has more than one singleton part")
            if any(p == 2 or p < 1 for p in parts):
                raise GraphError(f"component {parts} has a part of size 2 or less than 1")


def paw_construction(spec: PawSpec) -> Graph:
    spec.validate()
    comps = [complete_multipartite(p) for p in spec.components]
    comps += [Graph.empty(1)] * spec.isolated
    return disjoint_union(comps)


def minimal_paw(n: int) -> Graph:
    """Fewest-edge paw-saturated graph; surplus vertices go to the last large part."""
    if n < 7:
        raise GraphError("minimal_paw needs n >= 7")
    k, r = divmod(n, 7)
    comps = [(1, 3, 3)] * k
    if r:
        comps[-1] = (1, 3, 3 + r - 1)
    return paw_construction(PawSpec(1 if r else 0, tuple(comps)))


def minimal_paw_edges(n: int) -> int:
    k, r = divmod(n, 7)
    return 15 * k + 4 * (r - 1) if r else 15 * n // 7


def recognize_paw_shape(g: Graph) -> bool:
    """At most one isolate; every other component complete multipartite with
    at least 3 parts, at most one singleton part and no part of size 2."""
    isolates = 0
    for comp in g.components():
        if comp.bit_count() == 1:
            isolates += 1
            continue
        sizes = []
        rest = comp
        while rest:
            v = (rest & -rest).bit_length() - 1
            part = comp & ~g.rows[v]
            # each vertex in the part must be non-adjacent to exactly the part
            for w in range(g.n):
                if part >> w & 1 and comp & ~g.rows[w] != part:
                    return False
            sizes.append(part.bit_count())
            rest &= ~part
        if len(sizes) < 3 or sizes.count(1) > 1 or 2 in sizes:
            return False
    return isolates <= 1


# ---------------------------------------------------------------- stars and claws


def cartesian_power(g: Graph, k: int) -> Graph:
    out = g
    for _ in range(k - 1):
        out = cartesian_product(out, g)
    return out


def star_construction(n: int, k: int) -> Graph:
    """Copies of K3^k, the last one with a clique on the leftover vertices
    joined to the K3 fiber through vertex 0 along the first coordinate."""
    if k < 2:
        raise GraphError("star_construction needs k >= 2")
    size = 3**k
    if n < size:
        raise GraphError(f"star_construction needs n >= {size}")
    z, rem = divmod(n, size)
    h = cartesian_power(complete_graph(3), k)
    fiber = [a * 3 ** (k - 1) for a in range(3)]
    edges = list(h.edges())
    edges += [(size + i, size + j) for i, j in combinations(range(rem), 2)]
    edges += [(f, size + i) for f in fiber for i in range(rem)]
    last = Graph.from_edges(size + rem, edges)
    return disjoint_union([h] * (z - 1) + [last])


_J_EDGES = [
    (0, 1), (0, 2), (1, 2), (0, 3), (2, 3), (2, 4), (1, 4),
    (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8),
    (6, 9), (8, 9), (8, 10), (7, 10), (3, 6), (3, 9), (9, 10),
    (4, 10), (4, 7), (0, 5), (1, 5),
]

_K_EDGES = [
    (9, 10), (10, 11), (9, 11), (1, 9), (0, 1), (3, 10), (2, 3),
    (5, 11), (4, 5), (0, 11), (2, 9), (4, 10), (0, 6), (1, 6),
    (2, 7), (3, 7), (4, 8), (5, 8), (6, 7), (7, 8), (6, 8),
    (0, 5), (1, 2), (3, 4),
]


def generalized_L(m: int) -> Graph:
    if m < 5:
        raise GraphError("generalized_L needs m >= 5")
    edges = []
    for i in range(m):
        j = (i + 1) % m
        a, b, c = i, m + i, 2 * m + i
        edges += [(a, j), (c, 2 * m + j), (b, a), (b, j), (b, c), (b, 2 * m + j)]
    return Graph.from_edges(3 * m, edges)


def claw_catalogue(which: str) -> Graph:
    """``H`` = K3□K3, ``J`` (11 vertices), ``K`` (12 vertices), ``L`` = generalized_L(5)."""
    w = which.upper()
    if w == "H":
        return cartesian_power(complete_graph(3), 2)
    if w == "J":
        return Graph.from_edges(11, _J_EDGES)
    if w == "K":
        return Graph.from_edges(12, _K_EDGES)
    if w == "L":
        return generalized_L(5)
    raise GraphError(f"unknown claw catalogue graph {which!r}")


def claw_construction(n: int) -> Graph:
    """Upper-bound construction for claw-saturated graphs by residue of n mod 3."""
    if n < 9 or n in (14, 17):
        raise GraphError(f"no claw construction for n={n}")
    r = n % 3
    if r == 1:
        return disjoint_union([claw_construction(n - 1), Graph.empty(1)])
    if r == 2:
        if n == 11:
            return claw_catalogue("J")
        return disjoint_union([claw_catalogue("J"), claw_construction(n - 11)])
    q, rest = divmod(n, 9)
    tail = {0: "H", 3: "K", 6: "L"}[rest]
    h = claw_catalogue("H")
    return disjoint_union([h] * (q - 1) + [claw_catalogue(tail)])


def claw_bounds(n: int) -> tuple[int, int]:
    """Known lower and upper bounds on the edge count for n >= 9, n not 14 or 17."""
    r = n % 3
    if r == 0:
        return 2 * n, 2 * n
    if r == 1:
        return 2 * n - 2, 2 * n - 2
    return 2 * n, 2 * n + 2


# ---------------------------------------------------------------- C4 and matchings


def icosa(j: int, k: int) -> Graph:
    if j < 5 or k < 2:
        raise GraphError("icosa needs j >= 5 and k >= 2")
    size = j + 1
    edges = []
    for i in range(k):
        hub = i * size
        for l in range(1, j + 1):
            edges.append((hub, hub + l))
            edges.append((hub + l, hub + l % j + 1))
    for i, i2 in combinations(range(k), 2):
        for l in range(1, j + 1):
            edges.append((i * size + l, i2 * size + l))
            edges.append((i * size + l, i2 * size + l % j + 1))
    return Graph.from_edges(k * size, edges)


def c4_minimal(n: int) -> Graph:
    """I_7^k with k = n // 8 and the first n % 8 hubs doubled into adjacent twins."""
    if n < 56:
        raise GraphError("c4_minimal needs n >= 56")
    k, r = divmod(n, 8)
    sizes = [1] * (8 * k)
    for i in range(r):
        sizes[8 * i] = 2
    return blowup(icosa(7, k), sizes, BlowupMode.CLIQUE)


def matching_construction(n: int, k: int) -> Graph:
    if k < 2 or n < 12 * (k - 1):
        raise GraphError("matching_construction needs k >= 2 and n >= 12(k-1)")
    base = complement(icosa(5, 2))
    return disjoint_union([base] * (k - 1) + [Graph.empty(n - 12 * (k - 1))])


# ---------------------------------------------------------------- cycles


def cycles_construction(n: int, k: int) -> Graph:
    """K_{k+1}□K_t with the first s vertices of the last K_t fiber removed."""
    if k < 3 or n < (k + 1) ** 2 + 2:
        raise GraphError("cycles_construction needs k >= 3 and n >= (k+1)^2 + 2")
    t = -(-n // (k + 1))
    s = (k + 1) * t - n
    if t < k + 2 or not 0 <= s <= t - 3:
        raise GraphError(f"t={t}, s={s} violate the construction constraints")
    g = cartesian_product(complete_graph(k + 1), complete_graph(t))
    return remove_vertices(g, range(k * t, k * t + s))


def cycles_subquadratic(n: int, k: int, t: int) -> Graph:
    c = math.isqrt(n - 1) + 1 if n > 1 else 1
    if t < 3 or c % t:
        raise GraphError("t must be at least 3 and divide ceil(sqrt(n))")
    if n < (k + 1) ** 4:
        raise GraphError("need n^(1/4) >= k+1")
    small, large = c // t, t * c
    s = small * large - n
    if s > large - 3:
        raise GraphError(f"cannot remove {s} vertices from a fiber of size {large}")
    g = cartesian_product(complete_graph(small), complete_graph(large))
    start = (small - 1) * large
    return remove_vertices(g, range(start, start + s))


def cycle_targets(k: int) -> list[Graph]:
    """The three targets served by the cycles construction: C_{2k-1}, C'_{2k}, and the hop variant."""
    return [
        cycle_graph(2 * k - 1),
        pattern(PatternName("cycle-pendant", 2 * k)),
        pattern(PatternName("cycle-hop", 2 * k)),
    ]


# ---------------------------------------------------------------- trigraphs


def _tri(n: int, black: Iterable[tuple[int, int]], gray: Iterable[tuple[int, int]]) -> Trigraph:
    return Trigraph.from_pairs(n, list(black), list(gray))


_CLAW7_BLACK = [(0, 3), (3, 4), (2, 4), (2, 6), (5, 6), (0, 5), (1, 3), (1, 5), (1, 4), (1, 6)]
_CLAW7_GRAY = [(3, 5), (4, 6)]


def table_trigraphs(target: str, n: int) -> Trigraph:
    """Small-order trigraphs realizing the tabulated values for paw and claw."""
    t = target.lower()
    if t == "paw" and n == 4:
        return _tri(4, [(0, 2), (0, 3), (1, 2), (1, 3)], [(0, 1), (2, 3)])
    if t == "paw" and n in (5, 6):
        return _tri(n, [(a, x) for a in (0, 1) for x in range(2, n)], [(0, 1)])
    if t == "claw" and n == 4:
        return _tri(4, [], [(0, 1), (1, 2), (0, 2)])
    if t == "claw" and n == 5:
        return _tri(5, [(0, 1), (1, 2)], [(0, 2), (2, 3), (0, 3)])
    if t == "claw" and n == 6:
        return _tri(6, [(0, 1), (1, 3), (2, 3), (0, 2), (0, 3)], [(1, 2), (2, 4), (1, 4)])
    if t == "claw" and n in (7, 8):
        return _tri(n, _CLAW7_BLACK, _CLAW7_GRAY)
    raise GraphError(f"no tabulated trigraph for ({target}, {n})")


TABLE_ENTRIES = [("paw", n) for n in (4, 5, 6)] + [("claw", n) for n in range(4, 9)]


def c5_trigraph10() -> Trigraph:
    """K3□K3 (cell (y, x) at 3(y-1)+(x-1)) plus vertex 9 with one gray pair."""
    base = cartesian_power(complete_graph(3), 2)
    black = base.edges() + [(6, 9), (8, 9), (4, 9), (1, 9)]
    return _tri(10, black, [(7, 9)])


# ---------------------------------------------------------------- threshold and split


def threshold_from_string(signs: str | Sequence[str]) -> Graph:
    """Vertex i joins all earlier vertices when its sign is '+'; the first sign is irrelevant."""
    s = [("-" if c in ("-", "−") else c) for c in signs]
    if any(c not in "+-" for c in s):
        raise GraphError(f"signs must be '+' or '-': {signs!r}")
    edges = [(j, i) for i, c in enumerate(s) if c == "+" for j in range(i)]
    return Graph.from_edges(len(s), edges)


def threshold_peeling(g: Graph) -> tuple[list[int], str] | None:
    """Construction order and sign string, or None when ``g`` is not threshold."""
    alive = g.full
    order: list[int] = []
    signs: list[str] = []
    while alive:
        found = False
        for v in range(g.n):
            if not alive >> v & 1:
                continue
            nb = g.rows[v] & alive
            if nb == 0:
                order.append(v)
                signs.append("-")
                found = True
            elif nb == alive & ~(1 << v):
                order.append(v)
                signs.append("+")
                found = True
            if found:
                alive &= ~(1 << v)
                break
        if not found:
            return None
    return order[::-1], "".join(signs[::-1])


_2K2 = pattern(PatternName("matching", 2))
_P4 = path_graph(4)
_C4 = cycle_graph(4)
_C5 = cycle_graph(5)
THRESHOLD_FORBIDDEN = [_2K2, _P4, _C4]
SPLIT_FORBIDDEN = [_2K2, _C4, _C5]


def is_threshold(g: Graph) -> bool:
    return contains_any(g, THRESHOLD_FORBIDDEN) is None


def is_split(g: Graph) -> bool:
    return contains_any(g, SPLIT_FORBIDDEN) is None


def is_split_by_degrees(g: Graph) -> bool:
    """Degree-sequence test: with d sorted descending and m = max{i : d_i >= i-1},
    g is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i."""
    d = sorted(g.degrees(), reverse=True)
    m = max((i + 1 for i in range(len(d)) if d[i] >= i), default=0)
    return sum(d[:m]) == m * (m - 1) + sum(d[m:])


def threshold_edge_removal_witness(g: Graph) -> tuple[int, int]:
    """An edge whose deletion leaves a threshold graph."""
    peeled = threshold_peeling(g)
    if peeled is None:
        raise GraphError("graph is not threshold")
    if g.num_edges == 0:
        raise GraphError("graph has no edges")
    order, signs = peeled
    for i in range(len(signs) - 1):
        if signs[i] == "-" and signs[i + 1] == "+":
            u, v = sorted((order[i], order[i + 1]))
            return u, v
    # signs are then +...+-...-: a clique plus isolates, and a clique minus an edge stays threshold
    return g.edges()[0]


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return flip_edge(g, u, v)


# ---------------------------------------------------------------- export registry


def catalogue() -> list[tuple[str, Graph | Trigraph]]:
    """Every shipped catalogue object with its stable export stem."""
    out: list[tuple[str, Graph | Trigraph]] = []
    for w in "HJKL":
        out.append((f"claw_{w}", claw_catalogue(w)))
    for m in range(5, 9):
        out.append((f"generalized_L_{m}", generalized_L(m)))
    for j in (5, 6, 7):
        for k in (2, 3):
            out.append((f"icosa_{j}_{k}", icosa(j, k)))
    out.append(("c4_minimal_56", c4_minimal(56)))
    out.append(("c4_minimal_57", c4_minimal(57)))
    for n, k in ((12, 2), (13, 2), (24, 3)):
        out.append((f"matching_{n}_{k}", matching_construction(n, k)))
    for n, k in ((18, 3), (20, 3), (27, 4)):
        out.append((f"cycles_{n}_{k}", cycles_construction(n, k)))
    for n, k in ((9, 2), (10, 2), (27, 3)):
        out.append((f"star_{n}_{k}", star_construction(n, k)))
    for n in (7, 8, 13, 14, 16):
        out.append((f"minimal_paw_{n}", minimal_paw(n)))
    for target, n in TABLE_ENTRIES:
        table = 1 if target == "paw" else 2
        out.append((f"table{table}_{target}_n{n}", table_trigraphs(target, n)))
    out.append(("c5_trigraph_10", c5_trigraph10()))
    return out
