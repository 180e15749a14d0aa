"""Core value types: simple graphs and trigraphs on vertices ``0..n-1``.

Adjacency is stored as one Python ``int`` bitmask per vertex, so neighborhood
queries and intersections are word operations.  Both types are immutable;
every operation returns a new object.

Vertex pairs are always enumerated in column-major upper-triangle order,
``(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...``.  The same order drives
graph6 bits, realization bitmasks, verdict certificates and search branching.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

REALIZATION_GUARD = 25


class GraphError(ValueError):
    """Invalid graph or trigraph input."""


class GuardError(RuntimeError):
    """A size guard was exceeded; pass an explicit override to proceed."""


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(u: int, v: int) -> int:
    """Position of the pair ``{u, v}`` in the fixed pair order."""
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def pairs(n: int) -> Iterator[tuple[int, int]]:
    """All pairs ``(i, j)`` with ``i < j < n`` in the fixed pair order."""
    for j in range(n):
        for i in range(j):
            yield (i, j)


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _rows_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in pair ({u}, {v}) for n={n}")
        if u == v:
            raise GraphError(f"loop pair ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.rows) != self.n:
            raise GraphError("row count does not match order")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(n, tuple(_rows_from_edges(n, edges)))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Graph:
        """Build from a bitmask over the fixed pair order."""
        rows = [0] * n
        k = 0
        for j in range(n):
            for i in range(j):
                if mask >> k & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k += 1
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in pairs(self.n) if self.rows[i] >> j & 1]

    def mask(self) -> int:
        out = 0
        k = 0
        rows = self.rows
        for j in range(self.n):
            for i in range(j):
                if rows[i] >> j & 1:
                    out |= 1 << k
                k += 1
        return out

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph on ``vertices``, relabelled in the given order."""
        rows = []
        for u in vertices:
            r = 0
            for b, w in enumerate(vertices):
                if self.rows[u] >> w & 1:
                    r |= 1 << b
            rows.append(r)
        return Graph(len(vertices), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for u in range(self.n):
            r = 0
            for w in bits(self.rows[u]):
                r |= 1 << perm[w]
            rows[perm[u]] = r
        return Graph(self.n, tuple(rows))

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by least vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                nxt = 0
                for w in bits(frontier):
                    nxt |= self.rows[w]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, edges)


def flip_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError("cannot flip a loop pair")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex out of range: ({u}, {v})")
    rows = list(g.rows)
    rows[u] ^= 1 << v
    rows[v] ^= 1 << u
    return Graph(g.n, tuple(rows))


class EdgeColor(enum.IntEnum):
    WHITE = 0
    BLACK = 1
    GRAY = 2


@dataclass(frozen=True)
class Trigraph:
    """Black/white/gray coloring of all vertex pairs; white is implicit."""

    n: int
    black: tuple[int, ...]
    gray: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.black) != self.n or len(self.gray) != self.n:
            raise GraphError("row count does not match order")
        if any(b & g for b, g in zip(self.black, self.gray)):
            raise GraphError("a pair is both black and gray")

    @classmethod
    def from_pairs(
        cls,
        n: int,
        black: Iterable[tuple[int, int]] = (),
        gray: Iterable[tuple[int, int]] = (),
    ) -> Trigraph:
        black = list(black)
        gray = list(gray)
        seen = set()
        for u, v in black + gray:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"pair {key} colored twice")
            seen.add(key)
        return cls(n, tuple(_rows_from_edges(n, black)), tuple(_rows_from_edges(n, gray)))

    @classmethod
    def from_graph(cls, g: Graph) -> Trigraph:
        return cls(g.n, g.rows, (0,) * g.n)

    @classmethod
    def from_masks(cls, n: int, black_mask: int, gray_mask: int) -> Trigraph:
        return cls(n, Graph.from_mask(n, black_mask).rows, Graph.from_mask(n, gray_mask).rows)

    def color(self, u: int, v: int) -> EdgeColor:
        if u == v:
            raise GraphError("loop pair has no color")
        if self.gray[u] >> v & 1:
            return EdgeColor.GRAY
        if self.black[u] >> v & 1:
            return EdgeColor.BLACK
        return EdgeColor.WHITE

    def pairs_of(self, color: EdgeColor) -> list[tuple[int, int]]:
        return [p for p in pairs(self.n) if self.color(*p) == color]

    def black_pairs(self) -> list[tuple[int, int]]:
        return self.pairs_of(EdgeColor.BLACK)

    def gray_pairs(self) -> list[tuple[int, int]]:
        return self.pairs_of(EdgeColor.GRAY)

    def white_pairs(self) -> list[tuple[int, int]]:
        return self.pairs_of(EdgeColor.WHITE)

    @property
    def num_gray(self) -> int:
        return sum(r.bit_count() for r in self.gray) // 2

    def black_graph(self) -> Graph:
        return Graph(self.n, self.black)

    def with_color(self, u: int, v: int, color: EdgeColor) -> Trigraph:
        black = list(self.black)
        gray = list(self.gray)
        for a, b in ((u, v), (v, u)):
            black[a] &= ~(1 << b)
            gray[a] &= ~(1 << b)
            if color == EdgeColor.BLACK:
                black[a] |= 1 << b
            elif color == EdgeColor.GRAY:
                gray[a] |= 1 << b
        return Trigraph(self.n, tuple(black), tuple(gray))

    def realization(self, subset: int) -> Graph:
        """Realization including the gray pairs selected by ``subset``.

        Bit ``i`` of ``subset`` selects the ``i``-th gray pair in pair order.
        """
        rows = list(self.black)
        for i, (u, v) in enumerate(self.gray_pairs()):
            if subset >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Trigraph(n={self.n}, black={self.black_pairs()}, gray={self.gray_pairs()})"


def realizations(t: Trigraph, guard: int = REALIZATION_GUARD) -> Iterator[Graph]:
    """All ``2**g`` realizations, by gray-subset bitmask ascending."""
    gray = t.gray_pairs()
    if len(gray) > guard:
        raise GuardError(f"{len(gray)} gray pairs exceed the realization guard {guard}")
    base = list(t.black)
    for subset in range(1 << len(gray)):
        rows = base.copy()
        for i, (u, v) in enumerate(gray):
            if subset >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph(t.n, tuple(rows))


def complement(x: Graph | Trigraph) -> Graph | Trigraph:
    """Complement of a graph, or black/white swap of a trigraph."""
    full = (1 << x.n) - 1
    if isinstance(x, Graph):
        return Graph(x.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(x.rows)))
    black = tuple(
        full & ~b & ~g & ~(1 << v) for v, (b, g) in enumerate(zip(x.black, x.gray))
    )
    return Trigraph(x.n, black, x.gray)


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in parts:
        rows.extend(r << offset for r in g.rows)
        offset += g.n
    return Graph(offset, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    n1, n2 = g1.n, g2.n
    left = (1 << n1) - 1
    right = ((1 << n2) - 1) << n1
    rows = [r | right for r in g1.rows] + [(r << n1) | left for r in g2.rows]
    return Graph(n1 + n2, tuple(rows))


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Vertex ``(a, b)`` gets index ``a * n(g2) + b``."""
    n2 = g2.n
    edges = []
    for a in range(g1.n):
        for b1, b2 in g2.edges():
            edges.append((a * n2 + b1, a * n2 + b2))
    for a1, a2 in g1.edges():
        for b in range(n2):
            edges.append((a1 * n2 + b, a2 * n2 + b))
    return Graph.from_edges(g1.n * n2, edges)


class BlowupMode(enum.Enum):
    INDEPENDENT = "independent"
    CLIQUE = "clique"


def blowup(g: Graph, sizes: Sequence[int], mode: BlowupMode = BlowupMode.INDEPENDENT) -> Graph:
    """Replace vertex ``i`` by ``sizes[i]`` copies; parts are laid out consecutively."""
    if len(sizes) != g.n:
        raise GraphError(f"expected {g.n} part sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise GraphError("part sizes must be positive")
    starts = []
    total = 0
    for s in sizes:
        starts.append(total)
        total += s
    part_mask = [((1 << s) - 1) << st for s, st in zip(sizes, starts)]
    rows = [0] * total
    for i in range(g.n):
        nbr = 0
        for j in bits(g.rows[i]):
            nbr |= part_mask[j]
        for x in range(starts[i], starts[i] + sizes[i]):
            r = nbr
            if mode is BlowupMode.CLIQUE:
                r |= part_mask[i] & ~(1 << x)
            rows[x] = r
    return Graph(total, tuple(rows))


def remove_vertices(g: Graph, drop: Iterable[int]) -> Graph:
    drop = set(drop)
    for v in drop:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    keep = [v for v in range(g.n) if v not in drop]
    return g.induced(keep)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def canonical_form(x: Graph | Trigraph, guard: int | None = None) -> bytes:
    from indsat_lab.canon import canonical_form as _canonical_form

    if guard is None:
        return _canonical_form(x)
    return _canonical_form(x, guard=guard)
