"""Induced subgraph search: decide, witness, and a brute-force oracle.

An embedding is a tuple ``emb`` with ``emb[h]`` the host vertex for pattern
vertex ``h``; it preserves adjacency and non-adjacency.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from indsat_lab.canon import canonical_form
from indsat_lab.graph import Graph, GraphError, GuardError

Embedding = tuple[int, ...]

COUNT_GUARD = 12
AUTOMORPHISM_CAP = 5040


def _order(h: Graph, start: Sequence[int] = ()) -> list[int]:
    """Pattern vertices: ``start`` first, then descending degree.

    Ties go to vertices with more already-placed neighbours, then lower index,
    so each new vertex is constrained by adjacency as early as possible.
    """
    order = list(start)
    placed = 0
    for v in order:
        placed |= 1 << v
    deg = h.degrees()
    while len(order) < h.n:
        best = max(
            (v for v in range(h.n) if not placed >> v & 1),
            key=lambda v: (deg[v], (h.rows[v] & placed).bit_count(), -v),
        )
        order.append(best)
        placed |= 1 << best
    return order


@lru_cache(maxsize=512)
def _plan(h: Graph, start: tuple[int, ...]) -> tuple[tuple[int, ...], tuple]:
    """Order plus, per position, earlier positions that must be adjacent / non-adjacent."""
    order = _order(h, start)
    steps = []
    for i, v in enumerate(order):
        adj = tuple(j for j in range(i) if h.rows[v] >> order[j] & 1)
        non = tuple(j for j in range(i) if not h.rows[v] >> order[j] & 1)
        steps.append((h.rows[v].bit_count(), adj, non))
    return tuple(order), tuple(steps)


def _degree_masks(g: Graph, top: int) -> list[int]:
    """``masks[d]`` = host vertices with degree at least ``d``."""
    deg = g.degrees()
    return [sum(1 << v for v in range(g.n) if deg[v] >= d) for d in range(top + 1)]


def _extend(g: Graph, h: Graph, start: tuple[int, ...], fixed: tuple[int, ...]) -> Iterator[Embedding]:
    order, steps = _plan(h, start)
    k = len(order)
    rows = g.rows
    full = g.full
    degok = _degree_masks(g, max(h.degrees(), default=0))
    image = [0] * k
    used = 0
    for i, x in enumerate(fixed):
        image[i] = x
        used |= 1 << x
    # fixed prefix must itself be consistent
    for i in range(len(fixed)):
        d, adj, non = steps[i]
        x = image[i]
        if not degok[d] >> x & 1:
            return
        for j in adj:
            if not rows[x] >> image[j] & 1:
                return
        for j in non:
            if rows[x] >> image[j] & 1:
                return

    def candidates(i: int, used: int) -> int:
        d, adj, non = steps[i]
        c = full & ~used & degok[d]
        for j in adj:
            c &= rows[image[j]]
        for j in non:
            c &= ~rows[image[j]]
        return c

    def rec(i: int, used: int) -> Iterator[Embedding]:
        if i == k:
            emb = [0] * k
            for pos, hv in enumerate(order):
                emb[hv] = image[pos]
            yield tuple(emb)
            return
        c = candidates(i, used)
        while c:
            low = c & -c
            x = low.bit_length() - 1
            c ^= low
            image[i] = x
            yield from rec(i + 1, used | low)

    yield from rec(len(fixed), used)


def iter_induced(g: Graph, h: Graph) -> Iterator[Embedding]:
    """All induced embeddings of ``h`` in ``g`` in the fixed branching order."""
    if h.n > g.n:
        return iter(())
    return _extend(g, h, (), ())


def find_induced(g: Graph, h: Graph) -> Embedding | None:
    if h.n < 1:
        raise GraphError("pattern must have at least one vertex")
    return next(iter_induced(g, h), None)


@lru_cache(maxsize=256)
def automorphisms(h: Graph) -> tuple[Embedding, ...] | None:
    """All automorphisms of a small pattern, or ``None`` past the cap."""
    out = []
    for emb in _extend(h, h, (), ()):
        out.append(emb)
        if len(out) > AUTOMORPHISM_CAP:
            return None
    return tuple(out)


@lru_cache(maxsize=256)
def _anchor_pairs(h: Graph) -> tuple[tuple[int, int, bool], ...]:
    """Ordered pattern pairs ``(a, b, adjacent)``, one per automorphism orbit."""
    auts = automorphisms(h)
    seen = set()
    reps = []
    for a in range(h.n):
        for b in range(h.n):
            if a == b or (a, b) in seen:
                continue
            reps.append((a, b, h.has_edge(a, b)))
            if auts is None:
                seen.add((a, b))
            else:
                for s in auts:
                    seen.add((s[a], s[b]))
    return tuple(reps)


def find_induced_through(g: Graph, h: Graph, u: int, v: int) -> Embedding | None:
    """An induced copy of ``h`` in ``g`` whose image contains both ``u`` and ``v``."""
    if h.n < 2 or h.n > g.n:
        return None
    adjacent = g.has_edge(u, v)
    for a, b, ab in _anchor_pairs(h):
        if ab != adjacent:
            continue
        emb = next(_extend(g, h, (a, b), (u, v)), None)
        if emb is not None:
            return emb
    return None


def is_embedding(g: Graph, h: Graph, emb: Sequence[int]) -> bool:
    """Check injectivity plus the adjacency/non-adjacency biconditional pair by pair."""
    if len(emb) != h.n or len(set(emb)) != h.n:
        return False
    if any(not 0 <= x < g.n for x in emb):
        return False
    for a, b in combinations(range(h.n), 2):
        if h.has_edge(a, b) != g.has_edge(emb[a], emb[b]):
            return False
    return True


def count_induced(g: Graph, h: Graph, guard: int = COUNT_GUARD) -> int:
    """Number of vertex subsets inducing a copy of ``h`` (brute force)."""
    if g.n > guard:
        raise GuardError(f"count_induced guard: n={g.n} exceeds {guard}")
    if h.n > g.n:
        return 0
    target = canonical_form(h)
    e = h.num_edges
    total = 0
    for sub in combinations(range(g.n), h.n):
        s = g.induced(sub)
        if s.num_edges == e and canonical_form(s) == target:
            total += 1
    return total


def contains_any(g: Graph, family: Sequence[Graph]) -> tuple[int, Embedding] | None:
    if not family:
        raise GraphError("family must be non-empty")
    for i, h in enumerate(family):
        emb = find_induced(g, h)
        if emb is not None:
            return i, emb
    return None


def contains_any_through(
    g: Graph, family: Sequence[Graph], u: int, v: int
) -> tuple[int, Embedding] | None:
    for i, h in enumerate(family):
        emb = find_induced_through(g, h, u, v)
        if emb is not None:
            return i, emb
    return None


__all__ = [
    "Embedding",
    "automorphisms",
    "contains_any",
    "contains_any_through",
    "count_induced",
    "find_induced",
    "find_induced_through",
    "is_embedding",
    "iter_induced",
]
