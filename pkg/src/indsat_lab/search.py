"""Exhaustive searches for the minimum number of gray pairs in a saturated
trigraph and the minimum edge count of a saturated graph.

Trigraph search works on whole tables indexed by labeled edge masks.  For a
fixed gray placement, a black mask ``b`` is saturated when no realization
contains the target and flipping any non-gray pair of ``b`` produces a
realization that does; both tests are table lookups, so a whole gray class is
decided with a few dozen vectorized passes over the ``2**C(n,2)`` masks.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Iterator

import numpy as np

from indsat_lab.canon import canonical_form, canonical_graph
from indsat_lab.graph import Graph, GuardError, Trigraph, num_pairs, pair_index, pairs
from indsat_lab.saturation import degree_profile_check, verify_graph_saturated

INDSAT_N_GUARD = 7
INDSAT_GRAY_GUARD = 4
SIS_N_GUARD = 8
ENUM_N_GUARD = 10
LABELED_GUARD = 7
TABLE_PAIR_LIMIT = 28

EXCEEDS_BUDGET = "exceeds budget"
NONE_EXISTS = "none exists"


@dataclass
class SearchReport:
    n: int
    target: Graph
    budget: int
    result: int | str
    certificate: Graph | Trigraph | None
    nodes_explored: int
    wall_time: float
    classes_at_optimum: int | None = None

    @property
    def found(self) -> bool:
        return isinstance(self.result, int)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("INDSAT_LAB_JOBS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------- mask tables


def _copy_masks(h: Graph) -> np.ndarray:
    """Labeled masks on ``h.n`` vertices of every relabelling of ``h``."""
    out = set()
    for perm in permutations(range(h.n)):
        m = 0
        for u, v in h.edges():
            m |= 1 << pair_index(perm[u], perm[v])
        out.add(m)
    table = np.zeros(1 << num_pairs(h.n), dtype=bool)
    table[list(out)] = True
    return table


@lru_cache(maxsize=8)
def _contains_table(n: int, h: Graph) -> np.ndarray:
    """``has[m]``: the labeled graph with pair mask ``m`` contains an induced ``h``."""
    npairs = num_pairs(n)
    if npairs > TABLE_PAIR_LIMIT:
        raise GuardError(f"mask table over {npairs} pairs is too large")
    ar = np.arange(1 << npairs, dtype=np.uint32)
    has = np.zeros(1 << npairs, dtype=bool)
    if h.n > n:
        return has
    copies = _copy_masks(h)
    for sub in combinations(range(n), h.n):
        local = np.zeros(1 << npairs, dtype=np.uint32)
        for k, (i, j) in enumerate(pairs(h.n)):
            g = pair_index(sub[i], sub[j])
            local |= ((ar >> np.uint32(g)) & np.uint32(1)) << np.uint32(k)
        has |= copies[local]
    return has


def _flip(a: np.ndarray, bit: int) -> np.ndarray:
    """``a[m ^ (1 << bit)]`` for every m, as a view."""
    return a.reshape(-1, 2, 1 << bit)[:, ::-1, :].reshape(-1)


def _gray_kernel(n: int, h: Graph, gray_mask: int) -> np.ndarray:
    """Boolean table over black masks: saturated trigraphs with this gray placement."""
    npairs = num_pairs(n)
    a = _contains_table(n, h)
    gray_bits = [p for p in range(npairs) if gray_mask >> p & 1]
    for p in gray_bits:
        a = a | _flip(a, p)
    sat = ~a
    for p in range(npairs):
        if gray_mask >> p & 1:
            # black masks must leave gray pairs clear
            sat.reshape(-1, 2, 1 << p)[:, 1, :] = False
        else:
            sat &= _flip(a, p)
    return sat


def saturation_table(n: int, h: Graph) -> np.ndarray:
    """``sat[m]``: the labeled graph with mask ``m`` is induced-saturated for ``h``."""
    return _gray_kernel(n, h, 0)


def _class_result(args: tuple[int, Graph, int]) -> tuple[int, int, int]:
    """(gray mask, first saturated black mask or -1, number of saturated black masks)."""
    n, h, gm = args
    sat = _gray_kernel(n, h, gm)
    hits = np.flatnonzero(sat)
    return gm, int(hits[0]) if hits.size else -1, int(hits.size)


def gray_classes(n: int, g: int) -> list[int]:
    """First mask (ascending) of every isomorphism class of g-edge gray placements."""
    seen = set()
    reps = []
    npairs = num_pairs(n)
    for combo in combinations(range(npairs), g):
        m = sum(1 << p for p in combo)
        key = canonical_form(Graph.from_mask(n, m))
        if key not in seen:
            seen.add(key)
            reps.append(m)
    reps.sort()
    return reps


def projected_indsat_space(n: int, gray_max: int) -> int:
    """Labeled trigraphs examined: 2^(N-g) black masks per gray placement."""
    npairs = num_pairs(n)
    total = 0
    for g in range(min(gray_max, npairs) + 1):
        total += len(list(combinations(range(npairs), g))) * (1 << (npairs - g))
    return total


def search_indsat(
    n: int,
    h: Graph,
    gray_max: int,
    jobs: int | None = None,
    override: bool = False,
) -> SearchReport:
    """Least number of gray pairs in an ``n``-vertex ``h``-saturated trigraph."""
    if not override and (n > INDSAT_N_GUARD or gray_max > INDSAT_GRAY_GUARD):
        raise GuardError(
            f"search_indsat guard: n <= {INDSAT_N_GUARD} and gray_max <= {INDSAT_GRAY_GUARD}"
        )
    jobs = jobs or default_jobs()
    start = time.perf_counter()
    npairs = num_pairs(n)
    nodes = 0
    for g in range(min(gray_max, npairs) + 1):
        reps = gray_classes(n, g)
        tasks = [(n, h, gm) for gm in reps]
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_class_result, tasks))
        else:
            results = [_class_result(t) for t in tasks]
        nodes += len(reps) << (npairs - g)
        found = [(gm, b) for gm, b, _ in results if b >= 0]
        if found:
            gm, b = min(found)
            cert = Trigraph.from_masks(n, b, gm)
            distinct = _distinct_saturated(n, h, [gm for gm, _ in found])
            return SearchReport(
                n, h, gray_max, g, cert, nodes, time.perf_counter() - start, distinct
            )
    return SearchReport(n, h, gray_max, EXCEEDS_BUDGET, None, nodes, time.perf_counter() - start)


def _distinct_saturated(n: int, h: Graph, gray_masks: list[int], cap: int = 20000) -> int | None:
    """Saturated trigraphs up to color-preserving isomorphism, or None past ``cap``."""
    keys = set()
    for gm in gray_masks:
        hits = np.flatnonzero(_gray_kernel(n, h, gm))
        if len(keys) + hits.size > cap:
            return None
        for b in hits:
            keys.add(canonical_form(Trigraph.from_masks(n, int(b), gm)))
    return len(keys)


# ---------------------------------------------------------------- graphs


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    """Canonical representatives of all graphs on n vertices, in generation order."""
    if n == 0:
        return (Graph.empty(0),)
    seen = set()
    out = []
    for parent in _classes(n - 1):
        for nb in range(1 << (n - 1)):
            rows = list(parent.rows) + [nb]
            for v in range(n - 1):
                if nb >> v & 1:
                    rows[v] |= 1 << (n - 1)
            g = Graph(n, tuple(rows))
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                out.append(canonical_graph(g))
    return tuple(out)


def enumerate_graphs(
    n: int,
    keep: Callable[[Graph], bool] | None = None,
    dedup: bool = True,
    override: bool = False,
) -> Iterator[Graph]:
    """Graphs on n vertices passing ``keep``; one canonical graph per class when ``dedup``."""
    if not override and n > ENUM_N_GUARD:
        raise GuardError(f"enumerate_graphs guard: n <= {ENUM_N_GUARD}")
    if dedup:
        source: Iterator[Graph] = iter(_classes(n))
    else:
        if not override and n > LABELED_GUARD:
            raise GuardError(f"labeled enumeration guard: n <= {LABELED_GUARD}")
        source = (Graph.from_mask(n, m) for m in range(1 << num_pairs(n)))
    for g in source:
        if keep is None or keep(g):
            yield g


def claw_degree_filter(g: Graph) -> bool:
    return degree_profile_check(g).holds


def search_sis(
    n: int,
    h: Graph,
    edge_max: int,
    prune: bool = False,
    override: bool = False,
) -> SearchReport:
    """Fewest edges in an n-vertex h-saturated graph, trying classes by ascending edge count."""
    if not override and n > SIS_N_GUARD:
        raise GuardError(f"search_sis guard: n <= {SIS_N_GUARD}")
    start = time.perf_counter()
    keep = None
    if prune and canonical_form(h) == canonical_form(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])):
        keep = claw_degree_filter
    cands = [g for g in enumerate_graphs(n, keep, override=override) if g.num_edges <= edge_max]
    cands = sorted(enumerate(cands), key=lambda t: (t[1].num_edges, t[0]))
    nodes = 0
    for _, g in cands:
        nodes += 1
        if verify_graph_saturated(g, h).saturated:
            return SearchReport(n, h, edge_max, g.num_edges, g, nodes, time.perf_counter() - start)
    result = NONE_EXISTS if edge_max >= num_pairs(n) else EXCEEDS_BUDGET
    return SearchReport(n, h, edge_max, result, None, nodes, time.perf_counter() - start)
