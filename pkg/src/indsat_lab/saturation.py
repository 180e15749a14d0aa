"""Induced-saturation predicates for graphs, trigraphs and families, plus the
structural checks used for claw- and star-saturated graphs.

Every failing verdict carries a certificate that can be re-checked without
trusting the search that produced it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from indsat_lab.canon import canonical_form
from indsat_lab.graph import (
    REALIZATION_GUARD,
    EdgeColor,
    Graph,
    GuardError,
    Trigraph,
    bits,
    flip_edge,
    pairs,
    realizations,
)
from indsat_lab.induced import Embedding, contains_any, contains_any_through


class VerdictKind(enum.Enum):
    SATURATED = "saturated"
    NOT_FREE = "not-free"
    MISSING_ON_FLIP = "missing-on-flip"
    TRIGRAPH_NOT_FREE = "trigraph-not-free"
    TRIGRAPH_MISSING_ON_GRAY = "trigraph-missing-on-gray"


class Direction(enum.Enum):
    ADDED = "added"
    DELETED = "deleted"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    pair: tuple[int, int] | None = None
    direction: Direction | None = None
    mask: int | None = None
    embedding: Embedding | None = None
    member: int | None = None

    @property
    def saturated(self) -> bool:
        return self.kind is VerdictKind.SATURATED

    def report_line(self) -> str:
        if self.saturated:
            return "SATURATED"
        parts = ["FAIL", self.kind.value]
        if self.pair is not None:
            parts.append(f"{self.pair[0]},{self.pair[1]}")
        if self.direction is not None:
            parts.append(self.direction.value)
        if self.mask is not None:
            parts.append(f"mask={self.mask}")
        if self.member is not None:
            parts.append(f"member={self.member}")
        if self.embedding is not None:
            parts.append(" ".join(str(x) for x in self.embedding))
        return " ".join(parts)


SATURATED = Verdict(VerdictKind.SATURATED)


def is_free(g: Graph, h: Graph) -> bool:
    return contains_any(g, [h]) is None


def verify_family_saturated(x: Graph | Trigraph, family: Sequence[Graph]) -> Verdict:
    """Saturation against a family; the first failure in pair order is reported."""
    if isinstance(x, Trigraph):
        return _verify_trigraph(x, list(family), shortcut=True)
    return _verify_graph(x, list(family))


def _verify_graph(g: Graph, family: list[Graph]) -> Verdict:
    hit = contains_any(g, family)
    if hit is not None:
        return Verdict(VerdictKind.NOT_FREE, member=hit[0], embedding=hit[1])
    for u, v in pairs(g.n):
        # g is free, so any copy in the flipped graph uses both u and v
        if contains_any_through(flip_edge(g, u, v), family, u, v) is None:
            d = Direction.DELETED if g.has_edge(u, v) else Direction.ADDED
            return Verdict(VerdictKind.MISSING_ON_FLIP, pair=(u, v), direction=d)
    return SATURATED


def verify_graph_saturated(g: Graph, h: Graph) -> Verdict:
    v = _verify_graph(g, [h])
    return v if v.member is None else _drop_member(v)


def _drop_member(v: Verdict) -> Verdict:
    return Verdict(v.kind, v.pair, v.direction, v.mask, v.embedding, None)


def _verify_trigraph(t: Trigraph, family: list[Graph], shortcut: bool) -> Verdict:
    gray = t.gray_pairs()
    if len(gray) > REALIZATION_GUARD:
        raise GuardError(f"{len(gray)} gray pairs exceed the realization guard")
    reals = [t.realization(s) for s in range(1 << len(gray))]
    for s, g in enumerate(reals):
        hit = contains_any(g, family)
        if hit is not None:
            return Verdict(VerdictKind.TRIGRAPH_NOT_FREE, mask=s, member=hit[0], embedding=hit[1])
    for u, v in pairs(t.n):
        if t.color(u, v) == EdgeColor.GRAY:
            continue
        if shortcut:
            # realizations keeping the pair's value are realizations of t, already free
            found = any(
                contains_any_through(flip_edge(g, u, v), family, u, v) is not None for g in reals
            )
        else:
            found = any(
                contains_any(g2, family) is not None
                for g in reals
                for g2 in (g, flip_edge(g, u, v))
            )
        if not found:
            return Verdict(VerdictKind.TRIGRAPH_MISSING_ON_GRAY, pair=(u, v))
    return SATURATED


def verify_trigraph_saturated(t: Trigraph, h: Graph, shortcut: bool = True) -> Verdict:
    """With ``shortcut=False`` condition (b) is checked over every realization of T_e."""
    v = _verify_trigraph(t, [h], shortcut)
    return v if v.member is None else _drop_member(v)


@dataclass(frozen=True)
class DegreeProfile:
    at_most_one_isolate: bool
    no_degree_one: bool
    at_most_one_degree_two: bool
    at_most_two_degree_three: bool
    isolate_rest_min_degree_four: bool

    @property
    def holds(self) -> bool:
        return all(
            (
                self.at_most_one_isolate,
                self.no_degree_one,
                self.at_most_one_degree_two,
                self.at_most_two_degree_three,
                self.isolate_rest_min_degree_four,
            )
        )


def degree_sequence_profile(degrees: Sequence[int]) -> DegreeProfile:
    count = [0] * 4
    for d in degrees:
        if d < 4:
            count[d] += 1
    rest_ok = True
    if count[0] >= 1:
        rest_ok = sum(count[1:]) == 0
    return DegreeProfile(
        at_most_one_isolate=count[0] <= 1,
        no_degree_one=count[1] == 0,
        at_most_one_degree_two=count[2] <= 1,
        at_most_two_degree_three=count[3] <= 2,
        isolate_rest_min_degree_four=rest_ok,
    )


def degree_profile_check(g: Graph) -> DegreeProfile:
    """Necessary degree conditions for a claw-induced-saturated graph."""
    return degree_sequence_profile(g.degrees())


@dataclass(frozen=True)
class RBPartition:
    red: frozenset[int]
    blue: frozenset[int]
    other: frozenset[int]


_2K2 = Graph.from_edges(4, [(0, 1), (2, 3)])
_P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


def _neighborhood_is(g: Graph, v: int, h: Graph) -> bool:
    nbrs = g.neighbors(v)
    if len(nbrs) != h.n:
        return False
    sub = g.induced(nbrs)
    return sub.num_edges == h.num_edges and canonical_form(sub) == canonical_form(h)


def classify_neighborhoods(g: Graph) -> RBPartition:
    red, blue, other = set(), set(), set()
    for v in range(g.n):
        if _neighborhood_is(g, v, _2K2):
            red.add(v)
        elif _neighborhood_is(g, v, _P4):
            blue.add(v)
        else:
            other.add(v)
    return RBPartition(frozenset(red), frozenset(blue), frozenset(other))


@dataclass(frozen=True)
class TriangleCensus:
    per_edge: dict[tuple[int, int], int] = field(hash=False)
    edges_in_one: int
    edges_in_two: int
    triangles: int


def triangle_census(g: Graph) -> TriangleCensus:
    per_edge = {}
    for u, v in g.edges():
        per_edge[(u, v)] = (g.rows[u] & g.rows[v]).bit_count()
    triangles = sum(per_edge.values()) // 3
    ones = sum(1 for c in per_edge.values() if c == 1)
    twos = sum(1 for c in per_edge.values() if c == 2)
    return TriangleCensus(per_edge, ones, twos, triangles)


def suff_claw_check(g: Graph) -> bool:
    """Every neighbourhood induces 2K2, which is sufficient for claw-saturation."""
    return all(_neighborhood_is(g, v, _2K2) for v in range(g.n))


def low_degree_set(g: Graph, k: int) -> frozenset[int]:
    if k < 2:
        raise ValueError("k must be at least 2")
    return frozenset(v for v in range(g.n) if g.degree(v) <= k - 1)


def blue_induces_triangles(g: Graph, blue: frozenset[int]) -> bool:
    """Whether the blue vertices induce a disjoint union of triangles."""
    sub = g.induced(sorted(blue))
    for comp in sub.components():
        if comp.bit_count() != 3:
            return False
        a, b, c = bits(comp)
        if not (sub.has_edge(a, b) and sub.has_edge(b, c) and sub.has_edge(a, c)):
            return False
    return True


def verify_definitional(t: Trigraph, h: Graph) -> bool:
    """Literal double loop over T and every T_e; a slow oracle for small cases."""
    if any(contains_any(g, [h]) for g in realizations(t)):
        return False
    for u, v in combinations(range(t.n), 2):
        if t.color(u, v) == EdgeColor.GRAY:
            continue
        te = t.with_color(u, v, EdgeColor.GRAY)
        if not any(contains_any(g, [h]) for g in realizations(te)):
            return False
    return True
