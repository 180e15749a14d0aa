"""Canonical labelling by partition refinement and individualization.

Works on an edge-colored complete graph: a plain graph uses colors {0, 1},
a trigraph uses white=0, black=1, gray=2.  The canonical labelling is the
leaf of the individualization-refinement tree whose permuted adjacency rows
are largest; the canonical string lists pair colors in that labelling.  Automorphisms found at equal leaves
prune sibling branches that lie in the same orbit of the prefix stabilizer.
"""

from __future__ import annotations

from indsat_lab.graph import Graph, GraphError, GuardError, Trigraph

CANON_GUARD = 16


def _color_rows(x: Graph | Trigraph) -> tuple[int, list[list[int]]]:
    """Per color ``c >= 1``, a list of row bitmasks."""
    if isinstance(x, Graph):
        return x.n, [list(x.rows)]
    if isinstance(x, Trigraph):
        return x.n, [list(x.black), list(x.gray)]
    raise GraphError(f"cannot canonize {type(x).__name__}")


def _refine(cells: list[list[int]], layers: list[list[int]]) -> list[list[int]]:
    """Split cells until every vertex in a cell sees each cell equally often."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                if len(layers) == 1:
                    r = layers[0][v]
                    sig[v] = tuple([(r & m).bit_count() for m in masks])
                else:
                    sig[v] = tuple([(layer[v] & m).bit_count() for layer in layers for m in masks])
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
                continue
            for k in keys:
                out.append([v for v in cell if sig[v] == k])
        if len(out) == len(cells):
            return out
        cells = out


def _leaf_key(order: list[int], layers: list[list[int]], n: int) -> tuple[int, ...]:
    """Permuted rows of every color layer; injective in the relabelled structure."""
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    key = []
    for layer in layers:
        for v in order:
            r = 0
            row = layer[v]
            while row:
                low = row & -row
                r |= 1 << pos[low.bit_length() - 1]
                row ^= low
            key.append(r)
    return tuple(key)


def _pair_string(order: list[int], layers: list[list[int]], n: int) -> bytes:
    out = bytearray()
    for j in range(n):
        vj = order[j]
        for i in range(j):
            vi = order[i]
            c = 0
            for k, layer in enumerate(layers):
                if layer[vi] >> vj & 1:
                    c = k + 1
                    break
            out.append(c)
    return bytes(out)


def canonical_labeling(x: Graph | Trigraph, guard: int = CANON_GUARD) -> tuple[list[int], bytes]:
    """Return ``(order, form)``: ``order[i]`` is the vertex placed at position ``i``."""
    n, layers = _color_rows(x)
    if n > guard:
        raise GuardError(f"canonical form guard: n={n} exceeds {guard}")
    if n == 0:
        return [], bytes([0])

    best: list = [None, None]  # string, order
    autos: list[list[int]] = []

    def orbit_roots(fixed: list[int], cand: list[int]) -> dict[int, int]:
        parent = {v: v for v in range(n)}

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for gamma in autos:
            if all(gamma[f] == f for f in fixed):
                for v in range(n):
                    a, b = find(v), find(gamma[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return {v: find(v) for v in cand}

    def search(cells: list[list[int]], fixed: list[int]) -> None:
        target = None
        for cell in cells:
            if len(cell) > 1 and (target is None or len(cell) < len(target)):
                target = cell
        if target is None:
            order = [c[0] for c in cells]
            s = _leaf_key(order, layers, n)
            if best[0] is None or s > best[0]:
                best[0], best[1] = s, order
            elif s == best[0]:
                gamma = [0] * n
                for a, b in zip(order, best[1]):
                    gamma[a] = b
                autos.append(gamma)
            return
        ti = cells.index(target)
        explored: list[int] = []
        for v in sorted(target):
            if explored:
                roots = orbit_roots(fixed, explored + [v])
                if any(roots[v] == roots[e] for e in explored):
                    continue
            rest = [w for w in target if w != v]
            child = cells[:ti] + [[v], rest] + cells[ti + 1 :]
            search(_refine(child, layers), fixed + [v])
            explored.append(v)

    search(_refine([list(range(n))], layers), [])
    order = best[1]
    return order, bytes([n]) + _pair_string(order, layers, n)


def canonical_form(x: Graph | Trigraph, guard: int = CANON_GUARD) -> bytes:
    """Byte string equal for two objects iff they are isomorphic (color-aware for trigraphs)."""
    tag = b"T" if isinstance(x, Trigraph) else b"G"
    return tag + canonical_labeling(x, guard)[1]


def canonical_graph(g: Graph, guard: int = CANON_GUARD) -> Graph:
    """The canonical representative of ``g``'s isomorphism class."""
    order, _ = canonical_labeling(g, guard)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


__all__ = ["canonical_form", "canonical_labeling", "canonical_graph", "CANON_GUARD"]
