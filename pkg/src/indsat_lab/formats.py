"""graph6, the line-oriented trigraph text format, and DOT export."""

from __future__ import annotations

from indsat_lab.graph import EdgeColor, Graph, GraphError, Trigraph, pairs


class FormatError(ValueError):
    """Malformed serialized graph or trigraph."""


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise FormatError("negative order")
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126] + [63 + (n >> s & 63) for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])
    raise FormatError(f"order {n} too large for graph6")


def encode_graph6(g: Graph) -> str:
    out = bytearray(_encode_size(g.n))
    acc = 0
    nbits = 0
    rows = g.rows
    for i, j in pairs(g.n):
        acc = acc << 1 | (rows[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(63 + acc)
            acc = nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return out.decode("ascii")


def decode_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    data = s.encode("ascii", errors="replace")
    if not data:
        raise FormatError("empty graph6 string")
    for c in data:
        if not 63 <= c <= 126:
            raise FormatError(f"character {chr(c)!r} outside graph6 range")
    vals = [c - 63 for c in data]
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] != 63:
        if len(vals) < 4:
            raise FormatError("truncated graph6 size field")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        if len(vals) < 8:
            raise FormatError("truncated graph6 size field")
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        body = vals[8:]
    total = n * (n - 1) // 2
    need = (total + 5) // 6
    if len(body) != need:
        raise FormatError(f"graph6 body has {len(body)} characters, expected {need}")
    rows = [0] * n
    k = 0
    for i, j in pairs(n):
        if body[k // 6] >> (5 - k % 6) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        k += 1
    return Graph(n, tuple(rows))


def encode_trigraph(t: Trigraph) -> str:
    lines = [f"n {t.n}"]
    lines += [f"B {u} {v}" for u, v in t.black_pairs()]
    lines += [f"G {u} {v}" for u, v in t.gray_pairs()]
    return "\n".join(lines) + "\n"


def decode_trigraph(text: str) -> Trigraph:
    n = None
    black: list[tuple[int, int]] = []
    gray: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if fields[0] != "n" or len(fields) != 2:
                raise FormatError(f"line {lineno}: expected 'n <order>'")
            try:
                n = int(fields[1])
            except ValueError:
                raise FormatError(f"line {lineno}: bad order {fields[1]!r}") from None
            if n < 0:
                raise FormatError(f"line {lineno}: negative order")
            continue
        if len(fields) != 3 or fields[0] not in ("B", "G"):
            raise FormatError(f"line {lineno}: expected 'B u v' or 'G u v'")
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex") from None
        if not u < v:
            raise FormatError(f"line {lineno}: pair must satisfy u < v")
        if u < 0 or v >= n:
            raise FormatError(f"line {lineno}: vertex out of range")
        if (u, v) in seen:
            raise FormatError(f"line {lineno}: duplicate pair ({u}, {v})")
        seen.add((u, v))
        (black if fields[0] == "B" else gray).append((u, v))
    if n is None:
        raise FormatError("missing 'n <order>' header")
    try:
        return Trigraph.from_pairs(n, black, gray)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def to_dot(x: Graph | Trigraph) -> str:
    """Trigraphs are written as ``graph T``, graphs as ``graph G``."""
    name = "G" if isinstance(x, Graph) else "T"
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(x.n)]
    if isinstance(x, Graph):
        lines += [f"  {u} -- {v};" for u, v in x.edges()]
    else:
        for u, v in pairs(x.n):
            c = x.color(u, v)
            if c == EdgeColor.BLACK:
                lines.append(f"  {u} -- {v};")
            elif c == EdgeColor.GRAY:
                lines.append(f"  {u} -- {v} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def from_dot(text: str) -> Graph | Trigraph:
    """Parse DOT written by :func:`to_dot`; dashed edges come back as gray."""
    n = 0
    black: list[tuple[int, int]] = []
    gray: list[tuple[int, int]] = []
    is_trigraph = text.lstrip().startswith("graph T")
    for raw in text.splitlines():
        line = raw.strip().rstrip(";").strip()
        if not line or line.startswith("graph") or line == "}":
            continue
        if "--" in line:
            attrs = ""
            if "[" in line:
                line, attrs = line.split("[", 1)
            u, v = (int(p) for p in line.split("--"))
            if "dashed" in attrs:
                gray.append((u, v))
            else:
                black.append((u, v))
            n = max(n, u + 1, v + 1)
        else:
            n = max(n, int(line) + 1)
    if is_trigraph:
        return Trigraph.from_pairs(n, black, gray)
    return Graph.from_edges(n, black)
