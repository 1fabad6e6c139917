"""Text formats for tournaments and digraphs, plus DOT export.

.trn  line 1: n, line 2: C(n,2) bits for pairs (i,j), i<j, row-major;
      '1' means the arc i->j.
.dgr  line 1: n, then n rows of n bits (full matrix, zero diagonal,
      no anti-parallel pair).
"""

from __future__ import annotations

from .core import Digraph, Graph, Ordering, Tournament, bit, iter_bits


class FormatError(ValueError):
    def __init__(self, message: str, line: int, offset: int | None = None):
        where = f"line {line}" if offset is None else f"line {line}, offset {offset}"
        super().__init__(f"{message} ({where})")
        self.line = line
        self.offset = offset


def serialize_tournament(t: Tournament) -> str:
    bits = []
    for i in range(t.n):
        for j in range(i + 1, t.n):
            bits.append("1" if t.has_arc(i, j) else "0")
    return f"{t.n}\n{''.join(bits)}\n"


def parse_tournament(text: str) -> Tournament:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty input", 1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise FormatError("header is not an integer", 1) from None
    if n < 1:
        raise FormatError("vertex count must be positive", 1)
    expected = n * (n - 1) // 2
    body = lines[1].strip() if len(lines) > 1 else ""
    if len(lines) > 2 and any(line.strip() for line in lines[2:]):
        raise FormatError("unexpected extra lines", 3)
    if len(body) != expected:
        raise FormatError(f"expected {expected} bits, got {len(body)}", 2)
    rows = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            c = body[k]
            if c == "1":
                rows[i] |= bit(j)
            elif c == "0":
                rows[j] |= bit(i)
            else:
                raise FormatError(f"bad character {c!r}", 2, k)
            k += 1
    return Tournament(n, rows, validate=False)


def serialize_digraph(d: Digraph) -> str:
    out = [str(d.n)]
    for u in range(d.n):
        out.append("".join("1" if d.has_arc(u, v) else "0" for v in range(d.n)))
    return "\n".join(out) + "\n"


def parse_digraph(text: str) -> Digraph:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty input", 1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise FormatError("header is not an integer", 1) from None
    if n < 0:
        raise FormatError("vertex count must be non-negative", 1)
    body = [line.strip() for line in lines[1:] if line.strip()]
    if len(body) != n:
        raise FormatError(f"expected {n} matrix rows, got {len(body)}", 2)
    rows = [0] * n
    for u, line in enumerate(body):
        if len(line) != n:
            raise FormatError(f"row has {len(line)} characters, expected {n}", u + 2)
        for v, c in enumerate(line):
            if c == "1":
                rows[u] |= bit(v)
            elif c != "0":
                raise FormatError(f"bad character {c!r}", u + 2, v)
    for u in range(n):
        if rows[u] & bit(u):
            raise FormatError("loop on the diagonal", u + 2, u)
        for v in iter_bits(rows[u]):
            if rows[v] & bit(u) and v > u:
                raise FormatError(f"anti-parallel pair {u}<->{v}", v + 2, u)
    return Digraph(n, rows, validate=False)


def load(path: str):
    """Load a .trn or .dgr file by extension."""
    if not path.endswith((".trn", ".dgr")):
        raise FormatError(f"unknown extension for {path!r} (want .trn or .dgr)", 1)
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    if path.endswith(".trn"):
        return parse_tournament(text)
    return parse_digraph(text)


def dump(obj, path: str) -> None:
    if isinstance(obj, Tournament):
        text = serialize_tournament(obj)
    elif isinstance(obj, Digraph):
        text = serialize_digraph(obj)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


def to_dot(d, ordering: Ordering | None = None, name: str = "T") -> str:
    """DOT text for a tournament or digraph.

    With an ordering, vertices are chained left to right with invisible
    edges and backward arcs are drawn dashed in red.
    """
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    if ordering is None:
        for v in range(d.n):
            lines.append(f"  v{v};")
        for u, v in d.arcs():
            lines.append(f"  v{u} -> v{v};")
    else:
        if ordering.n != d.n:
            raise ValueError("ordering size does not match vertex count")
        for v in ordering.perm:
            lines.append(f"  v{v};")
        chain = " -> ".join(f"v{v}" for v in ordering.perm)
        if d.n > 1:
            lines.append(f"  {chain} [style=invis, weight=100];")
        for u, v in d.arcs():
            if ordering.pos[u] > ordering.pos[v]:  # backward arc
                lines.append(f"  v{u} -> v{v} [color=red, style=dashed, constraint=false];")
            else:
                lines.append(f"  v{u} -> v{v} [constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def backedge_to_dot(bg, name: str = "B") -> str:
    """DOT text (undirected) for a backedge graph in its ordering's layout."""
    g: Graph = bg.graph
    lines = [f"graph {name} {{", "  rankdir=LR;"]
    for v in bg.ordering.perm:
        lines.append(f"  v{v};")
    chain = " -- ".join(f"v{v}" for v in bg.ordering.perm)
    if g.n > 1:
        lines.append(f"  {chain} [style=invis, weight=100];")
    for u, v in g.edges():
        lines.append(f"  v{u} -- v{v} [constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"
