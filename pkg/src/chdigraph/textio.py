"""Plain-text digraph files and DOT export.

File layout::

    # comment
    digraph 3
    0 1
    1 2
    2 0
    part parts : 0
    part parts : 1 2

``part`` lines accumulate blocks of a named partition in line order.
Writing sorts edges so that ``write(read(text))`` is stable.
"""

from __future__ import annotations

from typing import Mapping

from .core import Digraph, VertexPartition
from .errors import BadPartition, InvariantViolation, ParseError


def read_digraph(text: str) -> tuple[Digraph, dict[str, VertexPartition]]:
    n = None
    edges: list[tuple[int, int]] = []
    blocks: dict[str, list[list[int]]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        words = line.split()
        if n is None:
            if len(words) != 2 or words[0] != "digraph":
                raise ParseError(f"line {lineno}: expected 'digraph <n>', got {raw!r}")
            n = _parse_int(words[1], lineno)
            if n < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
            continue
        if words[0] == "part":
            if len(words) < 3 or words[2] != ":":
                raise ParseError(f"line {lineno}: expected 'part <name> : <vertices>'")
            blocks.setdefault(words[1], []).append([_parse_int(w, lineno) for w in words[3:]])
            continue
        if len(words) != 2:
            raise ParseError(f"line {lineno}: expected '<u> <v>', got {raw!r}")
        edges.append((_parse_int(words[0], lineno), _parse_int(words[1], lineno)))
    if n is None:
        raise ParseError("missing 'digraph <n>' header")
    if len(set(edges)) != len(edges):
        raise ParseError("duplicate edge line")
    D = Digraph.from_edges(n, edges)  # raises InvariantViolation
    partitions = {}
    for name, bl in blocks.items():
        try:
            partitions[name] = VertexPartition.from_blocks(n, bl)
        except BadPartition as exc:
            raise InvariantViolation(f"partition {name!r}: {exc}") from None
    return D, partitions


def _parse_int(word: str, lineno: int) -> int:
    try:
        return int(word)
    except ValueError:
        raise ParseError(f"line {lineno}: {word!r} is not an integer") from None


def write_digraph(D: Digraph, partitions: Mapping[str, VertexPartition] | None = None) -> str:
    lines = [f"digraph {D.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in D.sorted_edges())
    for name, P in (partitions or {}).items():
        if P.vertex_count != D.vertex_count:
            raise BadPartition(f"partition {name!r} has the wrong vertex count")
        for block in P.sorted_blocks():
            lines.append(" ".join(["part", name, ":", *map(str, block)]))
    return "\n".join(lines) + "\n"


def to_dot(D: Digraph) -> str:
    lines = ["digraph G {"]
    lines.extend(f"  {u} -> {v};" for u, v in D.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edgelist(D: Digraph) -> str:
    return "".join(f"{u} {v}\n" for u, v in D.sorted_edges())
