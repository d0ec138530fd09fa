"""The digraph value type and its structural algebra.

Vertices are the dense integers ``0 .. n-1``.  Every constructor in the
package documents how it numbers its vertices so that tests can refer to
particular vertices deterministically.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Literal, Sequence

from .errors import (
    BadPartition,
    InvalidVertex,
    InvariantViolation,
    LoopCreated,
    NotTripartite,
    SymmetricPair,
)

Edge = tuple[int, int]
Direction = Literal["out", "in"]

#: diameter of a disconnected digraph
INFINITY = math.inf


@dataclass(frozen=True)
class Digraph:
    """Finite digraph with an irreflexive, antisymmetric edge relation."""

    vertex_count: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))
        n = self.vertex_count
        if n < 0:
            raise InvariantViolation(f"negative vertex count {n}")
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvariantViolation(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InvariantViolation(f"loop at vertex {u}")
            if (v, u) in self.edges:
                raise InvariantViolation(f"symmetric pair {{{u},{v}}}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge] = ()) -> "Digraph":
        return cls(n, frozenset((int(u), int(v)) for u, v in edges))

    def __repr__(self):
        return f"Digraph({self.vertex_count}, {sorted(self.edges)})"

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    # Adjacency bitmasks; bit u of out_masks[v] is set iff v -> u.
    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
        return tuple(masks)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        return tuple(o | i for o, i in zip(self.out_masks, self.in_masks))

    @cached_property
    def out_lists(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(iter_bits(m)) for m in self.out_masks)

    @cached_property
    def in_lists(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(iter_bits(m)) for m in self.in_masks)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self.edges or (v, u) in self.edges

    def out_degree(self, v: int) -> int:
        return len(self.out_lists[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_lists[v])

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.vertex_count):
            raise InvalidVertex(f"vertex {v!r} not in 0..{self.vertex_count - 1}")


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexPartition:
    """Ordered, pairwise disjoint blocks covering ``0 .. n-1``; empty blocks are allowed."""

    vertex_count: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(frozenset(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        seen: set[int] = set()
        for b in blocks:
            for v in b:
                if not (0 <= v < self.vertex_count):
                    raise BadPartition(f"vertex {v} out of range")
                if v in seen:
                    raise BadPartition(f"vertex {v} lies in two blocks")
                seen.add(v)
        if len(seen) != self.vertex_count:
            missing = sorted(set(range(self.vertex_count)) - seen)
            raise BadPartition(f"vertices {missing} are in no block")

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "VertexPartition":
        return cls(n, tuple(frozenset(b) for b in blocks))

    @classmethod
    def singletons(cls, n: int) -> "VertexPartition":
        return cls(n, tuple(frozenset([v]) for v in range(n)))

    @classmethod
    def from_labels(cls, labels: Sequence) -> "VertexPartition":
        """Blocks of equal labels, ordered by first occurrence."""
        order: dict = {}
        for v, lab in enumerate(labels):
            order.setdefault(lab, []).append(v)
        return cls(len(labels), tuple(frozenset(b) for b in order.values()))

    def __len__(self):
        return len(self.blocks)

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        out = [0] * self.vertex_count
        for i, b in enumerate(self.blocks):
            for v in b:
                out[v] = i
        return tuple(out)

    def sorted_blocks(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]

    def canonical(self) -> "VertexPartition":
        """Same equivalence relation with blocks ordered by their least element."""
        nonempty = sorted((b for b in self.blocks if b), key=min)
        return VertexPartition(self.vertex_count, tuple(nonempty))


@dataclass(frozen=True)
class PartitionedDigraph:
    digraph: Digraph
    partition: VertexPartition

    def __post_init__(self):
        if self.partition.vertex_count != self.digraph.vertex_count:
            raise BadPartition("partition and digraph disagree on the vertex count")


def induced_subdigraph(D: Digraph, S: Iterable[int]) -> tuple[Digraph, dict[int, int]]:
    """Subdigraph induced by ``S``; vertices keep their relative order."""
    verts = sorted(set(S))
    for v in verts:
        D.check_vertex(v)
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in D.edges if u in index and v in index]
    return Digraph.from_edges(len(verts), edges), index


def neighbours(D: Digraph, v: int, direction: Direction = "out") -> frozenset[int]:
    D.check_vertex(v)
    if direction == "out":
        return frozenset(D.out_lists[v])
    if direction == "in":
        return frozenset(D.in_lists[v])
    raise ValueError(f"direction must be 'out' or 'in', got {direction!r}")


def local_digraph(D: Digraph, v: int, direction: Direction = "out") -> Digraph:
    return induced_subdigraph(D, neighbours(D, v, direction))[0]


def underlying_graph(D: Digraph) -> frozenset[frozenset[int]]:
    return frozenset(frozenset(e) for e in D.edges)


def components(D: Digraph) -> VertexPartition:
    """Weakly connected components, ordered by least vertex."""
    comp = [-1] * D.vertex_count
    blocks = []
    for s in D.vertices:
        if comp[s] >= 0:
            continue
        comp[s] = len(blocks)
        block = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in iter_bits(D.adj_masks[u]):
                if comp[w] < 0:
                    comp[w] = comp[s]
                    block.append(w)
                    queue.append(w)
        blocks.append(frozenset(block))
    return VertexPartition(D.vertex_count, tuple(blocks))


def is_connected(D: Digraph) -> bool:
    if D.vertex_count <= 1:
        return True
    full = (1 << D.vertex_count) - 1
    seen = frontier = 1
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= D.adj_masks[u]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == full


def distances_from(D: Digraph, s: int) -> list[float]:
    """Underlying-graph distances from ``s``; unreachable vertices get INFINITY."""
    dist: list[float] = [INFINITY] * D.vertex_count
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in iter_bits(D.adj_masks[u]):
            if dist[w] == INFINITY:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(D: Digraph) -> float:
    """Largest underlying distance; 0 for the empty digraph, INFINITY if disconnected."""
    if D.vertex_count == 0:
        return 0
    best = 0
    for s in D.vertices:
        best = max(best, max(distances_from(D, s)))
        if best == INFINITY:
            return INFINITY
    return int(best)


def lexicographic_product(D: Digraph, E: Digraph) -> Digraph:
    """``D[E]``: vertex ``(x, x')`` is numbered ``x * |E| + x'``."""
    m = E.vertex_count
    edges = []
    for x, y in D.edges:
        for a in range(m):
            for b in range(m):
                edges.append((x * m + a, y * m + b))
    for x in D.vertices:
        for a, b in E.edges:
            edges.append((x * m + a, x * m + b))
    return Digraph.from_edges(D.vertex_count * m, edges)


def disjoint_union(digraphs: Sequence[Digraph]) -> Digraph:
    edges = []
    offset = 0
    for D in digraphs:
        edges.extend((u + offset, v + offset) for u, v in D.edges)
        offset += D.vertex_count
    return Digraph.from_edges(offset, edges)


def reverse(D: Digraph) -> Digraph:
    return Digraph.from_edges(D.vertex_count, ((v, u) for u, v in D.edges))


def relabel(D: Digraph, perm: Sequence[int]) -> Digraph:
    """Image of ``D`` under the vertex bijection ``v -> perm[v]``."""
    return Digraph.from_edges(D.vertex_count, ((perm[u], perm[v]) for u, v in D.edges))


def quotient(D: Digraph, P: VertexPartition) -> Digraph:
    """One vertex per block of ``P`` (block order); raises if the result is not a digraph."""
    if P.vertex_count != D.vertex_count:
        raise BadPartition("partition does not cover the digraph's vertices")
    block = P.block_of
    edges = set()
    for u, v in sorted(D.edges):
        a, b = block[u], block[v]
        if a == b:
            raise LoopCreated(f"edge ({u},{v}) lies inside block {a}")
        if (b, a) in edges:
            raise SymmetricPair(f"blocks {a} and {b} have edges in both directions")
        edges.add((a, b))
    return Digraph.from_edges(len(P.blocks), edges)


def tripartite_complement(D: Digraph, P: VertexPartition) -> Digraph:
    """Edges ``V_i -> V_{i+1}`` (indices mod 3) that are absent from ``D``."""
    if len(P.blocks) != 3:
        raise BadPartition(f"need exactly 3 blocks, got {len(P.blocks)}")
    block = P.block_of
    for u, v in D.edges:
        if block[v] != (block[u] + 1) % 3:
            raise NotTripartite(f"edge ({u},{v}) runs from part {block[u]} to part {block[v]}")
    edges = []
    for i in range(3):
        for u in P.blocks[i]:
            for v in P.blocks[(i + 1) % 3]:
                if (u, v) not in D.edges:
                    edges.append((u, v))
    return Digraph.from_edges(D.vertex_count, edges)


def is_tournament(D: Digraph) -> bool:
    n = D.vertex_count
    return D.edge_count == n * (n - 1) // 2


def is_independent_set(D: Digraph, S: Iterable[int]) -> bool:
    mask = 0
    for v in S:
        mask |= 1 << v
    return all(not (D.adj_masks[v] & mask) for v in iter_bits(mask))
