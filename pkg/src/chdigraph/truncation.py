"""Bounded pieces of the infinite connected-homogeneous digraphs.

Each builder grows the intended infinite digraph outward from a root to a
given radius and reports the *interior*: the vertices whose complete in- and
out-neighbourhoods are present.  Local properties are asserted on interior
vertices only.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .core import Digraph, PartitionedDigraph, is_tournament
from .errors import DigraphError, NotTournament


@dataclass(frozen=True)
class TruncationReport:
    digraph: Digraph
    interior: frozenset[int]
    family: str
    params: dict = field(default_factory=dict)
    radius: int = 0


def directed_tree_truncation(d_in: int, d_out: int, r: int) -> TruncationReport:
    """Ball of radius ``r`` around the root ``0`` of the regular directed tree.

    Vertices are numbered in breadth-first order; each expanded vertex gets
    its new in-neighbours before its new out-neighbours.
    """
    if d_in < 1 or d_out < 1 or r < 0:
        raise DigraphError("need d_in, d_out >= 1 and r >= 0")
    edges = []
    depth = [0]
    in_used = [0]
    out_used = [0]
    queue = deque([0])
    while queue:
        v = queue.popleft()
        if depth[v] >= r:
            continue
        for kind, missing in (("in", d_in - in_used[v]), ("out", d_out - out_used[v])):
            for _ in range(missing):
                w = len(depth)
                depth.append(depth[v] + 1)
                if kind == "in":
                    edges.append((w, v))
                    in_used.append(0)
                    out_used.append(1)
                else:
                    edges.append((v, w))
                    in_used.append(1)
                    out_used.append(0)
                queue.append(w)
    n = len(depth)
    interior = frozenset(v for v in range(n) if depth[v] < r)
    return TruncationReport(
        Digraph.from_edges(n, edges), interior, "directed_tree", {"d_in": d_in, "d_out": d_out}, r
    )


def dl_truncation(delta: PartitionedDigraph, r: int) -> TruncationReport:
    """Tree of copies of ``delta`` to block depth ``r``.

    ``delta`` must have all edges from its first block ``X`` to its second
    block ``Y``.  Every vertex is meant to lie in two copies: in one as an
    ``X`` vertex (its successors), in the other as a ``Y`` vertex (its
    predecessors).  A vertex that is the ``i``-th member of its side in one
    copy is glued as the ``i``-th (mod side size) member of the other side in
    the next copy.
    """
    if r < 1:
        raise DigraphError("block depth must be >= 1")
    D, P = delta.digraph, delta.partition
    if len(P.blocks) != 2:
        raise DigraphError("delta needs a 2-block partition")
    X, Y = sorted(P.blocks[0]), sorted(P.blocks[1])
    if not X or not Y:
        raise DigraphError("delta needs two non-empty sides")
    in_x = set(X)
    if any(u not in in_x or v in in_x for u, v in D.edges):
        raise DigraphError("delta must have every edge directed from X to Y")
    position = {v: ("X", i) for i, v in enumerate(X)} | {v: ("Y", i) for i, v in enumerate(Y)}

    edges: list[tuple[int, int]] = []
    roles: list[dict[str, int]] = []  # global vertex -> {side: block id}
    blocks: deque = deque()
    block_count = 0

    def add_block(depth: int, glue: tuple[int, int] | None):
        nonlocal block_count
        bid = block_count
        block_count += 1
        mapping = {}
        for d in D.vertices:
            if glue is not None and d == glue[0]:
                mapping[d] = glue[1]
            else:
                mapping[d] = len(roles)
                roles.append({})
            roles[mapping[d]][position[d][0]] = bid
        edges.extend((mapping[u], mapping[v]) for u, v in D.edges)
        blocks.append((depth, mapping))

    add_block(1, None)
    while blocks:
        depth, mapping = blocks.popleft()
        if depth >= r:
            continue
        for d in D.vertices:
            g = mapping[d]
            side, i = position[d]
            other = "Y" if side == "X" else "X"
            if other in roles[g]:
                continue
            pool = Y if other == "Y" else X
            add_block(depth + 1, (pool[i % len(pool)], g))
    interior = frozenset(v for v, rl in enumerate(roles) if len(rl) == 2)
    return TruncationReport(Digraph.from_edges(len(roles), edges), interior, "DL", {}, r)


def x_lambda_truncation(T: Digraph, lam: int, r: int) -> TruncationReport:
    """Tree of tournament blocks to block depth ``r``; interior vertices lie in ``lam`` blocks.

    A vertex playing role ``t`` of ``T`` in the block that created it plays
    role ``t`` in all of its other blocks.
    """
    if not is_tournament(T):
        raise NotTournament("blocks must be tournaments")
    if T.vertex_count < 2 or lam < 2 or r < 1:
        raise DigraphError("need |T| >= 2, lam >= 2 and r >= 1")
    edges: list[tuple[int, int]] = []
    count: list[int] = []
    blocks: deque = deque()

    def add_block(depth: int, glue: tuple[int, int] | None):
        mapping = {}
        for t in T.vertices:
            if glue is not None and t == glue[0]:
                mapping[t] = glue[1]
                count[glue[1]] += 1
            else:
                mapping[t] = len(count)
                count.append(1)
        edges.extend((mapping[u], mapping[v]) for u, v in T.edges)
        blocks.append((depth, mapping))

    add_block(1, None)
    while blocks:
        depth, mapping = blocks.popleft()
        if depth >= r:
            continue
        for t in T.vertices:
            g = mapping[t]
            for _ in range(lam - count[g]):
                add_block(depth + 1, (t, g))
    interior = frozenset(v for v, c in enumerate(count) if c == lam)
    return TruncationReport(Digraph.from_edges(len(count), edges), interior, "X_lambda", {"lambda": lam}, r)


class _SemiregularBall:
    """Ball of radius ``r`` around an X-root in the tree where X-vertices have
    degree ``dx`` and Y-vertices degree ``dy``; every tree edge becomes a
    subdivision vertex numbered in creation order."""

    def __init__(self, dx: int, dy: int, r: int):
        self.kind = ["X"]
        self.depth = [0]
        self.parent_edge: list[int | None] = [None]
        self.children: list[list[int]] = [[]]  # tree vertex -> child subdivision vertices
        self.ends: list[tuple[int, int]] = []  # subdivision vertex -> (x, y)
        queue = deque([0])
        while queue:
            v = queue.popleft()
            if self.depth[v] >= r:
                continue
            full = dx if self.kind[v] == "X" else dy
            have = 0 if self.parent_edge[v] is None else 1
            for _ in range(full - have):
                w = len(self.kind)
                self.kind.append("Y" if self.kind[v] == "X" else "X")
                self.depth.append(self.depth[v] + 1)
                s = len(self.ends)
                self.ends.append((v, w) if self.kind[v] == "X" else (w, v))
                self.parent_edge.append(s)
                self.children.append([])
                self.children[v].append(s)
                queue.append(w)
        self.r = r

    def around(self, v: int) -> list[int]:
        """Subdivision vertices at ``v``: parent edge first, then children."""
        pe = self.parent_edge[v]
        return ([pe] if pe is not None else []) + self.children[v]

    def is_full(self, v: int) -> bool:
        return self.depth[v] < self.r

    def interior(self, x_limit: int, y_limit: int) -> frozenset[int]:
        return frozenset(
            s for s, (x, y) in enumerate(self.ends) if self.depth[x] <= x_limit and self.depth[y] <= y_limit
        )


def m_truncation(k: int, m: int, r: int) -> TruncationReport:
    """The digraph built from the subdivided semiregular tree with X-degree ``m``
    and Y-degree ``k``, restricted to a ball of radius ``r``.

    Around each X-vertex the subdivision vertices carry the cyclic order
    parent-edge-first; ``succ(v)`` is the next one.  For each Y-vertex ``y``
    and ``w, u`` in its neighbourhood with ``w != u`` the edge
    ``w -> succ(u)`` is present.  Vertices are the tree edges.
    """
    if k < 3 or m < 2 or r < 2:
        raise DigraphError("need k >= 3, m >= 2 and r >= 2")
    ball = _SemiregularBall(m, k, r)
    succ: dict[int, int] = {}
    for x, kind in enumerate(ball.kind):
        if kind == "X" and ball.is_full(x):
            ring = ball.around(x)
            for i, s in enumerate(ring):
                succ[s] = ring[(i + 1) % len(ring)]
    edges = set()
    for y, kind in enumerate(ball.kind):
        if kind != "Y":
            continue
        nb = ball.around(y)
        for w in nb:
            for u in nb:
                if u != w and u in succ:
                    edges.add((w, succ[u]))
    D = Digraph.from_edges(len(ball.ends), edges)
    return TruncationReport(D, ball.interior(r - 2, r - 2), "M", {"k": k, "m": m}, r)


def m_prime_truncation(m: int, r: int) -> TruncationReport:
    """The digraph built from the subdivided tree with X-degree ``2m`` and Y-degree 2.

    Each X-vertex numbers its subdivision vertices ``1..2m`` so that the two
    neighbours of every Y-vertex get indices of different parity; ``succ``
    follows this numbering cyclically.  For each Y-vertex with even-indexed
    neighbour ``a`` and odd-indexed neighbour ``b`` the edges run from ``a``
    and ``succ(a)`` to ``b`` and ``succ(b)``.
    """
    if m < 2 or r < 2:
        raise DigraphError("need m >= 2 and r >= 2")
    ball = _SemiregularBall(2 * m, 2, r)
    index: dict[int, int] = {}
    succ: dict[int, int] = {}
    for x, kind in enumerate(ball.kind):  # breadth-first, so parents come first
        if kind != "X":
            continue
        pe = ball.parent_edge[x]
        taken = set()
        if pe is not None:
            y = ball.ends[pe][1]
            sibling = ball.parent_edge[y]  # the other subdivision vertex at y
            want = 2 if index[sibling] % 2 else 1
            index[pe] = want
            taken.add(want)
        free = [i for i in range(1, 2 * m + 1) if i not in taken]
        for s, i in zip(ball.children[x], free):
            index[s] = i
        if ball.is_full(x):
            by_index = {index[s]: s for s in ball.around(x)}
            for i, s in by_index.items():
                succ[s] = by_index[i % (2 * m) + 1]
    edges = set()
    for y, kind in enumerate(ball.kind):
        if kind != "Y":
            continue
        nb = ball.around(y)
        if len(nb) != 2:
            continue
        a, b = nb if index[nb[0]] % 2 == 0 else nb[::-1]
        sources = [a] + ([succ[a]] if a in succ else [])
        targets = [b] + ([succ[b]] if b in succ else [])
        edges.update((s, t) for s in sources for t in targets)
    D = Digraph.from_edges(len(ball.ends), edges)
    # in-edges of an even vertex pass through succ() at an X-vertex two levels further out
    return TruncationReport(D, ball.interior(r - 3, r - 2), "M'", {"m": m}, r)
