"""Alternating walks and the reachability relation on edges.

Consecutive edges of an alternating walk share a tail or a head, and any two
edges sharing a tail or a head form an alternating walk of length two, so the
reachability classes are the classes of the closure of "shares an endpoint
in the same role".  That closure is computed here with a union-find over
edges.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .core import Digraph, VertexPartition, induced_subdigraph, is_connected
from .errors import (
    ClassesNotIsomorphic,
    DigraphError,
    EdgeAbsent,
    NotACycle,
    NotApplicable,
    NotAWalk,
    NotEquivalence,
    NotOneArcTransitive,
)
from .symmetry import is_isomorphic, transitivity_report

Edge = tuple[int, int]


@dataclass(frozen=True)
class EdgeClass:
    edges: frozenset[Edge]
    vertices: frozenset[int]
    tail_side: frozenset[int]
    head_side: frozenset[int]

    @property
    def bipartite(self) -> bool:
        return not (self.tail_side & self.head_side)


@dataclass(frozen=True)
class EdgeClassPartition:
    class_of: dict[Edge, int]
    classes: tuple[EdgeClass, ...]

    def __len__(self):
        return len(self.classes)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def partition_from_labels(edges: Sequence[Edge], label: Sequence[int]) -> EdgeClassPartition:
    """Build an EdgeClassPartition from per-edge labels; classes are ordered by least edge."""
    groups: dict[int, list[Edge]] = {}
    for e, lab in zip(edges, label):
        groups.setdefault(lab, []).append(e)
    ordered = sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])
    classes = []
    class_of = {}
    for cid, group in enumerate(ordered):
        tails = frozenset(u for u, _ in group)
        heads = frozenset(v for _, v in group)
        classes.append(EdgeClass(frozenset(group), tails | heads, tails, heads))
        for e in group:
            class_of[e] = cid
    return EdgeClassPartition(class_of, tuple(classes))


def reachability_partition(D: Digraph) -> EdgeClassPartition:
    edges = D.sorted_edges()
    uf = _UnionFind(len(edges))
    first_out: dict[int, int] = {}
    first_in: dict[int, int] = {}
    for i, (u, v) in enumerate(edges):
        if u in first_out:
            uf.union(first_out[u], i)
        else:
            first_out[u] = i
        if v in first_in:
            uf.union(first_in[v], i)
        else:
            first_in[v] = i
    return partition_from_labels(edges, [uf.find(i) for i in range(len(edges))])


def class_digraph(D: Digraph, cls: EdgeClass) -> tuple[Digraph, dict[int, int]]:
    """The digraph spanned by one class, vertices renumbered in increasing order."""
    verts = sorted(cls.vertices)
    index = {v: i for i, v in enumerate(verts)}
    return Digraph.from_edges(len(verts), ((index[u], index[v]) for u, v in cls.edges)), index


def reachability_digraph(D: Digraph, e: Edge) -> Digraph:
    e = tuple(e)
    if e not in D.edges:
        raise EdgeAbsent(f"{e} is not an edge")
    part = reachability_partition(D)
    return class_digraph(D, part.classes[part.class_of[e]])[0]


def is_universal(D: Digraph) -> bool:
    if not D.edges:
        raise DigraphError("the reachability relation of an edgeless digraph is undefined here")
    return len(reachability_partition(D)) == 1


def delta(D: Digraph) -> Digraph:
    """The common isomorphism type of the reachability digraphs of a connected 1-arc-transitive D."""
    if not D.edges or not is_connected(D) or not transitivity_report(D).one_arc_transitive:
        raise NotOneArcTransitive("delta needs a connected 1-arc-transitive digraph with edges")
    part = reachability_partition(D)
    digraphs = [class_digraph(D, c)[0] for c in part.classes]
    for other in digraphs[1:]:
        if not is_isomorphic(digraphs[0], other):
            raise ClassesNotIsomorphic("reachability digraphs differ; the transitivity check is wrong")
    return digraphs[0]


@dataclass(frozen=True)
class DichotomyReport:
    branch: str  # "universal", "bipartite", "both" or "none"
    delta_connected: bool
    delta_one_arc_transitive: bool
    universal: bool
    delta_isomorphic_to_d: bool
    delta_bipartite: bool

    @property
    def falsified(self) -> bool:
        return self.branch == "none" or not (self.delta_connected and self.delta_one_arc_transitive)


def check_prop_5_1(D: Digraph) -> DichotomyReport:
    """Test the universal-or-bipartite dichotomy for a connected 1-arc-transitive D."""
    d = delta(D)
    part = reachability_partition(D)
    universal = len(part) == 1
    iso = universal and is_isomorphic(d, D)
    bip = part.classes[0].bipartite
    a = universal and iso
    if a and bip:
        branch = "both"
    elif a:
        branch = "universal"
    elif bip:
        branch = "bipartite"
    else:
        branch = "none"
    return DichotomyReport(
        branch=branch,
        delta_connected=is_connected(d),
        delta_one_arc_transitive=transitivity_report(d).one_arc_transitive,
        universal=universal,
        delta_isomorphic_to_d=iso,
        delta_bipartite=bip,
    )


# --------------------------------------------------------------------------
# walks and witness cycles
# --------------------------------------------------------------------------


def is_alternating_walk(D: Digraph, walk: Sequence[int]) -> bool:
    for a, b in zip(walk, walk[1:]):
        if not D.adjacent(a, b):
            raise NotAWalk(f"{a} and {b} are not adjacent")
    for i in range(1, len(walk) - 1):
        prev_is_out = D.has_edge(walk[i], walk[i - 1])
        next_is_out = D.has_edge(walk[i], walk[i + 1])
        if prev_is_out != next_is_out:
            return False
    return True


@dataclass(frozen=True)
class WitnessCycle:
    cycle: tuple[int, ...]
    removed_edge: Edge
    two_arc: tuple[int, int, int]
    induced: bool


def _check_cycle(D: Digraph, cycle: Sequence[int]) -> None:
    L = len(cycle)
    if L < 3 or len(set(cycle)) != L:
        raise NotACycle("a cycle needs at least 3 distinct vertices")
    for i in range(L):
        if not D.adjacent(cycle[i], cycle[(i + 1) % L]):
            raise NotACycle(f"{cycle[i]} and {cycle[(i + 1) % L]} are not adjacent")


def _witness_details(D: Digraph, cycle: Sequence[int]):
    L = len(cycle)
    two_arc = None
    for i in range(L):
        a, b, c = cycle[i - 1], cycle[i], cycle[(i + 1) % L]
        if D.adjacent(a, c):
            continue
        if D.has_edge(a, b) and D.has_edge(b, c):
            two_arc = (a, b, c)
        elif D.has_edge(c, b) and D.has_edge(b, a):
            two_arc = (c, b, a)
        if two_arc:
            break
    if two_arc is None:
        return None
    # the deleted edge must lie on the 2-arc, so try its two edges first
    arc_first = sorted(range(L), key=lambda i: {cycle[i], cycle[(i + 1) % L]} <= set(two_arc), reverse=True)
    for i in arc_first:
        u, v = cycle[i], cycle[(i + 1) % L]
        path = [cycle[(i + 1 + j) % L] for j in range(L)]
        if is_alternating_walk(D, path):
            edge = (u, v) if D.has_edge(u, v) else (v, u)
            return edge, two_arc
    return None


def is_witness_cycle(D: Digraph, cycle: Sequence[int]) -> bool:
    """Whether the cycle contains an induced 2-arc and becomes alternating after deleting one edge."""
    _check_cycle(D, cycle)
    return _witness_details(D, cycle) is not None


def _normal_form(cycle: Sequence[int]) -> tuple[int, ...]:
    L = len(cycle)
    variants = []
    for seq in (list(cycle), list(reversed(cycle))):
        for i in range(L):
            variants.append(tuple(seq[i:] + seq[:i]))
    return min(variants)


def _is_induced_cycle(D: Digraph, cycle: Sequence[int]) -> bool:
    sub, _ = induced_subdigraph(D, cycle)
    return sub.edge_count == len(cycle)


def find_witness_cycle(D: Digraph, max_len: int | None = None) -> WitnessCycle | None:
    """Shortest witness cycle (lexicographically least normal form), or None.

    Candidates are alternating paths closed by one extra edge, so the search
    only walks paths whose steps alternate in direction.
    """
    n = D.vertex_count
    if max_len is not None and max_len < 3:
        raise DigraphError("max_len must be at least 3")
    max_len = n if max_len is None else min(max_len, n)
    outs, ins = D.out_lists, D.in_lists
    for L in range(3, max_len + 1):
        found: set[tuple[int, ...]] = set()

        def extend(path: list[int], forward: bool):
            if len(path) == L:
                if D.adjacent(path[-1], path[0]) and _witness_details(D, path):
                    found.add(_normal_form(path))
                return
            x = path[-1]
            step = outs[x] if forward else ins[x]
            for w in step:
                if w not in path:
                    path.append(w)
                    extend(path, not forward)
                    path.pop()

        for s in range(n):
            extend([s], True)
            extend([s], False)
        if found:
            cycle = min(found)
            edge, arc = _witness_details(D, cycle)
            return WitnessCycle(cycle, edge, arc, _is_induced_cycle(D, cycle))
    return None


# --------------------------------------------------------------------------
# quotient relations
# --------------------------------------------------------------------------


def eq_in_nbhd(D: Digraph) -> VertexPartition:
    """Vertices with equal in-neighbourhoods, blocks ordered by least vertex."""
    return VertexPartition.from_labels([D.in_masks[v] for v in D.vertices])


def eq_reach_sides(D: Digraph) -> VertexPartition:
    """``x ~ y`` iff ``x == y`` or two distinct reachability digraphs have both on the same side."""
    part = reachability_partition(D)
    membership: list[list[tuple[int, str]]] = [[] for _ in D.vertices]
    for cid, cls in enumerate(part.classes):
        if not cls.bipartite:
            raise NotApplicable(f"reachability class {cid} is not bipartite")
        for v in cls.tail_side:
            membership[v].append((cid, "tail"))
        for v in cls.head_side:
            membership[v].append((cid, "head"))
    for v in D.vertices:
        if len(membership[v]) < 2:
            raise NotApplicable(f"vertex {v} lies in fewer than two reachability digraphs")
    related = [[x == y for y in D.vertices] for x in D.vertices]
    for x, y in itertools.combinations(D.vertices, 2):
        if len(set(membership[x]) & set(membership[y])) >= 2:
            related[x][y] = related[y][x] = True
    uf = _UnionFind(D.vertex_count)
    for x, y in itertools.combinations(D.vertices, 2):
        if related[x][y]:
            uf.union(x, y)
    labels = [uf.find(v) for v in D.vertices]
    for x, y in itertools.combinations(D.vertices, 2):
        if labels[x] == labels[y] and not related[x][y]:
            raise NotEquivalence(f"{x} and {y} are related only through transitivity")
    return VertexPartition.from_labels(labels)
