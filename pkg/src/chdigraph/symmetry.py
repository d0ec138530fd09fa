"""Isomorphism, automorphism and homogeneity decisions.

Every search here is individualisation-refinement backtracking: vertex
colours are refined until equitable (same colour => same multiset of
coloured out- and in-neighbours), a vertex of the first non-singleton cell is
individualised, and the search branches over the candidates of that cell.
Colour names are derived from sorted signatures, so they are invariant under
relabelling and the refinement of two digraphs can be compared directly.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

from .core import Digraph, VertexPartition, induced_subdigraph, is_connected, iter_bits, local_digraph
from .errors import BadPartition, InvalidPartialMap, SizeGuardExceeded

Perm = tuple[int, ...]
Mode = Literal["plain", "connected", "bipartite", "two_partite"]

#: default size guards; callers may pass larger values explicitly
HOMOGENEITY_GUARD = 12
GROUP_GUARD = 16


@dataclass(frozen=True)
class PartialMap:
    """An injective vertex map given as ``(source, target)`` pairs."""

    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, mapping: dict[int, int]) -> "PartialMap":
        return cls(tuple(sorted(mapping.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def __str__(self):
        return " ".join(f"{a}->{b}" for a, b in self.pairs)


def validate_partial_map(source: Digraph, target: Digraph, phi: PartialMap) -> None:
    """Raise InvalidPartialMap unless ``phi`` is an isomorphism of induced subdigraphs."""
    src = [a for a, _ in phi.pairs]
    dst = [b for _, b in phi.pairs]
    if len(set(src)) != len(src) or len(set(dst)) != len(dst):
        raise InvalidPartialMap(f"{phi} is not injective")
    for a in src:
        if not 0 <= a < source.vertex_count:
            raise InvalidPartialMap(f"source vertex {a} out of range")
    for b in dst:
        if not 0 <= b < target.vertex_count:
            raise InvalidPartialMap(f"target vertex {b} out of range")
    for (a, x), (b, y) in itertools.permutations(phi.pairs, 2):
        if source.has_edge(a, b) != target.has_edge(x, y):
            raise InvalidPartialMap(f"{phi} does not preserve the pair ({a},{b})")


@dataclass(frozen=True)
class GeneratorSet:
    generators: tuple[Perm, ...]
    group_order: int
    base: tuple[int, ...]

    def vertex_orbits(self, n: int) -> list[frozenset[int]]:
        return orbits(n, self.generators)


# --------------------------------------------------------------------------
# refinement
# --------------------------------------------------------------------------


def _signatures(D: Digraph, c: Sequence[int]) -> list[tuple]:
    outs, ins = D.out_lists, D.in_lists
    return [
        (c[v], tuple(sorted(c[u] for u in outs[v])), tuple(sorted(c[u] for u in ins[v])))
        for v in range(D.vertex_count)
    ]


def refine(D: Digraph, colours: Sequence[int]) -> list[int]:
    """Coarsest equitable refinement of ``colours``, with canonical colour names."""
    c = list(colours)
    k = len(set(c))
    while True:
        sig = _signatures(D, c)
        table = {s: i for i, s in enumerate(sorted(set(sig)))}
        c = [table[s] for s in sig]
        if len(table) == k:
            return c
        k = len(table)


def _refine_pair(D1: Digraph, c1: Sequence[int], D2: Digraph, c2: Sequence[int]):
    k = len(set(c1))
    while True:
        s1 = _signatures(D1, c1)
        s2 = _signatures(D2, c2)
        if Counter(s1) != Counter(s2):
            return None
        table = {s: i for i, s in enumerate(sorted(set(s1)))}
        c1 = [table[s] for s in s1]
        c2 = [table[s] for s in s2]
        if len(table) == k:
            return c1, c2
        k = len(table)


def _target_cell(c: Sequence[int]) -> int | None:
    counts = Counter(c)
    multi = [col for col, cnt in counts.items() if cnt > 1]
    return min(multi) if multi else None


def _is_isomorphism(D1: Digraph, D2: Digraph, perm: Sequence[int]) -> bool:
    if D1.edge_count != D2.edge_count:
        return False
    e2 = D2.edges
    return all((perm[u], perm[v]) in e2 for u, v in D1.edges)


def _initial_colours(n: int, base: Sequence[int] | None, fixed: Sequence[int]) -> list[int]:
    c = list(base) if base is not None else [0] * n
    offset = (max(c) + 1) if c else 0
    for i, v in enumerate(fixed):
        c[v] = offset + i
    return c


def _leaves(D1: Digraph, D2: Digraph, c1: list[int], c2: list[int]) -> Iterator[Perm]:
    """All isomorphisms D1 -> D2 compatible with the colourings, in search order."""
    ref = _refine_pair(D1, c1, D2, c2)
    if ref is None:
        return
    c1, c2 = ref
    cell = _target_cell(c1)
    if cell is None:
        where = {col: w for w, col in enumerate(c2)}
        perm = tuple(where[col] for col in c1)
        if _is_isomorphism(D1, D2, perm):
            yield perm
        return
    v = c1.index(cell)
    fresh = max(c1) + 1
    for w in [w for w, col in enumerate(c2) if col == cell]:
        a = list(c1)
        b = list(c2)
        a[v] = fresh
        b[w] = fresh
        yield from _leaves(D1, D2, a, b)


def find_isomorphism(
    D1: Digraph,
    D2: Digraph,
    pairs: Sequence[tuple[int, int]] = (),
    colours1: Sequence[int] | None = None,
    colours2: Sequence[int] | None = None,
) -> Perm | None:
    """First isomorphism D1 -> D2 extending ``pairs`` and respecting the colourings."""
    n = D1.vertex_count
    if n != D2.vertex_count or D1.edge_count != D2.edge_count:
        return None
    if (colours1 is None) != (colours2 is None):
        raise ValueError("give both colourings or neither")
    c1 = _initial_colours(n, colours1, [a for a, _ in pairs])
    c2 = _initial_colours(n, colours2, [b for _, b in pairs])
    if colours1 is not None and max(colours1, default=0) != max(colours2, default=0):
        return None
    return next(_leaves(D1, D2, c1, c2), None)


def isomorphism(D1: Digraph, D2: Digraph) -> Perm | None:
    """A vertex bijection ``v -> perm[v]`` carrying D1 onto D2, or None."""
    return find_isomorphism(D1, D2)


def is_isomorphic(D1: Digraph, D2: Digraph) -> bool:
    return isomorphism(D1, D2) is not None


def is_automorphism(D: Digraph, perm: Sequence[int]) -> bool:
    return sorted(perm) == list(range(D.vertex_count)) and _is_isomorphism(D, D, perm)


# --------------------------------------------------------------------------
# groups
# --------------------------------------------------------------------------


def orbit_of(start: Sequence[int] | set[int], generators: Sequence[Perm]) -> set[int]:
    orbit = set(start)
    stack = list(orbit)
    while stack:
        x = stack.pop()
        for g in generators:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
    return orbit


def orbits(n: int, generators: Sequence[Perm]) -> list[frozenset[int]]:
    """Orbits of the generated group on ``0..n-1``, ordered by least element."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    blocks: dict[int, set[int]] = {}
    for x in range(n):
        blocks.setdefault(find(x), set()).add(x)
    return sorted((frozenset(b) for b in blocks.values()), key=min)


def _fixes(g: Perm, points: Sequence[int]) -> bool:
    return all(g[p] == p for p in points)


def _guard(D: Digraph, limit: int | None, default: int) -> None:
    limit = default if limit is None else limit
    if D.vertex_count > limit:
        raise SizeGuardExceeded(f"{D.vertex_count} vertices exceeds the guard of {limit}")


def automorphism_generators(
    D: Digraph, colours: Sequence[int] | None = None, max_vertices: int | None = None
) -> GeneratorSet:
    """Strong generators of Aut(D) (colour-preserving if ``colours`` given) and its order.

    Works down a base chosen by individualisation; the order is the product of
    the basic orbit lengths.
    """
    _guard(D, max_vertices, GROUP_GUARD)
    n = D.vertex_count
    base_colours = list(colours) if colours is not None else [0] * n
    c = refine(D, base_colours)
    base: list[int] = []
    cells: list[list[int]] = []
    while (cell := _target_cell(c)) is not None:
        v = c.index(cell)
        base.append(v)
        cells.append([w for w, col in enumerate(c) if col == cell])
        c = list(c)
        c[v] = max(c) + 1
        c = refine(D, c)
    gens: list[Perm] = []
    order = 1
    for i in reversed(range(len(base))):
        prefix = base[:i]
        b = base[i]
        orbit = orbit_of({b}, gens)
        for w in cells[i]:
            if w in orbit:
                continue
            pairs = [(p, p) for p in prefix] + [(b, w)]
            g = find_isomorphism(D, D, pairs, base_colours, base_colours)
            if g is not None:
                gens.append(g)
                orbit = orbit_of(orbit, gens)
        order *= len(orbit)
    return GeneratorSet(tuple(gens), order, tuple(base))


def all_automorphisms(D: Digraph, colours: Sequence[int] | None = None) -> list[Perm]:
    """Every automorphism by leaf enumeration; only for small digraphs."""
    n = D.vertex_count
    c = list(colours) if colours is not None else [0] * n
    return list(_leaves(D, D, list(c), list(c)))


def extends_to_automorphism(D: Digraph, phi: PartialMap, colours: Sequence[int] | None = None) -> bool:
    """True iff some automorphism of D agrees with ``phi``."""
    validate_partial_map(D, D, phi)
    return find_isomorphism(D, D, phi.pairs, colours, colours) is not None


def canonical_form(D: Digraph, max_vertices: int | None = None) -> tuple[tuple[int, int], ...]:
    """Least relabelled edge list over the pruned individualisation tree.

    Two digraphs with the same vertex count have equal forms iff they are
    isomorphic.
    """
    _guard(D, max_vertices, GROUP_GUARD)
    return _canonical(D)[0]


def canonical_labelling(D: Digraph) -> Perm:
    """The relabelling ``v -> perm[v]`` that produces ``canonical_form(D)``."""
    return _canonical(D)[1]


def _canonical(D: Digraph):
    n = D.vertex_count
    if n == 0:
        return (), ()
    gens = automorphism_generators(D, max_vertices=n).generators
    best: list = [None, None]

    def visit(c: list[int], path: list[int]):
        c = refine(D, c)
        cell = _target_cell(c)
        if cell is None:
            code = tuple(sorted((c[u], c[v]) for u, v in D.edges))
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, tuple(c)
            return
        fixing = [g for g in gens if _fixes(g, path)]
        fresh = max(c) + 1
        done: set[int] = set()
        for v in [w for w, col in enumerate(c) if col == cell]:
            if v in done:
                continue
            done |= orbit_of({v}, fixing)
            child = list(c)
            child[v] = fresh
            visit(child, path + [v])

    visit([0] * n, [])
    return best[0], best[1]


# --------------------------------------------------------------------------
# subdigraphs
# --------------------------------------------------------------------------


def enumerate_connected_subdigraphs(D: Digraph, max_size: int) -> Iterator[frozenset[int]]:
    """Each vertex set S with D[S] weakly connected and 1 <= |S| <= max_size, once."""
    adj = D.adj_masks

    def extend(sub: int, ext: int, closed: int, v: int, size: int):
        yield sub
        if size == max_size:
            return
        while ext:
            low = ext & -ext
            w = low.bit_length() - 1
            ext ^= low
            # exclusive neighbours of w: above v and not already next to the subgraph
            excl = adj[w] & ~closed & ~((1 << (v + 1)) - 1)
            yield from extend(sub | low, ext | excl, closed | adj[w], v, size + 1)

    if max_size < 1:
        return
    for v in D.vertices:
        ext = adj[v] & ~((1 << (v + 1)) - 1)
        for mask in extend(1 << v, ext, adj[v] | (1 << v), v, 1):
            yield frozenset(iter_bits(mask))


# --------------------------------------------------------------------------
# homogeneity
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class HomogeneityResult:
    holds: bool
    witness: PartialMap | None = None

    def __bool__(self):
        return self.holds


def _side_colours(D: Digraph, mode: str, partition: VertexPartition | None) -> list[int] | None:
    if mode in ("plain", "connected"):
        return None
    if mode not in ("bipartite", "two_partite"):
        raise ValueError(f"unknown mode {mode!r}")
    if partition is None or len(partition.blocks) != 2:
        raise BadPartition(f"mode {mode} needs a 2-block partition")
    if partition.vertex_count != D.vertex_count:
        raise BadPartition("partition and digraph disagree on the vertex count")
    side = list(partition.block_of)
    if any(side[u] == side[v] for u, v in D.edges):
        raise BadPartition("an edge lies inside one side")
    if mode == "bipartite" and len({side[u] for u, _ in D.edges}) > 1:
        raise BadPartition("bipartite mode needs all edges directed from one side to the other")
    return side


def _state(D: Digraph, a: int, c: int) -> int:
    if (a, c) in D.edges:
        return 1
    if (c, a) in D.edges:
        return 2
    return 0


def homogeneity_check(
    D: Digraph,
    mode: Mode = "plain",
    partition: VertexPartition | None = None,
    max_vertices: int | None = None,
) -> HomogeneityResult:
    """Decide (connected / partition-preserving) homogeneity by the orbit criterion.

    Tuples are grown one vertex at a time from representatives of the
    automorphism orbits on tuples.  At each representative the vertices that
    extend it to a tuple of a given isomorphism type must form one orbit of the
    pointwise stabiliser; if two do not, the map fixing the tuple and sending
    one to the other is an isomorphism of induced subdigraphs that does not
    extend, and it is returned as the witness.  In connected mode tuples are
    grown only through neighbours, so every prefix induces a connected
    subdigraph.
    """
    _guard(D, max_vertices, HOMOGENEITY_GUARD)
    side = _side_colours(D, mode, partition)
    n = D.vertex_count
    connected_only = mode == "connected"
    gens: list[Perm] = []
    level: list[tuple[int, ...]] = [()]
    while level:
        nxt: list[tuple[int, ...]] = []
        for tup in level:
            in_tup = set(tup)
            reach = 0
            for a in tup:
                reach |= D.adj_masks[a]
            groups: dict[tuple, list[int]] = {}
            for c in range(n):
                if c in in_tup:
                    continue
                if connected_only and tup and not (reach >> c) & 1:
                    continue
                key = (side[c] if side else 0, tuple(_state(D, a, c) for a in tup))
                groups.setdefault(key, []).append(c)
            fixing = [g for g in gens if _fixes(g, tup)]
            for members in sorted(groups.values()):
                rep = members[0]
                orbit = orbit_of({rep}, fixing)
                for w in members[1:]:
                    if w in orbit:
                        continue
                    pairs = [(a, a) for a in tup] + [(rep, w)]
                    g = find_isomorphism(D, D, pairs, side, side)
                    if g is None:
                        return HomogeneityResult(False, PartialMap(tuple(pairs)))
                    gens.append(g)
                    fixing.append(g)
                    orbit = orbit_of(orbit, fixing)
                nxt.append(tup + (rep,))
        level = nxt
    return HomogeneityResult(True)


def homogeneity_check_direct(
    D: Digraph,
    mode: Mode = "plain",
    partition: VertexPartition | None = None,
    max_vertices: int = 6,
) -> HomogeneityResult:
    """Reference decision straight from the definition.

    Enumerates all automorphisms by trying every permutation, all pairs of
    admissible vertex sets and all bijections between them.  Exponential; kept
    as an independent oracle for small inputs.
    """
    _guard(D, max_vertices, max_vertices)
    side = _side_colours(D, mode, partition)
    n = D.vertex_count
    edges = D.edges
    auts = [
        p
        for p in itertools.permutations(range(n))
        if all((p[u], p[v]) in edges for u, v in edges)
        and (side is None or all(side[p[v]] == side[v] for v in range(n)))
    ]
    sets_by_size: dict[int, list[tuple[int, ...]]] = {}
    for k in range(1, n + 1):
        for S in itertools.combinations(range(n), k):
            if mode == "connected" and not is_connected(induced_subdigraph(D, S)[0]):
                continue
            sets_by_size.setdefault(k, []).append(S)
    for k, sets in sorted(sets_by_size.items()):
        for S in sets:
            images = {tuple(a[s] for s in S) for a in auts}
            for T in sets:
                for img in itertools.permutations(T):
                    if side is not None and any(side[s] != side[t] for s, t in zip(S, img)):
                        continue
                    if not all(
                        ((S[i], S[j]) in edges) == ((img[i], img[j]) in edges)
                        for i in range(k)
                        for j in range(k)
                        if i != j
                    ):
                        continue
                    if img not in images:
                        return HomogeneityResult(False, PartialMap(tuple(zip(S, img))))
    return HomogeneityResult(True)


# --------------------------------------------------------------------------
# transitivity
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class TransitivityReport:
    vertex_transitive: bool
    one_arc_transitive: bool
    out_type: Digraph | None
    in_type: Digraph | None
    vertex_orbits: tuple[frozenset[int], ...]
    edge_orbits: tuple[frozenset[tuple[int, int]], ...]
    group_order: int


def edge_orbits(D: Digraph, generators: Sequence[Perm]) -> list[frozenset[tuple[int, int]]]:
    edges = D.sorted_edges()
    index = {e: i for i, e in enumerate(edges)}
    actions = [tuple(index[(g[u], g[v])] for u, v in edges) for g in generators]
    return [frozenset(edges[i] for i in orb) for orb in orbits(len(edges), actions)]


def transitivity_report(D: Digraph, max_vertices: int | None = None) -> TransitivityReport:
    group = automorphism_generators(D, max_vertices=max_vertices)
    vorbs = group.vertex_orbits(D.vertex_count)
    eorbs = edge_orbits(D, group.generators)
    vt = len(vorbs) == 1
    out_type = in_type = None
    if vt:
        out_type = local_digraph(D, 0, "out")
        in_type = local_digraph(D, 0, "in")
    return TransitivityReport(
        vertex_transitive=vt,
        one_arc_transitive=len(eorbs) == 1,
        out_type=out_type,
        in_type=in_type,
        vertex_orbits=tuple(vorbs),
        edge_orbits=tuple(eorbs),
        group_order=group.group_order,
    )
