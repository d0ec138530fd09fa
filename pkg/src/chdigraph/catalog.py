"""Constructors for the finite members of the connected-homogeneous families.

Infinite families are approximated by truncations, see
:mod:`chdigraph.truncation`.
"""

from __future__ import annotations

import itertools
import random
from typing import Sequence

from .core import Digraph, PartitionedDigraph, VertexPartition, is_tournament, lexicographic_product
from .errors import BadPartition, DigraphError, NotTournament


def independent(n: int) -> Digraph:
    if n < 0:
        raise DigraphError("n must be non-negative")
    return Digraph(n)


def directed_cycle(m: int) -> Digraph:
    if m < 3:
        raise DigraphError(f"a directed cycle needs at least 3 vertices, got {m}")
    return Digraph.from_edges(m, ((i, (i + 1) % m) for i in range(m)))


def transitive_tournament(n: int) -> Digraph:
    """``i -> j`` iff ``i < j``."""
    return Digraph.from_edges(n, itertools.combinations(range(n), 2))


def random_tournament(n: int, seed: int) -> Digraph:
    rng = random.Random(seed)
    edges = [(i, j) if rng.random() < 0.5 else (j, i) for i, j in itertools.combinations(range(n), 2)]
    return Digraph.from_edges(n, edges)


def circle_digraph(n: int, t: int) -> Digraph:
    """Vertices ``0..n-1`` evenly spaced on a circle; ``j -> k`` iff ``(k - j) mod n`` is in ``1..t``."""
    if n < 3:
        raise DigraphError("circle digraph needs n >= 3")
    if not 1 <= t or 2 * t >= n:
        raise DigraphError(f"need 1 <= t < n/2 for an asymmetric relation, got n={n}, t={t}")
    return Digraph.from_edges(n, ((j, (j + s) % n) for j in range(n) for s in range(1, t + 1)))


def s2_approx(n: int) -> Digraph:
    """Rotational tournament on an odd number of points."""
    if n % 2 == 0:
        raise DigraphError("s2_approx needs odd n")
    return circle_digraph(n, (n - 1) // 2)


def s3_approx(n: int) -> Digraph:
    """Successors are the points less than a third of a turn ahead."""
    if n % 3 == 0:
        raise DigraphError("s3_approx needs n not divisible by 3")
    return circle_digraph(n, -(-n // 3) - 1)


def blowup(D: Digraph, k: int) -> Digraph:
    """``D[I_k]``."""
    return lexicographic_product(D, independent(k))


def _sides(k: int, l: int) -> VertexPartition:
    return VertexPartition.from_blocks(k + l, [range(k), range(k, k + l)])


def complete_bipartite(k: int, l: int) -> PartitionedDigraph:
    """``x_i = i``, ``y_j = k + j``; every ``x -> y``."""
    if k < 1 or l < 1:
        raise DigraphError("complete_bipartite needs k, l >= 1")
    edges = [(i, k + j) for i in range(k) for j in range(l)]
    return PartitionedDigraph(Digraph.from_edges(k + l, edges), _sides(k, l))


def cp(k: int) -> PartitionedDigraph:
    """Complete bipartite ``X -> Y`` minus the matching ``x_i -> y_i``."""
    if k < 2:
        raise DigraphError("cp needs k >= 2")
    edges = [(i, k + j) for i in range(k) for j in range(k) if i != j]
    return PartitionedDigraph(Digraph.from_edges(2 * k, edges), _sides(k, k))


def cpk_prime(k: int) -> PartitionedDigraph:
    """``cp(k)`` plus the reversed matching ``y_i -> x_i``."""
    if k < 2:
        raise DigraphError("cpk_prime needs k >= 2")
    edges = [(i, k + j) for i in range(k) for j in range(k) if i != j]
    edges += [(k + i, i) for i in range(k)]
    return PartitionedDigraph(Digraph.from_edges(2 * k, edges), _sides(k, k))


def _require_tournament(T: Digraph) -> None:
    if not is_tournament(T):
        raise NotTournament("input is not a tournament")


def cone(T: Digraph) -> Digraph:
    """``T`` plus an apex ``n`` dominating every vertex."""
    _require_tournament(T)
    n = T.vertex_count
    return Digraph.from_edges(n + 1, list(T.edges) + [(n, v) for v in range(n)])


def t_wedge(T: Digraph) -> Digraph:
    """Two copies of ``cone(T)`` joined by reversed cross edges.

    Copy one occupies ``0..n``, copy two ``n+1..2n+1`` (apex last in each).
    For every edge ``u -> v`` of the cone both ``v1 -> u2`` and ``v2 -> u1``
    are added, so each vertex misses exactly its twin in the other copy.
    """
    plus = cone(T)
    m = plus.vertex_count
    edges = list(plus.edges) + [(u + m, v + m) for u, v in plus.edges]
    for u, v in plus.edges:
        edges.append((v, u + m))
        edges.append((v + m, u))
    return Digraph.from_edges(2 * m, edges)


def y_digraph(k: int) -> PartitionedDigraph:
    """Vertex ``(i, j)`` (part ``i`` in 0..2, index ``j``) is ``i*k + j``.

    ``(i, j) -> (i+1 mod 3, j')`` for ``j' != j``; the missing edges form
    ``k`` directed triangles ``(0,j), (1,j), (2,j)``.
    """
    if k < 3:
        raise DigraphError("y_digraph needs k >= 3")
    edges = [
        (i * k + j, ((i + 1) % 3) * k + jj)
        for i in range(3)
        for j in range(k)
        for jj in range(k)
        if j != jj
    ]
    parts = VertexPartition.from_blocks(3 * k, [range(i * k, (i + 1) * k) for i in range(3)])
    return PartitionedDigraph(Digraph.from_edges(3 * k, edges), parts)


def parity_orientation(sizes: Sequence[int], seed: int) -> PartitionedDigraph:
    """Complete multipartite orientation satisfying the even-quadruple condition.

    Every vertex draws a bit per other class; for ``x`` in an earlier class
    than ``y``, ``x -> y`` iff the bits they hold for each other's class agree.
    """
    if len(sizes) < 2:
        raise DigraphError("need at least two classes")
    rng = random.Random(seed)
    offsets = list(itertools.accumulate([0, *sizes]))
    classes = [range(offsets[i], offsets[i + 1]) for i in range(len(sizes))]
    cls = [i for i, c in enumerate(classes) for _ in c]
    n = offsets[-1]
    bit = {(v, j): rng.getrandbits(1) for v in range(n) for j in range(len(sizes)) if j != cls[v]}
    edges = []
    for x, y in itertools.combinations(range(n), 2):
        if cls[x] == cls[y]:
            continue
        if bit[x, cls[y]] == bit[y, cls[x]]:
            edges.append((x, y))
        else:
            edges.append((y, x))
    return PartitionedDigraph(Digraph.from_edges(n, edges), VertexPartition.from_blocks(n, classes))


def transitive_closure(n: int, edges) -> set[tuple[int, int]]:
    reach = [0] * n
    for u, v in edges:
        reach[u] |= 1 << v
    changed = True
    while changed:
        changed = False
        for u in range(n):
            acc = reach[u]
            m = acc
            while m:
                low = m & -m
                acc |= reach[low.bit_length() - 1]
                m ^= low
            if acc != reach[u]:
                reach[u] = acc
                changed = True
    return {(u, v) for u in range(n) for v in range(n) if (reach[u] >> v) & 1}


def random_poset(n: int, seed: int) -> Digraph:
    """Transitive closure of a random DAG over a random linear order."""
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[j]) for i, j in itertools.combinations(range(n), 2) if rng.random() < 0.5]
    return Digraph.from_edges(n, transitive_closure(n, edges))


def _three_blocks(P: VertexPartition) -> tuple[int, ...]:
    if len(P.blocks) != 3:
        raise BadPartition(f"need exactly 3 blocks, got {len(P.blocks)}")
    return P.block_of


def p3_twist(D: Digraph, P: VertexPartition) -> Digraph:
    """Rotate the adjacency state of every pair from ``P_i`` to ``P_{i+1}``.

    For ``x`` in ``P_i`` and ``y`` in ``P_{i+1}``: ``y -> x`` becomes
    ``x -> y``, non-adjacent becomes ``y -> x``, and ``x -> y`` becomes
    non-adjacent.  Pairs inside a block keep their state.
    """
    block = _three_blocks(P)
    edges = []
    for x, y in itertools.combinations(range(D.vertex_count), 2):
        bx, by = block[x], block[y]
        if bx == by:
            if (x, y) in D.edges:
                edges.append((x, y))
            elif (y, x) in D.edges:
                edges.append((y, x))
            continue
        if by != (bx + 1) % 3:
            x, y = y, x  # now y's block follows x's block
        if (y, x) in D.edges:
            edges.append((x, y))
        elif (x, y) not in D.edges:
            edges.append((y, x))
    return Digraph.from_edges(D.vertex_count, edges)


def p3_cone(D: Digraph, P: VertexPartition) -> Digraph:
    """``p3_twist(D, P)`` plus apex ``n`` with ``n -> P_1``, ``P_2 -> n``, ``n`` apart from ``P_0``."""
    H = p3_twist(D, P)
    p = D.vertex_count
    edges = list(H.edges)
    edges += [(p, x) for x in P.blocks[1]]
    edges += [(x, p) for x in P.blocks[2]]
    return Digraph.from_edges(p + 1, edges)


def powerset_bipartite(a: int) -> PartitionedDigraph:
    """``X = 0..a-1``; vertex ``a + mask`` is ``y_S`` for the subset ``S`` with bitmask ``mask``."""
    if not 0 <= a <= 20:
        raise DigraphError("powerset_bipartite needs 0 <= a <= 20")
    edges = [(x, a + mask) for mask in range(1 << a) for x in range(a) if (mask >> x) & 1]
    return PartitionedDigraph(Digraph.from_edges(a + (1 << a), edges), _sides(a, 1 << a))


def r_m_approx(m: int, s: int, seed: int) -> PartitionedDigraph:
    """``m`` parts of size ``s`` (part ``i`` is ``i*s .. i*s+s-1``), random edges ``V_i -> V_{i+1}``.

    Redraws a consecutive pair until it carries at least one edge.
    """
    if m < 3 or s < 1:
        raise DigraphError("r_m_approx needs m >= 3 and s >= 1")
    rng = random.Random(seed)
    edges = []
    for i in range(m):
        j = (i + 1) % m
        while True:
            chosen = [(i * s + a, j * s + b) for a in range(s) for b in range(s) if rng.random() < 0.5]
            if chosen:
                break
        edges += chosen
    parts = VertexPartition.from_blocks(m * s, [range(i * s, (i + 1) * s) for i in range(m)])
    return PartitionedDigraph(Digraph.from_edges(m * s, edges), parts)


def two_arc() -> Digraph:
    """``0 -> 1 -> 2``."""
    return Digraph.from_edges(3, [(0, 1), (1, 2)])


def out_star(k: int) -> Digraph:
    """Centre ``0`` with edges to ``1..k``."""
    return Digraph.from_edges(k + 1, ((0, i) for i in range(1, k + 1)))


def alternating_cycle(length: int) -> Digraph:
    """Even cycle whose edges alternate direction: ``0 -> 1 <- 2 -> 3 <- ...``."""
    if length < 4 or length % 2:
        raise DigraphError("alternating cycles need even length >= 4")
    edges = []
    for i in range(length):
        j = (i + 1) % length
        edges.append((i, j) if i % 2 == 0 else (j, i))
    return Digraph.from_edges(length, edges)


# --------------------------------------------------------------------------
# random members of the classes whose limits are generic structures
# --------------------------------------------------------------------------


def _partite(sizes: Sequence[int]) -> tuple[VertexPartition, list[int]]:
    offsets = list(itertools.accumulate([0, *sizes]))
    P = VertexPartition.from_blocks(offsets[-1], [range(offsets[i], offsets[i + 1]) for i in range(len(sizes))])
    return P, list(P.block_of)


def _random_partite(sizes, seed, states: str) -> PartitionedDigraph:
    rng = random.Random(seed)
    P, cls = _partite(sizes)
    edges = []
    for x, y in itertools.combinations(range(P.vertex_count), 2):
        if cls[x] == cls[y]:
            continue
        choice = rng.choice(states)
        if choice == ">":
            edges.append((x, y))
        elif choice == "<":
            edges.append((y, x))
    return PartitionedDigraph(Digraph.from_edges(P.vertex_count, edges), P)


def _completes_forbidden(adj: list[set[int]], edges: set, u: int, v: int, forbidden: Sequence[Digraph]) -> bool:
    """Whether the current edge set (which contains the pair u, v) has a forbidden
    tournament through both u and v."""
    from .symmetry import is_isomorphic

    common = sorted((adj[u] & adj[v]) - {u, v})
    for H in forbidden:
        h = H.vertex_count
        if h < 2:
            return True
        for rest in itertools.combinations(common, h - 2):
            if any(b not in adj[a] for a, b in itertools.combinations(rest, 2)):
                continue
            S = sorted((u, v, *rest))
            idx = {w: i for i, w in enumerate(S)}
            sub = Digraph.from_edges(h, [(idx[a], idx[b]) for a in S for b in S if (a, b) in edges])
            if is_isomorphic(sub, H):
                return True
    return False


def _random_h_free(n: int, forbidden: Sequence[Digraph], rng: random.Random) -> Digraph:
    if n >= 1 and any(H.vertex_count <= 1 for H in forbidden):
        raise DigraphError("every non-empty digraph contains the 1-vertex tournament")
    for H in forbidden:
        _require_tournament(H)
    adj: list[set[int]] = [set() for _ in range(n)]
    edges: set[tuple[int, int]] = set()
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    for a, b in pairs:
        r = rng.random()
        if r < 1 / 3:
            continue
        options = [(a, b), (b, a)] if r < 2 / 3 else [(b, a), (a, b)]
        adj[a].add(b)
        adj[b].add(a)
        for e in options:
            edges.add(e)
            if not _completes_forbidden(adj, edges, a, b, forbidden):
                break
            edges.discard(e)
        else:
            adj[a].discard(b)
            adj[b].discard(a)
    return Digraph.from_edges(n, edges)


def _random_i_free(n: int, bound: int, rng: random.Random) -> Digraph:
    if n >= 1 and bound <= 1:
        raise DigraphError(f"no non-empty digraph has independence number below {bound}")
    edges = {(i, j) if rng.random() < 0.5 else (j, i) for i, j in itertools.combinations(range(n), 2)}
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    for a, b in pairs:
        if rng.random() < 0.5:
            continue
        # dropping ab is safe unless it completes an independent set of size `bound`
        free = sorted(set(range(n)) - adj[a] - adj[b] - {a, b})
        blocked = any(
            all(y not in adj[x] for x, y in itertools.combinations(rest, 2))
            for rest in itertools.combinations(free, bound - 2)
        )
        if not blocked:
            edges.discard((a, b))
            edges.discard((b, a))
            adj[a].discard(b)
            adj[b].discard(a)
    return Digraph.from_edges(n, edges)


RANDOM_KINDS = ("bipartite", "two_partite", "orientation", "n_partite", "semi_generic", "h_free", "i_free", "poset")


def random_approx(kind: str, params: dict, seed: int):
    """A random finite member of the class named by ``kind``.

    ``params`` per kind: ``sides=(a, b)`` for bipartite / two_partite /
    orientation; ``sizes=(...)`` for n_partite / semi_generic; ``n`` and
    ``forbidden=[tournaments]`` for h_free; ``n`` and ``bound`` for i_free;
    ``n`` for poset.  Class membership is guaranteed, genericity is not.
    """
    rng = random.Random(seed)
    if kind == "bipartite":
        return _random_partite(params["sides"], seed, "> ")
    if kind == "two_partite":
        return _random_partite(params["sides"], seed, "><")
    if kind == "orientation":
        return _random_partite(params["sides"], seed, ">< ")
    if kind == "n_partite":
        return _random_partite(params["sizes"], seed, "><")
    if kind == "semi_generic":
        return parity_orientation(params["sizes"], seed)
    if kind == "h_free":
        return _random_h_free(params["n"], params["forbidden"], rng)
    if kind == "i_free":
        return _random_i_free(params["n"], params["bound"], rng)
    if kind == "poset":
        return random_poset(params["n"], seed)
    raise DigraphError(f"unknown kind {kind!r}; expected one of {RANDOM_KINDS}")
