"""Extension-property depth and class predicates for generic structures.

A finite digraph cannot be generic, but it can satisfy every one-point
extension demand up to some size.  ``extension_depth`` measures that size
exactly by exhaustive search over demands and witnesses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .core import Digraph, VertexPartition, induced_subdigraph, is_independent_set
from .errors import BadPartition, NotCompleteMultipartite, NotPoset, SizeGuardExceeded
from .symmetry import is_isomorphic

PARTITIONED_KINDS = ("bip", "two_partite", "orientation", "n_partite")
CLASS_KINDS = ("h_free", "i_free", "poset")
KINDS = PARTITIONED_KINDS + CLASS_KINDS

MAX_DEPTH_GUARD = 6

# adjacency state of a witness v towards a vertex s
APART, OUT, IN = 0, 1, 2  # OUT: v -> s, IN: s -> v


@dataclass(frozen=True)
class Demand:
    """A one-point extension demand: a witness must have ``pattern[i]`` towards ``vertices[i]``."""

    context: int | None  # side / class index the witness is drawn from, None for the whole digraph
    vertices: tuple[int, ...]
    pattern: tuple[int, ...]

    def __str__(self):
        names = {APART: "apart", OUT: "out", IN: "in"}
        parts = ", ".join(f"{v}:{names[p]}" for v, p in zip(self.vertices, self.pattern))
        where = "" if self.context is None else f" from block {self.context}"
        return f"witness{where} for {{{parts}}}"


@dataclass(frozen=True)
class DepthReport:
    kind: str
    depth: int
    first_failure: Demand | None
    per_side: dict[int, int] = field(default_factory=dict)


def _state(D: Digraph, v: int, s: int) -> int:
    if (v, s) in D.edges:
        return OUT
    if (s, v) in D.edges:
        return IN
    return APART


def _validate_partition(D: Digraph, kind: str, P: VertexPartition | None) -> VertexPartition:
    if P is None:
        raise BadPartition(f"kind {kind} needs a partition")
    if P.vertex_count != D.vertex_count:
        raise BadPartition("partition and digraph disagree on the vertex count")
    block = P.block_of
    if any(block[u] == block[v] for u, v in D.edges):
        raise BadPartition("an edge lies inside a block")
    if kind != "n_partite" and len(P.blocks) != 2:
        raise BadPartition(f"kind {kind} needs exactly 2 blocks")
    if kind == "bip" and len({block[u] for u, _ in D.edges}) > 1:
        raise BadPartition("kind bip needs every edge directed from one block to the other")
    return P


def _class_ok(kind: str, params: dict):
    """Predicate on a digraph used to filter one-point extensions."""
    if kind == "h_free":
        forbidden = params["forbidden"]
        return lambda G: class_membership(G, "h_free", {"forbidden": forbidden})
    if kind == "i_free":
        bound = params["bound"]
        return lambda G: class_membership(G, "i_free", {"bound": bound})
    return lambda G: class_membership(G, "poset", {})


def _extended(D: Digraph, S: Sequence[int], pattern: Sequence[int]) -> Digraph:
    sub, index = induced_subdigraph(D, S)
    v = sub.vertex_count
    edges = list(sub.edges)
    for s, p in zip(S, pattern):
        if p == OUT:
            edges.append((v, index[s]))
        elif p == IN:
            edges.append((index[s], v))
    return Digraph.from_edges(v + 1, edges)


def extension_depth(
    D: Digraph,
    kind: str,
    partition: VertexPartition | None = None,
    max_d: int = 4,
    params: dict | None = None,
    sides: Sequence[int] | None = None,
) -> DepthReport:
    """Largest ``d <= max_d`` such that every extension demand on at most ``d`` vertices is met.

    Partitioned kinds measure each block separately (demands over one block
    for ``bip``/``two_partite``/``orientation``, witnesses drawn from one
    block for ``n_partite``); ``sides`` selects the blocks and the headline
    depth is the minimum.  ``first_failure`` is the least failing demand of
    the block attaining the minimum, or None when the depth is capped by
    ``max_d`` or by the input size.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if max_d > MAX_DEPTH_GUARD:
        raise SizeGuardExceeded(f"max_d={max_d} exceeds the guard of {MAX_DEPTH_GUARD}")
    params = params or {}
    n = D.vertex_count
    contexts = []  # (label, demand pool, witness pool, allowed states per demand vertex)
    if kind in PARTITIONED_KINDS:
        P = _validate_partition(D, kind, partition)
        chosen = range(len(P.blocks)) if sides is None else sides
        for i in chosen:
            block = sorted(P.blocks[i])
            if kind == "n_partite":
                def allowed(s, i=i):
                    return (APART,) if P.block_of[s] == i else (OUT, IN)
                contexts.append((i, list(range(n)), block, allowed))
            else:
                other = sorted(set(range(n)) - P.blocks[i])
                states = {"bip": (APART, OUT), "two_partite": (OUT, IN), "orientation": (APART, OUT, IN)}[kind]
                contexts.append((i, block, other, lambda s, states=states: states))
        ok = None
    else:
        contexts.append((None, list(range(n)), list(range(n)), lambda s: (APART, OUT, IN)))
        ok = _class_ok(kind, params)

    def pattern_of(v, S):
        if kind == "bip":
            return tuple(OUT if D.adjacent(v, s) else APART for s in S)
        return tuple(_state(D, v, s) for s in S)

    per_side: dict = {}
    failures: dict = {}
    for label, pool, witnesses, allowed in contexts:
        cap = min(max_d, len(pool) if kind in ("bip", "two_partite", "orientation") else max(n - 1, 0))
        depth, failure = cap, None
        for d in range(1, cap + 1):
            failure = _first_unmet(D, d, pool, witnesses, allowed, pattern_of, ok, label)
            if failure is not None:
                depth = d - 1
                break
        per_side[label] = depth
        failures[label] = failure
    worst = min(per_side, key=lambda k: (per_side[k], -1 if k is None else k))
    return DepthReport(kind, per_side[worst], failures[worst], per_side)


def _first_unmet(D, d, pool, witnesses, allowed, pattern_of, ok, label) -> Demand | None:
    for S in itertools.combinations(pool, d):
        in_s = set(S)
        realized = {pattern_of(v, S) for v in witnesses if v not in in_s}
        for p in itertools.product(*(allowed(s) for s in S)):
            if p in realized:
                continue
            if ok is not None and not (ok(induced_subdigraph(D, S)[0]) and ok(_extended(D, S, p))):
                continue
            return Demand(label, S, p)
    return None


@dataclass(frozen=True)
class ParityResult:
    holds: bool
    quadruple: tuple[int, int, int, int] | None = None

    def __bool__(self):
        return self.holds


def parity_condition_holds(D: Digraph, partition: VertexPartition) -> ParityResult:
    """Every ``{x1, x2}`` and ``{y1, y2}`` from distinct classes span an even number of
    edges from the x's to the y's."""
    if partition.vertex_count != D.vertex_count:
        raise BadPartition("partition and digraph disagree on the vertex count")
    block = partition.block_of
    for u, v in itertools.combinations(D.vertices, 2):
        same = block[u] == block[v]
        if same == D.adjacent(u, v):
            raise NotCompleteMultipartite(f"pair ({u},{v}) breaks the complete multipartite shape")
    blocks = [sorted(b) for b in partition.blocks]
    for A, B in itertools.combinations(blocks, 2):
        for x1, x2 in itertools.combinations(A, 2):
            for y1, y2 in itertools.combinations(B, 2):
                count = sum((x, y) in D.edges for x in (x1, x2) for y in (y1, y2))
                if count % 2:
                    return ParityResult(False, (x1, x2, y1, y2))
    return ParityResult(True)


def is_transitive(D: Digraph) -> bool:
    return all((a, c) in D.edges for a, b in D.edges for c in D.out_lists[b])


def independence_number(D: Digraph) -> int:
    best = 0
    for k in range(1, D.vertex_count + 1):
        if any(is_independent_set(D, S) for S in itertools.combinations(D.vertices, k)):
            best = k
        else:
            break
    return best


def class_membership(D: Digraph, kind: str, params: dict | None = None) -> bool:
    """Membership in ``h_free`` (``forbidden``), ``i_free`` (``bound``), ``poset`` or ``tournament``.

    A forbidden tournament is matched against induced tournaments of D;
    since tournaments have every pair adjacent, induced and plain containment
    coincide.
    """
    params = params or {}
    if kind == "tournament":
        n = D.vertex_count
        return D.edge_count == n * (n - 1) // 2
    if kind == "poset":
        return is_transitive(D)
    if kind == "i_free":
        bound = params["bound"]
        return not any(is_independent_set(D, S) for S in itertools.combinations(D.vertices, bound))
    if kind == "h_free":
        for H in params["forbidden"]:
            h = H.vertex_count
            for S in itertools.combinations(D.vertices, h):
                sub = induced_subdigraph(D, S)[0]
                if sub.edge_count == h * (h - 1) // 2 and is_isomorphic(sub, H):
                    return False
        return True
    raise ValueError(f"unknown class kind {kind!r}")


def dense_partition_check(P: Digraph, partition: VertexPartition) -> bool:
    """Every block contains a point strictly between ``a`` and ``b`` for every ``a -> b``."""
    if not is_transitive(P):
        raise NotPoset("input is not transitive")
    for block in partition.blocks:
        for a, b in P.edges:
            if not any((a, c) in P.edges and (c, b) in P.edges for c in block):
                return False
    return True
