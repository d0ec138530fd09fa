"""Exhaustive search for small connected C-homogeneous digraphs.

Isomorphism classes on ``n`` vertices are generated by vertex augmentation:
every digraph on ``n`` vertices arises from one on ``n - 1`` vertices by
adding a vertex with some pattern of out-edges, in-edges and non-adjacencies.
Extending one representative per class on ``n - 1`` vertices in all
``3**(n-1)`` ways and deduplicating by canonical form therefore covers every
class exactly once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .catalog import blowup, directed_cycle, independent, t_wedge, y_digraph
from .core import Digraph, is_connected
from .errors import SizeGuardExceeded
from .symmetry import canonical_form, homogeneity_check, homogeneity_check_direct, isomorphism

SURVEY_GUARD = 6
DIRECT_GUARD = 5

CanonicalForm = tuple[tuple[int, int], ...]
Entry = tuple[int, CanonicalForm]  # (vertex count, canonical edge tuple)


@dataclass(frozen=True)
class SurveyResult:
    max_n: int
    found: tuple[Entry, ...]
    matched: dict[Entry, tuple[str, ...]]
    unmatched: tuple[Entry, ...]

    def lines(self) -> list[str]:
        return [format_entry(e, self.matched[e]) for e in self.found]


def format_entry(entry: Entry, names) -> str:
    n, edges = entry
    edge_text = ",".join(f"{u}>{v}" for u, v in edges) or "-"
    return f"{n} {edge_text} matched={'|'.join(names) or 'NONE'}"


def entry_digraph(entry: Entry) -> Digraph:
    return Digraph.from_edges(entry[0], entry[1])


def _augmentations(D: Digraph):
    n = D.vertex_count
    base = list(D.edges)
    for pattern in itertools.product((0, 1, 2), repeat=n):
        extra = [(n, v) for v, p in enumerate(pattern) if p == 1]
        extra += [(v, n) for v, p in enumerate(pattern) if p == 2]
        yield Digraph.from_edges(n + 1, base + extra)


def _is_regular(D: Digraph) -> bool:
    return len({(D.out_degree(v), D.in_degree(v)) for v in D.vertices}) == 1


def iso_classes(max_n: int, last_filter=None):
    """Canonical forms of all asymmetric digraphs, one list per vertex count.

    ``last_filter`` (a predicate on Digraph) prunes candidates at ``max_n``
    before canonicalisation, since that level is never extended further.
    """
    classes = {0: [()]}
    for n in range(1, max_n + 1):
        seen: set[CanonicalForm] = set()
        for form in classes[n - 1]:
            for D in _augmentations(Digraph.from_edges(n - 1, form)):
                if n == max_n and last_filter is not None and not last_filter(D):
                    continue
                seen.add(canonical_form(D))
        classes[n] = sorted(seen)
    return classes


def catalog_instances(max_n: int) -> list[tuple[str, Digraph]]:
    """Named catalog digraphs with at most ``max_n`` vertices."""
    out = []
    if max_n >= 1:
        out.append(("I1", independent(1)))
    for m in range(3, max_n + 1):
        out.append((f"C{m}", directed_cycle(m)))
        for k in range(2, max_n // m + 1):
            out.append((f"C{m}[I{k}]", blowup(directed_cycle(m), k)))
    for k in range(3, max_n // 3 + 1):
        out.append((f"Y{k}", y_digraph(k).digraph))
    for name, D in (("wedge(I1)", t_wedge(independent(1))), ("wedge(C3)", t_wedge(directed_cycle(3)))):
        if D.vertex_count <= max_n:
            out.append((name, D))
    return out


def survey(max_n: int, oracle_mode: str = "orbit") -> SurveyResult:
    if not 1 <= max_n <= SURVEY_GUARD:
        raise SizeGuardExceeded(f"survey needs 1 <= max_n <= {SURVEY_GUARD}")
    if oracle_mode not in ("orbit", "direct"):
        raise ValueError(f"unknown oracle mode {oracle_mode!r}")
    if oracle_mode == "direct" and max_n > DIRECT_GUARD:
        raise SizeGuardExceeded(f"the direct oracle is limited to max_n <= {DIRECT_GUARD}")

    if oracle_mode == "direct":
        # the reference path keeps only the connectivity filter
        def decide(D):
            return homogeneity_check_direct(D, "connected", max_vertices=DIRECT_GUARD).holds

        prefilter = is_connected
    else:
        def decide(D):
            return homogeneity_check(D, "connected").holds

        def prefilter(D):
            # a connected C-homogeneous digraph is vertex-transitive
            return _is_regular(D) and is_connected(D)

    classes = iso_classes(max_n, last_filter=prefilter)
    found: list[Entry] = []
    for n in range(1, max_n + 1):
        for form in classes[n]:
            D = Digraph.from_edges(n, form)
            if prefilter(D) and decide(D):
                found.append((n, form))

    catalog = catalog_instances(max_n)
    matched: dict[Entry, tuple[str, ...]] = {}
    for entry in found:
        D = entry_digraph(entry)
        names = [name for name, C in catalog if C.vertex_count == D.vertex_count and isomorphism(C, D) is not None]
        if homogeneity_check(D, "plain").holds:
            names.append("homogeneous")
        matched[entry] = tuple(names)
    unmatched = tuple(e for e in found if not any(n != "homogeneous" for n in matched[e]))
    return SurveyResult(max_n, tuple(found), matched, unmatched)
