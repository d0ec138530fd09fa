"""Command-line entry point: ``chdigraph <subcommand> ...``.

Exit status is 0 for success or a true answer, 1 for a false answer or an
empty result, and 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog, truncation
from .core import Digraph, PartitionedDigraph, VertexPartition, quotient
from .errors import DigraphError, NotOneArcTransitive
from .genericity import KINDS, extension_depth
from .reachability import check_prop_5_1, delta, eq_in_nbhd, eq_reach_sides, find_witness_cycle, reachability_partition
from .survey import DIRECT_GUARD, SURVEY_GUARD, survey
from .symmetry import homogeneity_check, transitivity_report
from .textio import read_digraph, to_dot, to_edgelist, write_digraph

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(params, count, family):
    if len(params) != count:
        raise UsageError(f"family {family} takes {count} integer parameter(s), got {len(params)}")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise UsageError(f"family {family} takes integer parameters") from None


# name -> (builder(params, seed), help text).  Builders return a Digraph or PartitionedDigraph.
FAMILIES = {
    "independent": (lambda p, s: catalog.independent(*_ints(p, 1, "independent")), "N"),
    "cycle": (lambda p, s: catalog.directed_cycle(*_ints(p, 1, "cycle")), "M"),
    "cycle-blowup": (
        lambda p, s: catalog.blowup(catalog.directed_cycle(_ints(p, 2, "cycle-blowup")[0]), int(p[1])),
        "M K",
    ),
    "transitive-tournament": (lambda p, s: catalog.transitive_tournament(*_ints(p, 1, "transitive-tournament")), "N"),
    "random-tournament": (lambda p, s: catalog.random_tournament(*_ints(p, 1, "random-tournament"), s), "N"),
    "circle": (lambda p, s: catalog.circle_digraph(*_ints(p, 2, "circle")), "N T"),
    "s2": (lambda p, s: catalog.s2_approx(*_ints(p, 1, "s2")), "N"),
    "s3": (lambda p, s: catalog.s3_approx(*_ints(p, 1, "s3")), "N"),
    "complete-bipartite": (lambda p, s: catalog.complete_bipartite(*_ints(p, 2, "complete-bipartite")), "K L"),
    "cp": (lambda p, s: catalog.cp(*_ints(p, 1, "cp")), "K"),
    "cp-prime": (lambda p, s: catalog.cpk_prime(*_ints(p, 1, "cp-prime")), "K"),
    "y": (lambda p, s: catalog.y_digraph(*_ints(p, 1, "y")), "K"),
    "wedge-i1": (lambda p, s: catalog.t_wedge(catalog.independent(1)), ""),
    "wedge-c3": (lambda p, s: catalog.t_wedge(catalog.directed_cycle(3)), ""),
    "parity-orientation": (lambda p, s: catalog.parity_orientation(_ints(p, len(p), "parity-orientation"), s), "SIZES..."),
    "random-poset": (lambda p, s: catalog.random_poset(*_ints(p, 1, "random-poset"), s), "N"),
    "powerset-bipartite": (lambda p, s: catalog.powerset_bipartite(*_ints(p, 1, "powerset-bipartite")), "A"),
    "r-m": (lambda p, s: catalog.r_m_approx(*_ints(p, 2, "r-m"), s), "M S"),
    "two-arc": (lambda p, s: catalog.two_arc(), ""),
    "out-star": (lambda p, s: catalog.out_star(*_ints(p, 1, "out-star")), "K"),
    "alternating-cycle": (lambda p, s: catalog.alternating_cycle(*_ints(p, 1, "alternating-cycle")), "L"),
    "tree": (lambda p, s: truncation.directed_tree_truncation(*_ints(p, 3, "tree")), "D_IN D_OUT R"),
    "dl-cp": (
        lambda p, s: truncation.dl_truncation(catalog.cp(_ints(p, 2, "dl-cp")[0]), int(p[1])),
        "K R",
    ),
    "x-lambda-c3": (
        lambda p, s: truncation.x_lambda_truncation(catalog.directed_cycle(3), *_ints(p, 2, "x-lambda-c3")),
        "LAMBDA R",
    ),
    "m": (lambda p, s: truncation.m_truncation(*_ints(p, 3, "m")), "K M R"),
    "m-prime": (lambda p, s: truncation.m_prime_truncation(*_ints(p, 2, "m-prime")), "M R"),
}

PROPERTIES = {
    "homogeneous": "plain",
    "c-homogeneous": "connected",
    "bipartite-homogeneous": "bipartite",
    "2partite-homogeneous": "two_partite",
}


def _load(path: str) -> tuple[Digraph, dict[str, VertexPartition]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return read_digraph(text)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _pick_partition(parts: dict[str, VertexPartition], name: str | None, required: bool) -> VertexPartition | None:
    if name is not None:
        if name not in parts:
            raise UsageError(f"no partition named {name!r} in the input file")
        return parts[name]
    if not parts:
        if required:
            raise UsageError("this operation needs a named partition in the input file")
        return None
    return parts[sorted(parts)[0]]


def cmd_gen(args) -> int:
    if args.family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(sorted(FAMILIES))}")
    result = FAMILIES[args.family][0](args.params, args.seed)
    if isinstance(result, PartitionedDigraph):
        text = write_digraph(result.digraph, {"parts": result.partition})
    elif isinstance(result, truncation.TruncationReport):
        n = result.digraph.vertex_count
        rest = set(range(n)) - result.interior
        text = write_digraph(result.digraph, {"interior": VertexPartition.from_blocks(n, [result.interior, rest])})
    else:
        text = write_digraph(result)
    _emit(text, args.output)
    return EXIT_TRUE


def cmd_check(args) -> int:
    D, parts = _load(args.file)
    prop = args.property
    if prop in PROPERTIES:
        mode = PROPERTIES[prop]
        partition = _pick_partition(parts, args.partition, mode in ("bipartite", "two_partite"))
        res = homogeneity_check(D, mode, partition if mode in ("bipartite", "two_partite") else None)
        line = f"{prop} {str(res.holds).lower()}"
        if res.witness is not None:
            line += f" {res.witness}"
        print(line)
        return EXIT_TRUE if res.holds else EXIT_FALSE
    report = transitivity_report(D)
    holds = report.vertex_transitive if prop == "vertex-transitive" else report.one_arc_transitive
    orbits = report.vertex_orbits if prop == "vertex-transitive" else report.edge_orbits
    line = f"{prop} {str(holds).lower()}"
    if not holds:
        line += f" orbits={len(orbits)}"
    print(line)
    return EXIT_TRUE if holds else EXIT_FALSE


def cmd_reach(args) -> int:
    D, _ = _load(args.file)
    part = reachability_partition(D)
    print(f"classes {len(part)}")
    for i, cls in enumerate(part.classes):
        kind = "bipartite" if cls.bipartite else "non-bipartite"
        print(f"class {i} size={len(cls.edges)} {kind}")
    try:
        report = check_prop_5_1(D)
        branch, shape = report.branch, delta(D)
    except NotOneArcTransitive:
        branch, shape = "n/a", None
    print(f"branch {branch}")
    if args.dot is not None:
        if shape is None:
            raise UsageError("--dot needs a connected 1-arc-transitive digraph with edges")
        Path(args.dot).write_text(to_dot(shape))
    if args.witness:
        w = find_witness_cycle(D) if D.vertex_count >= 3 else None
        if w is None:
            print("witness none")
            return EXIT_FALSE
        cycle = ",".join(map(str, w.cycle))
        arc = ">".join(map(str, w.two_arc))
        removed = f"{w.removed_edge[0]}>{w.removed_edge[1]}"
        print(f"witness {cycle} removed={removed} two_arc={arc} induced={str(w.induced).lower()}")
    return EXIT_TRUE


def cmd_quotient(args) -> int:
    D, _ = _load(args.file)
    P = eq_in_nbhd(D) if args.relation == "in-nbhd" else eq_reach_sides(D)
    _emit(write_digraph(quotient(D, P)), args.output)
    return EXIT_TRUE


def cmd_depth(args) -> int:
    D, parts = _load(args.file)
    params = {}
    if args.kind == "i_free":
        if args.bound is None:
            raise UsageError("kind i_free needs --bound")
        params["bound"] = args.bound
    if args.kind == "h_free":
        if not args.forbidden:
            raise UsageError("kind h_free needs at least one --forbidden FILE")
        params["forbidden"] = [_load(f)[0] for f in args.forbidden]
    partitioned = args.kind in ("bip", "two_partite", "orientation", "n_partite")
    partition = _pick_partition(parts, args.partition, partitioned) if partitioned else None
    report = extension_depth(D, args.kind, partition, args.max_d, params, sides=args.side)
    print(f"depth {report.depth}")
    for side, d in sorted(report.per_side.items(), key=lambda kv: (kv[0] is not None, kv[0])):
        if side is not None:
            print(f"side {side} {d}")
    print(f"first_failure {report.first_failure if report.first_failure else 'none'}")
    return EXIT_TRUE


def cmd_survey(args) -> int:
    result = survey(args.max_n, args.oracle)
    for line in result.lines():
        print(line)
    return EXIT_TRUE if not result.unmatched else EXIT_FALSE


def cmd_export(args) -> int:
    D, _ = _load(args.file)
    _emit(to_dot(D) if args.format == "dot" else to_edgelist(D), args.output)
    return EXIT_TRUE


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chdigraph", description="Symmetry toolkit for finite digraphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="generate a catalog digraph")
    p.add_argument("family", help="one of: " + ", ".join(f"{k} {v[1]}".strip() for k, v in FAMILIES.items()))
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="decide a symmetry property")
    p.add_argument("file")
    p.add_argument("--property", required=True, choices=[*PROPERTIES, "vertex-transitive", "1-arc-transitive"])
    p.add_argument("--partition", help="named partition for the partite properties")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reach", help="reachability classes and witness cycle")
    p.add_argument("file")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--dot", help="write the reachability digraph type as DOT")
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("quotient", help="quotient by a vertex relation")
    p.add_argument("file")
    p.add_argument("--relation", required=True, choices=["in-nbhd", "reach-sides"])
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("depth", help="extension-property depth")
    p.add_argument("file")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--max-d", type=int, default=4)
    p.add_argument("--partition")
    p.add_argument("--bound", type=int, help="independence bound for i_free")
    p.add_argument("--forbidden", action="append", help="tournament file for h_free (repeatable)")
    p.add_argument("--side", type=int, action="append", help="restrict partitioned kinds to this block (repeatable)")
    p.set_defaults(func=cmd_depth)

    p = sub.add_parser("survey", help=f"classify connected C-homogeneous digraphs up to {SURVEY_GUARD} vertices")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument(
        "--oracle", choices=["orbit", "direct"], default="orbit", help=f"direct allows max-n <= {DIRECT_GUARD}"
    )
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("export", help="export as DOT or edge list")
    p.add_argument("file")
    p.add_argument("--format", required=True, choices=["dot", "edgelist"])
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (UsageError, DigraphError) as exc:
        print(f"chdigraph: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
