import itertools
import random

import pytest

from chdigraph.catalog import (
    blowup,
    circle_digraph,
    complete_bipartite,
    cp,
    cpk_prime,
    directed_cycle,
    independent,
    out_star,
    random_approx,
    t_wedge,
    transitive_tournament,
    two_arc,
    y_digraph,
)
from chdigraph.core import Digraph, VertexPartition, induced_subdigraph, is_connected, relabel, reverse
from chdigraph.errors import BadPartition, InvalidPartialMap, SizeGuardExceeded
from chdigraph.survey import iso_classes
from chdigraph.symmetry import (
    PartialMap,
    all_automorphisms,
    automorphism_generators,
    canonical_form,
    enumerate_connected_subdigraphs,
    extends_to_automorphism,
    homogeneity_check,
    homogeneity_check_direct,
    is_automorphism,
    is_isomorphic,
    isomorphism,
    transitivity_report,
    validate_partial_map,
)

from oracles import all_digraphs, brute_automorphisms, brute_canonical, brute_extends

C3, C4, C5 = directed_cycle(3), directed_cycle(4), directed_cycle(5)
CLASSES = iso_classes(5)
SMALL = [Digraph.from_edges(n, form) for n in range(6) for form in CLASSES[n]]


def check_witness(D, result, mode):
    """A reported witness must be a valid isomorphism of admissible subdigraphs that does not extend."""
    phi = result.witness
    validate_partial_map(D, D, phi)
    if mode == "connected":
        assert is_connected(induced_subdigraph(D, [a for a, _ in phi.pairs])[0])
    assert not brute_extends(D, phi.as_dict())


class TestIsomorphism:
    def test_examples(self):
        p = isomorphism(C3, C3)
        assert p is not None and relabel(C3, p) == C3
        assert isomorphism(C3, transitive_tournament(3)) is None
        p = isomorphism(t_wedge(independent(1)), C4)
        assert relabel(t_wedge(independent(1)), p) == C4

    def test_vertex_counts_differ(self):
        assert not is_isomorphic(C3, C4)

    def test_double_reverse(self):
        for D in [C5, y_digraph(3).digraph, t_wedge(C3), blowup(C4, 2), circle_digraph(7, 2)]:
            assert isomorphism(D, reverse(reverse(D))) is not None

    def test_random_relabelings(self):
        rng = random.Random(4)
        for _ in range(40):
            n = rng.randint(1, 9)
            D = Digraph.from_edges(n, [(u, v) if rng.random() < 0.5 else (v, u)
                                       for u, v in itertools.combinations(range(n), 2) if rng.random() < 0.6])
            perm = list(range(n))
            rng.shuffle(perm)
            E = relabel(D, perm)
            p = isomorphism(D, E)
            assert p is not None and relabel(D, p) == E


class TestCanonicalForm:
    def test_examples(self):
        assert canonical_form(C4) == canonical_form(relabel(C4, [2, 0, 3, 1]))
        assert canonical_form(C3) != canonical_form(transitive_tournament(3))
        assert canonical_form(Digraph(0)) == ()

    def test_matches_brute_force_partition(self):
        for n in range(5):
            groups_fast, groups_slow = {}, {}
            for i, D in enumerate(all_digraphs(n)):
                groups_fast.setdefault(canonical_form(D), set()).add(i)
                groups_slow.setdefault(brute_canonical(D), set()).add(i)
            assert sorted(map(sorted, groups_fast.values())) == sorted(map(sorted, groups_slow.values()))

    def test_invariance_under_relabeling(self):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randint(2, 8)
            D = Digraph.from_edges(n, [(u, v) if rng.random() < 0.5 else (v, u)
                                       for u, v in itertools.combinations(range(n), 2) if rng.random() < 0.5])
            form = canonical_form(D)
            for _ in range(4):
                perm = list(range(n))
                rng.shuffle(perm)
                assert canonical_form(relabel(D, perm)) == form

    def test_guard(self):
        with pytest.raises(SizeGuardExceeded):
            canonical_form(independent(17))


class TestAutomorphisms:
    def test_examples(self):
        assert automorphism_generators(C4).group_order == 4
        assert automorphism_generators(independent(3)).group_order == 6
        assert automorphism_generators(Digraph.from_edges(2, [(0, 1)])).group_order == 1

    def test_order_matches_brute_force(self):
        for D in SMALL:
            gens = automorphism_generators(D)
            assert all(is_automorphism(D, g) for g in gens.generators)
            assert gens.group_order == len(brute_automorphisms(D))

    def test_larger_orders(self):
        # |Aut(C3[I2])| = 3 * 2^3 (rotations times swaps inside each fibre)
        assert automorphism_generators(blowup(C3, 2)).group_order == 24
        assert automorphism_generators(independent(10)).group_order == 3628800
        assert len(all_automorphisms(blowup(C3, 2))) == 24

    def test_guard(self):
        with pytest.raises(SizeGuardExceeded):
            automorphism_generators(independent(17))


class TestExtends:
    def test_examples(self):
        assert extends_to_automorphism(C4, PartialMap.from_dict({0: 2, 2: 0}))
        edge = Digraph.from_edges(2, [(0, 1)])
        assert not extends_to_automorphism(edge, PartialMap.from_dict({0: 1}))
        assert extends_to_automorphism(C5, PartialMap(()))

    def test_invalid_map(self):
        with pytest.raises(InvalidPartialMap):
            extends_to_automorphism(C4, PartialMap.from_dict({0: 0, 1: 2}))
        with pytest.raises(InvalidPartialMap):
            extends_to_automorphism(C4, PartialMap.from_dict({0: 1, 1: 1}))

    def test_agrees_with_enumeration(self):
        for D in SMALL:
            if D.vertex_count > 4:
                continue
            n = D.vertex_count
            for k in range(n + 1):
                for S in itertools.combinations(range(n), k):
                    for T in itertools.permutations(range(n), k):
                        phi = PartialMap(tuple(zip(S, T)))
                        try:
                            validate_partial_map(D, D, phi)
                        except InvalidPartialMap:
                            continue
                        assert extends_to_automorphism(D, phi) == brute_extends(D, dict(zip(S, T)))

    def test_agrees_on_five_vertices_sampled(self):
        rng = random.Random(1)
        for D in [d for d in SMALL if d.vertex_count == 5][::7]:
            for _ in range(10):
                k = rng.randint(1, 3)
                S = rng.sample(range(5), k)
                T = rng.sample(range(5), k)
                phi = PartialMap(tuple(zip(S, T)))
                try:
                    validate_partial_map(D, D, phi)
                except InvalidPartialMap:
                    continue
                assert extends_to_automorphism(D, phi) == brute_extends(D, dict(zip(S, T)))


class TestConnectedSubdigraphs:
    def test_counts(self):
        assert len(list(enumerate_connected_subdigraphs(C4, 2))) == 8
        assert len(list(enumerate_connected_subdigraphs(independent(3), 3))) == 3
        assert len(list(enumerate_connected_subdigraphs(C3, 3))) == 7

    def test_against_brute_force(self):
        for D in SMALL:
            n = D.vertex_count
            for m in range(1, n + 1):
                got = list(enumerate_connected_subdigraphs(D, m))
                assert len(got) == len(set(got))
                want = {frozenset(S) for k in range(1, m + 1) for S in itertools.combinations(range(n), k)
                        if is_connected(induced_subdigraph(D, S)[0])}
                assert set(got) == want


class TestHomogeneity:
    def test_documented_examples(self):
        assert homogeneity_check(independent(3), "plain")
        res = homogeneity_check(transitive_tournament(2), "plain")
        assert not res and res.witness.as_dict() == {0: 1}
        assert homogeneity_check(C5, "connected")
        assert not homogeneity_check(circle_digraph(5, 2), "plain")

    def test_cp3_bipartite(self):
        P = cp(3)
        assert homogeneity_check(P.digraph, "bipartite", P.partition)
        assert homogeneity_check_direct(P.digraph, "bipartite", P.partition)

    def test_conventions(self):
        for mode in ("plain", "connected"):
            assert homogeneity_check(Digraph(0), mode) and homogeneity_check(independent(1), mode)

    def test_partition_errors(self):
        with pytest.raises(BadPartition):
            homogeneity_check(C4, "bipartite")
        with pytest.raises(BadPartition):
            homogeneity_check(cpk_prime(2).digraph, "bipartite", cpk_prime(2).partition)
        with pytest.raises(BadPartition):
            homogeneity_check(C3, "two_partite", VertexPartition.from_blocks(3, [[0, 1], [2]]))

    def test_guard(self):
        with pytest.raises(SizeGuardExceeded):
            homogeneity_check(independent(13))
        assert homogeneity_check(independent(13), max_vertices=13)

    @pytest.mark.parametrize("mode", ["plain", "connected"])
    def test_orbit_criterion_matches_direct_oracle(self, mode):
        for D in SMALL:
            fast = homogeneity_check(D, mode)
            slow = homogeneity_check_direct(D, mode)
            assert fast.holds == slow.holds
            if not fast.holds:
                check_witness(D, fast, mode)

    def test_partition_modes_match_direct_oracle(self):
        cases = []
        for seed in range(25):
            for sides in ((2, 2), (2, 3), (1, 3), (3, 3)):
                cases.append(("bipartite", random_approx("bipartite", {"sides": sides}, seed)))
                cases.append(("two_partite", random_approx("two_partite", {"sides": sides}, seed)))
        cases += [("bipartite", cp(3)), ("bipartite", complete_bipartite(2, 3)), ("two_partite", cpk_prime(3))]
        for mode, P in cases:
            fast = homogeneity_check(P.digraph, mode, P.partition)
            slow = homogeneity_check_direct(P.digraph, mode, P.partition)
            assert fast.holds == slow.holds, (mode, P)

    def test_plain_implies_connected(self):
        for D in SMALL:
            if homogeneity_check(D, "plain"):
                assert homogeneity_check(D, "connected")

    def test_connected_homogeneous_implies_vertex_transitive(self):
        for D in SMALL:
            if D.vertex_count >= 2 and is_connected(D) and homogeneity_check(D, "connected"):
                assert transitivity_report(D).vertex_transitive

    @pytest.mark.parametrize(
        "D",
        [transitive_tournament(3), two_arc(), out_star(3), cp(3).digraph, circle_digraph(5, 2)],
        ids=["TT3", "2-arc", "out-star", "cp3", "circle(5,2)"],
    )
    def test_negative_controls_have_witnesses(self, D):
        res = homogeneity_check(D, "connected")
        assert not res
        check_witness(D, res, "connected")
        assert not homogeneity_check_direct(D, "connected", max_vertices=6)


class TestTransitivity:
    def test_c3_i2(self):
        rep = transitivity_report(blowup(C3, 2))
        assert rep.vertex_transitive and rep.one_arc_transitive
        assert rep.out_type == independent(2)

    def test_single_edge(self):
        assert not transitivity_report(Digraph.from_edges(2, [(0, 1)])).vertex_transitive

    def test_y3(self):
        assert transitivity_report(y_digraph(3).digraph).one_arc_transitive

    def test_edgeless(self):
        rep = transitivity_report(independent(3))
        assert rep.vertex_transitive and not rep.one_arc_transitive
