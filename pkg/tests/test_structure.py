import pytest

from pentagem.coloring import Coloring, verify_coloring
from pentagem.errors import PreconditionError
from pentagem.graph import (complete_graph, cycle_graph, induced_subgraph,
                            path_graph)
from pentagem.instances import GenSpec, gen_class_instance
from pentagem.oracle import exact_chromatic
from pentagem.patterns import clique_number, find_induced, is_p5_gem_free
from pentagem.structure import (CLASS_ORDER, TEMPLATES, check_bag_partition,
                                clique_reduce, lift_coloring, match_expansion,
                                maximal_homogeneous_cliques)


def expansion(cid, sizes, a7=(), mode="clique", seed=0):
    return gen_class_instance(GenSpec(cid, sizes, a7, mode, seed))


def g1_sizes(*s):
    return dict(zip(("Q1", "Q2", "Q3", "Q4", "Q5"), s))


# -- templates -----------------------------------------------------------------

def test_templates_are_class_members():
    # every template must itself be (P5, gem)-free and contain an induced C5
    for cid in CLASS_ORDER:
        t = TEMPLATES[cid]
        assert is_p5_gem_free(t.graph)[0], cid
        assert find_induced(t.graph, "C5") is not None, cid


# -- homogeneous cliques ---------------------------------------------------------

def test_mhc_whole_clique():
    assert maximal_homogeneous_cliques(complete_graph(3)) == [(0, 1, 2)]


def test_mhc_c5_singletons():
    assert maximal_homogeneous_cliques(cycle_graph(5)) == [(v,) for v in range(5)]


def test_mhc_expansion_with_one_fat_bag():
    g, bags = expansion("G1", g1_sizes(3, 1, 1, 1, 1))
    got = maximal_homogeneous_cliques(g)
    assert bags["Q1"] in got
    assert len(got) == 5
    # definition check on every returned class
    for cls in got:
        assert g.is_clique(cls)
        outside = set(range(g.n)) - set(cls)
        for u in outside:
            hits = [v for v in cls if g.has_edge(u, v)]
            assert hits == [] or len(hits) == len(cls)


# -- matching --------------------------------------------------------------------

def test_match_c5_is_identity_expansion():
    bags = match_expansion(cycle_graph(5), TEMPLATES["G1"])
    assert bags is not None
    assert sorted(len(b) for b in bags.values()) == [1, 1, 1, 1, 1]
    assert not check_bag_partition(cycle_graph(5), TEMPLATES["G1"], bags)


def test_match_recovers_g2_bags():
    g, truth = expansion("G2", {f"Q{i}": 2 for i in range(1, 7)})
    bags = match_expansion(g, TEMPLATES["G2"])
    assert bags is not None
    assert not check_bag_partition(g, TEMPLATES["G2"], bags)
    # same partition up to template automorphism: compare as set of frozensets
    assert {frozenset(b) for b in bags.values()} == {frozenset(b) for b in truth.values()}


def test_p5_matches_nothing():
    assert match_expansion(path_graph(5), TEMPLATES["G1"]) is None


def test_match_rejects_disconnected():
    from pentagem.graph import disjoint_union
    with pytest.raises(PreconditionError):
        match_expansion(disjoint_union(cycle_graph(5), complete_graph(1)),
                        TEMPLATES["G1"])


def test_checker_flags_bad_partition():
    g, bags = expansion("G1", g1_sizes(2, 1, 1, 1, 1))
    broken = dict(bags)
    broken["Q1"], broken["Q2"] = broken["Q1"][:1], broken["Q2"] + broken["Q1"][1:]
    assert check_bag_partition(g, TEMPLATES["G1"], broken)


def test_ground_truth_bags_pass_checker_for_h():
    g, bags = expansion("H", {"A1": 1, "A2": 2, "A3": 1, "A4": 1, "A5": 2, "A6": 2},
                        a7=(2, 3))
    assert not check_bag_partition(g, TEMPLATES["H"], bags)


# -- clique reduction and lift ----------------------------------------------------

def test_reduce_fixed_point_on_clique_bags():
    g, bags = expansion("G1", g1_sizes(2, 2, 1, 1, 2))
    red = clique_reduce(g, TEMPLATES["G1"], bags)
    assert red.kept == tuple(range(g.n))


def test_reduce_shrinks_2k1_bag():
    # one bag of two nonadjacent twins drops to a single vertex
    g, bags = expansion("G1", g1_sizes(2, 1, 1, 1, 1), mode="cograph", seed=0)
    sub, _ = induced_subgraph(g, bags["Q1"])
    assert sub.m == 0  # seed 0 makes the size-2 bag a union
    red = clique_reduce(g, TEMPLATES["G1"], bags)
    assert len(red.star_bags["Q1"]) == 1
    chi_g, _ = exact_chromatic(g)
    gstar, _ = induced_subgraph(g, red.kept)
    chi_s, _ = exact_chromatic(gstar)
    assert chi_g == chi_s


def test_reduce_preserves_both_invariants_and_lifts():
    done = 0
    for seed in range(60):
        for cid in ("G1", "G2", "H"):
            t = TEMPLATES[cid]
            body = [n for n in t.nodes if n != t.pendant]
            import random
            rng = random.Random(seed * 131 + len(cid))
            sizes = {n: rng.randint(1, 3) for n in body}
            a7 = (rng.randint(1, 3),) if t.pendant else ()
            g, bags = expansion(cid, sizes, a7, mode="cograph", seed=seed)
            if g.n > 16:
                continue
            red = clique_reduce(g, t, bags)
            gstar, ids = induced_subgraph(g, red.kept)
            assert clique_number(g)[0] == clique_number(gstar)[0]
            chi_g, _ = exact_chromatic(g)
            chi_s, star = exact_chromatic(gstar)
            assert chi_g == chi_s
            lifted = lift_coloring(g, red, {ids[i]: c for i, c in star.colors.items()})
            assert verify_coloring(g, Coloring(lifted, chi_s))
            done += 1
    assert done >= 60


def test_lift_is_identity_when_nothing_shrinks():
    g, bags = expansion("G2", {f"Q{i}": 2 for i in range(1, 7)})
    red = clique_reduce(g, TEMPLATES["G2"], bags)
    assert red.kept == tuple(range(g.n))
    chi, col = exact_chromatic(g)
    lifted = lift_coloring(g, red, col.colors)
    assert lifted == col.colors


def test_lift_copies_color_onto_nonadjacent_twins():
    g, bags = expansion("G1", g1_sizes(2, 1, 1, 1, 1), mode="cograph", seed=0)
    sub, _ = induced_subgraph(g, bags["Q1"])
    assert sub.m == 0
    red = clique_reduce(g, TEMPLATES["G1"], bags)
    kept = red.star_bags["Q1"][0]
    gstar, ids = induced_subgraph(g, red.kept)
    chi, col = exact_chromatic(gstar)
    lifted = lift_coloring(g, red, {ids[i]: c for i, c in col.colors.items()})
    a, b = bags["Q1"]
    assert lifted[a] == lifted[b]
    assert verify_coloring(g, Coloring(lifted, chi))


def test_reduce_rejects_invalid_bags():
    g, bags = expansion("G1", g1_sizes(2, 1, 1, 1, 1))
    bad = dict(bags)
    bad["Q1"], bad["Q2"] = bad["Q2"], bad["Q1"]
    with pytest.raises(PreconditionError):
        clique_reduce(g, TEMPLATES["G1"], bad)


def test_reduce_shrinks_k2_k1_bag_to_its_edge():
    # second-class member whose first bag is K2 + K1: the reduction keeps
    # the edge and the oracle confirms the chromatic number is unchanged
    from pentagem.graph import build_graph
    base, bags = expansion("G2", {"Q1": 3, "Q2": 1, "Q3": 1, "Q4": 1,
                                  "Q5": 1, "Q6": 1})
    edges = [e for e in base.edges() if e != (0, 2) and e != (1, 2)]
    g = build_graph(base.n, edges)
    sub, _ = induced_subgraph(g, bags["Q1"])
    assert sub.m == 1
    red = clique_reduce(g, TEMPLATES["G2"], bags)
    assert red.star_bags["Q1"] == (0, 1)
    gstar, ids = induced_subgraph(g, red.kept)
    chi_g, _ = exact_chromatic(g)
    chi_s, star = exact_chromatic(gstar)
    assert chi_g == chi_s
    lifted = lift_coloring(g, red, {ids[i]: c for i, c in star.colors.items()})
    assert verify_coloring(g, Coloring(lifted, chi_s))
