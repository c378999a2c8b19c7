import pytest

from pentagem.coloring import verify_coloring
from pentagem.errors import (CliqueBoundError, DegreeRangeError,
                             ForbiddenPatternError, PreconditionError)
from pentagem.graph import (build_graph, complete_graph, cycle_graph,
                            disjoint_union, empty_graph, join, path_graph)
from pentagem.instances import (GenSpec, gallery_g1, gallery_g2,
                                gen_class_instance, gen_target_delta)
from pentagem.solver import color8, replay_trace, solve
from pentagem.trace import dumps_trace, loads_trace


def test_color8_c5_uses_three():
    col, _ = color8(cycle_graph(5))
    assert verify_coloring(cycle_graph(5), col)
    assert len(set(col.colors.values())) == 3


def test_color8_gallery_g2_9():
    g = gallery_g2(9)
    col, _ = color8(g)
    assert col.k == 8 and verify_coloring(g, col)


def test_color8_random_class_member():
    spec = gen_target_delta("G6", 9, seed=5)
    g, _ = gen_class_instance(spec)
    col, _ = color8(g)
    assert col.k == 8 and verify_coloring(g, col)


def test_color8_rejects_degree_10():
    # complete split graph: (P5, gem)-free with maximum degree 10
    with pytest.raises(DegreeRangeError):
        color8(join(complete_graph(7), empty_graph(4)))


def test_solve_gallery_family():
    for t in (9, 11):
        g = gallery_g2(t)
        col, _ = solve(g)
        assert col.k == t - 1 and verify_coloring(g, col)
        assert len(set(col.colors.values())) <= t - 1


def test_solve_rejects_gallery_g1_on_degree():
    with pytest.raises(DegreeRangeError):
        solve(gallery_g1())


def test_solve_rejects_p5_with_witness():
    with pytest.raises(ForbiddenPatternError) as err:
        solve(path_graph(5))
    assert err.value.witness.pattern == "P5"


def test_solve_rejects_clique_at_delta():
    with pytest.raises(CliqueBoundError):
        solve(complete_graph(10))


def test_solve_disconnected_components():
    spec = gen_target_delta("G2", 9, seed=2)
    g1, _ = gen_class_instance(spec)
    g = disjoint_union(g1, cycle_graph(5))
    col, trace = solve(g)
    assert col.k == 8 and verify_coloring(g, col)
    rep = replay_trace(g, trace)
    assert rep.colors == col.colors


def test_solve_perfect_complete_split():
    # complete split graphs are cographs: no induced C5, exact path runs
    g = join(complete_graph(8), empty_graph(4))
    assert g.max_degree() == 11
    col, _ = solve(g)
    assert verify_coloring(g, col) and col.k == 10
    assert len(set(col.colors.values())) == 9


def test_the_two_irreducible_cores_solve_and_replay():
    core2 = GenSpec("G2", {"Q1": 3, "Q2": 3, "Q3": 3, "Q4": 3, "Q5": 3, "Q6": 1})
    core10 = GenSpec("G10", {f"Q{i}": 2 for i in range(1, 10)})
    for spec in (core2, core10):
        g, _ = gen_class_instance(spec)
        col, trace = solve(g)
        assert col.k == 8 and verify_coloring(g, col)
        kinds = [e.kind for e in trace.events]
        assert "lemma1" in kinds
        rep = replay_trace(g, trace)
        assert rep.colors == col.colors and rep.k == col.k


def test_trace_document_round_trip():
    g = gallery_g2(10)
    col, trace = solve(g)
    text = dumps_trace(trace)
    back = loads_trace(text)
    assert back.events == trace.events
    assert (back.palette, back.n, back.m) == (trace.palette, trace.n, trace.m)
    rep = replay_trace(g, back)
    assert rep.colors == col.colors


def test_replay_rejects_wrong_graph():
    g = gallery_g2(10)
    _, trace = solve(g)
    with pytest.raises(PreconditionError):
        replay_trace(gallery_g2(11), trace)


def test_solve_mixed_modes_many_seeds():
    for seed in (1, 4, 9):
        for cid in ("G3", "G7", "H"):
            for mode in ("clique", "cograph"):
                spec = gen_target_delta(cid, 9, seed=seed, mode=mode)
                g, _ = gen_class_instance(spec)
                col, trace = solve(g)
                assert col.k == 8 and verify_coloring(g, col)
                rep = replay_trace(g, trace)
                assert rep.colors == col.colors


def test_replay_handles_lift_events():
    # end-to-end runs reduce non-clique bags away before classification, so
    # build a lift-bearing trace by hand: color the reduced core exactly,
    # then lift back over the cograph bags
    from pentagem.graph import induced_subgraph
    from pentagem.oracle import exact_chromatic
    from pentagem.structure import TEMPLATES, clique_reduce
    from pentagem.trace import ReductionTrace, TraceEvent, fingerprint

    g, bags = gen_class_instance(GenSpec("G2", {"Q1": 3, "Q2": 2, "Q3": 1,
                                                "Q4": 1, "Q5": 2, "Q6": 1},
                                         (), "cograph", 1))
    red = clique_reduce(g, TEMPLATES["G2"], bags)
    assert len(red.kept) < g.n, "seed must produce at least one union bag"
    chi, _ = exact_chromatic(g)
    events = [TraceEvent("oracle", {"vs": red.kept, "k": chi}),
              TraceEvent("lift", {"units": red.units})]
    n, m, hist = fingerprint(g)
    rep = replay_trace(g, ReductionTrace(events, 8, n, m, hist))
    assert verify_coloring(g, rep)
