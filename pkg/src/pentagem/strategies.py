"""Per-class coloring strategies for irreducible clique expansions.

Each matched class carries hard-coded strategy data: which bag-size branch
applies, which independent sets to reserve (one or two designated vertices
per listed bag), and the elimination order whose back-degree certifies the
degeneracy bound.  Two classes (the plain C5 expansion and the fifth class)
have no coloring branch at all: on an irreducible host every branch ends in
a configuration some reduction rule must have consumed, so hitting them is
reported, never colored around silently.

The degeneracy bound is always checked, never trusted: when a published
order misses the bound the strategy falls back to a computed smallest-last
order, and failing that to the exact oracle, recording the fallback.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (Coloring, back_degree_profile, color_with_independent_sets,
                       degeneracy_order, greedy_color)
from .errors import InternalInconsistencyError, PreconditionError
from .graph import Graph, bits, induced_subgraph, mask_of
from .oracle import colorable_with
from .patterns import clique_number
from .structure import TEMPLATES, check_bag_partition
from .trace import TraceEvent

__all__ = [
    "ReducibleFound",
    "Unreachable",
    "CaseStrategy",
    "CASE_STRATEGIES",
    "published_plan",
    "apply_case_strategy",
]


@dataclass(frozen=True)
class ReducibleFound:
    """A branch condition exposed a configuration a reduction rule owns."""

    reason: str


@dataclass(frozen=True)
class Unreachable:
    """Only contradiction branches applied; names the violated inequality."""

    reason: str


@dataclass(frozen=True)
class CaseBranch:
    name: str
    sets: tuple[tuple[tuple[str, int], ...], ...]  # ((bag, rep_index), ...) per set
    order: tuple[str, ...]


@dataclass(frozen=True)
class CaseStrategy:
    """Strategy data for one class: copycat conclusions plus branches."""

    case_id: str
    copycat: tuple[tuple[str, str], ...]  # (larger, smaller): |larger| > |smaller|
    branches: tuple[CaseBranch, ...]


CASE_STRATEGIES: dict[str, CaseStrategy] = {
    "G2": CaseStrategy("G2", (("Q2", "Q6"), ("Q5", "Q6")), (
        CaseBranch("two_sets",
                   ((("Q2", 0), ("Q5", 0), ("Q6", 0)),
                    (("Q2", 1), ("Q5", 1), ("Q6", 1))),
                   ("Q1", "Q4", "Q3", "Q5", "Q2", "Q6")),
        CaseBranch("one_set",
                   ((("Q2", 0), ("Q5", 0), ("Q6", 0)),),
                   ("Q1", "Q5", "Q2", "Q4", "Q3", "Q6")),
    )),
    "G3": CaseStrategy("G3", (("Q5", "Q6"), ("Q3", "Q7")), (
        CaseBranch("main",
                   ((("Q2", 0), ("Q5", 0), ("Q6", 0)),
                    (("Q1", 0), ("Q3", 0), ("Q7", 0))),
                   ("Q4", "Q3", "Q5", "Q2", "Q1", "Q6", "Q7")),
    )),
    "G4": CaseStrategy("G4", (("Q1", "Q5"),), (
        CaseBranch("main",
                   ((("Q1", 0), ("Q5", 0), ("Q7", 0)),
                    (("Q1", 1), ("Q3", 0), ("Q6", 0))),
                   ("Q4", "Q2", "Q1", "Q5", "Q3", "Q7", "Q6")),
    )),
    "G6": CaseStrategy("G6", (), (
        CaseBranch("main",
                   ((("Q3", 0), ("Q5", 0), ("Q7", 0)),
                    (("Q2", 0), ("Q6", 0), ("Q8", 0))),
                   ("Q4", "Q1", "Q8", "Q5", "Q7", "Q6", "Q3", "Q2")),
    )),
    "G7": CaseStrategy("G7", (("Q4", "Q7"),), (
        CaseBranch("main",
                   ((("Q4", 0), ("Q6", 0), ("Q7", 0)),
                    (("Q2", 0), ("Q4", 1), ("Q8", 0))),
                   ("Q5", "Q3", "Q4", "Q7", "Q2", "Q8", "Q6", "Q1")),
    )),
    "G8": CaseStrategy("G8", (), (
        CaseBranch("main",
                   ((("Q3", 0), ("Q5", 0), ("Q7", 0)),
                    (("Q2", 0), ("Q6", 0), ("Q8", 0))),
                   ("Q4", "Q1", "Q3", "Q2", "Q7", "Q8", "Q6", "Q5")),
    )),
    "G9": CaseStrategy("G9", (("Q9", "Q5"),), (
        CaseBranch("main",
                   ((("Q3", 0), ("Q5", 0), ("Q7", 0), ("Q9", 0)),
                    (("Q2", 0), ("Q6", 0), ("Q8", 0), ("Q9", 1))),
                   ("Q4", "Q1", "Q3", "Q2", "Q7", "Q8", "Q9", "Q6", "Q5")),
    )),
    "G10": CaseStrategy("G10", (), (
        CaseBranch("main",
                   ((("Q3", 0), ("Q5", 0), ("Q7", 0)),
                    (("Q2", 0), ("Q6", 0), ("Q8", 0))),
                   ("Q9", "Q4", "Q1", "Q3", "Q2", "Q7", "Q8", "Q6", "Q5")),
    )),
    "H": CaseStrategy("H", (), (
        CaseBranch("anchor_two",
                   ((("A2", 0), ("A5", 0), ("A6", 0)),
                    (("A2", 1), ("A5", 1), ("A6", 1))),
                   ("A1", "A5", "A2", "A4", "A3", "A6", "A7")),
    )),
}


def published_plan(case_id: str, branch: str,
                   bags: dict[str, tuple[int, ...]]
                   ) -> tuple[list[tuple[int, ...]], list[int]]:
    """Materialize a branch's independent sets and vertex order for ``bags``.

    Designated vertices x_i, x_i', ... are the lowest-indexed members of the
    bag; the order lists each bag's remaining vertices ascending, bag blocks
    in the published sequence.
    """
    strat = CASE_STRATEGIES[case_id]
    br = next(b for b in strat.branches if b.name == branch)
    sets = [tuple(sorted(bags[name])[idx] for name, idx in s) for s in br.sets]
    removed = set().union(*map(set, sets)) if sets else set()
    order = [v for name in br.order for v in sorted(bags[name]) if v not in removed]
    return sets, order


def _sizes(bags: dict[str, tuple[int, ...]]) -> dict[str, int]:
    return {name: len(vs) for name, vs in bags.items()}


def _lemma1(g: Graph, case_id: str, branch: str, bags: dict[str, tuple[int, ...]],
            k: int, trace: list | None) -> Coloring:
    """Reserve the branch's sets, then color; checked bound with fallbacks."""
    sets, order = published_plan(case_id, branch, bags)
    t = len(sets)
    bound = k - t - 1
    removed = set().union(*map(set, sets))
    remainder = sorted(v for v in range(g.n) if v not in removed)
    sub, ids = induced_subgraph(g, remainder)
    pos = {v: i for i, v in enumerate(ids)}
    fallback = False
    if back_degree_profile(sub, [pos[v] for v in order]) > bound:
        fallback = True
        order = [ids[i] for i in degeneracy_order(sub)]
        if back_degree_profile(sub, [pos[v] for v in order]) > bound:
            witness = colorable_with(g, k)
            if witness is None:
                raise InternalInconsistencyError(
                    f"case {case_id}: graph is not even {k}-colorable")
            if trace is not None:
                trace.append(TraceEvent("oracle", {"vs": tuple(range(g.n)), "k": k}))
            return Coloring(witness, k)
    coloring = color_with_independent_sets(g, sets, k, order=order)
    if trace is not None:
        trace.append(TraceEvent("lemma1", {
            "vs": tuple(range(g.n)), "sets": tuple(sets), "order": tuple(order),
            "k": k, "case": case_id, "branch": branch, "fallback": fallback}))
    return coloring


def _copy_clique_extend(g: Graph, removed: tuple[int, ...], donor: tuple[int, ...],
                        partial: dict[int, int]) -> dict[int, int]:
    """Color ``removed`` with colors used on ``donor`` (smallest first).

    Sound whenever the outside neighborhood of ``removed`` is complete to
    ``donor`` and the two sets are anticomplete; checked defensively.
    """
    if len(removed) > len(donor):
        raise PreconditionError("donor clique smaller than the removed set")
    if not g.is_clique(donor) or not g.is_clique(removed):
        raise PreconditionError("copy extension needs two cliques")
    rm = mask_of(removed)
    dm = mask_of(donor)
    if rm & dm or any(g.adj[v] & rm for v in donor):
        raise PreconditionError("removed set and donor must be anticomplete")
    outside = 0
    for v in removed:
        outside |= g.adj[v] & ~rm
    for u in bits(outside):
        if g.adj[u] & dm != dm:
            raise PreconditionError("a neighbor of the removed set misses the donor")
    colors = sorted(partial[v] for v in donor)
    out = dict(partial)
    for v, c in zip(sorted(removed), colors):
        out[v] = c
    return out


def _strategy_h(g: Graph, bags: dict[str, tuple[int, ...]], k: int,
                recurse, trace: list | None):
    """The pendant-class strategy: copy rules, anchor branch, or pendant peel."""
    a6_sub, a6_ids = induced_subgraph(g, bags["A6"])
    omega6, w6 = clique_number(a6_sub)
    donor = tuple(a6_ids[i] for i in w6)
    for side in ("A5", "A2"):
        if len(bags[side]) <= omega6:
            rest = sorted(set(range(g.n)) - set(bags[side]))
            sub, ids = induced_subgraph(g, rest)
            partial = recurse(sub, tuple(ids))
            colors = _copy_clique_extend(g, bags[side], donor, partial)
            if trace is not None:
                trace.append(TraceEvent("clique_copy",
                                        {"removed": tuple(bags[side]), "donor": donor}))
            return Coloring(colors, k)
    if len(bags["A6"]) >= 2:
        return _lemma1(g, "H", "anchor_two", bags, k, trace)
    # pendant peel: color the rest, then fill each pendant clique greedily
    a7 = bags["A7"]
    rest = sorted(set(range(g.n)) - set(a7))
    sub, ids = induced_subgraph(g, rest)
    colors = recurse(sub, tuple(ids))
    colors = greedy_color(g, sorted(a7), k, initial=colors)
    if trace is not None:
        trace.append(TraceEvent("a7_peel", {"removed": tuple(a7), "k": k}))
    return Coloring(colors, k)


def apply_case_strategy(gstar: Graph, case_id: str,
                        bags: dict[str, tuple[int, ...]], *,
                        k: int = 8, recurse=None, trace: list | None = None):
    """Color an irreducible starred class member with the published strategy.

    Returns a Coloring, or ReducibleFound when a branch condition exposes a
    configuration the reduction loop owns, or Unreachable when only
    contradiction branches apply (impossible for genuinely irreducible
    inputs; surfaced so the caller can fail loudly).

    ``recurse`` colors a subgraph (graph, ids) -> {id: color} and is needed
    only for the pendant class H; the solver passes its own engine.
    """
    template = TEMPLATES[case_id]
    problems = check_bag_partition(gstar, template, bags, starred=True)
    if problems:
        raise PreconditionError("bags inconsistent with graph: " + "; ".join(problems))
    if gstar.max_degree() != 9:
        raise PreconditionError("case strategies apply at maximum degree 9 exactly")
    sizes = _sizes(bags)

    if case_id == "G1":
        big = next((q for q in ("Q1", "Q2", "Q3", "Q4", "Q5") if sizes[q] >= 4), None)
        if big is None:
            return Unreachable("all bags of size <= 3 force Delta <= 8, not 9")
        ring = ("Q1", "Q2", "Q3", "Q4", "Q5")
        i = ring.index(big)
        prev, nxt = ring[i - 1], ring[(i + 1) % 5]
        if sizes[prev] >= 2 and sizes[nxt] >= 2:
            return ReducibleFound(
                f"{big} with both neighbors >= 2 carries a K4-join catalog subgraph")
        return Unreachable(
            "singleton neighbor next to a size->=4 bag forces a degree >= 10 vertex")

    if case_id == "G5":
        for big, small in (("Q5", "Q6"), ("Q2", "Q7")):
            if sizes[big] <= sizes[small]:
                return ReducibleFound(f"copycat pair ({big}, {small}) is reducible")
        if sizes["Q1"] >= 3:
            return ReducibleFound("Q1 of size >= 3 carries K3 v 3K2")
        for q in ("Q3", "Q4"):
            if sizes[q] >= 4:
                return ReducibleFound(f"{q} of size >= 4 carries a K4-join catalog subgraph")
        return Unreachable("d(x1) >= 10 contradicts Delta = 9")

    strat = CASE_STRATEGIES[case_id]
    for big, small in strat.copycat:
        if sizes[big] <= sizes[small]:
            return ReducibleFound(f"copycat pair ({big}, {small}) is reducible")

    if case_id == "H":
        if recurse is None:
            raise PreconditionError("the H strategy needs a recursion callback")
        return _strategy_h(gstar, bags, k, recurse, trace)

    if case_id == "G2":
        if sizes["Q6"] >= 2:
            return _lemma1(gstar, "G2", "two_sets", bags, k, trace)
        if sizes["Q1"] >= 2:
            return _lemma1(gstar, "G2", "one_set", bags, k, trace)
        return ReducibleFound("Q1 and Q6 both singletons force a low-degree vertex")

    if case_id == "G3":
        if sizes["Q4"] >= 2:
            return _lemma1(gstar, "G3", "main", bags, k, trace)
        return ReducibleFound("singleton Q4 forces a low-degree vertex")

    return _lemma1(gstar, case_id, "main", bags, k, trace)
