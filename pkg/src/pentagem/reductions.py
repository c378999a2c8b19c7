"""Reduction rules that shrink a graph while preserving extendability.

Each rule pairs a detector with an extension procedure: remove a configured
piece, color the rest (recursively, by the caller), then extend the coloring
back deterministically.  Also hosts the constructive Brooks coloring, the
hitting independent set, and the reduction from large maximum degree down to
the base case of 9.
"""

from __future__ import annotations

from itertools import combinations

from .coloring import Coloring, greedy_color
from .errors import (InternalInconsistencyError, PreconditionError)
from .graph import (Graph, bits, connected_components, induced_subgraph,
                    mask_of)
from .patterns import clique_number, maximum_independent_set
from .structure import maximal_homogeneous_cliques

__all__ = [
    "find_low_degree",
    "find_copycat",
    "copycat_extend",
    "find_d1_catalog",
    "is_k3_join_3k2",
    "is_k4_join_two_nonedges",
    "extend_list_coloring",
    "hitting_mis",
    "brooks_color",
    "delta_reduce",
]


# -- low-degree rule ---------------------------------------------------------

def find_low_degree(g: Graph, k: int) -> int | None:
    """Smallest vertex with degree <= k-1, so greedy extension always fits."""
    for v in range(g.n):
        if g.degree(v) <= k - 1:
            return v
    return None


# -- copycat rule ------------------------------------------------------------

def find_copycat(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """A reducible pair (A, B) of disjoint homogeneous cliques.

    Requires [A,B] empty, N(A) within N(B), and |A| <= |B|: then any coloring
    of G-A extends by giving A distinct colors already used on B.  Candidates
    are the maximal homogeneous cliques; shrinking A only grows its
    neighborhood and shrinking B never helps, so maximal classes suffice.
    """
    classes = maximal_homogeneous_cliques(g)
    masks = [mask_of(c) for c in classes]
    nbhd = [g.adj[c[0]] & ~m for c, m in zip(classes, masks)]
    for i, a in enumerate(classes):
        for j, b in enumerate(classes):
            if i == j or len(a) > len(b):
                continue
            if masks[j] & g.closed(a[0]):
                continue  # adjacent or overlapping
            if nbhd[i] & ~nbhd[j]:
                continue
            return a, b
    return None


def copycat_extend(g: Graph, a: tuple[int, ...], b: tuple[int, ...],
                   partial: dict[int, int]) -> dict[int, int]:
    """Extend a coloring of G-A by coloring A with colors used on B.

    Valid because every neighbor of A is adjacent to all of B, hence its
    color differs from every color on B.  A gets the |A| smallest B-colors.
    """
    if len(a) > len(b):
        raise PreconditionError("copycat extension needs |A| <= |B|")
    if not g.is_clique(b) or not g.is_clique(a):
        raise PreconditionError("copycat sides must be cliques")
    am = mask_of(a)
    if any(g.adj[v] & am for v in b):
        raise PreconditionError("copycat sides must be anticomplete")
    outside = 0
    for v in a:
        outside |= g.adj[v] & ~am
    bm = mask_of(b)
    for u in bits(outside):
        if g.adj[u] & bm != bm:
            raise PreconditionError("N(A) must be complete to B")
    donor = sorted(partial[v] for v in b)
    out = dict(partial)
    for v, c in zip(sorted(a), donor):
        out[v] = c
    return out


# -- d1-choosable catalog rule ------------------------------------------------

def is_k3_join_3k2(g: Graph, vs: tuple[int, ...]) -> bool:
    """Do the 9 vertices induce the join of a triangle with a perfect matching?"""
    if len(vs) != 9 or len(set(vs)) != 9:
        return False
    sub, _ = induced_subgraph(g, vs)
    hubs = [v for v in range(9) if sub.degree(v) == 8]
    if len(hubs) != 3:
        return False
    rest = [v for v in range(9) if v not in hubs]
    if any(sub.degree(v) != 4 for v in rest):
        return False
    inner, _ = induced_subgraph(sub, rest)
    return inner.m == 3 and all(inner.degree(v) == 1 for v in range(6))


def is_k4_join_two_nonedges(g: Graph, vs: tuple[int, ...]) -> bool:
    """Do the 8 vertices induce K4 joined to a 4-set with 2 disjoint non-edges?"""
    if len(vs) != 8 or len(set(vs)) != 8:
        return False
    sub, _ = induced_subgraph(g, vs)
    hubs = [v for v in range(8) if sub.degree(v) == 7]
    if len(hubs) != 4:
        return False
    rest = [v for v in range(8) if v not in hubs]
    pairings = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]
    for (a, b), (c, d) in pairings:
        if (not sub.has_edge(rest[a], rest[b])
                and not sub.has_edge(rest[c], rest[d])):
            return True
    return False


def _triangles(g: Graph):
    for u in range(g.n):
        au = g.adj[u] & (~0 << (u + 1))
        for v in bits(au):
            for w in bits(g.adj[v] & au & (~0 << (v + 1))):
                yield u, v, w


def find_d1_catalog(g: Graph) -> tuple[int, ...] | None:
    """An induced member of the removable catalog, or None (exhaustive).

    Shapes: the 9-vertex K3 v 3K2, else the 8-vertex K4 v H with H on four
    vertices carrying two disjoint non-edges.  Anchored on triangles/K4s,
    whose common neighborhoods stay tiny under a degree bound.
    """
    for u, v, w in _triangles(g):
        common = g.adj[u] & g.adj[v] & g.adj[w]
        cvs = tuple(bits(common))
        if len(cvs) < 6:
            continue
        # need three pairwise anticomplete edges inside the common part
        inner, ids = induced_subgraph(g, cvs)
        edges = list(inner.edges())
        for e1, e2, e3 in combinations(edges, 3):
            six = {*e1, *e2, *e3}
            if len(six) != 6:
                continue
            cand = (u, v, w) + tuple(sorted(ids[x] for x in six))
            if is_k3_join_3k2(g, cand):
                return tuple(sorted(cand))
    for u, v, w in _triangles(g):
        for x in bits(g.adj[u] & g.adj[v] & g.adj[w] & (~0 << (w + 1))):
            common = g.adj[u] & g.adj[v] & g.adj[w] & g.adj[x]
            cvs = tuple(bits(common))
            if len(cvs) < 4:
                continue
            for four in combinations(cvs, 4):
                cand = (u, v, w, x) + four
                if is_k4_join_two_nonedges(g, cand):
                    return tuple(sorted(cand))
    return None


def extend_list_coloring(h: Graph, lists: dict[int, frozenset[int] | set[int]]
                         ) -> dict[int, int]:
    """Color a catalog graph from per-vertex lists, by exhaustive backtracking.

    Requires |L(v)| >= d(v)-1 and h to be one of the catalog shapes, for
    which a coloring is guaranteed to exist; exhausting the search therefore
    signals a bug or a non-catalog input, not an unlucky assignment.
    """
    all_vs = tuple(range(h.n))
    if not (is_k3_join_3k2(h, all_vs) if h.n == 9
            else is_k4_join_two_nonedges(h, all_vs) if h.n == 8 else False):
        raise PreconditionError("graph is not one of the catalog shapes")
    for v in range(h.n):
        if len(lists.get(v, ())) < h.degree(v) - 1:
            raise PreconditionError(f"list of vertex {v} below d(v)-1")

    assigned: dict[int, int] = {}

    def pick() -> int | None:
        best, key = None, None
        for v in range(h.n):
            if v in assigned:
                continue
            free = [c for c in lists[v]
                    if all(assigned.get(u) != c for u in bits(h.adj[v]))]
            cand = (len(free), -h.degree(v), v)
            if key is None or cand < key:
                best, key = v, cand
        return best

    def solve() -> bool:
        v = pick()
        if v is None:
            return True
        for c in sorted(lists[v]):
            if any(assigned.get(u) == c for u in bits(h.adj[v])):
                continue
            assigned[v] = c
            if solve():
                return True
            del assigned[v]
        return False

    if not solve():
        raise InternalInconsistencyError(
            "catalog graph refused a d1-style list assignment")
    return dict(assigned)


# -- hitting independent set and Brooks ---------------------------------------

def _maximal_cliques(g: Graph):
    """Bron-Kerbosch with pivoting; yields cliques as sorted tuples."""
    out: list[tuple[int, ...]] = []

    def bk(r: list[int], p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot_pool = p | x
        pivot = max(bits(pivot_pool), key=lambda u: (g.adj[u] & p).bit_count())
        for v in bits(p & ~g.adj[pivot]):
            bk(r + [v], p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk([], g.full_mask(), 0)
    return out


def _independent_subset(g: Graph, avail: int, need: int) -> tuple[int, ...] | None:
    """First independent set of size ``need`` inside ``avail``, or None."""
    if need == 0:
        return ()

    def search(chosen: list[int], pool: int) -> tuple[int, ...] | None:
        if len(chosen) == need:
            return tuple(chosen)
        if len(chosen) + pool.bit_count() < need:
            return None
        v = (pool & -pool).bit_length() - 1
        got = search(chosen + [v], pool & ~g.closed(v))
        if got is not None:
            return got
        return search(chosen, pool & ~(1 << v))

    return search([], avail)


def hitting_mis(g: Graph) -> tuple[int, ...]:
    """Maximum independent set that meets every clique of size Delta-1.

    When the clique number is below Delta-1 there is nothing to hit and any
    maximum independent set qualifies.  Existence in the tight case is a
    known theorem; the set is found by search and verified, and a fruitless
    search is reported as an internal inconsistency rather than papered over.
    """
    delta = g.max_degree()
    omega, _ = clique_number(g)
    if omega > delta - 1:
        raise PreconditionError(f"clique number {omega} exceeds {delta - 1}")
    mis = maximum_independent_set(g)
    if omega < delta - 1:
        return mis
    alpha = len(mis)
    targets = [mask_of(c) for c in _maximal_cliques(g) if len(c) == delta - 1]

    def phase1(chosen: list[int], avail: int, unhit: list[int]) -> tuple[int, ...] | None:
        if len(chosen) + avail.bit_count() < alpha:
            return None
        live = [t for t in unhit if not t & mask_of(chosen)]
        if not live:
            rest = _independent_subset(g, avail, alpha - len(chosen))
            if rest is None:
                return None
            return tuple(sorted(chosen + list(rest)))
        t = min(live, key=lambda t: (t & avail).bit_count())
        for v in bits(t & avail):
            got = phase1(chosen + [v], avail & ~g.closed(v), live)
            if got is not None:
                return got
        return None

    got = phase1([], g.full_mask(), targets)
    if got is None:
        raise InternalInconsistencyError(
            "no maximum independent set hits every (Delta-1)-clique")
    # verify the hitting property against the full enumeration
    gm = mask_of(got)
    for t in targets:
        if not t & gm:
            raise InternalInconsistencyError("hitting verification failed")
    return got


def _connected_without(g: Graph, removed: int) -> bool:
    rest = g.full_mask() & ~removed
    if not rest:
        return True
    start = rest & -rest
    comp, frontier = start, start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & rest & ~comp
        comp |= frontier
    return comp == rest


def _order_toward_root(g: Graph, root: int, skip: int = 0) -> list[int]:
    """Vertices by decreasing BFS distance from root (root last), skipping
    masked vertices; every non-root vertex keeps one neighbor later on."""
    dist = {root: 0}
    frontier = [root]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for u in bits(g.adj[v] & ~skip):
                if u not in dist:
                    dist[u] = d
                    nxt.append(u)
        frontier = nxt
    order = sorted(dist, key=lambda v: (-dist[v], v))
    return order


def _brooks_component(g: Graph, delta: int) -> dict[int, int]:
    """Color one connected component with at most ``delta`` colors."""
    low = [v for v in range(g.n) if g.degree(v) < delta]
    if low:
        return greedy_color(g, _order_toward_root(g, low[0]), delta)
    # delta-regular from here on
    if delta == 2:
        colors = {}
        cycle = _cycle_order(g)
        for i, v in enumerate(cycle):
            colors[v] = 1 + i % 2
        if g.n % 2 == 1:
            colors[cycle[-1]] = 3
        return colors
    cut = next((v for v in range(g.n) if not _connected_without(g, 1 << v)), None)
    if cut is not None:
        sides = connected_components_without(g, cut)
        merged: dict[int, int] = {}
        for side in sides:
            sub, ids = induced_subgraph(g, side + (cut,))
            local = greedy_color(sub, _order_toward_root(sub, ids.index(cut)), delta)
            want = merged.get(cut, local[ids.index(cut)])
            have = local[ids.index(cut)]
            swap = {have: want, want: have} if have != want else {}
            for i, c in local.items():
                merged[ids[i]] = swap.get(c, c)
        return merged
    # 2-connected, regular, not complete: classic two-neighbor trick
    for x in range(g.n):
        nbrs = g.neighbors(x)
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1:]:
                if g.has_edge(u, w):
                    continue
                if not _connected_without(g, (1 << u) | (1 << w)):
                    continue
                order = _order_toward_root(g, x, skip=(1 << u) | (1 << w))
                return greedy_color(g, order, delta, initial={u: 1, w: 1})
    raise InternalInconsistencyError("Brooks case analysis fell through")


def _cycle_order(g: Graph) -> list[int]:
    order = [0]
    prev = -1
    while len(order) < g.n:
        v = order[-1]
        nxt = [u for u in bits(g.adj[v]) if u != prev]
        prev = v
        order.append(nxt[0])
    return order


def connected_components_without(g: Graph, cut: int) -> list[tuple[int, ...]]:
    rest = g.full_mask() & ~(1 << cut)
    comps = []
    while rest:
        s = rest & -rest
        comp, frontier = s, s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & rest & ~comp
            comp |= frontier
        comps.append(tuple(bits(comp)))
        rest &= ~comp
    return comps


def brooks_color(g: Graph) -> Coloring:
    """Proper coloring with at most Delta colors (Delta >= 3, no K_{Delta+1})."""
    delta = g.max_degree()
    if delta < 3:
        raise PreconditionError("Brooks coloring requires maximum degree >= 3")
    colors: dict[int, int] = {}
    for comp in connected_components(g):
        sub, ids = induced_subgraph(g, comp)
        if sub.n == delta + 1 and sub.min_degree() == delta:
            raise PreconditionError("component is the complete graph on Delta+1 vertices")
        for i, c in _brooks_component(sub, delta).items():
            colors[ids[i]] = c
    return Coloring(colors, delta)


# -- reduction to maximum degree 9 --------------------------------------------

def delta_reduce(g: Graph, color_base, trace: list | None = None) -> Coloring:
    """Color with Delta-1 colors by peeling hitting independent sets.

    ``color_base(sub, ids)`` colors a Delta = 9 graph with 8 colors and
    returns a dict keyed by the ids in ``ids`` (the solver's base case).
    Each level extracts a maximum independent set meeting every large
    clique, colors the rest one level cheaper (greedy when the degree drops
    by 3 or more, Brooks when by 2, recursion otherwise), then spends one
    new color on the extracted set.
    """
    delta = g.max_degree()
    if delta < 10:
        raise PreconditionError("degree reduction starts at maximum degree 10")
    omega, _ = clique_number(g)
    if omega > delta - 1:
        raise PreconditionError(f"clique number {omega} exceeds Delta-1")
    colors = _delta_reduce(g, tuple(range(g.n)), color_base, trace)
    return Coloring(colors, delta - 1)


def _delta_reduce(g: Graph, ids: tuple[int, ...], color_base,
                  trace: list | None) -> dict[int, int]:
    from .trace import TraceEvent

    delta = g.max_degree()
    i_local = hitting_mis(g)
    rest = [v for v in range(g.n) if v not in set(i_local)]
    sub, local = induced_subgraph(g, rest)
    sub_ids = tuple(ids[i] for i in local)
    d_sub = sub.max_degree()
    if d_sub > delta - 1:
        raise InternalInconsistencyError("removing a maximum independent set "
                                         "failed to lower the maximum degree")
    if d_sub <= delta - 3:
        colors = {sub_ids[i]: c
                  for i, c in greedy_color(sub, list(range(sub.n)), delta - 2).items()}
        if trace is not None:
            trace.append(TraceEvent("greedy", {"vs": sub_ids, "k": delta - 2}))
    elif d_sub == delta - 2:
        colors = {sub_ids[i]: c for i, c in brooks_color(sub).colors.items()}
        if trace is not None:
            trace.append(TraceEvent("brooks", {"vs": sub_ids, "delta": d_sub}))
    elif d_sub == 9:
        colors = color_base(sub, sub_ids)
    else:
        colors = _delta_reduce(sub, sub_ids, color_base, trace)
    i_set = tuple(ids[v] for v in i_local)
    for v in i_set:
        colors[v] = delta - 1
    if trace is not None:
        trace.append(TraceEvent("delta_set", {"i_set": i_set, "color": delta - 1}))
    return colors
