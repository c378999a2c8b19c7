"""Colorings, degeneracy orders, and the independent-sets coloring engine.

The engine realizes the workhorse bound: if pairwise disjoint independent
sets I_1..I_t are removed and the remainder admits an elimination order with
back-degree at most k-t-1, the graph is k-colorable — each I_j gets one
reserved color (k, k-1, ... downward) and the remainder is colored greedily
along the order with the other k-t colors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .graph import Graph, bits, mask_of

__all__ = [
    "Coloring",
    "verify_coloring",
    "back_degree_profile",
    "degeneracy_order",
    "greedy_color",
    "color_with_independent_sets",
]


@dataclass
class Coloring:
    """Vertex -> color map with its palette size; colors live in 1..k."""

    colors: dict[int, int]
    k: int


def verify_coloring(g: Graph, coloring: Coloring) -> bool:
    """True iff total, within palette, and no edge is monochromatic."""
    c = coloring.colors
    if len(c) != g.n:
        return False
    for v in range(g.n):
        cv = c.get(v)
        if cv is None or not 1 <= cv <= coloring.k:
            return False
    for u, v in g.edges():
        if c[u] == c[v]:
            return False
    return True


def back_degree_profile(g: Graph, order: list[int] | tuple[int, ...]) -> int:
    """Maximum over v of the number of neighbors earlier in ``order``."""
    if sorted(order) != list(range(g.n)):
        raise PreconditionError("order is not a permutation of the vertex set")
    seen = 0
    worst = 0
    for v in order:
        worst = max(worst, (g.adj[v] & seen).bit_count())
        seen |= 1 << v
    return worst


def degeneracy_order(g: Graph) -> list[int]:
    """Smallest-last order: repeatedly peel a minimum-degree vertex.

    The returned order realizes back-degree equal to the degeneracy; ties
    break toward smaller vertex ids, so the order is deterministic.
    """
    alive = g.full_mask()
    peeled: list[int] = []
    while alive:
        v = min(bits(alive), key=lambda u: ((g.adj[u] & alive).bit_count(), u))
        peeled.append(v)
        alive &= ~(1 << v)
    peeled.reverse()
    return peeled


def greedy_color(g: Graph, order: list[int] | tuple[int, ...], k: int,
                 initial: dict[int, int] | None = None,
                 forbidden_extra: dict[int, set[int]] | None = None) -> dict[int, int]:
    """Greedy coloring along ``order`` using the smallest free color <= k."""
    colors = dict(initial) if initial else {}
    for v in order:
        used = {colors[u] for u in bits(g.adj[v]) if u in colors}
        if forbidden_extra and v in forbidden_extra:
            used |= forbidden_extra[v]
        c = 1
        while c in used:
            c += 1
        if c > k:
            raise PreconditionError(f"greedy needs more than {k} colors at vertex {v}")
        colors[v] = c
    return colors


def color_with_independent_sets(g: Graph, sets: list[tuple[int, ...]], k: int,
                                order: list[int] | None = None) -> Coloring:
    """k-color ``g`` from disjoint independent sets plus a degenerate remainder.

    ``order`` (over the remainder) may be supplied; otherwise a smallest-last
    order is computed.  The back-degree bound k-t-1 is always checked, never
    trusted.  Set j (1-based) receives color k-j+1; greedy uses 1..k-t.
    """
    t = len(sets)
    if t > k:
        raise PreconditionError("more independent sets than colors")
    taken = 0
    for s in sets:
        sm = mask_of(s)
        if sm & taken:
            raise PreconditionError("independent sets are not disjoint")
        if not g.is_independent(s):
            raise PreconditionError("a reserved set is not independent")
        taken |= sm
    remainder = [v for v in range(g.n) if not taken & (1 << v)]
    if order is None:
        from .graph import induced_subgraph
        sub, ids = induced_subgraph(g, remainder)
        order = [ids[v] for v in degeneracy_order(sub)]
    elif sorted(order) != remainder:
        raise PreconditionError("order must enumerate exactly the remainder")

    seen = 0
    for v in order:
        if (g.adj[v] & seen).bit_count() > k - t - 1:
            raise PreconditionError(
                f"remainder order exceeds back-degree {k - t - 1} at vertex {v}")
        seen |= 1 << v

    colors: dict[int, int] = {}
    for j, s in enumerate(sets):
        for v in s:
            colors[v] = k - j
    # Reserved colors sit above k-t, so greedy cannot collide with them.
    out = greedy_color(g, order, k - t, initial=colors)
    return Coloring(out, k)
