"""Exact detection of the small induced patterns the pipeline relies on.

The searches enumerate ordered candidate tuples in lexicographic order with
adjacency-driven pruning, so the first hit is the lexicographically smallest
witness; exhausting the search is an exhaustive-absence guarantee.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits

__all__ = [
    "PatternWitness",
    "find_induced",
    "is_p5_gem_free",
    "clique_number",
    "maximum_independent_set",
]

PATTERNS = ("P5", "GEM", "C5")


@dataclass(frozen=True)
class PatternWitness:
    """An ordered vertex tuple realizing a pattern.

    Order convention: path order for P5; P4 order then apex for GEM; cyclic
    order for C5; arbitrary (sorted) for Kt.
    """

    pattern: str
    vertices: tuple[int, ...]

    def check(self, g: Graph) -> bool:
        """Verify the witness by direct edge comparison against the pattern."""
        vs = self.vertices
        if len(set(vs)) != len(vs):
            return False
        if self.pattern == "P5":
            need = {(0, 1), (1, 2), (2, 3), (3, 4)}
            k = 5
        elif self.pattern == "GEM":
            need = {(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)}
            k = 5
        elif self.pattern == "C5":
            need = {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
            k = 5
        elif self.pattern.startswith("K"):
            k = len(vs)
            need = {(i, j) for i in range(k) for j in range(i + 1, k)}
        else:
            return False
        if len(vs) != k:
            return False
        for i in range(k):
            for j in range(i + 1, k):
                if g.has_edge(vs[i], vs[j]) != ((i, j) in need):
                    return False
        return True


def _find_p5(g: Graph) -> tuple[int, ...] | None:
    adj = g.adj
    for v1 in range(g.n):
        c1 = g.closed(v1)
        for v2 in bits(adj[v1]):
            c2 = g.closed(v2)
            for v3 in bits(adj[v2] & ~c1):
                c3 = g.closed(v3)
                for v4 in bits(adj[v3] & ~c1 & ~c2):
                    m5 = adj[v4] & ~c1 & ~c2 & ~c3
                    if m5:
                        v5 = (m5 & -m5).bit_length() - 1
                        return (v1, v2, v3, v4, v5)
    return None


def _find_gem(g: Graph) -> tuple[int, ...] | None:
    # Ordered as (p1, p2, p3, p4, apex): induced P4 plus a common neighbor.
    adj = g.adj
    for v1 in range(g.n):
        c1 = g.closed(v1)
        for v2 in bits(adj[v1]):
            c2 = g.closed(v2)
            for v3 in bits(adj[v2] & ~c1):
                c3 = g.closed(v3)
                for v4 in bits(adj[v3] & ~c1 & ~c2):
                    apex = adj[v1] & adj[v2] & adj[v3] & adj[v4]
                    if apex:
                        a = (apex & -apex).bit_length() - 1
                        return (v1, v2, v3, v4, a)
    return None


def _find_c5(g: Graph) -> tuple[int, ...] | None:
    adj = g.adj
    for v1 in range(g.n):
        c1 = g.closed(v1)
        b1 = 1 << v1
        for v2 in bits(adj[v1]):
            c2 = g.closed(v2)
            for v3 in bits(adj[v2] & ~c1):
                c3 = g.closed(v3)
                for v4 in bits(adj[v3] & ~c1 & ~c2):
                    m5 = adj[v4] & adj[v1] & ~c2 & ~c3 & ~b1
                    if m5:
                        v5 = (m5 & -m5).bit_length() - 1
                        return (v1, v2, v3, v4, v5)
    return None


def find_induced(g: Graph, pattern: str) -> PatternWitness | None:
    """Find an induced P5, GEM or C5; None is an exhaustive-absence guarantee."""
    if pattern == "P5":
        hit = _find_p5(g)
    elif pattern == "GEM":
        hit = _find_gem(g)
    elif pattern == "C5":
        hit = _find_c5(g)
    else:
        raise ValueError(f"unknown pattern {pattern!r}")
    return PatternWitness(pattern, hit) if hit else None


def is_p5_gem_free(g: Graph) -> tuple[bool, PatternWitness | None]:
    """True iff the graph has neither an induced P5 nor an induced gem."""
    w = find_induced(g, "P5")
    if w is not None:
        return False, w
    w = find_induced(g, "GEM")
    if w is not None:
        return False, w
    return True, None


def _greedy_color_bound(g: Graph, cand: int) -> int:
    """Number of colors greedy needs on the candidate set; bounds its clique."""
    classes: list[int] = []
    for v in bits(cand):
        av = g.adj[v]
        for i, cls in enumerate(classes):
            if not av & cls:
                classes[i] = cls | (1 << v)
                break
        else:
            classes.append(1 << v)
    return len(classes)


def clique_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact clique number with the lexicographically least maximum witness.

    Branch and bound over lexicographically ordered extensions; the greedy
    coloring bound prunes subtrees that cannot beat the incumbent, which never
    skips a strictly larger clique, so the first clique of maximum size found
    in lex order is the lex-least one.
    """
    best: list[int] = []
    best_size = 0

    def expand(current: list[int], cand: int) -> None:
        nonlocal best, best_size
        if not cand:
            if len(current) > best_size:
                best_size = len(current)
                best = list(current)
            return
        if len(current) + _greedy_color_bound(g, cand) <= best_size:
            return
        for v in bits(cand):
            if len(current) + (cand >> v).bit_count() <= best_size:
                return
            current.append(v)
            expand(current, cand & g.adj[v] & (~0 << v))
            current.pop()

    expand([], g.full_mask())
    return best_size, tuple(best)


def maximum_independent_set(g: Graph) -> tuple[int, ...]:
    """A maximum independent set, by deterministic branch and bound.

    Branches on the highest-degree remaining vertex: either it is included
    and its closed neighborhood discarded, or it is excluded.
    """
    best: tuple[int, ...] = ()

    def bound(avail: int) -> int:
        # Greedy clique partition of the available set: every independent
        # set meets each clique at most once, so the part count bounds it.
        count = 0
        rest = avail
        while rest:
            v = (rest & -rest).bit_length() - 1
            cand = g.adj[v] & rest
            rest &= ~(1 << v)
            while cand:
                u = (cand & -cand).bit_length() - 1
                cand &= g.adj[u]
                rest &= ~(1 << u)
            count += 1
        return count

    def search(chosen: list[int], avail: int) -> None:
        nonlocal best
        if not avail:
            if len(chosen) > len(best):
                best = tuple(sorted(chosen))
            return
        if len(chosen) + bound(avail) <= len(best):
            return
        v = max(bits(avail), key=lambda u: ((g.adj[u] & avail).bit_count(), u))
        # Include v first: tends to reach large sets quickly.
        chosen.append(v)
        search(chosen, avail & ~g.closed(v))
        chosen.pop()
        search(chosen, avail & ~(1 << v))

    search([], g.full_mask())
    return best
