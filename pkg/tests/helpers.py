"""Independent brute-force oracles for the test suite.

Everything here is written the slow, obvious way on purpose: subset scans
and definition-checks that share no pruning logic with the library, so the
two sides can disagree when one of them is wrong.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from pentagem.graph import Graph, build_graph, induced_subgraph


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def brute_chromatic(g: Graph) -> int:
    """Smallest k admitting a proper coloring, by plain backtracking."""
    if g.n == 0:
        return 0

    def colorable(k: int) -> bool:
        colors = [0] * g.n

        def place(v: int) -> bool:
            if v == g.n:
                return True
            for c in range(1, k + 1):
                if all(colors[u] != c for u in g.neighbors(v) if u < v):
                    colors[v] = c
                    if place(v + 1):
                        return True
                    colors[v] = 0
            return False

        return place(0)

    for k in range(1, g.n + 1):
        if colorable(k):
            return k
    raise AssertionError("unreachable")


def _induces(g: Graph, vs: tuple[int, ...], pattern_edges: set[tuple[int, int]]) -> bool:
    k = len(vs)
    for i in range(k):
        for j in range(i + 1, k):
            if g.has_edge(vs[i], vs[j]) != ((i, j) in pattern_edges):
                return False
    return True


P5_EDGES = {(0, 1), (1, 2), (2, 3), (3, 4)}
C5_EDGES = {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
GEM_EDGES = {(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)}

PATTERN_EDGES = {"P5": P5_EDGES, "C5": C5_EDGES, "GEM": GEM_EDGES}


def brute_find_induced(g: Graph, pattern: str) -> tuple[int, ...] | None:
    """Lexicographically least ordered witness via full permutation scan."""
    pe = PATTERN_EDGES[pattern]
    best = None
    for combo in combinations(range(g.n), 5):
        for perm in permutations(combo):
            if _induces(g, perm, pe):
                if best is None or perm < best:
                    best = perm
    return best


def brute_has_induced(g: Graph, pattern: str) -> bool:
    pe = PATTERN_EDGES[pattern]
    for combo in combinations(range(g.n), 5):
        for perm in permutations(combo):
            if _induces(g, perm, pe):
                return True
    return False


def brute_clique_number(g: Graph) -> int:
    for size in range(g.n, 0, -1):
        for combo in combinations(range(g.n), size):
            if g.is_clique(combo):
                return size
    return 0


def brute_d1_catalog_present(g: Graph) -> bool:
    """Subset scan against the two catalog definitions."""
    from pentagem.reductions import is_k3_join_3k2, is_k4_join_two_nonedges

    for combo in combinations(range(g.n), 9):
        if is_k3_join_3k2(g, combo):
            return True
    for combo in combinations(range(g.n), 8):
        if is_k4_join_two_nonedges(g, combo):
            return True
    return False


def brute_max_independent_set_size(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        for combo in combinations(range(g.n), size):
            if g.is_independent(combo):
                return size
    return best


def brute_is_cograph(g: Graph) -> bool:
    for combo in combinations(range(g.n), 4):
        for perm in permutations(combo):
            if _induces(g, perm, {(0, 1), (1, 2), (2, 3)}):
                return False
    return True
