"""Simple undirected graphs with bitmask adjacency.

Vertices are dense integer indices 0..n-1; labels are cosmetic.  Adjacency
is stored as one Python-int bitmask per vertex, which makes neighborhood
intersection, containment and popcount tests cheap at desk scale (n up to a
few hundred).  Graphs are immutable after construction and safe to share.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import GraphFormatError

__all__ = [
    "Graph",
    "build_graph",
    "induced_subgraph",
    "join",
    "complement",
    "disjoint_union",
    "complete_graph",
    "empty_graph",
    "cycle_graph",
    "path_graph",
    "bits",
    "mask_of",
    "connected_components",
    "is_connected",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the open-neighborhood bitmask of ``v``.  The constructor
    asserts symmetry and irreflexivity, so every ``Graph`` in the system
    satisfies the core invariants by construction.
    """

    __slots__ = ("n", "adj", "labels")

    def __init__(self, n: int, adj: Iterable[int], labels: tuple[str, ...] | None = None):
        adj = tuple(adj)
        if n < 0 or len(adj) != n:
            raise GraphFormatError(f"adjacency length {len(adj)} does not match n={n}")
        full = (1 << n) - 1
        for v, m in enumerate(adj):
            if m & (1 << v):
                raise GraphFormatError(f"loop at vertex {v}")
            if m & ~full:
                raise GraphFormatError(f"adjacency of {v} mentions vertices >= {n}")
            for u in bits(m):
                if not adj[u] & (1 << v):
                    raise GraphFormatError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = adj
        self.labels = labels

    # -- elementary queries -------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def closed(self, v: int) -> int:
        """Closed-neighborhood bitmask N[v]."""
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                yield (u, u + 1 + v)

    @property
    def m(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def max_degree(self) -> int:
        return max((m.bit_count() for m in self.adj), default=0)

    def min_degree(self) -> int:
        return min((m.bit_count() for m in self.adj), default=0)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adj)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        vm = mask_of(vs)
        return all(self.adj[v] & vm == vm ^ (1 << v) for v in vs)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        vm = mask_of(vs)
        return all(not (self.adj[v] & vm) for v in vs)

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]],
                labels: tuple[str, ...] | None = None) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse.

    Raises :class:`GraphFormatError` on out-of-range indices or loops.
    """
    if n < 0:
        raise GraphFormatError("vertex count must be nonnegative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphFormatError(f"loop edge at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, labels)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``vertices`` plus the index map back to ``g``.

    Returns ``(sub, ids)`` where ``ids[i]`` is the vertex of ``g`` that became
    vertex ``i`` of ``sub``; ``ids`` is sorted, so the map is the order
    isomorphism of the chosen set onto 0..|S|-1.
    """
    ids = sorted(set(vertices))
    for v in ids:
        if not 0 <= v < g.n:
            raise GraphFormatError(f"vertex {v} not in graph of order {g.n}")
    pos = {v: i for i, v in enumerate(ids)}
    sel = mask_of(ids)
    adj = []
    for v in ids:
        m = 0
        for u in bits(g.adj[v] & sel):
            m |= 1 << pos[u]
        adj.append(m)
    return Graph(len(ids), adj), tuple(ids)


def join(a: Graph, b: Graph) -> Graph:
    """Join of two graphs: disjoint union plus all cross edges."""
    n = a.n + b.n
    bmask = ((1 << b.n) - 1) << a.n
    amask = (1 << a.n) - 1
    adj = [a.adj[v] | bmask for v in range(a.n)]
    adj += [(b.adj[v] << a.n) | amask for v in range(b.n)]
    return Graph(n, adj)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    adj = list(a.adj) + [m << a.n for m in b.adj]
    return Graph(a.n + b.n, adj)


def complement(g: Graph) -> Graph:
    """Complement graph; needed only by generators and tests."""
    full = g.full_mask()
    return Graph(g.n, [(full & ~m) & ~(1 << v) for v, m in enumerate(g.adj)])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphFormatError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Components as sorted vertex tuples, ordered by smallest member."""
    seen = 0
    comps = []
    for s in range(g.n):
        if seen & (1 << s):
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(tuple(bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1
