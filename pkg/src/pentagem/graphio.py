"""Graph file formats: DIMACS ``.col``, plain edge lists, and graph6.

DIMACS: ``p edge n m`` then ``e u v`` lines, 1-indexed.  Edge list: an
``n m`` header then ``u v`` pairs, 0-indexed.  graph6: the standard 6-bit
upper-triangle encoding, one graph per line.
"""

from __future__ import annotations

from .errors import GraphFormatError
from .graph import Graph, build_graph

__all__ = [
    "parse_dimacs",
    "parse_edgelist",
    "parse_graph6",
    "write_dimacs",
    "write_edgelist",
    "write_graph6",
    "parse_graph",
    "write_graph",
    "FORMATS",
]

FORMATS = ("dimacs", "edgelist", "graph6")


def parse_dimacs(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        toks = line.split()
        if toks[0] == "p":
            if len(toks) != 4 or toks[1].lower() not in ("edge", "edges", "col"):
                raise GraphFormatError(f"bad problem line: {line!r}")
            n = int(toks[2])
        elif toks[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before the problem line")
            if len(toks) != 3:
                raise GraphFormatError(f"bad edge line: {line!r}")
            u, v = int(toks[1]) - 1, int(toks[2]) - 1
            edges.append((u, v))
        else:
            raise GraphFormatError(f"unknown DIMACS line: {line!r}")
    if n is None:
        raise GraphFormatError("missing problem line")
    try:
        return build_graph(n, edges)
    except GraphFormatError as exc:
        raise GraphFormatError(f"invalid DIMACS edges: {exc}") from exc


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    toks = text.split()
    if len(toks) < 2:
        raise GraphFormatError("edge list needs an 'n m' header")
    try:
        nums = [int(t) for t in toks]
    except ValueError as exc:
        raise GraphFormatError(f"non-integer token in edge list: {exc}") from exc
    n, m = nums[0], nums[1]
    if len(nums) != 2 + 2 * m:
        raise GraphFormatError(f"expected {m} edges, found {(len(nums) - 2) // 2}")
    edges = [(nums[2 + 2 * i], nums[3 + 2 * i]) for i in range(m)]
    return build_graph(n, edges)


def write_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= d <= 63 for d in data):
        raise GraphFormatError("graph6 characters out of range")
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise GraphFormatError("graph6 orders above 2^18 are not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphFormatError(f"graph6 body length {len(body)}, expected {need}")
    bits_flat = []
    for d in body:
        bits_flat.extend((d >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits_flat[idx]:
                edges.append((u, v))
            idx += 1
    return build_graph(n, edges)


def write_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n]
    elif n <= 258047:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        raise GraphFormatError("graph6 orders above 2^18 are not supported")
    flat = []
    for v in range(1, n):
        for u in range(v):
            flat.append(1 if g.has_edge(u, v) else 0)
    while len(flat) % 6:
        flat.append(0)
    body = []
    for i in range(0, len(flat), 6):
        val = 0
        for b in flat[i:i + 6]:
            val = (val << 1) | b
        body.append(val)
    return "".join(chr(63 + d) for d in head + body) + "\n"


def sniff_format(text: str) -> str:
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith(("c", "p")):
            return "dimacs"
        first = line.split()[0]
        try:
            int(first)
            return "edgelist"
        except ValueError:
            return "graph6"
    raise GraphFormatError("empty graph file")


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    fmt = fmt or sniff_format(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "graph6":
        return parse_graph6(text)
    raise GraphFormatError(f"unknown format {fmt!r}")


def write_graph(g: Graph, fmt: str) -> str:
    if fmt == "dimacs":
        return write_dimacs(g)
    if fmt == "edgelist":
        return write_edgelist(g)
    if fmt == "graph6":
        return write_graph6(g)
    raise GraphFormatError(f"unknown format {fmt!r}")
