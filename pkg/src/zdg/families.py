"""Generators for the graph families and reference tables the test corpus is
built from, so every instance is a parameterized construction.

The base 5-vertex graph of the fig1/fig2/fig3 family is the union of a
square a1-x1-x2-a2-a1 and a triangle a1-a2-a3.  fig1 attaches pendants to a1
and a2 (the realizable sides); fig2 and fig3 attach them to a3 and x1, which
kills realizability.  fig4 is a triangle with pendant sets on all three
corners.  The attachment points are pinned by the requirement that the
generated graph equal the zero-divisor graph of the matching reference
table.
"""

from __future__ import annotations

from importlib import resources

from .boolean_algebra import BooleanRing
from .graph import Graph, from_edge_list, is_internal_vertex
from .semigroup import MulTable, parse_table, table_from_rows

_BASE_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (3, 4)]
_BASE_NAMES = ["a1", "a2", "a3", "x1", "x2"]


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return from_edge_list(n, edges, [f"a{i + 1}" for i in range(n)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("complete bipartite graph needs parts >= 1")
    edges = [(u, m + v) for u in range(m) for v in range(n)]
    names = [f"a{i + 1}" for i in range(m)] + [f"b{j + 1}" for j in range(n)]
    return from_edge_list(m + n, edges, names)


def complete_multipartite(sizes) -> Graph:
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("part sizes must be a nonempty list of positives")
    bounds = [0]
    for s in sizes:
        bounds.append(bounds[-1] + s)
    n = bounds[-1]
    edges = []
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for u in range(bounds[i], bounds[i + 1]):
                for v in range(bounds[j], bounds[j + 1]):
                    edges.append((u, v))
    names = [
        f"a{i + 1}{k + 1}" for i, s in enumerate(sizes) for k in range(s)
    ]
    return from_edge_list(n, edges, names)


def m_nk(n: int, k: int) -> Graph:
    """Complete graph on a1..an plus pendants x1..xk with xi attached to ai."""
    if n < 4:
        raise ValueError("m_nk needs n >= 4")
    if not 1 <= k <= n:
        raise ValueError("m_nk needs 1 <= k <= n")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges += [(i, n + i) for i in range(k)]
    names = [f"a{i + 1}" for i in range(n)] + [f"x{i + 1}" for i in range(k)]
    return from_edge_list(n + k, edges, names)


def _base_plus_pendants(groups: list[tuple[int, str, int]]) -> Graph:
    """Square-plus-triangle base with pendant groups (anchor, prefix, count)."""
    edges = list(_BASE_EDGES)
    names = list(_BASE_NAMES)
    nxt = 5
    for anchor, prefix, count in groups:
        if count < 0:
            raise ValueError("pendant counts must be >= 0")
        for i in range(count):
            edges.append((anchor, nxt))
            names.append(f"{prefix}{i + 1}")
            nxt += 1
    return from_edge_list(nxt, edges, names)


def fig1(u: int, v: int) -> Graph:
    """Base graph with u pendants on a1 and v pendants on a2."""
    return _base_plus_pendants([(0, "u", u), (1, "v", v)])


def fig2(u: int) -> Graph:
    """Base graph with u pendants on a3 (the triangle-only vertex)."""
    return _base_plus_pendants([(2, "u", u)])


def fig3(u: int) -> Graph:
    """Base graph with u pendants on x1 (a square-only vertex)."""
    return _base_plus_pendants([(3, "u", u)])


def fig4(u: int, v: int, w: int) -> Graph:
    """Triangle a1-a2-a3 with u, v, w pendants on the three corners."""
    if min(u, v, w) < 0:
        raise ValueError("pendant counts must be >= 0")
    edges = [(0, 1), (0, 2), (1, 2)]
    names = ["a1", "a2", "a3"]
    nxt = 3
    for anchor, prefix, count in ((0, "x", u), (1, "y", v), (2, "z", w)):
        for i in range(count):
            edges.append((anchor, nxt))
            names.append(f"{prefix}{i + 1}")
            nxt += 1
    return from_edge_list(nxt, edges, names)


def two_star(m: int, n: int) -> Graph:
    """Two stars with m and n leaves and one edge joining the centers."""
    if m < 0 or n < 0:
        raise ValueError("leaf counts must be >= 0")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(m)]
    edges += [(1, 2 + m + j) for j in range(n)]
    names = ["a", "b"] + [f"x{i + 1}" for i in range(m)] + [
        f"y{j + 1}" for j in range(n)
    ]
    return from_edge_list(2 + m + n, edges, names)


def attach_ends(g: Graph, assignments) -> Graph:
    """Add pendant vertices: assignments is an iterable of (vertex, count);
    new vertices are appended in order."""
    edges = g.edges()
    names = list(g.names) if g.names is not None else [f"v{i}" for i in range(g.n)]
    nxt = g.n
    for v, count in assignments:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        if count < 0:
            raise ValueError("pendant counts must be >= 0")
        for _ in range(count):
            edges.append((v, nxt))
            names.append(f"p{nxt - g.n + 1}")
            nxt += 1
    return from_edge_list(nxt, edges, names)


def attach_graph(g: Graph, v: int, h: Graph) -> Graph:
    """Join every vertex of h to the internal vertex v of g, keeping h's own
    edges; rejects non-internal v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if not is_internal_vertex(g, v):
        raise ValueError(f"vertex {v} is not internal")
    edges = g.edges()
    edges += [(g.n + a, g.n + b) for a, b in h.edges()]
    edges += [(v, g.n + w) for w in range(h.n)]
    names = list(g.names) if g.names is not None else [f"v{i}" for i in range(g.n)]
    names += [f"h{w}" for w in range(h.n)]
    return from_edge_list(g.n + h.n, edges, names)


def boolean_rpartite_table(sizes) -> MulTable:
    """The idempotent table whose graph is the complete multipartite graph:
    squares fix each element, distinct same-part elements multiply to the
    part's first element, cross-part products are zero.

    Needs at least two parts: with a single part no element multiplies to
    zero, so the table would have no zero-divisor graph at all."""
    sizes = list(sizes)
    if len(sizes) < 2 or any(s < 1 for s in sizes):
        raise ValueError("part sizes must be two or more positives")
    n = sum(sizes)
    first = []
    part = []
    start = 1
    for s in sizes:
        for k in range(s):
            part.append(len(first))
        first.append(start)
        start += s
    # part[e-1] is the part index of element e; first[i] its first element
    rows = [[0] * (n + 1) for _ in range(n + 1)]
    for x in range(1, n + 1):
        for y in range(x, n + 1):
            if x == y:
                v = x
            elif part[x - 1] == part[y - 1]:
                v = first[part[x - 1]]
            else:
                v = 0
            rows[x][y] = v
            rows[y][x] = v
    return table_from_rows(rows)


def fixture_table(k: int) -> MulTable:
    """The k-th built-in reference table (1..5), loaded from package data."""
    if not 1 <= k <= 5:
        raise ValueError("fixture tables are numbered 1..5")
    text = (
        resources.files(__package__)
        .joinpath(f"fixtures/table{k}.zdg-table")
        .read_text()
    )
    return parse_table(text)


def fixture_graph() -> Graph:
    """The named square-plus-triangle base graph, loaded from package data."""
    from .graph import parse_graph

    text = (
        resources.files(__package__)
        .joinpath("fixtures/square_triangle.zdg-graph")
        .read_text()
    )
    return parse_graph(text)


def f2k_ring(k: int) -> BooleanRing:
    """The bit-vector boolean ring with 2^k elements: XOR addition, AND
    multiplication.  Element ids are the masks themselves, so 0 is the zero,
    the full mask is the one, and masks 1..2^k-2 are the graph vertices."""
    if not 2 <= k <= 4:
        raise ValueError("f2k_ring supports k = 2..4")
    size = 1 << k
    add = tuple(tuple(a ^ b for b in range(size)) for a in range(size))
    mul = tuple(tuple(a & b for b in range(size)) for a in range(size))
    names = tuple(format(m, f"0{k}b") for m in range(size))
    return BooleanRing(n=size - 2, add=add, mul=mul, names=names)
