"""Finite simple graphs on vertices 0..n-1, with the structure predicates the
rest of the package quantifies over: cores, pendant sets, neighborhood
uniqueness, complementation, meet closure, and small-graph isomorphism.

Adjacency is one bitmask per vertex, so neighborhood set algebra is plain
integer arithmetic and graphs are immutable and hashable.

Text format (read/write, bit exact on writer output)::

    zdg-graph 1
    n 5
    v 0 a1          # optional name lines
    e 0 1           # one line per edge, u < v, sorted
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import FormatError, TooLargeError

ISO_MAX_N = 12


def bits(mask: int):
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbor bitmask of v."""

    n: int
    adj: tuple[int, ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal vertex count")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {v}: neighbor out of range")
            if (mask >> v) & 1:
                raise ValueError(f"vertex {v}: self-loop")
        for u in range(self.n):
            for v in bits(self.adj[u]):
                if not (self.adj[v] >> u) & 1:
                    raise ValueError(f"adjacency not symmetric at {u}-{v}")
        if self.names is not None and len(self.names) != self.n:
            raise ValueError("names length must equal vertex count")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> int:
        """Neighborhood N(v) as a bitmask."""
        return self.adj[v]

    def closed(self, v: int) -> int:
        """Closed neighborhood N(v) | {v} as a bitmask."""
        return self.adj[v] | (1 << v)

    def neighbor_set(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def name_of(self, v: int) -> str:
        return self.names[v] if self.names is not None else f"v{v}"

    def stripped(self) -> "Graph":
        """The same graph with names dropped."""
        return Graph(self.n, self.adj) if self.names is not None else self


def from_edge_list(n: int, edges, names=None) -> Graph:
    """Build a graph from (u, v) pairs; duplicates collapse, loops rejected."""
    adj = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {e}: vertex out of range 0..{n - 1}")
        if u == v:
            raise ValueError(f"edge {e}: self-loop")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(names) if names is not None else None)


def bfs_distances(g: Graph, src: int) -> list[int]:
    """Distances from src; -1 for unreachable vertices."""
    dist = [-1] * g.n
    dist[src] = 0
    frontier = [src]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in bits(g.adj[u]):
                if dist[v] < 0:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return all(d >= 0 for d in bfs_distances(g, 0))


def diameter(g: Graph) -> int | None:
    """Graph diameter, or None when the graph is disconnected."""
    if g.n == 0 or not is_connected(g):
        return None
    return max(max(bfs_distances(g, v)) for v in range(g.n))


def component_count(g: Graph) -> int:
    seen = 0
    count = 0
    for v in range(g.n):
        if not (seen >> v) & 1:
            count += 1
            for u, d in enumerate(bfs_distances(g, v)):
                if d >= 0:
                    seen |= 1 << u
    return count


def has_cycle(g: Graph) -> bool:
    # A graph is a forest iff m = n - (number of components).
    return g.edge_count() > g.n - component_count(g)


def core(g: Graph) -> tuple[frozenset[int], frozenset[tuple[int, int]]]:
    """Vertices and edges of the core: the edges lying on at least one cycle.

    An edge is on a cycle iff it is not a bridge, i.e. its endpoints stay
    connected after the edge is removed.
    """
    core_edges = []
    for u, v in g.edges():
        adj = list(g.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        # BFS from u in the reduced graph looking for v
        seen = 1 << u
        frontier = [u]
        found = False
        while frontier and not found:
            nxt = []
            for w in frontier:
                for x in bits(adj[w]):
                    if x == v:
                        found = True
                        break
                    if not (seen >> x) & 1:
                        seen |= 1 << x
                        nxt.append(x)
                if found:
                    break
            frontier = nxt
        if found:
            core_edges.append((u, v))
    verts = frozenset(v for e in core_edges for v in e)
    return verts, frozenset(core_edges)


def end_vertices(g: Graph) -> frozenset[int]:
    """Vertices of degree one."""
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


def pendant_set(g: Graph, x: int) -> frozenset[int]:
    """T_x: the end vertices adjacent to x (possibly empty)."""
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    return frozenset(v for v in bits(g.adj[x]) if g.degree(v) == 1)


def is_internal_vertex(g: Graph, v: int) -> bool:
    """True iff v is not an end vertex and no end vertex is adjacent to v."""
    if g.degree(v) == 1:
        return False
    return all(g.degree(u) != 1 for u in bits(g.adj[v]))


def is_m_uniquely_determined(g: Graph, m: int) -> bool:
    """No two distinct vertices of degree m share their neighborhood."""
    if not 1 <= m <= g.n:
        raise ValueError(f"m={m} out of range 1..{g.n}")
    seen: dict[int, int] = {}
    for v in range(g.n):
        if g.degree(v) == m:
            if g.adj[v] in seen:
                return False
            seen[g.adj[v]] = v
    return True


def is_uniquely_determined(g: Graph) -> bool:
    """No two distinct vertices share their neighborhood."""
    return len({g.adj[v] for v in range(g.n)}) == g.n


def perp(g: Graph, x: int, y: int) -> bool:
    """x is perpendicular to y: distinct, adjacent, edge in no triangle."""
    return x != y and g.has_edge(x, y) and not (g.adj[x] & g.adj[y])


def perp_partners(g: Graph, x: int) -> list[int]:
    return [y for y in bits(g.adj[x]) if not (g.adj[x] & g.adj[y])]


def is_complemented(g: Graph) -> bool:
    """Every vertex has a perpendicular partner."""
    return all(perp_partners(g, x) for x in range(g.n))


def is_uniquely_complemented(g: Graph) -> bool:
    """Complemented, and all perpendicular partners of a vertex share one
    neighborhood."""
    for x in range(g.n):
        partners = perp_partners(g, x)
        if not partners:
            return False
        if len({g.adj[y] for y in partners}) > 1:
            return False
    return True


def neighborhood_meet_closed(g: Graph) -> bool:
    """Whenever N(x) & N(y) is nonempty, some vertex z has exactly that
    neighborhood."""
    hoods = set(g.adj)
    for x in range(g.n):
        for y in range(x, g.n):
            meet = g.adj[x] & g.adj[y]
            if meet and meet not in hoods:
                return False
    return True


def _signatures(g: Graph) -> list[tuple]:
    return [
        (g.degree(v), tuple(sorted(g.degree(u) for u in bits(g.adj[v]))))
        for v in range(g.n)
    ]


def automorphisms(g: Graph, max_n: int = ISO_MAX_N) -> list[tuple[int, ...]]:
    """The full automorphism group as explicit vertex permutations.

    Backtracking over images with degree-signature and adjacency pruning;
    refuses graphs larger than max_n.
    """
    if g.n > max_n:
        raise TooLargeError(f"automorphism search capped at {max_n} vertices")
    sig = _signatures(g)
    out: list[tuple[int, ...]] = []
    image = [0] * g.n

    def extend(v: int, used: int):
        if v == g.n:
            out.append(tuple(image))
            return
        for w in range(g.n):
            if (used >> w) & 1 or sig[v] != sig[w]:
                continue
            ok = True
            for u in range(v):
                if g.has_edge(u, v) != g.has_edge(image[u], w):
                    ok = False
                    break
            if ok:
                image[v] = w
                extend(v + 1, used | (1 << w))

    extend(0, 0)
    return out


def is_isomorphic(g: Graph, h: Graph, max_n: int = ISO_MAX_N) -> tuple[int, ...] | None:
    """A vertex bijection g -> h preserving adjacency, or None."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    if g.n > max_n:
        raise TooLargeError(f"isomorphism search capped at {max_n} vertices")
    sg, sh = _signatures(g), _signatures(h)
    if sorted(sg) != sorted(sh):
        return None
    image = [0] * g.n
    found: list[tuple[int, ...]] = []

    def extend(v: int, used: int) -> bool:
        if v == g.n:
            found.append(tuple(image))
            return True
        for w in range(g.n):
            if (used >> w) & 1 or sg[v] != sh[w]:
                continue
            if any(g.has_edge(u, v) != h.has_edge(image[u], w) for u in range(v)):
                continue
            image[v] = w
            if extend(v + 1, used | (1 << w)):
                return True
        return False

    return found[0] if extend(0, 0) else None


def brute_force_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """Oracle: filter all n! permutations. Intended for tests, n <= 7."""
    if g.n > 7:
        raise TooLargeError("brute force automorphisms capped at 7 vertices")
    out = []
    for p in permutations(range(g.n)):
        if all(g.has_edge(p[u], p[v]) for u, v in g.edges()):
            out.append(p)
    return out


@dataclass(frozen=True)
class GraphProps:
    connected: bool
    diameter: int | None
    has_cycle: bool
    core_vertices: frozenset[int]
    core_edges: frozenset[tuple[int, int]]
    end_vertices: frozenset[int]


def graph_props(g: Graph) -> GraphProps:
    cv, ce = core(g)
    return GraphProps(
        connected=is_connected(g),
        diameter=diameter(g),
        has_cycle=has_cycle(g),
        core_vertices=cv,
        core_edges=ce,
        end_vertices=end_vertices(g),
    )


# --- text format ----------------------------------------------------------


def parse_graph(text: str) -> Graph:
    n = None
    names: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    saw_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not saw_header:
            if line != "zdg-graph 1":
                raise FormatError("expected header 'zdg-graph 1'", lineno)
            saw_header = True
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None or len(parts) != 2 or not parts[1].isdigit():
                raise FormatError("bad vertex count line", lineno)
            n = int(parts[1])
        elif parts[0] == "v":
            if n is None or len(parts) != 3:
                raise FormatError("bad name line", lineno)
            try:
                vid = int(parts[1])
            except ValueError:
                raise FormatError("bad vertex id", lineno) from None
            if not 0 <= vid < n:
                raise FormatError(f"vertex id {vid} out of range", lineno)
            names[vid] = parts[2]
        elif parts[0] == "e":
            if n is None or len(parts) != 3:
                raise FormatError("bad edge line", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError("bad edge endpoints", lineno) from None
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"edge {u}-{v} out of range", lineno)
            if u == v:
                raise FormatError(f"self-loop at {u}", lineno)
            edges.append((u, v))
        else:
            raise FormatError(f"unknown directive {parts[0]!r}", lineno)
    if not saw_header:
        raise FormatError("missing header 'zdg-graph 1'")
    if n is None:
        raise FormatError("missing vertex count line")
    name_tuple = None
    if names:
        name_tuple = tuple(names.get(i, f"v{i}") for i in range(n))
    return from_edge_list(n, edges, name_tuple)


def format_graph(g: Graph) -> str:
    lines = ["zdg-graph 1", f"n {g.n}"]
    if g.names is not None:
        lines.extend(f"v {i} {name}" for i, name in enumerate(g.names))
    lines.extend(f"e {u} {v}" for u, v in sorted(g.edges()))
    return "\n".join(lines) + "\n"
