"""Recognition of the graphs that are zero-divisor graphs of boolean rings,
and reconstruction of the ring.

The pipeline: a connected graph qualifies iff (1) distinct vertices have
distinct neighborhoods, (2) it is uniquely complemented, (3) nonempty
neighborhood intersections are themselves neighborhoods, and (4) an
idempotent semigroup realizes it.  Given all four, the neighborhoods
ordered by inclusion (with bottom = the empty set owned by the adjoined 1
and top = the whole vertex set owned by 0) form a boolean algebra whose
join is N(x) v N(y) = N(xy); ring addition falls out of the complement
structure and every axiom is verified exhaustively before the ring is
returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import TooLargeError
from .graph import Graph, is_connected, is_uniquely_determined
from .graph import is_uniquely_complemented, neighborhood_meet_closed
from .realize import BOOLEAN, DEFAULT_MAX_N, realize_all
from .semigroup import MulTable, is_boolean, zero_divisor_graph


class LatticeError(ValueError):
    """A lattice or ring axiom failed; carries a witness description."""


class BooleanGraphError(ValueError):
    """The graph fails one of the four boolean-graph conditions."""


@dataclass(frozen=True)
class BooleanGraphReport:
    """Per-condition outcome; witnesses name a failing instance."""

    uniquely_determined: bool
    uniquely_complemented: bool
    meet_closed: bool
    boolean_realizable: bool
    witnesses: tuple[str, ...] = ()
    realization: MulTable | None = field(default=None, compare=False)

    @property
    def all_hold(self) -> bool:
        return (
            self.uniquely_determined
            and self.uniquely_complemented
            and self.meet_closed
            and self.boolean_realizable
        )

    def to_dict(self) -> dict:
        return {
            "uniquely_determined": self.uniquely_determined,
            "uniquely_complemented": self.uniquely_complemented,
            "meet_closed": self.meet_closed,
            "boolean_realizable": self.boolean_realizable,
            "all_hold": self.all_hold,
            "witnesses": list(self.witnesses),
        }


def check_boolean_graph_conditions(g: Graph, max_n: int = DEFAULT_MAX_N) -> BooleanGraphReport:
    """Evaluate all four conditions; condition (4) delegates to the search
    engine with a first-solution short circuit."""
    if not is_connected(g):
        raise ValueError("graph must be connected")
    witnesses = []
    ud = is_uniquely_determined(g)
    if not ud:
        seen: dict[int, int] = {}
        for v in range(g.n):
            if g.adj[v] in seen:
                witnesses.append(f"N({seen[g.adj[v]]}) = N({v})")
                break
            seen[g.adj[v]] = v
    uc = is_uniquely_complemented(g)
    if not uc:
        witnesses.append("some vertex lacks a unique perpendicular neighborhood")
    mc = neighborhood_meet_closed(g)
    if not mc:
        witnesses.append("some nonempty N(x) & N(y) is no vertex's neighborhood")
    report = realize_all(g, mode=BOOLEAN, limit=1, max_n=max_n)
    realization = report.tables[0] if report.tables else None
    if realization is None:
        witnesses.append("no idempotent semigroup realizes the graph")
    return BooleanGraphReport(
        uniquely_determined=ud,
        uniquely_complemented=uc,
        meet_closed=mc,
        boolean_realizable=realization is not None,
        witnesses=tuple(witnesses),
        realization=realization,
    )


class NeighborhoodAlgebra:
    """The set of neighborhoods {N(x)} | {empty, V(G)} ordered by inclusion,
    with join through semigroup products, meet by intersection, and verified
    complements and distributivity.

    Element ids follow the semigroup convention (0 = zero, 1..n = vertices)
    with n+1 for the adjoined identity; masks are vertex bitmasks.
    """

    def __init__(self, g: Graph, s: MulTable):
        if s.n != g.n:
            raise ValueError("table size must match the graph")
        if not is_boolean(s):
            raise ValueError("table must be idempotent")
        if zero_divisor_graph(s).adj != g.adj:
            raise ValueError("table does not realize the graph")
        n = g.n
        self.n = n
        self.one = n + 1
        full = (1 << n) - 1
        self.ground = full

        # owner element of each neighborhood mask
        hood: dict[int, int] = {0: self.one, full: 0}
        for v in range(n):
            mask = g.adj[v]
            if mask in hood:
                raise LatticeError(f"neighborhoods collide at vertex {v}")
            hood[mask] = v + 1
        self.elems: tuple[int, ...] = tuple(sorted(hood))
        self._owner = {mask: hood[mask] for mask in self.elems}
        self._index = {mask: i for i, mask in enumerate(self.elems)}

        # extended product on elements 0..n+1
        def mul(a: int, b: int) -> int:
            if a == self.one:
                return b
            if b == self.one:
                return a
            return s.prod[a][b]

        def hood_of(e: int) -> int:
            if e == 0:
                return full
            if e == self.one:
                return 0
            return g.adj[e - 1]

        k = len(self.elems)
        join = [[0] * k for _ in range(k)]
        meet = [[0] * k for _ in range(k)]
        for i, a in enumerate(self.elems):
            for j, b in enumerate(self.elems):
                jm = hood_of(mul(self._owner[a], self._owner[b]))
                if jm not in self._index:
                    raise LatticeError(f"join of {a:#x} and {b:#x} leaves the lattice")
                mm = a & b
                if mm not in self._index:
                    raise LatticeError(
                        f"meet of N({self._owner[a]}) and N({self._owner[b]}) "
                        "is no neighborhood"
                    )
                join[i][j] = self._index[jm]
                meet[i][j] = self._index[mm]
        self._join = join
        self._meet = meet
        self._element_index = tuple(self._index[hood_of(e)] for e in range(n + 2))
        self._verify_lattice()
        self._complement = self._find_complements()

    # -- verified structure ------------------------------------------------

    def _verify_lattice(self):
        elems = self.elems
        k = len(elems)
        # join must be the least upper bound under inclusion
        for i in range(k):
            for j in range(k):
                jm = elems[self._join[i][j]]
                both = elems[i] | elems[j]
                if both & ~jm:
                    raise LatticeError(f"join not an upper bound at ({i},{j})")
                for t in range(k):
                    if both & ~elems[t] == 0 and jm & ~elems[t]:
                        raise LatticeError(f"join not least at ({i},{j},{t})")
        # distributivity, checked exhaustively over all triples
        for i in range(k):
            for j in range(k):
                mij = self._meet[i][j]
                for t in range(k):
                    lhs = self._join[mij][t]
                    rhs = self._meet[self._join[i][t]][self._join[j][t]]
                    if lhs != rhs:
                        raise LatticeError(f"distributivity fails at ({i},{j},{t})")

    def _find_complements(self) -> tuple[int, ...]:
        k = len(self.elems)
        top = self._index[self.ground]
        bot = self._index[0]
        out = []
        for i in range(k):
            partners = [
                j
                for j in range(k)
                if self._join[i][j] == top and self._meet[i][j] == bot
            ]
            if len(partners) != 1:
                raise LatticeError(
                    f"element {i} has {len(partners)} complements, wanted exactly 1"
                )
            out.append(partners[0])
        return tuple(out)

    # -- queries ------------------------------------------------------------

    def index_of(self, mask: int) -> int:
        return self._index[mask]

    def owner_of(self, idx: int) -> int:
        return self._owner[self.elems[idx]]

    def index_of_element(self, e: int) -> int:
        """Lattice index of N(e) for a ring element id 0..n+1."""
        return self._element_index[e]

    def join(self, i: int, j: int) -> int:
        return self._join[i][j]

    def meet(self, i: int, j: int) -> int:
        return self._meet[i][j]

    def complement(self, i: int) -> int:
        return self._complement[i]

    def size(self) -> int:
        return len(self.elems)


def build_algebra(g: Graph, s: MulTable) -> NeighborhoodAlgebra:
    """Construct and fully verify the neighborhood lattice of a boolean
    realization; raises LatticeError with a witness on any axiom failure."""
    return NeighborhoodAlgebra(g, s)


@dataclass(frozen=True)
class BooleanRing:
    """A boolean ring on element ids 0..n+1: 0 is zero, n+1 is one, 1..n are
    the graph vertices.  add and mul are full symmetric tables."""

    n: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None
    source_table: MulTable | None = field(default=None, compare=False)

    @property
    def one(self) -> int:
        return self.n + 1

    @property
    def size(self) -> int:
        return self.n + 2

    def name_of(self, e: int) -> str:
        if self.names is not None:
            return self.names[e]
        if e == 0:
            return "0"
        if e == self.one:
            return "1"
        return f"v{e - 1}"


def verify_ring_axioms(r: BooleanRing) -> list[str]:
    """Exhaustively check every boolean-ring axiom; returns violations."""
    out = []
    size = r.size
    add, mul = r.add, r.mul
    rng = range(size)
    for a in rng:
        if add[a][0] != a:
            out.append(f"0 is not an additive identity at {a}")
        if add[a][a] != 0:
            out.append(f"{a}+{a} != 0")
        if mul[a][r.one] != a:
            out.append(f"1 is not a multiplicative identity at {a}")
        if mul[a][a] != a:
            out.append(f"{a} is not idempotent")
        if mul[a][0] != 0:
            out.append(f"{a}*0 != 0")
    for a in rng:
        for b in rng:
            if add[a][b] != add[b][a]:
                out.append(f"addition not commutative at ({a},{b})")
            if mul[a][b] != mul[b][a]:
                out.append(f"multiplication not commutative at ({a},{b})")
    for a in rng:
        for b in rng:
            for c in rng:
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    out.append(f"addition not associative at ({a},{b},{c})")
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    out.append(f"multiplication not associative at ({a},{b},{c})")
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    out.append(f"distributivity fails at ({a},{b},{c})")
    return out


def ring_zero_divisor_graph(r: BooleanRing) -> Graph:
    """Graph on the nonzero non-unit elements with a nonzero annihilator;
    edges join elements whose product is zero.  Vertex order follows element
    id order."""
    units = {
        x for x in range(r.size) if any(r.mul[x][y] == r.one for y in range(r.size))
    }
    verts = [
        x
        for x in range(r.size)
        if x != 0
        and x not in units
        and any(r.mul[x][y] == 0 for y in range(1, r.size))
    ]
    index = {x: i for i, x in enumerate(verts)}
    adj = [0] * len(verts)
    for x in verts:
        for y in verts:
            if x < y and r.mul[x][y] == 0:
                adj[index[x]] |= 1 << index[y]
                adj[index[y]] |= 1 << index[x]
    names = None
    if r.names is not None:
        names = tuple(r.names[x] for x in verts)
    return Graph(len(verts), tuple(adj), names)


def ring_from_graph(g: Graph, max_n: int = DEFAULT_MAX_N) -> BooleanRing:
    """Reconstruct the boolean ring whose zero-divisor graph is g.

    Requires all four boolean-graph conditions; uses the canonically first
    boolean realization, builds the neighborhood algebra, derives addition
    from x+y = owner((N(x) v N(y')) ^ (N(x') v N(y))) where ' is lattice
    complement, verifies every ring axiom exhaustively, and checks that the
    ring's zero-divisor graph is g on the nose.
    """
    conditions = check_boolean_graph_conditions(g, max_n=max_n)
    if not conditions.all_hold:
        raise BooleanGraphError(
            "graph is not a boolean graph: " + "; ".join(conditions.witnesses)
        )
    full = realize_all(g, mode=BOOLEAN, max_n=max_n)
    s = full.tables[0]
    alg = build_algebra(g, s)
    n = g.n
    one = n + 1
    size = n + 2

    mul = [[0] * size for _ in range(size)]
    for a in range(n + 1):
        for b in range(n + 1):
            mul[a][b] = s.prod[a][b]
    for a in range(size):
        mul[a][one] = a
        mul[one][a] = a

    idx = [alg.index_of_element(e) for e in range(size)]

    add = [[0] * size for _ in range(size)]
    for a in range(size):
        ia = idx[a]
        ca = alg.complement(ia)
        for b in range(size):
            ib = idx[b]
            cb = alg.complement(ib)
            z = alg.meet(alg.join(ia, cb), alg.join(ca, ib))
            add[a][b] = alg.owner_of(z)

    names = None
    if g.names is not None:
        names = ("0",) + tuple(g.names) + ("1",)
    ring = BooleanRing(
        n=n,
        add=tuple(tuple(r) for r in add),
        mul=tuple(tuple(r) for r in mul),
        names=names,
        source_table=s,
    )
    violations = verify_ring_axioms(ring)
    if violations:
        raise LatticeError("ring axioms failed: " + violations[0])
    if ring_zero_divisor_graph(ring).adj != g.adj:
        raise LatticeError("reconstructed ring has the wrong zero-divisor graph")
    return ring


def ring_isomorphic(r1: BooleanRing, r2: BooleanRing, max_size: int = 16):
    """A bijection preserving +, *, 0 and 1, as a tuple image list, or None.

    Backtracking over images with annihilator-size pruning and forced
    closure: once two preimages are mapped, the images of their sum and
    product are forced, so the tree collapses quickly.
    """
    if r1.size != r2.size:
        return None
    if r1.size > max_size:
        raise TooLargeError(f"ring isomorphism search capped at {max_size} elements")
    size = r1.size

    def sig(r: BooleanRing, x: int) -> tuple[int, int]:
        ann = sum(1 for y in range(size) if r.mul[x][y] == 0)
        return (ann, 1 if r.mul[x][x] == x else 0)

    sig1 = [sig(r1, x) for x in range(size)]
    sig2 = [sig(r2, x) for x in range(size)]
    if sorted(sig1) != sorted(sig2):
        return None

    image: list[int | None] = [None] * size
    used = [False] * size

    def place(x: int, y: int, pending: list[tuple[int, int]]) -> bool:
        if image[x] is not None:
            return image[x] == y
        if used[y] or sig1[x] != sig2[y]:
            return False
        image[x] = y
        used[y] = True
        pending.append((x, y))
        return True

    def close(pending: list[tuple[int, int]]) -> bool:
        # force images of sums and products of mapped pairs
        i = 0
        while i < len(pending):
            x, _ = pending[i]
            i += 1
            for a in range(size):
                if image[a] is None:
                    continue
                for s_, t_ in ((r1.add[x][a], r2.add[image[x]][image[a]]),
                               (r1.mul[x][a], r2.mul[image[x]][image[a]])):
                    if image[s_] is not None:
                        if image[s_] != t_:
                            return False
                    elif not place(s_, t_, pending):
                        return False
        return True

    def undo(pending: list[tuple[int, int]]):
        for x, y in pending:
            image[x] = None
            used[y] = False

    def extend() -> bool:
        x = next((i for i in range(size) if image[i] is None), None)
        if x is None:
            return True
        for y in range(size):
            if used[y] or sig1[x] != sig2[y]:
                continue
            pending: list[tuple[int, int]] = []
            if place(x, y, pending) and close(pending) and extend():
                return True
            undo(pending)
        return False

    pending0: list[tuple[int, int]] = []
    if not (place(0, 0, pending0) and place(r1.one, r2.one, pending0) and close(pending0)):
        return None
    if extend():
        return tuple(image)  # type: ignore[arg-type]
    return None


# --- ring text format -------------------------------------------------------


def format_ring(r: BooleanRing) -> str:
    lines = ["zdg-ring 1", f"n {r.size}"]
    for e in range(r.size):
        lines.append(f"name {e} {r.name_of(e)}")
    lines.append("add")
    for i in range(r.size):
        lines.append(" ".join(str(r.add[i][j]) for j in range(i, r.size)))
    lines.append("mul")
    for i in range(r.size):
        lines.append(" ".join(str(r.mul[i][j]) for j in range(i, r.size)))
    return "\n".join(lines) + "\n"


def parse_ring(text: str) -> BooleanRing:
    from .errors import FormatError

    lines = [
        (no, ln.split("#", 1)[0].strip())
        for no, ln in enumerate(text.splitlines(), start=1)
    ]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines or lines[0][1] != "zdg-ring 1":
        raise FormatError("expected header 'zdg-ring 1'", lines[0][0] if lines else 1)
    pos = 1
    if pos >= len(lines) or not lines[pos][1].startswith("n "):
        raise FormatError("missing element count")
    size = int(lines[pos][1].split()[1])
    pos += 1
    names = [f"e{i}" for i in range(size)]
    while pos < len(lines) and lines[pos][1].startswith("name "):
        _, eid, nm = lines[pos][1].split()
        names[int(eid)] = nm
        pos += 1

    def block(keyword: str, pos: int):
        if pos >= len(lines) or lines[pos][1] != keyword:
            raise FormatError(f"expected '{keyword}' block", lines[pos][0] if pos < len(lines) else 0)
        pos += 1
        rows = [[0] * size for _ in range(size)]
        for i in range(size):
            no, ln = lines[pos]
            parts = [int(p) for p in ln.split()]
            if len(parts) != size - i:
                raise FormatError(f"row {i}: expected {size - i} entries", no)
            for j, v in zip(range(i, size), parts):
                rows[i][j] = v
                rows[j][i] = v
            pos += 1
        return rows, pos

    add, pos = block("add", pos)
    mul, pos = block("mul", pos)
    return BooleanRing(
        n=size - 2,
        add=tuple(tuple(r) for r in add),
        mul=tuple(tuple(r) for r in mul),
        names=tuple(names),
    )
