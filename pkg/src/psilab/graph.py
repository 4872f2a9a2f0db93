"""Simple undirected graphs over vertices ``0..n-1`` with bitmask vertex sets.

A vertex set is a plain ``int`` whose bit ``v`` is set when vertex ``v`` is a
member.  Union, intersection and difference are ``|``, ``&`` and ``& ~``;
subset testing is ``a & ~b == 0``.  Every structure in the package uses this
representation so that neighbourhood and stability arithmetic stays cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from psilab.errors import ContractViolation, GraphParseError, CapExceeded

DEFAULT_MAX_N = 24
SWEEP_CAP = 6
GRAPH6_MAX_N = 62


def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


def set_key(mask: int) -> tuple[int, int]:
    """Canonical order for vertex sets: cardinality first, then bitmask."""
    return (mask.bit_count(), mask)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    label: str | None = None
    names: tuple[str, ...] | None = None
    # memo tables shared by stability / matching routines; not part of identity
    _memo: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ContractViolation(f"adjacency has {len(self.adj)} rows, expected {self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ContractViolation(f"row {v} has members outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ContractViolation(f"vertex {v} is adjacent to itself")
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise ContractViolation(f"adjacency not symmetric at {v}-{w}")
        if self.names is not None and len(self.names) != self.n:
            raise ContractViolation("names must give one label per vertex")

    @property
    def vertices(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    @property
    def n_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def check_subset(self, A: int) -> None:
        if A < 0 or A & ~self.vertices:
            raise ContractViolation(f"vertex set {A:#b} not contained in V(G) (n={self.n})")

    def open_neighborhood(self, A: int) -> int:
        self.check_subset(A)
        out = 0
        for v in bits(A):
            out |= self.adj[v]
        return out & ~A

    def closed_neighborhood(self, A: int) -> int:
        self.check_subset(A)
        out = A
        for v in bits(A):
            out |= self.adj[v]
        return out

    def name(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def render(self, A: int) -> list[str]:
        return [self.name(v) for v in bits(A)]

    def vset(self, *members: int | str) -> int:
        """Vertex set from indices or figure names, e.g. ``G.vset("e", "d")``."""
        m = 0
        for x in members:
            if isinstance(x, str):
                if self.names is None or x not in self.names:
                    raise ContractViolation(f"unknown vertex name {x!r}")
                x = self.names.index(x)
            if not 0 <= x < self.n:
                raise ContractViolation(f"vertex {x} out of range for n={self.n}")
            m |= 1 << x
        return m

    def relabel(self, label: str | None = None, names: Sequence[str] | None = None) -> Graph:
        return Graph(self.n, self.adj, label, tuple(names) if names is not None else None)


def from_edges(n: int, edges: Iterable[tuple[int, int]], label=None, names=None) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ContractViolation(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ContractViolation(f"edge {u}-{v} out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), label, tuple(names) if names is not None else None)


def from_named_edges(names: Sequence[str], edges: Iterable[str | tuple[str, str]], label=None) -> Graph:
    """Build a graph from vertex names and edges written as name pairs."""
    index = {name: i for i, name in enumerate(names)}
    pairs = []
    for e in edges:
        u, v = e.split("-") if isinstance(e, str) else e
        pairs.append((index[u], index[v]))
    return from_edges(len(names), pairs, label, names)


# ---------------------------------------------------------------------------
# graph6


def _edge_slots(n: int) -> Iterator[tuple[int, int]]:
    # graph6 bit order: upper triangle, column by column
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(G: Graph) -> str:
    if G.n > GRAPH6_MAX_N:
        raise CapExceeded(f"graph6 encoding supports n <= {GRAPH6_MAX_N}, got {G.n}")
    out = [chr(G.n + 63)]
    acc = 0
    k = 0
    for i, j in _edge_slots(G.n):
        acc = acc << 1 | (G.adj[i] >> j & 1)
        k += 1
        if k == 6:
            out.append(chr(acc + 63))
            acc = k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


def parse_graph6(line: str, max_n: int = DEFAULT_MAX_N, label: str | None = None) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphParseError("empty graph6 string at offset 0", 0)
    for offset, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"byte {ord(ch)} at offset {offset} outside graph6 range 63..126", offset)
    if s[0] == "~":
        raise GraphParseError("multi-byte size form (n > 62) is not supported", 0)
    n = ord(s[0]) - 63
    if n > max_n:
        raise CapExceeded(f"graph has n={n} > max_n={max_n}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) != nbytes:
        raise GraphParseError(
            f"expected {nbytes} data bytes for n={n}, got {len(body)} (offset {1 + min(len(body), nbytes)})", 1 + min(len(body), nbytes)
        )
    adj = [0] * n
    slots = _edge_slots(n)
    for offset, ch in enumerate(body, start=1):
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            try:
                i, j = next(slots)
            except StopIteration:
                if bit:
                    raise GraphParseError(f"nonzero padding bit at offset {offset}", offset) from None
                continue
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj), label)


# ---------------------------------------------------------------------------
# edge lists


def parse_edgelist(text: str, max_n: int = DEFAULT_MAX_N, label: str | None = None) -> Graph:
    """Parse ``n`` on the first line followed by one ``u v`` pair per line.

    Blank lines and ``#`` comments are ignored; repeated edges are stored once.
    """
    lines = [(no, raw.split("#", 1)[0].strip()) for no, raw in enumerate(text.splitlines(), start=1)]
    lines = [(no, s) for no, s in lines if s]
    if not lines:
        raise GraphParseError("empty edge list", 1)
    no, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise GraphParseError(f"line {no}: expected vertex count, got {first!r}", no) from None
    if n < 0:
        raise GraphParseError(f"line {no}: negative vertex count", no)
    if n > max_n:
        raise CapExceeded(f"graph has n={n} > max_n={max_n}")
    adj = [0] * n
    for no, s in lines[1:]:
        parts = s.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {no}: expected 'u v', got {s!r}", no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {no}: non-integer vertex in {s!r}", no) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {no}: vertex out of range 0..{n - 1}", no)
        if u == v:
            raise GraphParseError(f"line {no}: loop at vertex {u}", no)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), label)


def to_edgelist(G: Graph) -> str:
    return "\n".join([str(G.n)] + [f"{u} {v}" for u, v in G.edges()]) + "\n"


# ---------------------------------------------------------------------------
# constructions


def induced_subgraph(G: Graph, S: int) -> tuple[Graph, list[int]]:
    """Subgraph spanned by ``S``; the list maps new ids back to ids of ``G``."""
    G.check_subset(S)
    old = list(bits(S))
    pos = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        row = 0
        for w in bits(G.adj[v] & S):
            row |= 1 << pos[w]
        adj.append(row)
    names = tuple(G.names[v] for v in old) if G.names is not None else None
    return Graph(len(old), tuple(adj), None, names), old


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    adj: list[int] = []
    offset = 0
    for H in graphs:
        adj.extend(row << offset for row in H.adj)
        offset += H.n
    return Graph(offset, tuple(adj))


def corona(X: Graph, parts: Sequence[Graph], label: str | None = None) -> Graph:
    """Corona of ``X`` with ``parts``: vertex ``i`` of ``X`` is joined to all of ``parts[i]``.

    Numbering puts the vertices of ``X`` first, then each part contiguously.
    """
    if len(parts) != X.n:
        raise ContractViolation(f"corona needs {X.n} parts, got {len(parts)}")
    adj = list(X.adj) + [0] * sum(H.n for H in parts)
    offset = X.n
    for i, H in enumerate(parts):
        block = ((1 << H.n) - 1) << offset
        adj[i] |= block
        for k, row in enumerate(H.adj):
            adj[offset + k] = (row << offset) | (1 << i)
        offset += H.n
    return Graph(len(adj), tuple(adj), label)


def complement(G: Graph) -> Graph:
    full = G.vertices
    return Graph(G.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.adj)))


def generate(kind: str, n: int) -> Graph:
    """Standard labelled graphs: ``path``, ``cycle``, ``complete``, ``star`` (K_{1,n}) and ``empty``."""
    if kind == "path":
        if n < 1:
            raise ContractViolation("path needs n >= 1")
        return from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")
    if kind == "cycle":
        if n < 3:
            raise ContractViolation("cycle needs n >= 3")
        return from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")
    if kind == "complete":
        if n < 0:
            raise ContractViolation("complete graph needs n >= 0")
        return from_edges(n, itertools.combinations(range(n), 2), f"K{n}")
    if kind == "star":
        if n < 1:
            raise ContractViolation("star needs n >= 1")
        return from_edges(n + 1, [(0, i) for i in range(1, n + 1)], f"K1,{n}")
    if kind == "empty":
        if n < 0:
            raise ContractViolation("empty graph needs n >= 0")
        return Graph(n, (0,) * n, f"E{n}")
    raise ContractViolation(f"unknown generator kind {kind!r}")


def parse_gen_spec(spec: str) -> Graph:
    """``"path:5"``, ``"cycle:4"``, ``"star:3"`` ... as accepted by :func:`generate`."""
    kind, _, num = spec.partition(":")
    try:
        n = int(num)
    except ValueError:
        raise GraphParseError(f"bad generator spec {spec!r}; expected KIND:N", 0) from None
    return generate(kind.strip(), n)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_labeled_graphs(n: int, cap: int = SWEEP_CAP) -> Iterator[Graph]:
    """Every labelled simple graph on ``n`` vertices, by increasing edge bitmask.

    Bit ``k`` of the edge mask is the ``k``-th slot of the graph6 upper-triangle
    order, so the stream is also ordered by graph6 bit vector.
    """
    if n < 0:
        raise ContractViolation("n must be non-negative")
    if n > cap:
        raise CapExceeded(
            f"labelled sweep at n={n} exceeds cap {cap} ({2 ** (n * (n - 1) // 2)} graphs); "
            "feed an external graph6 stream instead"
        )
    slots = list(_edge_slots(n))
    for code in range(1 << len(slots)):
        adj = [0] * n
        k = code
        while k:
            low = k & -k
            i, j = slots[low.bit_length() - 1]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            k ^= low
        yield Graph(n, tuple(adj))


def enumerate_labeled_trees(n: int) -> Iterator[Graph]:
    """All ``n**(n-2)`` labelled trees on ``n`` vertices, decoded from Prüfer sequences."""
    if n < 1:
        raise ContractViolation("trees need n >= 1")
    if n == 1:
        yield Graph(1, (0,))
        return
    if n == 2:
        yield from_edges(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield from_edges(n, _prufer_edges(n, seq))


def _prufer_edges(n: int, seq: Sequence[int]) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return edges


# ---------------------------------------------------------------------------
# structure


def components(G: Graph) -> list[int]:
    out = []
    left = G.vertices
    while left:
        seen = left & -left
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(seen)
        left &= ~seen
    return out


def is_connected(G: Graph) -> bool:
    return len(components(G)) <= 1
