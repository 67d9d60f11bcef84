"""Undirected simple graphs stored as bit-row adjacency, plus parsers and generators.

Vertices are 0-indexed. Row ``adj[u]`` is an int whose bit ``v`` is set iff
``{u, v}`` is an edge, so neighborhood queries and set algebra are single
int operations.

Two text formats are supported:

* DIMACS-like edge lists: ``c`` comment lines, exactly one ``p edge <n> <m>``
  line (first non-comment line), then exactly ``m`` lines ``e <u> <v>`` with
  1-based endpoints, ``u != v``, no duplicates.
* graph6, one-byte size form only (1 <= n <= 62): printable bytes 63..126
  carrying 6 bits each, upper-triangle adjacency bits in column-major order
  (0,1), (0,2), (1,2), (0,3), ...  The multi-byte size forms (leading byte
  126) are rejected.

Seeded generation uses the xorshift64* generator so corpora reproduce
bit-for-bit everywhere::

    s ^= s >> 12;  s ^= s << 25 (mod 2**64);  s ^= s >> 27
    output = (s * 0x2545F4914F6CDD1D) mod 2**64

A zero seed is replaced by 0x9E3779B97F4A7C15 because the all-zero state is
a fixed point of the update. Bounded draws use ``next_u64() % bound``;
G(n, p) edge inclusion tests ``next_u64() < int(p * 2**64)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstraintError, GraphParseError

GRAPH6_HEADER = ">>graph6<<"
FAMILIES = ("path", "cycle", "star", "complete", "tree", "gnp")

_MASK64 = (1 << 64) - 1


def bit_indices(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus one adjacency bit-row per vertex."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {u} has bits beyond vertex {self.n - 1}")
            if (row >> u) & 1:
                raise ValueError(f"self-loop at vertex {u}")
            for v in bit_indices(row):
                if not (self.adj[v] >> u) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in bit_indices(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighborhood(self, v: int) -> int:
        """Neighbor set of ``v`` as a bit vector."""
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def relabel(self, perm) -> "Graph":
        """Apply a vertex permutation: vertex v becomes perm[v]."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced_subgraph(self, vertices) -> "Graph":
        """Subgraph on ``vertices``, relabeled 0..k-1 in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in bit_indices(self.adj[v]):
                j = index.get(u)
                if j is not None:
                    row |= 1 << j
            rows.append(row)
        return Graph(len(vertices), tuple(rows))


def parse_edge_list(text: str) -> Graph:
    """Parse the DIMACS-like edge-list format (see module docstring)."""
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[frozenset[int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise GraphParseError(f"line {lineno}: duplicate 'p' line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise GraphParseError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n, m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise GraphParseError(f"line {lineno}: non-integer counts in 'p' line") from None
            if n < 1 or m < 0:
                raise GraphParseError(f"line {lineno}: need n >= 1 and m >= 0")
        elif kind == "e":
            if n is None:
                raise GraphParseError(f"line {lineno}: 'e' line before 'p' line")
            if len(tokens) != 3:
                raise GraphParseError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphParseError(f"line {lineno}: non-integer endpoint") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"line {lineno}: endpoint outside [1, {n}]")
            if u == v:
                raise GraphParseError(f"line {lineno}: self-loop at vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise GraphParseError(f"line {lineno}: duplicate edge ({u}, {v})")
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise GraphParseError(f"line {lineno}: unknown line type {kind!r}")
    if n is None:
        raise GraphParseError("missing 'p edge <n> <m>' line")
    if len(edges) != m:
        raise GraphParseError(f"'p' line declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def encode_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list; edges emitted sorted with u < v, 1-based."""
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    """Parse a one-line graph6 string (one-byte size form, n <= 62)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise GraphParseError("empty graph6 string")
    values = []
    for ch in s:
        code = ord(ch)
        if not 63 <= code <= 126:
            raise GraphParseError(f"graph6 byte {code} outside [63, 126]")
        values.append(code - 63)
    if values[0] == 63:
        raise GraphParseError("multi-byte graph6 size forms (n >= 63) are not supported")
    n = values[0]
    if n < 1:
        raise GraphParseError("graph6 string declares an empty graph")
    nbits = n * (n - 1) // 2
    payload = values[1:]
    if len(payload) != (nbits + 5) // 6:
        raise GraphParseError(
            f"graph6 payload has {len(payload)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if (payload[idx // 6] >> (5 - idx % 6)) & 1:
                edges.append((u, v))
            idx += 1
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    """Inverse of parse_graph6; requires n <= 62."""
    if g.n > 62:
        raise ConstraintError(f"graph6 one-byte size form caps at n=62, got n={g.n}")
    chunks = [g.n]
    acc = width = 0
    for v in range(1, g.n):
        for u in range(v):
            acc = (acc << 1) | g.has_edge(u, v)
            width += 1
            if width == 6:
                chunks.append(acc)
                acc = width = 0
    if width:
        chunks.append(acc << (6 - width))
    return "".join(chr(c + 63) for c in chunks)


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0."""
    seen = frontier = 1
    while frontier:
        grown = 0
        for u in bit_indices(frontier):
            grown |= g.adj[u]
        frontier = grown & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, each ascending, ordered by minimum."""
    unvisited = (1 << g.n) - 1
    components = []
    while unvisited:
        start = (unvisited & -unvisited).bit_length() - 1
        seen = frontier = 1 << start
        while frontier:
            grown = 0
            for u in bit_indices(frontier):
                grown |= g.adj[u]
            frontier = grown & ~seen
            seen |= frontier
        components.append(bit_indices(seen))
        unvisited &= ~seen
    return components


class XorShift64Star:
    """xorshift64* generator; update equations in the module docstring."""

    _MULT = 0x2545F4914F6CDD1D

    def __init__(self, seed: int) -> None:
        self.state = (seed & _MASK64) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        s = self.state
        s ^= s >> 12
        s = (s ^ (s << 25)) & _MASK64
        s ^= s >> 27
        self.state = s
        return (s * self._MULT) & _MASK64

    def below(self, bound: int) -> int:
        return self.next_u64() % bound


def _random_tree_edges(n: int, rng: XorShift64Star) -> list[tuple[int, int]]:
    # Uniform labeled tree from a random Pruefer sequence.
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def generate(family: str, n: int, p: float | None = None, seed: int = 0) -> Graph:
    """Deterministically generate a named family or seeded random graph.

    path = 0-1-...-(n-1); cycle = path plus (n-1, 0); star = center 0 joined
    to all others; complete = all pairs; tree = uniform random labeled tree;
    gnp = each pair kept independently with probability p.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}, expected one of {FAMILIES}")
    if n < 1:
        raise ConstraintError(f"family {family!r} needs n >= 1, got {n}")
    if family == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == "cycle":
        if n < 3:
            raise ConstraintError(f"cycle needs n >= 3, got {n}")
        edges = [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)]
    elif family == "star":
        edges = [(0, i) for i in range(1, n)]
    elif family == "complete":
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    elif family == "tree":
        edges = _random_tree_edges(n, XorShift64Star(seed))
    else:  # gnp
        if p is None or not 0.0 <= p <= 1.0:
            raise ConstraintError(f"gnp needs a probability p in [0, 1], got {p!r}")
        rng = XorShift64Star(seed)
        threshold = int(p * 2**64)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.next_u64() < threshold
        ]
    return Graph.from_edges(n, edges)
