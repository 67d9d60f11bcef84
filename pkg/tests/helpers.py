"""Shared corpus builders and strategies for the test suite."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from stabdim.graphs import Graph, generate, is_connected

_PAIR_CACHE: dict[int, list[tuple[int, int]]] = {}


def _pairs(n: int) -> list[tuple[int, int]]:
    if n not in _PAIR_CACHE:
        _PAIR_CACHE[n] = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return _PAIR_CACHE[n]


def graph_from_bits(n: int, bits: int) -> Graph:
    pairs = _pairs(n)
    return Graph.from_edges(n, [pairs[k] for k in range(len(pairs)) if (bits >> k) & 1])


@st.composite
def graphs_strategy(draw, min_n: int = 1, max_n: int = 10):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return graph_from_bits(n, bits)


@st.composite
def connected_graphs_strategy(draw, min_n: int = 2, max_n: int = 8):
    g = draw(
        graphs_strategy(min_n, max_n).filter(lambda g: g.n >= min_n and is_connected(g))
    )
    return g


def all_labeled_graphs(n: int):
    for bits in range(1 << (n * (n - 1) // 2)):
        yield graph_from_bits(n, bits)


def random_connected_corpus(count: int = 200, n_range=(3, 12), seed_base: int = 20_000):
    """Deterministic list of connected G(n, p) draws cycling n and p."""
    ps = (0.2, 0.5, 0.8)
    lo, hi = n_range
    graphs = []
    attempt = 0
    while len(graphs) < count:
        n = lo + len(graphs) % (hi - lo + 1)
        p = ps[len(graphs) % 3]
        g = generate("gnp", n, p=p, seed=seed_base + attempt)
        attempt += 1
        if is_connected(g):
            graphs.append(g)
    return graphs


def named_family_corpus(max_n: int = 12):
    """All named families (path, cycle, star, complete, seeded random tree), n <= max_n."""
    out = []
    for n in range(2, max_n + 1):
        out.append((f"path_{n}", generate("path", n)))
        out.append((f"star_{n}", generate("star", n)))
        out.append((f"complete_{n}", generate("complete", n)))
        out.append((f"tree_{n}", generate("tree", n, seed=1000 + n)))
        if n >= 3:
            out.append((f"cycle_{n}", generate("cycle", n)))
    return out


def rational_rank(rows) -> int:
    """Plain Gaussian elimination over Fraction; reference for rank checks."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][c]:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def coefficient_vector_row(cv) -> list[Fraction]:
    """Flatten a CoefficientVector to [theta, t_0x, t_0y, t_0z, t_1x, ...]."""
    row = [cv.theta]
    for triple in cv.t:
        row.extend(triple)
    return row
