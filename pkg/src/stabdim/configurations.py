"""Twin / leaf / closed-twin detection and the slot-space dimension count.

Every detected configuration contributes one traceless generator O_p - O_q
acting on two (vertex, axis) slots. Because each generator is exactly a
(+1, -1) difference of two distinct unit slot vectors, the rank of the whole
set over the rationals is (slots touched) - (connected components of the
slot graph), which union-find computes with no arithmetic at all.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstraintError
from .graphs import Graph, connected_components, is_connected
from .pauli import PauliString

TWIN = "twin"
LEAF = "leaf"
CLOSED_TWIN = "closed_twin"

_KIND_ORDER = {TWIN: 0, LEAF: 1, CLOSED_TWIN: 2}


@dataclass(frozen=True)
class Configuration:
    """One detected instance; for leaf, ``a`` is the degree-1 vertex."""

    kind: str
    a: int
    b: int


@dataclass(frozen=True)
class SlotPair:
    """The generator O_p - O_q on two (vertex, axis) slots."""

    p: tuple[int, str]
    q: tuple[int, str]

    def __str__(self) -> str:
        return f"{self.p[1]}({self.p[0]})-{self.q[1]}({self.q[0]})"


def _require_core_input(g: Graph) -> None:
    if g.n < 2:
        raise ConstraintError(f"need n >= 2, got n={g.n}")
    if not is_connected(g):
        raise ConstraintError("graph is disconnected; analyze per component instead")


def detect_configurations(g: Graph) -> list[Configuration]:
    """Every twin pair, degree-1 vertex, and closed-twin pair, in kind order."""
    _require_core_input(g)
    twins = []
    leaves = []
    closed = []
    for a in range(g.n):
        if g.degree(a) == 1:
            leaves.append(Configuration(LEAF, a, g.adj[a].bit_length() - 1))
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if g.has_edge(a, b):
                if (g.adj[a] | 1 << a) == (g.adj[b] | 1 << b):
                    closed.append(Configuration(CLOSED_TWIN, a, b))
            elif g.adj[a] == g.adj[b]:
                twins.append(Configuration(TWIN, a, b))
    return twins + leaves + closed


def lie_generator(c: Configuration) -> SlotPair:
    """The stabilizing algebra generator a configuration contributes."""
    if c.kind == TWIN:
        return SlotPair((c.a, "X"), (c.b, "X"))
    if c.kind == LEAF:
        return SlotPair((c.a, "X"), (c.b, "Z"))
    if c.kind == CLOSED_TWIN:
        return SlotPair((c.a, "Y"), (c.b, "Y"))
    raise ValueError(f"unknown configuration kind {c.kind!r}")


class _DisjointSet:
    def __init__(self) -> None:
        self.parent: dict = {}

    def find(self, k):
        self.parent.setdefault(k, k)
        root = k
        while root != self.parent[root]:
            root = self.parent[root]
        while k != root:
            self.parent[k], k = root, self.parent[k]
        return root

    def union(self, a, b) -> None:
        self.parent[self.find(a)] = self.find(b)


def slot_span_rank(pairs) -> int:
    """Rank over the rationals of a set of O_p - O_q difference generators."""
    ds = _DisjointSet()
    for pair in pairs:
        ds.union(pair.p, pair.q)
    slots = list(ds.parent)
    roots = {ds.find(s) for s in slots}
    return len(slots) - len(roots)


def stabilizer_dimension(g: Graph) -> int:
    """Dimension of the local-unitary stabilizer algebra of the graph state."""
    return slot_span_rank(lie_generator(c) for c in detect_configurations(g))


def corresponding_stabilizer_element(c: Configuration, n: int) -> PauliString:
    """The weight-2 stabilizer element matching a configuration (always sign +1)."""
    a, b = 1 << c.a, 1 << c.b
    if c.kind == TWIN:
        return PauliString(n, a | b, 0, 0)
    if c.kind == LEAF:
        return PauliString(n, a, b, 0)
    if c.kind == CLOSED_TWIN:
        return PauliString(n, a | b, a | b, 2)
    raise ValueError(f"unknown configuration kind {c.kind!r}")


def stabilizer_dimension_components(g: Graph) -> int:
    """Extension for disconnected inputs: per-component sum, isolated vertices count 1.

    Each single-vertex component is a bare |+> state with a one-parameter
    stabilizing algebra. Cross-checked against the exact oracle in tests; the
    core theory only covers the connected case.
    """
    total = 0
    for comp in connected_components(g):
        if len(comp) == 1:
            total += 1
        else:
            total += stabilizer_dimension(g.induced_subgraph(comp))
    return total


def components_with_configurations(g: Graph) -> tuple[int, list[Configuration]]:
    """Component-sum dimension plus all configurations in global vertex labels."""
    total = 0
    configs: list[Configuration] = []
    for comp in connected_components(g):
        if len(comp) == 1:
            total += 1
            continue
        sub = g.induced_subgraph(comp)
        total += stabilizer_dimension(sub)
        configs += [
            Configuration(c.kind, comp[c.a], comp[c.b]) for c in detect_configurations(sub)
        ]
    configs.sort(key=lambda c: (_KIND_ORDER[c.kind], c.a, c.b))
    return total, configs
