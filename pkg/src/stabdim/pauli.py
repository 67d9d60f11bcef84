"""Pauli strings in symplectic (x, z) bit form with exact i**k phase tracking.

A ``PauliString`` denotes ``i**phase_exp * prod_a X_a**x_a * Z_a**z_a`` with
the X factor written left of the Z factor on every qubit. Bit ``a`` of ``x``
(resp. ``z``) is the X (resp. Z) component on qubit ``a``; a lone ``Y_a`` is
stored as ``x_a = z_a = 1`` with ``phase_exp = 1`` since ``Y = i X Z``.

Rendered text is a sign ("+", "+i", "-", "-i") followed by one letter per
qubit from {I, X, Y, Z}, qubit 0 leftmost.

Exponent vectors are plain ints: bit ``i`` is the exponent of the i-th graph
generator, so GF(2) row reduction works directly on them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, ConstraintError
from .graphs import Graph, bit_indices, is_connected

DEFAULT_BRUTE_CAP = 24

_SIGNS = ("+", "+i", "-", "-i")
_AXIS_BITS = {"X": (1, 0, 0), "Y": (1, 1, 1), "Z": (0, 1, 0)}


@dataclass(frozen=True)
class PauliString:
    n: int
    x: int
    z: int
    phase_exp: int = 0

    def __post_init__(self) -> None:
        full = (1 << self.n) - 1
        if self.x & ~full or self.z & ~full:
            raise ValueError(f"x/z bits beyond qubit {self.n - 1}")
        if not 0 <= self.phase_exp < 4:
            object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, 0, 0, 0)

    @classmethod
    def single(cls, n: int, qubit: int, axis: str) -> "PauliString":
        """The one-qubit operator ``axis`` in {X, Y, Z} acting on ``qubit``."""
        xb, zb, phase = _AXIS_BITS[axis]
        return cls(n, xb << qubit, zb << qubit, phase)

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0 and self.phase_exp == 0

    def support(self) -> int:
        """Bit vector of qubits acted on non-trivially."""
        return self.x | self.z

    def weight(self) -> int:
        return self.support().bit_count()

    def letter(self, qubit: int) -> str:
        pair = ((self.x >> qubit) & 1, (self.z >> qubit) & 1)
        return {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}[pair]

    def letters(self) -> str:
        return "".join(self.letter(a) for a in range(self.n))

    def sign(self) -> str:
        # Each Y qubit holds X*Z = -i*Y, so the displayed phase gains i**3 per Y.
        return _SIGNS[(self.phase_exp + 3 * (self.x & self.z).bit_count()) % 4]

    def __str__(self) -> str:
        return self.sign() + self.letters()

    def __mul__(self, other: "PauliString") -> "PauliString":
        return multiply(self, other)


def multiply(p: PauliString, q: PauliString) -> PauliString:
    """Exact operator product p*q.

    x and z add mod 2; the phase picks up (-1) for every qubit where a Z of
    ``p`` is reordered past an X of ``q``.
    """
    if p.n != q.n:
        raise ValueError(f"length mismatch: {p.n} vs {q.n}")
    phase = (p.phase_exp + q.phase_exp + 2 * (p.z & q.x).bit_count()) % 4
    return PauliString(p.n, p.x ^ q.x, p.z ^ q.z, phase)


def graph_generators(g: Graph) -> list[PauliString]:
    """Stabilizer generators of the graph state: X on i, Z on every neighbor."""
    return [PauliString(g.n, 1 << i, g.adj[i], 0) for i in range(g.n)]


def element(gens: list[PauliString], exponents: int) -> PauliString:
    """Product of ``gens[i]`` over the set bits of ``exponents``."""
    out = PauliString.identity(gens[0].n if gens else 0)
    for i in bit_indices(exponents):
        out = multiply(out, gens[i])
    return out


def low_weight_elements(
    g: Graph, mode: str = "brute", cap: int = DEFAULT_BRUTE_CAP
) -> list[tuple[int, PauliString]]:
    """All non-identity stabilizer elements with support of size <= 2.

    Returned as (exponent vector, element) pairs sorted by exponent vector.
    ``brute`` enumerates all 2**n exponent vectors (needs n <= cap) and works
    for any graph; ``fast`` needs a connected graph on >= 2 vertices and
    reads the elements off degree-1 vertices and twin pairs. The two modes
    return identical lists.
    """
    if mode == "brute":
        return _low_weight_brute(g, cap)
    if mode == "fast":
        return _low_weight_fast(g)
    raise ValueError(f"unknown mode {mode!r}, expected 'brute' or 'fast'")


def _low_weight_brute(g: Graph, cap: int) -> list[tuple[int, PauliString]]:
    if g.n > cap:
        raise ConstraintError(f"brute enumeration caps at n={cap}, got n={g.n}")
    # Gray-code walk: one generator toggled per step keeps the z mask current.
    hits = []
    e = zmask = 0
    for k in range(1, 1 << g.n):
        i = (k & -k).bit_length() - 1
        e ^= 1 << i
        zmask ^= g.adj[i]
        if (e | zmask).bit_count() <= 2:
            hits.append(e)
    hits.sort()
    gens = graph_generators(g)
    out = [(e, element(gens, e)) for e in hits]
    if g.n >= 2 and is_connected(g):
        for e, p in out:
            if p.weight() < 2:
                raise ConsistencyError(
                    f"weight-{p.weight()} stabilizer element {p} on a connected graph"
                )
    return out


def _low_weight_fast(g: Graph) -> list[tuple[int, PauliString]]:
    if g.n < 2 or not is_connected(g):
        raise ConstraintError("fast enumeration needs a connected graph on >= 2 vertices")
    gens = graph_generators(g)
    out = []
    for a in range(g.n):
        if g.degree(a) == 1:
            out.append((1 << a, gens[a]))
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if g.has_edge(a, b):
                same = (g.adj[a] | 1 << a) == (g.adj[b] | 1 << b)
            else:
                same = g.adj[a] == g.adj[b]
            if same:
                out.append(((1 << a) | (1 << b), multiply(gens[a], gens[b])))
    out.sort(key=lambda pair: pair[0])
    return out


def gf2_rank(rows) -> int:
    """Rank over GF(2) of int bit-vectors."""
    pivots: dict[int, int] = {}
    for row in rows:
        cur = row
        while cur:
            b = cur.bit_length() - 1
            piv = pivots.get(b)
            if piv is None:
                pivots[b] = cur
                break
            cur ^= piv
    return len(pivots)


def g2_rank(exponents) -> int:
    """Number of independent weight-<=2 elements: GF(2) rank of their exponent vectors."""
    return gf2_rank(exponents)
