"""Brute-force ground truth over exact Gaussian integers.

The statevector keeps unnormalized integer amplitudes (the physical state
carries an implicit 2**(-n/2) which cancels out of every check here); basis
index x stores qubit a in bit a, least significant bit first.

The stabilization system asks for real coefficients (theta, t_ax, t_ay,
t_az) with ``(theta + sum_a t_a . sigma_a) |psi> = 0``. Its matrix has the
3n+1 columns [v0 | X_a v0 | Y_a v0 | Z_a v0]; splitting complex rows into
real and imaginary blocks gives an integer matrix whose rank over the
rationals we need. For a graph state every column is a +-1 vector (real for
theta/X/Z, imaginary for Y), so each column packs into a sign bitmask and
every Gram inner product is one XOR plus a popcount. The rank and nullspace
are then read off the two small Gram blocks G = A^T A (real columns and
imaginary columns never mix), using fraction-free Bareiss elimination on
integers; rank(A^T A) = rank(A) holds exactly over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConstraintError
from .graphs import Graph
from .pauli import PauliString

DEFAULT_ORACLE_CAP = 14


@dataclass(frozen=True)
class ExactStateVector:
    """2**n Gaussian-integer amplitudes, stored as parallel re/im tuples."""

    n: int
    re: tuple[int, ...]
    im: tuple[int, ...]


@dataclass(frozen=True)
class CoefficientVector:
    """One solution (theta, per-vertex (t_x, t_y, t_z)) of the stabilization system."""

    theta: Fraction
    t: tuple[tuple[Fraction, Fraction, Fraction], ...]


def build_statevector(g: Graph, cap: int = DEFAULT_ORACLE_CAP) -> ExactStateVector:
    """amp[x] = (-1)**(number of edges with both endpoints set in x)."""
    if g.n > cap:
        raise ConstraintError(f"statevector oracle caps at n={cap}, got n={g.n}")
    size = 1 << g.n
    re = [1] * size
    full = size - 1
    for u, v in g.edges():
        pair = (1 << u) | (1 << v)
        rest = full & ~pair
        x = 0
        while True:
            y = x | pair
            re[y] = -re[y]
            if x == rest:
                break
            x = (x - rest) & rest
    return ExactStateVector(g.n, tuple(re), (0,) * size)


def apply_pauli(p: PauliString, v: ExactStateVector) -> ExactStateVector:
    """Exact action: Z signs by source bits, X permutes, i**phase_exp rotates."""
    if p.n != v.n:
        raise ValueError(f"size mismatch: operator on {p.n} qubits, state on {v.n}")
    size = 1 << v.n
    re = [0] * size
    im = [0] * size
    for y in range(size):
        src = y ^ p.x
        if (src & p.z).bit_count() & 1:
            a, b = -v.re[src], -v.im[src]
        else:
            a, b = v.re[src], v.im[src]
        re[y] = a
        im[y] = b
    k = p.phase_exp
    if k == 1:
        re, im = [-b for b in im], re
    elif k == 2:
        re, im = [-a for a in re], [-b for b in im]
    elif k == 3:
        re, im = im, [-a for a in re]
    return ExactStateVector(v.n, tuple(re), tuple(im))


def is_stabilized(p: PauliString, v: ExactStateVector) -> bool:
    """True iff p fixes v exactly, sign included."""
    return apply_pauli(p, v) == v


def bareiss_echelon(rows) -> tuple[list[list[int]], list[int]]:
    """Fraction-free integer row echelon; returns (echelon rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivot_cols = []
    prev = 1
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            head = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (lead * row_i[j] - head * row_r[j]) // prev
            row_i[c] = 0
        prev = lead
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivot_cols


def matrix_rank(rows) -> int:
    """Exact rank over the rationals of an integer matrix."""
    return len(bareiss_echelon(rows)[1])


def _nullspace(rows, ncols: int) -> list[list[Fraction]]:
    """Rational nullspace basis, one vector per free column, free column set to 1."""
    echelon, pivot_cols = bareiss_echelon(rows)
    pivots = set(pivot_cols)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i in reversed(range(len(pivot_cols))):
            c = pivot_cols[i]
            acc = sum((echelon[i][j] * vec[j] for j in range(c + 1, ncols)), Fraction(0))
            vec[c] = -acc / echelon[i][c]
        basis.append(vec)
    return basis


def _sign_mask(values) -> int:
    # Pack a +-1 vector into an int with bit y set iff entry y is negative.
    mask = 0
    for y, a in enumerate(values):
        if a < 0:
            mask |= 1 << y
    return mask


def _gram_blocks(g: Graph, cap: int) -> tuple[list[list[int]], list[list[int]]]:
    """Gram matrices of the real [theta, X_a, Z_a] and imaginary [Y_a] column blocks."""
    v0 = build_statevector(g, cap)
    size = 1 << g.n
    real_masks = [_sign_mask(v0.re)]
    imag_masks = []
    for axis in ("X", "Z"):
        for a in range(g.n):
            col = apply_pauli(PauliString.single(g.n, a, axis), v0)
            real_masks.append(_sign_mask(col.re))
    for a in range(g.n):
        col = apply_pauli(PauliString.single(g.n, a, "Y"), v0)
        imag_masks.append(_sign_mask(col.im))

    def gram(masks):
        k = len(masks)
        out = [[0] * k for _ in range(k)]
        for i in range(k):
            for j in range(i, k):
                dot = size - 2 * (masks[i] ^ masks[j]).bit_count()
                out[i][j] = out[j][i] = dot
        return out

    return gram(real_masks), gram(imag_masks)


def local_algebra_nullity(g: Graph, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Dimension of the solution space of the stabilization system (3n+1 unknowns)."""
    real_block, imag_block = _gram_blocks(g, cap)
    rank = matrix_rank(real_block) + matrix_rank(imag_block)
    return (3 * g.n + 1) - rank


def nullspace_basis(g: Graph, cap: int = DEFAULT_ORACLE_CAP) -> list[CoefficientVector]:
    """Exact rational basis of the stabilization solution space."""
    n = g.n
    real_block, imag_block = _gram_blocks(g, cap)
    zero = Fraction(0)
    basis = []
    # Real-block solutions carry theta, t_x, t_z in column order [theta, X_0.., Z_0..].
    for vec in _nullspace(real_block, 2 * n + 1):
        t = tuple((vec[1 + a], zero, vec[1 + n + a]) for a in range(n))
        basis.append(CoefficientVector(vec[0], t))
    for vec in _nullspace(imag_block, n):
        t = tuple((zero, vec[a], zero) for a in range(n))
        basis.append(CoefficientVector(zero, t))
    return basis


def algebra_action(cv: CoefficientVector, v: ExactStateVector):
    """Apply theta + sum_a (t . sigma_a) to v; returns exact (re, im) Fraction lists."""
    size = 1 << v.n
    acc_re = [cv.theta * a for a in v.re]
    acc_im = [cv.theta * b for b in v.im]
    for a, (tx, ty, tz) in enumerate(cv.t):
        for coeff, axis in ((tx, "X"), (ty, "Y"), (tz, "Z")):
            if coeff == 0:
                continue
            w = apply_pauli(PauliString.single(v.n, a, axis), v)
            for y in range(size):
                acc_re[y] += coeff * w.re[y]
                acc_im[y] += coeff * w.im[y]
    return acc_re, acc_im


def annihilates(cv: CoefficientVector, v: ExactStateVector) -> bool:
    """True iff the algebra element maps v to the exact zero vector."""
    acc_re, acc_im = algebra_action(cv, v)
    return not any(acc_re) and not any(acc_im)
