"""Exact statevector oracle: amplitudes, Pauli action, rank, and nullspace."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import (
    all_labeled_graphs,
    coefficient_vector_row,
    connected_graphs_strategy,
    rational_rank,
)
from stabdim.configurations import detect_configurations, lie_generator
from stabdim.errors import ConstraintError
from stabdim.graphs import Graph, generate
from stabdim.oracle import (
    CoefficientVector,
    annihilates,
    apply_pauli,
    bareiss_echelon,
    build_statevector,
    is_stabilized,
    local_algebra_nullity,
    matrix_rank,
    nullspace_basis,
)
from stabdim.pauli import PauliString, graph_generators
from stabdim.theorem import slot_coefficient_vector


def direct_stacked_nullity(g):
    """Reference route: rank of the actual stacked real system, no Gram shortcut."""
    v0 = build_statevector(g)
    cols = [list(v0.re) + list(v0.im)]
    for axis in ("X", "Y", "Z"):
        for a in range(g.n):
            w = apply_pauli(PauliString.single(g.n, a, axis), v0)
            cols.append(list(w.re) + list(w.im))
    return (3 * g.n + 1) - matrix_rank(cols)


class TestBuildStatevector:
    def test_k2(self):
        v = build_statevector(generate("complete", 2))
        assert v.re == (1, 1, 1, -1)
        assert v.im == (0, 0, 0, 0)

    def test_single_vertex(self):
        v = build_statevector(Graph.from_edges(1, []))
        assert v.re == (1, 1)

    def test_path3_amplitude_formula(self):
        g = generate("path", 3)
        v = build_statevector(g)
        for x in range(8):
            expected = (-1) ** sum((x >> i) & (x >> j) & 1 for i, j in g.edges())
            assert v.re[x] == expected
        assert v.re[0b111] == 1

    def test_cap(self):
        with pytest.raises(ConstraintError):
            build_statevector(generate("path", 15))
        assert build_statevector(generate("path", 15), cap=15).n == 15


class TestApplyPauli:
    def test_identity(self):
        v = build_statevector(generate("complete", 2))
        assert apply_pauli(PauliString.identity(2), v) == v

    def test_z0_signs(self):
        v = build_statevector(generate("complete", 2))
        w = apply_pauli(PauliString.single(2, 0, "Z"), v)
        assert w.re == (1, -1, 1, 1)

    def test_x_permutes(self):
        v = build_statevector(generate("complete", 2))
        w = apply_pauli(PauliString.single(2, 0, "X"), v)
        assert w.re == (1, 1, -1, 1)

    def test_y_is_imaginary_on_real_state(self):
        v = build_statevector(generate("complete", 2))
        w = apply_pauli(PauliString.single(2, 0, "Y"), v)
        assert w.re == (0, 0, 0, 0)
        assert all(b in (-1, 1) for b in w.im)

    def test_generator_fixes_state(self):
        g = generate("complete", 2)
        v = build_statevector(g)
        g0 = graph_generators(g)[0]
        assert apply_pauli(g0, v) == v

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            apply_pauli(PauliString.identity(3), build_statevector(generate("path", 2)))


class TestIsStabilized:
    def test_generators_and_signs(self):
        g = generate("star", 4)
        v = build_statevector(g)
        for gen in graph_generators(g):
            assert is_stabilized(gen, v)
            negated = PauliString(gen.n, gen.x, gen.z, (gen.phase_exp + 2) % 4)
            assert not is_stabilized(negated, v)

    def test_yy_on_k2(self):
        v = build_statevector(generate("complete", 2))
        assert is_stabilized(PauliString(2, 0b11, 0b11, 2), v)


class TestEliminaton:
    def test_matrix_rank_basics(self):
        assert matrix_rank([[1, 0], [0, 1]]) == 2
        assert matrix_rank([[0, 0], [0, 0]]) == 0
        assert matrix_rank([[1, 2, 3], [2, 4, 6], [1, 1, 1]]) == 2
        assert matrix_rank([]) == 0

    def test_echelon_pivots(self):
        _, pivots = bareiss_echelon([[0, 1, 2], [0, 2, 4], [0, 0, 5]])
        assert pivots == [1, 2]

    @given(
        st.lists(
            st.lists(st.integers(-6, 6), min_size=5, max_size=5), min_size=1, max_size=7
        )
    )
    @settings(max_examples=120)
    def test_bareiss_matches_rational_elimination(self, rows):
        assert matrix_rank(rows) == rational_rank(rows)


class TestNullity:
    def test_known_values(self):
        assert local_algebra_nullity(generate("complete", 2)) == 3
        assert local_algebra_nullity(generate("star", 7)) == 6
        assert local_algebra_nullity(generate("cycle", 5)) == 0

    def test_cap(self):
        with pytest.raises(ConstraintError):
            local_algebra_nullity(generate("path", 15))

    def test_gram_route_equals_direct_route_exhaustive(self):
        for n in (1, 2, 3):
            for g in all_labeled_graphs(n):
                assert local_algebra_nullity(g) == direct_stacked_nullity(g)

    @given(connected_graphs_strategy(min_n=2, max_n=6))
    @settings(max_examples=30, deadline=None)
    def test_gram_route_equals_direct_route_random(self, g):
        assert local_algebra_nullity(g) == direct_stacked_nullity(g)


class TestNullspace:
    def test_k2_basis(self):
        g = generate("complete", 2)
        basis = nullspace_basis(g)
        assert len(basis) == 3
        v = build_statevector(g)
        for cv in basis:
            assert cv.theta == 0
            assert annihilates(cv, v)
        expected = [
            slot_coefficient_vector(lie_generator(c), 2) for c in detect_configurations(g)
        ]
        got_rows = [coefficient_vector_row(cv) for cv in basis]
        exp_rows = [coefficient_vector_row(cv) for cv in expected]
        assert rational_rank(got_rows) == 3
        assert rational_rank(exp_rows) == 3
        assert rational_rank(got_rows + exp_rows) == 3

    def test_c5_empty(self):
        assert nullspace_basis(generate("cycle", 5)) == []

    @given(connected_graphs_strategy(min_n=2, max_n=7))
    @settings(max_examples=30, deadline=None)
    def test_basis_annihilates_with_zero_theta(self, g):
        v = build_statevector(g)
        basis = nullspace_basis(g)
        assert len(basis) == local_algebra_nullity(g)
        for cv in basis:
            assert cv.theta == 0
            assert annihilates(cv, v)

    @given(connected_graphs_strategy(min_n=2, max_n=7))
    @settings(max_examples=30, deadline=None)
    def test_slot_generators_span_nullspace(self, g):
        v = build_statevector(g)
        pairs = [lie_generator(c) for c in detect_configurations(g)]
        embedded = [slot_coefficient_vector(p, g.n) for p in pairs]
        for cv in embedded:
            assert annihilates(cv, v)
        rows = [coefficient_vector_row(cv) for cv in embedded]
        assert rational_rank(rows) == local_algebra_nullity(g)

    def test_single_vertex_allows_nonzero_theta(self):
        g = Graph.from_edges(1, [])
        basis = nullspace_basis(g)
        assert local_algebra_nullity(g) == 1
        assert len(basis) == 1
        cv = basis[0]
        assert cv.theta == -cv.t[0][0]
        assert annihilates(cv, build_statevector(g))


class TestAlgebraAction:
    def test_nonmember_does_not_annihilate(self):
        g = generate("cycle", 5)
        v = build_statevector(g)
        tx = tuple((Fraction(1), Fraction(0), Fraction(0)) if a == 0 else
                   (Fraction(0), Fraction(0), Fraction(0)) for a in range(5))
        assert not annihilates(CoefficientVector(Fraction(0), tx), v)
