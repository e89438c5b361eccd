"""Matrix builders, parameter validation, trace closed forms, quadratic form."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from mixedspec.eig import eigenvalues
from mixedspec.graphs import graph_stats, parse_graph, random_mixed_graph
from mixedspec.matrices import (
    AlphaParam,
    BetaParam,
    HermitianMatrix,
    a_alpha_matrix,
    degree_matrix,
    expected_traces,
    hermitian_adjacency,
    hermitian_from_array,
    matrix_from_text,
    matrix_to_text,
    omega_constant,
    quadratic_form,
)

OMEGA = omega_constant()


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    return random_mixed_graph(
        n,
        draw(st.floats(0.0, 1.0)),
        draw(st.floats(0.0, 1.0)),
        draw(st.integers(0, 2**32 - 1)),
    )


alphas = st.floats(0.0, 1.0)
# angles in [-pi/2, pi/2] keep Re(beta) >= 0
beta_angles = st.floats(-math.pi / 2, math.pi / 2)


class TestParams:
    def test_omega_value(self):
        assert OMEGA.re == 0.5
        assert OMEGA.im == pytest.approx(0.8660254037844386, abs=0)

    def test_omega_sum_with_conjugate(self):
        w = OMEGA.value
        assert abs((w + w.conjugate()) - 1.0) <= 1e-15

    def test_omega_product_with_conjugate(self):
        w = OMEGA.value
        assert abs((w * w.conjugate()) - 1.0) <= 1e-15

    def test_alpha_range_enforced(self):
        AlphaParam(0.0)
        AlphaParam(1.0)
        with pytest.raises(ValueError):
            AlphaParam(-0.01)
        with pytest.raises(ValueError):
            AlphaParam(1.01)

    def test_beta_modulus_enforced(self):
        with pytest.raises(ValueError):
            BetaParam(0.5, 0.5)

    def test_beta_negative_real_part_rejected(self):
        with pytest.raises(ValueError):
            BetaParam(-0.6, 0.8)

    @given(beta_angles)
    def test_from_angle_is_unit_modulus(self, theta):
        b = BetaParam.from_angle(theta)
        assert abs(abs(b.value) - 1.0) <= 1e-12

    def test_is_omega(self):
        assert OMEGA.is_omega()
        assert BetaParam.from_angle(math.pi / 3).is_omega()
        assert not BetaParam(1.0, 0.0).is_omega()


class TestBuilders:
    def test_degree_matrix_single_arc(self, p2):
        d = degree_matrix(p2)
        assert np.array_equal(d.data, np.diag([1.0 + 0j, 1.0]))

    def test_degree_matrix_triangle(self, c3):
        assert np.array_equal(degree_matrix(c3).data, 2.0 * np.eye(3))

    def test_degree_matrix_empty_graph(self):
        g = parse_graph("3\n")
        assert np.array_equal(degree_matrix(g).data, np.zeros((3, 3)))

    def test_adjacency_single_arc(self, p2):
        h = hermitian_adjacency(p2, OMEGA)
        w = OMEGA.value
        assert h.data[0, 1] == w
        assert h.data[1, 0] == w.conjugate()
        assert h.data[0, 0] == 0 and h.data[1, 1] == 0

    def test_adjacency_undirected_edge(self):
        g = parse_graph("2\n1 -- 2\n")
        h = hermitian_adjacency(g, OMEGA)
        assert np.array_equal(h.data, np.array([[0, 1], [1, 0]], dtype=complex))

    @given(graphs())
    def test_beta_one_gives_classical_adjacency(self, g):
        h = hermitian_adjacency(g, BetaParam(1.0, 0.0))
        ref = np.zeros((g.n, g.n))
        for i, j in g.undirected:
            ref[i, j] = ref[j, i] = 1.0
        for t, hd in g.arcs:
            ref[t, hd] = ref[hd, t] = 1.0
        assert np.array_equal(h.data, ref.astype(complex))

    def test_blend_endpoints(self, p2):
        assert np.array_equal(
            a_alpha_matrix(p2, 0.0, OMEGA).data, hermitian_adjacency(p2, OMEGA).data
        )
        assert np.array_equal(a_alpha_matrix(p2, 1.0, OMEGA).data, np.diag([1.0 + 0j, 1.0]))

    def test_blend_midpoint_triangle(self, c3):
        m = a_alpha_matrix(c3, 0.5, OMEGA)
        assert np.allclose(np.diagonal(m.data), 1.0)
        off = np.abs(m.data[~np.eye(3, dtype=bool)])
        assert np.allclose(off, 0.5)

    @given(graphs(), alphas, beta_angles)
    def test_blend_is_exactly_hermitian(self, g, a, theta):
        m = a_alpha_matrix(g, a, BetaParam.from_angle(theta))
        assert np.array_equal(m.data, m.data.conj().T)
        assert np.all(np.diagonal(m.data).imag == 0.0)

    def test_constructor_rejects_non_hermitian(self):
        with pytest.raises(ValueError, match="Hermitian"):
            HermitianMatrix(np.array([[0.0, 1.0], [2.0, 0.0]], dtype=complex))

    def test_constructor_rejects_non_square(self):
        with pytest.raises(ValueError, match="square"):
            HermitianMatrix(np.zeros((2, 3), dtype=complex))

    def test_entries_read_only(self, p2):
        m = a_alpha_matrix(p2, 0.5, OMEGA)
        with pytest.raises(ValueError):
            m.data[0, 0] = 5.0


class TestExpectedTraces:
    def test_single_arc_midpoint(self, p2):
        assert expected_traces(graph_stats(p2), 0.5) == (1.0, 1.0)

    def test_triangle_alpha_zero(self, c3):
        assert expected_traces(graph_stats(c3), 0.0) == (0.0, 6.0)

    def test_alpha_one_reduces_to_degree_data(self, k13):
        s = graph_stats(k13)
        assert expected_traces(s, 1.0) == (2.0 * s.m, float(s.zagreb))

    @given(graphs(), alphas, beta_angles)
    def test_built_matrix_matches_closed_forms(self, g, a, theta):
        m = a_alpha_matrix(g, a, BetaParam.from_angle(theta))
        tr, tr2 = expected_traces(graph_stats(g), a)
        assert abs(m.trace() - tr) <= 1e-9
        assert abs(m.trace_of_square() - tr2) <= 1e-9


class TestQuadraticForm:
    def test_basis_vector_hits_zero_diagonal(self, p2):
        h = hermitian_adjacency(p2, OMEGA)
        assert quadratic_form(h, np.array([1.0, 0.0])) == pytest.approx(0.0, abs=1e-15)

    def test_real_constant_vector(self, p2):
        h = hermitian_adjacency(p2, OMEGA)
        z = np.array([1.0, 1.0]) / math.sqrt(2.0)
        # expansion: 2 * Re(omega) * x1 * x2 = 2 * 0.5 * 0.5
        assert quadratic_form(h, z) == pytest.approx(0.5, abs=1e-12)

    def test_eigenvector_recovers_eigenvalue(self, p2):
        h = hermitian_adjacency(p2, OMEGA)
        z = np.array([1.0, OMEGA.value.conjugate()]) / math.sqrt(2.0)
        assert quadratic_form(h, z) == pytest.approx(1.0, abs=1e-12)

    def test_dimension_mismatch(self, p2):
        h = hermitian_adjacency(p2, OMEGA)
        with pytest.raises(ValueError, match="shape"):
            quadratic_form(h, np.array([1.0, 0.0, 0.0]))

    def test_non_finite_vector(self, p2):
        h = hermitian_adjacency(p2, OMEGA)
        with pytest.raises(ValueError, match="finite"):
            quadratic_form(h, np.array([np.inf, 0.0]))

    @given(graphs(max_n=8), alphas, beta_angles, st.integers(0, 2**32 - 1))
    def test_two_routes_agree_and_value_in_numerical_range(self, g, a, theta, seed):
        m = a_alpha_matrix(g, a, BetaParam.from_angle(theta))
        rng = np.random.Generator(np.random.PCG64(seed))
        z = rng.standard_normal(g.n) + 1j * rng.standard_normal(g.n)
        norm = np.linalg.norm(z)
        if norm > 0:
            z = z / norm
        # the expansion route runs inside and raises on disagreement
        val = quadratic_form(m, z)
        spec = eigenvalues(m)
        assert spec.mu_min - 1e-9 <= val <= spec.mu_max + 1e-9


class TestTextFormat:
    def test_round_trip_is_exact(self, c3):
        m = a_alpha_matrix(c3, 0.3, OMEGA)
        again = matrix_from_text(matrix_to_text(m))
        assert np.array_equal(m.data, again.data)

    def test_rejects_wrong_row_count(self):
        with pytest.raises(ValueError, match="rows"):
            matrix_from_text("2\n0,0 0,0\n")

    def test_symmetrizer_output_accepted(self):
        rng = np.random.Generator(np.random.PCG64(5))
        a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        m = hermitian_from_array(a)
        assert np.array_equal(m.data, m.data.conj().T)
