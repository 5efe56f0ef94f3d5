"""Testes de grafos: conectividade, Laplaciano, grafos embutidos e E/S."""

import json

import numpy as np
import pytest
from pydantic import ValidationError

from models.graph import Graph
from utils.exceptions import InvalidInputError


def test_triangle_is_connected(graph_service):
    assert graph_service.is_connected(graph_service.triangle())


def test_two_components_are_not_connected(graph_service):
    g = Graph(vertex_count=4, edges=((1, 2), (3, 4)))
    assert not graph_service.is_connected(g)


def test_isolated_vertex_breaks_connectivity(graph_service):
    g = Graph(vertex_count=3, edges=((1, 2),))
    assert not graph_service.is_connected(g)


def test_edges_are_normalized_and_deduplicated():
    g = Graph(vertex_count=3, edges=((2, 1), (1, 2), (3, 2)))
    assert g.edges == ((1, 2), (2, 3))


@pytest.mark.parametrize("edges", [((1, 1),), ((1, 4),), ((0, 1),)])
def test_invalid_edges_are_rejected(edges):
    with pytest.raises(ValidationError):
        Graph(vertex_count=3, edges=edges)


def test_triangle_laplacian(graph_service):
    expected = np.array([[-2, 1, 1], [1, -2, 1], [1, 1, -2]], dtype=float)
    np.testing.assert_array_equal(graph_service.graph_laplacian(graph_service.triangle()), expected)


def test_laplacian_rows_sum_to_zero(graph_service, rng):
    for _ in range(20):
        g = graph_service.random_connected_graph(int(rng.integers(2, 9)), rng)
        assert np.allclose(graph_service.graph_laplacian(g).sum(axis=1), 0.0)


def test_cuboctahedron_structure(graph_service):
    g = graph_service.cuboctahedron()
    assert g.vertex_count == 12
    assert g.edge_count == 24
    assert all(g.degree(i) == 4 for i in range(1, 13))
    assert graph_service.is_connected(g)


def test_cuboctahedron_spectrum(graph_service):
    values = np.linalg.eigvalsh(-graph_service.graph_laplacian(graph_service.cuboctahedron()))
    expected = np.array([0.0] + [2.0] * 3 + [4.0] * 3 + [6.0] * 5)
    np.testing.assert_allclose(values, expected, atol=1e-9)


def test_cuboctahedron_eigenvalue_two_coordinate_vectors(graph_service):
    h = -graph_service.graph_laplacian(graph_service.cuboctahedron())
    phis = [
        np.array([-1, -1, -1, -1, 1, 1, 1, 1, 0, 0, 0, 0]) / np.sqrt(8),
        np.array([1, -1, -1, 1, 1, -1, -1, 1, 0, -2, 0, 2]) / 4,
        np.array([-1, -1, 1, 1, -1, -1, 1, 1, -2, 0, 2, 0]) / 4,
    ]
    for phi in phis:
        np.testing.assert_allclose(h @ phi, 2.0 * phi, atol=1e-12)
        assert np.linalg.norm(phi) == pytest.approx(1.0)


def test_graph_of_matrix_recovers_edges(graph_service):
    square = graph_service.square()
    g = graph_service.graph_of_matrix(graph_service.graph_laplacian(square))
    assert g.edges == square.edges


def test_graph_of_laplacian_is_the_graph(graph_service, rng):
    for _ in range(200):
        g = graph_service.random_connected_graph(int(rng.integers(2, 10)), rng)
        recovered = graph_service.graph_of_matrix(graph_service.graph_laplacian(g))
        assert recovered.vertex_count == g.vertex_count
        assert recovered.edges == g.edges


def test_negative_laplacian_quadratic_form(graph_service, rng):
    for _ in range(200):
        m = int(rng.integers(2, 10))
        g = graph_service.random_connected_graph(m, rng)
        psi = rng.standard_normal(m) + 1j * rng.standard_normal(m)
        form = -np.vdot(psi, graph_service.graph_laplacian(g) @ psi)
        expected = sum(abs(psi[i - 1] - psi[j - 1]) ** 2 for i, j in g.edges)
        assert abs(form.imag) < 1e-12
        assert form.real == pytest.approx(expected, abs=1e-12)
        assert form.real >= -1e-12


def test_graph_of_matrix_rejects_non_hermitian(graph_service):
    with pytest.raises(InvalidInputError):
        graph_service.graph_of_matrix(np.array([[0.0, 1.0], [0.0, 0.0]]))


@pytest.mark.parametrize("name,m,edges", [
    ("triangle", 3, 3),
    ("square", 4, 4),
    ("chain-5", 5, 4),
    ("complete-4", 4, 6),
    ("cuboctahedron", 12, 24),
])
def test_named_graphs(graph_service, name, m, edges):
    g = graph_service.named_graph(name)
    assert (g.vertex_count, g.edge_count) == (m, edges)


def test_unknown_named_graph(graph_service):
    with pytest.raises(InvalidInputError):
        graph_service.named_graph("dodecahedron")


def test_json_round_trip(graph_service, tmp_path):
    path = tmp_path / "square.json"
    graph_service.save_graph(graph_service.square(), str(path))
    assert json.loads(path.read_text())["vertices"] == 4
    assert graph_service.load_graph(str(path)).edges == graph_service.square().edges


def test_edge_list_file(graph_service, tmp_path):
    path = tmp_path / "k2.txt"
    path.write_text("# caminho\n2\n1 2\n")
    g = graph_service.load_graph(str(path))
    assert g.vertex_count == 2 and g.edges == ((1, 2),)


def test_missing_graph_file(graph_service):
    with pytest.raises(InvalidInputError):
        graph_service.load_graph("/nao/existe.json")


def test_random_connected_graphs_are_connected(graph_service, rng):
    for _ in range(50):
        g = graph_service.random_connected_graph(int(rng.integers(1, 10)), rng, edge_probability=0.1)
        assert graph_service.is_connected(g)
