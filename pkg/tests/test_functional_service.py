"""Testes dos funcionais F (Lieb) e F̃ (estados puros) e da minimização via funcional."""

import numpy as np
import pytest

from models.fock import FockBasis
from models.operators import Potential, ReferenceHamiltonian
from services.functional_service import project_capped_simplex, project_gauge_ball, project_l1_ball
from services.triangle_service import UNIFORM_DENSITY
from utils.exceptions import BoundaryDensityError, InvalidInputError

PUBLISHED_RHO = [0.2121, 0.8176, 0.9704]
CUBOCTAHEDRON_UNIFORM = np.full(12, 1.0 / 6.0)


def ground_density(hamiltonian_service, spectrum_service, reference, basis, v):
    op = hamiltonian_service.assemble_reference(reference, basis, Potential(v))
    return spectrum_service.density_of(spectrum_service.ground_manifold(op).states[0]).rho


def interior_triangle_density(rng):
    return 1.0 - (0.1 + 0.7 * rng.dirichlet(np.ones(3)))


# Projeções

def test_project_l1_ball(rng):
    y = rng.standard_normal(6) * 3.0
    x = project_l1_ball(y, 1.0)
    assert np.abs(x).sum() == pytest.approx(1.0)
    inside = np.array([0.1, -0.2, 0.3])
    np.testing.assert_array_equal(project_l1_ball(inside, 1.0), inside)


def test_project_gauge_ball(rng):
    for _ in range(50):
        x = project_gauge_ball(rng.standard_normal(5) * 4.0, 2.0)
        assert abs(x.sum()) < 1e-12
        assert np.abs(x).sum() <= 2.0 + 1e-12


def test_project_capped_simplex(rng):
    for _ in range(50):
        x = project_capped_simplex(rng.standard_normal(5) * 2.0, 2)
        assert x.sum() == pytest.approx(2.0, abs=1e-10)
        assert np.all(x >= 0.0) and np.all(x <= 1.0)
        np.testing.assert_allclose(project_capped_simplex(x, 2), x, atol=1e-10)


# Cota do potencial

def test_potential_bound_grows_near_boundary(functional_service):
    center = functional_service.potential_bound(UNIFORM_DENSITY, 6.0)
    edge = functional_service.potential_bound([0.01, 0.995, 0.995], 6.0)
    assert 0.0 < center < edge < np.inf


def test_potential_bound_covers_known_potential(
    functional_service, hamiltonian_service, spectrum_service, triangle_reference, triangle_basis
):
    v = np.array([2.0, 1.0, 0.0])
    rho = ground_density(hamiltonian_service, spectrum_service, triangle_reference, triangle_basis, v)
    norm = hamiltonian_service.assemble_reference(triangle_reference, triangle_basis).norm()
    assert np.abs(v - v.mean()).sum() <= functional_service.potential_bound(rho, norm)


# Funcional de Lieb

def test_lieb_at_uniform_triangle_density(functional_service, triangle_reference, triangle_basis):
    result = functional_service.lieb_f(UNIFORM_DENSITY, triangle_reference, triangle_basis)
    assert result.finite
    assert result.value == pytest.approx(3.0, abs=1e-9)
    assert np.abs(result.maximizer_v.v).max() < 1e-6


def test_lieb_inside_incircle_is_flat(functional_service, triangle_reference, triangle_basis):
    rho = UNIFORM_DENSITY + 0.2 * np.array([1.0, -2.0, 1.0]) / np.sqrt(6.0)
    assert functional_service.lieb_f(rho, triangle_reference, triangle_basis).value == pytest.approx(3.0, abs=1e-9)


@pytest.mark.parametrize("v", [[2.0, 1.0, 0.0], [0.5, -1.0, 1.5], [0.3, -1.2, 0.9]])
def test_lieb_matches_closed_form_on_ground_densities(
    functional_service, hamiltonian_service, spectrum_service, triangle_service, triangle_reference, triangle_basis, v
):
    v = np.asarray(v)
    rho = ground_density(hamiltonian_service, spectrum_service, triangle_reference, triangle_basis, v)
    result = functional_service.lieb_f(rho, triangle_reference, triangle_basis)
    assert result.value == pytest.approx(triangle_service.triangle_f_analytic(rho), abs=1e-6)
    np.testing.assert_allclose(result.maximizer_v.v, v - v.mean(), atol=1e-3)
    assert result.certificate_gap >= 0.0


def test_lieb_published_value(
    functional_service, hamiltonian_service, spectrum_service, triangle_reference, triangle_basis
):
    rho = ground_density(hamiltonian_service, spectrum_service, triangle_reference, triangle_basis, [2.0, 1.0, 0.0])
    assert functional_service.lieb_f(rho, triangle_reference, triangle_basis).value == pytest.approx(3.0832, abs=1e-3)


def test_lieb_outside_is_infinite(functional_service, triangle_reference, triangle_basis):
    result = functional_service.lieb_f([1.2, 0.4, 0.4], triangle_reference, triangle_basis)
    assert not result.finite
    assert result.value == float("inf")
    assert result.maximizer_v is None


def test_lieb_refuses_boundary(functional_service, triangle_reference, triangle_basis):
    with pytest.raises(BoundaryDensityError):
        functional_service.lieb_f([1.0, 0.5, 0.5], triangle_reference, triangle_basis)


def test_lieb_rejects_wrong_length(functional_service, triangle_reference, triangle_basis):
    with pytest.raises(InvalidInputError):
        functional_service.lieb_f([0.5, 0.5, 0.5, 0.5], triangle_reference, triangle_basis)


@pytest.mark.slow
def test_lieb_below_pure_functional(functional_service, triangle_service, triangle_reference, triangle_basis, rng):
    for _ in range(100):
        rho = interior_triangle_density(rng)
        value = functional_service.lieb_f(rho, triangle_reference, triangle_basis).value
        assert value <= triangle_service.triangle_f_analytic(rho) + 1e-6


@pytest.mark.slow
def test_lieb_is_convex(functional_service, triangle_reference, triangle_basis, rng):
    def lieb(rho):
        return functional_service.lieb_f(rho, triangle_reference, triangle_basis).value

    for _ in range(100):
        a, b = interior_triangle_density(rng), interior_triangle_density(rng)
        lam = rng.random()
        assert lieb(lam * a + (1.0 - lam) * b) <= lam * lieb(a) + (1.0 - lam) * lieb(b) + 1e-6


def test_cuboctahedron_lieb_value(functional_service, cuboctahedron_reference, cuboctahedron_basis):
    result = functional_service.lieb_f(CUBOCTAHEDRON_UNIFORM, cuboctahedron_reference, cuboctahedron_basis)
    assert result.value == pytest.approx(2.0, abs=1e-6)


def test_closest_hull_density_reaches_uniform(
    functional_service, hamiltonian_service, spectrum_service, triangle_reference, triangle_basis, rng
):
    gm = spectrum_service.ground_manifold(hamiltonian_service.assemble_reference(triangle_reference, triangle_basis))
    closest = functional_service.closest_hull_density(gm, UNIFORM_DENSITY, rng)
    np.testing.assert_allclose(closest, UNIFORM_DENSITY, atol=1e-8)


# Propriedades no triângulo (forma fechada)

def test_fenchel_young(functional_service, triangle_service, triangle_reference, triangle_basis, rng):
    for _ in range(100):
        rho = interior_triangle_density(rng)
        v = Potential(rng.uniform(-3.0, 3.0, 3))
        energy = functional_service.ground_energy(v, triangle_reference, triangle_basis)
        assert triangle_service.triangle_f_analytic(rho) + v.v @ rho >= energy - 1e-9


def test_ground_energy_is_midpoint_concave(
    functional_service, graph_service, hamiltonian_service, triangle_reference, triangle_basis, rng
):
    for k in range(500):
        if k % 2 == 0:
            reference, basis = triangle_reference, triangle_basis
        else:
            m = int(rng.integers(2, 7))
            g = graph_service.random_connected_graph(m, rng)
            reference = ReferenceHamiltonian(hamiltonian_service.laplacian_hamiltonian(g))
            basis = FockBasis.build(m, int(rng.integers(1, m)))
        a = rng.uniform(-3.0, 3.0, basis.m)
        b = rng.uniform(-3.0, 3.0, basis.m)
        middle = functional_service.ground_energy(Potential((a + b) / 2.0), reference, basis)
        ends = (
            functional_service.ground_energy(Potential(a), reference, basis)
            + functional_service.ground_energy(Potential(b), reference, basis)
        ) / 2.0
        assert middle >= ends - 1e-10


def test_closed_form_is_convex(triangle_service, rng):
    for _ in range(100):
        a, b = interior_triangle_density(rng), interior_triangle_density(rng)
        lam = rng.random()
        mixed = triangle_service.triangle_f_analytic(lam * a + (1.0 - lam) * b)
        bound = lam * triangle_service.triangle_f_analytic(a) + (1.0 - lam) * triangle_service.triangle_f_analytic(b)
        assert mixed <= bound + 1e-9


# Funcional de estados puros

def test_pure_matches_closed_form(
    functional_service, hamiltonian_service, spectrum_service, triangle_service, triangle_reference, triangle_basis
):
    rho = ground_density(hamiltonian_service, spectrum_service, triangle_reference, triangle_basis, [2.0, 1.0, 0.0])
    result = functional_service.pure_f(rho, triangle_reference, triangle_basis, restarts=8)
    assert result.converged
    assert result.constraint_residual <= 1e-7
    assert result.value == pytest.approx(triangle_service.triangle_f_analytic(rho), abs=1e-5)


def test_pure_at_uniform_density(functional_service, triangle_reference, triangle_basis):
    result = functional_service.pure_f(UNIFORM_DENSITY, triangle_reference, triangle_basis, restarts=8)
    assert result.value == pytest.approx(3.0, abs=1e-5)


def test_pure_at_extreme_density(functional_service, triangle_reference, triangle_basis):
    result = functional_service.pure_f([1.0, 1.0, 0.0], triangle_reference, triangle_basis, restarts=4)
    assert result.converged
    assert result.value == pytest.approx(4.0, abs=1e-12)
    assert result.minimizer_psi.coefficients[0] != 0.0
    assert np.allclose(result.minimizer_psi.coefficients[1:], 0.0)


def test_pure_on_boundary_edge(functional_service, triangle_reference, triangle_basis):
    result = functional_service.pure_f([1.0, 0.8, 0.2], triangle_reference, triangle_basis, restarts=4)
    assert result.converged
    assert result.constraint_residual <= 1e-7
    assert result.value == pytest.approx(3.2, abs=1e-5)


def test_face_indices(functional_service, square_basis):
    face = functional_service.face_indices(np.array([1.0, 0.5, 0.5, 0.0]), square_basis)
    assert [square_basis.labels(k) for k in face] == [(1, 2), (1, 3)]
    assert functional_service.face_indices(np.full(4, 0.5), square_basis).tolist() == list(range(6))


def test_pure_is_reproducible(functional_service, triangle_reference, triangle_basis):
    rho = [0.3, 0.8, 0.9]
    first = functional_service.pure_f(rho, triangle_reference, triangle_basis, restarts=4, seed=7)
    second = functional_service.pure_f(rho, triangle_reference, triangle_basis, restarts=4, seed=7, jobs=2)
    assert first.value == second.value


def test_pure_rejects_outside(functional_service, triangle_reference, triangle_basis):
    with pytest.raises(InvalidInputError):
        functional_service.pure_f([1.5, 0.5, 0.0], triangle_reference, triangle_basis)


@pytest.mark.slow
def test_triangle_functionals_agree_on_interior_grid(
    functional_service, triangle_service, triangle_reference, triangle_basis
):
    # 1 - ρ percorre o simplexo padrão; i, j, k >= 2 mantém a grade longe da fronteira
    steps = 25
    grid = [
        1.0 - np.array([i, j, steps - i - j]) / steps
        for i in range(2, steps - 3)
        for j in range(2, steps - i - 1)
    ]
    assert len(grid) >= 200
    for rho in grid:
        expected = triangle_service.triangle_f_analytic(rho)
        assert functional_service.lieb_f(rho, triangle_reference, triangle_basis).value == pytest.approx(
            expected, abs=1e-5
        )
        assert functional_service.pure_f(rho, triangle_reference, triangle_basis, restarts=8).value == pytest.approx(
            expected, abs=1e-5
        )


@pytest.mark.slow
def test_cuboctahedron_pure_gap(functional_service, cuboctahedron_reference, cuboctahedron_basis, record_property):
    gaps = []
    for seed in (0, 1, 2):
        result = functional_service.pure_f(
            CUBOCTAHEDRON_UNIFORM, cuboctahedron_reference, cuboctahedron_basis, restarts=200, seed=seed
        )
        assert result.converged
        gaps.append(result.value - 2.0)
        record_property(f"pure_gap_seed_{seed}", gaps[-1])
    assert min(gaps) > 1e-4
    assert max(gaps) - min(gaps) <= 0.1 * max(gaps)


# Minimização via funcional

def test_minimize_with_closed_form(functional_service, triangle_service, triangle_reference, triangle_basis):
    result = functional_service.minimize_energy_via_functional(
        [2.0, 1.0, 0.0], triangle_service.triangle_f_analytic, 2, reference=triangle_reference, basis=triangle_basis
    )
    np.testing.assert_allclose(result.rho.rho, PUBLISHED_RHO, atol=1e-3)
    assert result.functional_value == pytest.approx(3.0832, abs=1e-3)
    assert result.energy == pytest.approx(4.3249, abs=1e-3)
    assert result.discrepancy < 1e-3
    exact = functional_service.ground_energy(Potential([2.0, 1.0, 0.0]), triangle_reference, triangle_basis)
    assert result.reference_energy == pytest.approx(exact, abs=1e-9)


def test_minimize_without_potential(functional_service, triangle_service):
    result = functional_service.minimize_energy_via_functional([0.0, 0.0, 0.0], triangle_service.triangle_f_analytic, 2)
    assert result.converged
    assert result.energy == pytest.approx(3.0, abs=1e-9)


def test_minimize_with_constant_potential(functional_service, triangle_service):
    result = functional_service.minimize_energy_via_functional([1.0, 1.0, 1.0], triangle_service.triangle_f_analytic, 2)
    assert result.energy == pytest.approx(5.0, abs=1e-9)


def test_plane_gradient_of_linear_functional(functional_service):
    a = np.array([1.0, -2.0, 0.5, 3.0])
    gradient = functional_service.plane_gradient(lambda x: float(a @ x), np.full(4, 0.5))
    np.testing.assert_allclose(gradient, a - a.mean(), atol=1e-6)


# Superfície

def test_functional_surface_rows(functional_service, triangle_reference, triangle_basis):
    rows = functional_service.functional_surface(triangle_reference, triangle_basis, grid_steps=4, include_pure=False)
    assert len(rows) == 3
    for row in rows:
        assert set(row) == {"rho_1", "rho_2", "rho_3", "F"}
        assert row["rho_1"] + row["rho_2"] + row["rho_3"] == pytest.approx(2.0)
        assert row["F"] == pytest.approx(3.0, abs=1e-9)


def test_functional_surface_requires_three_vertices(functional_service, square_reference, square_basis):
    with pytest.raises(InvalidInputError):
        functional_service.functional_surface(square_reference, square_basis)
