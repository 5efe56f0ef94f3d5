"""Testes das varreduras de potenciais, imagens de densidade e fechos de variedades."""

import numpy as np
import pytest
from pydantic import ValidationError

from models.atlas import GridAxis, PotentialGridSpec
from models.verdict import UvStatus
from services.triangle_service import UNIFORM_DENSITY
from utils.constants import INCIRCLE_RADIUS
from utils.exceptions import InvalidInputError


def test_grid_axis_must_lie_in_gauge_plane():
    with pytest.raises(ValidationError):
        GridAxis(direction=[1.0, 0.0, 0.0], start=0.0, stop=1.0, steps=3)


def test_grid_points_are_lexicographic():
    grid = PotentialGridSpec(axes=[
        GridAxis(direction=[1.0, -1.0], start=0.0, stop=1.0, steps=2, label="a"),
        GridAxis(direction=[-1.0, 1.0], start=0.0, stop=2.0, steps=3, label="b"),
    ])
    coords = [c for c, _ in grid.points()]
    assert coords == [(0.0, 0.0), (0.0, 1.0), (0.0, 2.0), (1.0, 0.0), (1.0, 1.0), (1.0, 2.0)]
    assert grid.size == 6
    assert grid.labels == ["a", "b"]


def test_grid_dimensions_must_agree():
    with pytest.raises(ValidationError):
        PotentialGridSpec(axes=[
            GridAxis(direction=[1.0, -1.0], start=0.0, stop=1.0, steps=2),
            GridAxis(direction=[1.0, -1.0, 0.0], start=0.0, stop=1.0, steps=2),
        ])


@pytest.mark.parametrize("vertex", [1, 2, 3])
def test_triangle_rays_have_constant_density(atlas_service, triangle_reference, triangle_basis, vertex):
    grid = atlas_service.triangle_ray(vertex, steps=10)
    cells = atlas_service.sweep(grid, triangle_reference, triangle_basis)
    expected = np.full(3, 0.5)
    expected[vertex - 1] = 1.0
    assert len(cells) == 10
    for cell in cells:
        assert cell.degeneracy == 1
        assert cell.uv_status == UvStatus.NON_UV_WITH_WITNESS
        np.testing.assert_allclose(cell.density.rho, expected, atol=1e-10)


def test_triangle_ray_rejects_bad_vertex(atlas_service):
    with pytest.raises(InvalidInputError):
        atlas_service.triangle_ray(4)


def test_sweep_rejects_mismatched_grid(atlas_service, triangle_reference, triangle_basis):
    with pytest.raises(InvalidInputError):
        atlas_service.sweep(atlas_service.square_grid(steps=3), triangle_reference, triangle_basis)


def check_square_cells(cells):
    for cell in cells:
        s, t = cell.coords
        on_diagonal = abs(abs(s) - abs(t)) < 1e-9
        assert cell.degenerate == on_diagonal, (s, t)
        if not on_diagonal:
            assert cell.uv_status == UvStatus.NON_UV_WITH_WITNESS, (s, t)
            assert cell.ground_energy == pytest.approx(4.0 - 2.0 * np.sqrt(1.0 + max(abs(s), abs(t)) ** 2), abs=1e-9)


def test_square_grid_coarse(atlas_service, square_reference, square_basis):
    cells = atlas_service.sweep(atlas_service.square_grid(steps=9), square_reference, square_basis)
    assert len(cells) == 81
    check_square_cells(cells)


@pytest.mark.slow
def test_square_grid_full(atlas_service, square_reference, square_basis):
    cells = atlas_service.sweep(atlas_service.square_grid(), square_reference, square_basis, jobs=4)
    assert len(cells) == 81 * 81
    assert [c.index for c in cells] == list(range(81 * 81))
    check_square_cells(cells)


def test_sweep_without_certification(atlas_service, square_reference, square_basis):
    cells = atlas_service.sweep(atlas_service.square_grid(steps=3), square_reference, square_basis, with_uv=False)
    assert all(c.uv_status is None for c in cells)
    assert cells[0].to_row(["s", "t"])["uv_status"] == ""


def test_cell_rows(atlas_service, square_reference, square_basis):
    grid = atlas_service.square_grid(steps=3)
    cells = atlas_service.sweep(grid, square_reference, square_basis)
    row = cells[0].to_row(grid.labels)
    assert list(row)[:2] == ["s", "t"]
    assert (row["s"], row["t"]) == (-2.0, -2.0)
    assert {"E", "degeneracy", "gap", "uv_status", "rho_1", "rho_4"} <= set(row)


def test_manifest(atlas_service, square_basis):
    grid = atlas_service.square_grid(steps=5)
    manifest = atlas_service.manifest(grid, square_basis, 1e-8, None)
    assert manifest["cells"] == 25
    assert manifest["zero_tol"] == pytest.approx(1e-10 * np.sqrt(6))
    assert len(manifest["grid"]["axes"]) == 2


def test_middle_plane_image_separates_families(atlas_service, square_reference, square_basis):
    cells = atlas_service.sweep(atlas_service.square_grid(steps=9), square_reference, square_basis, with_uv=False)
    rows = atlas_service.density_image(cells, atlas_service.middle_plane_projector())
    for cell, row in zip(cells, rows):
        s, t = cell.coords
        if abs(s) > abs(t) + 1e-9:
            assert row["x2"] == pytest.approx(0.0, abs=1e-10)
        elif abs(t) > abs(s) + 1e-9:
            assert row["x1"] == pytest.approx(0.0, abs=1e-10)


def test_projectors_are_orthonormal(atlas_service):
    for p in (atlas_service.barycentric_projector(3), atlas_service.barycentric_projector(5), atlas_service.middle_plane_projector()):
        np.testing.assert_allclose(p @ p.T, np.eye(p.shape[0]), atol=1e-12)
    np.testing.assert_allclose(atlas_service.barycentric_projector(4).sum(axis=1), 0.0, atol=1e-12)


def test_density_image_rejects_non_orthonormal(atlas_service, triangle_reference, triangle_basis):
    cells = atlas_service.sweep(atlas_service.triangle_ray(1, steps=2), triangle_reference, triangle_basis, with_uv=False)
    with pytest.raises(InvalidInputError):
        atlas_service.density_image(cells, np.array([[1.0, 1.0, 0.0]]))
    rows = atlas_service.density_image(cells, atlas_service.barycentric_projector(3), labels=["u", "w"])
    assert set(rows[0]) == {"cell", "u", "w", "degeneracy", "uv_status"}


def test_incircle_radius(atlas_service, hamiltonian_service, spectrum_service, triangle_reference, triangle_basis):
    gm = spectrum_service.ground_manifold(hamiltonian_service.assemble_reference(triangle_reference, triangle_basis))
    hull = atlas_service.degenerate_manifold_density_hull(gm, samples=10_000, seed=3)
    distances = np.array([np.linalg.norm(d.rho - UNIFORM_DENSITY) for d in hull])
    assert INCIRCLE_RADIUS - 1e-3 <= distances.max() <= INCIRCLE_RADIUS + 1e-10


def test_nondegenerate_hull_is_single_density(
    atlas_service, hamiltonian_service, spectrum_service, triangle_reference, triangle_basis
):
    op = hamiltonian_service.assemble_reference(triangle_reference, triangle_basis)
    gm = spectrum_service.ground_manifold(op.plus_diagonal(hamiltonian_service.potential_diagonal(np.array([2.0, 1.0, 0.0]), triangle_basis)))
    assert len(atlas_service.degenerate_manifold_density_hull(gm, samples=50)) == 1


def test_cuboctahedron_uniform_density_is_ensemble_only(
    atlas_service, hamiltonian_service, spectrum_service, cuboctahedron_reference, cuboctahedron_basis
):
    gm = spectrum_service.ground_manifold(hamiltonian_service.assemble_reference(cuboctahedron_reference, cuboctahedron_basis))
    assert gm.degeneracy == 3
    hull = atlas_service.degenerate_manifold_density_hull(gm, samples=1000, seed=11)
    uniform = np.full(12, 1.0 / 6.0)

    ensemble = [d for d in hull if d.kind == "ensemble"]
    assert min(np.linalg.norm(d.rho - uniform) for d in ensemble) < 1e-12

    pure = [d for d in hull if d.kind == "pure"]
    assert len(pure) == 1000
    assert min(np.linalg.norm(d.rho - uniform) for d in pure) > 1e-6
