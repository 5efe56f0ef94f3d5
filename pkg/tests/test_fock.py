"""Testes do espaço de Fock: base, sinais fermiônicos, estados e determinantes de Slater."""

from math import comb

import numpy as np
import pytest

from models.fock import (
    FockBasis,
    WaveFunction,
    annihilate,
    basis_state,
    create,
    labels_of,
    mask_from_labels,
    slater_determinant,
)
from utils.exceptions import InvalidInputError


@pytest.mark.parametrize("m,n", [(3, 1), (3, 2), (4, 2), (6, 3), (12, 2)])
def test_basis_dimension(m, n):
    basis = FockBasis.build(m, n)
    assert basis.dim == comb(m, n)
    assert len(set(basis.index_list)) == basis.dim
    assert np.all(basis.occupation_matrix.sum(axis=1) == n)


def test_basis_is_lexicographic():
    basis = FockBasis.build(4, 2)
    assert [basis.labels(k) for k in range(basis.dim)] == [
        (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)
    ]


@pytest.mark.parametrize("m,n", [(3, 0), (3, 3), (2, 5), (64, 2)])
def test_invalid_dimensions(m, n):
    with pytest.raises(InvalidInputError):
        FockBasis.build(m, n)


def test_mask_labels_round_trip():
    assert labels_of(mask_from_labels([1, 3, 4])) == (1, 3, 4)


def test_annihilate_sign_counts_lower_occupations():
    idx = mask_from_labels([1, 2, 4])
    assert annihilate(1, idx) == (1, mask_from_labels([2, 4]))
    assert annihilate(2, idx) == (-1, mask_from_labels([1, 4]))
    assert annihilate(4, idx) == (1, mask_from_labels([1, 2]))
    assert annihilate(3, idx) is None


def test_create_respects_exclusion():
    idx = mask_from_labels([2])
    assert create(2, idx) is None
    assert create(3, idx) == (-1, mask_from_labels([2, 3]))
    assert create(1, idx) == (1, mask_from_labels([1, 2]))


def test_anticommutation_on_basis_states():
    # a†_i a_j + a_j a†_i = δ_ij sobre todos os estados de M = 4
    for idx in range(16):
        for i in range(1, 5):
            for j in range(1, 5):
                total = {}
                first = annihilate(j, idx)
                if first is not None:
                    second = create(i, first[1])
                    if second is not None:
                        total[second[1]] = total.get(second[1], 0) + first[0] * second[0]
                first = create(i, idx)
                if first is not None:
                    second = annihilate(j, first[1])
                    if second is not None:
                        total[second[1]] = total.get(second[1], 0) + first[0] * second[0]
                total = {k: v for k, v in total.items() if v != 0}
                assert total == ({idx: 1} if i == j else {})


def test_wave_function_normalization():
    basis = FockBasis.build(3, 2)
    psi = WaveFunction(basis, [1.0, 1.0j, 0.0])
    assert not psi.is_normalized()
    assert psi.normalized().is_normalized()
    with pytest.raises(InvalidInputError):
        WaveFunction(basis, np.zeros(3)).normalized()


def test_wave_function_length_is_checked():
    with pytest.raises(InvalidInputError):
        WaveFunction(FockBasis.build(3, 2), [1.0, 0.0])


def test_wave_function_serialization():
    basis = FockBasis.build(4, 2)
    psi = WaveFunction(basis, np.arange(6) + 1j * np.arange(6)[::-1]).normalized()
    restored = WaveFunction.from_dict(psi.to_dict())
    np.testing.assert_allclose(restored.coefficients, psi.coefficients)


def test_basis_state():
    basis = FockBasis.build(4, 2)
    psi = basis_state(basis, [2, 4])
    assert psi.coefficients[basis.rank[mask_from_labels([2, 4])]] == 1.0
    assert psi.norm() == 1.0


def test_slater_of_unit_vectors_is_basis_state():
    basis = FockBasis.build(4, 2)
    orbitals = np.eye(4)[[1, 3]]
    psi = slater_determinant(orbitals, basis)
    np.testing.assert_allclose(np.abs(psi.coefficients), np.abs(basis_state(basis, [2, 4]).coefficients))


def test_slater_density_is_orbital_sum(graph_service, spectrum_service, hamiltonian_service, rng):
    for _ in range(30):
        m = int(rng.integers(3, 8))
        n = int(rng.integers(1, m))
        g = graph_service.random_connected_graph(m, rng)
        _, orbitals = spectrum_service.one_body_orbitals(hamiltonian_service.laplacian_hamiltonian(g))
        basis = FockBasis.build(m, n)
        psi = slater_determinant(orbitals[:n], basis)
        expected = (np.abs(orbitals[:n]) ** 2).sum(axis=0)
        np.testing.assert_allclose(spectrum_service.density_vector(psi.coefficients, basis), expected, atol=1e-10)


def test_slater_rejects_non_orthonormal_orbitals():
    with pytest.raises(InvalidInputError):
        slater_determinant(np.array([[1.0, 0.0, 0.0], [1.0, 1.0, 0.0]]), FockBasis.build(3, 2))
