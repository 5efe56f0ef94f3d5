"""Fixtures compartilhadas: services, grafos embutidos e Hamiltonianos de referência."""

import numpy as np
import pytest

from models.fock import FockBasis
from models.operators import ReferenceHamiltonian
from services.atlas_service import AtlasService
from services.functional_service import FunctionalService
from services.graph_service import GraphService
from services.hamiltonian_service import HamiltonianService
from services.representability_service import RepresentabilityService
from services.spectrum_service import SpectrumService
from services.triangle_service import TriangleService


@pytest.fixture
def graph_service():
    return GraphService()


@pytest.fixture
def hamiltonian_service(graph_service):
    return HamiltonianService(graph_service)


@pytest.fixture
def spectrum_service():
    return SpectrumService()


@pytest.fixture
def representability_service(spectrum_service, hamiltonian_service):
    return RepresentabilityService(spectrum_service, hamiltonian_service)


@pytest.fixture
def functional_service(hamiltonian_service, spectrum_service, representability_service):
    return FunctionalService(hamiltonian_service, spectrum_service, representability_service)


@pytest.fixture
def atlas_service(spectrum_service, hamiltonian_service, representability_service):
    return AtlasService(spectrum_service, hamiltonian_service, representability_service)


@pytest.fixture
def triangle_service():
    return TriangleService()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def _reference(graph_service, hamiltonian_service, name):
    return ReferenceHamiltonian(hamiltonian_service.laplacian_hamiltonian(graph_service.named_graph(name)))


@pytest.fixture
def triangle_reference(graph_service, hamiltonian_service):
    return _reference(graph_service, hamiltonian_service, "triangle")


@pytest.fixture
def square_reference(graph_service, hamiltonian_service):
    return _reference(graph_service, hamiltonian_service, "square")


@pytest.fixture
def cuboctahedron_reference(graph_service, hamiltonian_service):
    return _reference(graph_service, hamiltonian_service, "cuboctahedron")


@pytest.fixture
def triangle_basis():
    return FockBasis.build(3, 2)


@pytest.fixture
def square_basis():
    return FockBasis.build(4, 2)


@pytest.fixture
def cuboctahedron_basis():
    return FockBasis.build(12, 2)


def square_potential(s: float, t: float) -> np.ndarray:
    """v = (s+t, -s+t, -s-t, s-t)."""
    return np.array([s + t, -s + t, -s - t, s - t])


def random_density(rng: np.random.Generator, basis: FockBasis, terms: int = 4) -> np.ndarray:
    """Combinação convexa aleatória de densidades extremas."""
    picks = rng.choice(basis.dim, size=min(terms, basis.dim), replace=False)
    weights = rng.dirichlet(np.ones(picks.shape[0]))
    return weights @ basis.occupation_matrix[picks]
