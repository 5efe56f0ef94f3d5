"""
Service responsável por autodecomposição, variedade fundamental e densidades.
Segue Single Responsibility Principle.
"""

import logging
from typing import List, Tuple

import numpy as np
import scipy.linalg

from models.fock import FockBasis, WaveFunction, slater_determinant
from models.operators import ManyBodyOperator, OneBodyHamiltonian
from models.spectrum import Density, EnsembleState, GroundManifold, Spectrum
from utils.constants import (
    AMBIGUITY_FACTOR,
    DEGENERACY_TOL,
    EIGEN_RESIDUAL_TOL,
    HULL_SAMPLES,
)
from utils.exceptions import NonConvergenceError

logger = logging.getLogger(__name__)


def phase_fix(vector: np.ndarray) -> np.ndarray:
    """
    Gira a fase global para que o maior coeficiente seja real positivo.

    Empates vão para o menor índice.
    """
    vector = np.asarray(vector, dtype=complex)
    k = int(np.argmax(np.abs(vector)))
    pivot = vector[k]
    if pivot == 0:
        return vector
    return vector * (abs(pivot) / pivot)


class SpectrumService:
    """
    Service de problemas de autovalores Hermitianos (LAPACK via scipy).
    Cada matriz é resolvida em uma única thread; matrizes independentes
    podem ser distribuídas em um pool de workers pelo chamador.
    """

    def eigendecompose(self, op: ManyBodyOperator) -> Spectrum:
        """
        Espectro completo em ordem crescente com autovetores ortonormais.

        Args:
            op: Operador Hermitiano

        Returns:
            Spectrum

        Raises:
            NonConvergenceError: Falha do solver ou resíduo acima de 1e-9·‖H‖
        """
        try:
            eigenvalues, eigenvectors = scipy.linalg.eigh(op.matrix)
        except (np.linalg.LinAlgError, ValueError) as e:
            raise NonConvergenceError(f"Autodecomposição falhou: {e}") from e

        norm = float(np.max(np.abs(eigenvalues))) if eigenvalues.size else 0.0
        residuals = np.linalg.norm(op.matrix @ eigenvectors - eigenvectors * eigenvalues, axis=0)
        max_residual = float(residuals.max()) if residuals.size else 0.0
        if max_residual > EIGEN_RESIDUAL_TOL * max(norm, np.finfo(float).tiny):
            raise NonConvergenceError(
                f"Resíduo {max_residual:.3e} acima do contrato ({EIGEN_RESIDUAL_TOL:g}·‖H‖)",
                residual=max_residual
            )
        return Spectrum(op.basis, eigenvalues, eigenvectors, max_residual)

    def ground_manifold(self, op: ManyBodyOperator, degeneracy_tol: float = DEGENERACY_TOL) -> GroundManifold:
        """
        Extrai energia fundamental e espaço fundamental.

        Args:
            op: Operador Hermitiano
            degeneracy_tol: Tolerância relativa de degenerescência

        Returns:
            GroundManifold com aviso se o gap for menor que 10×tolerância
        """
        spectrum = self.eigendecompose(op)
        return self.ground_manifold_of(spectrum, degeneracy_tol)

    def ground_manifold_of(
        self,
        spectrum: Spectrum,
        degeneracy_tol: float = DEGENERACY_TOL,
        warn: bool = True
    ) -> GroundManifold:
        """Variedade fundamental a partir de um espectro já calculado (warn=False silencia o log)."""
        values = spectrum.eigenvalues
        energy = float(values[0])
        threshold = degeneracy_tol * max(1.0, abs(energy))
        degeneracy = int(np.count_nonzero(values - energy <= threshold))
        gap = float(values[degeneracy] - energy) if degeneracy < values.shape[0] else float("inf")

        states = [
            WaveFunction(spectrum.basis, phase_fix(spectrum.eigenvectors[:, k]))
            for k in range(degeneracy)
        ]

        warnings: List[str] = []
        if gap < AMBIGUITY_FACTOR * threshold:
            message = f"Degenerescência ambígua: gap {gap:.3e} próximo da tolerância {threshold:.3e}"
            warnings.append(message)
            if warn:
                logger.warning(message)

        return GroundManifold(energy=energy, degeneracy=degeneracy, states=states, gap=gap, warnings=warnings)

    def density_of(self, psi: WaveFunction) -> Density:
        """
        ρ_i = Σ_{I∋i} |Ψ_I|².

        Args:
            psi: Estado normalizado

        Returns:
            Density
        """
        return Density(self.density_vector(psi.coefficients, psi.basis))

    def density_vector(self, coefficients: np.ndarray, basis: FockBasis) -> np.ndarray:
        """Densidade sem validação (vetor cru)."""
        return np.abs(coefficients) ** 2 @ basis.occupation_matrix

    def density_of_ensemble(self, ens: EnsembleState) -> Density:
        """
        Σ_n λ_n ρ[Ψ_n].

        Args:
            ens: Estado de ensemble válido

        Returns:
            Density do tipo "ensemble"
        """
        rho = sum(
            weight * self.density_vector(state.coefficients, state.basis)
            for weight, state in zip(ens.weights, ens.states)
        )
        return Density(rho, kind="ensemble")

    def sample_manifold_densities(
        self,
        gm: GroundManifold,
        rng: np.random.Generator,
        samples: int = HULL_SAMPLES
    ) -> np.ndarray:
        """
        Densidades puras de vetores unitários aleatórios no espaço fundamental.

        Args:
            gm: Variedade fundamental
            rng: Gerador aleatório
            samples: Número de amostras

        Returns:
            Array samples×M
        """
        b = gm.state_matrix()
        z = rng.standard_normal((samples, gm.degeneracy)) + 1j * rng.standard_normal((samples, gm.degeneracy))
        z /= np.linalg.norm(z, axis=1, keepdims=True)
        states = z @ b.T
        return np.abs(states) ** 2 @ gm.basis.occupation_matrix

    def manifold_basis_densities(self, gm: GroundManifold) -> np.ndarray:
        """Densidades dos estados da base do espaço fundamental (g×M)."""
        return np.array([self.density_vector(s.coefficients, s.basis) for s in gm.states])

    # Orbitais de uma partícula

    def one_body_orbitals(self, h: OneBodyHamiltonian) -> Tuple[np.ndarray, np.ndarray]:
        """
        Autovalores e orbitais de h (orbitais nas linhas, fase fixada).

        Returns:
            Tupla (energias crescentes, orbitais M×M)
        """
        energies, vectors = scipy.linalg.eigh(h.h)
        orbitals = np.array([phase_fix(vectors[:, k]) for k in range(vectors.shape[1])])
        return energies, orbitals

    def noninteracting_ground_state(self, h: OneBodyHamiltonian, basis: FockBasis) -> WaveFunction:
        """Determinante de Slater dos N orbitais mais baixos."""
        _, orbitals = self.one_body_orbitals(h)
        return slater_determinant(orbitals[: basis.n], basis)

    def plane_wave_orbitals(self, m: int) -> np.ndarray:
        """
        Orbitais φ_k = (ω^k, ω^{2k}, …, ω^{Mk})/√M com ω = exp(2πi/M).

        Base ortonormal de mesma densidade 1/M; autobase de h no grafo completo.

        Returns:
            Array M×M (orbital k na linha k)
        """
        k = np.arange(m).reshape(-1, 1)
        j = np.arange(1, m + 1).reshape(1, -1)
        return np.exp(2j * np.pi * k * j / m) / np.sqrt(m)

    def shares_ground_state(
        self,
        op: ManyBodyOperator,
        psi: WaveFunction,
        degeneracy_tol: float = DEGENERACY_TOL
    ) -> bool:
        """
        Verifica se psi é estado fundamental de op.

        Args:
            op: Hamiltoniano
            psi: Estado normalizado
            degeneracy_tol: Tolerância relativa

        Returns:
            True se ⟨Ψ,HΨ⟩ está dentro da tolerância de E_0
        """
        e0 = float(scipy.linalg.eigvalsh(op.matrix)[0])
        energy = op.expectation(psi.normalized().coefficients)
        return energy - e0 <= degeneracy_tol * max(1.0, abs(e0))

    def eigenvalues_only(self, matrix: np.ndarray) -> np.ndarray:
        """Autovalores crescentes de uma matriz Hermitiana crua."""
        return scipy.linalg.eigvalsh(matrix)

    def lowest(self, matrix: np.ndarray) -> float:
        return float(scipy.linalg.eigvalsh(matrix, subset_by_index=[0, 0])[0])
