"""
Service de varreduras (atlas) no espaço de potenciais e de densidades.
Segue Single Responsibility Principle.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from models.atlas import AtlasCell, GridAxis, PotentialGridSpec
from models.fock import FockBasis
from models.operators import Potential, ReferenceHamiltonian
from models.spectrum import Density, GroundManifold
from services.hamiltonian_service import HamiltonianService
from services.representability_service import RepresentabilityService
from services.spectrum_service import SpectrumService
from utils.constants import ATLAS_STEPS, DEGENERACY_TOL, HULL_PAIR_GRID, ORTHONORMAL_TOL
from utils.exceptions import InvalidInputError
from utils.helpers import make_rng, parallel_map

logger = logging.getLogger(__name__)


class AtlasService:
    """Varreduras de potenciais, imagens de densidade e fechos de variedades degeneradas."""

    def __init__(
        self,
        spectrum_service: Optional[SpectrumService] = None,
        hamiltonian_service: Optional[HamiltonianService] = None,
        representability_service: Optional[RepresentabilityService] = None
    ):
        self.spectrum_service = spectrum_service or SpectrumService()
        self.hamiltonian_service = hamiltonian_service or HamiltonianService()
        self.representability_service = representability_service or RepresentabilityService(
            self.spectrum_service, self.hamiltonian_service
        )

    # Grades prontas

    def square_grid(self, steps: int = ATLAS_STEPS, extent: float = 2.0) -> PotentialGridSpec:
        """Plano (s, t) do quadrado: v = (s+t, -s+t, -s-t, s-t)."""
        return PotentialGridSpec(axes=[
            GridAxis(direction=[1.0, -1.0, -1.0, 1.0], start=-extent, stop=extent, steps=steps, label="s"),
            GridAxis(direction=[1.0, 1.0, -1.0, -1.0], start=-extent, stop=extent, steps=steps, label="t"),
        ])

    def triangle_ray(self, vertex: int, t_max: float = 3.0, steps: int = 31) -> PotentialGridSpec:
        """
        Raio v = -t·e_vertex no gauge Σv = 0, t em (0, t_max].

        Args:
            vertex: Vértice 1..3 que recebe o poço
        """
        if vertex not in (1, 2, 3):
            raise InvalidInputError(f"Vértice {vertex} inválido para o triângulo")
        direction = np.full(3, 1.0 / 3.0)
        direction[vertex - 1] = -2.0 / 3.0
        return PotentialGridSpec(axes=[
            GridAxis(direction=direction.tolist(), start=t_max / steps, stop=t_max, steps=steps, label="t")
        ])

    # Varredura

    def sweep(
        self,
        grid: PotentialGridSpec,
        reference: ReferenceHamiltonian,
        basis: FockBasis,
        with_uv: bool = True,
        degeneracy_tol: float = DEGENERACY_TOL,
        zero_tol: Optional[float] = None,
        t_scan: Optional[Sequence[float]] = None,
        jobs: int = 1
    ) -> List[AtlasCell]:
        """
        Espectro, degenerescência e veredito uv em cada ponto da grade.

        Args:
            grid: Grade de potenciais
            reference: Parte interna H_0
            basis: Base de Fock
            with_uv: Certificar a seleção canônica de cada célula
            degeneracy_tol: Tolerância relativa
            zero_tol: Tolerância de suporte
            t_scan: Magnitudes da busca de testemunhas
            jobs: Workers (ordem da saída independe de jobs)

        Returns:
            Células na ordem da grade

        Raises:
            InvalidInputError: Dimensão da grade difere de M
        """
        if grid.m != basis.m:
            raise InvalidInputError(f"Grade com M = {grid.m}, base com M = {basis.m}")

        h0 = self.hamiltonian_service.assemble_reference(reference, basis)
        points = [(k, coords, v) for k, (coords, v) in enumerate(grid.points())]
        logger.info("Atlas: %d células, L = %d", len(points), basis.dim)

        def cell(item: Tuple[int, Tuple[float, ...], np.ndarray]) -> AtlasCell:
            k, coords, v = item
            potential = Potential(v)
            op = h0.plus_diagonal(basis.occupation_matrix @ v)
            gm = self.spectrum_service.ground_manifold_of(
                self.spectrum_service.eigendecompose(op), degeneracy_tol, warn=False
            )
            status = None
            if with_uv:
                verdict = self.representability_service.certify(
                    gm.states[0], h0, potential, t_scan=t_scan, zero_tol=zero_tol, degeneracy_tol=degeneracy_tol
                )
                status = verdict.status
            return AtlasCell(
                index=k,
                coords=coords,
                v=potential,
                ground_energy=gm.energy,
                degeneracy=gm.degeneracy,
                gap=gm.gap,
                uv_status=status,
                density=self.spectrum_service.density_of(gm.states[0]),
                warnings=list(gm.warnings)
            )

        cells = parallel_map(cell, points, jobs)
        flagged = sum(1 for c in cells if c.degenerate)
        logger.info("Atlas concluído: %d células degeneradas", flagged)
        return cells

    def manifest(
        self,
        grid: PotentialGridSpec,
        basis: FockBasis,
        degeneracy_tol: float,
        zero_tol: Optional[float]
    ) -> Dict[str, Any]:
        """Manifesto JSON da varredura (grade e tolerâncias)."""
        return {
            "grid": grid.model_dump(),
            "m": basis.m,
            "n": basis.n,
            "cells": grid.size,
            "degeneracy_tol": degeneracy_tol,
            "zero_tol": zero_tol if zero_tol is not None else self.representability_service.default_zero_tol(basis),
        }

    # Imagens de densidade

    def density_image(
        self,
        cells: Sequence[AtlasCell],
        projector: np.ndarray,
        labels: Optional[Sequence[str]] = None
    ) -> List[Dict[str, Any]]:
        """
        Coordenadas P·ρ de cada célula, com rótulos para plotagem externa.

        Args:
            cells: Células da varredura
            projector: Matriz k×M de linhas ortonormais
            labels: Nomes das coordenadas (padrão x1..xk)

        Returns:
            Linhas {cell, x1.., degeneracy, uv_status}

        Raises:
            InvalidInputError: Linhas não ortonormais ou M incompatível
        """
        p = np.atleast_2d(np.asarray(projector, dtype=float))
        if not np.allclose(p @ p.T, np.eye(p.shape[0]), atol=ORTHONORMAL_TOL):
            raise InvalidInputError("Linhas do projetor não são ortonormais")
        names = list(labels) if labels is not None else [f"x{i + 1}" for i in range(p.shape[0])]
        if len(names) != p.shape[0]:
            raise InvalidInputError("Número de rótulos difere do número de linhas do projetor")

        rows = []
        for c in cells:
            if c.density.m != p.shape[1]:
                raise InvalidInputError(f"Projetor com {p.shape[1]} colunas, densidade com M = {c.density.m}")
            point = p @ c.density.rho
            row: Dict[str, Any] = {"cell": c.index}
            row.update({name: float(x) for name, x in zip(names, point)})
            row["degeneracy"] = c.degeneracy
            row["uv_status"] = c.uv_status.value if c.uv_status is not None else ""
            rows.append(row)
        return rows

    def barycentric_projector(self, m: int = 3) -> np.ndarray:
        """
        Linhas de Helmert: base ortonormal do plano Σx = 0.

        Para M = 3 as coordenadas são as do triângulo equilátero.
        """
        if m < 2:
            raise InvalidInputError("Projetor baricêntrico requer M >= 2")
        rows = []
        for k in range(1, m):
            row = np.zeros(m)
            row[:k] = 1.0
            row[k] = -float(k)
            rows.append(row / np.sqrt(k * (k + 1)))
        return np.array(rows)

    def middle_plane_projector(self) -> np.ndarray:
        """Plano médio do octaedro P_{4,2} contendo as famílias ρ_A e ρ_B do quadrado."""
        return np.array([
            [-1.0, 1.0, 1.0, -1.0],
            [-1.0, -1.0, 1.0, 1.0],
        ]) / 2.0

    # Fecho da variedade degenerada

    def degenerate_manifold_density_hull(
        self,
        gm: GroundManifold,
        samples: int,
        seed: int = 0,
        pair_grid: int = HULL_PAIR_GRID
    ) -> List[Density]:
        """
        Densidades puras amostradas na variedade e combinações de ensemble.

        Args:
            gm: Variedade fundamental
            samples: Vetores unitários aleatórios
            seed: Semente
            pair_grid: Pontos da grade de pesos para cada par de estados da base

        Returns:
            Lista de densidades (pure e ensemble); só uma se g = 1
        """
        if not gm.is_degenerate:
            return [self.spectrum_service.density_of(gm.states[0])]

        rng = make_rng(seed)
        pure = self.spectrum_service.sample_manifold_densities(gm, rng, samples)
        result = [Density(rho) for rho in pure]

        base = self.spectrum_service.manifold_basis_densities(gm)
        weights = np.linspace(0.0, 1.0, pair_grid)
        for a in range(base.shape[0]):
            for b in range(a + 1, base.shape[0]):
                for lam in weights:
                    result.append(Density(lam * base[a] + (1.0 - lam) * base[b], kind="ensemble"))
        result.append(Density(base.mean(axis=0), kind="ensemble"))
        logger.debug("Fecho da variedade (g=%d): %d densidades", gm.degeneracy, len(result))
        return result
