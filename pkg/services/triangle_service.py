"""
Funcional de estados puros em forma fechada para o triângulo (M=3, N=2, h = -Δ).

F̃ = 3 no incírculo C (‖ρ - ρ̄‖ <= 1/√6, ρ̄ = (2/3)(1,1,1)).
Fora de C, F̃ = 4 + 2·min(α1-α2-α3, -α1-α2+α3, -α1+α2-α3), cada termo
correspondendo a uma ponta S1, S2, S3.
"""

import logging
from typing import Dict, Sequence

import numpy as np

from models.functional import TriangleRegion
from models.validation import validate_density
from utils.constants import DENSITY_TOL, INCIRCLE_RADIUS, REGION_TOL
from utils.exceptions import InvalidInputError

logger = logging.getLogger(__name__)

UNIFORM_DENSITY = np.full(3, 2.0 / 3.0)

# Pontos de tangência do incírculo com a fronteira
EXCEPTIONAL_DENSITIES = np.array([
    [1.0, 0.5, 0.5],
    [0.5, 1.0, 0.5],
    [0.5, 0.5, 1.0],
])

SPIKES = (TriangleRegion.S1, TriangleRegion.S2, TriangleRegion.S3)


class TriangleService:
    """Service do funcional analítico do triângulo."""

    def _checked(self, rho: Sequence[float]) -> np.ndarray:
        vector = np.asarray(rho, dtype=float).reshape(-1)
        if vector.shape[0] != 3:
            raise InvalidInputError(f"Funcional do triângulo requer M = 3, recebido {vector.shape[0]}")
        ok, message = validate_density(vector, 2, DENSITY_TOL)
        if not ok:
            raise InvalidInputError(message)
        return vector

    def alphas(self, rho: Sequence[float]) -> np.ndarray:
        """(α1, α2, α3) com α1 = √((1-ρ1)(1-ρ3)), α2 = √((1-ρ1)(1-ρ2)), α3 = √((1-ρ2)(1-ρ3))."""
        holes = np.clip(1.0 - np.asarray(rho, dtype=float), 0.0, None)
        return np.sqrt(np.array([holes[0] * holes[2], holes[0] * holes[1], holes[1] * holes[2]]))

    def spike_values(self, rho: Sequence[float]) -> Dict[TriangleRegion, float]:
        """
        Expressões de cada ponta avaliadas em ρ.

        Returns:
            Dict {S1, S2, S3: 4 + 2(±α1 ± α2 ± α3)}
        """
        a1, a2, a3 = self.alphas(self._checked(rho))
        return {
            TriangleRegion.S1: 4.0 + 2.0 * (a1 - a2 - a3),
            TriangleRegion.S2: 4.0 + 2.0 * (-a1 - a2 + a3),
            TriangleRegion.S3: 4.0 + 2.0 * (-a1 + a2 - a3),
        }

    def triangle_region(self, rho: Sequence[float]) -> TriangleRegion:
        """
        Classifica ρ: pontos de tangência, incírculo fechado ou ponta.

        Empates na fronteira de C vão para C.
        """
        vector = self._checked(rho)
        if np.min(np.linalg.norm(EXCEPTIONAL_DENSITIES - vector, axis=1)) <= REGION_TOL:
            return TriangleRegion.BOUNDARY_EXCEPTIONAL
        if np.linalg.norm(vector - UNIFORM_DENSITY) <= INCIRCLE_RADIUS + REGION_TOL:
            return TriangleRegion.C
        values = self.spike_values(vector)
        return min(SPIKES, key=lambda region: values[region])

    def triangle_f_analytic(self, rho: Sequence[float]) -> float:
        """
        F̃(ρ) em forma fechada.

        Args:
            rho: Densidade com M = 3, N = 2

        Returns:
            Valor do funcional

        Raises:
            InvalidInputError: Dimensão != 3 ou ρ fora do hipersimplexo
        """
        region = self.triangle_region(rho)
        if region.in_incircle:
            return 3.0
        return float(self.spike_values(rho)[region])
