"""
Modelos de resultados dos funcionais de densidade.
Segue Single Responsibility Principle.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from models.fock import WaveFunction
from models.operators import Potential
from models.spectrum import Density


class TriangleRegion(str, Enum):
    """Regiões do hipersimplexo (3,2): incírculo C e as três pontas."""

    C = "C"
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"
    BOUNDARY_EXCEPTIONAL = "boundary_exceptional"

    @property
    def in_incircle(self) -> bool:
        """Pontos de tangência pertencem ao disco fechado."""
        return self in (TriangleRegion.C, TriangleRegion.BOUNDARY_EXCEPTIONAL)


@dataclass(eq=False)
class LiebEvaluation:
    """
    Resultado de F(ρ) = sup_v {E(v) - v·ρ}.

    Attributes:
        value: Melhor G(v) encontrado (+inf fora do hipersimplexo)
        maximizer_v: Potencial maximizador com Σ v_i = 0
        iterations: Iterações de subgradiente
        certificate_gap: Cota superior de F(ρ) - value
        radius: Raio R_ρ da bola de busca em norma 1
        residual: ‖ρ_gs(v*) - ρ‖ (supergradiente de norma mínima)
        converged: Critério de parada atingido sem estagnação
        finite: False se ρ está fora do hipersimplexo
    """

    value: float
    maximizer_v: Optional[Potential]
    iterations: int
    certificate_gap: float
    radius: float = float("inf")
    residual: float = 0.0
    converged: bool = True
    finite: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "maximizer_v": self.maximizer_v.v.tolist() if self.maximizer_v is not None else None,
            "iterations": self.iterations,
            "certificate_gap": self.certificate_gap,
            "radius": self.radius,
            "residual": self.residual,
            "converged": self.converged,
            "finite": self.finite
        }


@dataclass(eq=False)
class PureEvaluation:
    """
    Resultado de F̃(ρ) por busca restrita multi-start.

    Attributes:
        value: ⟨Ψ, H_0 Ψ⟩ do melhor minimizador
        minimizer_psi: Melhor estado encontrado
        constraint_residual: max_i |ρ[Ψ]_i - ρ_i|
        restarts_used: Reinícios executados
        converged: Resíduo <= 1e-7
        restart_values: Valor final de cada reinício convergido
    """

    value: float
    minimizer_psi: Optional[WaveFunction]
    constraint_residual: float
    restarts_used: int
    converged: bool = True
    restart_values: List[float] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "constraint_residual": self.constraint_residual,
            "restarts_used": self.restarts_used,
            "converged": self.converged,
            "minimizer_psi": self.minimizer_psi.to_dict() if self.minimizer_psi is not None else None
        }


@dataclass(eq=False)
class FunctionalMinimum:
    """
    Mínimo de F(ρ) + v·ρ sobre o hipersimplexo.

    Attributes:
        energy: Valor mínimo (energia fundamental estimada)
        rho: Densidade minimizadora
        functional_value: F(ρ) no minimizador
        iterations: Iterações de descida projetada
        converged: Passo final abaixo da tolerância
        reference_energy: E(v) por diagonalização (se pedido)
    """

    energy: float
    rho: Density
    functional_value: float
    iterations: int
    converged: bool
    reference_energy: Optional[float] = None

    @property
    def discrepancy(self) -> Optional[float]:
        if self.reference_energy is None:
            return None
        return abs(self.energy - self.reference_energy)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "energy": self.energy,
            "rho": self.rho.rho.tolist(),
            "functional_value": self.functional_value,
            "iterations": self.iterations,
            "converged": self.converged,
            "reference_energy": self.reference_energy,
            "discrepancy": self.discrepancy
        }
