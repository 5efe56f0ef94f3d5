"""
Modelos de resultados espectrais: espectro completo, variedade fundamental,
densidades e estados de ensemble.
Segue Single Responsibility Principle.
"""

from dataclasses import dataclass, field
from typing import Dict, Any, List

import numpy as np

from models.fock import FockBasis, WaveFunction
from models.validation import validate_density
from utils.constants import DENSITY_TOL, NORMALIZATION_TOL
from utils.exceptions import InvalidInputError


@dataclass(eq=False)
class Spectrum:
    """
    Espectro completo em ordem crescente.

    Attributes:
        basis: Base de referência
        eigenvalues: Autovalores crescentes
        eigenvectors: Colunas ortonormais
        max_residual: Maior ‖Hx - λx‖ observado
    """

    basis: FockBasis
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    max_residual: float = 0.0

    def levels(self, tol: float) -> List[Dict[str, Any]]:
        """
        Agrupa autovalores degenerados.

        Args:
            tol: Tolerância relativa de degenerescência

        Returns:
            Lista de {"eigenvalue", "degeneracy"}
        """
        levels: List[Dict[str, Any]] = []
        for value in self.eigenvalues:
            if levels and value - levels[-1]["eigenvalue"] <= tol * max(1.0, abs(levels[-1]["eigenvalue"])):
                levels[-1]["degeneracy"] += 1
            else:
                levels.append({"eigenvalue": float(value), "degeneracy": 1})
        return levels

    def to_dict(self, tol: float) -> Dict[str, Any]:
        return {
            "m": self.basis.m,
            "n": self.basis.n,
            "eigenvalues": [float(x) for x in self.eigenvalues],
            "levels": self.levels(tol),
            "max_residual": self.max_residual
        }


@dataclass(eq=False)
class GroundManifold:
    """
    Energia fundamental e base ortonormal do espaço fundamental.

    Attributes:
        energy: Energia E_0
        degeneracy: Dimensão g do espaço fundamental
        states: g estados ortonormais (fase fixada)
        gap: Distância ao primeiro nível excluído (inf se não houver)
        warnings: Avisos (degenerescência ambígua)
    """

    energy: float
    degeneracy: int
    states: List[WaveFunction]
    gap: float
    warnings: List[str] = field(default_factory=list)

    @property
    def basis(self) -> FockBasis:
        return self.states[0].basis

    @property
    def is_degenerate(self) -> bool:
        return self.degeneracy > 1

    @property
    def ambiguous(self) -> bool:
        return bool(self.warnings)

    def state_matrix(self) -> np.ndarray:
        """Matriz L×g com os estados como colunas."""
        return np.column_stack([s.coefficients for s in self.states])

    def projector(self) -> np.ndarray:
        b = self.state_matrix()
        return b @ b.conj().T

    def to_dict(self) -> Dict[str, Any]:
        return {
            "energy": self.energy,
            "degeneracy": self.degeneracy,
            "gap": self.gap,
            "warnings": list(self.warnings)
        }


@dataclass(eq=False)
class Density:
    """
    Densidade no hipersimplexo: 0 <= ρ_i <= 1, Σ ρ_i = N.

    Attributes:
        rho: Vetor real de comprimento M
        kind: "pure" ou "ensemble"
    """

    rho: np.ndarray
    kind: str = "pure"

    def __post_init__(self):
        self.rho = np.asarray(self.rho, dtype=float).reshape(-1)
        n = int(round(float(self.rho.sum())))
        ok, message = validate_density(self.rho, n, DENSITY_TOL)
        if not ok:
            raise InvalidInputError(message)

    @property
    def m(self) -> int:
        return self.rho.shape[0]

    @property
    def n(self) -> int:
        return int(round(float(self.rho.sum())))

    def distance(self, other: "Density | np.ndarray") -> float:
        other_rho = other.rho if isinstance(other, Density) else np.asarray(other, dtype=float)
        return float(np.linalg.norm(self.rho - other_rho))

    def to_rows(self) -> List[Dict[str, Any]]:
        """Uma linha por vértice (1-based), para CSV."""
        return [{"vertex": i + 1, "rho": float(x)} for i, x in enumerate(self.rho)]


@dataclass(eq=False)
class EnsembleState:
    """
    Mistura convexa Γ = Σ λ_n |Ψ_n⟩⟨Ψ_n|.

    Attributes:
        weights: Coeficientes convexos λ_n
        states: Estados puros
    """

    weights: np.ndarray
    states: List[WaveFunction]

    def __post_init__(self):
        self.weights = np.asarray(self.weights, dtype=float).reshape(-1)
        if self.weights.shape[0] != len(self.states) or not self.states:
            raise InvalidInputError("Número de pesos difere do número de estados")
        if np.any(self.weights < -NORMALIZATION_TOL):
            raise InvalidInputError("Pesos do ensemble devem ser não negativos")
        if abs(float(self.weights.sum()) - 1.0) > NORMALIZATION_TOL:
            raise InvalidInputError(f"Pesos somam {self.weights.sum():.12g}, esperado 1")
