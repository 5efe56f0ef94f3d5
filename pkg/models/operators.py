"""
Modelos de operadores de uma e de muitas partículas.
Cada tipo valida suas invariantes na construção.
Segue Single Responsibility Principle.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from models.fock import FockBasis
from utils.constants import HERMITIAN_TOL
from utils.exceptions import InvalidInputError


def _square(matrix: np.ndarray, what: str) -> np.ndarray:
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InvalidInputError(f"{what} deve ser quadrada, recebido shape {matrix.shape}")
    return matrix


def _check_hermitian(matrix: np.ndarray, what: str, tol: float) -> None:
    scale = max(1.0, float(np.max(np.abs(matrix)))) if matrix.size else 1.0
    deviation = float(np.max(np.abs(matrix - matrix.conj().T))) if matrix.size else 0.0
    if deviation > tol * scale:
        raise InvalidInputError(f"{what} não é Hermitiana (desvio {deviation:.3e})")


@dataclass(eq=False)
class OneBodyHamiltonian:
    """
    Hamiltoniano de uma partícula h (M×M Hermitiana).

    Attributes:
        h: Matriz complexa
    """

    h: np.ndarray

    def __post_init__(self):
        self.h = _square(np.asarray(self.h, dtype=complex), "h")
        _check_hermitian(self.h, "h", HERMITIAN_TOL)

    @property
    def m(self) -> int:
        return self.h.shape[0]

    def with_potential(self, v: "Potential") -> "OneBodyHamiltonian":
        """h + diag(v)."""
        return OneBodyHamiltonian(self.h + np.diag(v.v))


@dataclass(eq=False)
class TwoBodyInteraction:
    """
    Interação densidade-densidade W = ½ Σ w_ij n_i n_j.

    Attributes:
        w: Matriz real simétrica; a diagonal é descartada
    """

    w: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.w)
        if np.iscomplexobj(w):
            if np.any(w.imag != 0):
                raise InvalidInputError("w deve ser real")
            w = w.real
        w = _square(w.astype(float), "w").copy()
        if not np.array_equal(w, w.T):
            raise InvalidInputError("w deve ser exatamente simétrica")
        np.fill_diagonal(w, 0.0)
        self.w = w

    @property
    def m(self) -> int:
        return self.w.shape[0]

    @classmethod
    def zero(cls, m: int) -> "TwoBodyInteraction":
        return cls(np.zeros((m, m)))


@dataclass(eq=False)
class Potential:
    """
    Potencial externo v (vetor real de comprimento M).

    Attributes:
        v: Valores por vértice
    """

    v: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.v)
        if np.iscomplexobj(v):
            raise InvalidInputError("Potencial deve ser real")
        self.v = v.astype(float).reshape(-1)
        if not np.all(np.isfinite(self.v)):
            raise InvalidInputError("Potencial contém valores não finitos")

    @property
    def m(self) -> int:
        return self.v.shape[0]

    def gauge_fixed(self) -> "Potential":
        """Representante com Σ v_i = 0."""
        return Potential(self.v - self.v.mean())

    @classmethod
    def zero(cls, m: int) -> "Potential":
        return cls(np.zeros(m))


@dataclass(eq=False)
class ReferenceHamiltonian:
    """
    Parte interna H_0 = h + W, sem potencial externo.

    Attributes:
        h: Hamiltoniano de uma partícula
        w: Interação (zero se None)
    """

    h: OneBodyHamiltonian
    w: Optional[TwoBodyInteraction] = None

    def __post_init__(self):
        if self.w is None:
            self.w = TwoBodyInteraction.zero(self.h.m)
        if self.w.m != self.h.m:
            raise InvalidInputError(f"Dimensões de h ({self.h.m}) e w ({self.w.m}) diferem")

    @property
    def m(self) -> int:
        return self.h.m


@dataclass(eq=False)
class ManyBodyOperator:
    """
    Operador L×L Hermitiano na base e_I.

    Attributes:
        basis: Base de referência
        matrix: Matriz complexa L×L
    """

    basis: FockBasis
    matrix: np.ndarray

    def __post_init__(self):
        self.matrix = _square(np.asarray(self.matrix, dtype=complex), "Operador")
        if self.matrix.shape[0] != self.basis.dim:
            raise InvalidInputError(
                f"Operador {self.matrix.shape} incompatível com a base de dimensão {self.basis.dim}"
            )
        _check_hermitian(self.matrix, "Operador de muitas partículas", HERMITIAN_TOL)

    def norm(self) -> float:
        """Norma espectral."""
        if self.matrix.size == 0:
            return 0.0
        return float(np.max(np.abs(np.linalg.eigvalsh(self.matrix))))

    def plus_diagonal(self, diagonal: np.ndarray) -> "ManyBodyOperator":
        """Novo operador com a diagonal somada."""
        return ManyBodyOperator(self.basis, self.matrix + np.diag(diagonal))

    def expectation(self, coefficients: np.ndarray) -> float:
        return float(np.vdot(coefficients, self.matrix @ coefficients).real)
