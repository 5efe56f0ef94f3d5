"""
Espaço de Fock de N férmions sem spin em M vértices.

Multi-índices são bitmasks (bit i-1 ocupado <=> vértice i em I).
A base é a lista lexicográfica de todos os C(M, N) multi-índices.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, Any, Iterable, List, Optional, Tuple

import numpy as np

from utils.constants import MAX_VERTICES, NORMALIZATION_TOL, ORTHONORMAL_TOL
from utils.exceptions import InvalidInputError

MultiIndex = int


def mask_from_labels(labels: Iterable[int]) -> MultiIndex:
    """Bitmask a partir de rótulos 1-based."""
    mask = 0
    for i in labels:
        mask |= 1 << (i - 1)
    return mask


def labels_of(mask: MultiIndex) -> Tuple[int, ...]:
    """Rótulos 1-based ocupados, em ordem crescente."""
    labels = []
    position = 1
    while mask:
        if mask & 1:
            labels.append(position)
        mask >>= 1
        position += 1
    return tuple(labels)


def annihilate(i: int, idx: MultiIndex) -> Optional[Tuple[int, MultiIndex]]:
    """
    Aplica o operador de aniquilação no vértice i.

    Args:
        i: Vértice (1-based)
        idx: Multi-índice de entrada

    Returns:
        (sinal, novo multi-índice) ou None se i não está ocupado
    """
    bit = 1 << (i - 1)
    if not idx & bit:
        return None
    sign = -1 if (idx & (bit - 1)).bit_count() % 2 else 1
    return sign, idx ^ bit


def create(i: int, idx: MultiIndex) -> Optional[Tuple[int, MultiIndex]]:
    """
    Aplica o operador de criação no vértice i.

    Args:
        i: Vértice (1-based)
        idx: Multi-índice de entrada

    Returns:
        (sinal, novo multi-índice) ou None pelo princípio de exclusão
    """
    bit = 1 << (i - 1)
    if idx & bit:
        return None
    sign = -1 if (idx & (bit - 1)).bit_count() % 2 else 1
    return sign, idx | bit


@dataclass(frozen=True, eq=False)
class FockBasis:
    """
    Base ordenada do espaço de N partículas.

    Attributes:
        m: Número de vértices M
        n: Número de partículas N
        index_list: Multi-índices em ordem lexicográfica
        rank: Posição de cada multi-índice na base
    """

    m: int
    n: int
    index_list: Tuple[MultiIndex, ...]
    rank: Dict[MultiIndex, int] = field(repr=False)

    @classmethod
    def build(cls, m: int, n: int) -> "FockBasis":
        """
        Enumera todos os multi-índices de N elementos sobre M vértices.

        Args:
            m: Número de vértices
            n: Número de partículas (1 <= n < m)

        Returns:
            FockBasis imutável

        Raises:
            InvalidInputError: Dimensões inválidas
        """
        if m > MAX_VERTICES:
            raise InvalidInputError(f"M = {m} excede o limite de {MAX_VERTICES} vértices")
        if n <= 0 or n >= m:
            raise InvalidInputError(f"Dimensão inválida: requer 1 <= N < M, recebido M={m}, N={n}")

        index_list = tuple(
            mask_from_labels(c) for c in combinations(range(1, m + 1), n)
        )
        rank = {idx: k for k, idx in enumerate(index_list)}
        return cls(m=m, n=n, index_list=index_list, rank=rank)

    @property
    def dim(self) -> int:
        return len(self.index_list)

    def labels(self, k: int) -> Tuple[int, ...]:
        """Rótulos 1-based do k-ésimo estado da base."""
        return labels_of(self.index_list[k])

    @cached_property
    def occupation_matrix(self) -> np.ndarray:
        """
        Matriz L×M de ocupações: linha k é a densidade extrema E_I.

        Returns:
            Array 0/1 com soma de linhas N
        """
        occ = np.zeros((self.dim, self.m))
        for k, idx in enumerate(self.index_list):
            for i in labels_of(idx):
                occ[k, i - 1] = 1.0
        return occ

    @cached_property
    def index_array(self) -> np.ndarray:
        """Rótulos 0-based de cada estado (L×N), para determinantes em lote."""
        return np.array([[i - 1 for i in labels_of(idx)] for idx in self.index_list], dtype=int)


@dataclass(eq=False)
class WaveFunction:
    """
    Estado de N partículas expandido na base e_I.

    Attributes:
        basis: Base de referência
        coefficients: Vetor complexo de comprimento L
    """

    basis: FockBasis
    coefficients: np.ndarray

    def __post_init__(self):
        self.coefficients = np.asarray(self.coefficients, dtype=complex).reshape(-1)
        if self.coefficients.shape[0] != self.basis.dim:
            raise InvalidInputError(
                f"Esperados {self.basis.dim} coeficientes, recebidos {self.coefficients.shape[0]}"
            )

    def norm(self) -> float:
        return float(np.linalg.norm(self.coefficients))

    def is_normalized(self, tol: float = NORMALIZATION_TOL) -> bool:
        return abs(float(np.vdot(self.coefficients, self.coefficients).real) - 1.0) <= tol

    def normalized(self) -> "WaveFunction":
        """
        Retorna cópia normalizada.

        Raises:
            InvalidInputError: Estado nulo
        """
        norm = self.norm()
        if norm == 0.0:
            raise InvalidInputError("Estado nulo não pode ser normalizado")
        return WaveFunction(self.basis, self.coefficients / norm)

    def to_dict(self) -> Dict[str, Any]:
        """
        Serializa como pares [re, im] na ordem da base.

        Returns:
            Dict com cabeçalho (M, N) e coeficientes
        """
        return {
            "m": self.basis.m,
            "n": self.basis.n,
            "coefficients": [[float(c.real), float(c.imag)] for c in self.coefficients]
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], basis: Optional[FockBasis] = None) -> "WaveFunction":
        """
        Reconstrói a partir de to_dict().

        Args:
            data: Dict serializado
            basis: Base existente (reconstruída se None)

        Returns:
            WaveFunction
        """
        basis = basis or FockBasis.build(data["m"], data["n"])
        if (basis.m, basis.n) != (data["m"], data["n"]):
            raise InvalidInputError("Cabeçalho (M, N) não confere com a base")
        coefficients = np.array([complex(re, im) for re, im in data["coefficients"]])
        return cls(basis, coefficients)


def basis_state(basis: FockBasis, labels: Iterable[int]) -> WaveFunction:
    """Estado e_I para os rótulos 1-based dados."""
    coefficients = np.zeros(basis.dim, dtype=complex)
    coefficients[basis.rank[mask_from_labels(labels)]] = 1.0
    return WaveFunction(basis, coefficients)


def slater_determinant(orbitals: np.ndarray | List[np.ndarray], basis: FockBasis) -> WaveFunction:
    """
    Produto exterior φ_0 ∧ … ∧ φ_{N-1} de orbitais ortonormais.

    Ψ_I é o determinante da submatriz N×N dos valores orbitais nas linhas I.

    Args:
        orbitals: N vetores de comprimento M (um por linha)
        basis: Base de N partículas

    Returns:
        WaveFunction normalizada

    Raises:
        InvalidInputError: Orbitais não ortonormais ou dimensões inconsistentes
    """
    phi = np.asarray(orbitals, dtype=complex)
    if phi.ndim != 2 or phi.shape != (basis.n, basis.m):
        raise InvalidInputError(
            f"Esperados {basis.n} orbitais de comprimento {basis.m}, recebido shape {phi.shape}"
        )

    gram = phi.conj() @ phi.T
    if not np.allclose(gram, np.eye(basis.n), atol=ORTHONORMAL_TOL, rtol=0.0):
        raise InvalidInputError("Orbitais não são ortonormais")

    # Colunas = orbitais, linhas = vértices
    columns = phi.T
    submatrices = columns[basis.index_array]
    coefficients = np.linalg.det(submatrices)
    return WaveFunction(basis, coefficients).normalized()
