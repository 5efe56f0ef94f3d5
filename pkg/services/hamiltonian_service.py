"""
Service responsável pela montagem de Hamiltonianos na base de Fock.
H = Σ h_ij a†_i a_j + Σ v_i n_i + ½ Σ w_ij n_i n_j
Segue Single Responsibility Principle.
"""

import logging
from typing import Dict, List, Optional

import numpy as np

from models.fock import FockBasis, annihilate, create, labels_of
from models.graph import Graph
from models.operators import (
    ManyBodyOperator,
    OneBodyHamiltonian,
    Potential,
    ReferenceHamiltonian,
    TwoBodyInteraction,
)
from services.graph_service import GraphService
from utils.exceptions import InvalidInputError

logger = logging.getLogger(__name__)


class HamiltonianService:
    """
    Service de montagem de operadores.
    Matrizes densas (escala de bancada, L até alguns milhares).
    """

    def __init__(self, graph_service: Optional[GraphService] = None):
        self.graph_service = graph_service or GraphService()

    def assemble(
        self,
        h: OneBodyHamiltonian,
        w: Optional[TwoBodyInteraction],
        v: Optional[Potential],
        basis: FockBasis
    ) -> ManyBodyOperator:
        """
        Monta o Hamiltoniano de muitas partículas.

        Args:
            h: Hamiltoniano de uma partícula
            w: Interação densidade-densidade (zero se None)
            v: Potencial externo (zero se None)
            basis: Base de Fock

        Returns:
            ManyBodyOperator L×L

        Raises:
            InvalidInputError: Dimensões inconsistentes
        """
        m = basis.m
        w = w if w is not None else TwoBodyInteraction.zero(m)
        v = v if v is not None else Potential.zero(m)
        for name, size in (("h", h.m), ("w", w.m), ("v", v.m)):
            if size != m:
                raise InvalidInputError(f"Dimensão de {name} ({size}) difere de M={m}")

        matrix = np.zeros((basis.dim, basis.dim), dtype=complex)

        # Termos de salto a†_i a_j, i != j
        hopping = h.h.copy()
        np.fill_diagonal(hopping, 0.0)
        targets: Dict[int, List[int]] = {
            j: [i for i in range(m) if hopping[i, j] != 0.0] for j in range(m)
        }
        for col, idx in enumerate(basis.index_list):
            for j in labels_of(idx):
                sign_a, reduced = annihilate(j, idx)
                for i in targets[j - 1]:
                    result = create(i + 1, reduced)
                    if result is None:
                        continue
                    sign_c, target = result
                    matrix[basis.rank[target], col] += sign_a * sign_c * hopping[i, j - 1]

        matrix[np.diag_indices(basis.dim)] += self.diagonal_terms(h, w, v, basis)
        logger.debug("Hamiltoniano montado: M=%d N=%d L=%d", m, basis.n, basis.dim)
        return ManyBodyOperator(basis, matrix)

    def diagonal_terms(
        self,
        h: OneBodyHamiltonian,
        w: TwoBodyInteraction,
        v: Potential,
        basis: FockBasis
    ) -> np.ndarray:
        """Σ_{i∈I}(h_ii + v_i) + Σ_{i<j∈I} w_ij para cada I."""
        occ = basis.occupation_matrix
        onsite = occ @ (np.diag(h.h) + v.v)
        pair = 0.5 * np.einsum("ki,ij,kj->k", occ, w.w, occ)
        return onsite + pair

    def assemble_reference(
        self,
        reference: ReferenceHamiltonian,
        basis: FockBasis,
        v: Optional[Potential] = None
    ) -> ManyBodyOperator:
        """H_0 + V para uma parte interna fixa."""
        return self.assemble(reference.h, reference.w, v, basis)

    def potential_diagonal(self, u: np.ndarray, basis: FockBasis) -> np.ndarray:
        """Diagonal de U = Σ u_i n_i na base: Σ_{i∈I} u_i."""
        u = np.asarray(u, dtype=float).reshape(-1)
        if u.shape[0] != basis.m:
            raise InvalidInputError(f"Potencial com {u.shape[0]} entradas, esperado {basis.m}")
        return basis.occupation_matrix @ u

    def number_operator_matrix(self, i: int, basis: FockBasis) -> ManyBodyOperator:
        """
        Operador número n_i (diagonal 0/1).

        Args:
            i: Vértice (1-based)
            basis: Base de Fock

        Returns:
            ManyBodyOperator diagonal

        Raises:
            InvalidInputError: Vértice fora do intervalo
        """
        if not 1 <= i <= basis.m:
            raise InvalidInputError(f"Vértice {i} fora do intervalo 1..{basis.m}")
        return ManyBodyOperator(basis, np.diag(basis.occupation_matrix[:, i - 1]))

    # Construtores de uso comum

    def laplacian_hamiltonian(self, g: Graph) -> OneBodyHamiltonian:
        """h = -Δ do grafo."""
        return OneBodyHamiltonian(-self.graph_service.graph_laplacian(g))

    def chain_hamiltonian(
        self,
        m: int,
        hoppings: Optional[np.ndarray] = None,
        diagonal: Optional[np.ndarray] = None
    ) -> OneBodyHamiltonian:
        """
        Cadeia linear com saltos h_{i,i+1} = -t_i.

        Args:
            m: Número de vértices
            hoppings: M-1 amplitudes positivas t_i (padrão 1)
            diagonal: Termos on-site (padrão: graus, como em -Δ)
        """
        hoppings = np.ones(m - 1) if hoppings is None else np.asarray(hoppings, dtype=float)
        if hoppings.shape[0] != m - 1:
            raise InvalidInputError(f"Esperados {m - 1} saltos, recebidos {hoppings.shape[0]}")
        h = np.zeros((m, m))
        for k, t in enumerate(hoppings):
            h[k, k + 1] = h[k + 1, k] = -t
        if diagonal is None:
            diagonal = np.count_nonzero(h, axis=1).astype(float)
        h[np.diag_indices(m)] = diagonal
        return OneBodyHamiltonian(h)

    def random_interaction(self, m: int, rng: np.random.Generator, scale: float = 1.0) -> TwoBodyInteraction:
        """Interação densidade-densidade simétrica aleatória."""
        upper = np.triu(rng.uniform(-scale, scale, size=(m, m)), k=1)
        return TwoBodyInteraction(upper + upper.T)

    def matrix_rows(self, op: ManyBodyOperator) -> List[Dict[str, float]]:
        """
        Linhas (row, col, re, im) em ordem row-major da base, para dump CSV.

        Returns:
            Lista de dicts com índices 1-based
        """
        rows = []
        for r in range(op.basis.dim):
            for c in range(op.basis.dim):
                value = op.matrix[r, c]
                rows.append({"row": r + 1, "col": c + 1, "re": float(value.real), "im": float(value.imag)})
        return rows
