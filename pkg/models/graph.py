"""
Modelo de dados para grafos finitos.
Utiliza Pydantic para validação e serialização.
Segue Single Responsibility Principle.

Rótulos de vértices são 1-based em toda entrada/saída e 0-based
nas matrizes internas (adjacency_matrix, Laplaciano).
"""

from typing import Dict, Any, List, Tuple

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Graph(BaseModel):
    """
    Grafo com relação de adjacência irreflexiva e simétrica.

    Attributes:
        vertex_count: Número de vértices M
        edges: Pares {i, j} não ordenados, i != j, rótulos em 1..M
        name: Nome opcional (grafos embutidos)
    """

    model_config = ConfigDict(frozen=True)

    vertex_count: int = Field(..., ge=1)
    edges: Tuple[Tuple[int, int], ...] = Field(default_factory=tuple)
    name: str = Field(default="")

    @field_validator("edges")
    @classmethod
    def normalize_edges(cls, v: Tuple[Tuple[int, int], ...]) -> Tuple[Tuple[int, int], ...]:
        """Ordena cada par, remove duplicatas e rejeita laços."""
        normalized = set()
        for i, j in v:
            if i == j:
                raise ValueError(f"Laço no vértice {i} não é permitido")
            normalized.add((min(i, j), max(i, j)))
        return tuple(sorted(normalized))

    @model_validator(mode="after")
    def check_labels(self) -> "Graph":
        """Todos os rótulos devem estar em 1..M."""
        for i, j in self.edges:
            if i < 1 or j > self.vertex_count:
                raise ValueError(
                    f"Aresta ({i}, {j}) fora do intervalo de vértices 1..{self.vertex_count}"
                )
        return self

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, i: int) -> List[int]:
        """Vizinhos do vértice i (1-based)."""
        result = [b for a, b in self.edges if a == i]
        result += [a for a, b in self.edges if b == i]
        return sorted(result)

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def adjacency_matrix(self) -> np.ndarray:
        """
        Matriz de adjacência 0/1 (índices 0-based).

        Returns:
            Array M×M simétrico
        """
        a = np.zeros((self.vertex_count, self.vertex_count))
        for i, j in self.edges:
            a[i - 1, j - 1] = 1.0
            a[j - 1, i - 1] = 1.0
        return a

    def to_networkx(self) -> nx.Graph:
        """Converte para networkx com nós 0-based."""
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from((i - 1, j - 1) for i, j in self.edges)
        return g

    def to_dict(self) -> Dict[str, Any]:
        """
        Converte para o formato JSON de grafos.

        Returns:
            Dict com "vertices" e "edges"
        """
        return {
            "vertices": self.vertex_count,
            "edges": [[i, j] for i, j in self.edges]
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], name: str = "") -> "Graph":
        """
        Cria grafo a partir do formato JSON.

        Args:
            data: Dict com "vertices" (M) e "edges" (lista de pares)
            name: Nome opcional

        Returns:
            Graph validado
        """
        return cls(
            vertex_count=data["vertices"],
            edges=tuple(tuple(edge) for edge in data.get("edges", [])),
            name=name
        )
