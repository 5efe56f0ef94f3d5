"""
Service responsável por grafos: conectividade, Laplaciano,
grafo associado a uma matriz, grafos embutidos e leitura/escrita.
Segue Single Responsibility Principle.
"""

import json
import logging
import re
from pathlib import Path
from typing import List, Tuple

import networkx as nx
import numpy as np

from models.graph import Graph
from utils.constants import GRAPH_ZERO_TOL
from utils.exceptions import InvalidInputError

logger = logging.getLogger(__name__)

# Dois 4-ciclos (1-2-3-4 em z=-1, 5-6-7-8 em z=+1) ligados pelos vértices 9-12 do equador
CUBOCTAHEDRON_EDGES: Tuple[Tuple[int, int], ...] = (
    (1, 2), (2, 3), (3, 4), (1, 4),
    (5, 6), (6, 7), (7, 8), (5, 8),
    (1, 9), (2, 9), (5, 9), (6, 9),
    (2, 10), (3, 10), (6, 10), (7, 10),
    (3, 11), (4, 11), (7, 11), (8, 11),
    (1, 12), (4, 12), (5, 12), (8, 12),
)

NAMED_PATTERN = re.compile(r"^(chain|complete)-(\d+)$")


class GraphService:
    """
    Service de grafos finitos.
    Operações puras sobre instâncias imutáveis de Graph.
    """

    def is_connected(self, g: Graph) -> bool:
        """
        Verifica se todo par de vértices é ligado por um caminho.

        Args:
            g: Grafo

        Returns:
            True se conexo
        """
        return nx.is_connected(g.to_networkx())

    def graph_laplacian(self, g: Graph) -> np.ndarray:
        """
        Laplaciano Δ com Δ_ii = -d(i) e Δ_ij = 1 para i~j.

        Args:
            g: Grafo

        Returns:
            Matriz real simétrica M×M (0-based)
        """
        nodelist = list(range(g.vertex_count))
        laplacian = nx.laplacian_matrix(g.to_networkx(), nodelist=nodelist).toarray()
        return -np.asarray(laplacian, dtype=float)

    def graph_of_matrix(self, a: np.ndarray, zero_tol: float = GRAPH_ZERO_TOL) -> Graph:
        """
        Grafo G(a): i~j sse |a_ij| > zero_tol.

        Args:
            a: Matriz Hermitiana
            zero_tol: Limiar para entradas nulas

        Returns:
            Graph com M = dimensão de a

        Raises:
            InvalidInputError: Matriz não quadrada ou não Hermitiana
        """
        a = np.asarray(a)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidInputError(f"Matriz deve ser quadrada, recebido shape {a.shape}")
        if np.max(np.abs(a - a.conj().T), initial=0.0) > zero_tol:
            raise InvalidInputError("Matriz não é Hermitiana dentro da tolerância")

        rows, cols = np.nonzero(np.abs(np.triu(a, k=1)) > zero_tol)
        edges = tuple((int(i) + 1, int(j) + 1) for i, j in zip(rows, cols))
        return Graph(vertex_count=a.shape[0], edges=edges)

    # Grafos embutidos

    def triangle(self) -> Graph:
        return Graph(vertex_count=3, edges=((1, 2), (2, 3), (1, 3)), name="triangle")

    def square(self) -> Graph:
        return Graph(vertex_count=4, edges=((1, 2), (2, 3), (3, 4), (1, 4)), name="square")

    def chain(self, m: int) -> Graph:
        """Cadeia linear 1-2-…-M."""
        return Graph(
            vertex_count=m,
            edges=tuple((i, i + 1) for i in range(1, m)),
            name=f"chain-{m}"
        )

    def complete(self, m: int) -> Graph:
        edges = tuple((i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1))
        return Graph(vertex_count=m, edges=edges, name=f"complete-{m}")

    def cuboctahedron(self) -> Graph:
        """Cuboctaedro: 12 vértices, 24 arestas, 4-regular."""
        return Graph(vertex_count=12, edges=CUBOCTAHEDRON_EDGES, name="cuboctahedron")

    def named_graph(self, name: str) -> Graph:
        """
        Resolve um grafo embutido pelo nome.

        Args:
            name: triangle, square, cuboctahedron, chain-M ou complete-M

        Returns:
            Graph

        Raises:
            InvalidInputError: Nome desconhecido
        """
        key = name.strip().lower()
        fixed = {
            "triangle": self.triangle,
            "square": self.square,
            "cuboctahedron": self.cuboctahedron,
        }
        if key in fixed:
            return fixed[key]()

        match = NAMED_PATTERN.match(key)
        if match:
            kind, size = match.group(1), int(match.group(2))
            if size < 1:
                raise InvalidInputError(f"Tamanho inválido em {name!r}")
            return self.chain(size) if kind == "chain" else self.complete(size)

        raise InvalidInputError(f"Grafo desconhecido: {name!r}")

    def is_named(self, source: str) -> bool:
        key = source.strip().lower()
        return key in ("triangle", "square", "cuboctahedron") or bool(NAMED_PATTERN.match(key))

    # Entrada/saída

    def load_graph(self, source: str) -> Graph:
        """
        Carrega grafo por nome embutido ou arquivo.

        Formatos aceitos:
        1. JSON {"vertices": M, "edges": [[i, j], ...]}
        2. Lista de arestas: primeira linha "M", depois uma linha "i j" por aresta

        Args:
            source: Nome embutido ou caminho

        Returns:
            Graph validado

        Raises:
            InvalidInputError: Arquivo ausente ou malformado
        """
        if self.is_named(source):
            return self.named_graph(source)

        path = Path(source)
        if not path.is_file():
            raise InvalidInputError(f"Arquivo de grafo não encontrado: {source}")

        text = path.read_text(encoding="utf-8")
        try:
            if path.suffix.lower() == ".json" or text.lstrip().startswith("{"):
                graph = Graph.from_dict(json.loads(text), name=path.stem)
            else:
                graph = self._parse_edge_list(text, name=path.stem)
        except (KeyError, TypeError, json.JSONDecodeError) as e:
            raise InvalidInputError(f"Grafo malformado em {source}: {e}") from e

        logger.debug("Grafo %s carregado: M=%d, %d arestas", source, graph.vertex_count, graph.edge_count)
        return graph

    def _parse_edge_list(self, text: str, name: str = "") -> Graph:
        lines = [line.strip() for line in text.splitlines()]
        lines = [line for line in lines if line and not line.startswith("#")]
        if not lines:
            raise InvalidInputError("Lista de arestas vazia")
        try:
            m = int(lines[0])
            edges = []
            for line in lines[1:]:
                i, j = line.split()
                edges.append((int(i), int(j)))
        except ValueError as e:
            raise InvalidInputError(f"Linha inválida na lista de arestas: {e}") from e
        return Graph(vertex_count=m, edges=tuple(edges), name=name)

    def save_graph(self, g: Graph, path: str) -> None:
        """Grava o grafo em JSON."""
        Path(path).write_text(json.dumps(g.to_dict(), indent=2), encoding="utf-8")

    def random_connected_graph(
        self,
        m: int,
        rng: np.random.Generator,
        edge_probability: float = 0.3
    ) -> Graph:
        """
        Grafo conexo aleatório: árvore geradora aleatória mais arestas extras.

        Args:
            m: Número de vértices
            rng: Gerador de números aleatórios
            edge_probability: Probabilidade de cada aresta extra

        Returns:
            Graph conexo
        """
        order = rng.permutation(m) + 1
        edges: List[Tuple[int, int]] = []
        for k in range(1, m):
            parent = order[rng.integers(0, k)]
            edges.append((int(order[k]), int(parent)))

        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                if rng.random() < edge_probability:
                    edges.append((i, j))

        return Graph(vertex_count=m, edges=tuple(edges), name=f"random-{m}")
