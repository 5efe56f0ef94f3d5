"""
Interface base para exportadores de tabelas de resultados (Strategy Pattern).
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List


class BaseExporter(ABC):
    """Interface base: uma tabela é uma lista de linhas (dicts com as mesmas chaves)."""

    @abstractmethod
    def export(self, rows: List[Dict[str, Any]]) -> bytes:
        """
        Exporta linhas para bytes.

        Args:
            rows: Lista de linhas (pode ser 1 ou várias)

        Returns:
            Conteúdo do arquivo em bytes
        """
        pass

    @abstractmethod
    def get_filename(self, base_name: str, timestamp: str) -> str:
        """
        Retorna nome do arquivo com extensão.

        Args:
            base_name: Nome base (ex: comando executado)
            timestamp: Timestamp formatado
        """
        pass

    @abstractmethod
    def get_mime_type(self) -> str:
        pass

    def columns(self, rows: List[Dict[str, Any]]) -> List[str]:
        """Colunas na ordem de primeira aparição."""
        seen: Dict[str, None] = {}
        for row in rows:
            for key in row:
                seen.setdefault(key, None)
        return list(seen)
